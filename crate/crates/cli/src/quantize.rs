use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use gaugeforge::perm_group::PermutationGroup;
use gaugeforge::quantizer::{
    amplitude_graph_dp, graph_pattern, interference_pattern_with, stabilizer_orbits, GraphModel, LocalRule1D, Pattern,
    Source,
};

use crate::gauge::parse_rep;
use crate::{load_graph, write_file};

#[derive(Debug, clap::Args)]
pub struct LineArgs {
    /// Order M of the phase group C_M.
    #[arg(long, default_value_t = 4)]
    modulus: usize,
    /// Number of time steps T.
    #[arg(long)]
    steps: u64,
    /// Source `position:phase`; the phase is an exponent of w or `pi`.
    #[arg(long = "source", required = true, allow_hyphen_values = true)]
    sources: Vec<String>,
    /// Step exponents `stay,left,right`.
    #[arg(long, default_value = "0,1,1")]
    rule: String,
    /// Evaluate at w = exp(2πi r/M).
    #[arg(long, default_value_t = 1)]
    root: usize,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Also write an SVG chart.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct GraphArgs {
    /// Vertex-transitive space, e.g. buckyball.
    #[arg(long)]
    space: String,
    /// Quantizing group Γ, e.g. C6 or C2xC3.
    #[arg(long)]
    gamma: String,
    /// Γ element index for staying put.
    #[arg(long, default_value_t = 0)]
    stay: usize,
    /// One Γ element index per stabilizer orbit of the neighbours of vertex 0.
    #[arg(long, value_delimiter = ',', conflicts_with = "rule")]
    orbit_values: Option<Vec<usize>>,
    /// One Γ element index per neighbour of vertex 0, ascending.
    #[arg(long, value_delimiter = ',')]
    rule: Option<Vec<usize>>,
    #[arg(long)]
    steps: u64,
    /// Source `vertex:element`; repeatable.
    #[arg(long = "source", default_value = "0:0")]
    sources: Vec<String>,
    /// One-dimensional representation `char:M:e1,e2,...`.
    #[arg(long)]
    rep: String,
    #[arg(long, default_value_t = 1)]
    root: usize,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

fn emit(
    pattern: &Pattern,
    title: &str,
    csv: Option<&PathBuf>,
    svg: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<()> {
    match csv {
        Some(path) => {
            write_file(path, &pattern.to_csv())?;
            let zeros: Vec<String> = pattern
                .rows
                .iter()
                .filter(|r| r.probability == 0.0)
                .map(|r| r.position.to_string())
                .collect();
            let best = pattern
                .rows
                .iter()
                .max_by(|a, b| a.probability.total_cmp(&b.probability))
                .expect("patterns are nonempty");
            writeln!(out, "rows {}", pattern.rows.len())?;
            writeln!(out, "exact zeros at [{}]", zeros.join(", "))?;
            writeln!(out, "maximum {:.6} at {}", best.probability, best.position)?;
        }
        None => out.write_all(pattern.to_csv().as_bytes())?,
    }
    if let Some(path) = svg {
        write_file(path, &pattern.to_svg(title))?;
    }
    Ok(())
}

pub fn run_line(args: LineArgs, out: &mut dyn Write) -> Result<bool> {
    let m = args.modulus;
    let sources = args
        .sources
        .iter()
        .map(|s| Source::parse(s, m))
        .collect::<Result<Vec<_>, _>>()?;
    let rule = match args
        .rule
        .split(',')
        .map(|v| v.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .ok()
        .as_deref()
    {
        Some(&[stay, left, right]) => LocalRule1D {
            modulus: m,
            stay,
            left,
            right,
        },
        _ => bail!("--rule expects three exponents `stay,left,right`"),
    };
    let pattern = interference_pattern_with(&sources, args.steps, &rule, args.root)?;
    let title = format!("M = {m}, T = {}, sources {}", args.steps, args.sources.join(" "));
    emit(&pattern, &title, args.csv.as_ref(), args.svg.as_ref(), out)?;
    Ok(true)
}

fn parse_graph_source(text: &str) -> Result<(usize, usize)> {
    let (v, h) = text
        .split_once(':')
        .with_context(|| format!("source `{text}`: expected `vertex:element`"))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .with_context(|| format!("source `{text}`: `{s}` is not an index"))
    };
    Ok((parse(v)?, parse(h)?))
}

pub fn run_graph(args: GraphArgs, out: &mut dyn Write) -> Result<bool> {
    let graph = Arc::new(load_graph(&args.space, None)?);
    let gamma = Arc::new(PermutationGroup::from_spec(&args.gamma)?);
    let model = match (&args.orbit_values, &args.rule) {
        (Some(values), None) => GraphModel::from_orbit_values(graph, Arc::clone(&gamma), args.stay, values)?,
        (None, Some(rule)) => GraphModel::new(graph, Arc::clone(&gamma), args.stay, rule.clone())?,
        _ => bail!("give --orbit-values or --rule"),
    };
    let sources = args
        .sources
        .iter()
        .map(|s| parse_graph_source(s))
        .collect::<Result<Vec<_>>>()?;
    let rep = parse_rep(&args.rep, &gamma)?;

    if args.csv.is_some() {
        let orbits: Vec<String> = stabilizer_orbits(&model, 0)?
            .iter()
            .map(|o| format!("{{{}}}", o.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        writeln!(out, "|Aut(X)| = {}", model.automorphisms().order())?;
        writeln!(out, "orbits at 0: {}", orbits.join(" "))?;
    }
    let amps = amplitude_graph_dp(&model, &sources, args.steps)?;
    let pattern = graph_pattern(&amps, &rep, args.root)?;
    let title = format!("{} with {}, T = {}", args.space, args.gamma, args.steps);
    emit(&pattern, &title, args.csv.as_ref(), args.svg.as_ref(), out)?;
    Ok(true)
}
