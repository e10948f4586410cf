use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use gaugeforge::exact_algebra::Representation;
use gaugeforge::gauge::{Connection, ConnectionText, GaugeTransformation, Triviality};
use gaugeforge::graph_space::fundamental_cycles;
use gaugeforge::perm_group::PermutationGroup;

use crate::extension::verdict;
use crate::{load_graph, read_file, resolve_seed, write_file};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Connection file (`graph`, `group` headers, then `u v h` lines).
    #[arg(long, conflicts_with_all = ["space", "group"])]
    connection: Option<PathBuf>,
    /// Space for a generated connection.
    #[arg(long, requires = "group")]
    space: Option<String>,
    /// Structure group for a generated connection, e.g. C4 or S3.
    #[arg(long, requires = "space")]
    group: Option<String>,
    /// Generate a pure-gauge connection instead of independent random values.
    #[arg(long, requires = "space")]
    trivial: bool,
    /// Cycle to report, as comma-separated vertices; repeatable. Defaults to
    /// the fundamental cycles.
    #[arg(long = "cycle", value_name = "V0,V1,...")]
    cycles: Vec<String>,
    /// Representation for the Wilson action: `perm` or `char:M:e1,e2,...`
    /// (generator j ↦ w^{e_j}).
    #[arg(long, default_value = "perm")]
    rep: String,
    /// Apply this many random gauge transformations and check invariance.
    #[arg(long, default_value_t = 0)]
    check: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the connection to this file.
    #[arg(long)]
    write: Option<PathBuf>,
}

pub(crate) fn parse_rep(spec: &str, group: &Arc<PermutationGroup>) -> Result<Representation> {
    if spec == "perm" {
        return Ok(Representation::permutation(group, 1)?);
    }
    let parse = || -> Option<(usize, Vec<i64>)> {
        let rest = spec.strip_prefix("char:")?;
        let (m, exps) = rest.split_once(':')?;
        let exps = exps
            .split(',')
            .map(|e| e.trim().parse().ok())
            .collect::<Option<Vec<_>>>()?;
        Some((m.trim().parse().ok()?, exps))
    };
    let (m, exps) =
        parse().with_context(|| format!("representation `{spec}`: expected `perm` or `char:M:e1,e2,...`"))?;
    if exps.len() != group.generators().len() {
        bail!(
            "representation `{spec}`: {} exponent(s) given for {} generator(s)",
            exps.len(),
            group.generators().len()
        );
    }
    Ok(Representation::character(group, m, &exps)?)
}

fn parse_cycle(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|v| {
            v.trim()
                .parse()
                .with_context(|| format!("cycle `{text}`: `{v}` is not a vertex"))
        })
        .collect()
}

fn show_cycle(cycle: &[usize]) -> String {
    cycle.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

pub fn run(args: Args, out: &mut dyn Write) -> Result<bool> {
    let seed = resolve_seed(args.seed)?;
    let mut rng = gaugeforge::seeded_rng(seed);
    let (connection, graph_name, group_name) = match (&args.connection, &args.space, &args.group) {
        (Some(path), _, _) => {
            let text: ConnectionText = read_file(path)?
                .parse()
                .with_context(|| format!("parsing {}", path.display()))?;
            let graph = Arc::new(load_graph(&text.graph, path.parent())?);
            let group = Arc::new(PermutationGroup::from_spec(&text.group)?);
            let c = text.build(graph, group)?;
            (c, text.graph, text.group)
        }
        (None, Some(space), Some(group)) => {
            let graph = Arc::new(load_graph(space, None)?);
            let h = Arc::new(PermutationGroup::from_spec(group)?);
            let c = if args.trivial {
                let u = GaugeTransformation::random(graph.vertex_count(), &h, &mut rng);
                Connection::make_trivial(graph, h, &u.values)?
            } else {
                Connection::random(graph, h, &mut rng)
            };
            writeln!(out, "seed {seed}")?;
            (c, space.clone(), group.clone())
        }
        _ => bail!("give --connection FILE, or --space and --group"),
    };
    let graph = Arc::clone(connection.graph());
    let group = Arc::clone(connection.group());
    writeln!(
        out,
        "graph {graph_name}: {} vertices, {} edges, cycle rank {}",
        graph.vertex_count(),
        graph.edge_count(),
        graph.cycle_rank()
    )?;
    writeln!(out, "group {group_name}: order {}", group.order())?;

    let cycles = if args.cycles.is_empty() {
        fundamental_cycles(&graph)?
    } else {
        args.cycles.iter().map(|c| parse_cycle(c)).collect::<Result<_>>()?
    };
    for cycle in &cycles {
        let h = connection.holonomy(cycle)?;
        let class: Vec<String> = connection
            .curvature_class(cycle)?
            .iter()
            .map(usize::to_string)
            .collect();
        writeln!(
            out,
            "cycle {}: holonomy {h} [{}], class {{{}}}",
            show_cycle(cycle),
            group.element(h),
            class.join(", ")
        )?;
    }

    match connection.is_trivial()? {
        Triviality::Trivial { potential } => {
            let p: Vec<String> = potential.iter().map(usize::to_string).collect();
            writeln!(out, "trivial: yes, potential {}", p.join(" "))?;
        }
        Triviality::NonTrivial { cycle, holonomy } => {
            writeln!(out, "trivial: no, cycle {} has holonomy {holonomy}", show_cycle(&cycle))?;
        }
    }

    let rep = parse_rep(&args.rep, &group)?;
    let wilson = if graph.faces().is_empty() {
        writeln!(out, "wilson action: graph has no faces")?;
        None
    } else {
        let s = connection.wilson_action(&rep)?;
        writeln!(out, "wilson action ({}): {s}", args.rep)?;
        Some(s)
    };

    let mut ok = true;
    if args.check > 0 {
        if args.connection.is_some() {
            writeln!(out, "seed {seed}")?;
        }
        let mut failures = 0usize;
        for _ in 0..args.check {
            let u = GaugeTransformation::random(graph.vertex_count(), &group, &mut rng);
            let moved = connection.gauge_transform(&u)?;
            for cycle in &cycles {
                let base = u.values[cycle[0]];
                let expected = group.mul(group.mul(group.inv(base), connection.holonomy(cycle)?), base);
                if moved.holonomy(cycle)? != expected {
                    failures += 1;
                }
            }
            if let Some(w) = &wilson {
                if !moved.wilson_action(&rep)?.value_eq(w) {
                    failures += 1;
                }
            }
        }
        ok = failures == 0;
        writeln!(
            out,
            "gauge check over {} transformations: {failures} failures  {}",
            args.check,
            verdict(ok)
        )?;
    }

    if let Some(path) = &args.write {
        write_file(path, &connection.to_text(&graph_name, &group_name))?;
    }
    Ok(ok)
}
