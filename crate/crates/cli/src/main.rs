mod bernoulli;
mod extension;
mod gauge;
mod quantize;
mod spaces;

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

/// Exact gauge structures, path-sum quantization and random-walk checks on
/// finite graphs.
#[derive(Debug, Parser)]
#[command(name = "gaugeforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List catalog spaces; with --verify, compare |Aut(X)| to tabulated orders.
    Spaces(spaces::Args),
    /// Check the axioms of a split extension W on seeded samples.
    Extension(extension::Args),
    /// Holonomy, curvature, triviality and Wilson action of a connection.
    Gauge(gauge::Args),
    /// Interference pattern on the integer line.
    Quantize1d(quantize::LineArgs),
    /// Group-algebra path sums on a vertex-transitive graph.
    QuantizeGraph(quantize::GraphArgs),
    /// Exact and approximate most-probable walk positions.
    Bernoulli(bernoulli::Args),
}

/// `GAUGEFORGE_SEED` takes precedence over the flag.
pub(crate) fn resolve_seed(flag: u64) -> Result<u64> {
    match std::env::var("GAUGEFORGE_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("GAUGEFORGE_SEED={s:?} is not an unsigned integer")),
        Err(_) => Ok(flag),
    }
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Catalog name such as `polygon(5)`, or a path to a graph file.
pub(crate) fn load_graph(spec: &str, base: Option<&Path>) -> Result<gaugeforge::graph_space::Graph> {
    use gaugeforge::graph_space::{GraphError, Space};
    match spec.parse::<Space>() {
        Ok(space) => Ok(space.graph()),
        Err(GraphError::UnknownSpace(_)) => {
            let path = match base {
                Some(dir) => dir.join(spec),
                None => PathBuf::from(spec),
            };
            if !path.exists() {
                anyhow::bail!("`{spec}` is neither a catalog space nor a graph file");
            }
            read_file(&path)?
                .parse()
                .with_context(|| format!("parsing graph file {}", path.display()))
        }
        Err(e) => Err(e.into()),
    }
}

/// Returns whether every check the command ran succeeded.
fn run(cli: Cli, out: &mut dyn Write) -> Result<bool> {
    match cli.command {
        Command::Spaces(a) => spaces::run(a, out),
        Command::Extension(a) => extension::run(a, out),
        Command::Gauge(a) => gauge::run(a, out),
        Command::Quantize1d(a) => quantize::run_line(a, out),
        Command::QuantizeGraph(a) => quantize::run_graph(a, out),
        Command::Bernoulli(a) => bernoulli::run(a, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
