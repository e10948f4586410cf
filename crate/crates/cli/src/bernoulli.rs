use std::io::Write;
use std::path::PathBuf;

use anyhow::Result;
use gaugeforge::bernoulli::{extremal_csv, extremal_points, LatticePoint};

use crate::write_file;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Final time T.
    #[arg(long = "T", value_name = "T")]
    big_t: u64,
    /// Final position X.
    #[arg(long = "X", value_name = "X", allow_hyphen_values = true)]
    big_x: i64,
    /// Velocity entering the approximation; |v| < 1.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    v: f64,
    #[arg(long)]
    csv: Option<PathBuf>,
}

pub fn run(args: Args, out: &mut dyn Write) -> Result<bool> {
    let end = LatticePoint::new(args.big_x, args.big_t);
    let rows = extremal_points(end)?;
    let csv = extremal_csv(&rows, end, args.v)?;
    match &args.csv {
        Some(path) => {
            write_file(path, &csv)?;
            let ties = rows.iter().filter(|r| r.maximizers.len() > 1).count();
            writeln!(out, "{} rows, {ties} with tied maximizers", rows.len())?;
        }
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(true)
}
