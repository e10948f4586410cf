use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Result};
use gaugeforge::extension::{parse_table, WGroup};
use gaugeforge::graph_space::automorphism_group;
use gaugeforge::perm_group::PermutationGroup;

use crate::{load_graph, read_file, resolve_seed};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Space X; G is its automorphism group.
    #[arg(long, default_value = "triangle")]
    space: String,
    /// Internal group Γ, e.g. C3, S3, C2xC3.
    #[arg(long, default_value = "C2")]
    gamma: String,
    /// κ(a) = a^k.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    k: i64,
    /// μ(a) = a^{-m}, m ∈ {0, 1}.
    #[arg(long, default_value_t = 0)]
    m: i64,
    /// μ table file (`a → image` lines); overrides --m.
    #[arg(long, requires = "kappa")]
    mu: Option<PathBuf>,
    /// κ table file; overrides --k.
    #[arg(long, requires = "mu")]
    kappa: Option<PathBuf>,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also check the equivalence map to the extension with κ(a) = a^K.
    #[arg(long, value_name = "K", allow_hyphen_values = true)]
    equivalent_k: Option<i64>,
}

pub fn run(args: Args, out: &mut dyn Write) -> Result<bool> {
    let seed = resolve_seed(args.seed)?;
    let graph = load_graph(&args.space, None)?;
    let space = automorphism_group(&graph)?;
    let gamma = PermutationGroup::from_spec(&args.gamma)?;
    writeln!(out, "seed {seed}")?;
    writeln!(
        out,
        "space {}: |X| = {}, |G| = {}",
        args.space,
        graph.vertex_count(),
        space.order()
    )?;
    writeln!(out, "gamma {}: order {}", args.gamma, gamma.order())?;

    let w = match (&args.mu, &args.kappa) {
        (Some(mu), Some(kappa)) => {
            let mu = parse_table(&read_file(mu)?, space.order())?;
            let kappa = parse_table(&read_file(kappa)?, space.order())?;
            writeln!(out, "extension from tables")?;
            WGroup::new(space, gamma, mu, kappa)?
        }
        _ => {
            writeln!(out, "extension k={} m={}", args.k, args.m)?;
            WGroup::with_km(space, gamma, args.k, args.m)?
        }
    };
    writeln!(out, "|W| = {}", w.order())?;

    let mut rng = gaugeforge::seeded_rng(seed);
    let report = w.check_axioms(args.samples, &mut rng);
    let mut ok = report.passed();
    writeln!(
        out,
        "axioms over {} samples: identity {} inverse {} associativity {} action {} failures  {}",
        report.samples,
        report.identity_failures,
        report.inverse_failures,
        report.associativity_failures,
        report.action_failures,
        verdict(report.passed())
    )?;

    if let Some(k2) = args.equivalent_k {
        let Some((_, m)) = w.km() else {
            bail!("--equivalent-k needs an extension given by --k and --m");
        };
        let target = WGroup::with_km(w.space_group().clone(), w.internal_group().clone(), k2, m)?;
        let mut failures = 0usize;
        for _ in 0..args.samples {
            let u = w.random_element(&mut rng);
            let v = w.random_element(&mut rng);
            let lhs = w.equivalence_map(&target, &w.mul(&u, &v))?;
            let rhs = target.mul(&w.equivalence_map(&target, &u)?, &w.equivalence_map(&target, &v)?);
            if lhs != rhs {
                failures += 1;
            }
        }
        ok &= failures == 0;
        writeln!(
            out,
            "equivalence k={} -> k={k2} over {} samples: {failures} failures  {}",
            args.k,
            args.samples,
            verdict(failures == 0)
        )?;
    }
    Ok(ok)
}

pub(crate) fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
