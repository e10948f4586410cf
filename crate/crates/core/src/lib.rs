//! Exact finite-group gauge structures on graphs.
//!
//! - [`perm_group`]: permutations and enumerated permutation groups.
//! - [`graph_space`]: the catalog of discrete spaces and their automorphisms.
//! - [`extension`]: split extensions `W` of a space group by `Γ^X`.
//! - [`gauge`]: connections, holonomy, triviality and the Wilson action.
//! - [`exact_algebra`]: cyclotomic integers, `Z[Γ]` and representations.
//! - [`quantizer`]: path-sum amplitudes on the line and on graphs.
//! - [`bernoulli`]: exact random walks against their Gaussian limit.
//!
//! ```
//! use gaugeforge::graph_space::{automorphism_group, Space};
//!
//! let cube = Space::Hexahedron.graph();
//! assert_eq!(automorphism_group(&cube).unwrap().order(), 48);
//! ```

pub mod bernoulli;
pub mod exact_algebra;
pub mod extension;
pub mod gauge;
pub mod graph_space;
pub mod group;
pub mod perm_group;
pub mod quantizer;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] perm_group::PermError),
    #[error(transparent)]
    Graph(#[from] graph_space::GraphError),
    #[error(transparent)]
    Extension(#[from] extension::ExtensionError),
    #[error(transparent)]
    Gauge(#[from] gauge::GaugeError),
    #[error(transparent)]
    Algebra(#[from] exact_algebra::AlgebraError),
    #[error(transparent)]
    Quantizer(#[from] quantizer::QuantizerError),
    #[error(transparent)]
    Bernoulli(#[from] bernoulli::BernoulliError),
}

/// The deterministic generator behind every sampled check.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/intro.md")]
    struct Intro;
    #[doc = include_str!("../../../book/src/spaces.md")]
    struct Spaces;
    #[doc = include_str!("../../../book/src/extensions.md")]
    struct Extensions;
    #[doc = include_str!("../../../book/src/gauge.md")]
    struct Gauge;
    #[doc = include_str!("../../../book/src/algebra.md")]
    struct Algebra;
    #[doc = include_str!("../../../book/src/quantizer.md")]
    struct Quantizer;
    #[doc = include_str!("../../../book/src/bernoulli.md")]
    struct Bernoulli;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
