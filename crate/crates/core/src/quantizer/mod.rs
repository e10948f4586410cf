//! Path-amplitude quantization with finite-group phases.
//!
//! [`line`](amplitude_1d_dp) covers the free particle on the integer line with
//! `C_M` phases; [`GraphModel`] generalises to vertex-transitive graphs with
//! rules valued in any enumerated group, accumulated in `Z[Γ]`.

mod graph_model;
mod line;
mod pattern;

use thiserror::Error;

pub use graph_model::{amplitude_graph_dp, graph_pattern, stabilizer_orbits, GraphModel};
pub use line::{
    amplitude_1d_closed, amplitude_1d_dp, amplitude_1d_dp_with_rule, amplitude_1d_poly, LineAmplitudes, LocalRule1D,
    Source,
};
pub use pattern::{interference_pattern, interference_pattern_with, Pattern, PatternRow};

use crate::exact_algebra::AlgebraError;
use crate::graph_space::GraphError;
use crate::perm_group::PermError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantizerError {
    #[error("x = {x} is unreachable in t = {t} steps")]
    OutOfLightCone { x: i64, t: u64 },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("phase exponent {phase} out of range for M = {modulus}")]
    PhaseOutOfRange { phase: usize, modulus: usize },
    #[error("a phase of pi needs an even modulus, got M = {0}")]
    PiNeedsEvenModulus(usize),
    #[error("source `{0}` is not `position:phase`")]
    SourceSyntax(String),
    #[error("no sources given")]
    NoSources,
    #[error("every amplitude vanishes; the pattern cannot be normalised")]
    AllZero,
    #[error("Aut(X) moves vertex 0 to only {orbit_size} of {vertices} vertices")]
    NotVertexTransitive { orbit_size: usize, vertices: usize },
    #[error("rule needs {expected} entries, found {found}")]
    RuleLength { expected: usize, found: usize },
    #[error("rule is not constant on the stabilizer orbit {orbit:?} (witness {witness:?})")]
    NotOrbitConstant { orbit: Vec<usize>, witness: Vec<usize> },
    #[error("group element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] PermError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
