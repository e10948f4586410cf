//! Exact arithmetic: cyclotomic integers, cyclotomic polynomials, the group
//! algebra `Z[Γ]`, matrix representations and squared amplitudes.

mod cyclotomic;
mod group_algebra;
mod poly;
mod representation;

use thiserror::Error;

pub use cyclotomic::{cyclo_mul, is_zero_at_primitive_root, CyclotomicInt, CyclotomicRational};
pub use group_algebra::{algebra_convolve, GroupAlgebraElement};
pub use poly::{cyclotomic_polynomial, euler_phi, smallest_quantizing_group, CyclotomicPolynomial, IntPoly};
pub use representation::{
    identity_matrix, matrix_mul, path_count_weights, squared_amplitude, CycloMatrix, Representation, SquaredAmplitude,
    StateVector,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("expected {modulus} coefficients, found {found}")]
    CoefficientCount { modulus: usize, found: usize },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("zero polynomial has no quantizing group")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix for element {element} is not square of the common degree")]
    MatrixShape { element: usize },
    #[error("identity element is not mapped to the identity matrix")]
    IdentityNotMapped,
    #[error("rho({a})rho({b}) != rho({a}*{b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("matrix for element {element} is not unitary (deviation {deviation:.3e})")]
    NotUnitary { element: usize, deviation: f64 },
    #[error("representation has degree {0}, expected a character")]
    NotOneDimensional(usize),
    #[error("weighted and direct squared amplitudes disagree")]
    CrossCheckFailed,
    #[error("cannot parse `{0}` as `M;c0,...,c_(M-1)`")]
    Parse(String),
}
