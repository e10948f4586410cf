//! The integral group algebra `Z[Γ]` of an enumerated permutation group.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::AlgebraError;
use crate::perm_group::PermutationGroup;

/// `Σ_g n_g δ_g`, dense over the group's enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    group: Arc<PermutationGroup>,
    coeffs: Vec<BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(group: &Arc<PermutationGroup>) -> Self {
        Self {
            group: Arc::clone(group),
            coeffs: vec![BigInt::zero(); group.order()],
        }
    }

    /// `δ_g` for the element with index `g`.
    pub fn delta(group: &Arc<PermutationGroup>, g: usize) -> Self {
        let mut a = Self::zero(group);
        a.coeffs[g] = BigInt::one();
        a
    }

    pub fn from_coeffs(group: &Arc<PermutationGroup>, coeffs: Vec<BigInt>) -> Result<Self, AlgebraError> {
        if coeffs.len() != group.order() {
            return Err(AlgebraError::DimensionMismatch {
                expected: group.order(),
                found: coeffs.len(),
            });
        }
        Ok(Self {
            group: Arc::clone(group),
            coeffs,
        })
    }

    pub fn from_i64s(group: &Arc<PermutationGroup>, coeffs: &[i64]) -> Result<Self, AlgebraError> {
        Self::from_coeffs(group, coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn group(&self) -> &Arc<PermutationGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> &BigInt {
        &self.coeffs[g]
    }

    pub fn add_to(&mut self, g: usize, n: &BigInt) {
        self.coeffs[g] += n;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Indices with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&g| !self.coeffs[g].is_zero()).collect()
    }

    /// Image under the augmentation map (every `δ_g -> 1`).
    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_group(other)?;
        Ok(Self {
            group: Arc::clone(&self.group),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        Self {
            group: Arc::clone(&self.group),
            coeffs: self.coeffs.iter().map(|c| c * n).collect(),
        }
    }

    /// `self * δ_r`, i.e. every `δ_g` becomes `δ_{g r}`.
    pub fn right_mul_element(&self, r: usize) -> Self {
        let mut out = Self::zero(&self.group);
        for g in self.support() {
            out.coeffs[self.group.mul(g, r)] += &self.coeffs[g];
        }
        out
    }

    fn same_group(&self, other: &Self) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(AlgebraError::GroupMismatch)
        }
    }
}

/// Convolution product `(a * b)[g] = Σ_{hk = g} a[h] b[k]`.
pub fn algebra_convolve(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Result<GroupAlgebraElement, AlgebraError> {
    a.same_group(b)?;
    let mut out = GroupAlgebraElement::zero(&a.group);
    let bs = b.support();
    for h in a.support() {
        for &k in &bs {
            out.coeffs[a.group.mul(h, k)] += &a.coeffs[h] * &b.coeffs[k];
        }
    }
    Ok(out)
}
