//! Cyclotomic integers `Z[w]/(w^M - 1)`.
//!
//! Values are stored modulo `w^M - 1`, so coefficients keep their meaning as
//! path counts per phase. Equality *as algebraic numbers* (at a primitive
//! root) is a separate, coarser question answered by reduction modulo `Φ_M`.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{cached_phi, write_terms, IntPoly};
use super::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    /// # Panics
    ///
    /// Panics if `modulus == 0`.
    pub fn zero(modulus: usize) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Self {
            coeffs: vec![BigInt::zero(); modulus],
        }
    }

    pub fn one(modulus: usize) -> Self {
        Self::from_int(modulus, 1)
    }

    pub fn from_int(modulus: usize, n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(modulus);
        z.coeffs[0] = n.into();
        z
    }

    /// `w^k`, exponent taken modulo `M`.
    pub fn monomial(modulus: usize, k: i64) -> Self {
        let mut z = Self::zero(modulus);
        z.coeffs[reduce(k, modulus)] = BigInt::one();
        z
    }

    /// Coefficient vector of length exactly `M`.
    pub fn from_coeffs(modulus: usize, coeffs: Vec<BigInt>) -> Result<Self, AlgebraError> {
        if modulus == 0 {
            return Err(AlgebraError::ZeroModulus);
        }
        if coeffs.len() != modulus {
            return Err(AlgebraError::CoefficientCount {
                modulus,
                found: coeffs.len(),
            });
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self, AlgebraError> {
        Self::from_coeffs(coeffs.len(), coeffs.iter().map(|&c| c.into()).collect())
    }

    /// Reduces a polynomial of any degree modulo `w^M - 1`.
    pub fn from_poly(modulus: usize, poly: &IntPoly) -> Self {
        let mut z = Self::zero(modulus);
        for (k, c) in poly.coeffs().iter().enumerate() {
            z.coeffs[k % modulus] += c;
        }
        z
    }

    pub fn modulus(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    /// All coefficients zero (identically zero in `Z[w]/(w^M - 1)`).
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Whether the value vanishes at a primitive `M`-th root of unity.
    pub fn is_zero_at_primitive_root(&self) -> bool {
        self.to_poly().divisible_by_monic(&cached_phi(self.modulus()))
    }

    /// Whether the value vanishes at `w = exp(2πi r / M)`, a primitive
    /// `M / gcd(M, r)`-th root of unity.
    pub fn is_zero_at_root(&self, r: usize) -> bool {
        let order = self.modulus() / r.gcd(&self.modulus());
        self.to_poly().divisible_by_monic(&cached_phi(order))
    }

    /// Equality as algebraic numbers at a primitive root.
    pub fn value_eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && (self - other).is_zero_at_primitive_root()
    }

    /// Value at `w = 1`: the plain coefficient sum.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Complex conjugate, `w^k -> w^{-k}`.
    pub fn conj(&self) -> Self {
        let m = self.modulus();
        let mut out = Self::zero(m);
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(m - k) % m] = c.clone();
        }
        out
    }

    /// Multiplication by `w^k`, a cyclic shift.
    pub fn shift(&self, k: i64) -> Self {
        let m = self.modulus();
        let s = reduce(k, m);
        let mut out = Self::zero(m);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(i + s) % m] = c.clone();
        }
        out
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * n).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        same_modulus(self, other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        same_modulus(self, other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cyclic convolution of coefficient vectors.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        same_modulus(self, other)?;
        let m = self.modulus();
        let mut out = Self::zero(m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[(i + j) % m] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Numerical value at `w = exp(2πi r / M)`. The polynomial is first
    /// reduced exactly modulo the minimal polynomial of that root, so large
    /// cancelling coefficients do not lose precision.
    pub fn embed(&self, r: usize) -> Complex64 {
        let m = self.modulus();
        let order = m / r.gcd(&m);
        let (_, rem) = self.to_poly().div_rem_monic(&cached_phi(order));
        rem.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let angle = TAU * ((k * r) % m) as f64 / m as f64;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    /// Value at the primitive root `exp(2πi / M)`.
    pub fn to_complex(&self) -> Complex64 {
        self.embed(1)
    }

    /// `M;c0,c1,...,c_{M-1}`.
    pub fn to_machine_string(&self) -> String {
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("{};{}", self.modulus(), cs.join(","))
    }
}

/// Product of two cyclotomic integers of equal modulus.
pub fn cyclo_mul(a: &CyclotomicInt, b: &CyclotomicInt) -> Result<CyclotomicInt, AlgebraError> {
    a.checked_mul(b)
}

pub fn is_zero_at_primitive_root(z: &CyclotomicInt) -> bool {
    z.is_zero_at_primitive_root()
}

fn reduce(k: i64, m: usize) -> usize {
    k.rem_euclid(m as i64) as usize
}

fn same_modulus(a: &CyclotomicInt, b: &CyclotomicInt) -> Result<(), AlgebraError> {
    if a.modulus() == b.modulus() {
        Ok(())
    } else {
        Err(AlgebraError::ModulusMismatch(a.modulus(), b.modulus()))
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().enumerate())?;
        match self.modulus() {
            1 => f.write_str(" (mod w-1)"),
            m => write!(f, " (mod w^{m}-1)"),
        }
    }
}

impl FromStr for CyclotomicInt {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(s.to_string());
        let (m, rest) = s.trim().split_once(';').ok_or_else(bad)?;
        let m: usize = m.trim().parse().map_err(|_| bad())?;
        let coeffs = rest
            .split(',')
            .map(|c| c.trim().parse::<BigInt>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_coeffs(m, coeffs)
    }
}

// Operator forms panic on a modulus mismatch; the `checked_*` methods are the
// fallible equivalents.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &CyclotomicInt {
            type Output = CyclotomicInt;
            fn $method(self, rhs: &CyclotomicInt) -> CyclotomicInt {
                self.$checked(rhs).expect("cyclotomic modulus mismatch")
            }
        }
        impl $tr for CyclotomicInt {
            type Output = CyclotomicInt;
            fn $method(self, rhs: CyclotomicInt) -> CyclotomicInt {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `numerator / denominator` with an integer denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicRational {
    pub numerator: CyclotomicInt,
    pub denominator: BigInt,
}

impl CyclotomicRational {
    pub fn new(numerator: CyclotomicInt, denominator: BigInt) -> Result<Self, AlgebraError> {
        if denominator.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let (numerator, denominator) = if denominator.is_negative() {
            (-&numerator, -denominator)
        } else {
            (numerator, denominator)
        };
        Ok(Self { numerator, denominator })
    }

    pub fn integral(numerator: CyclotomicInt) -> Self {
        Self {
            numerator,
            denominator: BigInt::one(),
        }
    }

    pub fn modulus(&self) -> usize {
        self.numerator.modulus()
    }

    /// Equality as algebraic numbers at a primitive root.
    pub fn value_eq(&self, other: &Self) -> bool {
        self.numerator
            .scale(&other.denominator)
            .value_eq(&other.numerator.scale(&self.denominator))
    }

    pub fn is_zero_at_primitive_root(&self) -> bool {
        self.numerator.is_zero_at_primitive_root()
    }

    pub fn embed(&self, r: usize) -> Complex64 {
        self.numerator.embed(r) / self.denominator.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_complex(&self) -> Complex64 {
        self.embed(1)
    }
}

impl fmt::Display for CyclotomicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            self.numerator.fmt(f)
        } else {
            write!(f, "({}) / {}", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::cyclotomic_polynomial;
    use super::*;
    use proptest::prelude::*;

    fn c(v: &[i64]) -> CyclotomicInt {
        CyclotomicInt::from_i64s(v).unwrap()
    }

    #[test]
    fn basic_products() {
        for m in 1..8 {
            let w = CyclotomicInt::monomial(m, 1);
            let w_last = CyclotomicInt::monomial(m, m as i64 - 1);
            assert_eq!(&w * &w_last, CyclotomicInt::one(m));
        }
        // (1 + w)(1 - w) = 1 - w^2
        let m = 5;
        let one = CyclotomicInt::one(m);
        let w = CyclotomicInt::monomial(m, 1);
        assert_eq!((&one + &w) * (&one - &w), &one - &CyclotomicInt::monomial(m, 2));
        assert_eq!(
            cyclo_mul(&one, &CyclotomicInt::one(4)).unwrap_err(),
            AlgebraError::ModulusMismatch(5, 4)
        );
    }

    #[test]
    fn zero_tests() {
        assert!(c(&[0, 3, 0, 3]).is_zero_at_primitive_root());
        assert!(!c(&[1, 1, 0, 0]).is_zero_at_primitive_root());
        assert!(CyclotomicInt::zero(7).is_zero_at_primitive_root());
        // 1 + w + w^2 + w^3 vanishes at i but is not identically zero
        let s = c(&[1, 1, 1, 1]);
        assert!(s.is_zero_at_primitive_root() && !s.is_zero());
        assert!(s.embed(1).norm() < 1e-12);
        assert!(s.is_zero_at_root(1) && s.is_zero_at_root(2) && !s.is_zero_at_root(0));
        // 1 + w^2 at M = 4: zero at w = ±i, equal to 2 at w = -1
        let t = c(&[1, 0, 1, 0]);
        assert!(t.is_zero_at_root(1) && t.is_zero_at_root(3) && !t.is_zero_at_root(2));
        assert!((s.embed(0).re - 4.0).abs() < 1e-12);
    }

    #[test]
    fn formats() {
        let z = c(&[0, 3, 0, 3]);
        assert_eq!(z.to_string(), "3*w + 3*w^3 (mod w^4-1)");
        assert_eq!(z.to_machine_string(), "4;0,3,0,3");
        assert_eq!("4;0,3,0,3".parse::<CyclotomicInt>().unwrap(), z);
        assert_eq!(c(&[1, -1, 0]).to_string(), "1 - w (mod w^3-1)");
        assert_eq!(CyclotomicInt::zero(1).to_string(), "0 (mod w-1)");
        assert!("4;1,2".parse::<CyclotomicInt>().is_err());
        assert!("x;1".parse::<CyclotomicInt>().is_err());
    }

    #[test]
    fn conj_and_shift() {
        let z = c(&[1, 2, 3, 4]);
        assert_eq!(z.conj(), c(&[1, 4, 3, 2]));
        assert_eq!(z.shift(1), c(&[4, 1, 2, 3]));
        assert_eq!(z.shift(-1), z.shift(3));
        let emb = z.conj().embed(1);
        assert!((emb - z.embed(1).conj()).norm() < 1e-12);
    }

    #[test]
    fn rationals_compare_by_value() {
        let a = CyclotomicRational::new(c(&[2, 0, 0]), BigInt::from(4)).unwrap();
        let b = CyclotomicRational::new(c(&[-1, 0, 0]), BigInt::from(-2)).unwrap();
        assert!(a.value_eq(&b));
        assert_eq!(b.denominator, BigInt::from(2));
        assert!(CyclotomicRational::new(c(&[1]), BigInt::zero()).is_err());
    }

    fn arb(m: usize) -> impl Strategy<Value = CyclotomicInt> {
        proptest::collection::vec(-20i64..20, m).prop_map(|v| c(&v))
    }

    fn triple() -> impl Strategy<Value = (CyclotomicInt, CyclotomicInt, CyclotomicInt)> {
        (1usize..10).prop_flat_map(|m| (arb(m), arb(m), arb(m)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms((a, b, c) in triple()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &CyclotomicInt::zero(a.modulus()), a.clone());
            prop_assert_eq!(&a * &CyclotomicInt::one(a.modulus()), a.clone());
        }

        #[test]
        fn conj_is_an_involutive_ring_map((a, b, _c) in triple()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
            let norm = (&a * &a.conj()).to_complex();
            prop_assert!(norm.re >= -1e-9);
            prop_assert!(norm.im.abs() <= 1e-9 * (1.0 + norm.re.abs()));
        }

        #[test]
        fn zero_test_agrees_with_embedding(a in (1usize..13).prop_flat_map(arb)) {
            let exact = a.is_zero_at_primitive_root();
            let numeric = a.to_complex().norm() < 1e-9;
            prop_assert_eq!(exact, numeric);
        }

        #[test]
        fn multiples_of_phi_vanish(a in (1usize..13).prop_flat_map(arb)) {
            let m = a.modulus();
            let phi = cyclotomic_polynomial(m);
            let z = CyclotomicInt::from_poly(m, &a.to_poly().mul(phi.poly()));
            prop_assert!(z.is_zero_at_primitive_root());
            prop_assert!(z.to_complex().norm() < 1e-6);
        }
    }
}
