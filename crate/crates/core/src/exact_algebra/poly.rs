//! Dense integer polynomials and cyclotomic polynomials.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `w^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Quotient and remainder by a monic divisor; exact over the integers.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let d = divisor.degree().expect("divisor must be nonzero");
        debug_assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPoly::default(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[i]);
            if lead.is_zero() {
                continue;
            }
            for j in 0..d {
                rem[i - d + j] -= &lead * &divisor.coeffs[j];
            }
            quot[i - d] = lead;
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Whether `divisor` (monic) divides `self` exactly.
    pub fn divisible_by_monic(&self, divisor: &IntPoly) -> bool {
        self.div_rem_monic(divisor).1.is_zero()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().enumerate().rev())
    }
}

/// Writes `Σ c_k w^k` as `3*w^3 - w + 2`, skipping zero terms, in the order
/// the iterator yields them.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        match (k, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => f.write_str("w")?,
            (1, false) => write!(f, "{mag}*w")?,
            (_, true) => write!(f, "w^{k}")?,
            (_, false) => write!(f, "{mag}*w^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `Φ_M`, the minimal polynomial of a primitive `M`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPolynomial {
    index: usize,
    poly: IntPoly,
}

impl CyclotomicPolynomial {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("nonzero")
    }
}

impl fmt::Display for CyclotomicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

pub(crate) fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `Φ_M = (w^M - 1) / Π_{d | M, d < M} Φ_d`, by exact division.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn cyclotomic_polynomial(m: usize) -> CyclotomicPolynomial {
    assert!(m >= 1, "cyclotomic polynomial index must be positive");
    let divs = divisors(m);
    let mut known: Vec<(usize, IntPoly)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut p = IntPoly::monomial(d);
        p.coeffs[0] -= 1;
        for (e, phi) in &known {
            if d % e == 0 {
                let (q, r) = p.div_rem_monic(phi);
                debug_assert!(r.is_zero());
                p = q;
            }
        }
        known.push((d, p));
    }
    let (_, poly) = known.pop().expect("m divides itself");
    CyclotomicPolynomial { index: m, poly }
}

/// `Φ_M` memoised across calls; zero tests hit this on every comparison.
pub(crate) fn cached_phi(m: usize) -> Arc<IntPoly> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<IntPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache poisoned").get(&m) {
        return Arc::clone(p);
    }
    let p = Arc::new(cyclotomic_polynomial(m).poly);
    cache.lock().expect("cache poisoned").insert(m, Arc::clone(&p));
    p
}

/// Least `M` in `2..=m_max` with `Φ_M | amplitude`, i.e. the smallest cyclic
/// quantizing group whose primitive character annihilates the amplitude.
pub fn smallest_quantizing_group(amplitude: &IntPoly, m_max: usize) -> Result<Option<usize>, AlgebraError> {
    if amplitude.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    Ok((2..=m_max).find(|&m| amplitude.divisible_by_monic(&cached_phi(m))))
}

/// Euler's totient by trial factorisation.
pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count()
}
