//! The free particle on the integer line.
//!
//! Each time step a particle stays (weight `w^stay`) or moves one site left
//! or right (weights `w^left`, `w^right`). The amplitude at `(x, t)` is the
//! sum of the products of weights over all paths from the sources.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;

use super::QuantizerError;
use crate::exact_algebra::{CyclotomicInt, IntPoly};

/// A point source at `position` with initial phase `w^phase`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Source {
    pub position: i64,
    pub phase: usize,
}

impl Source {
    pub fn new(position: i64, phase: usize) -> Self {
        Self { position, phase }
    }

    /// Parses `position:phase`, where `phase` is an exponent or `pi`
    /// (`M / 2`, even `M` only).
    pub fn parse(text: &str, modulus: usize) -> Result<Self, QuantizerError> {
        let bad = || QuantizerError::SourceSyntax(text.to_string());
        let (pos, phase) = text.split_once(':').ok_or_else(bad)?;
        let position = pos.trim().parse::<i64>().map_err(|_| bad())?;
        let phase = match phase.trim() {
            "pi" => {
                if !modulus.is_multiple_of(2) {
                    return Err(QuantizerError::PiNeedsEvenModulus(modulus));
                }
                modulus / 2
            }
            p => p.parse::<usize>().map_err(|_| bad())?,
        };
        if phase >= modulus {
            return Err(QuantizerError::PhaseOutOfRange { phase, modulus });
        }
        Ok(Self { position, phase })
    }
}

impl FromStr for Source {
    type Err = QuantizerError;

    /// `position:phase` with a numeric phase; the range check against `M`
    /// happens when the source is used.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s, usize::MAX)
    }
}

/// Step weights as exponents of `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalRule1D {
    pub modulus: usize,
    pub stay: usize,
    pub left: usize,
    pub right: usize,
}

impl LocalRule1D {
    /// Stay with weight 1, move either way with weight `w`.
    pub fn free(modulus: usize) -> Self {
        Self {
            modulus,
            stay: 0,
            left: 1,
            right: 1,
        }
    }

    /// Every weight multiplied by `w^c`.
    pub fn gauge_shifted(&self, c: usize) -> Self {
        let m = self.modulus;
        Self {
            modulus: m,
            stay: (self.stay + c) % m,
            left: (self.left + c) % m,
            right: (self.right + c) % m,
        }
    }

    fn validate(&self) -> Result<(), QuantizerError> {
        if self.modulus == 0 {
            return Err(QuantizerError::ZeroModulus);
        }
        for phase in [self.stay, self.left, self.right] {
            if phase >= self.modulus {
                return Err(QuantizerError::PhaseOutOfRange {
                    phase,
                    modulus: self.modulus,
                });
            }
        }
        Ok(())
    }
}

/// `A_x^t` as an ordinary polynomial in `w`:
/// `Σ_τ τ! / (((τ-x)/2)! ((τ+x)/2)!) · C(t, τ) · w^τ`, `τ ≥ |x|`, `τ ≡ x (mod 2)`.
pub fn amplitude_1d_poly(x: i64, t: u64) -> Result<IntPoly, QuantizerError> {
    if x.unsigned_abs() > t {
        return Err(QuantizerError::OutOfLightCone { x, t });
    }
    let t_big = BigInt::from(t);
    let mut coeffs = vec![BigInt::from(0); t as usize + 1];
    let mut tau = x.unsigned_abs();
    while tau <= t {
        let right = (tau as i64 + x) / 2;
        coeffs[tau as usize] =
            binomial(BigInt::from(tau), BigInt::from(right)) * binomial(t_big.clone(), BigInt::from(tau));
        tau += 2;
    }
    Ok(IntPoly::new(coeffs))
}

/// Closed-form amplitude from a single phase-0 source at the origin, reduced
/// modulo `w^M - 1`.
pub fn amplitude_1d_closed(x: i64, t: u64, modulus: usize) -> Result<CyclotomicInt, QuantizerError> {
    if modulus == 0 {
        return Err(QuantizerError::ZeroModulus);
    }
    Ok(CyclotomicInt::from_poly(modulus, &amplitude_1d_poly(x, t)?))
}

/// Amplitudes on `[offset, offset + values.len())`; zero elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineAmplitudes {
    pub offset: i64,
    pub values: Vec<CyclotomicInt>,
}

impl LineAmplitudes {
    pub fn modulus(&self) -> usize {
        self.values[0].modulus()
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.values.len() as i64).map(move |i| self.offset + i)
    }

    pub fn get(&self, x: i64) -> CyclotomicInt {
        let i = x - self.offset;
        if i < 0 || i >= self.values.len() as i64 {
            CyclotomicInt::zero(self.modulus())
        } else {
            self.values[i as usize].clone()
        }
    }
}

/// Free-particle amplitudes after `t` steps.
pub fn amplitude_1d_dp(sources: &[Source], t: u64, modulus: usize) -> Result<LineAmplitudes, QuantizerError> {
    amplitude_1d_dp_with_rule(sources, t, &LocalRule1D::free(modulus))
}

/// Iterates `A_x ← w^right A_{x-1} + w^stay A_x + w^left A_{x+1}`.
pub fn amplitude_1d_dp_with_rule(
    sources: &[Source],
    t: u64,
    rule: &LocalRule1D,
) -> Result<LineAmplitudes, QuantizerError> {
    rule.validate()?;
    let m = rule.modulus;
    let lo = sources
        .iter()
        .map(|s| s.position)
        .min()
        .ok_or(QuantizerError::NoSources)?;
    let hi = sources.iter().map(|s| s.position).max().expect("nonempty");
    let span = t as i64;
    let offset = lo - span;
    let width = (hi - lo + 2 * span + 1) as usize;

    let mut cur = vec![CyclotomicInt::zero(m); width];
    for s in sources {
        if s.phase >= m {
            return Err(QuantizerError::PhaseOutOfRange {
                phase: s.phase,
                modulus: m,
            });
        }
        let i = (s.position - offset) as usize;
        cur[i] = &cur[i] + &CyclotomicInt::monomial(m, s.phase as i64);
    }
    // Occupied window grows by one site per side per step.
    let (mut a, mut b) = ((lo - offset) as usize, (hi - offset) as usize);
    for _ in 0..t {
        a -= 1;
        b += 1;
        let next: Vec<CyclotomicInt> = (0..width)
            .map(|i| {
                if i < a || i > b {
                    return CyclotomicInt::zero(m);
                }
                let mut z = cur[i].shift(rule.stay as i64);
                if i > 0 {
                    z = &z + &cur[i - 1].shift(rule.right as i64);
                }
                if i + 1 < width {
                    z = &z + &cur[i + 1].shift(rule.left as i64);
                }
                z
            })
            .collect();
        cur = next;
    }
    Ok(LineAmplitudes { offset, values: cur })
}
