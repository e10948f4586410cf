//! Bernoulli-trial walks: exact lattice probabilities against their Gaussian
//! (heat-kernel) approximation.
//!
//! A walk takes `n_l` left and `n_r` right steps; `x = n_r - n_l` and
//! `t = n_l + n_r`. Reachable points satisfy `|x| <= t` and `x ≡ t (mod 2)`,
//! so the exact distribution lives on every other site and a density
//! approximating it carries a factor 2 relative to a unit-spacing density.

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BernoulliError {
    #[error("probability must lie in [0, 1]")]
    BadProbability,
    #[error("({x}, {t}) has x and t of different parity")]
    Parity { x: i64, t: u64 },
    #[error("({x}, {t}) lies outside |x| <= t")]
    OutOfCone { x: i64, t: u64 },
    #[error("({x}, {t}) cannot reach ({end_x}, {end_t})")]
    Unreachable { x: i64, t: u64, end_x: i64, end_t: u64 },
    #[error("|v| must be below 1")]
    SingularVelocity,
    #[error("time must be positive")]
    NonPositiveTime,
    #[error("intermediate time must satisfy 0 < t < T")]
    EndpointTime,
}

/// Single-trial probabilities, `p_left + p_right = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialParams {
    p_left: BigRational,
}

impl TrialParams {
    pub fn new(p_left: BigRational) -> Result<Self, BernoulliError> {
        if p_left.is_negative() || p_left > BigRational::one() {
            return Err(BernoulliError::BadProbability);
        }
        Ok(Self { p_left })
    }

    /// `p_left = num / den`.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self, BernoulliError> {
        if den == 0 {
            return Err(BernoulliError::BadProbability);
        }
        Self::new(BigRational::new(num.into(), den.into()))
    }

    pub fn symmetric() -> Self {
        Self {
            p_left: BigRational::new(1.into(), 2.into()),
        }
    }

    pub fn p_left(&self) -> &BigRational {
        &self.p_left
    }

    pub fn p_right(&self) -> BigRational {
        BigRational::one() - &self.p_left
    }

    /// `v = p_left - p_right`.
    pub fn velocity(&self) -> f64 {
        ratio_to_f64(&(&self.p_left - self.p_right()))
    }

    /// Mean displacement per step, `E[x]/t = p_right - p_left = -v`.
    pub fn drift(&self) -> f64 {
        -self.velocity()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub t: u64,
}

impl LatticePoint {
    pub fn new(x: i64, t: u64) -> Self {
        Self { x, t }
    }

    pub fn check_reachable(&self) -> Result<(), BernoulliError> {
        if self.x.unsigned_abs() > self.t {
            return Err(BernoulliError::OutOfCone { x: self.x, t: self.t });
        }
        if (self.x.rem_euclid(2) as u64) != self.t % 2 {
            return Err(BernoulliError::Parity { x: self.x, t: self.t });
        }
        Ok(())
    }

    /// `(n_l, n_r)`; only meaningful for reachable points.
    fn steps(&self) -> (u64, u64) {
        let t = self.t as i64;
        (((t - self.x) / 2) as u64, ((t + self.x) / 2) as u64)
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `n!`, cached; the table grows on demand and is pre-sized to 500.
pub fn factorial(n: u64) -> BigUint {
    static TABLE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut v = vec![BigUint::one()];
        for k in 1..=500u64 {
            let next = &v[k as usize - 1] * k;
            v.push(next);
        }
        Mutex::new(v)
    });
    let mut v = table.lock().expect("factorial cache poisoned");
    while v.len() as u64 <= n {
        let k = v.len() as u64;
        let next = &v[k as usize - 1] * k;
        v.push(next);
    }
    v[n as usize].clone()
}

fn pow(base: &BigRational, exp: u64) -> BigRational {
    (0..exp).fold(BigRational::one(), |acc, _| acc * base)
}

fn big(n: BigUint) -> BigInt {
    BigInt::from(n)
}

/// `P(x, t) = t! / (n_l! n_r!) · p_left^{n_l} p_right^{n_r}`.
pub fn binomial_exact(point: LatticePoint, params: &TrialParams) -> Result<BigRational, BernoulliError> {
    point.check_reachable()?;
    let (nl, nr) = point.steps();
    let count = BigRational::new(big(factorial(point.t)), big(factorial(nl) * factorial(nr)));
    Ok(count * pow(params.p_left(), nl) * pow(&params.p_right(), nr))
}

/// `P̃(x, t) = (1/√(1-v²)) √(2/(πt)) exp{-(x - vt)² / (2t(1-v²))}`, the
/// factor-2 lattice density; it peaks at `x = vt`.
pub fn approx_density(x: f64, t: f64, v: f64) -> Result<f64, BernoulliError> {
    if t <= 0.0 {
        return Err(BernoulliError::NonPositiveTime);
    }
    if v.abs() >= 1.0 {
        return Err(BernoulliError::SingularVelocity);
    }
    let s = 1.0 - v * v;
    let z = (x - v * t) / s.sqrt();
    Ok((2.0 / (std::f64::consts::PI * t)).sqrt() / s.sqrt() * (-z * z / (2.0 * t)).exp())
}

fn check_path(mid: LatticePoint, end: LatticePoint) -> Result<LatticePoint, BernoulliError> {
    mid.check_reachable()?;
    end.check_reachable()?;
    let unreachable = BernoulliError::Unreachable {
        x: mid.x,
        t: mid.t,
        end_x: end.x,
        end_t: end.t,
    };
    if mid.t > end.t {
        return Err(unreachable);
    }
    let rest = LatticePoint::new(end.x - mid.x, end.t - mid.t);
    rest.check_reachable().map_err(|_| unreachable)?;
    Ok(rest)
}

/// Probability that a walk from the origin conditioned to end at `end`
/// passes through `mid`:
/// `t!(T-t)! ((T-X)/2)! ((T+X)/2)! / ( ((t-x)/2)! ((t+x)/2)! ((T-t)/2-(X-x)/2)! ((T-t)/2+(X-x)/2)! T! )`.
/// Takes no trial probabilities: the conditioning removes them.
pub fn conditional_exact(mid: LatticePoint, end: LatticePoint) -> Result<BigRational, BernoulliError> {
    let rest = check_path(mid, end)?;
    let (ml, mr) = mid.steps();
    let (rl, rr) = rest.steps();
    let (el, er) = end.steps();
    let num = factorial(mid.t) * factorial(rest.t) * factorial(el) * factorial(er);
    let den = factorial(ml) * factorial(mr) * factorial(rl) * factorial(rr) * factorial(end.t);
    Ok(BigRational::new(big(num), big(den)))
}

/// `T / √((π/2)(1-v²) t T (T-t)) · exp{-(Xt - xT)² / (2(1-v²) t T (T-t))}`.
pub fn conditional_approx(mid: (f64, f64), end: (f64, f64), v: f64) -> Result<f64, BernoulliError> {
    let ((x, t), (big_x, big_t)) = (mid, end);
    if v.abs() >= 1.0 {
        return Err(BernoulliError::SingularVelocity);
    }
    if !(t > 0.0 && t < big_t) {
        return Err(BernoulliError::EndpointTime);
    }
    let s = 1.0 - v * v;
    let d = s * t * big_t * (big_t - t);
    let num = big_x * t - x * big_t;
    Ok(big_t / (std::f64::consts::FRAC_PI_2 * d).sqrt() * (-num * num / (2.0 * d)).exp())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalRow {
    pub t: u64,
    /// Every reachable `x` attaining the maximum, ascending.
    pub maximizers: Vec<i64>,
    pub max_probability: BigRational,
    /// `X t / T`, the unique maximiser of the approximation.
    pub approx_argmax: f64,
}

/// Most probable intermediate positions for each `0 < t < T`, ties kept.
pub fn extremal_points(end: LatticePoint) -> Result<Vec<ExtremalRow>, BernoulliError> {
    end.check_reachable()?;
    let mut rows = Vec::new();
    for t in 1..end.t {
        let mut best: Option<BigRational> = None;
        let mut maximizers = Vec::new();
        let lo = -(t as i64);
        for x in (lo..=t as i64).step_by(2) {
            let Ok(p) = conditional_exact(LatticePoint::new(x, t), end) else {
                continue;
            };
            match &best {
                Some(b) if p < *b => {}
                Some(b) if p == *b => maximizers.push(x),
                _ => {
                    best = Some(p);
                    maximizers = vec![x];
                }
            }
        }
        rows.push(ExtremalRow {
            t,
            maximizers,
            max_probability: best.expect("some point on every slice is reachable"),
            approx_argmax: end.x as f64 * t as f64 / end.t as f64,
        });
    }
    Ok(rows)
}

/// CSV `t,x_exact_maximizers,x_approx_argmax,P_exact,P_approx`; the
/// maximisers are space-separated and `P_approx` is the approximation at the
/// first exact maximiser.
pub fn extremal_csv(rows: &[ExtremalRow], end: LatticePoint, v: f64) -> Result<String, BernoulliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["t", "x_exact_maximizers", "x_approx_argmax", "P_exact", "P_approx"])
        .expect("in-memory write");
    for r in rows {
        let xs: Vec<String> = r.maximizers.iter().map(i64::to_string).collect();
        let approx = conditional_approx((r.maximizers[0] as f64, r.t as f64), (end.x as f64, end.t as f64), v)?;
        w.write_record([
            r.t.to_string(),
            xs.join(" "),
            r.approx_argmax.to_string(),
            ratio_to_f64(&r.max_probability).to_string(),
            approx.to_string(),
        ])
        .expect("in-memory write");
    }
    Ok(String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output"))
}

/// Finite-difference step used by [`heat_residual_bounded`].
pub const HEAT_STEP: f64 = 0.05;

/// Frozen `C` in `|residual| <= C / t²` at step [`HEAT_STEP`], for
/// `t ∈ [50, 500]`, `|v| <= 1/2`. Observed maximum 3.3e-4.
pub const HEAT_RESIDUAL_BOUND: f64 = 1e-3;

/// Whether the residual at `(x, t)` respects `HEAT_RESIDUAL_BOUND / t²`.
pub fn heat_residual_bounded(x: f64, t: f64, v: f64) -> Result<bool, BernoulliError> {
    Ok(heat_residual(x, t, v, HEAT_STEP)?.abs() <= HEAT_RESIDUAL_BOUND / (t * t))
}

/// Largest `|binomial_exact - approx_density|` over reachable `x` at time
/// `t`, with the density centred on the drift of `params`.
pub fn stirling_gap(t: u64, params: &TrialParams) -> Result<f64, BernoulliError> {
    let v = params.drift();
    let mut worst: f64 = 0.0;
    for x in (-(t as i64)..=t as i64).step_by(2) {
        let exact = ratio_to_f64(&binomial_exact(LatticePoint::new(x, t), params)?);
        worst = worst.max((exact - approx_density(x as f64, t as f64, v)?).abs());
    }
    Ok(worst)
}

/// `∂_t P̃ + v ∂_x P̃ - ((1-v²)/2) ∂²_x P̃` by central differences with step
/// `h` in both variables.
pub fn heat_residual(x: f64, t: f64, v: f64, h: f64) -> Result<f64, BernoulliError> {
    let p = |x: f64, t: f64| approx_density(x, t, v);
    let dt = (p(x, t + h)? - p(x, t - h)?) / (2.0 * h);
    let dx = (p(x + h, t)? - p(x - h, t)?) / (2.0 * h);
    let dxx = (p(x + h, t)? - 2.0 * p(x, t)? + p(x - h, t)?) / (h * h);
    Ok(dt + v * dx - 0.5 * (1.0 - v * v) * dxx)
}
