//! Split extensions `1 → Γ^X → W → G → 1` unifying space and internal
//! symmetries.
//!
//! An element of `W` is a pair `⟨α(x), a⟩` of a Γ-valued function on the
//! vertices of `X` and a space symmetry `a ∈ G`. The extension is fixed by an
//! antihomomorphism `μ: G → G` and an arbitrary function `κ: G → G`:
//!
//! ```text
//! action          σ(x)⟨α, a⟩    = σ(x μ(a)) α(x κ(a))
//! multiplication  ⟨α, a⟩⟨β, b⟩  = ⟨α(x κ(ab)⁻¹ μ(b) κ(a)) β(x κ(ab)⁻¹ κ(b)), ab⟩
//! inversion       ⟨α, a⟩⁻¹      = ⟨α(x κ(a⁻¹)⁻¹ μ(a)⁻¹ κ(a))⁻¹, a⁻¹⟩
//! ```
//!
//! `μ ≡ 1, κ ≡ 1` is the direct product `Γ^X × G`; `μ(a) = κ(a) = a⁻¹` is the
//! wreath product `Γ ≀_X G`. `W` itself is never enumerated: its elements are
//! symbolic pairs and every group law is checked on seeded samples.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::Rng;
use thiserror::Error;

use crate::group::FiniteGroup;
use crate::perm_group::PermutationGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("mu is not an antihomomorphism: mu({a}*{b}) != mu({b})*mu({a})")]
    NotAntihomomorphism { a: usize, b: usize },
    #[error("{name} table has {got} entries, expected {expected}")]
    TableLength {
        name: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("{name} table entry {index} -> {image} is not an element index")]
    TableEntry {
        name: &'static str,
        index: usize,
        image: usize,
    },
    #[error("m must be 0 or 1, got {0}")]
    BadM(i64),
    #[error("extensions differ in G, Γ or μ; the equivalence map needs them equal")]
    MuMismatch,
    #[error("malformed element: {0}")]
    BadElement(String),
    #[error("table line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// `α ∈ Γ^X`: one Γ element index per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaFunction(pub Vec<usize>);

/// `σ ∈ Σ^X`: one local state per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateConfiguration(pub Vec<usize>);

/// `⟨α(x), a⟩` with `a` stored as an index into `G`'s enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WElement {
    pub alpha: GammaFunction,
    pub a: usize,
}

/// The unified symmetry group `W` for given `G`, `Γ`, `μ`, `κ`.
#[derive(Debug, Clone)]
pub struct WGroup {
    space: PermutationGroup,
    internal: PermutationGroup,
    mu: Vec<usize>,
    kappa: Vec<usize>,
    km: Option<(i64, i64)>,
}

impl WGroup {
    /// General constructor; `mu` and `kappa` are tables over `G`'s element
    /// indices. Rejects `mu` unless `μ(ab) = μ(b)μ(a)` for every pair.
    pub fn new(
        space: PermutationGroup,
        internal: PermutationGroup,
        mu: Vec<usize>,
        kappa: Vec<usize>,
    ) -> Result<Self, ExtensionError> {
        let order = space.order();
        for (name, table) in [("mu", &mu), ("kappa", &kappa)] {
            if table.len() != order {
                return Err(ExtensionError::TableLength {
                    name,
                    got: table.len(),
                    expected: order,
                });
            }
            if let Some((index, &image)) = table.iter().enumerate().find(|(_, &v)| v >= order) {
                return Err(ExtensionError::TableEntry { name, index, image });
            }
        }
        for a in 0..order {
            for b in 0..order {
                if mu[space.mul(a, b)] != space.mul(mu[b], mu[a]) {
                    return Err(ExtensionError::NotAntihomomorphism { a, b });
                }
            }
        }
        Ok(Self {
            space,
            internal,
            mu,
            kappa,
            km: None,
        })
    }

    /// `μ(a) = a^{-m}`, `κ(a) = a^k`, with `m ∈ {0, 1}`.
    pub fn with_km(
        space: PermutationGroup,
        internal: PermutationGroup,
        k: i64,
        m: i64,
    ) -> Result<Self, ExtensionError> {
        if !(m == 0 || m == 1) {
            return Err(ExtensionError::BadM(m));
        }
        let mu = (0..space.order()).map(|a| space.pow(a, -m)).collect();
        let kappa = (0..space.order()).map(|a| space.pow(a, k)).collect();
        let mut w = Self::new(space, internal, mu, kappa)?;
        w.km = Some((k, m));
        Ok(w)
    }

    pub fn direct_product(space: PermutationGroup, internal: PermutationGroup) -> Self {
        Self::with_km(space, internal, 0, 0).expect("m = 0 is valid")
    }

    pub fn wreath_product(space: PermutationGroup, internal: PermutationGroup) -> Self {
        Self::with_km(space, internal, -1, 1).expect("m = 1 is valid")
    }

    pub fn space_group(&self) -> &PermutationGroup {
        &self.space
    }

    pub fn internal_group(&self) -> &PermutationGroup {
        &self.internal
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn kappa(&self) -> &[usize] {
        &self.kappa
    }

    /// `(k, m)` when built by [`WGroup::with_km`].
    pub fn km(&self) -> Option<(i64, i64)> {
        self.km
    }

    /// Number of points of `X`.
    pub fn points(&self) -> usize {
        self.space.degree()
    }

    /// Number of local states `|Σ|`.
    pub fn local_states(&self) -> usize {
        self.internal.degree()
    }

    /// `|W| = |Γ|^{N_X} · |G|`.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.internal.order()).pow(self.points() as u32) * self.space.order()
    }

    /// Checked constructor for an element.
    pub fn element(&self, alpha: Vec<usize>, a: usize) -> Result<WElement, ExtensionError> {
        if alpha.len() != self.points() {
            return Err(ExtensionError::BadElement(format!(
                "alpha has {} values for {} points",
                alpha.len(),
                self.points()
            )));
        }
        if let Some(bad) = alpha.iter().find(|&&g| g >= self.internal.order()) {
            return Err(ExtensionError::BadElement(format!("{bad} is not a Γ element")));
        }
        if a >= self.space.order() {
            return Err(ExtensionError::BadElement(format!("{a} is not a G element")));
        }
        Ok(WElement {
            alpha: GammaFunction(alpha),
            a,
        })
    }

    pub fn identity_element(&self) -> WElement {
        WElement {
            alpha: GammaFunction(vec![self.internal.identity_index(); self.points()]),
            a: self.space.identity_index(),
        }
    }

    // x·g for a point x and a G element index g.
    #[inline]
    fn act_point(&self, x: usize, g: usize) -> usize {
        self.space.element(g).apply(x)
    }

    pub fn mul(&self, u: &WElement, v: &WElement) -> WElement {
        let g = &self.space;
        let (a, b) = (u.a, v.a);
        let ab = g.mul(a, b);
        let kab_inv = g.inv(self.kappa[ab]);
        let left = g.mul(g.mul(kab_inv, self.mu[b]), self.kappa[a]);
        let right = g.mul(kab_inv, self.kappa[b]);
        let alpha = (0..self.points())
            .map(|x| {
                self.internal
                    .mul(u.alpha.0[self.act_point(x, left)], v.alpha.0[self.act_point(x, right)])
            })
            .collect();
        WElement {
            alpha: GammaFunction(alpha),
            a: ab,
        }
    }

    pub fn inv(&self, u: &WElement) -> WElement {
        let g = &self.space;
        let a_inv = g.inv(u.a);
        let shift = g.mul(g.mul(g.inv(self.kappa[a_inv]), g.inv(self.mu[u.a])), self.kappa[u.a]);
        let alpha = (0..self.points())
            .map(|x| self.internal.inv(u.alpha.0[self.act_point(x, shift)]))
            .collect();
        WElement {
            alpha: GammaFunction(alpha),
            a: a_inv,
        }
    }

    /// Right action on configurations: `σ'(x) = σ(x μ(a)) α(x κ(a))`.
    pub fn act(&self, sigma: &StateConfiguration, u: &WElement) -> StateConfiguration {
        let mu_a = self.mu[u.a];
        let kappa_a = self.kappa[u.a];
        StateConfiguration(
            (0..self.points())
                .map(|x| {
                    let s = sigma.0[self.act_point(x, mu_a)];
                    self.internal.element(u.alpha.0[self.act_point(x, kappa_a)]).apply(s)
                })
                .collect(),
        )
    }

    /// Isomorphism `K: W → W'` between extensions sharing `G`, `Γ` and `μ`:
    /// `⟨α(x), a⟩ ↦ ⟨α(x κ'(a)⁻¹ κ(a)), a⟩`. It intertwines the two actions on
    /// `Σ^X`, and reduces to the identity map when `κ = κ'`.
    pub fn equivalence_map(&self, target: &WGroup, u: &WElement) -> Result<WElement, ExtensionError> {
        if self.space != target.space || self.internal != target.internal || self.mu != target.mu {
            return Err(ExtensionError::MuMismatch);
        }
        let g = &self.space;
        let shift = g.mul(g.inv(target.kappa[u.a]), self.kappa[u.a]);
        let alpha = (0..self.points())
            .map(|x| u.alpha.0[self.act_point(x, shift)])
            .collect();
        Ok(WElement {
            alpha: GammaFunction(alpha),
            a: u.a,
        })
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> WElement {
        let gamma = self.internal.order();
        WElement {
            alpha: GammaFunction((0..self.points()).map(|_| rng.gen_range(0..gamma)).collect()),
            a: rng.gen_range(0..self.space.order()),
        }
    }

    pub fn random_configuration<R: Rng + ?Sized>(&self, rng: &mut R) -> StateConfiguration {
        let states = self.local_states();
        StateConfiguration((0..self.points()).map(|_| rng.gen_range(0..states)).collect())
    }

    /// Sample-based check of the group and action axioms.
    pub fn check_axioms<R: Rng + ?Sized>(&self, samples: usize, rng: &mut R) -> AxiomReport {
        let e = self.identity_element();
        let mut report = AxiomReport {
            samples,
            ..AxiomReport::default()
        };
        for _ in 0..samples {
            let u = self.random_element(rng);
            let v = self.random_element(rng);
            let w = self.random_element(rng);
            let sigma = self.random_configuration(rng);
            if self.mul(&u, &e) != u || self.mul(&e, &u) != u {
                report.identity_failures += 1;
            }
            let ui = self.inv(&u);
            if self.mul(&u, &ui) != e || self.mul(&ui, &u) != e {
                report.inverse_failures += 1;
            }
            if self.mul(&self.mul(&u, &v), &w) != self.mul(&u, &self.mul(&v, &w)) {
                report.associativity_failures += 1;
            }
            if self.act(&sigma, &self.mul(&u, &v)) != self.act(&self.act(&sigma, &u), &v)
                || self.act(&sigma, &e) != sigma
            {
                report.action_failures += 1;
            }
        }
        report
    }
}

impl FiniteGroup for WGroup {
    type Element = WElement;

    fn identity(&self) -> WElement {
        self.identity_element()
    }

    fn multiply(&self, a: &WElement, b: &WElement) -> WElement {
        self.mul(a, b)
    }

    fn invert(&self, a: &WElement) -> WElement {
        self.inv(a)
    }

    fn is_member(&self, u: &WElement) -> bool {
        u.alpha.0.len() == self.points()
            && u.alpha.0.iter().all(|&g| g < self.internal.order())
            && u.a < self.space.order()
    }
}

/// Failure counts from [`WGroup::check_axioms`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub samples: usize,
    pub identity_failures: usize,
    pub inverse_failures: usize,
    pub associativity_failures: usize,
    pub action_failures: usize,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.identity_failures == 0
            && self.inverse_failures == 0
            && self.associativity_failures == 0
            && self.action_failures == 0
    }
}

/// Writes a map table as lines `a → image`.
pub fn format_table(table: &[usize]) -> String {
    let mut out = String::new();
    for (a, img) in table.iter().enumerate() {
        writeln!(out, "{a} → {img}").unwrap();
    }
    out
}

/// Parses lines `a → image` (or `a -> image`) covering every index `0..order`.
pub fn parse_table(text: &str, order: usize) -> Result<Vec<usize>, ExtensionError> {
    let mut table = vec![None; order];
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: &str| ExtensionError::Parse {
            line: i + 1,
            reason: reason.to_string(),
        };
        let (lhs, rhs) = line
            .split_once('→')
            .or_else(|| line.split_once("->"))
            .ok_or_else(|| err("expected `a → image`"))?;
        let a: usize = lhs.trim().parse().map_err(|_| err("bad index"))?;
        let img: usize = rhs.trim().parse().map_err(|_| err("bad image"))?;
        if a >= order || img >= order {
            return Err(err("index out of range"));
        }
        if table[a].replace(img).is_some() {
            return Err(err("index listed twice"));
        }
    }
    table
        .into_iter()
        .enumerate()
        .map(|(a, v)| {
            v.ok_or(ExtensionError::Parse {
                line: 0,
                reason: format!("no entry for index {a}"),
            })
        })
        .collect()
}
