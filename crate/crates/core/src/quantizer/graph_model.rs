//! Local quantum models on vertex-transitive regular graphs.
//!
//! Each vertex `x` has the transitions `E_x`: a self-loop and one edge per
//! neighbour. A rule assigns a `Γ` element to every transition at the
//! reference vertex 0; it must be constant on the orbits of the stabilizer
//! `Aut(X)_0`. The rule at any other vertex `x` is transported by an
//! automorphism `g` with `0·g = x`; orbit constancy makes the choice of `g`
//! irrelevant.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{Pattern, QuantizerError};
use crate::exact_algebra::{GroupAlgebraElement, Representation};
use crate::graph_space::{automorphism_group, Graph};
use crate::perm_group::PermutationGroup;

#[derive(Debug, Clone)]
pub struct GraphModel {
    graph: Arc<Graph>,
    aut: Arc<PermutationGroup>,
    gamma: Arc<PermutationGroup>,
    stay: usize,
    /// `steps[x][j]`: `Γ` element for `x -> neighbors(x)[j]`.
    steps: Vec<Vec<usize>>,
}

impl GraphModel {
    /// `rule[j]` is the `Γ` element for `0 -> neighbors(0)[j]`, `stay` the
    /// one for the self-loop.
    pub fn new(
        graph: Arc<Graph>,
        gamma: Arc<PermutationGroup>,
        stay: usize,
        rule: Vec<usize>,
    ) -> Result<Self, QuantizerError> {
        let aut = Arc::new(automorphism_group(&graph)?);
        Self::with_automorphisms(graph, aut, gamma, stay, rule)
    }

    /// As [`GraphModel::new`] with a precomputed `Aut(X)`.
    pub fn with_automorphisms(
        graph: Arc<Graph>,
        aut: Arc<PermutationGroup>,
        gamma: Arc<PermutationGroup>,
        stay: usize,
        rule: Vec<usize>,
    ) -> Result<Self, QuantizerError> {
        let orbit = aut.orbit(0)?;
        if orbit.len() != graph.vertex_count() {
            return Err(QuantizerError::NotVertexTransitive {
                orbit_size: orbit.len(),
                vertices: graph.vertex_count(),
            });
        }
        let nb0 = graph.neighbors(0);
        if rule.len() != nb0.len() {
            return Err(QuantizerError::RuleLength {
                expected: nb0.len(),
                found: rule.len(),
            });
        }
        if let Some(&h) = std::iter::once(&stay).chain(&rule).find(|&&h| h >= gamma.order()) {
            return Err(QuantizerError::ElementOutOfRange(h));
        }
        let rule_at = |y: usize| rule[nb0.binary_search(&y).expect("automorphisms fix the neighbourhood")];

        let stab = aut.stabilizer(0)?;
        for g in stab.elements() {
            for &y in nb0 {
                if rule_at(g.apply(y)) != rule_at(y) {
                    let orbit: BTreeSet<usize> = stab.elements().iter().map(|s| s.apply(y)).collect();
                    return Err(QuantizerError::NotOrbitConstant {
                        orbit: orbit.into_iter().collect(),
                        witness: g.images().to_vec(),
                    });
                }
            }
        }

        // transport[x]: first automorphism in enumeration order with 0·g = x
        let mut transport: Vec<Option<usize>> = vec![None; graph.vertex_count()];
        for (i, g) in aut.elements().iter().enumerate() {
            transport[g.apply(0)].get_or_insert(i);
        }
        let steps = (0..graph.vertex_count())
            .map(|x| {
                let g_inv = aut.element(transport[x].expect("transitive")).inverse();
                graph.neighbors(x).iter().map(|&y| rule_at(g_inv.apply(y))).collect()
            })
            .collect();
        Ok(Self {
            graph,
            aut,
            gamma,
            stay,
            steps,
        })
    }

    /// Builds the rule from one `Γ` element per neighbour orbit, in the order
    /// returned by [`GraphModel::neighbour_orbits`] at vertex 0.
    pub fn from_orbit_values(
        graph: Arc<Graph>,
        gamma: Arc<PermutationGroup>,
        stay: usize,
        orbit_values: &[usize],
    ) -> Result<Self, QuantizerError> {
        let aut = Arc::new(automorphism_group(&graph)?);
        let orbits = neighbour_orbits_of(&graph, &aut, 0)?;
        if orbits.len() != orbit_values.len() {
            return Err(QuantizerError::RuleLength {
                expected: orbits.len(),
                found: orbit_values.len(),
            });
        }
        let rule = graph
            .neighbors(0)
            .iter()
            .map(|&y| {
                let k = orbits.iter().position(|o| o.contains(&y)).expect("partition");
                orbit_values[k]
            })
            .collect();
        Self::with_automorphisms(graph, aut, gamma, stay, rule)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn automorphisms(&self) -> &Arc<PermutationGroup> {
        &self.aut
    }

    pub fn gamma(&self) -> &Arc<PermutationGroup> {
        &self.gamma
    }

    /// `Γ` element for the transition `x -> y` (`y == x` is the self-loop).
    pub fn step(&self, x: usize, y: usize) -> Option<usize> {
        if x == y {
            return Some(self.stay);
        }
        let j = self.graph.neighbors(x).binary_search(&y).ok()?;
        Some(self.steps[x][j])
    }

    /// Orbits of `Aut(X)_x` on the neighbours of `x`, ordered by least
    /// element.
    pub fn neighbour_orbits(&self, x: usize) -> Result<Vec<BTreeSet<usize>>, QuantizerError> {
        neighbour_orbits_of(&self.graph, &self.aut, x)
    }
}

fn neighbour_orbits_of(
    graph: &Graph,
    aut: &PermutationGroup,
    x: usize,
) -> Result<Vec<BTreeSet<usize>>, QuantizerError> {
    if x >= graph.vertex_count() {
        return Err(QuantizerError::VertexOutOfRange(x));
    }
    let stab = aut.stabilizer(x)?;
    let mut orbits: Vec<BTreeSet<usize>> = Vec::new();
    for &y in graph.neighbors(x) {
        if orbits.iter().any(|o| o.contains(&y)) {
            continue;
        }
        orbits.push(stab.elements().iter().map(|g| g.apply(y)).collect());
    }
    Ok(orbits)
}

/// Orbits of the stabilizer of `vertex` on `E_vertex`, each transition named
/// by its target: the self-loop `{vertex}` first, then the neighbour orbits.
pub fn stabilizer_orbits(model: &GraphModel, vertex: usize) -> Result<Vec<BTreeSet<usize>>, QuantizerError> {
    let mut out = vec![BTreeSet::from([vertex])];
    out.extend(model.neighbour_orbits(vertex)?);
    Ok(out)
}

/// Per-vertex path sums in `Z[Γ]` after `t` steps. Sources are
/// `(vertex, Γ element)` pairs; each step multiplies on the right by the
/// transition's element.
pub fn amplitude_graph_dp(
    model: &GraphModel,
    sources: &[(usize, usize)],
    t: u64,
) -> Result<Vec<GroupAlgebraElement>, QuantizerError> {
    if sources.is_empty() {
        return Err(QuantizerError::NoSources);
    }
    let n = model.graph.vertex_count();
    let gamma = &model.gamma;
    let mut cur = vec![GroupAlgebraElement::zero(gamma); n];
    for &(x, h) in sources {
        if x >= n {
            return Err(QuantizerError::VertexOutOfRange(x));
        }
        if h >= gamma.order() {
            return Err(QuantizerError::ElementOutOfRange(h));
        }
        cur[x].add_to(h, &1.into());
    }
    for _ in 0..t {
        let mut next = vec![GroupAlgebraElement::zero(gamma); n];
        for x in 0..n {
            if cur[x].is_zero() {
                continue;
            }
            next[x] = next[x]
                .checked_add(&cur[x].right_mul_element(model.stay))
                .expect("same group");
            for (j, &y) in model.graph.neighbors(x).iter().enumerate() {
                next[y] = next[y]
                    .checked_add(&cur[x].right_mul_element(model.steps[x][j]))
                    .expect("same group");
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// Scalar pattern over vertices under a one-dimensional representation of
/// `Γ`, evaluated at `w = exp(2πi root / M)`.
pub fn graph_pattern(
    amplitudes: &[GroupAlgebraElement],
    rep: &Representation,
    root: usize,
) -> Result<Pattern, QuantizerError> {
    let scalars = amplitudes
        .iter()
        .enumerate()
        .map(|(x, a)| Ok((x as i64, rep.evaluate_scalar(a)?)))
        .collect::<Result<Vec<_>, QuantizerError>>()?;
    Pattern::from_amplitudes(scalars, root)
}
