//! Group-valued connections on graphs.
//!
//! A connection stores one value per undirected edge, for the direction from
//! the lower to the higher vertex; the reverse direction is always the
//! inverse. Gauge transformations act by `P(x,y) -> u(x)⁻¹ P(x,y) u(y)`.

mod io;

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

pub use io::ConnectionText;

use crate::exact_algebra::{AlgebraError, CyclotomicInt, Representation};
use crate::graph_space::{fundamental_cycles, Graph, GraphError, SpanningTree};
use crate::group::FiniteGroup;
use crate::perm_group::{PermError, PermutationGroup};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaugeError {
    #[error("{x}-{y} is not an edge")]
    NotAnEdge { x: usize, y: usize },
    #[error("cycle is empty")]
    EmptyCycle,
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("value for {0} is not a group element")]
    NotMember(String),
    #[error("graph has no faces")]
    MissingFaces,
    #[error("representation is defined on a different group")]
    GroupMismatch,
    #[error("edge {0}-{1} assigned twice")]
    DuplicateAssignment(usize, usize),
    #[error("edge {0}-{1} has no assignment")]
    MissingAssignment(usize, usize),
    #[error("connection file line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] PermError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Vertex function `u: X -> H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeTransformation<E> {
    pub values: Vec<E>,
}

impl GaugeTransformation<usize> {
    /// Uniform random element of `H` at every vertex.
    pub fn random<R: Rng + ?Sized>(vertices: usize, group: &PermutationGroup, rng: &mut R) -> Self {
        Self {
            values: (0..vertices).map(|_| rng.gen_range(0..group.order())).collect(),
        }
    }
}

/// Outcome of [`Connection::is_trivial`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Triviality<E> {
    /// `P(x,y) = p(x)⁻¹ p(y)` with `p(0) = e`.
    Trivial { potential: Vec<E> },
    /// First fundamental cycle whose holonomy is not the identity.
    NonTrivial { cycle: Vec<usize>, holonomy: E },
}

#[derive(Debug)]
pub struct Connection<H: FiniteGroup> {
    graph: Arc<Graph>,
    group: Arc<H>,
    values: Vec<H::Element>,
}

impl<H: FiniteGroup> Clone for Connection<H> {
    fn clone(&self) -> Self {
        Self {
            graph: Arc::clone(&self.graph),
            group: Arc::clone(&self.group),
            values: self.values.clone(),
        }
    }
}

impl<H: FiniteGroup> PartialEq for Connection<H> {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.values == other.values
    }
}

impl<H: FiniteGroup> Connection<H> {
    /// `values[i]` is `P(x,y)` for the `i`-th edge `(x, y)`, `x < y`.
    pub fn new(graph: Arc<Graph>, group: Arc<H>, values: Vec<H::Element>) -> Result<Self, GaugeError> {
        if values.len() != graph.edge_count() {
            return Err(GaugeError::LengthMismatch {
                expected: graph.edge_count(),
                found: values.len(),
            });
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| !group.is_member(v)) {
            let (x, y) = graph.edges()[i];
            return Err(GaugeError::NotMember(format!("edge {x}-{y}: {v:?}")));
        }
        Ok(Self { graph, group, values })
    }

    /// Builds from `f(x, y)` evaluated on each edge with `x < y`.
    pub fn from_fn(
        graph: Arc<Graph>,
        group: Arc<H>,
        mut f: impl FnMut(usize, usize) -> H::Element,
    ) -> Result<Self, GaugeError> {
        let values = graph.edges().iter().map(|&(x, y)| f(x, y)).collect();
        Self::new(graph, group, values)
    }

    /// Every edge carries the identity.
    pub fn identity(graph: Arc<Graph>, group: Arc<H>) -> Self {
        let e = group.identity();
        let values = vec![e; graph.edge_count()];
        Self { graph, group, values }
    }

    /// `P(x,y) = p(x)⁻¹ p(y)`.
    pub fn make_trivial(graph: Arc<Graph>, group: Arc<H>, potential: &[H::Element]) -> Result<Self, GaugeError> {
        check_vertex_function(&graph, &*group, potential)?;
        let values = graph
            .edges()
            .iter()
            .map(|&(x, y)| group.multiply(&group.invert(&potential[x]), &potential[y]))
            .collect();
        Ok(Self { graph, group, values })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn group(&self) -> &Arc<H> {
        &self.group
    }

    /// Stored values, one per edge in the graph's edge order.
    pub fn values(&self) -> &[H::Element] {
        &self.values
    }

    /// `P(x, y)` for either orientation of an edge.
    pub fn value(&self, x: usize, y: usize) -> Result<H::Element, GaugeError> {
        let i = self.graph.edge_index(x, y).ok_or(GaugeError::NotAnEdge { x, y })?;
        Ok(if x < y {
            self.values[i].clone()
        } else {
            self.group.invert(&self.values[i])
        })
    }

    /// Replaces `P(x, y)` (and hence `P(y, x)`).
    pub fn with_value(&self, x: usize, y: usize, h: H::Element) -> Result<Self, GaugeError> {
        let i = self.graph.edge_index(x, y).ok_or(GaugeError::NotAnEdge { x, y })?;
        if !self.group.is_member(&h) {
            return Err(GaugeError::NotMember(format!("edge {x}-{y}: {h:?}")));
        }
        let mut out = self.clone();
        out.values[i] = if x < y { h } else { self.group.invert(&h) };
        Ok(out)
    }

    /// `P(x,y) -> u(x)⁻¹ P(x,y) u(y)`.
    pub fn gauge_transform(&self, u: &GaugeTransformation<H::Element>) -> Result<Self, GaugeError> {
        check_vertex_function(&self.graph, &*self.group, &u.values)?;
        let g = &*self.group;
        let values = self
            .graph
            .edges()
            .iter()
            .zip(&self.values)
            .map(|(&(x, y), p)| g.multiply(&g.multiply(&g.invert(&u.values[x]), p), &u.values[y]))
            .collect();
        Ok(Self {
            graph: Arc::clone(&self.graph),
            group: Arc::clone(&self.group),
            values,
        })
    }

    /// `P(x₁,x₂) P(x₂,x₃) ⋯ P(x_k,x₁)`. A repeated final vertex equal to the
    /// first is accepted and ignored.
    pub fn holonomy(&self, cycle: &[usize]) -> Result<H::Element, GaugeError> {
        let cycle = match cycle {
            [] => return Err(GaugeError::EmptyCycle),
            [first, rest @ .., last] if first == last && !rest.is_empty() => &cycle[..cycle.len() - 1],
            _ => cycle,
        };
        let k = cycle.len();
        let mut acc = self.group.identity();
        for i in 0..k {
            let p = self.value(cycle[i], cycle[(i + 1) % k])?;
            acc = self.group.multiply(&acc, &p);
        }
        Ok(acc)
    }

    /// Whether the connection is pure gauge. Walks a breadth-first spanning
    /// tree from vertex 0 to build `p`, then checks every fundamental cycle.
    pub fn is_trivial(&self) -> Result<Triviality<H::Element>, GaugeError> {
        let tree = SpanningTree::new(&self.graph)?;
        let g = &*self.group;
        let mut potential = vec![g.identity(); self.graph.vertex_count()];
        for &y in &tree.order[1..] {
            let x = tree.parent[y].expect("non-root vertex has a parent");
            potential[y] = g.multiply(&potential[x], &self.value(x, y)?);
        }
        let e = g.identity();
        for cycle in fundamental_cycles(&self.graph)? {
            let holonomy = self.holonomy(&cycle)?;
            if holonomy != e {
                return Ok(Triviality::NonTrivial { cycle, holonomy });
            }
        }
        Ok(Triviality::Trivial { potential })
    }
}

fn check_vertex_function<H: FiniteGroup>(graph: &Graph, group: &H, values: &[H::Element]) -> Result<(), GaugeError> {
    if values.len() != graph.vertex_count() {
        return Err(GaugeError::LengthMismatch {
            expected: graph.vertex_count(),
            found: values.len(),
        });
    }
    if let Some((x, v)) = values.iter().enumerate().find(|(_, v)| !group.is_member(v)) {
        return Err(GaugeError::NotMember(format!("vertex {x}: {v:?}")));
    }
    Ok(())
}

impl Connection<PermutationGroup> {
    /// Independent uniform values on every edge.
    pub fn random<R: Rng + ?Sized>(graph: Arc<Graph>, group: Arc<PermutationGroup>, rng: &mut R) -> Self {
        let values = (0..graph.edge_count())
            .map(|_| rng.gen_range(0..group.order()))
            .collect();
        Self { graph, group, values }
    }

    /// Conjugacy class of the holonomy, as element indices.
    pub fn curvature_class(&self, cycle: &[usize]) -> Result<BTreeSet<usize>, GaugeError> {
        Ok(self.group.conjugacy_class_indices(self.holonomy(cycle)?))
    }

    /// `Σ_f 2·dim ρ − (χ(γ_f) + χ(γ_f⁻¹))` over the graph's faces.
    pub fn wilson_action(&self, rep: &Representation) -> Result<CyclotomicInt, GaugeError> {
        self.wilson_action_on(self.graph.faces(), rep)
    }

    /// Wilson action over an explicit face list. Each face is read from its
    /// lowest vertex in the given orientation; the summand is symmetric under
    /// reversal, so orientation does not matter.
    pub fn wilson_action_on(&self, faces: &[Vec<usize>], rep: &Representation) -> Result<CyclotomicInt, GaugeError> {
        if faces.is_empty() {
            return Err(GaugeError::MissingFaces);
        }
        if **rep.group() != *self.group {
            return Err(GaugeError::GroupMismatch);
        }
        let m = rep.modulus();
        let two_dim = CyclotomicInt::from_int(m, 2 * rep.degree() as i64);
        let mut total = CyclotomicInt::zero(m);
        for face in faces {
            let start = (0..face.len()).min_by_key(|&i| face[i]).ok_or(GaugeError::EmptyCycle)?;
            let rotated: Vec<usize> = face[start..].iter().chain(&face[..start]).copied().collect();
            let h = self.holonomy(&rotated)?;
            let chi = &rep.character_value(h) + &rep.character_value(self.group.inv(h));
            total = &total + &(&two_dim - &chi);
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_space::Space;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn setup(space: Space, spec: &str) -> (Arc<Graph>, Arc<PermutationGroup>) {
        (
            Arc::new(space.graph()),
            Arc::new(PermutationGroup::from_spec(spec).unwrap()),
        )
    }

    #[test]
    fn identity_gauge_is_a_no_op() {
        let (g, h) = setup(Space::Hexahedron, "S3");
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = Connection::random(g.clone(), h, &mut rng);
        let u = GaugeTransformation {
            values: vec![0; g.vertex_count()],
        };
        assert_eq!(c.gauge_transform(&u).unwrap(), c);
    }

    #[test]
    fn trivial_connection_transforms_to_trivial() {
        let (g, h) = setup(Space::Octahedron, "S3");
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = GaugeTransformation::random(g.vertex_count(), &h, &mut rng).values;
        let u = GaugeTransformation::random(g.vertex_count(), &h, &mut rng);
        let c = Connection::make_trivial(g.clone(), h.clone(), &p).unwrap();
        let moved: Vec<usize> = p.iter().zip(&u.values).map(|(&a, &b)| h.mul(a, b)).collect();
        assert_eq!(
            c.gauge_transform(&u).unwrap(),
            Connection::make_trivial(g, h, &moved).unwrap()
        );
    }

    #[test]
    fn holonomy_conjugates_under_gauge() {
        let (g, h) = setup(Space::Triangle, "S3");
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cycle = [0, 1, 2];
        for _ in 0..100 {
            let c = Connection::random(g.clone(), h.clone(), &mut rng);
            let u = GaugeTransformation::random(3, &h, &mut rng);
            let before = c.holonomy(&cycle).unwrap();
            let after = c.gauge_transform(&u).unwrap().holonomy(&cycle).unwrap();
            assert_eq!(after, h.mul(h.mul(h.inv(u.values[0]), before), u.values[0]));
            assert_eq!(
                c.curvature_class(&cycle).unwrap(),
                c.gauge_transform(&u).unwrap().curvature_class(&cycle).unwrap()
            );
        }
    }

    #[test]
    fn holonomy_by_hand_on_c4_triangle() {
        let (g, h) = setup(Space::Triangle, "C4");
        // edges (0,1), (0,2), (1,2); P(0,1)=γ, P(1,2)=γ², P(0,2)=γ³ so P(2,0)=γ
        // and the loop gives γ⁴ = e
        let c = Connection::new(g, h.clone(), vec![1, 3, 2]).unwrap();
        assert_eq!(c.holonomy(&[0, 1, 2]).unwrap(), 0);
        assert_eq!(c.holonomy(&[0, 1, 2, 0]).unwrap(), 0);
        assert_eq!(c.holonomy(&[0, 1]).unwrap(), 0);
        assert_eq!(c.holonomy(&[0, 2, 1]).unwrap(), 0);
        assert_eq!(
            c.holonomy(&[0, 1, 1]).unwrap_err(),
            GaugeError::NotAnEdge { x: 1, y: 1 }
        );
        assert_eq!(c.holonomy(&[]).unwrap_err(), GaugeError::EmptyCycle);
        // abelian: curvature is the singleton holonomy
        let c = c.with_value(1, 2, 1).unwrap();
        let hol = c.holonomy(&[0, 1, 2]).unwrap();
        assert_eq!(c.curvature_class(&[0, 1, 2]).unwrap(), BTreeSet::from([hol]));
    }

    #[test]
    fn reversed_cycle_gives_inverse() {
        let (g, h) = setup(Space::Dodecahedron, "S3");
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let c = Connection::random(g.clone(), h.clone(), &mut rng);
        for cycle in fundamental_cycles(&g).unwrap() {
            // same base point, opposite direction
            let rev: Vec<usize> = cycle[..1].iter().chain(cycle[1..].iter().rev()).copied().collect();
            assert_eq!(c.holonomy(&rev).unwrap(), h.inv(c.holonomy(&cycle).unwrap()));
        }
    }

    #[test]
    fn triviality_round_trip_and_witness() {
        let (g, h) = setup(Space::Icosahedron, "S3");
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = GaugeTransformation::random(g.vertex_count(), &h, &mut rng).values;
        let c = Connection::make_trivial(g.clone(), h.clone(), &p).unwrap();
        let Triviality::Trivial { potential } = c.is_trivial().unwrap() else {
            panic!("expected trivial");
        };
        assert_eq!(potential[0], 0);
        assert_eq!(Connection::make_trivial(g.clone(), h.clone(), &potential).unwrap(), c);
        // recovered potential differs from p by the constant p(0)
        for x in 0..g.vertex_count() {
            assert_eq!(potential[x], h.mul(h.inv(p[0]), p[x]));
        }
        let id = Connection::identity(g.clone(), h.clone());
        assert_eq!(
            id.is_trivial().unwrap(),
            Triviality::Trivial {
                potential: vec![0; g.vertex_count()]
            }
        );
    }

    #[test]
    fn single_bad_edge_on_triangle() {
        let (g, h) = setup(Space::Triangle, "C4");
        let c = Connection::identity(g, h).with_value(1, 2, 1).unwrap();
        assert_eq!(
            c.is_trivial().unwrap(),
            Triviality::NonTrivial {
                cycle: vec![1, 0, 2],
                holonomy: 3,
            }
        );
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = Arc::new(Graph::new(4, [(0, 1), (2, 3)]).unwrap());
        let c = Connection::identity(g, Arc::new(PermutationGroup::cyclic(2)));
        assert_eq!(c.is_trivial().unwrap_err(), GaugeError::Graph(GraphError::Disconnected));
    }

    #[test]
    fn wilson_action_on_a_square() {
        let g = Arc::new(
            Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
                .unwrap()
                .with_faces(vec![vec![0, 1, 2, 3]])
                .unwrap(),
        );
        let h = Arc::new(PermutationGroup::cyclic(4));
        let rep = Representation::character(&h, 4, &[1]).unwrap();
        let c = Connection::identity(g.clone(), h.clone()).with_value(0, 1, 1).unwrap();
        let s = c.wilson_action(&rep).unwrap();
        assert_eq!(s, CyclotomicInt::from_i64s(&[2, -1, 0, -1]).unwrap());
        assert!((s.to_complex().re - 2.0).abs() < 1e-12);
        assert!(Connection::identity(g.clone(), h.clone())
            .wilson_action(&rep)
            .unwrap()
            .is_zero());
        // other orientation, other starting vertex
        let s_rev = c.wilson_action_on(&[vec![2, 1, 0, 3]], &rep).unwrap();
        assert_eq!(s_rev, s);
        let wrong = Representation::character(&Arc::new(PermutationGroup::cyclic(2)), 2, &[1]).unwrap();
        assert_eq!(c.wilson_action(&wrong).unwrap_err(), GaugeError::GroupMismatch);
        let bare = Connection::identity(Arc::new(Space::Tetrahedron.graph()), h);
        assert_eq!(bare.wilson_action(&rep).unwrap_err(), GaugeError::MissingFaces);
    }

    #[test]
    fn wilson_action_is_gauge_invariant() {
        let (g, h) = setup(Space::ToricSquare(3), "S3");
        let rep = Representation::permutation(&h, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let c = Connection::random(g.clone(), h.clone(), &mut rng);
        let s = c.wilson_action(&rep).unwrap();
        for _ in 0..100 {
            let u = GaugeTransformation::random(g.vertex_count(), &h, &mut rng);
            assert_eq!(c.gauge_transform(&u).unwrap().wilson_action(&rep).unwrap(), s);
        }
        let reversed: Vec<Vec<usize>> = g.faces().iter().map(|f| f.iter().rev().copied().collect()).collect();
        assert_eq!(c.wilson_action_on(&reversed, &rep).unwrap(), s);
    }

    #[test]
    fn w_valued_connections_support_holonomy() {
        use crate::extension::WGroup;
        let space = PermutationGroup::cyclic(3);
        let w = Arc::new(WGroup::with_km(space, PermutationGroup::cyclic(2), 1, 1).unwrap());
        let g = Arc::new(Space::Triangle.graph());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c = Connection::from_fn(g.clone(), w.clone(), |_, _| w.random_element(&mut rng)).unwrap();
        let u = GaugeTransformation {
            values: (0..3).map(|_| w.random_element(&mut rng)).collect(),
        };
        let before = c.holonomy(&[0, 1, 2]).unwrap();
        let after = c.gauge_transform(&u).unwrap().holonomy(&[0, 1, 2]).unwrap();
        assert_eq!(after, w.conjugate(&before, &u.values[0]));
        let p: Vec<_> = (0..3).map(|_| w.random_element(&mut rng)).collect();
        let t = Connection::make_trivial(g, w.clone(), &p).unwrap();
        assert!(matches!(t.is_trivial().unwrap(), Triviality::Trivial { .. }));
    }
}
