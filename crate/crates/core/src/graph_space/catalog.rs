//! Named lattices.
//!
//! `toric_graphene(n, m)` is a brick-wall honeycomb on an `n x m` torus:
//! vertex `(i, j)` has index `i * m + j`, is joined horizontally to
//! `(i, j ± 1 mod m)`, and vertically to `(i + 1 mod n, j)` when `i + j` is
//! even. Both `n` and `m` must be even so the parity pattern closes up.

use std::fmt;
use std::str::FromStr;

use super::buckyball::BUCKYBALL_EDGES;
use super::{Graph, GraphError};

/// Catalog identifier for a discrete space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Atom,
    Dimer,
    Triangle,
    Polygon(usize),
    Tetrahedron,
    Octahedron,
    Hexahedron,
    Icosahedron,
    Dodecahedron,
    Buckyball,
    ToricSquare(usize),
    ToricGraphene(usize, usize),
}

impl Space {
    /// Builds from a catalog name and integer parameters.
    pub fn new(name: &str, params: &[usize]) -> Result<Self, GraphError> {
        let arity = |k: usize| -> Result<(), GraphError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(GraphError::InvalidParams {
                    name: name.to_string(),
                    reason: format!("expected {k} parameter(s), got {}", params.len()),
                })
            }
        };
        let invalid = |reason: &str| GraphError::InvalidParams {
            name: name.to_string(),
            reason: reason.to_string(),
        };
        let space = match name {
            "atom" => Space::Atom,
            "dimer" => Space::Dimer,
            "triangle" => Space::Triangle,
            "tetrahedron" => Space::Tetrahedron,
            "octahedron" => Space::Octahedron,
            "hexahedron" | "cube" => Space::Hexahedron,
            "icosahedron" => Space::Icosahedron,
            "dodecahedron" => Space::Dodecahedron,
            "buckyball" => Space::Buckyball,
            "polygon" => {
                arity(1)?;
                if params[0] < 3 {
                    return Err(invalid("polygon needs n >= 3"));
                }
                Space::Polygon(params[0])
            }
            "toric_square" => {
                arity(1)?;
                if params[0] < 3 {
                    return Err(invalid("toric square needs n >= 3"));
                }
                Space::ToricSquare(params[0])
            }
            "toric_graphene" => {
                arity(2)?;
                let (n, m) = (params[0], params[1]);
                if n < 2 || n % 2 != 0 || m < 4 || m % 2 != 0 {
                    return Err(invalid("toric graphene needs even n >= 2 and even m >= 4"));
                }
                Space::ToricGraphene(n, m)
            }
            _ => return Err(GraphError::UnknownSpace(name.to_string())),
        };
        if !matches!(
            space,
            Space::Polygon(_) | Space::ToricSquare(_) | Space::ToricGraphene(..)
        ) {
            arity(0)?;
        }
        Ok(space)
    }

    /// Vertex and edge counts as tabulated for the catalog.
    pub fn expected_counts(&self) -> (usize, usize) {
        match *self {
            Space::Atom => (1, 0),
            Space::Dimer => (2, 1),
            Space::Triangle => (3, 3),
            Space::Polygon(n) => (n, n),
            Space::Tetrahedron => (4, 6),
            Space::Octahedron => (6, 12),
            Space::Hexahedron => (8, 12),
            Space::Icosahedron => (12, 30),
            Space::Dodecahedron => (20, 30),
            Space::Buckyball => (60, 90),
            Space::ToricSquare(n) => (n * n, 2 * n * n),
            Space::ToricGraphene(n, m) => (n * m, 3 * n * m / 2),
        }
    }

    /// Tabulated automorphism group order.
    pub fn expected_aut_order(&self) -> u64 {
        match *self {
            Space::Atom => 1,
            Space::Dimer => 2,
            Space::Triangle => 6,
            Space::Polygon(n) => 2 * n as u64,
            Space::Tetrahedron => 24,
            Space::Octahedron | Space::Hexahedron => 48,
            Space::Icosahedron | Space::Dodecahedron | Space::Buckyball => 120,
            Space::ToricSquare(4) => 384,
            Space::ToricSquare(n) => 8 * (n * n) as u64,
            Space::ToricGraphene(n, m) => 2 * (n * m) as u64,
        }
    }

    pub fn graph(&self) -> Graph {
        build(*self).expect("catalog graphs are well formed")
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Atom => f.write_str("atom"),
            Space::Dimer => f.write_str("dimer"),
            Space::Triangle => f.write_str("triangle"),
            Space::Polygon(n) => write!(f, "polygon({n})"),
            Space::Tetrahedron => f.write_str("tetrahedron"),
            Space::Octahedron => f.write_str("octahedron"),
            Space::Hexahedron => f.write_str("hexahedron"),
            Space::Icosahedron => f.write_str("icosahedron"),
            Space::Dodecahedron => f.write_str("dodecahedron"),
            Space::Buckyball => f.write_str("buckyball"),
            Space::ToricSquare(n) => write!(f, "toric_square({n})"),
            Space::ToricGraphene(n, m) => write!(f, "toric_graphene({n},{m})"),
        }
    }
}

impl FromStr for Space {
    type Err = GraphError;

    /// Accepts `name`, `name(a)` or `name(a,b)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, params) = match s.find('(') {
            Some(open) => {
                let close = s
                    .strip_suffix(')')
                    .ok_or_else(|| GraphError::UnknownSpace(s.to_string()))?;
                let params = close[open + 1..]
                    .split(',')
                    .map(|p| {
                        p.trim().parse::<usize>().map_err(|_| GraphError::InvalidParams {
                            name: s[..open].to_string(),
                            reason: format!("`{}` is not a nonnegative integer", p.trim()),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                (&s[..open], params)
            }
            None => (s, Vec::new()),
        };
        Space::new(name, &params)
    }
}

/// Catalog constructor by name.
pub fn make_space(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    build(Space::new(name, params)?)
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn build(space: Space) -> Result<Graph, GraphError> {
    match space {
        Space::Atom => Graph::new(1, []),
        Space::Dimer => Graph::new(2, [(0, 1)]),
        Space::Triangle => build(Space::Polygon(3)),
        Space::Polygon(n) => Graph::new(n, cycle_edges(n))?.with_faces(vec![(0..n).collect()]),
        Space::Tetrahedron => Graph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))),
        Space::Octahedron => {
            // K6 minus the perfect matching {0-1, 2-3, 4-5}
            let edges = (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
            Graph::new(6, edges)
        }
        Space::Hexahedron => {
            let edges = (0..8usize)
                .flat_map(|u| [1, 2, 4].map(|bit| (u, u ^ bit)))
                .filter(|&(u, v)| u < v);
            let faces = vec![
                vec![0, 1, 3, 2],
                vec![4, 5, 7, 6],
                vec![0, 1, 5, 4],
                vec![2, 3, 7, 6],
                vec![0, 2, 6, 4],
                vec![1, 3, 7, 5],
            ];
            Graph::new(8, edges)?.with_faces(faces)
        }
        Space::Icosahedron => Graph::new(12, icosahedron_edges()),
        Space::Dodecahedron => {
            // outer 5-cycle 0..5, spokes to the even vertices of the
            // 10-cycle 5..15, spokes from its odd vertices to the inner
            // 5-cycle 15..20
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, 5 + 2 * i));
                edges.push((5 + 2 * i + 1, 15 + i));
                edges.push((15 + i, 15 + (i + 1) % 5));
            }
            for j in 0..10 {
                edges.push((5 + j, 5 + (j + 1) % 10));
            }
            Graph::new(20, edges)
        }
        Space::Buckyball => Graph::new(60, BUCKYBALL_EDGES),
        Space::ToricSquare(n) => {
            let id = |i: usize, j: usize| (i % n) * n + (j % n);
            let mut edges = Vec::new();
            let mut faces = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    edges.push((id(i, j), id(i + 1, j)));
                    edges.push((id(i, j), id(i, j + 1)));
                    faces.push(vec![id(i, j), id(i, j + 1), id(i + 1, j + 1), id(i + 1, j)]);
                }
            }
            Graph::new(n * n, edges)?.with_faces(faces)
        }
        Space::ToricGraphene(n, m) => {
            let id = |i: usize, j: usize| (i % n) * m + (j % m);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in 0..m {
                    edges.push((id(i, j), id(i, j + 1)));
                    if (i + j) % 2 == 0 {
                        edges.push((id(i, j), id(i + 1, j)));
                    }
                }
            }
            Graph::new(n * m, edges)
        }
    }
}

/// Icosahedron: apex 0, upper ring 1..6, lower ring 6..11, apex 11.
pub(crate) fn icosahedron_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((0, 1 + i));
        edges.push((1 + i, 1 + (i + 1) % 5));
        edges.push((1 + i, 6 + i));
        edges.push((1 + i, 6 + (i + 1) % 5));
        edges.push((6 + i, 6 + (i + 1) % 5));
        edges.push((11, 6 + i));
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: [&str; 13] = [
        "atom",
        "dimer",
        "triangle",
        "polygon(5)",
        "tetrahedron",
        "octahedron",
        "hexahedron",
        "icosahedron",
        "dodecahedron",
        "buckyball",
        "toric_square(3)",
        "toric_square(4)",
        "toric_graphene(4,6)",
    ];

    #[test]
    fn counts_match_catalog() {
        for name in ALL {
            let space: Space = name.parse().unwrap();
            let g = space.graph();
            assert_eq!((g.vertex_count(), g.edge_count()), space.expected_counts(), "{name}");
            assert_eq!(space.to_string(), name);
        }
    }

    #[test]
    fn named_examples() {
        let bucky = make_space("buckyball", &[]).unwrap();
        assert_eq!((bucky.vertex_count(), bucky.edge_count()), (60, 90));
        assert_eq!(bucky.regular_degree(), Some(3));
        let t4 = make_space("toric_square", &[4]).unwrap();
        assert_eq!((t4.vertex_count(), t4.edge_count()), (16, 32));
        let atom = make_space("atom", &[]).unwrap();
        assert_eq!((atom.vertex_count(), atom.edge_count()), (1, 0));
    }

    #[test]
    fn regularity() {
        for (name, deg) in [
            ("tetrahedron", 3),
            ("octahedron", 4),
            ("hexahedron", 3),
            ("icosahedron", 5),
            ("dodecahedron", 3),
            ("toric_square(5)", 4),
            ("toric_graphene(2,4)", 3),
            ("toric_graphene(6,8)", 3),
        ] {
            let g = name.parse::<Space>().unwrap().graph();
            assert_eq!(g.regular_degree(), Some(deg), "{name}");
            assert!(g.is_connected(), "{name}");
        }
    }

    #[test]
    fn rejects_bad_names_and_params() {
        assert!(matches!(make_space("moebius", &[]), Err(GraphError::UnknownSpace(_))));
        assert!(make_space("polygon", &[2]).is_err());
        assert!(make_space("polygon", &[]).is_err());
        assert!(make_space("toric_square", &[2]).is_err());
        assert!(make_space("toric_graphene", &[3, 4]).is_err());
        assert!(make_space("atom", &[1]).is_err());
        assert!("polygon(x)".parse::<Space>().is_err());
        assert!("polygon(5".parse::<Space>().is_err());
    }

    #[test]
    fn buckyball_literal_matches_truncated_icosahedron() {
        // vertices of the truncated icosahedron are directed icosahedron
        // edges (u, v); (u, v) meets (v, u) and (u, w) for w adjacent to v
        let ico = Graph::new(12, icosahedron_edges()).unwrap();
        let mut darts = Vec::new();
        for u in 0..12 {
            for &v in ico.neighbors(u) {
                darts.push((u, v));
            }
        }
        let pos = |d: (usize, usize)| darts.iter().position(|&x| x == d).unwrap();
        let mut edges = Vec::new();
        for &(u, v) in &darts {
            edges.push((pos((u, v)), pos((v, u))));
            for &w in ico.neighbors(u) {
                if ico.has_edge(v, w) {
                    edges.push((pos((u, v)), pos((u, w))));
                }
            }
        }
        edges.retain(|&(a, b)| a < b);
        let rebuilt = Graph::new(60, edges).unwrap();
        assert_eq!(rebuilt, Space::Buckyball.graph());
    }

    #[test]
    fn toric_square_faces_are_unit_squares() {
        let g = Space::ToricSquare(3).graph();
        assert_eq!(g.faces().len(), 9);
        assert!(g.faces().iter().all(|f| f.len() == 4));
    }
}
