//! Discrete spaces as finite simple graphs.
//!
//! A [`Graph`] is a vertex count plus an undirected edge set, with an optional
//! list of faces (closed walks) used by the Wilson action. [`Space`] is the
//! catalog of named lattices; [`automorphism_group`] computes `Aut(X)` by
//! refined backtracking and [`fundamental_cycles`] gives a cycle basis
//! relative to a deterministic breadth-first spanning tree.

mod automorphism;
mod buckyball;
mod catalog;
mod cycles;
mod io;

use std::collections::HashMap;

use thiserror::Error;

pub use automorphism::{automorphism_group, automorphism_group_with_budget, DEFAULT_NODE_BUDGET};
pub use catalog::{make_space, Space};
pub use cycles::{fundamental_cycles, SpanningTree};

use crate::perm_group::PermError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("face {index} is not a closed walk along edges: {reason}")]
    BadFace { index: usize, reason: String },
    #[error("unknown space `{0}`")]
    UnknownSpace(String),
    #[error("invalid parameters for {name}: {reason}")]
    InvalidParams { name: String, reason: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("automorphism search exceeded the node budget of {0}")]
    SearchBudgetExceeded(u64),
    #[error("graph file line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Group(#[from] PermError),
}

/// A finite simple undirected graph with optional faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    edge_index: HashMap<(usize, usize), usize>,
    faces: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalising every edge to `(min, max)` and sorting the
    /// edge list.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let edge_index = list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(Self {
            vertex_count,
            edges: list,
            adjacency,
            edge_index,
            faces: Vec::new(),
        })
    }

    /// Attaches a face list; every face must be a closed walk of length at
    /// least three along existing edges.
    pub fn with_faces(mut self, faces: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        for (index, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(GraphError::BadFace {
                    index,
                    reason: "fewer than three vertices".into(),
                });
            }
            for (i, &x) in face.iter().enumerate() {
                let y = face[(i + 1) % face.len()];
                if x >= self.vertex_count || y >= self.vertex_count || !self.has_edge(x, y) {
                    return Err(GraphError::BadFace {
                        index,
                        reason: format!("{x}-{y} is not an edge"),
                    });
                }
            }
        }
        self.faces = faces;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(low, high)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index.contains_key(&(u.min(v), u.max(v)))
    }

    /// Position of the undirected edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.vertex_count).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.vertex_count
    }

    /// First Betti number `N_E - N_X + c` for `c` connected components.
    pub fn cycle_rank(&self) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut components = 0;
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            components += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        self.edge_count() + components - self.vertex_count
    }
}
