//! Automorphism groups by backtracking over vertex maps.
//!
//! Vertices are first coloured by equitable refinement (degree, then the
//! multiset of neighbour colours, iterated to a fixed point); an automorphism
//! must preserve these colours. The search then assigns images in
//! breadth-first order, so every vertex after a component root has an
//! already-mapped neighbour and its candidates are confined to the
//! neighbourhood of that neighbour's image.

use std::collections::{HashMap, HashSet};

use super::{Graph, GraphError};
use crate::perm_group::{Permutation, PermutationGroup};

/// Default cap on search-tree nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// `Aut(X)` with the default node budget.
pub fn automorphism_group(graph: &Graph) -> Result<PermutationGroup, GraphError> {
    automorphism_group_with_budget(graph, DEFAULT_NODE_BUDGET)
}

pub fn automorphism_group_with_budget(graph: &Graph, budget: u64) -> Result<PermutationGroup, GraphError> {
    let all = enumerate_automorphisms(graph, budget)?;
    // Greedy generating set, then re-close so the element order is the
    // standard breadth-first one.
    let n = graph.vertex_count();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut closure: HashSet<Permutation> = HashSet::from([Permutation::identity(n)]);
    for p in &all {
        if closure.contains(p) {
            continue;
        }
        gens.push(p.clone());
        let g = PermutationGroup::from_generators(gens.clone(), all.len())?;
        closure = g.elements().iter().cloned().collect();
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(n));
    }
    let group = PermutationGroup::from_generators(gens, all.len())?;
    debug_assert_eq!(group.order(), all.len());
    Ok(group)
}

/// Equitable colouring: returns a colour per vertex.
pub(crate) fn refine_colors(graph: &Graph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut colors: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = graph.neighbors(v).iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let relabel: HashMap<&(usize, Vec<usize>), usize> =
            distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = signatures.iter().map(|s| relabel[s]).collect();
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

fn bfs_order(graph: &Graph) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = graph.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in graph.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    order.push(y);
                }
            }
        }
    }
    (order, parent)
}

struct Search<'a> {
    graph: &'a Graph,
    adj: Vec<bool>,
    colors: Vec<usize>,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
    found: Vec<Permutation>,
}

impl Search<'_> {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.graph.vertex_count() + v]
    }

    fn consistent(&self, depth: usize, v: usize, c: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&u| self.adjacent(v, u) == self.adjacent(c, self.image[u]))
    }

    fn run(&mut self, depth: usize) -> Result<(), GraphError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(GraphError::SearchBudgetExceeded(self.budget));
        }
        let n = self.graph.vertex_count();
        if depth == n {
            let perm = Permutation::from_images(self.image.clone()).expect("search only produces bijections");
            self.found.push(perm);
            return Ok(());
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match self.parent[v] {
            Some(p) => self.graph.neighbors(self.image[p]).to_vec(),
            None => (0..n).collect(),
        };
        for c in candidates {
            if self.used[c] || self.colors[c] != self.colors[v] || !self.consistent(depth, v, c) {
                continue;
            }
            self.image[v] = c;
            self.used[c] = true;
            self.run(depth + 1)?;
            self.used[c] = false;
        }
        Ok(())
    }
}

/// Every automorphism, in search order.
pub(crate) fn enumerate_automorphisms(graph: &Graph, budget: u64) -> Result<Vec<Permutation>, GraphError> {
    let n = graph.vertex_count();
    let mut adj = vec![false; n * n];
    for &(u, v) in graph.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let (order, parent) = bfs_order(graph);
    let mut search = Search {
        graph,
        adj,
        colors: refine_colors(graph),
        order,
        parent,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        budget,
        found: Vec::new(),
    };
    search.run(0)?;
    Ok(search.found)
}
