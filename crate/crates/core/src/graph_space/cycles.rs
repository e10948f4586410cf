use super::{Graph, GraphError};

/// Breadth-first spanning tree rooted at vertex 0, neighbours visited in
/// ascending order.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    /// Vertices in visiting order; `order[0] == 0`.
    pub order: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl SpanningTree {
    pub fn new(graph: &Graph) -> Result<Self, GraphError> {
        let n = graph.vertex_count();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut order = vec![0];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in graph.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    depth[y] = depth[x] + 1;
                    order.push(y);
                }
            }
        }
        if order.len() != n {
            return Err(GraphError::Disconnected);
        }
        Ok(Self { order, parent, depth })
    }

    pub fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.parent[v] == Some(u) || self.parent[u] == Some(v)
    }

    /// Cycle closed by the non-tree edge `u-v`: starts at `u`, climbs to the
    /// common ancestor, descends to `v`; the final step `v -> u` closes it.
    pub fn cycle_through(&self, u: usize, v: usize) -> Vec<usize> {
        let (mut a, mut b) = (u, v);
        let mut up = vec![a];
        let mut down = vec![b];
        while a != b {
            if self.depth[a] >= self.depth[b] {
                a = self.parent[a].expect("non-root has a parent");
                up.push(a);
            } else {
                b = self.parent[b].expect("non-root has a parent");
                down.push(b);
            }
        }
        down.pop();
        up.extend(down.into_iter().rev());
        up
    }
}

/// One cycle per non-tree edge, in edge order; there are exactly
/// `N_E - N_X + 1` of them.
pub fn fundamental_cycles(graph: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    let tree = SpanningTree::new(graph)?;
    Ok(graph
        .edges()
        .iter()
        .filter(|&&(u, v)| !tree.is_tree_edge(u, v))
        .map(|&(u, v)| tree.cycle_through(u, v))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_space::Space;

    fn is_closed_walk(graph: &Graph, cycle: &[usize]) -> bool {
        (0..cycle.len()).all(|i| graph.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    }

    #[test]
    fn triangle_has_one_three_cycle() {
        let cycles = fundamental_cycles(&Space::Triangle.graph()).unwrap();
        assert_eq!(cycles, vec![vec![1, 0, 2]]);
    }

    #[test]
    fn toric_square_three_has_ten_cycles() {
        let g = Space::ToricSquare(3).graph();
        let cycles = fundamental_cycles(&g).unwrap();
        assert_eq!(cycles.len(), 10);
        assert!(cycles.iter().all(|c| is_closed_walk(&g, c)));
    }

    #[test]
    fn tree_has_no_cycles() {
        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(fundamental_cycles(&path).unwrap().is_empty());
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(fundamental_cycles(&g).unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn count_is_betti_number_on_catalog() {
        for name in [
            "atom",
            "dimer",
            "polygon(7)",
            "octahedron",
            "icosahedron",
            "dodecahedron",
            "buckyball",
            "toric_square(4)",
            "toric_graphene(4,6)",
        ] {
            let g = name.parse::<Space>().unwrap().graph();
            let cycles = fundamental_cycles(&g).unwrap();
            assert_eq!(cycles.len() + g.vertex_count(), g.edge_count() + 1, "{name}");
            assert!(cycles.iter().all(|c| is_closed_walk(&g, c)), "{name}");
        }
    }
}
