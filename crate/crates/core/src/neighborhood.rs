//! Core neighborhood of an edge and the bipartite graph between the two
//! exclusive neighbor sets.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

/// Partition of the vertices within distance 2 of both ends of an edge
/// `xy`: `{x}`, `{y}`, common neighbors, the exclusive neighbors of `x` and
/// of `y`, and the common 2-step neighbors. All sets are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreNeighborhood {
    pub x: usize,
    pub y: usize,
    pub triangle: Vec<usize>,
    pub nx: Vec<usize>,
    pub ny: Vec<usize>,
    pub pentagon: Vec<usize>,
}

impl CoreNeighborhood {
    /// Total number of vertices in the six parts.
    pub fn len(&self) -> usize {
        2 + self.triangle.len() + self.nx.len() + self.ny.len() + self.pentagon.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Degree of `x` recovered from the partition.
    pub fn degree_x(&self) -> usize {
        1 + self.triangle.len() + self.nx.len()
    }

    pub fn degree_y(&self) -> usize {
        1 + self.triangle.len() + self.ny.len()
    }

    /// All member vertices in ascending order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = [self.x, self.y]
            .into_iter()
            .chain(self.triangle.iter().copied())
            .chain(self.nx.iter().copied())
            .chain(self.ny.iter().copied())
            .chain(self.pentagon.iter().copied())
            .collect();
        all.sort_unstable();
        all
    }
}

pub fn decompose(g: &Graph, (x, y): (usize, usize)) -> Result<CoreNeighborhood> {
    g.require_edge(x, y)?;
    let dist = g.distances();
    let mut triangle = Vec::new();
    let mut nx = Vec::new();
    for &v in g.neighbors(x) {
        if v == y {
            continue;
        }
        if g.has_edge(v, y) {
            triangle.push(v);
        } else {
            nx.push(v);
        }
    }
    let ny = g
        .neighbors(y)
        .iter()
        .copied()
        .filter(|&v| v != x && !g.has_edge(v, x))
        .collect();
    let pentagon = (0..g.order())
        .filter(|&v| dist.get(x, v) == Some(2) && dist.get(y, v) == Some(2))
        .collect();
    Ok(CoreNeighborhood { x, y, triangle, nx, ny, pentagon })
}

/// Bipartite graph with local indices on each side and a map back to parent
/// vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    #[serde(skip)]
    left_adj: Vec<Vec<usize>>,
    #[serde(skip)]
    right_adj: Vec<Vec<usize>>,
}

/// One side of a [`BipartiteGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl BipartiteGraph {
    /// Builds from local edges `(i, j)`, `i < left.len()`, `j < right.len()`.
    pub fn new(left: Vec<usize>, right: Vec<usize>, edges: &[(usize, usize)]) -> Self {
        let mut left_adj = vec![Vec::new(); left.len()];
        let mut right_adj = vec![Vec::new(); right.len()];
        for &(i, j) in edges {
            assert!(i < left.len() && j < right.len(), "local edge ({i}, {j}) out of range");
            left_adj[i].push(j);
            right_adj[j].push(i);
        }
        for list in left_adj.iter_mut().chain(right_adj.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        BipartiteGraph { left, right, left_adj, right_adj }
    }

    /// Parent ids are the local indices themselves.
    pub fn from_local(left: usize, right: usize, edges: &[(usize, usize)]) -> Self {
        Self::new((0..left).collect(), (0..right).collect(), edges)
    }

    pub fn side_len(&self, side: Side) -> usize {
        match side {
            Side::Left => self.left.len(),
            Side::Right => self.right.len(),
        }
    }

    /// Local neighbors of local vertex `i` on `side`.
    pub fn neighbors(&self, side: Side, i: usize) -> &[usize] {
        match side {
            Side::Left => &self.left_adj[i],
            Side::Right => &self.right_adj[i],
        }
    }

    pub fn parent_id(&self, side: Side, i: usize) -> usize {
        match side {
            Side::Left => self.left[i],
            Side::Right => self.right[i],
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.left_adj
            .get(i)
            .is_some_and(|list| list.binary_search(&j).is_ok())
    }

    /// Local edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left_adj
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().map(move |&j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.left_adj.iter().map(Vec::len).sum()
    }
}

/// Parent-graph edges between `N_x` (left) and `N_y` (right).
pub fn induced_bipartite(g: &Graph, cn: &CoreNeighborhood) -> BipartiteGraph {
    let mut edges = Vec::new();
    for (i, &u) in cn.nx.iter().enumerate() {
        for (j, &v) in cn.ny.iter().enumerate() {
            if g.has_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    BipartiteGraph::new(cn.nx.clone(), cn.ny.clone(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators::{complete, complete_bipartite, petersen, rooks};

    fn assert_partition(g: &Graph, cn: &CoreNeighborhood) {
        let all = cn.vertices();
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(all, dedup, "parts overlap");
        assert!(cn.len() <= g.order());
    }

    #[test]
    fn complete_graph_is_all_triangle() {
        let g = complete(4).unwrap();
        let cn = decompose(&g, (0, 1)).unwrap();
        assert_eq!(cn.triangle, vec![2, 3]);
        assert!(cn.nx.is_empty() && cn.ny.is_empty() && cn.pentagon.is_empty());
    }

    #[test]
    fn petersen_partition_counts() {
        let g = petersen();
        for (x, y) in g.edges() {
            let cn = decompose(&g, (x, y)).unwrap();
            assert_partition(&g, &cn);
            assert_eq!(
                (cn.triangle.len(), cn.nx.len(), cn.ny.len(), cn.pentagon.len()),
                (0, 2, 2, 4)
            );
            assert_eq!(cn.len(), 10);
            assert_eq!(induced_bipartite(&g, &cn).edge_count(), 0);
        }
    }

    #[test]
    fn rooks_partition_counts() {
        let g = rooks(4).unwrap();
        let cn = decompose(&g, (0, 1)).unwrap();
        assert_partition(&g, &cn);
        assert_eq!(
            (cn.triangle.len(), cn.nx.len(), cn.ny.len(), cn.pentagon.len()),
            (2, 3, 3, 6)
        );
    }

    #[test]
    fn k33_bipartite_has_two_edges_per_vertex() {
        let g = complete_bipartite(3, 3).unwrap();
        let cn = decompose(&g, (0, 3)).unwrap();
        let h = induced_bipartite(&g, &cn);
        assert_eq!((h.left.len(), h.right.len()), (2, 2));
        for i in 0..2 {
            assert_eq!(h.neighbors(Side::Left, i).len(), 2);
            assert_eq!(h.neighbors(Side::Right, i).len(), 2);
        }
    }

    #[test]
    fn swapping_endpoints_swaps_exclusive_sets() {
        let g = rooks(3).unwrap();
        for (x, y) in g.edges() {
            let a = decompose(&g, (x, y)).unwrap();
            let b = decompose(&g, (y, x)).unwrap();
            assert_eq!(a.nx, b.ny);
            assert_eq!(a.ny, b.nx);
            assert_eq!(a.triangle, b.triangle);
            assert_eq!(a.pentagon, b.pentagon);
        }
    }

    #[test]
    fn non_edge_is_rejected() {
        let g = petersen();
        assert_eq!(decompose(&g, (0, 1)), Err(Error::NotAnEdge(0, 1)));
    }
}
