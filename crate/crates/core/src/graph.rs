//! Simple undirected graphs on dense vertex indices `0..n`.

use std::collections::VecDeque;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Marker stored in the distance matrix for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.data[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw entry, [`UNREACHABLE`] for disconnected pairs.
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u32 {
        self.data
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

/// Immutable simple undirected graph.
///
/// Distances are computed on first use and cached; the cache is filled through
/// a `OnceLock`, so a shared `&Graph` can be queried from several threads.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    dist: OnceLock<DistanceMatrix>,
}

/// Parameters `(n, d, alpha, beta)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    pub alpha: usize,
    pub beta: usize,
}

impl SrgParams {
    /// The counting identity `d(d - alpha - 1) = (n - d - 1) beta`.
    pub fn is_feasible(&self) -> bool {
        self.d > self.alpha
            && self.n > self.d
            && self.d * (self.d - self.alpha - 1) == (self.n - self.d - 1) * self.beta
    }

    /// Common size of the exclusive neighbor sets of an edge.
    pub fn exclusive_neighbors(&self) -> usize {
        self.d - self.alpha - 1
    }

    /// Conference parameters `(4b + 1, 2b, b - 1, b)`.
    pub fn is_conference(&self) -> bool {
        self.beta >= 1
            && self.n == 4 * self.beta + 1
            && self.d == 2 * self.beta
            && self.alpha + 1 == self.beta
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
            dist: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn require_edge(&self, u: usize, v: usize) -> Result<()> {
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(u, v))
        }
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Hop distances from `source`.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs shortest-path distances (cached).
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| {
            let n = self.order();
            let mut data = Vec::with_capacity(n * n);
            for s in 0..n {
                data.extend(self.bfs(s));
            }
            DistanceMatrix { n, data }
        })
    }

    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        self.distances().get(u, v)
    }

    /// Component label per vertex, labels assigned in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.component_count() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// `None` for disconnected graphs.
    pub fn diameter(&self) -> Option<u32> {
        if !self.is_connected() {
            return None;
        }
        Some(self.distances().max_finite())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Length of the shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<u32> {
        let n = self.order();
        let mut best = u32::MAX;
        let mut dist = vec![UNREACHABLE; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(UNREACHABLE);
            parent.fill(usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != u32::MAX).then_some(best)
    }

    /// Strongly regular parameters, if the graph is connected, regular, not
    /// complete, and common-neighbor counts are constant on adjacent pairs
    /// and on distinct nonadjacent pairs (the latter at least 1).
    pub fn detect_srg(&self) -> Option<SrgParams> {
        let d = self.regular_degree()?;
        if d == 0 || !self.is_connected() || self.is_complete() {
            return None;
        }
        let n = self.order();
        let mut alpha = None;
        let mut beta = None;
        for u in 0..n {
            for v in u + 1..n {
                let c = self.common_neighbor_count(u, v);
                let slot = if self.has_edge(u, v) { &mut alpha } else { &mut beta };
                match *slot {
                    None => *slot = Some(c),
                    Some(prev) if prev != c => return None,
                    Some(_) => {}
                }
            }
        }
        let alpha = alpha?;
        let beta = beta?;
        if beta == 0 {
            return None;
        }
        Some(SrgParams { n, d, alpha, beta })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn single_edge_is_k2() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
    }

    #[test]
    fn triangle_distances_at_most_one() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert!(g.dist(u, v).unwrap() <= 1);
            }
        }
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn five_cycle_distances() {
        let g = cycle(5);
        assert_eq!(g.dist(0, 2), Some(2));
        for u in 0..5 {
            let row = g.distances().row(u);
            assert_eq!(row.iter().filter(|&&d| d == 1).count(), 2);
            assert_eq!(row.iter().filter(|&&d| d == 2).count(), 2);
        }
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn disconnected_pairs_are_unreachable() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.dist(0, 3), None);
        assert_eq!(g.distances().raw(0, 3), UNREACHABLE);
        assert_eq!(g.component_count(), 2);
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), None);
    }

    #[test]
    fn forest_has_no_girth() {
        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
    }

    #[test]
    fn six_cycle_is_not_srg() {
        assert_eq!(cycle(6).detect_srg(), None);
        assert_eq!(cycle(6).girth(), Some(6));
    }

    #[test]
    fn five_cycle_is_srg() {
        let p = cycle(5).detect_srg().unwrap();
        assert_eq!(p, SrgParams { n: 5, d: 2, alpha: 0, beta: 1 });
        assert!(p.is_feasible());
        assert!(p.is_conference());
    }

    #[test]
    fn complete_graph_is_not_reported_as_srg() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.is_complete());
        assert_eq!(k4.detect_srg(), None);
    }
}
