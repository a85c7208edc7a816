//! Maximum bipartite matching and alternating-path reachability.
//!
//! All indices here are local to a [`BipartiteGraph`] side.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::neighborhood::{BipartiteGraph, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    left_mate: Vec<Option<usize>>,
    right_mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(h: &BipartiteGraph) -> Self {
        Matching {
            left_mate: vec![None; h.left.len()],
            right_mate: vec![None; h.right.len()],
        }
    }

    /// Validates that every pair is an edge of `h` and no vertex repeats.
    pub fn from_pairs(h: &BipartiteGraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = Matching::empty(h);
        for &(i, j) in pairs {
            if !h.has_edge(i, j) {
                return Err(Error::PreconditionViolated(format!(
                    "pair ({i}, {j}) is not an edge of the bipartite graph"
                )));
            }
            if m.left_mate[i].is_some() || m.right_mate[j].is_some() {
                return Err(Error::PreconditionViolated(format!(
                    "pair ({i}, {j}) reuses a matched vertex"
                )));
            }
            m.left_mate[i] = Some(j);
            m.right_mate[j] = Some(i);
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.left_mate.iter().flatten().count()
    }

    pub fn mate(&self, side: Side, i: usize) -> Option<usize> {
        match side {
            Side::Left => self.left_mate[i],
            Side::Right => self.right_mate[i],
        }
    }

    pub fn is_matched(&self, side: Side, i: usize) -> bool {
        self.mate(side, i).is_some()
    }

    /// Local `(left, right)` pairs in ascending left order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_mate
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.map(|j| (i, j)))
            .collect()
    }

    /// Pairs translated to parent vertex ids.
    pub fn parent_pairs(&self, h: &BipartiteGraph) -> Vec<(usize, usize)> {
        self.pairs()
            .into_iter()
            .map(|(i, j)| (h.left[i], h.right[j]))
            .collect()
    }

    /// Unmatched local vertices on `side`, ascending.
    pub fn unmatched(&self, side: Side) -> Vec<usize> {
        let mates = match side {
            Side::Left => &self.left_mate,
            Side::Right => &self.right_mate,
        };
        mates
            .iter()
            .enumerate()
            .filter(|(_, m)| m.is_none())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Order in which left vertices (and their neighbor lists) are scanned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrder {
    Ascending,
    Descending,
}

/// Maximum-cardinality matching by repeated augmenting-path search in
/// ascending index order.
pub fn maximum_matching(h: &BipartiteGraph) -> Matching {
    maximum_matching_with_order(h, VertexOrder::Ascending)
}

pub fn maximum_matching_with_order(h: &BipartiteGraph, order: VertexOrder) -> Matching {
    let mut m = Matching::empty(h);
    let nl = h.left.len();
    let mut visited = vec![false; h.right.len()];
    let lefts: Vec<usize> = match order {
        VertexOrder::Ascending => (0..nl).collect(),
        VertexOrder::Descending => (0..nl).rev().collect(),
    };
    for &u in &lefts {
        visited.fill(false);
        augment(h, &mut m, u, &mut visited, order);
    }
    assert!(
        !has_augmenting_path(h, &m),
        "augmenting-path search left an augmenting path"
    );
    m
}

fn augment(
    h: &BipartiteGraph,
    m: &mut Matching,
    u: usize,
    visited: &mut [bool],
    order: VertexOrder,
) -> bool {
    let nbrs = h.neighbors(Side::Left, u);
    let scan = |j: usize, m: &mut Matching, visited: &mut [bool]| -> bool {
        if visited[j] {
            return false;
        }
        visited[j] = true;
        let free = match m.right_mate[j] {
            None => true,
            Some(w) => augment(h, m, w, visited, order),
        };
        if free {
            m.left_mate[u] = Some(j);
            m.right_mate[j] = Some(u);
        }
        free
    };
    match order {
        VertexOrder::Ascending => nbrs.iter().any(|&j| scan(j, m, visited)),
        VertexOrder::Descending => nbrs.iter().rev().any(|&j| scan(j, m, visited)),
    }
}

/// Vertices on each side that lie on an alternating path starting at an
/// unmatched vertex of `from_side`. Unmatched seeds count as trivial paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternatingReach {
    pub from_side: Side,
    /// Local indices on `from_side`, ascending.
    pub reach_s: Vec<usize>,
    /// Local indices on the opposite side, ascending.
    pub reach_t: Vec<usize>,
}

pub fn alternating_reach(h: &BipartiteGraph, m: &Matching, side: Side) -> AlternatingReach {
    let other = side.other();
    let mut in_s = vec![false; h.side_len(side)];
    let mut in_t = vec![false; h.side_len(other)];
    let mut queue = VecDeque::new();
    for s in m.unmatched(side) {
        in_s[s] = true;
        queue.push_back(s);
    }
    while let Some(s) = queue.pop_front() {
        let own_mate = m.mate(side, s);
        for &t in h.neighbors(side, s) {
            if own_mate == Some(t) || in_t[t] {
                continue;
            }
            in_t[t] = true;
            if let Some(next) = m.mate(other, t) {
                if !in_s[next] {
                    in_s[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    let collect = |flags: &[bool]| {
        flags.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i).collect()
    };
    AlternatingReach { from_side: side, reach_s: collect(&in_s), reach_t: collect(&in_t) }
}

/// True when some alternating path from an unmatched left vertex ends at an
/// unmatched right vertex (every augmenting path has one end on each side).
pub fn has_augmenting_path(h: &BipartiteGraph, m: &Matching) -> bool {
    alternating_reach(h, m, Side::Left)
        .reach_t
        .iter()
        .any(|&t| !m.is_matched(Side::Right, t))
}

/// Both sides of `|A_S(S)| = |A_S(T)| + |S| - m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountingIdentity {
    pub side: Side,
    pub reach_s: usize,
    pub reach_t: usize,
    pub side_size: usize,
    pub matching_size: usize,
    pub holds: bool,
}

pub fn counting_identity_check(
    h: &BipartiteGraph,
    m: &Matching,
    side: Side,
) -> Result<CountingIdentity> {
    if has_augmenting_path(h, m) {
        return Err(Error::PreconditionViolated(
            "matching is not maximum (an augmenting path exists)".into(),
        ));
    }
    let reach = alternating_reach(h, m, side);
    let side_size = h.side_len(side);
    let matching_size = m.size();
    let holds = reach.reach_s.len() == reach.reach_t.len() + side_size - matching_size;
    Ok(CountingIdentity {
        side,
        reach_s: reach.reach_s.len(),
        reach_t: reach.reach_t.len(),
        side_size,
        matching_size,
        holds,
    })
}

/// Hall's condition for a matching covering `side`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HallCheck {
    pub side: Side,
    pub satisfied: bool,
    /// Deficient set `W` (local indices on `side`) with `|N(W)| < |W|`.
    pub witness: Option<Vec<usize>>,
    /// `N(W)` on the opposite side.
    pub witness_neighbors: Option<Vec<usize>>,
}

/// Neighborhood of a set of local vertices on `side`, ascending.
pub fn neighborhood_of(h: &BipartiteGraph, side: Side, set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set
        .iter()
        .flat_map(|&i| h.neighbors(side, i).iter().copied())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn hall_check(h: &BipartiteGraph, side: Side) -> HallCheck {
    let m = maximum_matching(h);
    if m.size() == h.side_len(side) {
        return HallCheck { side, satisfied: true, witness: None, witness_neighbors: None };
    }
    let witness = alternating_reach(h, &m, side).reach_s;
    let nbrs = neighborhood_of(h, side, &witness);
    assert!(
        nbrs.len() < witness.len(),
        "alternating-reach witness is not deficient"
    );
    HallCheck { side, satisfied: false, witness: Some(witness), witness_neighbors: Some(nbrs) }
}
