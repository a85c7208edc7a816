//! Integer transportation problem solved as min-cost flow by successive
//! shortest augmenting paths (Dijkstra on reduced costs with node potentials).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

const INF: i64 = i64::MAX / 4;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
    rev: usize,
}

struct Network {
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network { arcs: vec![Vec::new(); n] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> (usize, usize) {
        let fwd = self.arcs[from].len();
        let bwd = self.arcs[to].len() + usize::from(from == to);
        self.arcs[from].push(Arc { to, cap, cost, rev: bwd });
        self.arcs[to].push(Arc { to: from, cap: 0, cost: -cost, rev: fwd });
        (from, fwd)
    }

    /// Ships as much as possible from `s` to `t` at minimum cost.
    fn min_cost_flow(&mut self, s: usize, t: usize) -> (i64, i128) {
        let n = self.arcs.len();
        let mut dual = vec![0i64; n];
        let mut dist = vec![INF; n];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut done = vec![false; n];
        let mut heap = BinaryHeap::new();
        let (mut flow, mut cost) = (0i64, 0i128);
        loop {
            dist.fill(INF);
            prev.fill(None);
            done.fill(false);
            heap.clear();
            dist[s] = 0;
            heap.push(Reverse((0i64, s)));
            while let Some(Reverse((d, v))) = heap.pop() {
                if done[v] {
                    continue;
                }
                done[v] = true;
                if v == t {
                    break;
                }
                for (k, arc) in self.arcs[v].iter().enumerate() {
                    if arc.cap == 0 || done[arc.to] {
                        continue;
                    }
                    let reduced = arc.cost - dual[arc.to] + dual[v];
                    debug_assert!(reduced >= 0, "negative reduced cost");
                    let nd = d + reduced;
                    if nd < dist[arc.to] {
                        dist[arc.to] = nd;
                        prev[arc.to] = Some((v, k));
                        heap.push(Reverse((nd, arc.to)));
                    }
                }
            }
            if !done[t] {
                break;
            }
            for v in 0..n {
                if done[v] {
                    dual[v] -= dist[t] - dist[v];
                }
            }
            let mut push = INF;
            let mut v = t;
            while let Some((u, k)) = prev[v] {
                push = push.min(self.arcs[u][k].cap);
                v = u;
            }
            let mut v = t;
            while let Some((u, k)) = prev[v] {
                let rev = self.arcs[u][k].rev;
                self.arcs[u][k].cap -= push;
                self.arcs[v][rev].cap += push;
                cost += i128::from(push) * i128::from(self.arcs[u][k].cost);
                v = u;
            }
            flow += push;
        }
        (flow, cost)
    }
}

/// Optimal integer transportation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Transportation {
    pub cost: i128,
    /// `(source, sink, amount)` with positive amounts.
    pub flows: Vec<(usize, usize, i64)>,
}

/// Solves `min sum c[i][j] x[i][j]` over `x >= 0` with row sums `supply` and
/// column sums `demand`. Requires equal totals and non-negative costs.
pub(crate) fn solve_transportation(
    supply: &[i64],
    demand: &[i64],
    cost: &[Vec<i64>],
) -> Transportation {
    let (a, b) = (supply.len(), demand.len());
    debug_assert_eq!(supply.iter().sum::<i64>(), demand.iter().sum::<i64>());
    let s = a + b;
    let t = s + 1;
    let total: i64 = supply.iter().sum();
    let mut net = Network::new(a + b + 2);
    for (i, &x) in supply.iter().enumerate() {
        net.add_arc(s, i, x, 0);
    }
    for (j, &y) in demand.iter().enumerate() {
        net.add_arc(a + j, t, y, 0);
    }
    let mut handles = Vec::with_capacity(a * b);
    for (i, row) in cost.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            handles.push((i, j, net.add_arc(i, a + j, total, c)));
        }
    }
    let (shipped, total_cost) = net.min_cost_flow(s, t);
    assert_eq!(shipped, total, "transportation problem is balanced");
    let flows = handles
        .into_iter()
        .filter_map(|(i, j, (u, k))| {
            let arc = &net.arcs[u][k];
            let amount = total - arc.cap;
            (amount > 0).then_some((i, j, amount))
        })
        .collect();
    Transportation { cost: total_cost, flows }
}

/// Dual variables `pi` with `pi[sink] - pi[source] <= c` on every pair and
/// equality wherever flow is positive, found by Bellman-Ford on the residual
/// graph. `None` if the residual graph has a negative cycle, meaning the flow
/// is not optimal.
pub(crate) fn residual_duals(
    a: usize,
    b: usize,
    cost: &[Vec<i64>],
    flows: &[(usize, usize, i64)],
) -> Option<(Vec<i64>, Vec<i64>)> {
    let mut edges: Vec<(usize, usize, i64)> = Vec::with_capacity(a * b + flows.len());
    for (i, row) in cost.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            edges.push((i, a + j, c));
        }
    }
    for &(i, j, _) in flows {
        edges.push((a + j, i, -cost[i][j]));
    }
    let mut pi = vec![0i64; a + b];
    for round in 0..=a + b {
        let mut changed = false;
        for &(u, v, c) in &edges {
            if pi[u] + c < pi[v] {
                pi[v] = pi[u] + c;
                changed = true;
            }
        }
        if !changed {
            let sinks = pi.split_off(a);
            return Some((pi, sinks));
        }
        if round == a + b {
            break;
        }
    }
    None
}
