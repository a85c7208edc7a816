//! Independent oracles and graph corpora shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ricci_core::generators::{
    complete, complete_bipartite, cycle, hoffman_singleton, paley, petersen, rooks, shrikhande,
};
use ricci_core::{BipartiteGraph, Graph, Rational, Side};

/// Named strongly regular graphs (plus complete graphs are kept separate).
pub fn srg_corpus() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("cycle:4".to_string(), cycle(4).unwrap()),
        ("cycle:5".to_string(), cycle(5).unwrap()),
        ("petersen".to_string(), petersen()),
        ("shrikhande".to_string(), shrikhande()),
        ("hoffman_singleton".to_string(), hoffman_singleton()),
    ];
    for s in 2..=5 {
        out.push((format!("complete_bipartite:{s},{s}"), complete_bipartite(s, s).unwrap()));
    }
    for r in 2..=7 {
        out.push((format!("rooks:{r}"), rooks(r).unwrap()));
    }
    for q in [5, 13, 17, 29, 37, 41] {
        out.push((format!("paley:{q}"), paley(q).unwrap()));
    }
    out
}

/// Regular graphs: the SRG corpus, complete graphs and a few cycles.
pub fn regular_corpus() -> Vec<(String, Graph)> {
    let mut out = srg_corpus();
    for n in 2..=10 {
        out.push((format!("complete:{n}"), complete(n).unwrap()));
    }
    for n in [3, 6, 7, 8, 9] {
        out.push((format!("cycle:{n}"), cycle(n).unwrap()));
    }
    out
}

/// Minimum cost of moving integer masses `supply` onto `demand` under
/// `cost`, by memoized search over all integer plans one unit at a time.
/// Transportation polytopes with integer margins have integer vertices, so
/// this is the exact optimum.
pub fn transport_oracle(supply: &[i64], demand: &[i64], cost: &[Vec<i64>]) -> i64 {
    assert_eq!(supply.iter().sum::<i64>(), demand.iter().sum::<i64>());
    fn go(
        i: usize,
        left: i64,
        dem: &mut Vec<i64>,
        supply: &[i64],
        cost: &[Vec<i64>],
        memo: &mut HashMap<(usize, i64, Vec<i64>), i64>,
    ) -> i64 {
        if i == supply.len() {
            return 0;
        }
        if left == 0 {
            let next = supply.get(i + 1).copied().unwrap_or(0);
            return go(i + 1, next, dem, supply, cost, memo);
        }
        let key = (i, left, dem.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut best = i64::MAX;
        for j in 0..dem.len() {
            if dem[j] == 0 {
                continue;
            }
            dem[j] -= 1;
            let v = cost[i][j] + go(i, left - 1, dem, supply, cost, memo);
            dem[j] += 1;
            best = best.min(v);
        }
        memo.insert(key, best);
        best
    }
    let mut dem = demand.to_vec();
    let first = supply.first().copied().unwrap_or(0);
    go(0, first, &mut dem, supply, cost, &mut HashMap::new())
}

/// Exact W1 between `sum mu_i / den` and `sum nu_j / den` via [`transport_oracle`].
pub fn w1_oracle(g: &Graph, mu: &[(usize, i64)], nu: &[(usize, i64)], den: i64) -> Rational {
    let cost: Vec<Vec<i64>> = mu
        .iter()
        .map(|&(u, _)| nu.iter().map(|&(v, _)| i64::from(g.dist(u, v).unwrap())).collect())
        .collect();
    let supply: Vec<i64> = mu.iter().map(|p| p.1).collect();
    let demand: Vec<i64> = nu.iter().map(|p| p.1).collect();
    Rational::new(transport_oracle(&supply, &demand, &cost), den)
}

/// Random composition of `total` into `parts` positive integers.
pub fn composition(rng: &mut impl Rng, total: i64, parts: usize) -> Vec<i64> {
    assert!(parts as i64 <= total);
    let mut cuts: Vec<i64> = Vec::new();
    while cuts.len() + 1 < parts {
        let c = rng.gen_range(1..total);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort_unstable();
    cuts.push(total);
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let x = c - prev;
            prev = c;
            x
        })
        .collect()
}

/// Maximum matching size by dynamic programming over subsets of the right side.
pub fn matching_oracle(h: &BipartiteGraph) -> usize {
    let (l, r) = (h.side_len(Side::Left), h.side_len(Side::Right));
    assert!(r <= 20, "oracle limited to 20 right vertices");
    let mut best: HashMap<u32, usize> = HashMap::from([(0, 0)]);
    for i in 0..l {
        let mut next = best.clone();
        for (&mask, &size) in &best {
            for &j in h.neighbors(Side::Left, i) {
                if mask & (1 << j) == 0 {
                    let e = next.entry(mask | (1 << j)).or_insert(0);
                    *e = (*e).max(size + 1);
                }
            }
        }
        best = next;
    }
    best.into_values().max().unwrap_or(0)
}

pub fn random_bipartite(rng: &mut impl Rng, l: usize, r: usize, p: f64) -> BipartiteGraph {
    let mut edges = Vec::new();
    for i in 0..l {
        for j in 0..r {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    BipartiteGraph::from_local(l, r, &edges)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One graph per isomorphism class on exactly `n` vertices, for `n <= 7`.
/// Built by adding a vertex with every neighbor set to each class on `n - 1`
/// vertices and keeping one graph per canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n));
    let mut classes: Vec<Vec<u8>> = vec![vec![0]];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &classes {
            for subset in 0u8..(1 << (k - 1)) {
                let mut a = adj.clone();
                a.push(subset);
                for (v, row) in a.iter_mut().enumerate().take(k - 1) {
                    if subset & (1 << v) != 0 {
                        *row |= 1 << (k - 1);
                    }
                }
                if seen.insert(canonical_code(&a)) {
                    next.push(a);
                }
            }
        }
        classes = next;
    }
    classes.iter().map(|a| to_graph(a)).collect()
}

fn to_graph(adj: &[u8]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] & (1 << v) != 0).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

/// Largest adjacency code over relabelings that list vertices by a
/// degree-based invariant; ties are resolved by trying every order.
fn canonical_code(adj: &[u8]) -> u32 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let invariant = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&u| adj[v] & (1 << u) != 0).map(|u| deg[u]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    let inv: Vec<_> = (0..n).map(invariant).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match cells.last_mut() {
            Some(c) if inv[c[0]] == inv[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0;
    let mut label = Vec::with_capacity(n);
    search(adj, &mut cells, 0, &mut label, &mut best);
    best
}

fn search(adj: &[u8], cells: &mut [Vec<usize>], c: usize, label: &mut Vec<usize>, best: &mut u32) {
    if c == cells.len() {
        let n = label.len();
        let mut code = 0u32;
        for i in 0..n {
            for j in i + 1..n {
                code <<= 1;
                if adj[label[i]] & (1 << label[j]) != 0 {
                    code |= 1;
                }
            }
        }
        *best = (*best).max(code);
        return;
    }
    let cell = cells[c].clone();
    permute(&cell, &mut Vec::new(), &mut vec![false; cell.len()], &mut |perm| {
        let base = label.len();
        label.extend_from_slice(perm);
        search(adj, cells, c + 1, label, best);
        label.truncate(base);
    });
}

fn permute(items: &[usize], cur: &mut Vec<usize>, used: &mut [bool], f: &mut dyn FnMut(&[usize])) {
    if cur.len() == items.len() {
        f(cur);
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            cur.push(items[i]);
            permute(items, cur, used, f);
            cur.pop();
            used[i] = false;
        }
    }
}

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(all_graphs)
        .filter(|g| g.is_connected())
        .collect()
}
