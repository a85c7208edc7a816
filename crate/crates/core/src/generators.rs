//! Named graph families with fixed vertex labelings.
//!
//! | family | labeling |
//! |---|---|
//! | `complete:n` | vertices `0..n`, all pairs adjacent |
//! | `cycle:n` | `i ~ i+1 (mod n)` |
//! | `complete_bipartite:s,t` | left part `0..s`, right part `s..s+t` |
//! | `petersen` | 2-subsets of `{0..4}` in lexicographic order, adjacent iff disjoint |
//! | `rooks:r` | cell `(i, j)` is vertex `i*r + j`, adjacent iff same row or column |
//! | `shrikhande` | `(a, b)` in `Z4 x Z4` is vertex `4a + b`, adjacent iff the difference is `±(1,0)`, `±(0,1)` or `±(1,1)` |
//! | `paley:q` | residues `0..q`, adjacent iff the difference is a nonzero square mod `q` |
//! | `hoffman_singleton` | pentagon `P_h[j]` is `5h + j`, pentagram `Q_i[j]` is `25 + 5i + j`; `P_h[j] ~ P_h[j+1]`, `Q_i[j] ~ Q_i[j+2]`, `P_h[j] ~ Q_i[h*i + j]` (indices mod 5) |

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Rooks(usize),
    Shrikhande,
    Paley(usize),
    HoffmanSingleton,
}

impl Family {
    pub fn generate(self) -> Result<Graph> {
        match self {
            Family::Complete(n) => complete(n),
            Family::Cycle(n) => cycle(n),
            Family::CompleteBipartite(s, t) => complete_bipartite(s, t),
            Family::Petersen => Ok(petersen()),
            Family::Rooks(r) => rooks(r),
            Family::Shrikhande => Ok(shrikhande()),
            Family::Paley(q) => paley(q),
            Family::HoffmanSingleton => Ok(hoffman_singleton()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::CompleteBipartite(s, t) => write!(f, "complete_bipartite:{s},{t}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Rooks(r) => write!(f, "rooks:{r}"),
            Family::Shrikhande => write!(f, "shrikhande"),
            Family::Paley(q) => write!(f, "paley:{q}"),
            Family::HoffmanSingleton => write!(f, "hoffman_singleton"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `NAME[:ARGS]`, e.g. `complete:6`, `complete_bipartite:3,3`, `petersen`.
    fn from_str(spec: &str) -> Result<Self> {
        let (name, args) = match spec.split_once(':') {
            Some((name, args)) => (name.trim(), Some(args.trim())),
            None => (spec.trim(), None),
        };
        let bad = |why: &str| Error::UnsupportedParameter(format!("{spec:?}: {why}"));
        let ints = |count: usize| -> Result<Vec<usize>> {
            let args = args.ok_or_else(|| bad("missing arguments"))?;
            let parsed = args
                .split(',')
                .map(|a| a.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad("arguments must be non-negative integers"))?;
            if parsed.len() != count {
                return Err(bad(&format!("expected {count} argument(s)")));
            }
            Ok(parsed)
        };
        let no_args = |family: Family| -> Result<Family> {
            match args {
                None => Ok(family),
                Some(_) => Err(bad("takes no arguments")),
            }
        };
        match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "complete" | "k" => Ok(Family::Complete(ints(1)?[0])),
            "cycle" | "c" => Ok(Family::Cycle(ints(1)?[0])),
            "complete_bipartite" | "kst" => {
                let v = ints(2)?;
                Ok(Family::CompleteBipartite(v[0], v[1]))
            }
            "petersen" => no_args(Family::Petersen),
            "rooks" | "rook" => Ok(Family::Rooks(ints(1)?[0])),
            "shrikhande" => no_args(Family::Shrikhande),
            "paley" => Ok(Family::Paley(ints(1)?[0])),
            "hoffman_singleton" => no_args(Family::HoffmanSingleton),
            _ => Err(bad("unknown generator")),
        }
    }
}

/// Generates a graph from a `NAME[:ARGS]` string.
pub fn generate(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.generate()
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::UnsupportedParameter("complete graph needs n >= 1".into()));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::UnsupportedParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(Error::UnsupportedParameter(
            "complete bipartite graph needs both parts non-empty".into(),
        ));
    }
    Graph::new(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
}

pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let disjoint = |p: (usize, usize), q: (usize, usize)| {
        p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1
    };
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if disjoint(pairs[i], pairs[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(10, edges).expect("petersen construction is valid")
}

pub fn rooks(r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::UnsupportedParameter(format!("rook's graph needs r >= 2, got {r}")));
    }
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let v = i * r + j;
            for k in j + 1..r {
                edges.push((v, i * r + k));
            }
            for k in i + 1..r {
                edges.push((v, k * r + j));
            }
        }
    }
    Graph::new(r * r, edges)
}

pub fn shrikhande() -> Graph {
    const STEPS: [(usize, usize); 6] = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in STEPS {
                edges.push((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4));
            }
        }
    }
    Graph::new(16, edges).expect("shrikhande construction is valid")
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|k| k * k <= q).all(|k| !q.is_multiple_of(k))
}

/// Paley graph on a prime `q ≡ 1 (mod 4)`.
pub fn paley(q: usize) -> Result<Graph> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(Error::UnsupportedParameter(format!(
            "paley graph needs a prime q with q = 1 (mod 4), got {q}"
        )));
    }
    let mut square = vec![false; q];
    for k in 1..q {
        square[k * k % q] = true;
    }
    let mut edges = Vec::new();
    for u in 0..q {
        for v in u + 1..q {
            if square[v - u] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(q, edges)
}

pub fn hoffman_singleton() -> Graph {
    let pentagon = |h: usize, j: usize| 5 * h + j % 5;
    let pentagram = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((pentagon(h, j), pentagon(h, j + 1)));
            edges.push((pentagram(h, j), pentagram(h, j + 2)));
            for i in 0..5 {
                edges.push((pentagon(h, j), pentagram(i, h * i + j)));
            }
        }
    }
    Graph::new(50, edges).expect("hoffman-singleton construction is valid")
}

/// Seeded random connected graph on `n` vertices.
///
/// Algorithm (stable across releases so corpora are reproducible): a
/// `ChaCha8Rng` seeded with `seed_from_u64(seed)`; for `v = 1..n` attach `v`
/// to `gen_range(0..v)`; then for every pair `u < v` in lexicographic order
/// add the edge when `gen_bool(p)` succeeds.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::UnsupportedParameter("random graph needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}
