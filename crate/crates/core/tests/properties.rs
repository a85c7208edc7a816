mod common;

use proptest::prelude::*;
use ricci_core::curvature::{curvature_profile, kappa_eps};
use ricci_core::generators::random_connected;
use ricci_core::io::{parse_graph, to_edge_list, to_json};
use ricci_core::matching::{
    counting_identity_check, maximum_matching, maximum_matching_with_order, VertexOrder,
};
use ricci_core::spectral::{eigenvalues, normalized_laplacian, SymMatrix, DEFAULT_TOL};
use ricci_core::transport::{check_lipschitz, dual_bound};
use ricci_core::{wasserstein, BipartiteGraph, Graph, Measure, Potential, Rational, Side};

fn graph() -> impl Strategy<Value = Graph> {
    (2usize..=9, 0.0f64..0.8, any::<u64>())
        .prop_map(|(n, p, seed)| random_connected(n, p, seed).unwrap())
}

fn measure(n: usize) -> impl Strategy<Value = Measure> {
    (1i64..=12, prop::collection::vec((0..n, 1i64..=6), 1..=4)).prop_map(|(den, pts)| {
        let total: i64 = pts.iter().map(|p| p.1).sum();
        Measure::new(pts.into_iter().map(|(v, m)| (v, Rational::new(m * den, total * den)))).unwrap()
    })
}

fn graph_and_measures(k: usize) -> impl Strategy<Value = (Graph, Vec<Measure>)> {
    graph().prop_flat_map(move |g| {
        let n = g.order();
        (Just(g), prop::collection::vec(measure(n), k))
    })
}

fn bipartite() -> impl Strategy<Value = BipartiteGraph> {
    (0usize..=8, 0usize..=8).prop_flat_map(|(l, r)| {
        prop::collection::vec(any::<bool>(), l * r).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..l)
                .flat_map(|i| (0..r).map(move |j| (i, j)))
                .filter(|&(i, j)| bits[i * r + j])
                .collect();
            BipartiteGraph::from_local(l, r, &edges)
        })
    })
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * (1.0 + b.abs())
}

/// Roots of `x^3 + a x^2 + b x + c` with three real roots, ascending.
fn cubic_roots(a: f64, b: f64, c: f64) -> [f64; 3] {
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    if p.abs() < 1e-300 {
        let t = (-q).cbrt();
        return [t + shift; 3];
    }
    let m = 2.0 * (-p / 3.0).sqrt();
    let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
    let theta = arg.acos() / 3.0;
    let mut roots = [0.0; 3];
    for (k, root) in roots.iter_mut().enumerate() {
        *root = m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift;
    }
    roots.sort_by(f64::total_cmp);
    roots
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn transport_is_a_metric((g, ms) in graph_and_measures(3)) {
        let w = |a: &Measure, b: &Measure| wasserstein(&g, a, b).unwrap().distance;
        let (ab, ba) = (w(&ms[0], &ms[1]), w(&ms[1], &ms[0]));
        prop_assert_eq!(&ab, &ba);
        prop_assert!(!ab.is_negative());
        prop_assert!(w(&ms[0], &ms[0]).is_zero());
        prop_assert!(ab <= w(&ms[0], &ms[2]) + w(&ms[2], &ms[1]));
    }

    #[test]
    fn lipschitz_potentials_bound_the_distance((g, ms) in graph_and_measures(2), anchor in any::<prop::sample::Index>(), cap in 0u32..4) {
        let a = anchor.index(g.order());
        let f = Potential::new((0..g.order()).map(|v| i64::from(g.dist(a, v).unwrap().min(cap))).collect());
        prop_assert!(check_lipschitz(&g, &f).is_ok());
        let w = wasserstein(&g, &ms[0], &ms[1]).unwrap();
        prop_assert!(dual_bound(&g, &f, &ms[0], &ms[1]).unwrap() <= w.distance);
        prop_assert_eq!(dual_bound(&g, &w.potential, &ms[0], &ms[1]).unwrap(), w.distance.clone());
        prop_assert_eq!(w.plan.cost(&g).unwrap(), w.distance);
    }

    #[test]
    fn matching_size_does_not_depend_on_scan_order(h in bipartite()) {
        let asc = maximum_matching_with_order(&h, VertexOrder::Ascending);
        let desc = maximum_matching_with_order(&h, VertexOrder::Descending);
        prop_assert_eq!(asc.size(), desc.size());
        prop_assert_eq!(asc.size(), common::matching_oracle(&h));
        for side in [Side::Left, Side::Right] {
            prop_assert!(counting_identity_check(&h, &asc, side).unwrap().holds);
            prop_assert!(counting_identity_check(&h, &desc, side).unwrap().holds);
        }
    }

    #[test]
    fn matching_is_valid(h in bipartite()) {
        let m = maximum_matching(&h);
        for (i, j) in m.pairs() {
            prop_assert!(h.has_edge(i, j));
            prop_assert_eq!(m.mate(Side::Right, j), Some(i));
        }
    }

    #[test]
    fn curvature_is_symmetric_in_the_edge(g in graph()) {
        let half = Rational::new(1, 2);
        for (x, y) in g.edges() {
            prop_assert_eq!(kappa_eps(&g, (x, y), &half).unwrap(), kappa_eps(&g, (y, x), &half).unwrap());
        }
    }

    #[test]
    fn profile_is_deterministic(g in graph()) {
        prop_assert_eq!(curvature_profile(&g, false).unwrap(), curvature_profile(&g, false).unwrap());
    }

    #[test]
    fn laplacian_spectrum_range_and_trace(g in graph()) {
        let ev = eigenvalues(&normalized_laplacian(&g).unwrap(), DEFAULT_TOL).unwrap();
        let n = g.order() as f64;
        prop_assert!((ev.iter().sum::<f64>() - n).abs() <= n * DEFAULT_TOL);
        prop_assert!(ev.iter().all(|&x| (-1e-9..=2.0 + 1e-9).contains(&x)));
        prop_assert!(ev[0].abs() < 1e-9);
        prop_assert!(ev[1] > 1e-9);
    }

    #[test]
    fn zero_multiplicity_counts_components(parts in prop::collection::vec((2usize..=6, 0.0f64..0.7, any::<u64>()), 1..=4)) {
        let mut edges = Vec::new();
        let mut offset = 0;
        for &(n, p, seed) in &parts {
            let g = random_connected(n, p, seed).unwrap();
            edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
            offset += n;
        }
        let g = Graph::new(offset, edges).unwrap();
        prop_assert_eq!(g.component_count(), parts.len());
        let ev = eigenvalues(&normalized_laplacian(&g).unwrap(), DEFAULT_TOL).unwrap();
        prop_assert_eq!(ev.iter().filter(|&&x| x.abs() < 1e-9).count(), parts.len());
    }

    #[test]
    fn jacobi_two_by_two(a in -1.0f64..1.0, b in -1.0f64..1.0, c in -1.0f64..1.0) {
        let m = SymMatrix::from_upper(2, |i, j| [[a, b], [b, c]][i][j]);
        let ev = eigenvalues(&m, DEFAULT_TOL).unwrap();
        let (mean, half_gap) = ((a + c) / 2.0, (((a - c) / 2.0).powi(2) + b * b).sqrt());
        prop_assert!(close(ev[0], mean - half_gap) && close(ev[1], mean + half_gap), "{ev:?}");
    }

    #[test]
    fn jacobi_three_by_three(e in prop::array::uniform6(-1.0f64..1.0)) {
        let a = [[e[0], e[1], e[2]], [e[1], e[3], e[4]], [e[2], e[4], e[5]]];
        let m = SymMatrix::from_upper(3, |i, j| a[i][j]);
        let ev = eigenvalues(&m, DEFAULT_TOL).unwrap();
        let tr = a[0][0] + a[1][1] + a[2][2];
        let minors = a[0][0] * a[1][1] - a[0][1] * a[0][1]
            + a[0][0] * a[2][2] - a[0][2] * a[0][2]
            + a[1][1] * a[2][2] - a[1][2] * a[1][2];
        let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[1][2])
            - a[0][1] * (a[0][1] * a[2][2] - a[1][2] * a[0][2])
            + a[0][2] * (a[0][1] * a[1][2] - a[1][1] * a[0][2]);
        let charpoly = |x: f64| x * x * x - tr * x * x + minors * x - det;
        prop_assert!((ev.iter().sum::<f64>() - tr).abs() <= 1e-12);
        for &x in &ev {
            prop_assert!(charpoly(x).abs() <= 1e-12, "p({x}) = {}", charpoly(x));
        }
        // The closed-form roots are only accurate when well separated.
        let roots = cubic_roots(-tr, minors, -det);
        if roots[1] - roots[0] > 1e-2 && roots[2] - roots[1] > 1e-2 {
            for (x, y) in ev.iter().zip(roots) {
                prop_assert!((x - y).abs() <= 1e-12, "{ev:?} vs {roots:?}");
            }
        }
    }

    #[test]
    fn rational_text_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let q = Rational::new(n, d);
        prop_assert_eq!(q.to_string().parse::<Rational>().unwrap(), q);
    }

    #[test]
    fn graph_formats_round_trip(g in graph()) {
        let a = parse_graph(&to_edge_list(&g)).unwrap();
        let b = parse_graph(&to_json(&g)).unwrap();
        let edges: Vec<_> = g.edges().collect();
        prop_assert_eq!(a.edges().collect::<Vec<_>>(), edges.clone());
        prop_assert_eq!(b.edges().collect::<Vec<_>>(), edges);
    }
}
