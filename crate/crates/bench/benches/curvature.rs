use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ricci_core::curvature::{curvature_profile, edge_transport, srg_curvature_certified};
use ricci_core::generators::{hoffman_singleton, paley};
use ricci_core::matching::maximum_matching;
use ricci_core::neighborhood::{decompose, induced_bipartite};
use ricci_core::spectral::{eigenvalues, normalized_laplacian, DEFAULT_TOL};
use ricci_core::Rational;

fn transport(c: &mut Criterion) {
    let g = hoffman_singleton();
    let e = g.edges().next().unwrap();
    let half = Rational::new(1, 2);
    c.bench_function("w1 hoffman_singleton edge", |b| {
        b.iter(|| edge_transport(&g, black_box(e), &half).unwrap())
    });
    c.bench_function("certified hoffman_singleton edge", |b| {
        b.iter(|| srg_curvature_certified(&g, black_box(e)).unwrap())
    });
}

fn profile(c: &mut Criterion) {
    let g = paley(29).unwrap();
    c.bench_function("certified profile paley:29", |b| {
        b.iter(|| curvature_profile(black_box(&g), true).unwrap())
    });
}

fn matching(c: &mut Criterion) {
    let g = paley(41).unwrap();
    let cn = decompose(&g, g.edges().next().unwrap()).unwrap();
    let h = induced_bipartite(&g, &cn);
    c.bench_function("maximum matching paley:41", |b| b.iter(|| maximum_matching(black_box(&h))));
}

fn spectrum(c: &mut Criterion) {
    let l = normalized_laplacian(&hoffman_singleton()).unwrap();
    c.bench_function("jacobi hoffman_singleton laplacian", |b| {
        b.iter(|| eigenvalues(black_box(&l), DEFAULT_TOL).unwrap())
    });
}

criterion_group!(benches, transport, profile, matching, spectrum);
criterion_main!(benches);
