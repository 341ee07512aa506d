//! Benchmarks for the hot paths: colex ranking, objective evaluation, the
//! growth transform, and full maximization on small graphs.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use hyperlag::{
    colex_rank, colex_unrank, evaluate, growth_step, make_colex_graph, maximize, SolverOptions,
    Weighting,
};

fn bench_colex(c: &mut Criterion) {
    c.bench_function("colex_unrank r=4 k=0..1000", |b| {
        b.iter(|| {
            for k in 0..1000u64 {
                black_box(colex_unrank(4, black_box(k)));
            }
        })
    });
    let sets: Vec<_> = (0..1000u64).map(|k| colex_unrank(4, k)).collect();
    c.bench_function("colex_rank r=4 1000 sets", |b| {
        b.iter(|| {
            for s in &sets {
                black_box(colex_rank(black_box(s)));
            }
        })
    });
}

fn bench_evaluate(c: &mut Criterion) {
    let g = make_colex_graph(3, 35).unwrap(); // [7]^{(3)}
    let x = Weighting::uniform(g.n());
    c.bench_function("evaluate C_{3,35}", |b| {
        b.iter(|| black_box(evaluate(black_box(&g), black_box(&x)).unwrap()))
    });
    c.bench_function("growth_step C_{3,35}", |b| {
        b.iter(|| black_box(growth_step(black_box(&g), black_box(&x)).unwrap()))
    });
}

fn bench_maximize(c: &mut Criterion) {
    let g = make_colex_graph(3, 6).unwrap();
    let opts = SolverOptions::default();
    c.bench_function("maximize C_{3,6} default options", |b| {
        b.iter(|| black_box(maximize(black_box(&g), black_box(&opts)).unwrap()))
    });
    let quick = SolverOptions {
        restarts: 2,
        ..SolverOptions::default()
    };
    c.bench_function("maximize C_{3,6} 2 restarts", |b| {
        b.iter(|| black_box(maximize(black_box(&g), black_box(&quick)).unwrap()))
    });
}

criterion_group!(benches, bench_colex, bench_evaluate, bench_maximize);
criterion_main!(benches);
