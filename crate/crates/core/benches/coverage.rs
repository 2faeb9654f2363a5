//! Parallel against sequential execution of the hot paths.
//!
//! With the default `parallel` feature every workload runs twice: on
//! rayon's global pool and inside a one-thread pool. Building with
//! `--no-default-features` benches the plain sequential loops.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use gallery_core::harness::{claim_heptagon_strict, fixtures, search_counterexample, VerifyConfig};
use gallery_core::strategies::{evaluate_strategy, Interpretation};
use gallery_core::visibility::{coverage, grid_oracle};

type Workload = (&'static str, fn());

fn workloads() -> Vec<Workload> {
    vec![
        ("nonagon_coverage", || {
            black_box(coverage(&fixtures::paper_nonagon(), &[0, 3, 6]).unwrap());
        }),
        ("octagon_every_third", || {
            black_box(evaluate_strategy(
                &fixtures::strict_octagon(),
                Interpretation::Strict,
            ));
        }),
        ("nonagon_grid_100", || {
            black_box(grid_oracle(&fixtures::paper_nonagon(), &[3, 7], 100));
        }),
        ("search_octagon_64", || {
            black_box(search_counterexample(8, Interpretation::Generous, 64, 1));
        }),
        ("heptagon_claim_50", || {
            let cfg = VerifyConfig {
                trials: 50,
                ..VerifyConfig::default()
            };
            black_box(claim_heptagon_strict(&cfg));
        }),
    ]
}

#[cfg(feature = "parallel")]
fn bench(c: &mut Criterion) {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let threads = rayon::current_num_threads();
    for (name, work) in workloads() {
        let mut g = c.benchmark_group(name);
        g.sample_size(10);
        g.bench_function(criterion::BenchmarkId::new("global_pool", threads), |b| {
            b.iter(work)
        });
        g.bench_function("one_thread_pool", |b| b.iter(|| single.install(work)));
        g.finish();
    }
}

#[cfg(not(feature = "parallel"))]
fn bench(c: &mut Criterion) {
    for (name, work) in workloads() {
        let mut g = c.benchmark_group(name);
        g.sample_size(10);
        g.bench_function("sequential", |b| b.iter(work));
        g.finish();
    }
}

criterion_group!(benches, bench);
criterion_main!(benches);
