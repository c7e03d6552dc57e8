use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qexpand_core::exec::Exec;
use qexpand_core::identities::run_all;
use qexpand_core::numeric::run_grid;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn symbolic_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("symbolic_suite");
    group.sample_size(10);
    for order in [4usize, 6] {
        for (label, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(label, order), &order, |bch, &n| {
                bch.iter(|| black_box(run_all(n, None, 7, mode)))
            });
        }
    }
    group.finish();
}

fn numeric_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("numeric_grid");
    group.sample_size(10);
    for (label, mode) in MODES {
        group.bench_function(label, |bch| bch.iter(|| black_box(run_grid(128, "1e-25", mode).unwrap())));
    }
    group.finish();
}

criterion_group!(benches, symbolic_suite, numeric_grid);
criterion_main!(benches);
