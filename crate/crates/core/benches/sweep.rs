use std::hint::black_box;

use balanced_lie::certkit::sweep;
use balanced_lie::par::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for max_rank in [4, 8] {
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, max_rank), &max_rank, |b, &r| {
                b.iter(|| {
                    let rows = sweep(black_box(r), None, exec).unwrap();
                    assert!(rows.iter().all(|row| row.ok()));
                    rows
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
