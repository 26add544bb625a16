use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use kummer7_core::qseries::{j_expansion, weight3_level7_form};

fn eta_expansion(c: &mut Criterion) {
    let g3 = weight3_level7_form();
    let mut group = c.benchmark_group("eta_expand_g3");
    for terms in [100usize, 500, 2000] {
        group.bench_with_input(BenchmarkId::from_parameter(terms), &terms, |b, &n| {
            b.iter(|| black_box(g3.expand(n).unwrap()))
        });
    }
    group.finish();
}

fn j_function(c: &mut Criterion) {
    let mut group = c.benchmark_group("j_expansion");
    for terms in [50usize, 200] {
        group.bench_with_input(BenchmarkId::from_parameter(terms), &terms, |b, &n| {
            b.iter(|| black_box(j_expansion(n).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, eta_expansion, j_function);
criterion_main!(benches);
