use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use stoplat::npo::{check_jordan_dedekind, check_semimodular, count_npo, COUNT_LIMIT};
use stoplat::reductions::{superreduction, verify_theorem5};
use stoplat::Poset;
use stoplat_bench::{grid, targets};

fn bench_ideals(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_ideals");
    for k in [3, 4, 5] {
        let p = grid(k);
        group.bench_with_input(BenchmarkId::new("grid", k), &p, |b, p| {
            b.iter(|| black_box(p).enumerate_ideals())
        });
    }
    let d = Poset::discrete(16).unwrap();
    group.bench_function("discrete_16", |b| b.iter(|| black_box(&d).count_ideals()));
    group.finish();
}

fn bench_npo(c: &mut Criterion) {
    let mut group = c.benchmark_group("npo");
    group.sample_size(10);
    for n in [6, 7, 8] {
        group.bench_with_input(BenchmarkId::new("count", n), &n, |b, &n| {
            b.iter(|| count_npo(n, COUNT_LIMIT).unwrap())
        });
    }
    group.bench_function("semimodular_5", |b| {
        b.iter(|| check_semimodular(5).unwrap())
    });
    group.bench_function("jordan_dedekind_5", |b| {
        b.iter(|| check_jordan_dedekind(5).unwrap())
    });
    group.finish();
}

fn bench_superreduction(c: &mut Criterion) {
    let mut group = c.benchmark_group("superreduction");
    for n in [5, 7] {
        let qs = targets(n, 8, 11);
        let base = Poset::discrete(n).unwrap();
        group.bench_with_input(BenchmarkId::new("discrete_base", n), &qs, |b, qs| {
            b.iter(|| {
                for q in qs {
                    black_box(superreduction(&base, q, &q.default_linear_extension()).unwrap());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("theorem5", n), &qs, |b, qs| {
            b.iter(|| qs.iter().all(|q| verify_theorem5(q).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_ideals, bench_npo, bench_superreduction);
criterion_main!(benches);
