use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use treedist::{color_main_algorithm, distinguishing_number, fix_report, fixtures, Budget};
use treedist_bench::corpus_tree;

fn main_algorithm(c: &mut Criterion) {
    let mut group = c.benchmark_group("color_main_algorithm");
    for n in [40, 400, 4000] {
        let tree = corpus_tree(n, 8, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &tree, |b, t| {
            b.iter(|| color_main_algorithm(black_box(t), 3).unwrap())
        });
    }
    group.finish();
}

fn orbits(c: &mut Criterion) {
    let tree = corpus_tree(2000, 6, 2);
    let (col, _) = color_main_algorithm(&tree, 2).unwrap();
    c.bench_function("fix_report/2000", |b| {
        b.iter(|| fix_report(black_box(&tree), &col).unwrap())
    });
}

fn search(c: &mut Criterion) {
    let tree = fixtures::complete_tree(3, 3);
    let budget = Budget::default().search();
    c.bench_function("distinguishing_number/complete3", |b| {
        b.iter(|| distinguishing_number(black_box(&tree), 4, &budget).unwrap())
    });
}

criterion_group!(benches, main_algorithm, orbits, search);
criterion_main!(benches);
