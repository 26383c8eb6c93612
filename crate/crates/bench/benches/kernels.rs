use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mdcanon::canon::canonize;
use mdcanon::decomposition::{md_tree, quotient};
use mdcanon::generate::{random_cograph, random_graph, random_permutation_graph};
use mdcanon::realizer::find_realizers;
use mdcanon::{canonize_cograph, wedge_classes};
use std::hint::black_box;

fn bench_wedge_classes(c: &mut Criterion) {
    let mut group = c.benchmark_group("wedge_classes");
    for n in [32, 64, 128] {
        let g = random_graph(n, 0.3, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| wedge_classes(black_box(g)))
        });
    }
    group.finish();
}

fn bench_md_tree(c: &mut Criterion) {
    let mut group = c.benchmark_group("md_tree");
    for n in [16, 32, 64] {
        let g = random_graph(n, 0.3, 2);
        group.bench_with_input(BenchmarkId::new("random", n), &g, |b, g| {
            b.iter(|| md_tree(black_box(g)))
        });
        let g = random_cograph(n, 2);
        group.bench_with_input(BenchmarkId::new("cograph", n), &g, |b, g| {
            b.iter(|| md_tree(black_box(g)))
        });
    }
    group.finish();
}

fn bench_quotient(c: &mut Criterion) {
    let g = random_cograph(64, 3);
    c.bench_function("quotient/cograph_64", |b| {
        b.iter(|| quotient(black_box(&g)))
    });
}

fn bench_realizers(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_realizers");
    for n in [16, 32] {
        let g = random_permutation_graph(n, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| find_realizers(black_box(g)))
        });
    }
    group.finish();
}

fn bench_canonize(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonize");
    for n in [16, 32, 48] {
        let g = random_permutation_graph(n, 5);
        group.bench_with_input(BenchmarkId::new("perm", n), &g, |b, g| {
            b.iter(|| canonize(black_box(g)).unwrap())
        });
    }
    let g = random_cograph(64, 6);
    group.bench_function("cotree_64", |b| {
        b.iter(|| canonize_cograph(black_box(&g)).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_wedge_classes,
    bench_md_tree,
    bench_quotient,
    bench_realizers,
    bench_canonize
);
criterion_main!(benches);
