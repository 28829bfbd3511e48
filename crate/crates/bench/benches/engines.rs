use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qhankel_core::hankel::{det_cofactor, det_fraction_free, hankel_full, CofactorOracle};
use qhankel_core::identities::{r_def, theta_series};
use qhankel_core::qpascal::triangle_rows;
use qhankel_core::QTriangle;

fn determinants(c: &mut Criterion) {
    let mut group = c.benchmark_group("det");
    for n in [4usize, 6, 8] {
        let m = hankel_full(1, n);
        group.bench_with_input(BenchmarkId::new("fraction-free", n), &m, |b, m| {
            b.iter(|| det_fraction_free(black_box(m)))
        });
        group.bench_with_input(BenchmarkId::new("cofactor", n), &m, |b, m| {
            b.iter(|| det_cofactor(black_box(m)).unwrap())
        });
    }
    let big = hankel_full(2, 10);
    let oracle = CofactorOracle::new(10);
    group.bench_function("fraction-free/10", |b| b.iter(|| det_fraction_free(black_box(&big))));
    group.bench_function("cofactor/10", |b| b.iter(|| oracle.det(black_box(&big)).unwrap()));
    group.finish();
}

fn ratios(c: &mut Criterion) {
    c.bench_function("r_def(2, 6)", |b| b.iter(|| r_def(black_box(2), black_box(6)).unwrap()));
}

fn series(c: &mut Criterion) {
    let mut group = c.benchmark_group("series-invert");
    for order in [10usize, 20, 30] {
        let f = theta_series(order);
        group.bench_with_input(BenchmarkId::from_parameter(order), &f, |b, f| b.iter(|| f.invert().unwrap()));
    }
    group.finish();
}

fn triangle(c: &mut Criterion) {
    c.bench_function("triangle 20 rows (cold memo)", |b| {
        b.iter(|| triangle_rows(&QTriangle::new(), black_box(20)))
    });
}

criterion_group!(benches, determinants, ratios, series, triangle);
criterion_main!(benches);
