//! Benchmarks for the exact kernels that dominate the verification suites:
//! cyclotomic arithmetic, fraction-free rank, Hermite normal form, Pfaffians,
//! and sparse rank over a prime field.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use adler19::cyclo::rat;
use adler19::jacobian;
use adler19::linalg;
use adler19::periods;
use adler19_bench::{dense_cyclotomic, random_antisymmetric, Xorshift};

fn cyclo_ops(c: &mut Criterion) {
    let mut rng = Xorshift(0x9e3779b97f4a7c15);
    let a = dense_cyclotomic(&mut rng);
    let b = dense_cyclotomic(&mut rng);
    c.bench_function("cyclotomic multiply, dense order 19", |bench| {
        bench.iter(|| black_box(a.mul(black_box(&b))))
    });
    c.bench_function("cyclotomic inverse, dense order 19", |bench| {
        bench.iter(|| black_box(a.inverse().unwrap()))
    });
}

fn exact_rank(c: &mut Criterion) {
    let f = jacobian::pencil(&rat(-2, 1));
    c.bench_function("degree-3 multiplication matrix rank (165 x 81)", |bench| {
        bench.iter(|| black_box(jacobian::jacobian_rank(black_box(&f), 3)))
    });
}

fn lattice_kernels(c: &mut Criterion) {
    c.bench_function("lattice HNF from 18 generators in Q^162", |bench| {
        bench.iter(|| black_box(periods::lattice_lambda8()))
    });
    let l0 = periods::lattice_lambda0();
    c.bench_function("Gram Pfaffian on an 18-generator lattice", |bench| {
        bench.iter(|| black_box(periods::gram_pfaffian(black_box(&l0), &rat(1, 1)).unwrap()))
    });
    let mut rng = Xorshift(0x2545f4914f6cdd1d);
    let a = random_antisymmetric(&mut rng, 18);
    c.bench_function("Pfaffian of a random antisymmetric 18 x 18", |bench| {
        bench.iter(|| black_box(linalg::pfaffian(black_box(&a)).unwrap()))
    });
}

fn sparse_rank(c: &mut Criterion) {
    let f = jacobian::pencil(&rat(-2, 1));
    let mut group = c.benchmark_group("sparse rank mod p");
    group.sample_size(10);
    group.bench_function("degree-10 smoothness matrix (115830 x 43758)", |bench| {
        bench.iter(|| black_box(jacobian::smooth_certificate_mod_p(black_box(&f), 101).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, cyclo_ops, exact_rank, lattice_kernels, sparse_rank);
criterion_main!(benches);
