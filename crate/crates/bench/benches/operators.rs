use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use dunkl_bench::{generic, specialized, weighted_power};
use dunkl_core::dunkl::{alternating, dunkl, dunkl_all};
use dunkl_core::jackbasis::PBasis;
use dunkl_core::krawtchouk::q_poly;
use dunkl_core::singular::{family_half, is_singular, module_rank};

fn operators(c: &mut Criterion) {
    let mut g = c.benchmark_group("dunkl");
    for n in [3, 4, 5] {
        let f = weighted_power(n, 5);
        let gen = generic(n);
        let spec = specialized(n, -1, 2);
        g.bench_with_input(BenchmarkId::new("generic", n), &f, |b, f| {
            b.iter(|| dunkl(1, black_box(f), &gen).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("specialized", n), &f, |b, f| {
            b.iter(|| dunkl_all(black_box(f), &spec).unwrap())
        });
    }
    g.finish();
}

fn bases(c: &mut Criterion) {
    let mut g = c.benchmark_group("basis");
    g.sample_size(10);
    for n in [3, 5] {
        g.bench_function(BenchmarkId::new("omega_6_3", n), |b| {
            b.iter(|| PBasis::new(&generic(n)).omega(6, 3).unwrap())
        });
    }
    g.bench_function("q_7_0_N3_half", |b| {
        b.iter(|| q_poly(7, 0, &specialized(3, -1, 2)).unwrap())
    });
    g.finish();
}

fn singular(c: &mut Criterion) {
    let mut g = c.benchmark_group("singular");
    g.sample_size(10);
    let a = alternating(4, 1).unwrap();
    let ctx = specialized(4, -1, 2);
    g.bench_function("is_singular_a4", |b| {
        b.iter(|| is_singular(black_box(&a), &ctx).unwrap())
    });
    g.bench_function("family_half_0_2", |b| b.iter(|| family_half(0, 2).unwrap()));
    let h = family_half(0, 2).unwrap();
    let hctx = specialized(5, -1, 2);
    g.bench_function("module_rank_half_0_2", |b| {
        b.iter(|| module_rank(black_box(&h.polynomial), &hctx).unwrap())
    });
    g.finish();
}

criterion_group!(benches, operators, bases, singular);
criterion_main!(benches);
