use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cyclic_hh_core::comparison::{verify_q_chainmap, verify_s_chainmap};
use cyclic_hh_core::complexes::{hoch_circle, HochCochain};
use cyclic_hh_core::gerstenhaber::{closed_bracket, oracle_bracket};
use cyclic_hh_core::{BasisClass, GroupCtx};

fn closed(c: &mut Criterion) {
    let ctx = GroupCtx::new(9, 3).unwrap();
    let (a, b) = (BasisClass::new(&ctx, 3, 4), BasisClass::new(&ctx, 2, 7));
    c.bench_function("closed_bracket m=9", |bench| {
        bench.iter(|| closed_bracket(&ctx, black_box(a), black_box(b)))
    });
}

fn oracle(c: &mut Criterion) {
    let ctx = GroupCtx::new(3, 3).unwrap();
    let mut group = c.benchmark_group("oracle_bracket m=3");
    for (n, k) in [(1, 1), (2, 2), (3, 3)] {
        let (a, b) = (BasisClass::new(&ctx, n, 1), BasisClass::new(&ctx, k, 2));
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{n},{k}")),
            &(a, b),
            |bench, &(a, b)| bench.iter(|| oracle_bracket(&ctx, a, b).unwrap()),
        );
    }
    group.finish();
}

fn circle(c: &mut Criterion) {
    let ctx = GroupCtx::new(9, 3).unwrap();
    let f = HochCochain::from_fn(&ctx, 3, |t| ctx.monomial(t[0], ctx.beta1(t[2]))).unwrap();
    let h = HochCochain::from_fn(&ctx, 2, |t| ctx.monomial(ctx.mul(t[0], t[1]), ctx.beta1(t[1]))).unwrap();
    c.bench_function("hoch_circle m=9 (3,2)", |bench| {
        bench.iter(|| hoch_circle(&ctx, &f, &h).unwrap())
    });
}

fn chain_maps(c: &mut Criterion) {
    let ctx = GroupCtx::new(9, 3).unwrap();
    let mut group = c.benchmark_group("chain maps m=9");
    group.sample_size(10);
    group.bench_function("q up to degree 4", |bench| {
        bench.iter(|| verify_q_chainmap(&ctx, 3).unwrap())
    });
    group.bench_function("s up to degree 8", |bench| {
        bench.iter(|| verify_s_chainmap(&ctx, 7).unwrap())
    });
    group.finish();
}

criterion_group!(benches, closed, oracle, circle, chain_maps);
criterion_main!(benches);
