use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kn_core::fusion::{decompose, tensor_module};
use kn_core::hopf::verify_hopf_axioms;
use kn_core::nichols::{graded_dims_with, quantum_symmetrizer, NicholsOptions};
use kn_core::yd::{braided_space, build_simple, SimpleLabel};
use kn_core::{cyc, CycNum, KnAlgebra};
use std::hint::black_box;

fn cyclotomic(c: &mut Criterion) {
    let mut g = c.benchmark_group("cyclotomic");
    for n in [3u32, 7, 15] {
        let a: CycNum = (0..n as i64).map(|k| cyc(n, k * k).unwrap()).fold(CycNum::zero(n).unwrap(), |s, x| s + x);
        let b = &a + &cyc(n, 1).unwrap();
        g.bench_with_input(BenchmarkId::new("mul", n), &n, |bch, _| bch.iter(|| black_box(&a) * black_box(&b)));
        g.bench_with_input(BenchmarkId::new("inv", n), &n, |bch, _| bch.iter(|| black_box(&b).inv().unwrap()));
    }
    g.finish();
}

fn hopf(c: &mut Criterion) {
    let mut g = c.benchmark_group("hopf_axioms");
    g.sample_size(10);
    for n in [3u32, 5] {
        let a = KnAlgebra::new(n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |bch, a| bch.iter(|| verify_hopf_axioms(a)));
    }
    g.finish();
}

fn fusion(c: &mut Criterion) {
    let a = KnAlgebra::new(3).unwrap();
    let w = build_simple(a, SimpleLabel::parse(3, "W(-1,0,0)").unwrap()).unwrap();
    c.bench_function("decompose W0⊗W0 n=3", |bch| bch.iter(|| decompose(&tensor_module(&w, &w).unwrap()).unwrap()));
}

fn nichols(c: &mut Criterion) {
    let a = KnAlgebra::new(3).unwrap();
    let fk = braided_space(&build_simple(a, SimpleLabel::parse(3, "W(-1,0,0)").unwrap()).unwrap());
    let a2 = braided_space(&build_simple(a, SimpleLabel::parse(3, "U(1,0,1,0)").unwrap()).unwrap());
    let mut g = c.benchmark_group("nichols");
    g.sample_size(10);
    g.bench_function("QS_4 W(-1,0,0)", |bch| bch.iter(|| quantum_symmetrizer(&fk, 4).unwrap()));
    g.bench_function("dims W(-1,0,0) cutoff 6", |bch| {
        bch.iter(|| graded_dims_with(&fk, &NicholsOptions::new(6)).unwrap())
    });
    g.bench_function("dims U(1,0,1,0) cutoff 9", |bch| {
        bch.iter(|| graded_dims_with(&a2, &NicholsOptions::new(9)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, cyclotomic, hopf, fusion, nichols);
criterion_main!(benches);
