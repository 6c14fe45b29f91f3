//! Benchmarks for the hot paths: cohomology solving, axiom checking,
//! twisting, and partition tables.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use gfrob_core::cohomology::{schur_h2, H2Solver};
use gfrob_core::gfa::{
    check_axioms, group_ring, partition, twist, twisted_group_ring, GFrobeniusAlgebra, TwistData,
};
use gfrob_core::groups::{make_group, Group, GroupSpec};

fn grp(spec: &str) -> Group {
    Arc::new(make_group(&GroupSpec::parse(spec).unwrap()).unwrap())
}

fn twisted_k4() -> GFrobeniusAlgebra {
    let g = grp("product(cyclic 2, cyclic 2)");
    let classes = schur_h2(&g).unwrap();
    let alpha = classes
        .elements()
        .into_iter()
        .find(|c| !c.is_trivial())
        .unwrap();
    twisted_group_ring(&g, &alpha, None).unwrap()
}

fn bench_schur(c: &mut Criterion) {
    let d4 = grp("dihedral 4");
    c.bench_function("schur_multiplier_d4", |b| {
        b.iter(|| {
            let solver = H2Solver::new(d4.clone());
            solver.schur().unwrap().order()
        })
    });
}

fn bench_axioms(c: &mut Criterion) {
    let a = twisted_k4();
    c.bench_function("check_axioms_twisted_k4", |b| {
        b.iter(|| check_axioms(&a).unwrap().all_passed())
    });
    let s3 = group_ring(&grp("symmetric 3"), None).unwrap();
    c.bench_function("check_axioms_s3_group_ring", |b| {
        b.iter(|| check_axioms(&s3).unwrap().all_passed())
    });
}

fn bench_twist(c: &mut Criterion) {
    let g = grp("product(cyclic 2, cyclic 2)");
    let a = group_ring(&g, None).unwrap();
    let alpha = schur_h2(&g)
        .unwrap()
        .elements()
        .into_iter()
        .find(|c| !c.is_trivial())
        .unwrap();
    let data = TwistData::universal(&alpha).unwrap();
    c.bench_function("twist_k4_group_ring", |b| {
        b.iter(|| twist(&a, &data).unwrap().total_dim())
    });
}

fn bench_partition(c: &mut Criterion) {
    let a = group_ring(&grp("dihedral 4"), None).unwrap();
    c.bench_function("partition_d4_group_ring", |b| b.iter(|| partition(&a).total));
}

criterion_group!(benches, bench_schur, bench_axioms, bench_twist, bench_partition);
criterion_main!(benches);
