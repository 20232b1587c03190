use criterion::{black_box, criterion_group, criterion_main, Criterion};

use dt4_core::geometry::{dt_invariant, enumerate_fixed_points, AxisChoices, DtMode, Insertion, ToricGeometry};
use dt4_core::partitions::{enumerate_curve, enumerate_solid, PlanePartition};
use dt4_core::vertex::{sqrt_vertex_curve_prime, VertexContext};
use dt4_core::{euler, NormalDegrees};

fn enumeration(c: &mut Criterion) {
    c.bench_function("solid partitions n=8", |b| b.iter(|| enumerate_solid(black_box(8)).len()));
    let mut legs: [PlanePartition; 4] = Default::default();
    legs[0] = PlanePartition::new([[0, 0, 0], [1, 0, 0]]).unwrap();
    legs[3] = PlanePartition::new([[0, 0, 0]]).unwrap();
    c.bench_function("curve partitions two legs, 3 extra", |b| b.iter(|| enumerate_curve(black_box(&legs), 3).len()));
}

fn vertices(c: &mut Criterion) {
    let mut legs: [PlanePartition; 4] = Default::default();
    legs[0] = PlanePartition::new([[0, 0, 0], [0, 1, 0]]).unwrap();
    legs[1] = PlanePartition::new([[0, 0, 0]]).unwrap();
    let p = enumerate_curve(&legs, 2).pop().unwrap();
    c.bench_function("signed curve vertex class", |b| {
        b.iter(|| {
            let ctx = VertexContext::new(black_box(p.clone()));
            (1..=4).map(|i| euler(&-sqrt_vertex_curve_prime(&ctx, i).unwrap()).unwrap()).collect::<Vec<_>>()
        })
    });
}

fn dt(c: &mut Criterion) {
    let c4 = ToricGeometry::c4();
    let axes = AxisChoices::default_for(&c4);
    c.bench_function("C4 cohomological n=3", |b| {
        b.iter(|| dt_invariant(&c4, 3, &[], &Insertion::unit(DtMode::Cohomological), &axes, false).unwrap())
    });
    c.bench_function("C4 k-theoretic n=2", |b| {
        b.iter(|| dt_invariant(&c4, 2, &[], &Insertion::unit(DtMode::KTheoretic), &axes, false).unwrap())
    });
    let lc = ToricGeometry::local_curve(NormalDegrees::new([-1, -1, 0]).unwrap());
    c.bench_function("LocalCurve(-1,-1,0) fixed points d=2 n=3", |b| {
        b.iter(|| enumerate_fixed_points(&lc, 3, &[2]).unwrap().len())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = enumeration, vertices, dt
}
criterion_main!(benches);
