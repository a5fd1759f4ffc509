use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use real_enum_core::floors::{toric_counts, Execution};
use real_enum_core::lattice::SurfaceModel;

fn enumeration(c: &mut Criterion) {
    let cases = [
        ("cp2 d=5", SurfaceModel::cp2(), vec![5]),
        ("cp2 d=6", SurfaceModel::cp2(), vec![6]),
        ("f2 (3,0)", SurfaceModel::f2(), vec![3, 0]),
        ("f0 (3,3)", SurfaceModel::f0(), vec![3, 3]),
    ];
    let mut group = c.benchmark_group("floor diagrams");
    group.sample_size(10);
    for (name, surface, coords) in cases {
        let class = surface.class(coords).unwrap();
        for execution in [Execution::Sequential, Execution::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{execution:?}"), name), &class, |b, class| {
                b.iter(|| toric_counts(&surface, class, execution).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
