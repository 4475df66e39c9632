use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qrt::exactfield::FieldSpec;
use qrt::oracle::{count_points, orbits, Budget};
use qrt::par::Exec;
use qrt::quiver::{catalog, CatalogId};
use std::hint::black_box;

fn modes() -> Vec<(&'static str, Exec)> {
    let mut v = vec![("sequential", Exec::Sequential)];
    if cfg!(feature = "parallel") {
        v.push(("parallel", Exec::Parallel));
    }
    v
}

fn point_count(c: &mut Criterion) {
    let f = FieldSpec::Prime(3);
    let id = CatalogId::Canonical { arms: vec![2; 4], lambdas: vec![f.int(2)] };
    let (bq, _) = catalog(&id, f).unwrap();
    let d = vec![2, 1, 1, 1, 1, 1];
    let mut g = c.benchmark_group("count_points canonical(2,2,2,2) F_3");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| count_points(&bq, black_box(&d), Budget::default(), mode).unwrap())
        });
    }
    g.finish();
}

fn orbit_enumeration(c: &mut Criterion) {
    let f = FieldSpec::Prime(3);
    let (bq, _) = catalog(&CatalogId::Kronecker, f).unwrap();
    let d = vec![2, 2];
    let mut g = c.benchmark_group("orbits kronecker (2,2) F_3");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| orbits(&bq, black_box(&d), Budget::default(), mode).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, point_count, orbit_enumeration);
criterion_main!(benches);
