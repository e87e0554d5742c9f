use criterion::{black_box, criterion_group, criterion_main, Criterion};
use std::path::PathBuf;
use veerkit::carried::{assemble_surface, enumerate_weight_systems, WeightSystem};
use veerkit::data::{weight_vector, FIG12_W};
use veerkit::invariants::homology_h1;
use veerkit::mutation::mutate;
use veerkit::symmetry::automorphism_group;
use veerkit::{canonical_signature, load_triangulation, Flavor, TautIdealTriangulation};

fn load(name: &str) -> TautIdealTriangulation {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name);
    load_triangulation(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn pipeline(c: &mut Criterion) {
    let v = load("fig8.vrt");
    let t = load("fig12.vrt");
    let w = WeightSystem::new(&t, weight_vector(t.num_faces(), FIG12_W)).unwrap();
    let q = assemble_surface(&t, &w).unwrap();
    let g = automorphism_group(&q, true);

    c.bench_function("signature fig12", |b| {
        b.iter(|| canonical_signature(black_box(&t), Flavor::Taut).unwrap())
    });
    c.bench_function("enumerate fig8 cap 2", |b| {
        b.iter(|| enumerate_weight_systems(black_box(&v), 2).unwrap())
    });
    c.bench_function("automorphism group fig12", |b| {
        b.iter(|| automorphism_group(black_box(&q), false))
    });
    c.bench_function("mutate fig12", |b| {
        b.iter(|| mutate(black_box(&t), &w, &g[1]).unwrap())
    });
    c.bench_function("homology fig12", |b| b.iter(|| homology_h1(black_box(&t))));
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
