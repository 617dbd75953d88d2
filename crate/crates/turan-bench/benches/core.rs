use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use turan_core::{
    build, canonical_form, contains_subgraph, search_max_edges, ConstructionSpec, Pattern,
    SearchConfig,
};

fn bench_canonical_form(c: &mut Criterion) {
    let graphs: Vec<_> = [
        ConstructionSpec::E { i: 8, n: 16 },
        ConstructionSpec::Tmatch { i: 8, n: 16 },
        ConstructionSpec::H { i: 6, n: 13 },
    ]
    .iter()
    .map(|s| build(s).unwrap())
    .collect();
    c.bench_function("canonical_form_16", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(canonical_form(g).unwrap());
            }
        })
    });
}

fn bench_containment(c: &mut Criterion) {
    let host = build(&ConstructionSpec::E { i: 20, n: 40 }).unwrap();
    let p5 = Pattern::new(build(&ConstructionSpec::SquarePath { k: 5 }).unwrap());
    c.bench_function("p5sq_free_host_40", |b| {
        b.iter(|| black_box(contains_subgraph(&host, &p5)).is_none())
    });

    let dense = build(&ConstructionSpec::Tmatch { i: 20, n: 40 }).unwrap();
    let p6 = Pattern::new(build(&ConstructionSpec::SquarePath { k: 6 }).unwrap());
    c.bench_function("p6sq_witness_40", |b| {
        b.iter(|| black_box(contains_subgraph(&dense, &p6)).is_some())
    });
}

fn bench_search(c: &mut Criterion) {
    let t = Pattern::new(build(&ConstructionSpec::FlattenedTetrahedron).unwrap());
    c.bench_function("search_flat_tetra_7", |b| {
        b.iter(|| black_box(search_max_edges(7, &t, &SearchConfig::default()).unwrap()))
    });
}

criterion_group!(benches, bench_canonical_form, bench_containment, bench_search);
criterion_main!(benches);
