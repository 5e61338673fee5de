//! Benchmarks for the heavy pipelines: exact series arithmetic at the
//! largest classified degree, the full classification, the eigenspace
//! refinement, and the enumeration searches.

use criterion::{criterion_group, criterion_main, Criterion};
use symcy_core::{
    classify_fermat, egyptian_five, eigenspace_table, hodge_numbers_cy3, search_case1,
    SymmetricCYType, WeightedType,
};

fn series_largest_degree(c: &mut Criterion) {
    let t = WeightedType::new(924, vec![21, 1, 132, 308, 462]).unwrap();
    c.bench_function("hodge_numbers_cy3 (924,[21,1,132,308,462])", |b| {
        b.iter(|| hodge_numbers_cy3(&t).unwrap())
    });
}

fn full_classification(c: &mut Criterion) {
    c.bench_function("classify_fermat all 101 rows", |b| b.iter(classify_fermat));
}

fn eigenspace_refinement(c: &mut Criterion) {
    let cy = SymmetricCYType::new(1, 12, 28, 42).unwrap();
    c.bench_function("eigenspace_table (84,[1,1,12,28,42])", |b| {
        b.iter(|| eigenspace_table(&cy).unwrap())
    });
}

fn unit_fraction_search(c: &mut Criterion) {
    c.bench_function("egyptian_five 147 solutions", |b| b.iter(egyptian_five));
}

fn tail_monomial_search(c: &mut Criterion) {
    c.bench_function("search_case1 55 tuples", |b| b.iter(search_case1));
}

criterion_group!(
    pipelines,
    series_largest_degree,
    full_classification,
    eigenspace_refinement,
    unit_fraction_search,
    tail_monomial_search,
);
criterion_main!(pipelines);
