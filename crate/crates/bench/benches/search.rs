use criterion::{criterion_group, criterion_main, Criterion};
use gauss_universal::*;
use std::hint::black_box;

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let n3 = SearchConfig::new(3).with_box(SearchBox::square(4));
    group.bench_function("n=3/box4", |b| b.iter(|| search_minimal(black_box(&n3)).unwrap()));
    let n4 = SearchConfig::new(4).with_box(SearchBox::square(6)).with_max_cardinality(5);
    group.bench_function("n=4/box6/no_5_set", |b| b.iter(|| search_minimal(black_box(&n4)).unwrap()));
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
