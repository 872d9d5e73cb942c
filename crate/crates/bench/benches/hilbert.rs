use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use agpoly_core::bosonic::{bosonic_hilbert, default_cutoff, singular_contribution};
use agpoly_core::fermionic::fermionic_sum;
use agpoly_core::polyhedral::{hilbert_by_enumeration, hilbert_by_transfer};
use agpoly_core::quotient::hilbert_by_quotient;
use agpoly_core::Params;

fn methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("d_N");
    for (n, k) in [(4, 2), (6, 3)] {
        let par = Params::new(n, k, 1, k).unwrap();
        let id = format!("N={n},k={k}");
        group.bench_with_input(BenchmarkId::new("fermionic", &id), &par, |b, p| {
            b.iter(|| fermionic_sum(black_box(p)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("enumerate", &id), &par, |b, p| {
            b.iter(|| hilbert_by_enumeration(black_box(p)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("transfer", &id), &par, |b, p| {
            b.iter(|| hilbert_by_transfer(black_box(p)).unwrap())
        });
        let cutoff = default_cutoff(&par).unwrap();
        group.bench_with_input(BenchmarkId::new("bosonic", &id), &par, |b, p| {
            b.iter(|| bosonic_hilbert(black_box(p), cutoff).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let par = Params::new(4, 2, 1, 2).unwrap();
    c.bench_function("quotient N=4,k=2", |b| {
        b.iter(|| hilbert_by_quotient(black_box(&par), 12).unwrap())
    });
}

fn singular(c: &mut Criterion) {
    c.bench_function("singular vertex N=5,k=1", |b| {
        b.iter(|| singular_contribution(black_box(5), black_box(1)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = methods, oracle, singular
}
criterion_main!(benches);
