use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use recos_core::{cosine, decos, ordered_views, recos, recos_views, DenseVector};

fn normal_vector(rng: &mut ChaCha8Rng, d: usize) -> DenseVector {
    DenseVector::new((0..d).map(|_| rng.sample(StandardNormal)).collect()).unwrap()
}

/// A pool of pairs larger than one so the branch predictor cannot memorize a single input.
fn pool(d: usize) -> Vec<(DenseVector, DenseVector)> {
    let mut rng = ChaCha8Rng::seed_from_u64(768);
    (0..64).map(|_| (normal_vector(&mut rng, d), normal_vector(&mut rng, d))).collect()
}

fn metrics(c: &mut Criterion) {
    let mut group = c.benchmark_group("pair");
    for d in [64, 768, 4096] {
        let pairs = pool(d);
        group.throughput(Throughput::Elements(pairs.len() as u64));
        group.bench_with_input(BenchmarkId::new("cosine", d), &pairs, |b, pairs| {
            b.iter(|| pairs.iter().map(|(u, v)| cosine(black_box(u), black_box(v)).unwrap().value()).sum::<f64>())
        });
        group.bench_with_input(BenchmarkId::new("decos", d), &pairs, |b, pairs| {
            b.iter(|| pairs.iter().map(|(u, v)| decos(black_box(u), black_box(v)).unwrap().value()).sum::<f64>())
        });
        group.bench_with_input(BenchmarkId::new("recos", d), &pairs, |b, pairs| {
            b.iter(|| pairs.iter().map(|(u, v)| recos(black_box(u), black_box(v)).unwrap().value()).sum::<f64>())
        });
        let views: Vec<_> = pairs.iter().map(|(u, v)| (ordered_views(u), ordered_views(v))).collect();
        group.bench_with_input(BenchmarkId::new("recos_views", d), &views, |b, views| {
            b.iter(|| views.iter().map(|(u, v)| recos_views(black_box(u), black_box(v)).unwrap().value()).sum::<f64>())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("ordered_views");
    for d in [64, 768, 4096] {
        let vectors: Vec<_> = pool(d).into_iter().map(|(u, _)| u).collect();
        group.throughput(Throughput::Elements(vectors.len() as u64));
        group.bench_with_input(BenchmarkId::from_parameter(d), &vectors, |b, vectors| {
            b.iter(|| vectors.iter().map(|u| ordered_views(black_box(u)).ascending()[0]).sum::<f64>())
        });
    }
    group.finish();
}

criterion_group!(benches, metrics);
criterion_main!(benches);
