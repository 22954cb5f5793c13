use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use curvecross::counting::Analyzer;
use curvecross::surface::fixtures::genus2_quads;
use curvecross::surface::quadify;
use curvecross::unzip::unzip;
use curvecross::walk::canonicalize;
use curvecross_bench::{long_canonical, random_closed_walk, subdivided_genus_surface};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn canonicalization(c: &mut Criterion) {
    let q = genus2_quads();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("canonicalize");
    for len in [1_000usize, 10_000, 100_000] {
        let w = random_closed_walk(q.surface(), len, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| b.iter(|| canonicalize(&q, w).unwrap()));
    }
    group.finish();
}

fn counting(c: &mut Criterion) {
    let q = genus2_quads();
    let analyzer = Analyzer::for_quads(&q);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut group = c.benchmark_group("self_intersection");
    group.sample_size(10);
    for len in [500usize, 1_000, 2_000] {
        let w = long_canonical(&q, len, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| {
            b.iter(|| analyzer.self_intersection(w).unwrap())
        });
    }
    group.finish();
}

fn unzipping(c: &mut Criterion) {
    let q = genus2_quads();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut group = c.benchmark_group("unzip");
    group.sample_size(10);
    for len in [10_000usize, 100_000] {
        let w = long_canonical(&q, len, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| b.iter(|| unzip(&q, w).unwrap()));
    }
    group.finish();
}

fn quadification(c: &mut Criterion) {
    let mut group = c.benchmark_group("quadify");
    group.sample_size(10);
    for g in [2_500usize, 25_000, 250_000] {
        let s = subdivided_genus_surface(g);
        group.bench_with_input(BenchmarkId::from_parameter(s.edge_count()), &s, |b, s| b.iter(|| quadify(s).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, canonicalization, counting, unzipping, quadification);
criterion_main!(benches);
