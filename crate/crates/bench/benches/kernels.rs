use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use projstat::classify::{DistanceKind, RpClassifier};
use projstat::datagen::{gen_equicorrelated_bernoulli, gen_independent_bernoulli, JointPmf};
use projstat::hypotest::{binomial_pmf_row, poisson_binomial_pmf, PoissonBinomialSpec};
use projstat::measures::{
    ks_distance_1d, mallows_l2_histogram, tv_distance, w1_distance_1d, DiscreteMeasure, Histogram,
    Point, Sample,
};
use projstat::projections::{good_direction_for_support, random_direction};

fn measure_1d(n: usize, seed: u64) -> DiscreteMeasure {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut atoms: Vec<(Point, f64)> = (0..n)
        .map(|_| {
            (
                Point::scalar(rng.random_range(-5.0..5.0)),
                rng.random_range(0.01..1.0),
            )
        })
        .collect();
    let total: f64 = atoms.iter().map(|(_, w)| w).sum();
    atoms.iter_mut().for_each(|(_, w)| *w /= total);
    DiscreteMeasure::from_atoms(atoms).unwrap()
}

fn histogram(bins: usize, seed: u64) -> Histogram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![0.0];
    for _ in 0..bins {
        let last = *edges.last().unwrap();
        edges.push(last + rng.random_range(0.1..1.0));
    }
    let masses: Vec<f64> = (0..bins).map(|_| rng.random_range(0.0..1.0)).collect();
    Histogram::new(edges, masses).unwrap()
}

fn bench_distances(c: &mut Criterion) {
    let p = measure_1d(100, 1);
    let q = measure_1d(100, 2);
    let mut g = c.benchmark_group("distances_100_atoms");
    g.bench_function("tv", |b| {
        b.iter(|| tv_distance(black_box(&p), black_box(&q)))
    });
    g.bench_function("w1", |b| {
        b.iter(|| w1_distance_1d(black_box(&p), black_box(&q)))
    });
    g.bench_function("ks", |b| {
        b.iter(|| ks_distance_1d(black_box(&p), black_box(&q)))
    });
    let h1 = histogram(30, 3);
    let h2 = histogram(30, 4);
    g.bench_function("mallows_30_bins", |b| {
        b.iter(|| mallows_l2_histogram(black_box(&h1), black_box(&h2)))
    });
    g.finish();
}

fn bench_projections(c: &mut Criterion) {
    let p0 = JointPmf::uniform(8).unwrap().to_measure();
    let support: Vec<Point> = p0.atoms().iter().map(|(pt, _)| pt.clone()).collect();
    let mut g = c.benchmark_group("projections");
    g.bench_function("project_256_atom_measure", |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let dir = random_direction(8, &mut rng);
        let h = dir.as_subspace();
        b.iter(|| h.project_measure(black_box(&p0)).unwrap())
    });
    g.bench_function("good_direction_search_cube8", |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        b.iter(|| good_direction_for_support(black_box(&support), &mut rng, 100).unwrap())
    });
    g.finish();
}

fn bench_pmfs(c: &mut Criterion) {
    let mut g = c.benchmark_group("pmf");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let q: Vec<f64> = (0..200).map(|_| rng.random_range(0.0..1.0)).collect();
    let spec = PoissonBinomialSpec::new(q).unwrap();
    g.bench_function("poisson_binomial_d200", |b| {
        b.iter(|| poisson_binomial_pmf(black_box(&spec)))
    });
    g.bench_function("binomial_row_d1000", |b| {
        b.iter(|| binomial_pmf_row(black_box(1000), black_box(0.5)).unwrap())
    });
    g.finish();
}

fn bench_classifier(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let class0 = gen_independent_bernoulli(5, 0.5, 150, &mut rng).unwrap();
    let class1 = gen_equicorrelated_bernoulli(5, 0.5, 0.9, 150, &mut rng).unwrap();
    let rows: Vec<Point> = class0.rows().iter().chain(class1.rows()).cloned().collect();
    let labels: Vec<usize> = (0..150).map(|_| 0).chain((0..150).map(|_| 1)).collect();
    let train = Sample::with_labels(rows, labels).unwrap();
    let directions = (0..100).map(|_| random_direction(5, &mut rng)).collect();
    let model = RpClassifier::fit(&train, directions, DistanceKind::Cvm).unwrap();
    let probe = Point::new(vec![1.0, 1.0, 0.0, 1.0, 0.0]);
    c.bench_function("rp_predict_100_directions", |b| {
        b.iter(|| model.predict(black_box(&probe)))
    });
}

criterion_group!(
    benches,
    bench_distances,
    bench_projections,
    bench_pmfs,
    bench_classifier
);
criterion_main!(benches);
