use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use polymix::grids::{farey_direction_grid, uniform_grid, verification_directions, DEFAULT_DIRECTION_SEED};
use polymix::homothety::homothetic_projections_conclude_with;
use polymix::inequality::concavity_profile_with;
use polymix::minkowski::volume_polynomial_with;
use polymix::random::{random_translation, seeded, Sampler};
use polymix::reconstruct::{corner_normalize, recover_on_grid};
use polymix::{arith::int, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn volume_polynomials(c: &mut Criterion) {
    let mut rng = seeded(1);
    let k = Sampler::default().polytope(&mut rng, 3, 10);
    let l = Sampler::default().polytope(&mut rng, 3, 10);
    let mut g = c.benchmark_group("volume_polynomial_3d");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| volume_polynomial_with(exec, black_box(&k), black_box(&l)).unwrap())
        });
    }
    g.finish();
}

fn lambda_grid(c: &mut Criterion) {
    let mut rng = seeded(2);
    let k = Sampler::default().polytope(&mut rng, 3, 8);
    let l = Sampler::default().polytope(&mut rng, 3, 8);
    let grid = uniform_grid(8);
    let mut g = c.benchmark_group("concavity_profile_k8");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| concavity_profile_with(exec, &k, &l, black_box(&grid)).unwrap())
        });
    }
    g.finish();
}

fn direction_grid(c: &mut Criterion) {
    let k = corner_normalize(&Sampler::default().polytope(&mut seeded(3), 2, 12)).unwrap().body;
    let grid = farey_direction_grid();
    let mut g = c.benchmark_group("recover_support_64");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| recover_on_grid(exec, black_box(&k), &grid).unwrap())
        });
    }
    g.finish();

    let mut rng = seeded(4);
    let k = Sampler::default().polytope(&mut rng, 3, 9);
    let l = k.homothetic_image(&int(2), &random_translation(&mut rng, 3, 10)).unwrap();
    let dirs = verification_directions(3, 20, DEFAULT_DIRECTION_SEED);
    let mut g = c.benchmark_group("projection_conclusion_3d");
    g.sample_size(20);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| homothetic_projections_conclude_with(exec, &l, &k, black_box(&dirs)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, volume_polynomials, lambda_grid, direction_grid);
criterion_main!(benches);
