use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use twoqubit::entanglement::concurrence;
use twoqubit::linalg::{eig_hermitian_oracle, Matrix4};
use twoqubit::sample::{ginibre_density, shard_rng};
use twoqubit::separability::peres_test;
use twoqubit::spectrum::{coeffs_from_traces, eigenvalues, quartic_eigs};
use twoqubit::DensityMatrix;

fn states(n: usize) -> Vec<DensityMatrix> {
    let mut rng = shard_rng(2024, 0);
    (0..n).map(|_| ginibre_density(&mut rng)).collect()
}

fn spectra(c: &mut Criterion) {
    let pool = states(256);
    let matrices: Vec<Matrix4> = pool.iter().map(|r| *r.matrix()).collect();
    let coeffs: Vec<_> = matrices
        .iter()
        .map(|m| coeffs_from_traces(m).unwrap())
        .collect();

    let mut g = c.benchmark_group("eigenvalues");
    let mut i = 0;
    g.bench_function("closed_form_from_coeffs", |b| {
        b.iter(|| {
            i = (i + 1) % coeffs.len();
            quartic_eigs(black_box(&coeffs[i])).unwrap()
        })
    });
    g.bench_function("closed_form_from_matrix", |b| {
        b.iter(|| {
            i = (i + 1) % matrices.len();
            eigenvalues(black_box(&matrices[i])).unwrap()
        })
    });
    g.bench_function("jacobi", |b| {
        b.iter(|| {
            i = (i + 1) % matrices.len();
            eig_hermitian_oracle(black_box(&matrices[i])).unwrap()
        })
    });
    g.finish();

    let mut g = c.benchmark_group("state");
    g.bench_function("peres_test", |b| {
        b.iter(|| {
            i = (i + 1) % pool.len();
            peres_test(black_box(&pool[i])).unwrap()
        })
    });
    g.bench_function("concurrence", |b| {
        b.iter(|| {
            i = (i + 1) % pool.len();
            concurrence(black_box(&pool[i])).unwrap()
        })
    });
    g.finish();
}

criterion_group!(benches, spectra);
criterion_main!(benches);
