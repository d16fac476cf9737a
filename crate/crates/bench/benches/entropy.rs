use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use replica_entropy::fock::{hermitian_eigenvalues, oracle, states};
use replica_entropy::{cat, replica, Amplitude, Complex64, Subsystem, TwoStateMixture};

fn mixture() -> TwoStateMixture {
    TwoStateMixture::normalized(
        0.4,
        0.6,
        Complex64::from_polar(0.3, 0.7),
        Amplitude::new(1.0, 0.5).unwrap(),
        Amplitude::new(-1.5, 0.2).unwrap(),
    )
    .unwrap()
}

fn closed_forms(c: &mut Criterion) {
    let s = mixture();
    c.bench_function("entropy_closed", |b| b.iter(|| replica::entropy_closed(black_box(&s))));
    c.bench_function("replica_entropy", |b| {
        b.iter(|| replica::replica_entropy(black_box(&s), replica::DEFAULT_STEP))
    });
    let cat_spec = cat::sweep_spec(2.0, 1.0, 0.5, 0.5).unwrap();
    c.bench_function("cat_reduced_entropy", |b| {
        b.iter(|| cat::reduced_entropy(black_box(&cat_spec), Subsystem::First))
    });
    let grid = cat::linear_grid(0.01, 4.0, 200);
    c.bench_function("sweep_default_grid", |b| {
        b.iter(|| cat::sweep_fig1(&[0.5, 1.0, 2.0], black_box(&grid), 0.5, 0.5))
    });
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi_two_state");
    let s = mixture();
    for cutoff in [16, 32, 64] {
        let rho = states::two_state_matrix(&s, cutoff).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(cutoff), &rho, |b, rho| {
            b.iter(|| hermitian_eigenvalues(rho))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("two_state_entropy", |b| {
        b.iter(|| oracle::two_state_entropy(black_box(&s), 1e-12))
    });
    let cat_spec = cat::sweep_spec(1.0, 1.0, 0.3, 0.7).unwrap();
    group.bench_function("cat_reduced_entropy", |b| {
        b.iter(|| oracle::cat_reduced_entropy(black_box(&cat_spec), Subsystem::First, 1e-12))
    });
    group.bench_function("cat_joint_entropy", |b| {
        b.iter(|| oracle::cat_joint_entropy(black_box(&cat_spec), 1e-12))
    });
    group.finish();
}

criterion_group!(benches, closed_forms, oracles);
criterion_main!(benches);
