use std::f64::consts::FRAC_PI_4;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use entangler_bench::{haar_batch, omega_sweep};
use entangler_core::gates::cp;
use entangler_core::numeric::TwoQubitState;
use entangler_core::oracle::{max_concurrence_k_uses, OracleBudget};
use entangler_core::{kak_decompose, omega, synthesize_perfect_entangler, verify_circuit};

fn kak(c: &mut Criterion) {
    let gates = haar_batch(64, 1);
    c.bench_function("kak_decompose/haar x64", |b| {
        b.iter(|| {
            for u in &gates {
                black_box(kak_decompose(black_box(u)).unwrap());
            }
        })
    });
}

fn arc(c: &mut Criterion) {
    let gates = haar_batch(64, 2);
    c.bench_function("omega/haar x64", |b| {
        b.iter(|| {
            for u in &gates {
                black_box(omega(black_box(u)).unwrap());
            }
        })
    });
}

fn synthesis(c: &mut Criterion) {
    let gates = omega_sweep(32, 0.1, 3);
    c.bench_function("synthesize+verify/omega sweep x32", |b| {
        b.iter(|| {
            for u in &gates {
                let circuit = synthesize_perfect_entangler(black_box(u)).unwrap();
                black_box(verify_circuit(&circuit));
            }
        })
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle cp(pi/4)");
    group.sample_size(10);
    let u = cp(FRAC_PI_4);
    let input = TwoQubitState::basis(false, false);
    let budget = OracleBudget {
        restarts: 8,
        ..OracleBudget::default()
    };
    for k in [1usize, 2, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| black_box(max_concurrence_k_uses(&u, k, &input, &budget).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, kak, arc, synthesis, oracle);
criterion_main!(benches);
