use std::f64::consts::PI;

use entangler_core::arc::{n_runs, omega};
use entangler_core::error::Error;
use entangler_core::gates::{cnot, cp, identity, swap};
use entangler_core::magic::concurrence;
use entangler_core::random::{gate_with_omega, haar_unitary};
use entangler_core::synthesis::{synthesize_perfect_entangler, verify_circuit};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn random_gates_synthesize_and_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let target = rng.random_range(0.02..PI - 0.02);
        let u = gate_with_omega(&mut rng, target);
        let c = synthesize_perfect_entangler(&u).unwrap();
        assert_eq!(c.uses, n_runs(&u).unwrap());
        assert_eq!(c.locals.len(), c.uses as usize + 1);
        assert!(concurrence(&c.product_input).value() < 1e-12);
        let rep = verify_circuit(&c);
        assert!(rep.ok, "omega {target}: {rep:?}");
        assert!(rep.output_concurrence >= 1.0 - 1e-8);
    }
}

#[test]
fn haar_gates_synthesize() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let u = haar_unitary(&mut rng);
        let c = synthesize_perfect_entangler(&u).unwrap();
        assert!(verify_circuit(&c).ok);
    }
}

#[test]
fn truncation_stays_under_the_arc_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..100 {
        let target = rng.random_range(0.05..PI / 2.0);
        let u = gate_with_omega(&mut rng, target);
        let w = omega(&u).unwrap().radians();
        let c = synthesize_perfect_entangler(&u).unwrap();
        let t = c.truncated();
        let bound = ((c.uses - 1) as f64 * w / 2.0).min(PI / 2.0).sin();
        assert!(t.certified_output_concurrence <= bound + 1e-6);
        assert!(!verify_circuit(&t).ok);
    }
}

#[test]
fn reversed_circuit_disentangles() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..50 {
        let target = rng.random_range(0.1..PI - 0.1);
        let u = gate_with_omega(&mut rng, target);
        let c = synthesize_perfect_entangler(&u).unwrap();
        let r = c.reversed();
        assert!(r.certified_output_concurrence < 1e-8);
        assert!(r.output().max_abs_diff(&c.product_input) < 1e-8);
    }
}

#[test]
fn named_gates() {
    assert_eq!(synthesize_perfect_entangler(&cnot()).unwrap().uses, 1);
    assert_eq!(synthesize_perfect_entangler(&cp(PI / 2.0)).unwrap().uses, 2);
    for g in [identity(), swap()] {
        assert!(matches!(
            synthesize_perfect_entangler(&g),
            Err(Error::NotEntangling { .. })
        ));
    }
}
