//! The brute-force search never beats the arc bound, and more uses never hurt.

use std::f64::consts::PI;

use entangler_core::arc::omega;
use entangler_core::gates::{canonical, cp};
use entangler_core::numeric::TwoQubitState;
use entangler_core::oracle::{max_concurrence_k_uses, min_runs_to_one, OracleBudget};

fn budget() -> OracleBudget {
    OracleBudget {
        restarts: 12,
        max_iterations: 1500,
        ..OracleBudget::with_seed(5)
    }
}

#[test]
fn never_exceeds_arc_bound_and_is_monotone() {
    let zero = TwoQubitState::basis(false, false);
    for u in [cp(PI / 3.0), cp(0.5), canonical(0.3, 0.1, 0.05)] {
        let w = omega(&u).unwrap().radians();
        let mut last = 0.0;
        for k in 0..=3 {
            let best = max_concurrence_k_uses(&u, k, &zero, &budget())
                .unwrap()
                .best_concurrence;
            let ceiling = ((k as f64 * w).min(PI) / 2.0).sin();
            assert!(best <= ceiling + 1e-4, "k={k}: {best} > {ceiling}");
            assert!(best >= last - 1e-6, "k={k}: {best} < {last}");
            last = best;
        }
    }
}

#[test]
fn run_count_matches_formula_for_generic_core() {
    let zero = TwoQubitState::basis(false, false);
    // Ω = 2(a + b) for c = 0
    let u = canonical(0.3, 0.2, 0.0);
    let w = omega(&u).unwrap().radians();
    let n = (PI / w).ceil() as usize;
    assert_eq!(min_runs_to_one(&u, &zero, &budget()).unwrap(), n);
}
