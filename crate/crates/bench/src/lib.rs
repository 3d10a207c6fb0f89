//! Fixed, seeded inputs shared by the benchmarks, so every run measures the
//! same work.

use entangler_core::numeric::Mat4;
use entangler_core::random::{gate_with_omega, haar_unitary};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn haar_batch(n: usize, seed: u64) -> Vec<Mat4> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| haar_unitary(&mut rng)).collect()
}

/// Gates whose Ω is spread evenly over `(0, pi)`, so synthesis sees every
/// run count from 1 up to about `pi / lo`.
pub fn omega_sweep(n: usize, lo: f64, seed: u64) -> Vec<Mat4> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hi = std::f64::consts::PI - lo;
    (0..n)
        .map(|i| gate_with_omega(&mut rng, lo + (hi - lo) * i as f64 / n.max(2) as f64))
        .collect()
}
