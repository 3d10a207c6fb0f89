//! Seeded samplers for unitaries, local layers and states.

use nalgebra::{Matrix4, QR};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

use crate::arc::omega_from_lambdas;
use crate::gates::zyz;
use crate::kak::{canonical_gate, lambdas_from_alphas};
use crate::numeric::{cis, LocalPair, Mat2, Mat4, TwoQubitState};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-distributed 4×4 unitary: QR of a complex Gaussian matrix with the
/// phases of `R`'s diagonal moved into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R) -> Mat4 {
    let g: Matrix4<Complex64> = Matrix4::from_fn(|_, _| gaussian(rng));
    let (q, r) = QR::new(g).unpack();
    let mut q = q;
    for col in 0..4 {
        let d = r[(col, col)];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for row in 0..4 {
            q[(row, col)] *= phase;
        }
    }
    q
}

/// One-qubit unitary from uniformly drawn Euler angles and global phase.
pub fn one_qubit<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    let angle = Uniform::new(-std::f64::consts::PI, std::f64::consts::PI).expect("valid range");
    zyz(angle.sample(rng), angle.sample(rng), angle.sample(rng)) * cis(angle.sample(rng))
}

pub fn local_pair<R: Rng + ?Sized>(rng: &mut R) -> LocalPair {
    LocalPair::new(one_qubit(rng), one_qubit(rng))
}

/// Uniformly random pure state (normalized complex Gaussian vector).
pub fn state<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    loop {
        let amps = [gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)];
        if let Ok(s) = TwoQubitState::normalized(amps) {
            return s;
        }
    }
}

/// Interaction angles in the Weyl chamber whose core has covering arc
/// `omega` (`0 < omega < pi`): a random chamber direction scaled so the
/// doubled phases span exactly `omega`.
pub fn alphas_with_omega<R: Rng + ?Sized>(rng: &mut R, omega: f64) -> [f64; 3] {
    assert!(omega > 0.0 && omega < std::f64::consts::PI);
    let unit = Uniform::new(0.0, 1.0).expect("valid range");
    loop {
        let a: f64 = unit.sample(rng);
        let b = a * unit.sample(rng);
        let c = b * (2.0 * unit.sample(rng) - 1.0);
        let dir = [a, b, c];
        let lambdas = lambdas_from_alphas(dir);
        let spread = lambdas.iter().cloned().fold(f64::MIN, f64::max)
            - lambdas.iter().cloned().fold(f64::MAX, f64::min);
        if spread <= 1e-6 {
            continue;
        }
        // doubled phases span 2 * scale * spread with no wraparound below pi
        let scale = omega / (2.0 * spread);
        let alphas = dir.map(|x| x * scale);
        if alphas[0] <= std::f64::consts::FRAC_PI_4 {
            debug_assert!(
                (omega_from_lambdas(&lambdas_from_alphas(alphas)).radians() - omega).abs() < 1e-9
            );
            return alphas;
        }
    }
}

/// Entangling gate `k1 N(alphas) k2` with random locals and `Ω = omega`.
pub fn gate_with_omega<R: Rng + ?Sized>(rng: &mut R, omega: f64) -> Mat4 {
    let alphas = alphas_with_omega(rng, omega);
    local_pair(rng).matrix() * canonical_gate(alphas) * local_pair(rng).matrix()
}
