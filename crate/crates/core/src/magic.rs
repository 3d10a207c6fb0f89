//! Magic basis and pure-state concurrence.
//!
//! The magic basis used throughout is
//!
//! ```text
//! |Ψ1> =    (|00> + |11>)/√2      |Ψ3> =    (|01> - |10>)/√2
//! |Ψ2> = i  (|00> - |11>)/√2      |Ψ4> = -i (|01> + |10>)/√2
//! ```
//!
//! In this basis every local unitary `a ⊗ b` with `a, b ∈ SU(2)` is a real
//! orthogonal matrix, and `XX`, `YY`, `ZZ` are simultaneously diagonal.

use std::f64::consts::FRAC_1_SQRT_2;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::numeric::{c, Mat4, TwoQubitState, ZERO};

/// The constant change of basis whose columns are `|Ψ1>..|Ψ4>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagicBasisTransform {
    q: Mat4,
}

impl MagicBasisTransform {
    pub fn get() -> &'static MagicBasisTransform {
        static MAGIC: OnceLock<MagicBasisTransform> = OnceLock::new();
        MAGIC.get_or_init(|| {
            let h = FRAC_1_SQRT_2;
            let r = c(h, 0.0);
            let i = c(0.0, h);
            #[rustfmt::skip]
            let q = Mat4::new(
                r,    i,    ZERO, ZERO,
                ZERO, ZERO, r,    -i,
                ZERO, ZERO, -r,   -i,
                r,    -i,   ZERO, ZERO,
            );
            MagicBasisTransform { q }
        })
    }

    /// Matrix with the magic states as columns.
    pub fn matrix(&self) -> &Mat4 {
        &self.q
    }

    /// `|Ψ_k>` for `k` in `0..4` (zero-based).
    pub fn state(&self, k: usize) -> TwoQubitState {
        let col = self.q.column(k);
        TwoQubitState::from_raw([col[0], col[1], col[2], col[3]])
    }

    /// Operator expressed in the magic basis: `Q^dagger m Q`.
    pub fn to_magic(&self, m: &Mat4) -> Mat4 {
        self.q.adjoint() * m * self.q
    }

    /// Inverse of [`Self::to_magic`]: `Q m Q^dagger`.
    pub fn from_magic(&self, m: &Mat4) -> Mat4 {
        self.q * m * self.q.adjoint()
    }

    /// State with magic coefficients `mu`: `sum_k mu_k |Ψ_k>`.
    pub fn state_from_coefficients(&self, mu: [Complex64; 4]) -> TwoQubitState {
        let v = self.q * nalgebra::Vector4::from(mu);
        TwoQubitState::from_raw([v[0], v[1], v[2], v[3]])
    }
}

/// Magic-basis coefficients `mu_k` with `s = sum_k mu_k |Ψ_k>`.
pub fn to_magic_basis(s: &TwoQubitState) -> [Complex64; 4] {
    let v = MagicBasisTransform::get().matrix().adjoint() * s.to_vector();
    [v[0], v[1], v[2], v[3]]
}

/// Pure-state concurrence, a value in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Concurrence(f64);

impl Concurrence {
    /// Clamps into `[0, 1]`; rounding can push `|sum mu^2|` a few ulps past 1.
    pub fn new(value: f64) -> Self {
        Self(value.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `C(s) = |sum_k mu_k^2|` over the magic-basis coefficients.
pub fn concurrence(s: &TwoQubitState) -> Concurrence {
    let sum: Complex64 = to_magic_basis(s).iter().map(|m| m * m).sum();
    Concurrence::new(sum.norm())
}

/// Same quantity computed straight from computational amplitudes,
/// `2 |a00 a11 - a01 a10|`; used by the optimizer's inner loop.
#[inline]
pub(crate) fn concurrence_fast(amps: &[Complex64; 4]) -> f64 {
    (2.0 * (amps[0] * amps[3] - amps[1] * amps[2]).norm()).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{check_unitary, ONE};

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn magic_matrix_matches_stated_states() {
        let m = MagicBasisTransform::get();
        assert!(check_unitary(m.matrix(), 1e-14));
        let h = FRAC_1_SQRT_2;
        let expected = [
            [c(h, 0.), ZERO, ZERO, c(h, 0.)],
            [c(0., h), ZERO, ZERO, c(0., -h)],
            [ZERO, c(h, 0.), c(-h, 0.), ZERO],
            [ZERO, c(0., -h), c(0., -h), ZERO],
        ];
        for (k, want) in expected.iter().enumerate() {
            let got = m.state(k);
            for (g, w) in got.amplitudes().iter().zip(want) {
                assert!(close(*g, *w), "column {k}");
            }
        }
    }

    #[test]
    fn magic_coefficients_examples() {
        let mu = to_magic_basis(&TwoQubitState::bell());
        assert!(
            close(mu[0], ONE) && close(mu[1], ZERO) && close(mu[2], ZERO) && close(mu[3], ZERO)
        );

        let h = FRAC_1_SQRT_2;
        let mu = to_magic_basis(&TwoQubitState::basis(false, false));
        assert!(close(mu[0], c(h, 0.)) && close(mu[1], c(0., -h)));
        assert!(close(mu[2], ZERO) && close(mu[3], ZERO));

        let plus_plus = TwoQubitState::new([c(0.5, 0.); 4]).unwrap();
        let mu = to_magic_basis(&plus_plus);
        assert!(close(mu[0], c(h, 0.)) && close(mu[1], ZERO));
        assert!(close(mu[2], ZERO) && close(mu[3], c(0., h)));
        let norm: f64 = mu.iter().map(|z| z.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn concurrence_examples() {
        assert!((concurrence(&TwoQubitState::bell()).value() - 1.0).abs() < 1e-12);
        assert!(concurrence(&TwoQubitState::basis(false, false)).value() < 1e-12);
        let plus_plus = TwoQubitState::new([c(0.5, 0.); 4]).unwrap();
        assert!(concurrence(&plus_plus).value() < 1e-12);
    }

    #[test]
    fn real_magic_coefficients_are_maximally_entangled() {
        let m = MagicBasisTransform::get();
        let raw = [0.3, -0.5, 0.7, 0.2];
        let norm = raw.iter().map(|x: &f64| x * x).sum::<f64>().sqrt();
        let phase = crate::numeric::cis(0.91);
        let mu = raw.map(|x| c(x / norm, 0.) * phase);
        let s = m.state_from_coefficients(mu);
        assert!((concurrence(&s).value() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fast_path_agrees() {
        let s = TwoQubitState::normalized([c(0.3, 0.1), c(-0.2, 0.5), c(0.4, 0.0), c(0.1, -0.6)])
            .unwrap();
        assert!((concurrence(&s).value() - concurrence_fast(s.amplitudes())).abs() < 1e-14);
    }
}
