//! Named two-qubit gates and one-qubit Euler rotations.

use std::f64::consts::FRAC_PI_8;

use crate::kak::canonical_gate;
use crate::numeric::{c, cis, Mat2, Mat4, ONE, ZERO};

pub fn identity() -> Mat4 {
    Mat4::identity()
}

/// Controlled-NOT with the first qubit as control.
pub fn cnot() -> Mat4 {
    #[rustfmt::skip]
    let m = Mat4::new(
        ONE,  ZERO, ZERO, ZERO,
        ZERO, ONE,  ZERO, ZERO,
        ZERO, ZERO, ZERO, ONE,
        ZERO, ZERO, ONE,  ZERO,
    );
    m
}

pub fn cz() -> Mat4 {
    cp(std::f64::consts::PI)
}

pub fn swap() -> Mat4 {
    #[rustfmt::skip]
    let m = Mat4::new(
        ONE,  ZERO, ZERO, ZERO,
        ZERO, ZERO, ONE,  ZERO,
        ZERO, ONE,  ZERO, ZERO,
        ZERO, ZERO, ZERO, ONE,
    );
    m
}

pub fn sqrt_swap() -> Mat4 {
    let p = c(0.5, 0.5);
    let m = c(0.5, -0.5);
    #[rustfmt::skip]
    let g = Mat4::new(
        ONE,  ZERO, ZERO, ZERO,
        ZERO, p,    m,    ZERO,
        ZERO, m,    p,    ZERO,
        ZERO, ZERO, ZERO, ONE,
    );
    g
}

/// Controlled phase `diag(1, 1, 1, e^{i theta})`.
pub fn cp(theta: f64) -> Mat4 {
    let mut m = Mat4::identity();
    m[(3, 3)] = cis(theta);
    m
}

/// `exp(i(a XX + b YY + c ZZ))`.
pub fn canonical(a: f64, b: f64, c: f64) -> Mat4 {
    canonical_gate([a, b, c])
}

/// `exp(i t XX)`.
pub fn xx(t: f64) -> Mat4 {
    canonical_gate([t, 0.0, 0.0])
}

/// Interaction angles of `sqrt_swap`. With the `exp(+i ...)` convention the
/// standard matrix sits at `c = -pi/8`; `(pi/8, pi/8, pi/8)` is its adjoint.
pub const SQRT_SWAP_ALPHAS: [f64; 3] = [FRAC_PI_8, FRAC_PI_8, -FRAC_PI_8];

pub fn rz(theta: f64) -> Mat2 {
    Mat2::new(cis(-theta / 2.0), ZERO, ZERO, cis(theta / 2.0))
}

pub fn ry(theta: f64) -> Mat2 {
    let (s, co) = (theta / 2.0).sin_cos();
    Mat2::new(c(co, 0.0), c(-s, 0.0), c(s, 0.0), c(co, 0.0))
}

/// `Rz(alpha) Ry(beta) Rz(gamma)`; covers SU(2), so every one-qubit unitary
/// up to a global phase.
pub fn zyz(alpha: f64, beta: f64, gamma: f64) -> Mat2 {
    rz(alpha) * ry(beta) * rz(gamma)
}

/// Angles `(alpha, beta, gamma)` with `zyz(alpha, beta, gamma)` equal to `m` up
/// to a global phase. When `beta` is 0 or pi only one combination of `alpha`
/// and `gamma` is determined; `gamma` is then set to 0.
pub fn zyz_angles(m: &Mat2) -> [f64; 3] {
    // the ratios below assume det = 1
    let m = m / m.determinant().sqrt();
    let (u00, u10) = (m[(0, 0)], m[(1, 0)]);
    let beta = 2.0 * u10.norm().atan2(u00.norm());
    // U00 = e^{-i(alpha + gamma)/2} cos(beta/2), U10 = e^{i(alpha - gamma)/2} sin(beta/2)
    let p = -u00.arg();
    let q = u10.arg();
    let eps = 1e-12;
    if u00.norm() <= eps {
        [2.0 * q, beta, 0.0]
    } else if u10.norm() <= eps {
        [2.0 * p, beta, 0.0]
    } else {
        [p + q, beta, p - q]
    }
}
