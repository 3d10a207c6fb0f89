//! Fixed-size complex linear algebra for one- and two-qubit operators.
//!
//! Matrices are plain `nalgebra` fixed-size matrices over [`Complex64`]; the
//! computational basis is ordered `|00>, |01>, |10>, |11>` with the first
//! tensor factor as the most significant bit.

use std::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexScalar = Complex64;
pub type Mat2 = Matrix2<Complex64>;
pub type Mat4 = Matrix4<Complex64>;

/// Default unitarity tolerance at API boundaries.
pub const UNITARY_TOL: f64 = 1e-8;
/// Tolerance for internal unitarity assertions.
pub const INTERNAL_UNITARY_TOL: f64 = 1e-10;
/// Normalization tolerance for [`TwoQubitState::new`].
pub const NORM_TOL: f64 = 1e-12;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `e^{i theta}`.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

pub fn pauli_x() -> Mat2 {
    Mat2::new(ZERO, ONE, ONE, ZERO)
}

pub fn pauli_y() -> Mat2 {
    Mat2::new(ZERO, -I, I, ZERO)
}

pub fn pauli_z() -> Mat2 {
    Mat2::new(ONE, ZERO, ZERO, -ONE)
}

pub fn hadamard() -> Mat2 {
    let h = c(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    Mat2::new(h, h, h, -h)
}

/// Kronecker product `a ⊗ b`.
pub fn tensor(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, col| a[(r / 2, col / 2)] * b[(r % 2, col % 2)])
}

/// Largest entry modulus of `m^dagger m - I`.
pub fn unitarity_deviation<const D: usize>(m: &nalgebra::SMatrix<Complex64, D, D>) -> f64 {
    let prod = m.adjoint() * m;
    let mut worst = 0.0_f64;
    for r in 0..D {
        for col in 0..D {
            let target = if r == col { ONE } else { ZERO };
            worst = worst.max((prod[(r, col)] - target).norm());
        }
    }
    worst
}

/// True iff the max-norm of `m^dagger m - I` is at most `tol`.
pub fn check_unitary<const D: usize>(m: &nalgebra::SMatrix<Complex64, D, D>, tol: f64) -> bool {
    debug_assert!(tol > 0.0);
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return false;
    }
    unitarity_deviation(m) <= tol
}

pub(crate) fn require_unitary<const D: usize>(
    m: &nalgebra::SMatrix<Complex64, D, D>,
    tol: f64,
) -> Result<()> {
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let deviation = unitarity_deviation(m);
    if deviation <= tol {
        Ok(())
    } else {
        Err(Error::NotUnitary { deviation, tol })
    }
}

/// Largest entry modulus of `a - b`.
pub fn max_abs_diff<const R: usize, const C: usize>(
    a: &nalgebra::SMatrix<Complex64, R, C>,
    b: &nalgebra::SMatrix<Complex64, R, C>,
) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Phase `phi` maximizing the overlap `Re tr(e^{i phi} a^dagger b)`, i.e. the
/// global phase with `b ≈ e^{i phi} a`.
pub fn aligning_phase<const D: usize>(
    a: &nalgebra::SMatrix<Complex64, D, D>,
    b: &nalgebra::SMatrix<Complex64, D, D>,
) -> f64 {
    (a.adjoint() * b).trace().arg()
}

/// Max-norm distance between `a` and `b` after removing the best global phase.
pub fn distance_up_to_phase<const D: usize>(
    a: &nalgebra::SMatrix<Complex64, D, D>,
    b: &nalgebra::SMatrix<Complex64, D, D>,
) -> f64 {
    let phase = cis(aligning_phase(a, b));
    max_abs_diff(&(a * phase), b)
}

/// Wraps an angle into `(-pi, pi]`.
pub fn wrap_phase(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    t
}

/// Eigenvalue arguments of a unitary, each in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPhases {
    pub phases: [f64; 4],
}

impl EigenPhases {
    pub fn eigenvalues(&self) -> [Complex64; 4] {
        self.phases.map(cis)
    }

    /// Phases sorted ascending.
    pub fn sorted(&self) -> [f64; 4] {
        let mut p = self.phases;
        p.sort_by(f64::total_cmp);
        p
    }
}

/// Eigenvalue arguments of a 4×4 unitary, via a complex Schur reduction.
///
/// For a normal matrix the Schur form is diagonal, so its diagonal entries are
/// the eigenvalues; each is projected onto the unit circle by taking its argument.
pub fn eigenphases(u: &Mat4) -> Result<EigenPhases> {
    require_unitary(u, UNITARY_TOL)?;
    Ok(eigenphases_unchecked(u))
}

pub(crate) fn eigenphases_unchecked(u: &Mat4) -> EigenPhases {
    let schur =
        nalgebra::Schur::try_new(*u, 1e-15, 10_000).unwrap_or_else(|| nalgebra::Schur::new(*u));
    let (_, t) = schur.unpack();
    let mut phases = [0.0; 4];
    for (k, p) in phases.iter_mut().enumerate() {
        *p = wrap_phase(t[(k, k)].arg());
    }
    EigenPhases { phases }
}

/// A normalized pure state of two qubits in computational-basis order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    amps: [Complex64; 4],
}

impl TwoQubitState {
    /// Builds a state, rejecting non-finite or non-normalized amplitudes.
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm_sqr: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amps })
    }

    /// Builds a state from arbitrary nonzero amplitudes by rescaling.
    pub fn normalized(amps: [Complex64; 4]) -> Result<Self> {
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm_sqr: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr <= f64::MIN_POSITIVE {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let scale = norm_sqr.sqrt().recip();
        Ok(Self {
            amps: amps.map(|z| z * scale),
        })
    }

    /// Computational basis state `|ab>`.
    pub fn basis(a: bool, b: bool) -> Self {
        let mut amps = [ZERO; 4];
        amps[(a as usize) * 2 + b as usize] = ONE;
        Self { amps }
    }

    /// `|a> ⊗ |b>` for normalized one-qubit amplitudes.
    pub fn product(a: [Complex64; 2], b: [Complex64; 2]) -> Result<Self> {
        Self::normalized([a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]])
    }

    /// `(|00> + |11>)/sqrt 2`.
    pub fn bell() -> Self {
        let h = c(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            amps: [h, ZERO, ZERO, h],
        }
    }

    /// `cos(t)|00> + sin(t)|11>`, whose concurrence is `|sin 2t|`.
    pub fn schmidt_form(t: f64) -> Self {
        Self {
            amps: [c(t.cos(), 0.0), ZERO, ZERO, c(t.sin(), 0.0)],
        }
    }

    pub(crate) fn from_raw(amps: [Complex64; 4]) -> Self {
        Self { amps }
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amps
    }

    pub fn to_vector(&self) -> Vector4<Complex64> {
        Vector4::from(self.amps)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Applies `op`. The result is not renormalized.
    pub fn apply(&self, op: &Mat4) -> Self {
        let v = op * self.to_vector();
        Self {
            amps: [v[0], v[1], v[2], v[3]],
        }
    }

    /// Applies `a ⊗ b` without forming the 4×4 product.
    pub fn apply_local(&self, a: &Mat2, b: &Mat2) -> Self {
        let s = &self.amps;
        // amplitude matrix S[i][j] = <ij|s>; (a⊗b)s corresponds to a S b^T
        let mut out = [ZERO; 4];
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = ZERO;
                for k in 0..2 {
                    for l in 0..2 {
                        acc += a[(i, k)] * b[(j, l)] * s[2 * k + l];
                    }
                }
                out[2 * i + j] = acc;
            }
        }
        Self { amps: out }
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Largest amplitude difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// 2×2 amplitude matrix `S[i][j] = <ij|self>`.
    pub fn amplitude_matrix(&self) -> Mat2 {
        let s = &self.amps;
        Mat2::new(s[0], s[1], s[2], s[3])
    }
}

/// A local layer `a ⊗ b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalPair {
    pub a: Mat2,
    pub b: Mat2,
}

impl LocalPair {
    pub fn new(a: Mat2, b: Mat2) -> Self {
        Self { a, b }
    }

    pub fn identity() -> Self {
        Self::new(Mat2::identity(), Mat2::identity())
    }

    pub fn matrix(&self) -> Mat4 {
        tensor(&self.a, &self.b)
    }

    pub fn adjoint(&self) -> Self {
        Self::new(self.a.adjoint(), self.b.adjoint())
    }

    /// `self · other`, factor by factor.
    pub fn then_after(&self, other: &Self) -> Self {
        Self::new(self.a * other.a, self.b * other.b)
    }

    pub fn apply(&self, s: &TwoQubitState) -> TwoQubitState {
        s.apply_local(&self.a, &self.b)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        check_unitary(&self.a, tol) && check_unitary(&self.b, tol)
    }
}

/// Splits a 4×4 matrix of the form `e^{i p}(a ⊗ b)` into `(a, b, p)` with
/// `a, b` in SU(2). The pivot is the 2×2 block of largest norm.
pub fn factor_local(k: &Mat4) -> (LocalPair, f64) {
    let block = |i: usize, j: usize| -> Mat2 { k.fixed_view::<2, 2>(2 * i, 2 * j).into_owned() };
    let (bi, bj) = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .max_by(|&(i1, j1), &(i2, j2)| block(i1, j1).norm().total_cmp(&block(i2, j2).norm()))
        .expect("four blocks");
    let pivot = block(bi, bj);
    let b = pivot / pivot.determinant().sqrt();
    let b_dag = b.adjoint();
    let mut a = Mat2::zeros();
    for m in 0..2 {
        for n in 0..2 {
            a[(m, n)] = (b_dag * block(m, n)).trace() * 0.5;
        }
    }
    let root = a.determinant().sqrt();
    let a = a / root;
    (LocalPair::new(a, b), root.arg())
}

/// Schmidt decomposition `s = (A ⊗ B)(c0 |00> + c1 |11>)`, `c0 >= c1 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Schmidt {
    pub coefficients: [f64; 2],
    pub local_a: Mat2,
    pub local_b: Mat2,
}

impl Schmidt {
    pub fn reassemble(&self) -> TwoQubitState {
        let [c0, c1] = self.coefficients;
        TwoQubitState::from_raw([c(c0, 0.0), ZERO, ZERO, c(c1, 0.0)])
            .apply_local(&self.local_a, &self.local_b)
    }
}

/// Schmidt decomposition from the SVD of the amplitude matrix: if
/// `S = U diag(c) V^dagger` then `s = (U ⊗ conj(V))(c0|00> + c1|11>)`.
pub fn schmidt(s: &TwoQubitState) -> Schmidt {
    let svd = nalgebra::SVD::new(s.amplitude_matrix(), true, true);
    let u = svd.u.expect("u requested");
    let v_t = svd.v_t.expect("v_t requested");
    let sv = svd.singular_values;
    let (c0, c1) = (sv[0], sv[1]);
    let local_b = v_t.transpose();
    if c0 >= c1 {
        Schmidt {
            coefficients: [c0, c1],
            local_a: u,
            local_b,
        }
    } else {
        // swap columns so the larger coefficient comes first
        let swap = Mat2::new(ZERO, ONE, ONE, ZERO);
        Schmidt {
            coefficients: [c1, c0],
            local_a: u * swap,
            local_b: local_b * swap,
        }
    }
}
