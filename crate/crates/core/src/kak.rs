//! Canonical (KAK) decomposition of two-qubit unitaries.
//!
//! Every `U ∈ U(4)` factors as
//! `U = e^{i phi} (u_A ⊗ u_B) exp(i(a XX + b YY + c ZZ)) (v_A ⊗ v_B)`.
//! The interaction angles are canonicalized into the Weyl chamber
//! `pi/4 >= a >= b >= |c|`, with `c >= 0` whenever `a = pi/4`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use nalgebra::{Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::magic::MagicBasisTransform;
use crate::numeric::{
    c, cis, factor_local, pauli_x, pauli_y, pauli_z, require_unitary, LocalPair, Mat2, Mat4,
    UNITARY_TOL,
};

/// Eigenphases `lambda_k` of `exp(i(a XX + b YY + c ZZ))` on `|Ψ_k>`.
pub fn lambdas_from_alphas([a, b, c]: [f64; 3]) -> [f64; 4] {
    [a - b + c, -a + b + c, -a - b - c, a + b - c]
}

/// Inverse of [`lambdas_from_alphas`] on phase vectors summing to zero.
pub fn alphas_from_lambdas(l: [f64; 4]) -> [f64; 3] {
    [
        (l[0] + l[3]) / 2.0,
        (l[1] + l[3]) / 2.0,
        (l[0] + l[1]) / 2.0,
    ]
}

/// `exp(i(a XX + b YY + c ZZ))`.
pub fn canonical_gate(alphas: [f64; 3]) -> Mat4 {
    InteractionCore::new(lambdas_from_alphas(alphas)).matrix()
}

/// An operator diagonal in the magic basis, `sum_k e^{i lambda_k} |Ψ_k><Ψ_k|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InteractionCore {
    pub lambdas: [f64; 4],
}

impl InteractionCore {
    pub fn new(lambdas: [f64; 4]) -> Self {
        Self { lambdas }
    }

    pub fn matrix(&self) -> Mat4 {
        let d = Matrix4::from_diagonal(&Vector4::from(self.lambdas.map(cis)));
        MagicBasisTransform::get().from_magic(&d)
    }

    /// Reads the phases off a matrix that must be unitary and diagonal in the
    /// magic basis (off-diagonal magnitude at most `1e-9`).
    pub fn from_matrix(m: &Mat4) -> Result<Self> {
        require_unitary(m, UNITARY_TOL)?;
        let d = MagicBasisTransform::get().to_magic(m);
        let mut residual = 0.0_f64;
        for r in 0..4 {
            for col in 0..4 {
                if r != col {
                    residual = residual.max(d[(r, col)].norm());
                }
            }
        }
        if residual > 1e-9 {
            return Err(Error::NotMagicDiagonal { residual });
        }
        Ok(Self::new([0, 1, 2, 3].map(|k| d[(k, k)].arg())))
    }

    /// `core^m`, which just scales every phase.
    pub fn power(&self, m: u32) -> Self {
        Self::new(self.lambdas.map(|l| l * m as f64))
    }

    pub fn adjoint(&self) -> Self {
        Self::new(self.lambdas.map(|l| -l))
    }
}

/// KAK factorization of a two-qubit unitary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalForm {
    /// Outer local pair `(u_A, u_B)`.
    pub k1: LocalPair,
    /// Interaction angles `(a_x, a_y, a_z)` in radians.
    pub alphas: [f64; 3],
    /// Inner local pair `(v_A, v_B)`.
    pub k2: LocalPair,
    pub global_phase: f64,
    /// Magic-basis eigenphases of the interaction core, derived from `alphas`.
    pub lambdas: [f64; 4],
}

impl CanonicalForm {
    pub fn new(k1: LocalPair, alphas: [f64; 3], k2: LocalPair, global_phase: f64) -> Self {
        Self {
            k1,
            alphas,
            k2,
            global_phase,
            lambdas: lambdas_from_alphas(alphas),
        }
    }

    pub fn core(&self) -> InteractionCore {
        InteractionCore::new(self.lambdas)
    }

    pub fn in_weyl_chamber(&self, tol: f64) -> bool {
        let [a, b, c] = self.alphas;
        FRAC_PI_4 + tol >= a && a + tol >= b && b + tol >= c.abs()
    }
}

/// `U_d = sum_k e^{i lambda_k} |Ψ_k><Ψ_k|` for the canonical form.
pub fn interaction_core(form: &CanonicalForm) -> Mat4 {
    form.core().matrix()
}

/// `e^{i phi} (u_A ⊗ u_B) U_d (v_A ⊗ v_B)`.
pub fn reconstruct(form: &CanonicalForm) -> Mat4 {
    form.k1.matrix() * interaction_core(form) * form.k2.matrix() * cis(form.global_phase)
}

/// Canonical decomposition of a 4×4 unitary.
pub fn kak_decompose(u: &Mat4) -> Result<CanonicalForm> {
    require_unitary(u, UNITARY_TOL)?;
    let magic = MagicBasisTransform::get();

    // move into SU(4); principal fourth root of the determinant
    let det = u.determinant();
    let mut global_phase = det.arg() / 4.0;
    let su = u * cis(-global_phase);

    // in the magic basis su = O1 D O2 with O1, O2 in SO(4) and D diagonal,
    // so M^T M = O2^T D^2 O2 is diagonalized by a real orthogonal matrix
    let m = magic.to_magic(&su);
    let m2 = m.transpose() * m;
    let mut p = orthogonal_diagonalizer(&m2);
    if p.determinant() < 0.0 {
        for r in 0..4 {
            p[(r, 3)] = -p[(r, 3)];
        }
    }
    let pc = p.map(|x| c(x, 0.0));
    let d2 = pc.transpose() * m2 * pc;

    let mut theta = [0.0; 4];
    for k in 0..3 {
        theta[k] = d2[(k, k)].arg() / 2.0;
    }
    // det D = 1 fixes the last half-phase
    theta[3] = -(theta[0] + theta[1] + theta[2]);

    let d_inv = Matrix4::from_diagonal(&Vector4::from(theta.map(|t| cis(-t))));
    let o1 = m * pc * d_inv;
    let k1 = magic.from_magic(&o1);
    let k2 = magic.from_magic(&pc.transpose());

    let (k1, phase1) = factor_local(&k1);
    let (k2, phase2) = factor_local(&k2);
    global_phase += phase1 + phase2;

    let mut builder = Canonicalizer {
        k1,
        alphas: alphas_from_lambdas(theta),
        k2,
        global_phase,
    };
    builder.canonicalize();
    Ok(builder.finish())
}

/// Real orthogonal `P` with `P^T m2 P` diagonal, for complex symmetric
/// unitary `m2`. Its real and imaginary parts commute, so they share an
/// eigenbasis.
fn orthogonal_diagonalizer(m2: &Mat4) -> Matrix4<f64> {
    let re = m2.map(|z| z.re);
    let im = m2.map(|z| z.im);
    // generic mixing weights; a degenerate combination is caught by the residual check
    #[allow(clippy::approx_constant)]
    const MIXES: [(f64, f64); 4] = [
        (1.260_206_611_238_938_8, 0.223_178_490_467_220_27),
        (0.577_350_269_189_625_8, 1.414_213_562_373_095_1),
        (-0.318_309_886_183_790_7, 0.840_896_415_253_714_6),
        (1.0, -0.618_033_988_749_894_8),
    ];
    let mut best: Option<(f64, Matrix4<f64>)> = None;
    for (wa, wb) in MIXES {
        let mixed = re * wa + im * wb;
        let p = SymmetricEigen::new(mixed).eigenvectors;
        let r = joint_off_diagonal(&p, &re, &im);
        if r < 1e-12 {
            return p;
        }
        if best.as_ref().is_none_or(|(b, _)| r < *b) {
            best = Some((r, p));
        }
    }
    let (_, p) = best.expect("at least one mix tried");
    jacobi_joint_diagonalize(p, &re, &im)
}

fn off_diagonal(m: &Matrix4<f64>) -> f64 {
    let mut worst = 0.0_f64;
    for r in 0..4 {
        for col in 0..4 {
            if r != col {
                worst = worst.max(m[(r, col)].abs());
            }
        }
    }
    worst
}

fn joint_off_diagonal(p: &Matrix4<f64>, a: &Matrix4<f64>, b: &Matrix4<f64>) -> f64 {
    off_diagonal(&(p.transpose() * a * p)).max(off_diagonal(&(p.transpose() * b * p)))
}

/// Jacobi sweeps for simultaneous diagonalization of two commuting real
/// symmetric matrices, starting from the orthogonal guess `p`.
fn jacobi_joint_diagonalize(
    mut p: Matrix4<f64>,
    a: &Matrix4<f64>,
    b: &Matrix4<f64>,
) -> Matrix4<f64> {
    let mut mats = [p.transpose() * a * p, p.transpose() * b * p];
    for _sweep in 0..64 {
        let mut rotated = false;
        for i in 0..3 {
            for j in (i + 1)..4 {
                // maximize the diagonal mass of both matrices in the (i, j) plane
                let (mut g11, mut g12, mut g22) = (0.0, 0.0, 0.0);
                for m in &mats {
                    let h0 = m[(i, i)] - m[(j, j)];
                    let h1 = 2.0 * m[(i, j)];
                    g11 += h0 * h0;
                    g12 += h0 * h1;
                    g22 += h1 * h1;
                }
                let ton = g11 - g22;
                let toff = 2.0 * g12;
                let theta = 0.5 * toff.atan2(ton + (ton * ton + toff * toff).sqrt());
                let (s, cs) = theta.sin_cos();
                if s.abs() < 1e-16 {
                    continue;
                }
                rotated = true;
                for m in mats.iter_mut() {
                    rotate(m, i, j, cs, s);
                }
                for r in 0..4 {
                    let (pi, pj) = (p[(r, i)], p[(r, j)]);
                    p[(r, i)] = cs * pi + s * pj;
                    p[(r, j)] = -s * pi + cs * pj;
                }
            }
        }
        if !rotated || mats.iter().all(|m| off_diagonal(m) < 1e-14) {
            break;
        }
    }
    p
}

/// `m <- G^T m G` for the Givens rotation `G` acting on columns `i`, `j`.
fn rotate(m: &mut Matrix4<f64>, i: usize, j: usize, cs: f64, s: f64) {
    for r in 0..4 {
        let (mi, mj) = (m[(r, i)], m[(r, j)]);
        m[(r, i)] = cs * mi + s * mj;
        m[(r, j)] = -s * mi + cs * mj;
    }
    for col in 0..4 {
        let (mi, mj) = (m[(i, col)], m[(j, col)]);
        m[(i, col)] = cs * mi + s * mj;
        m[(j, col)] = -s * mi + cs * mj;
    }
}

fn pauli(axis: usize) -> Mat2 {
    match axis {
        0 => pauli_x(),
        1 => pauli_y(),
        _ => pauli_z(),
    }
}

/// One-qubit Clifford `l` with `l P_i l^dagger = ±P_j` and `l P_j l^dagger = ±P_i`.
fn axis_swapper(i: usize, j: usize) -> Mat2 {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match (i.min(j), i.max(j)) {
        // S = diag(1, i)
        (0, 1) => Mat2::new(c(1., 0.), c(0., 0.), c(0., 0.), c(0., 1.)),
        // Ry(pi/2)
        (0, 2) => Mat2::new(c(h, 0.), c(-h, 0.), c(h, 0.), c(h, 0.)),
        // Rx(pi/2)
        _ => Mat2::new(c(h, 0.), c(0., -h), c(0., -h), c(h, 0.)),
    }
}

/// Tracks `U = e^{i phi} K1 N(alphas) K2` through the chamber moves.
struct Canonicalizer {
    k1: LocalPair,
    alphas: [f64; 3],
    k2: LocalPair,
    global_phase: f64,
}

impl Canonicalizer {
    /// `alphas[i] += sign * pi/2`, using `N(a) = N(a') (-i sign) P_i ⊗ P_i`.
    fn shift(&mut self, i: usize, sign: f64) {
        self.alphas[i] += sign * FRAC_PI_2;
        let p = pauli(i);
        self.k2 = LocalPair::new(p, p).then_after(&self.k2);
        self.global_phase -= sign * FRAC_PI_2;
    }

    /// Negates `alphas[i]` and `alphas[j]` by conjugating with `P_k ⊗ I`.
    fn flip(&mut self, i: usize, j: usize) {
        let k = 3 - i - j;
        self.alphas[i] = -self.alphas[i];
        self.alphas[j] = -self.alphas[j];
        let p = pauli(k);
        self.k1.a *= p;
        self.k2.a = p * self.k2.a;
    }

    /// Exchanges `alphas[i]` and `alphas[j]` by conjugating with `l ⊗ l`.
    fn swap(&mut self, i: usize, j: usize) {
        self.alphas.swap(i, j);
        let l = axis_swapper(i, j);
        let l_dag = l.adjoint();
        self.k1 = self.k1.then_after(&LocalPair::new(l_dag, l_dag));
        self.k2 = LocalPair::new(l, l).then_after(&self.k2);
    }

    fn canonicalize(&mut self) {
        // each angle into (-pi/4, pi/4]
        for i in 0..3 {
            let turns = (self.alphas[i] / FRAC_PI_2).round();
            let steps = turns.abs() as usize;
            for _ in 0..steps {
                self.shift(i, -turns.signum());
            }
            if self.alphas[i] <= -FRAC_PI_4 {
                self.shift(i, 1.0);
            }
        }
        // order by magnitude
        for _ in 0..2 {
            for i in 0..2 {
                if self.alphas[i].abs() < self.alphas[i + 1].abs() {
                    self.swap(i, i + 1);
                }
            }
        }
        // signs: a >= 0, b >= 0
        if self.alphas[0] < 0.0 && self.alphas[1] < 0.0 {
            self.flip(0, 1);
        } else if self.alphas[0] < 0.0 {
            self.flip(0, 2);
        }
        if self.alphas[1] < 0.0 {
            self.flip(1, 2);
        }
        // on the a = pi/4 face, (pi/4, b, c) ~ (pi/4, b, -c)
        if self.alphas[2] < 0.0 && self.alphas[0] >= FRAC_PI_4 - 1e-12 {
            self.shift(0, -1.0);
            self.flip(0, 2);
        }
        // absorb rounding at the pi/4 face
        for a in self.alphas.iter_mut() {
            *a = a.min(FRAC_PI_4);
        }
    }

    fn finish(self) -> CanonicalForm {
        CanonicalForm::new(self.k1, self.alphas, self.k2, self.global_phase)
    }
}

/// Global phase `e^{i phi}` with `b ≈ e^{i phi} a`, as a convenience for callers
/// comparing a reconstruction with its source.
pub fn phase_between(a: &Mat4, b: &Mat4) -> Complex64 {
    cis(crate::numeric::aligning_phase(a, b))
}
