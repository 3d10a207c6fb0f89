//! Covering-arc functionals: `Θ`, `Ω`, the perfect-entangler test and the
//! optimal run counts derived from them.
//!
//! `Θ(U)` is the length of the smallest arc of the unit circle containing every
//! eigenvalue of `U`. `Ω(U) = Θ(U_d^2)` for the interaction core `U_d` of `U`,
//! computed without a decomposition as `Θ(U (Y⊗Y) U^T (Y⊗Y))`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::kak::{kak_decompose, CanonicalForm};
use crate::magic::{concurrence, Concurrence};
use crate::numeric::{
    eigenphases, pauli_y, require_unitary, tensor, Mat4, TwoQubitState, UNITARY_TOL,
};

/// `Ω` at or below this is treated as a non-entangling gate.
pub const TOL_ZERO: f64 = 1e-9;
/// Slack for the `Ω >= pi` perfect-entangler test.
pub const TOL_ARC: f64 = 1e-9;
/// Ratios within this distance of an integer are snapped before taking the ceiling.
pub const SNAP_TOL: f64 = 1e-7;
/// Concurrence at or above `1 - MAXIMAL_TOL` counts as maximally entangled.
pub const MAXIMAL_TOL: f64 = 1e-9;

/// An arc length in radians, `0 <= radians < 2 pi`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ArcLength(f64);

impl ArcLength {
    pub fn new(radians: f64) -> Self {
        let r = if radians.is_finite() {
            radians.max(0.0)
        } else {
            0.0
        };
        Self(if r >= TAU { r.rem_euclid(TAU) } else { r })
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Smallest covering arc of a set of angles: `2 pi` minus the widest gap
/// between circularly adjacent angles.
pub fn covering_arc(angles: &[f64]) -> ArcLength {
    if angles.is_empty() {
        return ArcLength::new(0.0);
    }
    let mut sorted: Vec<f64> = angles.iter().map(|a| a.rem_euclid(TAU)).collect();
    sorted.sort_by(f64::total_cmp);
    let wrap = sorted[0] + TAU - sorted[sorted.len() - 1];
    let widest = sorted.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::max);
    ArcLength::new(TAU - widest)
}

/// `Θ(u)`.
pub fn theta(u: &Mat4) -> Result<ArcLength> {
    Ok(covering_arc(&eigenphases(u)?.phases))
}

/// `U (Y⊗Y) U^T (Y⊗Y)`, with the transpose in the computational basis.
pub fn spin_flip_product(u: &Mat4) -> Mat4 {
    let yy = tensor(&pauli_y(), &pauli_y());
    u * yy * u.transpose() * yy
}

/// `Ω(u)`.
pub fn omega(u: &Mat4) -> Result<ArcLength> {
    require_unitary(u, UNITARY_TOL)?;
    theta(&spin_flip_product(u))
}

/// `Ω` from the core phases: the covering arc of `{2 lambda_k}`.
pub fn omega_from_lambdas(lambdas: &[f64; 4]) -> ArcLength {
    covering_arc(&lambdas.map(|l| 2.0 * l))
}

pub fn omega_from_canonical(form: &CanonicalForm) -> ArcLength {
    omega_from_lambdas(&form.lambdas)
}

pub fn is_perfect_entangler(u: &Mat4) -> Result<bool> {
    Ok(omega(u)?.radians() >= PI - TOL_ARC)
}

/// Ceiling that first snaps ratios sitting on an integer, so a gate built to
/// lie exactly on a boundary does not pick up an extra run from rounding.
pub fn ceil_snapped(ratio: f64) -> u32 {
    let nearest = ratio.round();
    let n = if (ratio - nearest).abs() < SNAP_TOL {
        nearest
    } else {
        ratio.ceil()
    };
    n.max(1.0) as u32
}

fn entangling_omega(u: &Mat4) -> Result<f64> {
    let omega = omega(u)?.radians();
    if omega <= TOL_ZERO {
        Err(Error::NotEntangling { omega })
    } else {
        Ok(omega)
    }
}

/// Optimal number of uses `ceil(pi / Ω(u))` to realize a perfect entangler.
pub fn n_runs(u: &Mat4) -> Result<u32> {
    Ok(ceil_snapped(PI / entangling_omega(u)?))
}

/// Runs needed to take `tau` to a maximally entangled state:
/// `ceil((pi - 2 asin C(tau)) / Ω(u))`.
pub fn n_runs_from_state(u: &Mat4, tau: &TwoQubitState) -> Result<u32> {
    let omega = entangling_omega(u)?;
    let conc = concurrence(tau).value();
    if conc >= 1.0 - MAXIMAL_TOL {
        return Err(Error::AlreadyMaximal { concurrence: conc });
    }
    Ok(ceil_snapped((PI - 2.0 * conc.asin()) / omega))
}

/// Largest concurrence reachable from `tau` with one use of `u` and free local
/// unitaries: 1 when a single run suffices, `sin(asin C(tau) + Ω/2)` otherwise.
pub fn single_use_max_concurrence(u: &Mat4, tau: &TwoQubitState) -> Result<Concurrence> {
    let omega = entangling_omega(u)?;
    let conc = concurrence(tau).value();
    if conc >= 1.0 - MAXIMAL_TOL || n_runs_from_state(u, tau)? == 1 {
        return Ok(Concurrence::new(1.0));
    }
    Ok(Concurrence::new((conc.asin() + omega / 2.0).sin()))
}

/// Lower bound `ceil(Ω(v) / Ω(u))` on the uses of `u` needed to simulate `v`,
/// valid when neither gate is a perfect entangler.
pub fn simulation_lower_bound(u: &Mat4, v: &Mat4) -> Result<u32> {
    let omega_u = entangling_omega(u)?;
    let omega_v = omega(v)?.radians();
    if omega_u >= PI - TOL_ARC {
        return Err(Error::OutOfRegime(
            "the simulating gate is a perfect entangler".into(),
        ));
    }
    if omega_v >= PI - TOL_ARC {
        return Err(Error::OutOfRegime(
            "the target gate is a perfect entangler".into(),
        ));
    }
    if omega_v <= TOL_ZERO {
        return Err(Error::NotEntangling { omega: omega_v });
    }
    Ok(ceil_snapped(omega_v / omega_u))
}

/// Tolerances an analysis was run with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub unitary: f64,
    pub zero: f64,
    pub arc: f64,
    pub snap: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            unitary: UNITARY_TOL,
            zero: TOL_ZERO,
            arc: TOL_ARC,
            snap: SNAP_TOL,
        }
    }
}

/// Everything `analyze` reports about a gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisReport {
    pub omega: ArcLength,
    /// `None` when the gate is not entangling.
    pub n_runs: Option<u32>,
    pub is_perfect_entangler: bool,
    pub canonical: CanonicalForm,
    pub tolerances_used: Tolerances,
}

pub fn analyze(u: &Mat4) -> Result<AnalysisReport> {
    let canonical = kak_decompose(u)?;
    let omega = omega(u)?;
    let tolerances_used = Tolerances::default();
    let n_runs = (omega.radians() > TOL_ZERO).then(|| ceil_snapped(PI / omega.radians()));
    Ok(AnalysisReport {
        omega,
        n_runs,
        is_perfect_entangler: omega.radians() >= PI - TOL_ARC,
        canonical,
        tolerances_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates;
    use crate::numeric::{cis, Mat4, ONE};
    use nalgebra::Vector4;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn theta_examples() {
        assert!(close(
            theta(&Mat4::identity()).unwrap().radians(),
            0.0,
            1e-12
        ));
        let d = Mat4::from_diagonal(&Vector4::new(ONE, cis(FRAC_PI_2), ONE, ONE));
        assert!(close(theta(&d).unwrap().radians(), FRAC_PI_2, 1e-12));
        let d = Mat4::from_diagonal(&Vector4::new(ONE, cis(FRAC_PI_2), cis(PI), cis(-FRAC_PI_2)));
        assert!(close(theta(&d).unwrap().radians(), 3.0 * FRAC_PI_2, 1e-12));
    }

    #[test]
    fn covering_arc_handles_wraparound_and_ties() {
        assert!(close(
            covering_arc(&[PI - 0.1, -PI + 0.1]).radians(),
            0.2,
            1e-12
        ));
        assert!(close(
            covering_arc(&[0.3, 0.3, 0.3, 0.3]).radians(),
            0.0,
            1e-15
        ));
        assert!(close(
            covering_arc(&[0.0, 0.0, 1.0, 1.0]).radians(),
            1.0,
            1e-15
        ));
    }

    #[test]
    fn omega_examples() {
        assert!(omega(&gates::swap()).unwrap().radians() < 1e-9);
        assert!(close(omega(&gates::cnot()).unwrap().radians(), PI, 1e-9));
        for t in [0.2, FRAC_PI_4, FRAC_PI_2, 2.5, PI] {
            assert!(
                close(omega(&gates::cp(t)).unwrap().radians(), t, 1e-9),
                "cp({t})"
            );
        }
    }

    #[test]
    fn perfect_entangler_examples() {
        assert!(is_perfect_entangler(&gates::cnot()).unwrap());
        assert!(!is_perfect_entangler(&gates::swap()).unwrap());
        assert!(is_perfect_entangler(&gates::sqrt_swap()).unwrap());
        let core = omega_from_lambdas(&crate::kak::lambdas_from_alphas([FRAC_PI_8; 3]));
        assert!(close(core.radians(), PI, 1e-12));
    }

    #[test]
    fn run_counts() {
        assert_eq!(n_runs(&gates::cnot()).unwrap(), 1);
        assert_eq!(n_runs(&gates::cp(FRAC_PI_2)).unwrap(), 2);
        assert_eq!(n_runs(&gates::cp(FRAC_PI_4)).unwrap(), 4);
        assert!(matches!(
            n_runs(&gates::swap()),
            Err(Error::NotEntangling { .. })
        ));
        assert!(matches!(
            n_runs(&Mat4::identity()),
            Err(Error::NotEntangling { .. })
        ));
    }

    #[test]
    fn run_counts_from_state() {
        let zero = TwoQubitState::basis(false, false);
        let cs = gates::cp(FRAC_PI_2);
        let ct = gates::cp(FRAC_PI_4);
        assert_eq!(n_runs_from_state(&cs, &zero).unwrap(), 2);
        // C = sin(2t) for the Schmidt form, so t = theta / 2
        assert_eq!(
            n_runs_from_state(&cs, &TwoQubitState::schmidt_form(FRAC_PI_8)).unwrap(),
            1
        );
        assert_eq!(
            n_runs_from_state(&ct, &TwoQubitState::schmidt_form(PI / 16.0)).unwrap(),
            3
        );
        assert!(matches!(
            n_runs_from_state(&cs, &TwoQubitState::bell()),
            Err(Error::AlreadyMaximal { .. })
        ));
    }

    #[test]
    fn single_use_examples() {
        let zero = TwoQubitState::basis(false, false);
        let v = single_use_max_concurrence(&gates::cnot(), &zero)
            .unwrap()
            .value();
        assert!(close(v, 1.0, 1e-12));
        let v = single_use_max_concurrence(&gates::cp(FRAC_PI_2), &zero)
            .unwrap()
            .value();
        assert!(close(v, FRAC_PI_4.sin(), 1e-9));
        let tau = TwoQubitState::schmidt_form(PI / 16.0);
        let v = single_use_max_concurrence(&gates::cp(FRAC_PI_4), &tau)
            .unwrap()
            .value();
        assert!(close(v, FRAC_PI_4.sin(), 1e-9));
        assert!(single_use_max_concurrence(&gates::swap(), &zero).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        let cp = gates::cp;
        assert_eq!(
            simulation_lower_bound(&cp(FRAC_PI_4), &cp(3.0 * FRAC_PI_4)).unwrap(),
            3
        );
        assert_eq!(
            simulation_lower_bound(&cp(FRAC_PI_2), &cp(FRAC_PI_2)).unwrap(),
            1
        );
        assert_eq!(
            simulation_lower_bound(&cp(3.0 * FRAC_PI_4), &cp(FRAC_PI_4)).unwrap(),
            1
        );
        assert!(matches!(
            simulation_lower_bound(&gates::cnot(), &cp(FRAC_PI_2)),
            Err(Error::OutOfRegime(_))
        ));
        assert!(matches!(
            simulation_lower_bound(&cp(FRAC_PI_2), &gates::cz()),
            Err(Error::OutOfRegime(_))
        ));
        assert!(matches!(
            simulation_lower_bound(&gates::swap(), &cp(FRAC_PI_2)),
            Err(Error::NotEntangling { .. })
        ));
    }

    #[test]
    fn snap_behaviour() {
        assert_eq!(ceil_snapped(2.0 + 1e-9), 2);
        assert_eq!(ceil_snapped(2.0 - 1e-9), 2);
        assert_eq!(ceil_snapped(2.001), 3);
        assert_eq!(ceil_snapped(0.3), 1);
    }

    #[test]
    fn omega_routes_agree_on_named_gates() {
        for g in [
            gates::cnot(),
            gates::cp(0.9),
            gates::sqrt_swap(),
            gates::canonical(0.3, 0.2, -0.1),
        ] {
            let direct = omega(&g).unwrap().radians();
            let via_kak = omega_from_canonical(&kak_decompose(&g).unwrap()).radians();
            assert!(close(direct, via_kak, 1e-8));
        }
    }

    #[test]
    fn analyze_report_fields() {
        let r = analyze(&gates::swap()).unwrap();
        assert!(r.n_runs.is_none() && !r.is_perfect_entangler);
        let r = analyze(&gates::cnot()).unwrap();
        assert_eq!(r.n_runs, Some(1));
        assert!(r.is_perfect_entangler);
    }
}
