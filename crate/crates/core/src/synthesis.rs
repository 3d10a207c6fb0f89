//! Explicit perfect entanglers built from `N = ceil(pi / Ω)` uses of a gate.
//!
//! Working on the interaction core `U_d = sum_k e^{i lambda_k} |Ψ_k><Ψ_k|`:
//!
//! 1. the product seed `(|Ψ_hi> + i|Ψ_lo>)/√2` on the two extreme phases gains
//!    concurrence `sin(m Ω / 2)` after `m` applications of `U_d`;
//! 2. after `N - 1` applications that concurrence lies in the band
//!    `[cos(Ω/2), 1]`, so some state of equal concurrence is sent by one more
//!    `U_d` to a maximally entangled state;
//! 3. local layers connect `|00>` to the seed and the intermediate state to
//!    that preimage.
//!
//! The outer locals of `U = e^{i phi} K1 U_d K2` are folded into the layers, so
//! the circuit uses the given gate directly.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI, TAU};

use num_complex::Complex64;

use crate::arc::{covering_arc, n_runs, omega, ArcLength, TOL_ARC, TOL_ZERO};
use crate::error::{Error, Result};
use crate::kak::{kak_decompose, InteractionCore};
use crate::magic::{concurrence, MagicBasisTransform};
use crate::numeric::{c, check_unitary, cis, schmidt, LocalPair, Mat4, TwoQubitState, ZERO};

/// Concurrence a synthesized output must reach.
pub const OUTPUT_TOL: f64 = 1e-8;
/// Slack on `Ω(total) >= pi` when verifying a circuit.
pub const VERIFY_ARC_TOL: f64 = 1e-6;
/// Allowed concurrence mismatch for [`equal_concurrence_connector`].
pub const CONNECTOR_TOL: f64 = 1e-8;

/// Endpoints of the smallest arc covering the doubled core phases `2 lambda_k`:
/// `hi` ends the arc, `lo` starts it, so `2(lambda_hi - lambda_lo) ≡ Ω (mod 2 pi)`.
/// Equal phases resolve to the lowest magic index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremePair {
    pub hi: usize,
    pub lo: usize,
}

impl ExtremePair {
    pub fn of(core: &InteractionCore) -> Self {
        let doubled = core.lambdas.map(|l| (2.0 * l).rem_euclid(TAU));
        let mut order = [0usize, 1, 2, 3];
        order.sort_by(|&a, &b| doubled[a].total_cmp(&doubled[b]).then(a.cmp(&b)));
        // widest gap, first one wins on ties
        let mut widest = (0usize, f64::MIN);
        for pos in 0..4 {
            let here = doubled[order[pos]];
            let next = if pos == 3 {
                doubled[order[0]] + TAU
            } else {
                doubled[order[pos + 1]]
            };
            if next - here > widest.1 {
                widest = (pos, next - here);
            }
        }
        let end_phase = doubled[order[widest.0]];
        let start_phase = doubled[order[(widest.0 + 1) % 4]];
        let lowest_with = |phase: f64| {
            (0..4)
                .find(|&k| doubled[k] == phase)
                .expect("phase taken from the list")
        };
        Self {
            hi: lowest_with(end_phase),
            lo: lowest_with(start_phase),
        }
    }
}

fn core_omega(core: &InteractionCore) -> f64 {
    covering_arc(&core.lambdas.map(|l| 2.0 * l)).radians()
}

/// `(|Ψ_hi> + i|Ψ_lo>)/√2`, a product state.
pub fn seed_product_state(core: &InteractionCore) -> Result<TwoQubitState> {
    let omega = core_omega(core);
    if omega <= TOL_ZERO {
        return Err(Error::DegenerateCore { omega });
    }
    let pair = ExtremePair::of(core);
    let mut mu = [ZERO; 4];
    mu[pair.hi] = c(FRAC_1_SQRT_2, 0.0);
    mu[pair.lo] = c(0.0, FRAC_1_SQRT_2);
    Ok(MagicBasisTransform::get().state_from_coefficients(mu))
}

/// `core` applied in the magic basis, where it is diagonal.
fn apply_core(core: &InteractionCore, s: &TwoQubitState) -> TwoQubitState {
    let magic = MagicBasisTransform::get();
    let mut mu = crate::magic::to_magic_basis(s);
    for (m, l) in mu.iter_mut().zip(core.lambdas) {
        *m *= cis(l);
    }
    magic.state_from_coefficients(mu)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryStep {
    pub index: u32,
    pub state: TwoQubitState,
    pub concurrence: f64,
}

/// States `core^m seed` for `m = 0..=steps`.
pub fn trajectory(core: &InteractionCore, seed: &TwoQubitState, steps: u32) -> Vec<TrajectoryStep> {
    let mut out = Vec::with_capacity(steps as usize + 1);
    let mut state = *seed;
    for index in 0..=steps {
        out.push(TrajectoryStep {
            index,
            state,
            concurrence: concurrence(&state).value(),
        });
        state = apply_core(core, &state);
    }
    out
}

/// A state `psi` of prescribed concurrence together with the maximally
/// entangled `core |psi>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Preimage {
    pub state: TwoQubitState,
    pub image: TwoQubitState,
    /// Mixing angle of the two-component family; `None` when the three-component
    /// construction for perfect-entangler cores was used.
    pub t: Option<f64>,
}

/// `|C(sum_k w_k z_k)|` with `z_k = e^{-2 i lambda_k}`.
fn hull_modulus(core: &InteractionCore, weights: &[f64; 4]) -> f64 {
    weights
        .iter()
        .zip(core.lambdas)
        .map(|(w, l)| cis(-2.0 * l) * *w)
        .sum::<Complex64>()
        .norm()
}

/// Builds `psi = core^dagger sum_k sqrt(w_k) |Ψ_k>` for convex weights `w`.
fn preimage_from_weights(core: &InteractionCore, weights: &[f64; 4], t: Option<f64>) -> Preimage {
    let magic = MagicBasisTransform::get();
    let coeffs = weights.map(|w| c(w.max(0.0).sqrt(), 0.0));
    let image = magic.state_from_coefficients(coeffs);
    let state = apply_core(&core.adjoint(), &image);
    Preimage { state, image, t }
}

/// Convex weights on the points `e^{-2 i lambda_k}` whose combination is the
/// origin. Exists iff the covering arc is at least `pi`; found among pairs of
/// antipodal points and triangles of three points.
fn zero_weights(core: &InteractionCore) -> [f64; 4] {
    let z: Vec<Complex64> = core.lambdas.iter().map(|&l| cis(-2.0 * l)).collect();
    let mut best = ([0.25; 4], f64::INFINITY);
    let mut consider = |w: [f64; 4]| {
        let clamped = w.map(|x| x.max(0.0));
        let total: f64 = clamped.iter().sum();
        if total <= 0.0 {
            return;
        }
        let w = clamped.map(|x| x / total);
        let residual = hull_modulus(core, &w);
        if residual < best.1 {
            best = (w, residual);
        }
    };
    for i in 0..4 {
        for j in (i + 1)..4 {
            let mut w = [0.0; 4];
            w[i] = 0.5;
            w[j] = 0.5;
            consider(w);
        }
    }
    for skip in 0..4 {
        let idx: Vec<usize> = (0..4).filter(|&k| k != skip).collect();
        let (a, b, cc) = (z[idx[0]], z[idx[1]], z[idx[2]]);
        // barycentric coordinates of the origin in triangle (a, b, cc)
        let det = (b - a).re * (cc - a).im - (b - a).im * (cc - a).re;
        if det.abs() < 1e-14 {
            continue;
        }
        let o = -a;
        let wb = (o.re * (cc - a).im - o.im * (cc - a).re) / det;
        let wc = ((b - a).re * o.im - (b - a).im * o.re) / det;
        let mut w = [0.0; 4];
        w[idx[0]] = 1.0 - wb - wc;
        w[idx[1]] = wb;
        w[idx[2]] = wc;
        consider(w);
    }
    best.0
}

/// Finds `psi` with `C(psi) = target` and `core |psi>` maximally entangled.
///
/// The image is `cos t |Ψ_hi> + sin t |Ψ_lo>`, which reaches every target in
/// `[|cos(Ω/2)|, 1]` through `sin^2(2t) = (1 - target^2) / sin^2(Δ/2)`, `Δ` the
/// short angle between the two extreme doubled phases. When `Ω >= pi` the
/// remaining band `[0, |cos(Ω/2)|)` is covered by blending with a convex
/// combination that cancels exactly.
pub fn max_entangled_preimage(core: &InteractionCore, target: f64) -> Result<Preimage> {
    let omega = core_omega(core);
    let perfect = omega >= PI - TOL_ARC;
    let edge = (omega / 2.0).cos().abs();
    let lower = if perfect { 0.0 } else { edge };
    if !(target >= lower - 1e-9 && target <= 1.0 + 1e-12) {
        return Err(Error::TargetOutOfRange { target, min: lower });
    }
    let target = target.clamp(0.0, 1.0);
    let pair = ExtremePair::of(core);

    if !perfect || target >= edge || pair.hi == pair.lo {
        let weights_at = |t: f64| {
            let mut w = [0.0; 4];
            w[pair.hi] += t.cos().powi(2);
            w[pair.lo] += t.sin().powi(2);
            w
        };
        let delta = {
            let d = (2.0 * (core.lambdas[pair.hi] - core.lambdas[pair.lo])).rem_euclid(TAU);
            d.min(TAU - d)
        };
        let half = (delta / 2.0).sin();
        let mut t = if half.abs() < 1e-15 {
            0.0
        } else {
            let s2 = ((1.0 - target * target) / (half * half)).clamp(0.0, 1.0);
            s2.sqrt().asin() / 2.0
        };
        if (hull_modulus(core, &weights_at(t)) - target).abs() > 1e-12 {
            // C(t) decreases on [0, pi/4]
            let (mut lo, mut hi) = (0.0, FRAC_PI_4);
            while hi - lo > 1e-14 {
                let mid = 0.5 * (lo + hi);
                if hull_modulus(core, &weights_at(mid)) > target {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            t = 0.5 * (lo + hi);
        }
        return Ok(preimage_from_weights(core, &weights_at(t), Some(t)));
    }

    // perfect-entangler core below the two-component edge: blend the exact
    // cancellation with a unit weight on one extreme, |sum| = s
    let zero = zero_weights(core);
    let mut weights = zero.map(|w| (1.0 - target) * w);
    weights[pair.hi] += target;
    Ok(preimage_from_weights(core, &weights, None))
}

fn connector_unchecked(from: &TwoQubitState, to: &TwoQubitState) -> LocalPair {
    let f = schmidt(from);
    let t = schmidt(to);
    LocalPair::new(
        t.local_a * f.local_a.adjoint(),
        t.local_b * f.local_b.adjoint(),
    )
}

/// Local pair `(w_A, w_B)` with `(w_A ⊗ w_B) from = to`, for states of equal
/// concurrence. Both states are written in Schmidt form and the bases matched.
pub fn equal_concurrence_connector(from: &TwoQubitState, to: &TwoQubitState) -> Result<LocalPair> {
    let cf = concurrence(from).value();
    let ct = concurrence(to).value();
    if (cf - ct).abs() > CONNECTOR_TOL {
        return Err(Error::ConcurrenceMismatch { from: cf, to: ct });
    }
    Ok(connector_unchecked(from, to))
}

/// An interleaving `L_N U ... L_1 U L_0` applied to a product input.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthesizedCircuit {
    /// `locals[0]` acts first.
    pub locals: Vec<LocalPair>,
    pub gate: Mat4,
    pub uses: u32,
    pub product_input: TwoQubitState,
    pub certified_output_concurrence: f64,
}

impl SynthesizedCircuit {
    /// Product of all layers and gate uses. Layers past the first are each
    /// preceded by one use of the gate.
    pub fn total(&self) -> Mat4 {
        let mut layers = self.locals.iter();
        let mut total = layers.next().map_or_else(Mat4::identity, LocalPair::matrix);
        for layer in layers {
            total = layer.matrix() * self.gate * total;
        }
        total
    }

    /// State after the circuit acts on `product_input`.
    pub fn output(&self) -> TwoQubitState {
        let mut layers = self.locals.iter();
        let mut s = match layers.next() {
            Some(l) => l.apply(&self.product_input),
            None => self.product_input,
        };
        for layer in layers {
            s = layer.apply(&s.apply(&self.gate));
        }
        s
    }

    /// The inverse circuit: adjoint gate, adjoint layers in reverse order,
    /// starting from this circuit's output.
    pub fn reversed(&self) -> SynthesizedCircuit {
        let output = self.output();
        let mut rev = SynthesizedCircuit {
            locals: self.locals.iter().rev().map(LocalPair::adjoint).collect(),
            gate: self.gate.adjoint(),
            uses: self.uses,
            product_input: output,
            certified_output_concurrence: 0.0,
        };
        rev.certified_output_concurrence = concurrence(&rev.output()).value();
        rev
    }

    /// Drops the last gate use and the layer after it.
    pub fn truncated(&self) -> SynthesizedCircuit {
        let mut out = self.clone();
        if out.locals.len() > 1 {
            out.locals.pop();
            out.uses = out.uses.saturating_sub(1);
        }
        out.certified_output_concurrence = concurrence(&out.output()).value();
        out
    }
}

/// Outcome of [`verify_circuit`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyReport {
    pub input_concurrence: f64,
    pub output_concurrence: f64,
    pub omega_of_total: ArcLength,
    /// Layer count equals `uses + 1` and every factor is unitary.
    pub well_formed: bool,
    pub ok: bool,
}

/// Multiplies the circuit out and checks both the state-level claim (product
/// input, maximally entangled output) and the operator-level one
/// (`Ω(total) >= pi`).
pub fn verify_circuit(circuit: &SynthesizedCircuit) -> VerifyReport {
    verify_circuit_with_tol(circuit, OUTPUT_TOL)
}

/// [`verify_circuit`] with `tol` in place of the default `1e-8` on both
/// concurrence checks.
pub fn verify_circuit_with_tol(circuit: &SynthesizedCircuit, tol: f64) -> VerifyReport {
    let well_formed = circuit.locals.len() == circuit.uses as usize + 1
        && circuit.locals.iter().all(|l| l.is_unitary(1e-8))
        && check_unitary(&circuit.gate, 1e-8);
    let input_concurrence = concurrence(&circuit.product_input).value();
    let output_concurrence = concurrence(&circuit.output()).value();
    let total = circuit.total();
    let omega_of_total = covering_arc(
        &crate::numeric::eigenphases_unchecked(&crate::arc::spin_flip_product(&total)).phases,
    );
    let ok = well_formed
        && input_concurrence <= tol
        && output_concurrence >= 1.0 - tol
        && omega_of_total.radians() >= PI - VERIFY_ARC_TOL;
    VerifyReport {
        input_concurrence,
        output_concurrence,
        omega_of_total,
        well_formed,
        ok,
    }
}

/// Builds an interleaving of `N(u)` uses of `u` that is a perfect entangler,
/// together with a product input it maps to a maximally entangled state.
pub fn synthesize_perfect_entangler(u: &Mat4) -> Result<SynthesizedCircuit> {
    let form = kak_decompose(u)?;
    let omega = omega(u)?.radians();
    if omega <= TOL_ZERO {
        return Err(Error::NotEntangling { omega });
    }
    let uses = n_runs(u)?;
    let core = form.core();
    let input = TwoQubitState::basis(false, false);

    // U_d = e^{-i phi} K1^dagger U K2^dagger
    let k1_dag = form.k1.adjoint();
    let k2_dag = form.k2.adjoint();

    let mut locals = Vec::with_capacity(uses as usize + 1);
    if uses == 1 {
        // a product state mapped by one core use to a maximally entangled one
        let target = max_entangled_preimage(&core, 0.0)
            .or_else(|_| max_entangled_preimage(&core, (core_omega(&core) / 2.0).cos().abs()))?;
        let w = connector_unchecked(&input, &target.state);
        locals.push(k2_dag.then_after(&w));
        locals.push(k1_dag);
    } else {
        let seed = seed_product_state(&core)?;
        let steps = trajectory(&core, &seed, uses - 1);
        let mid = steps.last().expect("steps >= 1").state;
        let target = concurrence(&mid).value();
        let pre = max_entangled_preimage(&core, target)?;
        let w_first = equal_concurrence_connector(&input, &seed)?;
        let w_last = equal_concurrence_connector(&mid, &pre.state)?;

        locals.push(k2_dag.then_after(&w_first));
        let between = k2_dag.then_after(&k1_dag);
        for _ in 1..(uses - 1) {
            locals.push(between);
        }
        locals.push(k2_dag.then_after(&w_last).then_after(&k1_dag));
        locals.push(k1_dag);
    }
    // remove the accumulated e^{i N phi}
    if let Some(last) = locals.last_mut() {
        last.a *= cis(-(uses as f64) * form.global_phase);
    }

    let mut circuit = SynthesizedCircuit {
        locals,
        gate: *u,
        uses,
        product_input: input,
        certified_output_concurrence: 0.0,
    };
    circuit.certified_output_concurrence = concurrence(&circuit.output()).value();
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates;
    use crate::kak::{interaction_core, kak_decompose};
    use crate::numeric::{hadamard, pauli_x, Mat2};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_8};

    fn core_of(u: &Mat4) -> InteractionCore {
        kak_decompose(u).unwrap().core()
    }

    #[test]
    fn extreme_pair_realizes_omega() {
        for u in [
            gates::cp(0.4),
            gates::cp(2.9),
            gates::canonical(0.7, 0.3, -0.2),
            gates::cnot(),
        ] {
            let core = core_of(&u);
            let p = ExtremePair::of(&core);
            let d = (2.0 * (core.lambdas[p.hi] - core.lambdas[p.lo])).rem_euclid(TAU);
            assert!((d - core_omega(&core)).abs() < 1e-12, "{d}");
        }
    }

    #[test]
    fn seed_examples() {
        // CNOT core: extremes pi/4 on Ψ1, Ψ4 and -pi/4 on Ψ2, Ψ3; lowest indices win
        let core = core_of(&gates::cnot());
        assert_eq!(ExtremePair::of(&core), ExtremePair { hi: 0, lo: 1 });
        let seed = seed_product_state(&core).unwrap();
        assert!(concurrence(&seed).value() < 1e-12);
        let after = trajectory(&core, &seed, 1);
        assert!((after[1].concurrence - 1.0).abs() < 1e-12);

        let core = core_of(&gates::cp(FRAC_PI_2));
        let seed = seed_product_state(&core).unwrap();
        assert!(concurrence(&seed).value() < 1e-12);
        let steps = trajectory(&core, &seed, 1);
        assert!((steps[1].concurrence - FRAC_PI_4.sin()).abs() < 1e-9);

        let id = InteractionCore::new([0.0; 4]);
        assert!(matches!(
            seed_product_state(&id),
            Err(Error::DegenerateCore { .. })
        ));
    }

    #[test]
    fn trajectory_follows_sine_law() {
        let core = core_of(&gates::cp(FRAC_PI_4));
        let seed = seed_product_state(&core).unwrap();
        let steps = trajectory(&core, &seed, 3);
        assert_eq!(steps.len(), 4);
        assert!(steps[0].concurrence < 1e-12);
        assert!((steps[3].concurrence - (3.0 * FRAC_PI_8).sin()).abs() < 1e-9);
        for s in &steps {
            let expect = (s.index as f64 * FRAC_PI_8).sin();
            assert!((s.concurrence - expect).abs() < 1e-9);
        }
    }

    #[test]
    fn preimage_examples() {
        let core = core_of(&gates::cp(FRAC_PI_2));
        let omega = FRAC_PI_2;

        let p = max_entangled_preimage(&core, 1.0).unwrap();
        assert!(p.t.unwrap().abs() < 1e-12);
        assert!((concurrence(&p.state).value() - 1.0).abs() < 1e-10);

        let edge = (omega / 2.0).cos();
        let p = max_entangled_preimage(&core, edge).unwrap();
        assert!((p.t.unwrap() - FRAC_PI_4).abs() < 1e-6);
        assert!((concurrence(&p.state).value() - edge).abs() < 1e-10);
        assert!((concurrence(&apply_core(&core, &p.state)).value() - 1.0).abs() < 1e-10);

        // sin(pi/4) equals the band edge for this core
        let p = max_entangled_preimage(&core, FRAC_PI_4.sin()).unwrap();
        assert!((p.t.unwrap() - FRAC_PI_4).abs() < 1e-6);

        for target in [0.72, 0.8, 0.95, 0.999] {
            let p = max_entangled_preimage(&core, target).unwrap();
            assert!((concurrence(&p.state).value() - target).abs() < 1e-10);
            assert!((concurrence(&apply_core(&core, &p.state)).value() - 1.0).abs() < 1e-10);
            // the stored image is core |psi>
            assert!(apply_core(&core, &p.state).max_abs_diff(&p.image) < 1e-12);
        }

        assert!(matches!(
            max_entangled_preimage(&core, 0.5),
            Err(Error::TargetOutOfRange { .. })
        ));
    }

    #[test]
    fn preimage_full_band_for_perfect_entanglers() {
        for u in [
            gates::cnot(),
            gates::sqrt_swap(),
            gates::canonical(0.7, 0.5, 0.1),
        ] {
            let core = core_of(&u);
            for target in [0.0, 0.1, 0.5, 0.9, 1.0] {
                let p = max_entangled_preimage(&core, target).unwrap();
                assert!(
                    (concurrence(&p.state).value() - target).abs() < 1e-9,
                    "{target}"
                );
                assert!((concurrence(&apply_core(&core, &p.state)).value() - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn connector_examples() {
        let zero = TwoQubitState::basis(false, false);
        let plus = TwoQubitState::new([c(0.5, 0.0); 4]).unwrap();
        let w = equal_concurrence_connector(&zero, &plus).unwrap();
        assert!(w.apply(&zero).max_abs_diff(&plus) < 1e-12);
        // any valid answer is H ⊗ H up to phases on |1>
        let h = hadamard();
        let col = |m: &Mat2| [m[(0, 0)], m[(1, 0)]];
        let d = (col(&w.a)[0] * col(&h)[0].conj() + col(&w.a)[1] * col(&h)[1].conj()).norm();
        assert!((d - 1.0).abs() < 1e-12);

        let bell = TwoQubitState::bell();
        let h2 = c(FRAC_1_SQRT_2, 0.0);
        let psi_plus = TwoQubitState::new([ZERO, h2, h2, ZERO]).unwrap();
        let w = equal_concurrence_connector(&bell, &psi_plus).unwrap();
        assert!(w.apply(&bell).max_abs_diff(&psi_plus) < 1e-12);
        // (I ⊗ X) does the same job
        assert!(
            bell.apply_local(&Mat2::identity(), &pauli_x())
                .max_abs_diff(&psi_plus)
                < 1e-15
        );

        assert!(matches!(
            equal_concurrence_connector(&zero, &bell),
            Err(Error::ConcurrenceMismatch { .. })
        ));
    }

    #[test]
    fn synthesize_examples() {
        let circuit = synthesize_perfect_entangler(&gates::cnot()).unwrap();
        assert_eq!(circuit.uses, 1);
        assert_eq!(circuit.locals.len(), 2);
        assert!(circuit.certified_output_concurrence >= 1.0 - 1e-8);
        assert!(verify_circuit(&circuit).ok);

        let circuit = synthesize_perfect_entangler(&gates::cp(FRAC_PI_2)).unwrap();
        assert_eq!(circuit.uses, 2);
        let report = verify_circuit(&circuit);
        assert!(report.ok, "{report:?}");

        let circuit = synthesize_perfect_entangler(&gates::cp(FRAC_PI_4)).unwrap();
        assert_eq!(circuit.uses, 4);
        assert!(verify_circuit(&circuit).ok);

        assert!(matches!(
            synthesize_perfect_entangler(&gates::swap()),
            Err(Error::NotEntangling { .. })
        ));
    }

    #[test]
    fn verify_rejects_short_and_trivial_circuits() {
        let circuit = synthesize_perfect_entangler(&gates::cp(FRAC_PI_4)).unwrap();
        let short = circuit.truncated();
        let report = verify_circuit(&short);
        assert!(!report.ok);
        assert!(report.omega_of_total.radians() <= 3.0 * FRAC_PI_4 + 1e-6);

        let trivial = SynthesizedCircuit {
            locals: vec![LocalPair::identity(); 3],
            gate: Mat4::identity(),
            uses: 2,
            product_input: TwoQubitState::basis(false, false),
            certified_output_concurrence: 0.0,
        };
        assert!(!verify_circuit(&trivial).ok);

        let mut missing = circuit.clone();
        missing.locals.remove(1);
        assert!(!verify_circuit(&missing).well_formed);
        assert!(!verify_circuit(&missing).ok);
    }

    #[test]
    fn reversal_disentangles() {
        let circuit = synthesize_perfect_entangler(&gates::cp(1.0)).unwrap();
        let rev = circuit.reversed();
        assert_eq!(rev.uses, circuit.uses);
        assert!(rev.certified_output_concurrence <= 1e-8);
    }

    #[test]
    fn core_matrix_matches_interaction_core() {
        let form = kak_decompose(&gates::cp(0.8)).unwrap();
        let core = InteractionCore::from_matrix(&interaction_core(&form)).unwrap();
        let s = seed_product_state(&core).unwrap();
        let via_matrix = s.apply(&interaction_core(&form));
        assert!(via_matrix.max_abs_diff(&apply_core(&form.core(), &s)) < 1e-12);
    }
}
