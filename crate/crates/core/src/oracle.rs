//! Brute-force search over local interleavings `X_k U ... X_1 U X_0`.
//!
//! Independent of the analytic pipeline: nothing here looks at `Ω`, the
//! canonical form or the synthesis routines. Each restart draws Z-Y-Z angles
//! uniformly, runs a simplex descent, and the best restart wins.
//!
//! Parameters that provably cannot change the concurrence are not searched:
//!
//! - the final layer `X_k` is held at the identity;
//! - the input is rotated to its Schmidt form `c0|00> + c1|11>` and absorbed
//!   into `X_0`. On that form the leading `Rz` of the second qubit only adds
//!   a relative phase the first qubit already provides. For a product input
//!   both leading `Rz` angles are pure phases. For a maximally entangled input
//!   `(A ⊗ B)` acts like `(A B^T ⊗ I)`, so `B` is dropped entirely.
//!
//! The reported [`LocalParams`] carry all `k + 1` layers in full, expressed
//! against the original input.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arc::{omega, TOL_ZERO};
use crate::error::{Error, Result};
use crate::gates::{zyz, zyz_angles};
use crate::magic::{concurrence, concurrence_fast};
use crate::nelder_mead::{self, Settings};
use crate::numeric::{require_unitary, schmidt, LocalPair, Mat4, TwoQubitState, UNITARY_TOL};

/// Concurrence counted as "maximally entangled".
pub const REACH_ONE: f64 = 1.0 - 1e-6;
/// Concurrence counted as "product".
pub const REACH_ZERO: f64 = 1e-6;
/// How close to 1 an input must be for a disentangling search.
pub const MAXIMAL_INPUT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub restarts: usize,
    /// Simplex iterations per restart.
    pub max_iterations: usize,
    /// Largest `k` tried by the run-count searches.
    pub cap: usize,
    pub seed: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            restarts: 32,
            max_iterations: 2000,
            cap: 16,
            seed: 0,
        }
    }
}

impl OracleBudget {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::BadBudget("restarts must be at least 1".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::BadBudget("max_iterations must be at least 1".into()));
        }
        Ok(())
    }
}

/// Z-Y-Z angles for each one-qubit unitary, layer by layer:
/// `[a0, b0, a1, b1, ...]`, three reals each.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalParams {
    angles: Vec<f64>,
}

impl LocalParams {
    pub fn from_angles(angles: Vec<f64>) -> Result<Self> {
        if !angles.len().is_multiple_of(6) || angles.is_empty() {
            return Err(Error::BadBudget(format!(
                "{} angles do not form whole local layers",
                angles.len()
            )));
        }
        if angles.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { angles })
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn layer_count(&self) -> usize {
        self.angles.len() / 6
    }

    pub fn layer(&self, i: usize) -> LocalPair {
        layer_from(&self.angles[6 * i..6 * i + 6])
    }

    pub fn layers(&self) -> Vec<LocalPair> {
        (0..self.layer_count()).map(|i| self.layer(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub best_concurrence: f64,
    pub best_params: LocalParams,
    pub restarts: usize,
    pub seed: u64,
    /// Whether the winning restart's simplex settled within its budget.
    pub converged: bool,
}

fn layer_from(p: &[f64]) -> LocalPair {
    LocalPair::new(zyz(p[0], p[1], p[2]), zyz(p[3], p[4], p[5]))
}

/// Schmidt coefficients closer than this count as equal (or zero).
const SCHMIDT_TOL: f64 = 1e-12;

/// Which first-layer angles are free, given the input's Schmidt form.
#[derive(Clone, Copy)]
enum FirstLayer {
    /// `(a, b, g) ⊗ (a, b, 0)`
    General,
    /// `(a, b, 0) ⊗ (a, b, 0)`
    Product,
    /// `(a, b, g) ⊗ I`
    Maximal,
}

impl FirstLayer {
    fn of(coefficients: [f64; 2]) -> Self {
        let [c0, c1] = coefficients;
        if c1 <= SCHMIDT_TOL {
            FirstLayer::Product
        } else if c0 - c1 <= SCHMIDT_TOL {
            FirstLayer::Maximal
        } else {
            FirstLayer::General
        }
    }

    fn free(self) -> usize {
        match self {
            FirstLayer::General => 5,
            FirstLayer::Product => 4,
            FirstLayer::Maximal => 3,
        }
    }

    fn expand(self, x: &[f64]) -> [f64; 6] {
        match self {
            FirstLayer::General => [x[0], x[1], x[2], x[3], x[4], 0.0],
            FirstLayer::Product => [x[0], x[1], 0.0, x[2], x[3], 0.0],
            FirstLayer::Maximal => [x[0], x[1], x[2], 0.0, 0.0, 0.0],
        }
    }
}

/// Search space for one `(u, k, input)` problem.
struct Problem<'a> {
    u: &'a Mat4,
    k: usize,
    /// The input in Schmidt form.
    reduced: TwoQubitState,
    /// Local pair taking the Schmidt form back to the input.
    frame: LocalPair,
    first: FirstLayer,
}

impl<'a> Problem<'a> {
    fn new(u: &'a Mat4, k: usize, input: &TwoQubitState) -> Self {
        let sch = schmidt(input);
        let [c0, c1] = sch.coefficients;
        Self {
            u,
            k,
            reduced: TwoQubitState::schmidt_form(c1.atan2(c0)),
            frame: LocalPair::new(sch.local_a, sch.local_b),
            first: FirstLayer::of(sch.coefficients),
        }
    }

    fn dim(&self) -> usize {
        if self.k == 0 {
            0
        } else {
            self.first.free() + 6 * (self.k - 1)
        }
    }

    /// Full angle list for the searched layers `X_0 .. X_{k-1}`, with `X_0`
    /// still relative to the Schmidt form.
    fn layers(&self, x: &[f64]) -> Vec<f64> {
        if self.k == 0 {
            return Vec::new();
        }
        let f = self.first.free();
        let mut out = self.first.expand(&x[..f]).to_vec();
        out.extend_from_slice(&x[f..]);
        out
    }

    fn output(&self, x: &[f64]) -> TwoQubitState {
        self.layers(x).chunks_exact(6).fold(self.reduced, |s, p| {
            s.apply_local(&zyz(p[0], p[1], p[2]), &zyz(p[3], p[4], p[5]))
                .apply(self.u)
        })
    }

    /// Parameters against the original input, final identity layer included.
    fn params(&self, x: &[f64]) -> LocalParams {
        let mut angles = self.layers(x);
        if self.k > 0 {
            let x0 = layer_from(&angles[..6]).then_after(&self.frame.adjoint());
            let [a0, a1, a2] = zyz_angles(&x0.a);
            let [b0, b1, b2] = zyz_angles(&x0.b);
            angles[..6].copy_from_slice(&[a0, a1, a2, b0, b1, b2]);
        }
        angles.extend_from_slice(&[0.0; 6]);
        LocalParams { angles }
    }
}

#[derive(Clone, Copy)]
enum Goal {
    Maximize,
    Minimize,
}

struct RestartOutcome {
    concurrence: f64,
    x: Vec<f64>,
    converged: bool,
}

fn search(
    u: &Mat4,
    k: usize,
    input: &TwoQubitState,
    budget: &OracleBudget,
    goal: Goal,
) -> Result<OracleResult> {
    budget.validate()?;
    require_unitary(u, UNITARY_TOL)?;
    let problem = Problem::new(u, k, input);

    let objective = |x: &[f64]| {
        let c = concurrence_fast(problem.output(x).amplitudes());
        match goal {
            Goal::Maximize => 1.0 - c,
            Goal::Minimize => c,
        }
    };
    let settings = Settings {
        max_iterations: budget.max_iterations,
        step: 1.0,
        target: 1e-9,
        ..Settings::default()
    };

    let outcomes: Vec<RestartOutcome> = (0..budget.restarts)
        .into_par_iter()
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            rng.set_stream(index as u64);
            let x0: Vec<f64> = (0..problem.dim())
                .map(|_| rng.random_range(-PI..PI))
                .collect();
            let m = nelder_mead::minimize(objective, &x0, &settings);
            RestartOutcome {
                concurrence: concurrence_fast(problem.output(&m.x).amplitudes()),
                x: m.x,
                converged: m.converged,
            }
        })
        .collect();

    // strict comparison keeps the lowest restart index on ties
    let mut best = &outcomes[0];
    for o in &outcomes[1..] {
        let better = match goal {
            Goal::Maximize => o.concurrence > best.concurrence,
            Goal::Minimize => o.concurrence < best.concurrence,
        };
        if better {
            best = o;
        }
    }

    Ok(OracleResult {
        best_concurrence: best.concurrence.clamp(0.0, 1.0),
        best_params: problem.params(&best.x),
        restarts: budget.restarts,
        seed: budget.seed,
        converged: best.converged,
    })
}

/// Largest output concurrence found over interleavings with `k` uses of `u`.
/// A lower bound on the true maximum.
pub fn max_concurrence_k_uses(
    u: &Mat4,
    k: usize,
    input: &TwoQubitState,
    budget: &OracleBudget,
) -> Result<OracleResult> {
    search(u, k, input, budget, Goal::Maximize)
}

/// Smallest output concurrence found over interleavings with `k` uses of `u`.
pub fn min_concurrence_k_uses(
    u: &Mat4,
    k: usize,
    input: &TwoQubitState,
    budget: &OracleBudget,
) -> Result<OracleResult> {
    search(u, k, input, budget, Goal::Minimize)
}

fn require_entangling(u: &Mat4) -> Result<()> {
    let w = omega(u)?.radians();
    if w <= TOL_ZERO {
        return Err(Error::NotEntangling { omega: w });
    }
    Ok(())
}

/// Smallest `k` for which the search reaches concurrence `1 - 1e-6`.
pub fn min_runs_to_one(u: &Mat4, input: &TwoQubitState, budget: &OracleBudget) -> Result<usize> {
    budget.validate()?;
    require_entangling(u)?;
    if concurrence(input).value() >= REACH_ONE {
        return Ok(0);
    }
    for k in 1..=budget.cap {
        if max_concurrence_k_uses(u, k, input, budget)?.best_concurrence >= REACH_ONE {
            return Ok(k);
        }
    }
    Err(Error::BudgetExhausted { cap: budget.cap })
}

/// Smallest `k` for which the search brings a maximally entangled input down
/// to concurrence `1e-6`.
pub fn min_runs_to_disentangle(
    u: &Mat4,
    input: &TwoQubitState,
    budget: &OracleBudget,
) -> Result<usize> {
    budget.validate()?;
    require_entangling(u)?;
    let c = concurrence(input).value();
    if c < 1.0 - MAXIMAL_INPUT_TOL {
        return Err(Error::NotMaximallyEntangled { concurrence: c });
    }
    for k in 1..=budget.cap {
        if min_concurrence_k_uses(u, k, input, budget)?.best_concurrence <= REACH_ZERO {
            return Ok(k);
        }
    }
    Err(Error::BudgetExhausted { cap: budget.cap })
}

/// Applies a full parameter set, final layer included.
pub fn apply_params(u: &Mat4, input: &TwoQubitState, params: &LocalParams) -> TwoQubitState {
    let layers = params.layers();
    let (last, rest) = layers.split_last().expect("at least one layer");
    let s = rest.iter().fold(*input, |s, l| l.apply(&s).apply(u));
    last.apply(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{cnot, cp};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn small() -> OracleBudget {
        OracleBudget {
            restarts: 8,
            max_iterations: 1500,
            ..OracleBudget::with_seed(3)
        }
    }

    #[test]
    fn cnot_one_use() {
        let r = max_concurrence_k_uses(&cnot(), 1, &TwoQubitState::basis(false, false), &small())
            .unwrap();
        assert!(r.best_concurrence >= 1.0 - 1e-6, "{}", r.best_concurrence);
        assert_eq!(r.best_params.layer_count(), 2);
    }

    #[test]
    fn cp_half_pi_one_use_hits_ceiling() {
        let r = max_concurrence_k_uses(
            &cp(FRAC_PI_2),
            1,
            &TwoQubitState::basis(false, false),
            &small(),
        )
        .unwrap();
        assert!(
            (r.best_concurrence - FRAC_PI_4.sin()).abs() < 1e-3,
            "{}",
            r.best_concurrence
        );
    }

    #[test]
    fn zero_uses_is_input_concurrence() {
        let r = max_concurrence_k_uses(&cnot(), 0, &TwoQubitState::basis(false, true), &small())
            .unwrap();
        assert_eq!(r.best_concurrence, 0.0);
        assert_eq!(r.best_params.layer_count(), 1);
    }

    #[test]
    fn reported_params_reproduce_value() {
        let input = TwoQubitState::basis(false, false);
        let u = cp(FRAC_PI_2);
        let r = max_concurrence_k_uses(&u, 2, &input, &small()).unwrap();
        let out = apply_params(&u, &input, &r.best_params);
        assert!((concurrence(&out).value() - r.best_concurrence).abs() < 1e-12);
    }

    #[test]
    fn params_reproduce_value_for_every_input_kind() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let u = crate::random::haar_unitary(&mut rng);
        let product =
            crate::random::local_pair(&mut rng).apply(&TwoQubitState::basis(false, false));
        let maximal = crate::random::local_pair(&mut rng).apply(&TwoQubitState::bell());
        let general = crate::random::state(&mut rng);
        for input in [product, maximal, general] {
            for k in [1, 2] {
                for r in [
                    max_concurrence_k_uses(&u, k, &input, &small()).unwrap(),
                    min_concurrence_k_uses(&u, k, &input, &small()).unwrap(),
                ] {
                    let out = apply_params(&u, &input, &r.best_params);
                    assert!((concurrence(&out).value() - r.best_concurrence).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let input = TwoQubitState::basis(false, false);
        let a = max_concurrence_k_uses(&cp(0.9), 2, &input, &small()).unwrap();
        let b = max_concurrence_k_uses(&cp(0.9), 2, &input, &small()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_budget() {
        let b = OracleBudget {
            restarts: 0,
            ..OracleBudget::default()
        };
        assert!(matches!(
            max_concurrence_k_uses(&cnot(), 1, &TwoQubitState::bell(), &b),
            Err(Error::BadBudget(_))
        ));
        let b = OracleBudget {
            max_iterations: 0,
            ..OracleBudget::default()
        };
        assert!(matches!(
            min_runs_to_one(&cnot(), &TwoQubitState::bell(), &b),
            Err(Error::BadBudget(_))
        ));
    }

    #[test]
    fn run_counts_for_cnot() {
        let zero = TwoQubitState::basis(false, false);
        assert_eq!(min_runs_to_one(&cnot(), &zero, &small()).unwrap(), 1);
        assert_eq!(
            min_runs_to_disentangle(&cnot(), &TwoQubitState::bell(), &small()).unwrap(),
            1
        );
        assert!(matches!(
            min_runs_to_disentangle(&cnot(), &zero, &small()),
            Err(Error::NotMaximallyEntangled { .. })
        ));
        assert!(matches!(
            min_runs_to_one(&Mat4::identity(), &zero, &small()),
            Err(Error::NotEntangling { .. })
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let b = OracleBudget { cap: 2, ..small() };
        assert_eq!(
            min_runs_to_one(&cp(FRAC_PI_4), &TwoQubitState::basis(false, false), &b),
            Err(Error::BudgetExhausted { cap: 2 })
        );
    }
}
