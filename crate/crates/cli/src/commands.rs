//! One function per subcommand. Each returns the exact text for standard
//! output, so tests can compare bytes without spawning a process.

use std::f64::consts::PI;

use entangler_core::arc::{analyze as analyze_gate, omega, simulation_lower_bound};
use entangler_core::numeric::{Mat4, TwoQubitState};
use entangler_core::oracle::{max_concurrence_k_uses, OracleBudget};
use entangler_core::synthesis::{synthesize_perfect_entangler, verify_circuit_with_tol};
use serde::Serialize;

use crate::circuit::CircuitFile;
use crate::error::CliError;
use crate::gate::GateSpec;
use crate::json::{floats, render, F64};

#[derive(Debug, Serialize)]
struct Tolerances {
    unitary: F64,
    tol_zero: F64,
    tol_arc: F64,
    snap_tol: F64,
}

#[derive(Debug, Serialize)]
struct AnalyzeReport {
    omega_radians: F64,
    n_runs: Option<u32>,
    /// `"not_entangling"` when `n_runs` is null.
    n_runs_reason: Option<&'static str>,
    is_perfect_entangler: bool,
    alphas: [F64; 3],
    lambdas: [F64; 4],
    tolerances: Tolerances,
}

pub fn analyze(u: &Mat4) -> Result<String, CliError> {
    let r = analyze_gate(u)?;
    Ok(render(&AnalyzeReport {
        omega_radians: F64(r.omega.radians()),
        n_runs: r.n_runs,
        n_runs_reason: r.n_runs.is_none().then_some("not_entangling"),
        is_perfect_entangler: r.is_perfect_entangler,
        alphas: floats(r.canonical.alphas),
        lambdas: floats(r.canonical.lambdas),
        tolerances: Tolerances {
            unitary: F64(r.tolerances_used.unitary),
            tol_zero: F64(r.tolerances_used.zero),
            tol_arc: F64(r.tolerances_used.arc),
            snap_tol: F64(r.tolerances_used.snap),
        },
    }))
}

#[derive(Debug, Serialize)]
struct SynthesizeSummary<'a> {
    out: &'a str,
    uses: u32,
    output_concurrence: F64,
}

/// The circuit file text, plus the one-line summary printed when the file
/// goes to disk.
pub fn synthesize(
    spec: &GateSpec,
    out_name: Option<&str>,
) -> Result<(String, Option<String>), CliError> {
    let u = spec.resolve()?;
    let circuit = synthesize_perfect_entangler(&u)?;
    let file = render(&CircuitFile::from_synthesized(spec.clone(), &circuit));
    let summary = out_name.map(|out| {
        render(&SynthesizeSummary {
            out,
            uses: circuit.uses,
            output_concurrence: F64(circuit.certified_output_concurrence),
        })
    });
    Ok((file, summary))
}

#[derive(Debug, Serialize)]
struct VerifyOutput {
    ok: bool,
    output_concurrence: F64,
    omega_of_total: F64,
    input_concurrence: F64,
    well_formed: bool,
    uses: u32,
    layers: usize,
    tol: F64,
}

/// Report text and whether the circuit passed.
pub fn verify(circuit_text: &str, tol: f64) -> Result<(String, bool), CliError> {
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(CliError::Parse(format!(
            "--tol must be a non-negative number, got {tol}"
        )));
    }
    let file = CircuitFile::parse(circuit_text)?;
    let circuit = file.to_circuit()?;
    let rep = verify_circuit_with_tol(&circuit, tol);
    let text = render(&VerifyOutput {
        ok: rep.ok,
        output_concurrence: F64(rep.output_concurrence),
        omega_of_total: F64(rep.omega_of_total.radians()),
        input_concurrence: F64(rep.input_concurrence),
        well_formed: rep.well_formed,
        uses: circuit.uses,
        layers: circuit.locals.len(),
        tol: F64(tol),
    });
    Ok((text, rep.ok))
}

pub fn bound(u: &GateSpec, v: &GateSpec) -> Result<String, CliError> {
    let k = simulation_lower_bound(&u.resolve()?, &v.resolve()?)?;
    Ok(format!("{k}\n"))
}

#[derive(Debug, Serialize)]
struct OracleOutput {
    k: usize,
    seed: u64,
    restarts: usize,
    max_iterations: usize,
    best_concurrence: F64,
    /// `sin(min(k Ω, pi) / 2)` for a product input.
    ceiling: F64,
    converged: bool,
    /// Z-Y-Z angles, six per layer, `k + 1` layers.
    best_params: Vec<F64>,
}

/// Searches from the product input `|00>`.
pub fn oracle(spec: &GateSpec, k: usize, budget: &OracleBudget) -> Result<String, CliError> {
    let u = spec.resolve()?;
    let w = omega(&u)?.radians();
    let r = max_concurrence_k_uses(&u, k, &TwoQubitState::basis(false, false), budget)?;
    Ok(render(&OracleOutput {
        k,
        seed: r.seed,
        restarts: r.restarts,
        max_iterations: budget.max_iterations,
        best_concurrence: F64(r.best_concurrence),
        ceiling: F64(((k as f64 * w).min(PI) / 2.0).sin()),
        converged: r.converged,
        best_params: r.best_params.angles().iter().copied().map(F64).collect(),
    }))
}
