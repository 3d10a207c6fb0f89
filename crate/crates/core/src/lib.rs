//! Two-qubit gate analysis: canonical (KAK) decomposition, the covering-arc
//! strength `Ω`, the optimal number of uses `ceil(pi / Ω)` needed to build a
//! perfect entangler, explicit witness circuits, and a brute-force optimizer
//! that checks those counts independently.

pub mod arc;
pub mod error;
pub mod gates;
pub mod kak;
pub mod magic;
pub mod nelder_mead;
pub mod numeric;
pub mod oracle;
pub mod random;
pub mod synthesis;

pub use arc::{
    analyze, covering_arc, is_perfect_entangler, n_runs, n_runs_from_state, omega,
    simulation_lower_bound, single_use_max_concurrence, theta, AnalysisReport, ArcLength,
};
pub use error::{Error, Result};
pub use kak::{interaction_core, kak_decompose, reconstruct, CanonicalForm, InteractionCore};
pub use magic::{concurrence, to_magic_basis, Concurrence, MagicBasisTransform};
pub use numeric::{
    check_unitary, eigenphases, schmidt, tensor, ComplexScalar, EigenPhases, LocalPair, Mat2, Mat4,
    TwoQubitState,
};
pub use oracle::{
    max_concurrence_k_uses, min_concurrence_k_uses, min_runs_to_disentangle, min_runs_to_one,
    LocalParams, OracleBudget, OracleResult,
};
pub use synthesis::{
    equal_concurrence_connector, max_entangled_preimage, seed_product_state,
    synthesize_perfect_entangler, trajectory, verify_circuit, verify_circuit_with_tol,
    SynthesizedCircuit, TrajectoryStep, VerifyReport,
};
