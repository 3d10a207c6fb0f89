use thiserror::Error;

/// Errors produced by the analysis, synthesis and oracle routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not unitary (max |m^dagger m - I| = {deviation:.3e}, tolerance {tol:.1e})")]
    NotUnitary { deviation: f64, tol: f64 },

    #[error("state is not normalized (norm^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("non-finite value in input")]
    NonFinite,

    #[error("gate is not entangling (omega = {omega:.3e})")]
    NotEntangling { omega: f64 },

    #[error("input state is already maximally entangled (concurrence = {concurrence})")]
    AlreadyMaximal { concurrence: f64 },

    #[error("outside the regime of the bound: {0}")]
    OutOfRegime(String),

    #[error("interaction core has no spread of eigenphases (omega = {omega:.3e})")]
    DegenerateCore { omega: f64 },

    #[error("matrix is not diagonal in the magic basis (off-diagonal residual {residual:.3e})")]
    NotMagicDiagonal { residual: f64 },

    #[error("target concurrence {target} outside reachable band [{min}, 1]")]
    TargetOutOfRange { target: f64, min: f64 },

    #[error("concurrences differ: {from} vs {to}")]
    ConcurrenceMismatch { from: f64, to: f64 },

    #[error("input is not maximally entangled (concurrence = {concurrence})")]
    NotMaximallyEntangled { concurrence: f64 },

    #[error("invalid oracle budget: {0}")]
    BadBudget(String),

    #[error("no interleaving with at most {cap} uses reached the target")]
    BudgetExhausted { cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
