use thiserror::Error;

/// Errors surfaced by the certification pipeline.
///
/// `CannotCertify` is an explicit outcome, not a crash: a bound that is too
/// coarse to decide a sign or a gate inequality reports which check failed
/// and with what margin.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate window: {0}")]
    DegenerateWindow(String),

    #[error("domain violation: {0}")]
    Domain(String),

    #[error("requested accuracy {requested:e} not met (achieved width {achieved:e})")]
    AccuracyNotMet { requested: f64, achieved: f64 },

    #[error("cannot certify: {0}")]
    CannotCertify(String),

    #[error("contraction gate failed on {interval}: {inequality}")]
    GateFailed { interval: String, inequality: String },

    #[error("iteration did not converge: {0}")]
    NonConvergence(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
