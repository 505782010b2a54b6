//! Certified quasi-solution of the generalized Blasius similarity equation
//! `F''' + F F'' = 0`, `F(0) = alpha`, `F'(0) = 0`, `F''(0) = 1` for
//! `alpha` in `[-3/50, 3/50]`.
//!
//! The crate reconstructs an explicit piecewise quasi-solution (an inner
//! bivariate polynomial joined at `x = 5/2` to an exponentially decaying
//! far field), re-derives every certification step with exact rational or
//! outward-rounded interval arithmetic, and evaluates the solution anywhere
//! with certified error envelopes:
//!
//! * [`exact`] — big-rational scalars, rational-endpoint intervals and
//!   dense bivariate polynomials; all operations exact.
//! * [`special`] — certified enclosures of erfc, the far-field kernels
//!   `I0`/`J0`, the decaying profile `q0`, and the far-field residual,
//!   built on an exact symbolic series in powers of `c e^{-t}`.
//! * [`quasi`] — the inner polynomial, its residual, the nominal far-field
//!   parameters and end-user evaluation with error envelopes.
//! * [`bounds`] — rigorous range bounding of bivariate polynomials on
//!   subregion grids by local Taylor rescaling and by Chebyshev projection,
//!   sign-change certification and parameter monotonicity checks.
//! * [`energy`] — energy-method suprema, the finite-interval contraction
//!   gate and the error-propagation chain over `[0, 5/2]`.
//! * [`farfield`] — weighted-norm bound of the far-field driving term and
//!   translation of the far-field error into x-space constants.
//! * [`matching`] — the contraction solve for the far-field parameters
//!   `(a, b, c)` at the interface `x = 5/2`.
//! * [`oracle`] — independent high-precision (non-rigorous) Taylor-series
//!   integration used to sanity-check every certified envelope.
//! * [`verify`] — machine-checkable records comparing every computed bound
//!   against its published reference value.

pub mod bounds;
pub mod config;
pub mod energy;
pub mod error;
pub mod exact;
pub mod farfield;
pub mod matching;
pub mod oracle;
pub mod quasi;
pub mod refvals;
pub mod report;
pub mod special;
pub mod verify;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
