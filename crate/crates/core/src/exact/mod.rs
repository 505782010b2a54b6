//! Exact arbitrary-precision arithmetic: rational scalars, rational-endpoint
//! intervals and dense bivariate polynomials.
//!
//! Everything in this module is exact or outward-closed; no floating-point
//! rounding ever enters a certified quantity.

pub mod bipoly;
pub mod cheb;
pub mod cubic;
pub mod interval;
pub mod rational;

pub use bipoly::BiPoly;
pub use interval::RInterval;
pub use rational::Rational;
