//! Certified evaluation of the far-field special functions.
//!
//! All enclosures are rational-endpoint intervals produced from series or
//! continued fractions with explicit truncation bounds; the symbolic
//! `cseries` layer tracks the far-field profile and its derivatives exactly
//! as polynomials in the kernels `I0`, `J0` and `sqrt(t)`, weighted by
//! powers of `c e^{-t}`.

pub mod cseries;
pub mod elementary;
pub mod erfc;
pub mod kernels;

use crate::error::Error;
use crate::exact::interval::RInterval;
use crate::exact::rational::{f64_hi, Rational};
use num_traits::Signed;

/// Internal working precision (bits of the dyadic grid) for every kernel
/// enclosure. Fixed rather than accuracy-driven so that enclosures at
/// coarser requested accuracies are outward roundings of one sharp result
/// and therefore nest.
pub(crate) const WORK_BITS: u32 = 320;

/// A certified value: an enclosure of the true quantity together with the
/// accuracy that was requested of it.
#[derive(Debug, Clone)]
pub struct CertValue {
    pub enclosure: RInterval,
    pub requested_accuracy: Rational,
}

impl CertValue {
    /// Wrap a sharp enclosure, outward-rounded onto the dyadic grid implied
    /// by `acc`. Fails if even the sharp enclosure is wider than `2 * acc`.
    pub fn from_sharp(sharp: RInterval, acc: &Rational) -> Result<Self, Error> {
        if !acc.is_positive() {
            return Err(Error::Domain("requested accuracy must be positive".into()));
        }
        let bits = accuracy_bits(acc);
        let rounded = sharp.round_out(bits);
        let width = rounded.width();
        if width > acc * Rational::from_integer(2.into()) {
            return Err(Error::AccuracyNotMet {
                requested: f64_hi(acc),
                achieved: f64_hi(&width),
            });
        }
        Ok(Self { enclosure: rounded, requested_accuracy: acc.clone() })
    }

    pub fn mid_f64(&self) -> f64 {
        self.enclosure.mid_f64()
    }
}

/// Grid fine enough that rounding adds at most `acc/2` per side.
fn accuracy_bits(acc: &Rational) -> u32 {
    let mut bits = 2u32;
    let mut grid = Rational::new(1.into(), 4.into());
    let half = acc / Rational::from_integer(2.into());
    while grid > half && bits < WORK_BITS {
        bits += 1;
        grid /= Rational::from_integer(2.into());
    }
    bits
}
