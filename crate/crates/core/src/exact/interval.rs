//! Rational-endpoint intervals with outward-closed arithmetic.
//!
//! Endpoints are exact rationals, so the basic operations introduce no
//! rounding at all; `round_out` trades endpoint size for a controlled dyadic
//! widening and is the only place width is ever added.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{ceil_dyadic, f64_hi, f64_lo, floor_dyadic, isqrt, rat_int, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct RInterval {
    lo: Rational,
    hi: Rational,
}

impl RInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "inverted interval endpoints");
        Self { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Self { lo: v.clone(), hi: v }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn one() -> Self {
        Self::point(Rational::one())
    }

    pub fn from_i64(v: i64) -> Self {
        Self::point(rat_int(v))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn contains_interval(&self, other: &RInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Magnitude bound: `sup |x|` over the interval.
    pub fn mag(&self) -> Rational {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    /// Mignitude: `inf |x|` over the interval (zero if it straddles zero).
    pub fn mig(&self) -> Rational {
        if self.lo.is_positive() {
            self.lo.clone()
        } else if self.hi.is_negative() {
            self.hi.abs()
        } else {
            Rational::zero()
        }
    }

    pub fn neg(&self) -> Self {
        Self { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        Self { lo, hi }
    }

    /// Division; `None` when the divisor straddles zero.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.lo.is_positive() || other.hi.is_negative() {
            let inv = Self {
                lo: other.hi.recip(),
                hi: other.lo.recip(),
            };
            Some(self.mul(&inv))
        } else {
            None
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.checked_div(other)
            .expect("interval division by a divisor containing zero")
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_negative() {
            Self { lo: &self.hi * k, hi: &self.lo * k }
        } else {
            Self { lo: &self.lo * k, hi: &self.hi * k }
        }
    }

    pub fn shift(&self, k: &Rational) -> Self {
        Self { lo: &self.lo + k, hi: &self.hi + k }
    }

    /// Integer power with sign-aware tightening for even exponents.
    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one();
        }
        if n % 2 == 1 || self.lo.is_positive() || self.hi.is_negative() {
            let mut acc = self.clone();
            for _ in 1..n {
                acc = acc.mul(self);
            }
            // odd powers and sign-definite bases are monotone, so the
            // repeated product is already tight
            acc
        } else {
            // even power over a zero-straddling interval
            let m = self.mag();
            let mut hi = Rational::one();
            for _ in 0..n {
                hi *= &m;
            }
            Self { lo: Rational::zero(), hi }
        }
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: if self.lo < other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi > other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = if self.lo > other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi < other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(Self { lo, hi })
        } else {
            None
        }
    }

    /// Widen outward onto the dyadic grid `2^-bits`. Keeps endpoint
    /// representations small in long computations.
    pub fn round_out(&self, bits: u32) -> Self {
        Self {
            lo: floor_dyadic(&self.lo, bits),
            hi: ceil_dyadic(&self.hi, bits),
        }
    }

    /// Symmetric widening by `r >= 0` on both sides.
    pub fn widen(&self, r: &Rational) -> Self {
        assert!(!r.is_negative());
        Self { lo: &self.lo - r, hi: &self.hi + r }
    }

    /// Enclosure of `sqrt` over a nonnegative interval, with endpoints
    /// certified by exact integer square roots on the `2^-bits` grid.
    pub fn sqrt(&self, bits: u32) -> Self {
        assert!(
            !self.lo.is_negative(),
            "sqrt of an interval with negative lower endpoint"
        );
        Self {
            lo: sqrt_lo(&self.lo, bits),
            hi: sqrt_hi(&self.hi, bits),
        }
    }

    /// `[f64_lo(lo), f64_hi(hi)]` — the tightest `f64` pair that still
    /// encloses the interval.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (f64_lo(&self.lo), f64_hi(&self.hi))
    }

    /// Midpoint as `f64` (display only; not certified).
    pub fn mid_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.midpoint()).unwrap_or(f64::NAN)
    }

    /// Width as `f64`, rounded up.
    pub fn width_f64(&self) -> f64 {
        f64_hi(&self.width())
    }
}

/// Largest dyadic `v/2^bits` with `v^2 <= r`.
fn sqrt_lo(r: &Rational, bits: u32) -> Rational {
    if r.is_zero() {
        return Rational::zero();
    }
    // floor(sqrt(r * 4^bits)) / 2^bits <= sqrt(r)
    let scaled = r * Rational::from_integer(BigInt::one() << (2 * bits));
    let n = isqrt(&scaled.floor().to_integer());
    Rational::new(n, BigInt::one() << bits)
}

/// Smallest dyadic `v/2^bits` with `v^2 >= r`.
fn sqrt_hi(r: &Rational, bits: u32) -> Rational {
    if r.is_zero() {
        return Rational::zero();
    }
    let scaled = r * Rational::from_integer(BigInt::one() << (2 * bits));
    let fl = scaled.floor().to_integer();
    let n = isqrt(&fl);
    let cand = Rational::new(n.clone(), BigInt::one() << bits);
    if &cand * &cand >= *r {
        cand
    } else {
        Rational::new(n + BigInt::one(), BigInt::one() << bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn arithmetic_outward_closed() {
        let a = RInterval::new(rat(1, 3), rat(1, 2));
        let b = RInterval::new(rat(-2, 1), rat(3, 1));
        let s = a.add(&b);
        assert!(s.contains(&(rat(1, 3) + rat(-2, 1))));
        assert!(s.contains(&(rat(1, 2) + rat(3, 1))));
        let p = a.mul(&b);
        assert!(p.contains(&(rat(1, 2) * rat(-2, 1))));
        assert!(p.contains(&(rat(1, 2) * rat(3, 1))));
    }

    #[test]
    fn division_rejects_zero_straddle() {
        let a = RInterval::one();
        let b = RInterval::new(rat(-1, 1), rat(1, 1));
        assert!(a.checked_div(&b).is_none());
        let c = RInterval::new(rat(1, 4), rat(1, 2));
        let q = a.div(&c);
        assert!(q.contains(&rat(3, 1)));
        assert_eq!(q.lo(), &rat(2, 1));
        assert_eq!(q.hi(), &rat(4, 1));
    }

    #[test]
    fn even_powers_tighten_over_zero() {
        let a = RInterval::new(rat(-1, 2), rat(1, 3));
        let sq = a.pow(2);
        assert_eq!(sq.lo(), &rat(0, 1));
        assert_eq!(sq.hi(), &rat(1, 4));
    }

    #[test]
    fn sqrt_encloses() {
        let a = RInterval::new(rat(2, 1), rat(2, 1));
        let s = a.sqrt(64);
        assert!(s.lo() < s.hi());
        let two = rat(2, 1);
        assert!(s.lo() * s.lo() <= two);
        assert!(s.hi() * s.hi() >= two);
        assert!(s.width() < rat(1, 1_000_000_000));
    }

    #[test]
    fn round_out_contains() {
        let a = RInterval::new(rat(1, 3), rat(2, 3));
        let r = a.round_out(16);
        assert!(r.contains_interval(&a));
        assert!(r.width() - a.width() <= rat(2, 65536));
    }
}
