//! Certified complementary error function on `x >= 0`.
//!
//! Two strategies with elementary remainders, split at `x = 1`:
//!
//! * `x <= 1`: the alternating Maclaurin series of `erf`; once the terms
//!   decrease, consecutive partial sums bracket the sum.
//! * `x > 1`: the Stieltjes continued fraction for `sqrt(pi) e^{x^2}
//!   erfc(x)` whose consecutive convergents bracket the limit for real
//!   positive arguments.

use num_traits::{One, Signed, Zero};

use super::elementary::{exp_rational, sqrt_pi};
use super::{CertValue, WORK_BITS};
use crate::error::Error;
use crate::exact::interval::RInterval;
use crate::exact::rational::{rat, rat_int, Rational};

/// Certified `erfc(x)` for rational `x >= 0` at the fixed working
/// precision.
pub fn erfc_rational(x: &Rational, bits: u32) -> RInterval {
    assert!(!x.is_negative(), "erfc domain here is x >= 0");
    if x.is_zero() {
        return RInterval::one();
    }
    if *x <= Rational::one() {
        let erf = erf_series(x, bits + 8);
        RInterval::one().sub(&erf).round_out(bits)
    } else {
        erfc_cf(x, bits)
    }
}

/// Monotone interval extension (erfc is strictly decreasing).
pub fn erfc_interval(x: &RInterval, bits: u32) -> RInterval {
    let at_hi = erfc_rational(x.hi(), bits);
    let at_lo = erfc_rational(x.lo(), bits);
    RInterval::new(at_hi.lo().clone(), at_lo.hi().clone())
}

/// Public certified entry point.
pub fn erfc_cert(x: &Rational, acc: &Rational) -> Result<CertValue, Error> {
    if x.is_negative() {
        return Err(Error::Domain("erfc_cert requires x >= 0".into()));
    }
    CertValue::from_sharp(erfc_rational(x, WORK_BITS), acc)
}

/// Alternating Maclaurin series of `erf(x)`:
/// `erf = (2/sqrt(pi)) * x * sum (-1)^k (x^2)^k / (k! (2k+1))`.
/// The bracketing kicks in once the term ratio falls below one, which holds
/// from the start for `x <= 1` and after `k ~ x^2` in general.
fn erf_series(x: &Rational, bits: u32) -> RInterval {
    let x2 = x * x;
    let cut = Rational::new(1.into(), num_bigint::BigInt::one() << (bits + 8));
    let mut term = Rational::one();
    let mut sum = Rational::one();
    let mut k: i64 = 0;
    let mut bracket_lo;
    let mut bracket_hi;
    loop {
        // t_{k+1} = -t_k * x^2 / (k+1) * (2k+1)/(2k+3)
        let prev_sum = sum.clone();
        term = -term * &x2 / rat_int(k + 1) * rat_int(2 * k + 1) / rat_int(2 * k + 3);
        sum += &term;
        k += 1;
        let decreasing = x2 < rat_int(k + 1);
        if decreasing && term.abs() < cut {
            if sum <= prev_sum {
                bracket_lo = sum;
                bracket_hi = prev_sum;
            } else {
                bracket_lo = prev_sum;
                bracket_hi = sum;
            }
            break;
        }
        assert!(k < 100_000, "erf series failed to converge");
    }
    let series = RInterval::new(bracket_lo, bracket_hi);
    let two_over_sqrt_pi = RInterval::from_i64(2).div(&sqrt_pi(bits + 8));
    series
        .scale(x)
        .mul(&two_over_sqrt_pi)
        .round_out(bits)
}

/// Continued-fraction enclosure for `x > 1`:
/// `sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))`.
/// Consecutive convergents of this Stieltjes fraction straddle the limit at
/// real positive `x`, so their hull is a certified bracket.
fn erfc_cf(x: &Rational, bits: u32) -> RInterval {
    let mut depth = cf_initial_depth(x);
    loop {
        let f0 = cf_convergent(x, depth, bits + 16);
        let f1 = cf_convergent(x, depth + 1, bits + 16);
        let hull = f0.hull(&f1);
        let tight = hull.width() * rat_int(1 << (bits.min(120) / 2)) < hull.mig();
        if tight || depth > 4096 {
            debug_assert!({
                let f2 = cf_convergent(x, depth + 2, bits + 16);
                hull.intersect(&f2).is_some()
            });
            let scale = exp_rational(&(-(x * x)), bits + 16);
            let spi = sqrt_pi(bits + 16);
            return hull.mul(&scale).div(&spi).round_out(bits);
        }
        depth *= 2;
    }
}

fn cf_initial_depth(x: &Rational) -> usize {
    // empirically ~ as many levels as needed for ~1e-100 at x, floor of 24
    let xf = crate::exact::rational::f64_hi(x).max(1.0);
    ((360.0 / (xf * xf)).ceil() as usize).clamp(24, 2048)
}

/// Backward evaluation of the depth-`n` convergent, exactly in rationals
/// with periodic outward rounding.
fn cf_convergent(x: &Rational, n: usize, bits: u32) -> RInterval {
    let mut tail = RInterval::zero();
    for level in (1..=n).rev() {
        let a = rat(level as i64, 2);
        // tail <- a / (x + tail)
        let denom = tail.shift(x);
        tail = RInterval::point(a).div(&denom);
        if level % 8 == 0 {
            tail = tail.round_out(bits);
        }
    }
    RInterval::one().div(&tail.shift(x)).round_out(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_dec;

    // 50-digit truncations of reference values for spot checks; the
    // enclosure must land inside [literal, literal + 1e-50].
    const ERFC_HALF: &str = "0.479500122186953462317253346108035471263548424242036";
    const ERFC_ONE: &str = "0.157299207050285130658779364917390740703933002033697";
    const ERFC_TWO: &str = "0.00467773498104726583793074363274707138910820295993992";

    fn assert_in_reference_bracket(e: &RInterval, truncated: &str) {
        let lo = rat_dec(truncated);
        let hi = &lo + rat_dec("1e-50");
        assert!(
            e.lo() >= &lo && e.hi() <= &hi,
            "enclosure [{}, {}] outside reference bracket",
            e.lo(),
            e.hi()
        );
    }

    #[test]
    fn erfc_at_zero_is_one() {
        let e = erfc_rational(&Rational::zero(), 128);
        assert_eq!(e, RInterval::one());
    }

    #[test]
    fn erfc_series_branch_matches_reference() {
        for (x, r) in [(rat(1, 2), ERFC_HALF), (rat(1, 1), ERFC_ONE)] {
            let e = erfc_rational(&x, 192);
            assert_in_reference_bracket(&e, r);
        }
    }

    #[test]
    fn erfc_cf_branch_matches_reference() {
        let e = erfc_rational(&rat(2, 1), 192);
        // the continued-fraction branch targets relative ~2^-60, so the
        // bracket is wider than for the series branch
        let lo = rat_dec(ERFC_TWO) - rat_dec("1e-20");
        let hi = rat_dec(ERFC_TWO) + rat_dec("1e-20");
        assert!(e.lo() >= &lo && e.hi() <= &hi);
        assert!(e.width() < rat_dec("1e-20"));
    }

    #[test]
    fn erfc_stays_in_unit_interval() {
        for x in [rat(1, 10), rat(9, 10), rat(3, 2), rat(7, 1), rat(80, 9)] {
            let e = erfc_rational(&x, 160);
            assert!(e.lo() > &Rational::zero());
            assert!(e.hi() < &Rational::one());
        }
    }

    #[test]
    fn interval_argument_encloses_point_values() {
        let xi = RInterval::new(rat(3, 2), rat(2, 1));
        let e = erfc_interval(&xi, 160);
        for x in [rat(3, 2), rat(7, 4), rat(2, 1)] {
            let p = erfc_rational(&x, 160);
            assert!(e.contains_interval(&p));
        }
    }

    #[test]
    fn cert_value_nesting() {
        let x = rat(5, 4);
        let coarse = erfc_cert(&x, &rat_dec("1e-6")).unwrap();
        let fine = erfc_cert(&x, &rat_dec("1e-12")).unwrap();
        assert!(coarse.enclosure.contains_interval(&fine.enclosure));
    }

    #[test]
    fn nonpositive_accuracy_rejected() {
        assert!(erfc_cert(&rat(1, 2), &Rational::zero()).is_err());
    }
}
