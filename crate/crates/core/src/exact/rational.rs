//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; `+`, `-`, `*`, `/` are exact. The helpers here add
//! the conversions the rest of the crate needs: decimal-literal parsing,
//! dyadic outward rounding and directed conversion to `f64`.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse a decimal literal (`"-0.0625"`, `"1.4"`, `"3"`, `"2.9344e-6"`)
/// into an exact rational. Panics on malformed input; literals in this
/// crate are compiled-in data.
pub fn rat_dec(s: &str) -> Rational {
    let s = s.trim();
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().expect("exponent");
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (mant, neg) = match mant.strip_prefix('-') {
        Some(rest) => (rest, true),
        None => (mant, false),
    };
    let (int_part, frac_part) = match mant.find('.') {
        Some(pos) => (&mant[..pos], &mant[pos + 1..]),
        None => (mant, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    let n: BigInt = digits.parse().expect("decimal digits");
    let scale = frac_part.len() as i64 - exp;
    let mut r = if scale >= 0 {
        Rational::new(n, BigInt::from(10).pow(scale as u32))
    } else {
        Rational::from_integer(n * BigInt::from(10).pow((-scale) as u32))
    };
    if neg {
        r = -r;
    }
    r
}

/// Largest multiple of `2^-bits` that is `<= r`.
pub fn floor_dyadic(r: &Rational, bits: u32) -> Rational {
    let scaled = r * Rational::from_integer(BigInt::one() << bits);
    Rational::new(scaled.floor().to_integer(), BigInt::one() << bits)
}

/// Smallest multiple of `2^-bits` that is `>= r`.
pub fn ceil_dyadic(r: &Rational, bits: u32) -> Rational {
    let scaled = r * Rational::from_integer(BigInt::one() << bits);
    Rational::new(scaled.ceil().to_integer(), BigInt::one() << bits)
}

fn to_f64_near(r: &Rational) -> f64 {
    // num-rational's conversion is accurate to within an ulp or two; the
    // directed versions below correct against exact comparison.
    r.to_f64().unwrap_or(if r.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

fn f64_exact(x: f64) -> Option<Rational> {
    if x.is_finite() {
        Rational::from_float(x)
    } else {
        None
    }
}

/// Largest `f64` that is `<= r`.
pub fn f64_lo(r: &Rational) -> f64 {
    let mut x = to_f64_near(r);
    if !x.is_finite() {
        return if x > 0.0 { f64::MAX } else { f64::NEG_INFINITY };
    }
    for _ in 0..4 {
        match f64_exact(x) {
            Some(rx) if rx > *r => x = next_down(x),
            _ => break,
        }
    }
    debug_assert!(f64_exact(x).map(|rx| rx <= *r).unwrap_or(true));
    x
}

/// Smallest `f64` that is `>= r`.
pub fn f64_hi(r: &Rational) -> f64 {
    let mut x = to_f64_near(r);
    if !x.is_finite() {
        return if x > 0.0 { f64::INFINITY } else { f64::MIN };
    }
    for _ in 0..4 {
        match f64_exact(x) {
            Some(rx) if rx < *r => x = next_up(x),
            _ => break,
        }
    }
    debug_assert!(f64_exact(x).map(|rx| rx >= *r).unwrap_or(true));
    x
}

fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let bits = x.to_bits();
    f64::from_bits(if x > 0.0 { bits + 1 } else { bits - 1 })
}

fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

/// Exact integer square-root bracket: returns `n` with `n^2 <= v < (n+1)^2`.
/// `v` must be nonnegative.
pub fn isqrt(v: &BigInt) -> BigInt {
    assert!(v.sign() != Sign::Minus, "isqrt of negative value");
    num_integer::Roots::sqrt(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(rat_dec("0.0625"), rat(1, 16));
        assert_eq!(rat_dec("-0.06"), rat(-3, 50));
        assert_eq!(rat_dec("2.5"), rat(5, 2));
        assert_eq!(rat_dec("2.9344e-6"), rat(29344, 10_000_000_000));
        assert_eq!(rat_dec("5e-4"), rat(5, 10_000));
        assert_eq!(rat_dec("3"), rat_int(3));
    }

    #[test]
    fn dyadic_rounding_brackets() {
        let r = rat(1, 3);
        let lo = floor_dyadic(&r, 8);
        let hi = ceil_dyadic(&r, 8);
        assert!(lo <= r && r <= hi);
        assert_eq!(&hi - &lo, rat(1, 256));
        // exact dyadic stays fixed
        let d = rat(3, 8);
        assert_eq!(floor_dyadic(&d, 8), d);
        assert_eq!(ceil_dyadic(&d, 8), d);
    }

    #[test]
    fn directed_f64_brackets() {
        let r = rat(1, 3);
        let lo = f64_lo(&r);
        let hi = f64_hi(&r);
        assert!(Rational::from_float(lo).unwrap() <= r);
        assert!(Rational::from_float(hi).unwrap() >= r);
        assert!(hi - lo <= f64::EPSILON);
    }

    #[test]
    fn isqrt_brackets() {
        let v = BigInt::from(99u32);
        let n = isqrt(&v);
        assert_eq!(n, BigInt::from(9));
    }
}
