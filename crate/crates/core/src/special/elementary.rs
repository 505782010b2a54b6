//! Certified enclosures of `pi`, `e^x` and related elementary quantities.
//!
//! Everything is built from exact rational partial sums with explicit
//! remainder bounds; alternating series are bracketed by consecutive
//! partial sums, and the exponential Taylor tail is bounded geometrically.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::interval::RInterval;
use crate::exact::rational::{rat, rat_int, Rational};

/// Enclosure of `pi` to well below the working precision
/// (Machin: `pi = 16 atan(1/5) - 4 atan(1/239)`).
pub fn pi() -> &'static RInterval {
    static PI: OnceLock<RInterval> = OnceLock::new();
    PI.get_or_init(|| {
        let a5 = atan_inv(5, 120);
        let a239 = atan_inv(239, 60);
        a5.scale(&rat_int(16)).sub(&a239.scale(&rat_int(4)))
    })
}

/// Enclosure of `atan(1/n)` from the alternating Leibniz series; consecutive
/// partial sums bracket the limit.
fn atan_inv(n: i64, terms: usize) -> RInterval {
    let n2 = rat_int(n * n);
    let mut term = rat(1, n);
    let mut sum = Rational::zero();
    let mut prev = Rational::zero();
    for k in 0..terms {
        prev = sum.clone();
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        term = term / &n2 * rat_int(2 * k as i64 + 1) / rat_int(2 * k as i64 + 3);
    }
    if sum <= prev {
        RInterval::new(sum, prev)
    } else {
        RInterval::new(prev, sum)
    }
}

/// Enclosure of `sqrt(pi)`.
pub fn sqrt_pi(bits: u32) -> RInterval {
    pi().sqrt(bits)
}

fn exp1(bits: u32) -> RInterval {
    static E: OnceLock<RInterval> = OnceLock::new();
    E.get_or_init(|| exp_taylor(&Rational::one(), 384))
        .round_out(bits)
}

/// Taylor enclosure of `e^f` for `|f| <= 1`; the tail after `N` terms is
/// bounded by twice the first omitted term.
fn exp_taylor(f: &Rational, bits: u32) -> RInterval {
    debug_assert!(f.abs() <= Rational::one());
    let mut term = Rational::one();
    let mut sum = Rational::one();
    let mut k = BigInt::one();
    // |f|^k / k! < 2^-(bits+4) stops the loop; |f| <= 1 so ~ (bits/log2 k!) terms
    let cut = Rational::new(BigInt::one(), BigInt::one() << (bits + 4));
    loop {
        term = term * f / Rational::from_integer(k.clone());
        sum += &term;
        k += BigInt::one();
        if term.abs() < cut {
            break;
        }
    }
    let tail = term.abs() * rat_int(2);
    RInterval::new(&sum - &tail, &sum + &tail).round_out(bits + 2)
}

/// Certified enclosure of `e^x` for rational `x` of any size.
pub fn exp_rational(x: &Rational, bits: u32) -> RInterval {
    if x.is_zero() {
        return RInterval::one();
    }
    // x = n + f with n integer, |f| <= 1/2
    let n = (x + rat(1, 2)).floor().to_integer();
    let f = x - Rational::from_integer(n.clone());
    let base = exp_taylor(&f, bits + 16);
    let int_part = exp_int(&n, bits + 16);
    base.mul(&int_part).round_out(bits)
}

/// `e^n` for integer `n` by binary exponentiation of the `e` enclosure.
fn exp_int(n: &BigInt, bits: u32) -> RInterval {
    if n.is_zero() {
        return RInterval::one();
    }
    let neg = n.is_negative();
    let mut k = n.abs().to_biguint().unwrap();
    let mut base = exp1(bits + 32);
    let mut acc = RInterval::one();
    while !k.is_zero() {
        if &k % 2u32 == 1u32.into() {
            acc = acc.mul(&base).round_out(bits + 32);
        }
        k >>= 1;
        if !k.is_zero() {
            base = base.mul(&base).round_out(bits + 32);
        }
    }
    if neg {
        RInterval::one().div(&acc).round_out(bits)
    } else {
        acc.round_out(bits)
    }
}

/// Monotone interval extension of `e^x`.
pub fn exp_interval(x: &RInterval, bits: u32) -> RInterval {
    let lo = exp_rational(x.lo(), bits);
    let hi = exp_rational(x.hi(), bits);
    RInterval::new(lo.lo().clone(), hi.hi().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_dec;

    #[test]
    fn pi_matches_reference_digits() {
        let p = pi();
        let lo = rat_dec("3.14159265358979323846264338327950288419716939937510");
        let hi = rat_dec("3.14159265358979323846264338327950288419716939937511");
        assert!(p.lo() < &hi && p.hi() > &lo, "enclosure must straddle the reference bracket");
        assert!(p.width() < rat_dec("1e-45"));
    }

    #[test]
    fn exp_known_values() {
        let e1 = exp_rational(&rat_int(1), 128);
        assert!(e1.contains(&rat_dec("2.71828182845904523536028747135266249775724709369996")));
        assert!(e1.width() < rat_dec("1e-30"));

        let em40 = exp_rational(&rat_int(-40), 160);
        assert!(em40.contains(&rat_dec("4.24835425529158899532923478285865801787956555416645e-18")));
        let rel = em40.width() / em40.lo();
        assert!(rel < rat_dec("1e-30"));
    }

    #[test]
    fn exp_interval_monotone_enclosure() {
        let x = RInterval::new(rat(-1, 2), rat(1, 3));
        let e = exp_interval(&x, 96);
        let mid = exp_rational(&rat(-1, 12), 96);
        assert!(e.contains_interval(&mid));
    }

    #[test]
    fn exp_multiplicativity_within_enclosure() {
        let a = exp_rational(&rat(7, 3), 128);
        let b = exp_rational(&rat(-4, 3), 128);
        let prod = a.mul(&b);
        let direct = exp_rational(&rat_int(1), 128);
        assert!(prod.intersect(&direct).is_some());
    }
}
