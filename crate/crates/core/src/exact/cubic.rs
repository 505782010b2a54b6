//! Certified extrema of cubic polynomials on `[-1, 1]`.
//!
//! Candidates are the endpoints and the real critical points; the quadratic
//! derivative is solved by rational bisection with exact sign evaluation,
//! never by floating root-finding, so the enclosures are rigorous.

use num_traits::{Signed, Zero};

use super::interval::RInterval;
use super::rational::{rat, rat_dec, Rational};

/// Enclosures of `(min, max)` of `c0 + c1 y + c2 y^2 + c3 y^3` on
/// `[-1, 1]`. Constants and lower-degree cases degrade gracefully.
pub fn cubic_extrema(c: &[Rational; 4]) -> (RInterval, RInterval) {
    let eval = |y: &Rational| -> Rational {
        ((&c[3] * y + &c[2]) * y + &c[1]) * y + &c[0]
    };
    let eval_iv = |y: &RInterval| -> RInterval {
        RInterval::point(c[3].clone())
            .mul(y)
            .shift(&c[2])
            .mul(y)
            .shift(&c[1])
            .mul(y)
            .shift(&c[0])
    };

    let mut candidates: Vec<RInterval> = vec![
        RInterval::point(eval(&rat(-1, 1))),
        RInterval::point(eval(&rat(1, 1))),
    ];
    for root in critical_points(c) {
        candidates.push(eval_iv(&root));
    }

    let mut min_lo = candidates[0].lo().clone();
    let mut min_hi = candidates[0].hi().clone();
    let mut max_lo = candidates[0].lo().clone();
    let mut max_hi = candidates[0].hi().clone();
    for cand in &candidates[1..] {
        if cand.lo() < &min_lo {
            min_lo = cand.lo().clone();
        }
        if cand.hi() < &min_hi {
            min_hi = cand.hi().clone();
        }
        if cand.lo() > &max_lo {
            max_lo = cand.lo().clone();
        }
        if cand.hi() > &max_hi {
            max_hi = cand.hi().clone();
        }
    }
    (RInterval::new(min_lo, min_hi), RInterval::new(max_lo, max_hi))
}

/// Enclosures of the real roots of `c1 + 2 c2 y + 3 c3 y^2` inside
/// `[-1, 1]`.
fn critical_points(c: &[Rational; 4]) -> Vec<RInterval> {
    let (a, b, k) = (c[3].clone() * rat(3, 1), c[2].clone() * rat(2, 1), c[1].clone());
    let g = |y: &Rational| -> Rational { (&a * y + &b) * y + &k };

    if a.is_zero() {
        // linear derivative
        if b.is_zero() {
            return vec![];
        }
        let root = -&k / &b;
        if root.abs() <= Rational::from_integer(1.into()) {
            return vec![RInterval::point(root)];
        }
        return vec![];
    }

    let disc = &b * &b - rat(4, 1) * &a * &k;
    if disc.is_negative() {
        return vec![];
    }
    if disc.is_zero() {
        let root = -&b / (rat(2, 1) * &a);
        if root.abs() <= Rational::from_integer(1.into()) {
            return vec![RInterval::point(root)];
        }
        return vec![];
    }
    // distinct real roots straddle the vertex
    let vertex = -&b / (rat(2, 1) * &a);
    let one = rat(1, 1);
    let mut out = Vec::new();
    let segments = [
        (rat(-1, 1), vertex.clone().min(one.clone()).max(rat(-1, 1))),
        (vertex.min(one.clone()).max(rat(-1, 1)), one),
    ];
    for (lo, hi) in segments {
        if lo >= hi {
            continue;
        }
        if let Some(root) = bisect_root(&g, lo, hi) {
            out.push(root);
        }
    }
    out
}

/// Rational bisection with exact sign evaluation to width `1e-12`; returns
/// `None` when there is no sign change on the segment (an endpoint root is
/// covered by the endpoint candidates).
fn bisect_root<F: Fn(&Rational) -> Rational>(
    g: &F,
    mut lo: Rational,
    mut hi: Rational,
) -> Option<RInterval> {
    let mut glo = g(&lo);
    let mut ghi = g(&hi);
    if glo.is_zero() {
        return Some(RInterval::point(lo));
    }
    if ghi.is_zero() {
        return Some(RInterval::point(hi));
    }
    if glo.is_positive() == ghi.is_positive() {
        return None;
    }
    let width_target = rat_dec("1e-12");
    while &hi - &lo > width_target {
        let mid = (&lo + &hi) / rat(2, 1);
        let gm = g(&mid);
        if gm.is_zero() {
            return Some(RInterval::point(mid));
        }
        if gm.is_positive() == glo.is_positive() {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
    }
    let _ = (glo, ghi);
    Some(RInterval::new(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;

    fn coeffs(c0: i64, c1: i64, c2: i64, c3: i64) -> [Rational; 4] {
        [rat_int(c0), rat_int(c1), rat_int(c2), rat_int(c3)]
    }

    #[test]
    fn pure_cubic_hits_endpoints() {
        let (min, max) = cubic_extrema(&coeffs(0, 0, 0, 1));
        assert!(min.contains(&rat_int(-1)));
        assert!(max.contains(&rat_int(1)));
        assert!(min.width().is_zero() && max.width().is_zero());
    }

    #[test]
    fn constant_is_flat() {
        let (min, max) = cubic_extrema(&coeffs(5, 0, 0, 0));
        assert_eq!(min, RInterval::point(rat_int(5)));
        assert_eq!(max, RInterval::point(rat_int(5)));
    }

    #[test]
    fn symmetric_parabola_vertex() {
        // 1 - y^2: max 1 at y = 0, min 0 at y = +-1
        let (min, max) = cubic_extrema(&coeffs(1, 0, -1, 0));
        assert!(min.contains(&rat_int(0)));
        assert!(max.contains(&rat_int(1)));
    }

    #[test]
    fn cubic_with_interior_extrema() {
        // y^3 - (3/4) y: critical at y = +-1/2, values -+ 1/4
        let c = [rat_int(0), rat(-3, 4), rat_int(0), rat_int(1)];
        let (min, max) = cubic_extrema(&c);
        assert!(min.contains(&rat(-1, 4)));
        assert!(max.contains(&rat(1, 4)));
        assert!(min.width() < rat_dec("1e-10"));
        assert!(max.width() < rat_dec("1e-10"));
    }

    #[test]
    fn enclosures_contain_sampled_extremes() {
        let c = [rat(1, 3), rat(-2, 7), rat(5, 11), rat(-1, 2)];
        let (min, max) = cubic_extrema(&c);
        let eval = |y: &Rational| ((&c[3] * y + &c[2]) * y + &c[1]) * y + &c[0];
        let n: i64 = 2000;
        let mut smin = eval(&rat_int(-1));
        let mut smax = smin.clone();
        for k in 1..=n {
            let y = rat(-1, 1) + rat(2 * k, n);
            let v = eval(&y);
            if v < smin {
                smin = v.clone();
            }
            if v > smax {
                smax = v;
            }
        }
        assert!(min.lo() <= &smin);
        assert!(max.hi() >= &smax);
    }
}
