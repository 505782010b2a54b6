//! Exact Chebyshev-basis expansion of bivariate polynomials on a window.
//!
//! Monomials on `[-1, 1]` are rewritten in the Chebyshev-T basis by the
//! exact recurrence `x T_j = (T_{j+1} + T_{|j-1|}) / 2`; no sampling is
//! involved, so `sum |r_ij|` is a true upper bound of the supremum.

use num_traits::Zero;

use super::bipoly::BiPoly;
use super::rational::{rat, Rational};
use crate::error::Error;

/// `table[m][j]` = coefficient of `T_j` in the expansion of `u^m` on
/// `[-1, 1]`.
pub fn monomial_cheb_table(max_deg: usize) -> Vec<Vec<Rational>> {
    let mut table: Vec<Vec<Rational>> = Vec::with_capacity(max_deg + 1);
    table.push(vec![rat(1, 1)]);
    for m in 1..=max_deg {
        let prev = &table[m - 1];
        let mut next = vec![Rational::zero(); m + 1];
        for (j, v) in prev.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let half = v * rat(1, 2);
            if j == 0 {
                // u * T_0 = T_1
                next[1] += v;
            } else {
                next[j + 1] += &half;
                next[j - 1] += &half;
            }
        }
        table.push(next);
    }
    table
}

/// Exact Chebyshev coefficient table of `p` on the window: returns `r` with
/// `p = sum r[i][j] T_i(u) T_j(v)` where `u`, `v` are the window-scaled
/// variables.
pub fn cheb_expand(
    p: &BiPoly,
    xw: (&Rational, &Rational),
    aw: (&Rational, &Rational),
) -> Result<Vec<Vec<Rational>>, Error> {
    let unit = p.rescale_to_unit(xw, aw)?;
    let dx = unit.deg_x();
    let da = unit.deg_a();
    let tx = monomial_cheb_table(dx);
    let ta = monomial_cheb_table(da);
    let mut r = vec![vec![Rational::zero(); da + 1]; dx + 1];
    for (m, n, c) in unit.coeffs() {
        if c.is_zero() {
            continue;
        }
        for (i, pm) in tx[m].iter().enumerate() {
            if pm.is_zero() {
                continue;
            }
            let cp = c * pm;
            for (j, qn) in ta[n].iter().enumerate() {
                if qn.is_zero() {
                    continue;
                }
                r[i][j] += &cp * qn;
            }
        }
    }
    Ok(r)
}

/// `sum |r_ij|`: a certified upper bound of `sup |p|` on the window.
pub fn cheb_l1(r: &[Vec<Rational>]) -> Rational {
    use num_traits::Signed;
    let mut s = Rational::zero();
    for row in r {
        for v in row {
            s += v.abs();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;

    #[test]
    fn monomial_table_standard_identities() {
        let t = monomial_cheb_table(3);
        // u^2 = T_0/2 + T_2/2
        assert_eq!(t[2], vec![rat(1, 2), rat(0, 1), rat(1, 2)]);
        // u^3 = (3/4) T_1 + (1/4) T_3
        assert_eq!(t[3], vec![rat(0, 1), rat(3, 4), rat(0, 1), rat(1, 4)]);
    }

    #[test]
    fn constant_expands_to_t00() {
        let p = BiPoly::constant(rat(7, 3));
        let r = cheb_expand(&p, (&rat(-1, 1), &rat(1, 1)), (&rat(-1, 1), &rat(1, 1))).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0], vec![rat(7, 3)]);
    }

    #[test]
    fn roundtrip_evaluation_matches() {
        // p = x^2 a on x in [0, 2], a in [-1/2, 1/2]
        let p = BiPoly::monomial(2, 1, rat(1, 1));
        let xw = (rat_int(0), rat_int(2));
        let aw = (rat(-1, 2), rat(1, 2));
        let r = cheb_expand(&p, (&xw.0, &xw.1), (&aw.0, &aw.1)).unwrap();
        // evaluate both forms at x = 1/3, a = 1/5 (scaled u = -2/3, v = 2/5)
        let (x, a) = (rat(1, 3), rat(1, 5));
        let (u, v) = (rat(-2, 3), rat(2, 5));
        let mut total = Rational::zero();
        for (i, row) in r.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                total += c * cheb_t(i, &u) * cheb_t(j, &v);
            }
        }
        assert_eq!(total, p.eval(&x, &a));
    }

    fn cheb_t(k: usize, u: &Rational) -> Rational {
        let mut t0 = rat_int(1);
        let mut t1 = u.clone();
        if k == 0 {
            return t0;
        }
        for _ in 1..k {
            let t2 = rat_int(2) * u * &t1 - &t0;
            t0 = t1;
            t1 = t2;
        }
        t1
    }
}
