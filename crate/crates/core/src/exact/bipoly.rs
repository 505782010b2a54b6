//! Dense bivariate polynomials `p(x, a) = sum c[m][n] x^m a^n` with exact
//! rational coefficients.
//!
//! The largest object in the pipeline has degrees (30, 10), so coefficients
//! are stored densely and every operation is exact: add, multiply,
//! differentiate in either variable, antidifferentiate in `x`, affine
//! substitution, and evaluation at rational points or over intervals.

use num_traits::{Signed, Zero};

use super::interval::RInterval;
use super::rational::{rat_int, Rational};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly {
    /// `c[m][n]` multiplies `x^m a^n`; rows trimmed so the last row and
    /// column are nonzero for a nonzero polynomial.
    c: Vec<Vec<Rational>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { c: vec![vec![Rational::zero()]] }
    }

    pub fn constant(v: Rational) -> Self {
        Self { c: vec![vec![v]] }
    }

    /// `x^m a^n` with coefficient `v`.
    pub fn monomial(m: usize, n: usize, v: Rational) -> Self {
        let mut c = vec![vec![Rational::zero(); n + 1]; m + 1];
        c[m][n] = v;
        Self { c }.trimmed()
    }

    pub fn from_rows(c: Vec<Vec<Rational>>) -> Self {
        assert!(!c.is_empty());
        let cols = c.iter().map(Vec::len).max().unwrap().max(1);
        let mut rows: Vec<Vec<Rational>> = c
            .into_iter()
            .map(|mut row| {
                row.resize(cols, Rational::zero());
                row
            })
            .collect();
        if rows.is_empty() {
            rows.push(vec![Rational::zero()]);
        }
        Self { c: rows }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.c.len() > 1 && self.c.last().unwrap().iter().all(Rational::is_zero) {
            self.c.pop();
        }
        let mut cols = self.c.iter().map(Vec::len).max().unwrap();
        while cols > 1 && self.c.iter().all(|r| r.get(cols - 1).map_or(true, Rational::is_zero)) {
            cols -= 1;
        }
        for row in &mut self.c {
            row.resize(cols, Rational::zero());
        }
        self
    }

    pub fn deg_x(&self) -> usize {
        self.c.len() - 1
    }

    pub fn deg_a(&self) -> usize {
        self.c[0].len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|r| r.iter().all(Rational::is_zero))
    }

    pub fn coeff(&self, m: usize, n: usize) -> Rational {
        self.c
            .get(m)
            .and_then(|r| r.get(n))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.c
            .iter()
            .enumerate()
            .flat_map(|(m, row)| row.iter().enumerate().map(move |(n, v)| (m, n, v)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let rows = self.c.len().max(other.c.len());
        let cols = self.c[0].len().max(other.c[0].len());
        let mut c = vec![vec![Rational::zero(); cols]; rows];
        for (m, n, v) in self.coeffs() {
            c[m][n] += v;
        }
        for (m, n, v) in other.coeffs() {
            c[m][n] += v;
        }
        Self { c }.trimmed()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            c: self.c.iter().map(|r| r.iter().map(|v| -v).collect()).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            c: self.c.iter().map(|r| r.iter().map(|v| v * k).collect()).collect(),
        }
        .trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let rows = self.deg_x() + other.deg_x() + 1;
        let cols = self.deg_a() + other.deg_a() + 1;
        let mut c = vec![vec![Rational::zero(); cols]; rows];
        for (m1, n1, v1) in self.coeffs() {
            if v1.is_zero() {
                continue;
            }
            for (m2, n2, v2) in other.coeffs() {
                if v2.is_zero() {
                    continue;
                }
                c[m1 + m2][n1 + n2] += v1 * v2;
            }
        }
        Self { c }.trimmed()
    }

    /// d/dx.
    pub fn dx(&self) -> Self {
        if self.deg_x() == 0 {
            return Self::zero();
        }
        let c = self.c[1..]
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let k = rat_int(i as i64 + 1);
                row.iter().map(|v| v * &k).collect()
            })
            .collect();
        Self { c }.trimmed()
    }

    /// d/da.
    pub fn da(&self) -> Self {
        if self.deg_a() == 0 {
            return Self::zero();
        }
        let c = self
            .c
            .iter()
            .map(|row| {
                row[1..]
                    .iter()
                    .enumerate()
                    .map(|(j, v)| v * rat_int(j as i64 + 1))
                    .collect()
            })
            .collect();
        Self { c }.trimmed()
    }

    /// Antiderivative in `x` with zero constant term.
    pub fn antider_x(&self) -> Self {
        let mut c = vec![vec![Rational::zero(); self.c[0].len()]];
        for (i, row) in self.c.iter().enumerate() {
            let k = rat_int(i as i64 + 1);
            c.push(row.iter().map(|v| v / &k).collect());
        }
        Self { c }.trimmed()
    }

    /// Multiply by `x^k`.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let mut c = vec![vec![Rational::zero(); self.c[0].len()]; k];
        c.extend(self.c.iter().cloned());
        Self { c }.trimmed()
    }

    /// Exact evaluation at a rational point (2D Horner).
    pub fn eval(&self, x: &Rational, a: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for row in self.c.iter().rev() {
            let mut row_val = Rational::zero();
            for v in row.iter().rev() {
                row_val = row_val * a + v;
            }
            acc = acc * x + row_val;
        }
        acc
    }

    /// Outward interval evaluation over a box.
    pub fn eval_interval(&self, x: &RInterval, a: &RInterval) -> RInterval {
        let mut acc = RInterval::zero();
        for row in self.c.iter().rev() {
            let mut row_val = RInterval::zero();
            for v in row.iter().rev() {
                row_val = row_val.mul(a).shift(v);
            }
            acc = acc.mul(x).add(&row_val);
        }
        acc
    }

    /// Exact substitution of a rational `x`; returns the coefficients of the
    /// resulting univariate polynomial in `a`.
    pub fn eval_at_x(&self, x: &Rational) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.c[0].len()];
        for row in self.c.iter().rev() {
            for (j, v) in row.iter().enumerate() {
                acc[j] = &acc[j] * x + v;
            }
        }
        acc
    }

    /// Exact substitution of a rational `a`; returns the coefficients of the
    /// resulting univariate polynomial in `x`.
    pub fn eval_at_a(&self, a: &Rational) -> Vec<Rational> {
        self.c
            .iter()
            .map(|row| {
                let mut v = Rational::zero();
                for coeff in row.iter().rev() {
                    v = v * a + coeff;
                }
                v
            })
            .collect()
    }

    /// Substitute `x -> m + h * u` (exact). The result is a polynomial in
    /// `(u, a)`.
    pub fn subst_affine_x(&self, m: &Rational, h: &Rational) -> Self {
        // Horner in x: acc <- acc * (m + h u) + row_k
        let mut acc = Self::zero();
        for row in self.c.iter().rev() {
            let shifted = acc.scale(m).add(&acc.mul_x_pow(1).scale(h));
            acc = shifted.add(&Self { c: vec![row.clone()] });
        }
        acc.trimmed()
    }

    /// Substitute `a -> m + h * u` (exact). The result is a polynomial in
    /// `(x, u)`.
    pub fn subst_affine_a(&self, m: &Rational, h: &Rational) -> Self {
        let cols = self.c[0].len();
        let mut acc = Self::zero();
        for j in (0..cols).rev() {
            // column j as a polynomial in x
            let col = Self {
                c: self.c.iter().map(|row| vec![row[j].clone()]).collect(),
            };
            let shifted = acc.scale(m).add(&acc.mul_a_pow(1).scale(h));
            acc = shifted.add(&col);
        }
        acc.trimmed()
    }

    fn mul_a_pow(&self, k: usize) -> Self {
        let c = self
            .c
            .iter()
            .map(|row| {
                let mut r = vec![Rational::zero(); k];
                r.extend(row.iter().cloned());
                r
            })
            .collect();
        Self { c }.trimmed()
    }

    /// Re-express the polynomial on the window `xw x aw` in scaled variables
    /// ranging over `[-1, 1]^2`: `x = mid + half * u`, `a = mid + half * v`.
    /// The coefficient identity is exact.
    pub fn rescale_to_unit(
        &self,
        xw: (&Rational, &Rational),
        aw: (&Rational, &Rational),
    ) -> Result<Self, Error> {
        let (xm, xh) = window_mid_half(xw)?;
        let (am, ah) = window_mid_half(aw)?;
        Ok(self.subst_affine_x(&xm, &xh).subst_affine_a(&am, &ah))
    }

    /// Sum of `|c[m][n]|` over all index pairs not excluded. Exact.
    pub fn l1_excluding<F: Fn(usize, usize) -> bool>(&self, excluded: F) -> Rational {
        let mut sum = Rational::zero();
        for (m, n, v) in self.coeffs() {
            if !excluded(m, n) {
                sum += v.abs();
            }
        }
        sum
    }

    pub fn l1(&self) -> Rational {
        self.l1_excluding(|_, _| false)
    }

    /// Exact division by `(x - r)` when the remainder vanishes.
    pub fn try_div_linear_x(&self, r: &Rational) -> Option<Self> {
        let rows = self.c.len();
        if rows < 2 {
            return None;
        }
        let cols = self.c[0].len();
        let mut q = vec![vec![Rational::zero(); cols]; rows - 1];
        for j in 0..cols {
            let mut carry = Rational::zero();
            for m in (1..rows).rev() {
                let qc = &self.c[m][j] + &carry;
                carry = &qc * r;
                q[m - 1][j] = qc;
            }
            if !(&self.c[0][j] + &carry).is_zero() {
                return None;
            }
        }
        Some(Self { c: q }.trimmed())
    }

    /// Exact division by `(x - r)`; panics unless the division is exact,
    /// which callers guarantee by construction (factoring out a known root).
    pub fn div_linear_x(&self, r: &Rational) -> Self {
        // synthetic division on each column of x-coefficients
        let rows = self.c.len();
        assert!(rows >= 2, "dividing a constant by a linear factor");
        let cols = self.c[0].len();
        let mut q = vec![vec![Rational::zero(); cols]; rows - 1];
        for j in 0..cols {
            let mut carry = Rational::zero();
            for m in (1..rows).rev() {
                let qc = &self.c[m][j] + &carry;
                carry = &qc * r;
                q[m - 1][j] = qc;
            }
            let rem = &self.c[0][j] + &carry;
            assert!(rem.is_zero(), "non-exact division by linear factor");
        }
        Self { c: q }.trimmed()
    }

    /// Exact division by `x`; panics if the constant-in-x row is nonzero.
    pub fn div_x(&self) -> Self {
        assert!(
            self.c[0].iter().all(Rational::is_zero),
            "non-exact division by x"
        );
        if self.c.len() == 1 {
            return Self::zero();
        }
        Self { c: self.c[1..].to_vec() }.trimmed()
    }
}

fn window_mid_half(w: (&Rational, &Rational)) -> Result<(Rational, Rational), Error> {
    if w.0 >= w.1 {
        return Err(Error::DegenerateWindow(format!(
            "[{}, {}] has nonpositive width",
            w.0, w.1
        )));
    }
    let two = rat_int(2);
    Ok(((w.0 + w.1) / &two, (w.1 - w.0) / &two))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn x() -> BiPoly {
        BiPoly::monomial(1, 0, rat(1, 1))
    }

    fn a() -> BiPoly {
        BiPoly::monomial(0, 1, rat(1, 1))
    }

    #[test]
    fn rescale_linear_identity() {
        // p(x) = x on [0, 1] becomes 1/2 + (1/2) u
        let p = x();
        let q = p
            .rescale_to_unit((&rat(0, 1), &rat(1, 1)), (&rat(-1, 1), &rat(1, 1)))
            .unwrap();
        assert_eq!(q.coeff(0, 0), rat(1, 2));
        assert_eq!(q.coeff(1, 0), rat(1, 2));
        assert_eq!(q.deg_x(), 1);
    }

    #[test]
    fn rescale_identity_window_is_noop() {
        let p = x().mul(&x());
        let q = p
            .rescale_to_unit((&rat(-1, 1), &rat(1, 1)), (&rat(-1, 1), &rat(1, 1)))
            .unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn degenerate_window_rejected() {
        let p = x();
        let err = p.rescale_to_unit((&rat(1, 2), &rat(1, 2)), (&rat(-1, 1), &rat(1, 1)));
        assert!(matches!(err, Err(Error::DegenerateWindow(_))));
    }

    #[test]
    fn l1_of_mixed_monomial() {
        let p = x().mul(&a());
        assert_eq!(p.l1(), rat(1, 1));
        assert_eq!(BiPoly::zero().l1(), rat(0, 1));
    }

    #[test]
    fn derivative_and_antiderivative_roundtrip() {
        let p = x().mul(&x()).mul(&a()).scale(&rat(3, 1)); // 3 x^2 a
        let d = p.dx(); // 6 x a
        assert_eq!(d.coeff(1, 1), rat(6, 1));
        assert_eq!(d.antider_x(), p);
    }

    #[test]
    fn division_by_linear_factor() {
        // (x - 2)(x a + 3)
        let f = x().sub(&BiPoly::constant(rat(2, 1)));
        let g = x().mul(&a()).add(&BiPoly::constant(rat(3, 1)));
        let p = f.mul(&g);
        assert_eq!(p.div_linear_x(&rat(2, 1)), g);
    }

    #[test]
    fn interval_eval_contains_point_eval() {
        let p = x().mul(&x()).add(&a().scale(&rat(-3, 1)));
        let xi = RInterval::new(rat(-1, 2), rat(1, 3));
        let ai = RInterval::new(rat(0, 1), rat(1, 10));
        let boxed = p.eval_interval(&xi, &ai);
        let v = p.eval(&rat(1, 4), &rat(1, 20));
        assert!(boxed.contains(&v));
    }
}
