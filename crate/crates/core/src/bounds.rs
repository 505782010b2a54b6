//! Rigorous range bounding of bivariate polynomials on subregion grids.
//!
//! Two methods, matching the published pipeline exactly:
//!
//! * local Taylor rescaling per grid cell — the rescaled polynomial is split
//!   into its two single-variable cubic parts (bounded by exact calculus)
//!   plus an `l1`-bounded remainder;
//! * Chebyshev projection per window — `sum |r_ij|` bounds the sup.
//!
//! On top of those: sign-change certification for the auxiliary weights,
//! parameter-monotonicity certification, and the extremization of the
//! interface image `t(5/2)` over the trust region.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::Error;
use crate::exact::bipoly::BiPoly;
use crate::exact::cheb::{cheb_expand, cheb_l1};
use crate::exact::cubic::cubic_extrema;
use crate::exact::interval::RInterval;
use crate::exact::rational::{rat, rat_dec, rat_int, Rational};
use crate::quasi::{coeffs, inner};

/// Subdivision grid: strictly increasing knots spanning `[0, 5/2]` and the
/// parameter interval.
#[derive(Debug, Clone)]
pub struct SubregionGrid {
    pub x_knots: Vec<Rational>,
    pub alpha_knots: Vec<Rational>,
}

impl SubregionGrid {
    /// The published 16 x-knots and 6 parameter knots.
    pub fn published() -> Self {
        let x = [
            "0", "0.0625", "0.125", "0.25", "0.375", "0.5", "0.75", "1.0", "1.25", "1.4", "1.5",
            "1.75", "2", "2.25", "2.4", "2.5",
        ];
        let a = ["-0.06", "-0.05", "-0.02", "0.02", "0.05", "0.06"];
        SubregionGrid {
            x_knots: x.iter().map(|s| rat_dec(s)).collect(),
            alpha_knots: a.iter().map(|s| rat_dec(s)).collect(),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let increasing = |v: &[Rational]| v.windows(2).all(|w| w[0] < w[1]);
        if self.x_knots.len() < 2 || self.alpha_knots.len() < 2 {
            return Err(Error::InvalidConfig("grid needs at least two knots per axis".into()));
        }
        if !increasing(&self.x_knots) || !increasing(&self.alpha_knots) {
            return Err(Error::InvalidConfig("grid knots must be strictly increasing".into()));
        }
        Ok(())
    }

    /// Split `[lo, hi]` at the interior x-knots.
    fn x_cells(&self, lo: &Rational, hi: &Rational) -> Vec<(Rational, Rational)> {
        let mut edges = vec![lo.clone()];
        for k in &self.x_knots {
            if k > lo && k < hi {
                edges.push(k.clone());
            }
        }
        edges.push(hi.clone());
        edges.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
    }

    fn alpha_cells(&self) -> Vec<(Rational, Rational)> {
        self.alpha_knots
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect()
    }

    pub fn alpha_span(&self) -> (Rational, Rational) {
        (
            self.alpha_knots.first().unwrap().clone(),
            self.alpha_knots.last().unwrap().clone(),
        )
    }
}

/// Which bounding method produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Taylor,
    Chebyshev,
}

/// Certified two-sided range of a polynomial on a region.
#[derive(Debug, Clone)]
pub struct RangeReport {
    pub region: String,
    pub method: Method,
    pub lower: Rational,
    pub upper: Rational,
}

impl RangeReport {
    pub fn sup_abs(&self) -> Rational {
        let l = self.lower.abs();
        let u = self.upper.abs();
        if l > u {
            l
        } else {
            u
        }
    }
}

/// Cell bound by the cubic + `l1` decomposition of the rescaled polynomial.
fn taylor_cell(
    f: &BiPoly,
    xw: (&Rational, &Rational),
    aw: (&Rational, &Rational),
) -> Result<(Rational, Rational), Error> {
    let unit = f.rescale_to_unit(xw, aw)?;
    let cubic_x: [Rational; 4] = [
        unit.coeff(0, 0),
        unit.coeff(1, 0),
        unit.coeff(2, 0),
        unit.coeff(3, 0),
    ];
    let cubic_a: [Rational; 4] = [
        Rational::zero(),
        unit.coeff(0, 1),
        unit.coeff(0, 2),
        unit.coeff(0, 3),
    ];
    let excluded = |m: usize, n: usize| (n == 0 && m <= 3) || (m == 0 && (1..=3).contains(&n));
    let rest = unit.l1_excluding(excluded);
    let (min_x, max_x) = cubic_extrema(&cubic_x);
    let (min_a, max_a) = cubic_extrema(&cubic_a);
    let lower = min_x.lo() + min_a.lo() - &rest;
    let upper = max_x.hi() + max_a.hi() + &rest;
    Ok((lower, upper))
}

/// Certified range of `f` on `[x_lo, x_hi] x J` by the per-cell Taylor
/// method; cells are combined by exact min/max.
pub fn taylor_bound(
    f: &BiPoly,
    x_lo: &Rational,
    x_hi: &Rational,
    grid: &SubregionGrid,
) -> Result<RangeReport, Error> {
    if x_lo >= x_hi {
        return Err(Error::DegenerateWindow(format!("[{x_lo}, {x_hi}]")));
    }
    let cells: Vec<((Rational, Rational), (Rational, Rational))> = grid
        .x_cells(x_lo, x_hi)
        .into_iter()
        .flat_map(|xc| {
            grid.alpha_cells()
                .into_iter()
                .map(move |ac| (xc.clone(), ac))
        })
        .collect();
    let bounds: Result<Vec<(Rational, Rational)>, Error> = cells
        .par_iter()
        .map(|(xc, ac)| taylor_cell(f, (&xc.0, &xc.1), (&ac.0, &ac.1)))
        .collect();
    let bounds = bounds?;
    let mut lower = bounds[0].0.clone();
    let mut upper = bounds[0].1.clone();
    for (lo, hi) in &bounds[1..] {
        if lo < &lower {
            lower = lo.clone();
        }
        if hi > &upper {
            upper = hi.clone();
        }
    }
    Ok(RangeReport {
        region: format!("[{x_lo}, {x_hi}] x J"),
        method: Method::Taylor,
        lower,
        upper,
    })
}

/// Upper bound of `sup |f|` on a single window by Chebyshev projection.
pub fn cheb_bound_window(
    f: &BiPoly,
    x_lo: &Rational,
    x_hi: &Rational,
    grid: &SubregionGrid,
) -> Result<Rational, Error> {
    let (a_lo, a_hi) = grid.alpha_span();
    let r = cheb_expand(f, (x_lo, x_hi), (&a_lo, &a_hi))?;
    Ok(cheb_l1(&r))
}

/// Upper bound of `sup |f|` on `[x_lo, x_hi] x J` treating the region as
/// the union of its grid cells in `x`: one projection per window, combined
/// by max. This per-cell form is what the published per-subregion values
/// use; the whole-interval value is quoted from the single-window form.
pub fn cheb_bound(
    f: &BiPoly,
    x_lo: &Rational,
    x_hi: &Rational,
    grid: &SubregionGrid,
) -> Result<Rational, Error> {
    let cells = grid.x_cells(x_lo, x_hi);
    let bounds: Result<Vec<Rational>, Error> = cells
        .par_iter()
        .map(|(lo, hi)| cheb_bound_window(f, lo, hi, grid))
        .collect();
    Ok(bounds?
        .into_iter()
        .reduce(|a, b| if a > b { a } else { b })
        .expect("at least one cell"))
}

/// The twelve published range rows: profile, slope and curvature on the
/// four subintervals.
pub fn range_tables(grid: &SubregionGrid) -> Result<Vec<RangeReport>, Error> {
    let q = inner();
    let edges = crate::refvals::subinterval_edges();
    let mut out = Vec::new();
    for (name, poly) in [("F0", &q.f0), ("F0'", &q.f0_d1), ("F0''", &q.f0_d2)] {
        for k in 0..4 {
            let mut rep = taylor_bound(poly, &edges[k], &edges[k + 1], grid)?;
            rep.region = format!("{} on I{} x J", name, k + 1);
            out.push(rep);
        }
    }
    Ok(out)
}

/// Certified bound of a univariate polynomial (coefficients in increasing
/// degree) on a window, by the cubic + `l1` split after rescaling.
pub fn bound_univariate(
    coeffs: &[Rational],
    lo: &Rational,
    hi: &Rational,
) -> Result<RInterval, Error> {
    let p = BiPoly::from_rows(coeffs.iter().map(|c| vec![c.clone()]).collect());
    let unit = p.subst_affine_x(&((lo + hi) / rat_int(2)), &((hi - lo) / rat_int(2)));
    let cubic: [Rational; 4] = [
        unit.coeff(0, 0),
        unit.coeff(1, 0),
        unit.coeff(2, 0),
        unit.coeff(3, 0),
    ];
    let rest = unit.l1_excluding(|m, _| m <= 3);
    let (min_c, max_c) = cubic_extrema(&cubic);
    Ok(RInterval::new(min_c.lo() - &rest, max_c.hi() + &rest))
}

/// Univariate bound over `[lo, hi]` subdivided at the supplied knots.
pub fn bound_univariate_on_cells(
    coeffs: &[Rational],
    lo: &Rational,
    hi: &Rational,
    knots: &[Rational],
) -> Result<RInterval, Error> {
    let mut edges = vec![lo.clone()];
    for k in knots {
        if k > lo && k < hi {
            edges.push(k.clone());
        }
    }
    edges.push(hi.clone());
    let mut total: Option<RInterval> = None;
    for w in edges.windows(2) {
        let b = bound_univariate(coeffs, &w[0], &w[1])?;
        total = Some(match total {
            None => b,
            Some(t) => t.hull(&b),
        });
    }
    Ok(total.unwrap())
}

/// Bound of `f(x0, alpha)` over `alpha in J` (subdividing at the grid's
/// parameter knots).
pub fn bound_at_x(
    f: &BiPoly,
    x0: &Rational,
    grid: &SubregionGrid,
) -> Result<RInterval, Error> {
    let coeffs = f.eval_at_x(x0);
    let (a_lo, a_hi) = grid.alpha_span();
    bound_univariate_on_cells(&coeffs, &a_lo, &a_hi, &grid.alpha_knots)
}

/// Outcome of a sign-change certification.
#[derive(Debug, Clone)]
pub struct SignChangeProof {
    pub name: String,
    pub bracket: (Rational, Rational),
    pub certified: bool,
    /// Value ranges at the bracket ends, uniform in the parameter.
    pub value_at_lo: RInterval,
    pub value_at_hi: RInterval,
    pub detail: String,
}

/// Certify that `g` has exactly one zero in `I = [0, 5/2]`, located inside
/// `bracket`, uniformly in the parameter:
///
/// 1. `g > 0` on `[0, bracket.0] x J`,
/// 2. `d g / dx < 0` on `[bracket.0, 5/2] x J`,
/// 3. `g(bracket.0) > 0` and `g(bracket.1) < 0` uniformly in the parameter.
///
/// Inconclusive bounds yield `certified: false`, never a panic.
pub fn verify_sign_change(
    name: &str,
    g: &BiPoly,
    bracket: (&Rational, &Rational),
    grid: &SubregionGrid,
) -> Result<SignChangeProof, Error> {
    let (b_lo, b_hi) = bracket;
    let x_end = rat(5, 2);
    let mut detail = String::new();
    let mut certified = true;

    if b_lo.is_positive() {
        let pre = taylor_bound(g, &Rational::zero(), b_lo, grid)?;
        if !pre.lower.is_positive() {
            certified = false;
            detail.push_str("cannot certify positivity before the bracket; ");
        }
    }

    let dg = g.dx();
    let post = taylor_bound(&dg, b_lo, &x_end, grid)?;
    if !post.upper.is_negative() {
        certified = false;
        detail.push_str("cannot certify decrease past the bracket start; ");
    }

    let value_at_lo = bound_at_x(g, b_lo, grid)?;
    let value_at_hi = bound_at_x(g, b_hi, grid)?;
    if !value_at_lo.lo().is_positive() || !value_at_hi.hi().is_negative() {
        certified = false;
        detail.push_str("bracket endpoint signs not certified; ");
    }

    Ok(SignChangeProof {
        name: name.to_string(),
        bracket: (b_lo.clone(), b_hi.clone()),
        certified,
        value_at_lo,
        value_at_hi,
        detail,
    })
}

/// Outcome of one parameter-monotonicity certification.
#[derive(Debug, Clone)]
pub struct MonotonicityProof {
    pub name: String,
    pub certified: bool,
    /// Certified upper bound of the (factored) parameter derivative.
    pub upper: Rational,
}

/// Certify that `d f / d alpha < 0` on `[x_lo, x_hi] x J` up to factors of
/// `(x - root)`: the derivative may vanish identically at `root` (the
/// curvature derivative at `x = 0`, the slope-difference derivative at its
/// anchor), so every exact power of `(x - root)` is divided out first; the
/// removed factor is nonnegative on the region, so negativity of the
/// quotient certifies the claim. Ties are failures.
pub fn verify_alpha_monotonicity(
    name: &str,
    f: &BiPoly,
    x_lo: &Rational,
    x_hi: &Rational,
    factor_root: Option<&Rational>,
    grid: &SubregionGrid,
) -> Result<MonotonicityProof, Error> {
    let da = f.da();
    if da.is_zero() {
        return Ok(MonotonicityProof {
            name: name.into(),
            certified: false,
            upper: Rational::zero(),
        });
    }
    let mut reduced = da;
    if let Some(r) = factor_root {
        debug_assert!(r <= x_lo, "removed factor must be nonnegative on the region");
        while let Some(q) = reduced.try_div_linear_x(r) {
            reduced = q;
        }
    }
    let rep = taylor_bound(&reduced, x_lo, x_hi, grid)?;
    Ok(MonotonicityProof {
        name: name.into(),
        certified: rep.upper.is_negative(),
        upper: rep.upper,
    })
}

/// The published list: slope differences per subinterval, curvature, and
/// the three auxiliary weights; all must be decreasing in the parameter.
pub fn monotonicity_suite(grid: &SubregionGrid) -> Result<Vec<MonotonicityProof>, Error> {
    let q = inner();
    let edges = crate::refvals::subinterval_edges();
    let mut out = Vec::new();
    for k in 0..4 {
        let x_l = &edges[k];
        let x_r = &edges[k + 1];
        let anchored = q.f0_d1.sub(&BiPoly::from_rows(vec![q.f0_d1.eval_at_x(x_l)]));
        out.push(verify_alpha_monotonicity(
            &format!("F0'(x) - F0'({x_l}) on I{}", k + 1),
            &anchored,
            x_l,
            x_r,
            Some(x_l),
            grid,
        )?);
    }
    let (x0, x1) = (Rational::zero(), rat(5, 2));
    out.push(verify_alpha_monotonicity(
        "F0''",
        &q.f0_d2,
        &x0,
        &x1,
        Some(&Rational::zero()),
        grid,
    )?);
    for (name, g) in [("G1", &q.g1), ("G2", &q.g2), ("G3", &q.g3)] {
        out.push(verify_alpha_monotonicity(name, g, &x0, &x1, None, grid)?);
    }
    Ok(out)
}

/// Certified `(inf, sup)` over the parameter interval of the interface
/// image `t(5/2; a, b)` at the extreme trust-region corners:
/// the lower member uses `a0 - rho0`, `b0 - 2 rho0`, the upper
/// `a0 + rho0`, `b0 + 2 rho0`.
pub fn tm_range() -> (RInterval, RInterval) {
    let rho = coeffs::rho0();
    let two_rho = &rho * rat_int(2);
    let make = |da: Rational, db: Rational| {
        move |alpha: &RInterval| -> RInterval {
            let a = eval_quadratic_iv(&coeffs::a0_coeffs(), alpha).shift(&da);
            let b = eval_quadratic_iv(&coeffs::b0_coeffs(), alpha).shift(&db);
            // ((5/2) a + b)^2 / (2 a)
            let num = a.scale(&rat(5, 2)).add(&b);
            num.mul(&num).div(&a.scale(&rat_int(2)))
        }
    };
    let lo_fn = make(-rho.clone(), -two_rho.clone());
    let hi_fn = make(rho, two_rho);
    let span = RInterval::new(coeffs::alpha_lo(), coeffs::alpha_hi());
    let inf = branch_bound_extremum(&lo_fn, &span, false, &rat_dec("1e-9"));
    let sup = branch_bound_extremum(&hi_fn, &span, true, &rat_dec("1e-9"));
    (inf, sup)
}

fn eval_quadratic_iv(c: &[Rational; 3], alpha: &RInterval) -> RInterval {
    alpha
        .scale(&c[2])
        .shift(&c[1])
        .mul(alpha)
        .shift(&c[0])
}

/// Branch-and-bound extremum of an interval extension over an interval,
/// rigorous for any inclusion-monotone extension.
pub fn branch_bound_extremum<F: Fn(&RInterval) -> RInterval>(
    f: &F,
    domain: &RInterval,
    maximize: bool,
    target_width: &Rational,
) -> RInterval {
    let mut cells = vec![domain.clone()];
    for _ in 0..64 {
        // evaluate, find the incumbent, prune, subdivide
        let evals: Vec<RInterval> = cells.iter().map(|c| f(c)).collect();
        let incumbent = evals
            .iter()
            .map(|e| if maximize { e.lo().clone() } else { e.hi().clone() })
            .reduce(|x, y| if maximize { x.max(y) } else { x.min(y) })
            .unwrap();
        let best = evals
            .iter()
            .map(|e| if maximize { e.hi().clone() } else { e.lo().clone() })
            .reduce(|x, y| if maximize { x.max(y) } else { x.min(y) })
            .unwrap();
        let width = if maximize {
            &best - &incumbent
        } else {
            &incumbent - &best
        };
        if &width <= target_width {
            return if maximize {
                RInterval::new(incumbent, best)
            } else {
                RInterval::new(best, incumbent)
            };
        }
        let mut next = Vec::new();
        for (cell, eval) in cells.iter().zip(&evals) {
            let keep = if maximize {
                eval.hi() >= &incumbent
            } else {
                eval.lo() <= &incumbent
            };
            if keep {
                let mid = cell.midpoint();
                next.push(RInterval::new(cell.lo().clone(), mid.clone()));
                next.push(RInterval::new(mid, cell.hi().clone()));
            }
        }
        cells = next;
    }
    // did not hit the width target; return the best rigorous bracket
    let evals: Vec<RInterval> = cells.iter().map(|c| f(c)).collect();
    let incumbent = evals
        .iter()
        .map(|e| if maximize { e.lo().clone() } else { e.hi().clone() })
        .reduce(|x, y| if maximize { x.max(y) } else { x.min(y) })
        .unwrap();
    let best = evals
        .iter()
        .map(|e| if maximize { e.hi().clone() } else { e.lo().clone() })
        .reduce(|x, y| if maximize { x.max(y) } else { x.min(y) })
        .unwrap();
    if maximize {
        RInterval::new(incumbent, best)
    } else {
        RInterval::new(best, incumbent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refvals;

    fn grid() -> SubregionGrid {
        SubregionGrid::published()
    }

    #[test]
    fn constant_polynomial_taylor_bound() {
        let p = BiPoly::constant(rat_int(3));
        let rep = taylor_bound(&p, &Rational::zero(), &rat(5, 2), &grid()).unwrap();
        assert_eq!(rep.lower, rat_int(3));
        assert_eq!(rep.upper, rat_int(3));
    }

    #[test]
    fn taylor_bound_contains_samples() {
        let q = inner();
        let rep = taylor_bound(&q.f0_d2, &rat_dec("1.25"), &rat_dec("1.4"), &grid()).unwrap();
        for i in 0..=20i64 {
            for j in 0..=10i64 {
                let x = rat_dec("1.25") + rat(15 * i, 2000);
                let a = rat(-3, 50) + rat(6 * j, 500);
                let v = q.f0_d2.eval(&x, &a);
                assert!(v >= rep.lower && v <= rep.upper);
            }
        }
    }

    #[test]
    fn trivial_sign_change_certifies() {
        // g = x - 1 with bracket [1/2, 3/2]
        let g = BiPoly::monomial(1, 0, rat_int(1)).sub(&BiPoly::constant(rat_int(1)));
        // flip sign so that g goes + -> -: use 1 - x
        let g = g.neg();
        let proof = verify_sign_change("1 - x", &g, (&rat(1, 2), &rat(3, 2)), &grid()).unwrap();
        assert!(proof.certified, "{}", proof.detail);
    }

    #[test]
    fn constant_is_not_alpha_monotone() {
        let c = BiPoly::constant(rat_int(2));
        let proof =
            verify_alpha_monotonicity("const", &c, &Rational::zero(), &rat(5, 2), None, &grid())
                .unwrap();
        assert!(!proof.certified);
    }

    #[test]
    fn chebyshev_bound_of_basis_polynomial() {
        // T3 on its own window has sup exactly 1
        let t3 = BiPoly::from_rows(vec![
            vec![Rational::zero()],
            vec![rat_int(-3)],
            vec![Rational::zero()],
            vec![rat_int(4)],
        ]);
        let b = cheb_bound_window(&t3, &rat_int(-1), &rat_int(1), &grid()).unwrap();
        assert_eq!(b, rat_int(1));
    }

    #[test]
    fn interface_image_range_reproduces_reference() {
        let (inf, sup) = tm_range();
        // 6-decimal published truncations
        assert!(inf.lo() > &(refvals::tm_low() - rat_dec("5e-7")));
        assert!(inf.hi() < &(refvals::tm_low() + rat_dec("1.5e-6")));
        assert!(sup.lo() > &(refvals::tm_high() - rat_dec("5e-7")));
        assert!(sup.hi() < &(refvals::tm_high() + rat_dec("1.5e-6")));
        // far-field guard
        assert!(inf.lo() > &rat_dec("1.96"));
    }
}
