//! Energy-method suprema and the finite-interval contraction chain.
//!
//! Per subinterval `[x_l, x_r]` of `[0, 5/2]`, the linearized solution
//! operator norms are bounded by
//!
//! * `M1 <= sqrt(F0'(x_r) - F0'(x_l)) exp(1/2 int Q1)`
//! * `M2 <= sqrt(int (y-x_l)^2 F0'' dy) exp(1/2 int Q1)`
//! * `M3 <= exp(1/2 int Q2)`
//! * `M  <= sqrt(x_r - x_l) exp(1/2 int Q)`
//!
//! where `Q1/Q2/Q` add `max(G1/G2/G3, 0)` to the quartic-weighted
//! curvature `(x-x_l)^4 F0''/4`. Certified parameter monotonicity pins the
//! worst case at the lower end of the parameter interval, so everything is
//! evaluated there. The contraction gate then verifies the two fixed-point
//! inequalities per interval and propagates endpoint error data across
//! `[0, 5/2]`.

use num_traits::{Signed, Zero};

use crate::bounds::{
    bound_univariate_on_cells, monotonicity_suite, taylor_bound, verify_sign_change,
    SignChangeProof, SubregionGrid,
};
use crate::error::Error;
use crate::exact::bipoly::BiPoly;
use crate::exact::interval::RInterval;
use crate::exact::rational::{rat, rat_int, Rational};
use crate::quasi::{coeffs, inner};
use crate::refvals;
use crate::special::elementary::exp_interval;

const BITS: u32 = 192;

/// Which exponent weight to integrate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QKind {
    /// quartic + max(G1, 0)
    Q1,
    /// quartic + max(G2, 0)
    Q2,
    /// quartic + max(G3, 0)
    Q,
}

/// Certified context shared by the energy computations: the sign-change
/// certificates for the three weights and the monotonicity certificates
/// that justify evaluating at the parameter's lower end.
pub struct EnergyCtx {
    pub grid: SubregionGrid,
    pub alpha_star: Rational,
    pub g_proofs: [SignChangeProof; 3],
}

impl EnergyCtx {
    pub fn build(grid: &SubregionGrid) -> Result<Self, Error> {
        let q = inner();
        let brackets = refvals::g_brackets();
        let proofs = [
            verify_sign_change("G1", &q.g1, (&brackets[0].0, &brackets[0].1), grid)?,
            verify_sign_change("G2", &q.g2, (&brackets[1].0, &brackets[1].1), grid)?,
            verify_sign_change("G3", &q.g3, (&brackets[2].0, &brackets[2].1), grid)?,
        ];
        for p in &proofs {
            if !p.certified {
                return Err(Error::CannotCertify(format!(
                    "sign change of {} not certified: {}",
                    p.name, p.detail
                )));
            }
        }
        for m in monotonicity_suite(grid)? {
            if !m.certified {
                return Err(Error::CannotCertify(format!(
                    "parameter monotonicity of {} not certified",
                    m.name
                )));
            }
        }
        Ok(Self {
            grid: grid.clone(),
            alpha_star: coeffs::alpha_lo(),
            g_proofs: proofs,
        })
    }

    fn g_poly(&self, kind: QKind) -> (&BiPoly, &SignChangeProof) {
        let q = inner();
        match kind {
            QKind::Q1 => (&q.g1, &self.g_proofs[0]),
            QKind::Q2 => (&q.g2, &self.g_proofs[1]),
            QKind::Q => (&q.g3, &self.g_proofs[2]),
        }
    }
}

/// Exact integral of a univariate polynomial over `[lo, hi]`.
fn integrate_univariate(coeffs: &[Rational], lo: &Rational, hi: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut lo_pow = lo.clone();
    let mut hi_pow = hi.clone();
    for (k, c) in coeffs.iter().enumerate() {
        acc += c / rat_int(k as i64 + 1) * (&hi_pow - &lo_pow);
        lo_pow *= lo;
        hi_pow *= hi;
    }
    acc
}

/// The quartic-weighted curvature `(x - x_l)^4 F0''(x; alpha*) / 4` as a
/// univariate coefficient vector.
fn quartic_weight_coeffs(ctx: &EnergyCtx, x_l: &Rational) -> Vec<Rational> {
    let q = inner();
    let f2 = BiPoly::from_rows(
        q.f0_d2
            .eval_at_a(&ctx.alpha_star)
            .into_iter()
            .map(|c| vec![c])
            .collect(),
    );
    let shift = BiPoly::monomial(1, 0, rat_int(1)).sub(&BiPoly::constant(x_l.clone()));
    let shift2 = shift.mul(&shift);
    let quartic = shift2.mul(&shift2).mul(&f2).scale(&rat(1, 4));
    (0..=quartic.deg_x()).map(|m| quartic.coeff(m, 0)).collect()
}

/// Certified enclosure of `int_{x_l}^{x_r} Q dx` at the worst-case
/// parameter: quartic part exact, positive-region weight part exact, plus
/// bracket-width times the certified positive part of the weight over the
/// ambiguous bracket; zero past the bracket.
pub fn q_integral_bound(
    ctx: &EnergyCtx,
    x_l: &Rational,
    x_r: &Rational,
    kind: QKind,
) -> Result<RInterval, Error> {
    if x_l > x_r {
        return Err(Error::Domain("inverted integration interval".into()));
    }
    if x_l == x_r {
        return Ok(RInterval::zero());
    }
    let quartic_coeffs = quartic_weight_coeffs(ctx, x_l);
    let mut total = RInterval::point(integrate_univariate(&quartic_coeffs, x_l, x_r));

    let (g, proof) = ctx.g_poly(kind);
    let g_alpha: Vec<Rational> = g.eval_at_a(&ctx.alpha_star);
    let (b_lo, b_hi) = (&proof.bracket.0, &proof.bracket.1);

    // positive region [x_l, min(x_r, b_lo)]
    let pos_hi = if x_r < b_lo { x_r } else { b_lo };
    if *x_l < *pos_hi {
        total = total.shift(&integrate_univariate(&g_alpha, x_l, pos_hi));
    }
    // ambiguous region: overlap with (b_lo, b_hi)
    let amb_lo = if x_l > b_lo { x_l } else { b_lo };
    let amb_hi = if x_r < b_hi { x_r } else { b_hi };
    if *amb_lo < *amb_hi {
        let sup_g = bound_univariate_on_cells(&g_alpha, amb_lo, amb_hi, &ctx.grid.x_knots)?;
        let pos_sup = if sup_g.hi().is_positive() {
            sup_g.hi().clone()
        } else {
            Rational::zero()
        };
        let slack = (amb_hi - amb_lo) * pos_sup;
        total = total.add(&RInterval::new(Rational::zero(), slack));
    }
    Ok(total)
}

/// Certified operator-norm bounds on one subinterval.
#[derive(Debug, Clone)]
pub struct EnergyBounds {
    pub interval: usize,
    pub m: Rational,
    pub m1: Rational,
    pub m2: Rational,
    pub m3: Rational,
}

/// The four displayed suprema formulas at the worst-case parameter.
pub fn supremum_bounds(ctx: &EnergyCtx, interval: usize) -> Result<EnergyBounds, Error> {
    let edges = refvals::subinterval_edges();
    let (x_l, x_r) = (&edges[interval - 1], &edges[interval]);
    let q = inner();
    let alpha = &ctx.alpha_star;

    let int_q1 = q_integral_bound(ctx, x_l, x_r, QKind::Q1)?;
    let int_q2 = q_integral_bound(ctx, x_l, x_r, QKind::Q2)?;
    let int_q = q_integral_bound(ctx, x_l, x_r, QKind::Q)?;
    for (name, v) in [("Q1", &int_q1), ("Q2", &int_q2), ("Q", &int_q)] {
        if v.lo().is_negative() {
            return Err(Error::CannotCertify(format!(
                "exponent integral {name} on I{interval} not certified nonnegative"
            )));
        }
    }
    let half = rat(1, 2);
    let exp_q1 = exp_interval(&int_q1.scale(&half), BITS);
    let exp_q2 = exp_interval(&int_q2.scale(&half), BITS);
    let exp_q = exp_interval(&int_q.scale(&half), BITS);

    let eval_poly = |coeffs: &[Rational], x: &Rational| -> Rational {
        let mut acc = Rational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let d1 = q.f0_d1.eval_at_a(alpha);
    let slope_inc = eval_poly(&d1, x_r) - eval_poly(&d1, x_l);
    if slope_inc.is_negative() {
        return Err(Error::CannotCertify(format!(
            "slope increment negative on I{interval}"
        )));
    }
    let m1 = RInterval::point(slope_inc).sqrt(BITS).mul(&exp_q1);

    // second-moment weight: int (y - x_l)^2 F0''(y) dy
    let f2 = BiPoly::from_rows(
        q.f0_d2.eval_at_a(alpha).into_iter().map(|c| vec![c]).collect(),
    );
    let shift = BiPoly::monomial(1, 0, rat_int(1)).sub(&BiPoly::constant(x_l.clone()));
    let weighted = shift.mul(&shift).mul(&f2);
    let wcoeffs: Vec<Rational> = (0..=weighted.deg_x()).map(|m| weighted.coeff(m, 0)).collect();
    let moment = integrate_univariate(&wcoeffs, x_l, x_r);
    let m2 = RInterval::point(moment).sqrt(BITS).mul(&exp_q1);

    let m3 = exp_q2;
    let m = RInterval::point(x_r - x_l).sqrt(BITS).mul(&exp_q);

    Ok(EnergyBounds {
        interval,
        m: m.hi().clone(),
        m1: m1.hi().clone(),
        m2: m2.hi().clone(),
        m3: m3.hi().clone(),
    })
}

/// How the left-endpoint slope-error bound is carried between intervals:
/// the published tabulation carries only the per-interval increment, while
/// the conservative reading accumulates from the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SlopeCarry {
    #[default]
    IntervalLocal,
    Cumulative,
}

/// Endpoint data entering one interval and the bounds leaving it.
#[derive(Debug, Clone)]
pub struct ChainState {
    pub interval: usize,
    /// Incoming bounds at the left endpoint: `(|E|, |E'|, |E''|)`.
    pub incoming: [Rational; 3],
    pub b0: Rational,
    pub eps: Rational,
    /// Sup of `|E''|` over the interval (the fixed-point ball radius).
    pub ball_e2: Rational,
    /// Increment bound of `|E'|` across the interval.
    pub incr_e1: Rational,
    /// Cumulative bound of `|E|` through the right endpoint.
    pub cum_e0: Rational,
    /// Accumulated slope-error bound through the right endpoint.
    pub cum_e1: Rational,
}

impl ChainState {
    /// Row in the published column layout `(B0, eps, colE, colE', colE'')`.
    pub fn printed_row(&self) -> [Rational; 5] {
        [
            self.b0.clone(),
            self.eps.clone(),
            self.ball_e2.clone(),
            self.incr_e1.clone(),
            self.cum_e0.clone(),
        ]
    }
}

/// Verify the two contraction inequalities on one interval and produce the
/// outgoing bounds. `r_norm` is the certified sup of the defect on the
/// interval; `incoming` is the endpoint data `(|E|, |E'|, |E''|)` at `x_l`.
#[allow(clippy::too_many_arguments)]
pub fn contraction_gate(
    interval: usize,
    width: &Rational,
    incoming: &[Rational; 3],
    cum_e0_in: &Rational,
    cum_e1_in: &Rational,
    r_norm: &Rational,
    bounds: &EnergyBounds,
    eps: &Rational,
) -> Result<ChainState, Error> {
    let b0 = &bounds.m * r_norm
        + &bounds.m1 * &incoming[0]
        + &bounds.m2 * &incoming[1]
        + &bounds.m3 * &incoming[2];
    let one_plus = rat_int(1) + eps;
    let endpoint = &incoming[0] + width * &incoming[1];
    let w2 = width * width;

    let lhs1 = &bounds.m * &endpoint * &one_plus
        + rat(1, 2) * &w2 * &bounds.m * &b0 * &one_plus * &one_plus;
    if lhs1 >= *eps {
        return Err(Error::GateFailed {
            interval: format!("I{interval}"),
            inequality: format!(
                "M(|E| + w|E'|)(1+eps) + w^2 M B0 (1+eps)^2 / 2 = {lhs1} >= eps = {eps}"
            ),
        });
    }
    let lhs2 = &bounds.m * &endpoint + &w2 * &bounds.m * &b0 * &one_plus;
    if lhs2 >= rat_int(1) {
        return Err(Error::GateFailed {
            interval: format!("I{interval}"),
            inequality: format!("M(|E| + w|E'|) + w^2 M B0 (1+eps) = {lhs2} >= 1"),
        });
    }

    let ball_e2 = &b0 * &one_plus;
    let incr_e1 = width * &ball_e2;
    let cum_e0 = cum_e0_in + width * &incoming[1] + &w2 / rat_int(2) * &ball_e2;
    let cum_e1 = cum_e1_in + &incr_e1;
    Ok(ChainState {
        interval,
        incoming: incoming.clone(),
        b0,
        eps: eps.clone(),
        ball_e2,
        incr_e1,
        cum_e0,
        cum_e1,
    })
}

/// Result of propagating the chain across all four subintervals.
pub struct ChainResult {
    pub states: Vec<ChainState>,
    /// Final triple in the published tabulation's layout for
    /// `(|E|, |E'|, |E''|)`: column maxima of `(ball_e2, incr_e1, cum_e0)`.
    pub published_layout: [Rational; 3],
    /// Conservative per-quantity bounds over the whole inner interval:
    /// `|E| <= max cum_e0`, `|E'| <= max cum_e1`, `|E''| <= max ball_e2`.
    pub rigorous: [Rational; 3],
}

/// Propagate the contraction chain from the origin with zero initial data.
pub fn propagate_chain(
    ctx: &EnergyCtx,
    eps: &[Rational; 4],
    carry: SlopeCarry,
) -> Result<ChainResult, Error> {
    let q = inner();
    let edges = refvals::subinterval_edges();
    let mut states: Vec<ChainState> = Vec::new();
    let mut incoming = [Rational::zero(), Rational::zero(), Rational::zero()];
    let mut cum_e0 = Rational::zero();
    let mut cum_e1 = Rational::zero();
    for k in 1..=4 {
        let (x_l, x_r) = (&edges[k - 1], &edges[k]);
        let width = x_r - x_l;
        let r_rep = taylor_bound(&q.residual, x_l, x_r, &ctx.grid)?;
        let bounds = supremum_bounds(ctx, k)?;
        let state = contraction_gate(
            k,
            &width,
            &incoming,
            &cum_e0,
            &cum_e1,
            &r_rep.sup_abs(),
            &bounds,
            &eps[k - 1],
        )?;
        let e1_out = match carry {
            SlopeCarry::IntervalLocal => state.incr_e1.clone(),
            SlopeCarry::Cumulative => state.cum_e1.clone(),
        };
        incoming = [state.cum_e0.clone(), e1_out, state.ball_e2.clone()];
        cum_e0 = state.cum_e0.clone();
        cum_e1 = state.cum_e1.clone();
        states.push(state);
    }
    let colmax = |f: fn(&ChainState) -> &Rational| {
        states
            .iter()
            .map(|s| f(s).clone())
            .reduce(|a, b| if a > b { a } else { b })
            .unwrap()
    };
    let published_layout = [
        colmax(|s| &s.ball_e2),
        colmax(|s| &s.incr_e1),
        colmax(|s| &s.cum_e0),
    ];
    let rigorous = [
        colmax(|s| &s.cum_e0),
        colmax(|s| &s.cum_e1),
        colmax(|s| &s.ball_e2),
    ];
    Ok(ChainResult { states, published_layout, rigorous })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_dec;
    use std::sync::OnceLock;

    fn ctx() -> &'static EnergyCtx {
        static CTX: OnceLock<EnergyCtx> = OnceLock::new();
        CTX.get_or_init(|| EnergyCtx::build(&SubregionGrid::published()).unwrap())
    }

    #[test]
    fn degenerate_interval_integral_is_zero() {
        let v = q_integral_bound(ctx(), &rat(1, 2), &rat(1, 2), QKind::Q).unwrap();
        assert!(v.mag().is_zero());
    }

    #[test]
    fn interval_past_bracket_has_pure_quartic_weight() {
        // on I4 the third weight is certified negative, so Q = quartic only
        let edges = refvals::subinterval_edges();
        let with_g = q_integral_bound(ctx(), &edges[3], &edges[4], QKind::Q).unwrap();
        let qc = quartic_weight_coeffs(ctx(), &edges[3]);
        let pure = integrate_univariate(&qc, &edges[3], &edges[4]);
        assert_eq!(with_g, RInterval::point(pure));
    }

    #[test]
    fn zero_data_zero_residual_gate() {
        let bounds = supremum_bounds(ctx(), 1).unwrap();
        let zero = [Rational::zero(), Rational::zero(), Rational::zero()];
        let st = contraction_gate(
            1,
            &rat_dec("1.25"),
            &zero,
            &Rational::zero(),
            &Rational::zero(),
            &Rational::zero(),
            &bounds,
            &rat_dec("5e-6"),
        )
        .unwrap();
        assert!(st.b0.is_zero());
        assert!(st.ball_e2.is_zero() && st.incr_e1.is_zero() && st.cum_e0.is_zero());
    }

    #[test]
    fn oversized_residual_fails_first_gate() {
        let bounds = supremum_bounds(ctx(), 1).unwrap();
        let zero = [Rational::zero(), Rational::zero(), Rational::zero()];
        let err = contraction_gate(
            1,
            &rat_dec("1.25"),
            &zero,
            &Rational::zero(),
            &Rational::zero(),
            &rat_dec("1e-2"),
            &bounds,
            &rat_dec("5e-6"),
        );
        assert!(matches!(err, Err(Error::GateFailed { .. })));
    }

    #[test]
    fn chain_outputs_are_monotone() {
        let r = propagate_chain(ctx(), &refvals::chain_eps(), SlopeCarry::IntervalLocal).unwrap();
        for w in r.states.windows(2) {
            assert!(w[0].b0 <= w[1].b0, "ball radii grow along the chain");
            assert!(w[0].cum_e0 <= w[1].cum_e0);
        }
    }

    #[test]
    fn doubled_eps_still_passes() {
        let eps = refvals::chain_eps().map(|e| e * rat_int(2));
        assert!(propagate_chain(ctx(), &eps, SlopeCarry::IntervalLocal).is_ok());
    }
}
