//! Certified evaluation of the far-field kernels and profile.
//!
//! `I0(t) = 1 - sqrt(pi t) e^t erfc(sqrt(t))`, `J0(t) = I0(2t)`, the decaying
//! profile `q0(t; c)` and its derivatives, the auxiliary functions `B` and
//! `V`, and the far-field residual. Point arguments are exact rationals;
//! interval arguments propagate monotonically where the kernels are
//! monotone.

use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use super::cseries::{
    b_series, g_series, q0_series, residual_series, v_series, CSeries, KernelVals, SPowers,
};
use super::elementary::{exp_interval, exp_rational, pi};
use super::erfc::erfc_interval;
use super::{CertValue, WORK_BITS};
use crate::error::Error;
use crate::exact::interval::RInterval;
use crate::exact::rational::{rat, Rational};

/// Lower end of the far-field domain in `t`.
pub fn t_guard() -> Rational {
    rat(49, 25)
}

/// Admissible amplitude ceiling `|c| <= 1/4`.
pub fn c_ceiling() -> Rational {
    rat(1, 4)
}

/// Sharp enclosure of `I0` at a rational `t > 0`.
pub fn i0_point(t: &Rational, bits: u32) -> RInterval {
    assert!(t.is_positive(), "I0 needs t > 0");
    let ti = RInterval::point(t.clone());
    let sqrt_t = ti.sqrt(bits + 16);
    let erfc = erfc_interval(&sqrt_t, bits + 16);
    let sqrt_pi_t = pi().scale(t).sqrt(bits + 16);
    let et = exp_rational(t, bits + 16);
    RInterval::one()
        .sub(&sqrt_pi_t.mul(&et).mul(&erfc))
        .round_out(bits)
}

/// `I0` over an interval; `I0` is strictly decreasing (immediate from its
/// Laplace integral form), so endpoint evaluations suffice.
pub fn i0_interval(t: &RInterval, bits: u32) -> RInterval {
    if t.width().is_zero() {
        return i0_point(t.lo(), bits);
    }
    let hi_end = i0_point(t.lo(), bits);
    let lo_end = i0_point(t.hi(), bits);
    RInterval::new(lo_end.lo().clone(), hi_end.hi().clone())
}

pub fn j0_interval(t: &RInterval, bits: u32) -> RInterval {
    i0_interval(&t.scale(&Rational::from_integer(2.into())), bits)
}

/// Kernel evaluation environment at `t` (point or box).
pub fn kernel_vals(t: &RInterval, bits: u32) -> KernelVals {
    assert!(t.lo().is_positive());
    KernelVals {
        s_powers: SPowers::new(t.sqrt(bits)),
        i0: i0_interval(t, bits),
        j0: j0_interval(t, bits),
        emt: exp_interval(&t.neg(), bits),
    }
}

/// Cached symbolic series for the profile and residual.
pub struct FarSeries {
    pub q0: CSeries,
    pub q0_d1: CSeries,
    pub q0_d2: CSeries,
    pub q0_d3: CSeries,
    pub b: CSeries,
    pub g: CSeries,
    pub v: CSeries,
    pub residual: CSeries,
}

pub fn far_series() -> &'static FarSeries {
    static SERIES: OnceLock<FarSeries> = OnceLock::new();
    SERIES.get_or_init(|| {
        let q0 = q0_series();
        let q0_d1 = q0.dt();
        let q0_d2 = q0_d1.dt();
        let q0_d3 = q0_d2.dt();
        FarSeries {
            q0,
            q0_d1,
            q0_d2,
            q0_d3,
            b: b_series(),
            g: g_series(),
            v: v_series(),
            residual: residual_series(),
        }
    })
}

fn guard_domain(t: &Rational, c: &Rational) -> Result<(), Error> {
    if *t < t_guard() {
        return Err(Error::Domain(format!(
            "far-field evaluation needs t >= 1.96, got {t}"
        )));
    }
    if c.abs() > c_ceiling() {
        return Err(Error::Domain(format!(
            "far-field evaluation needs |c| <= 1/4, got {c}"
        )));
    }
    Ok(())
}

/// Certified `I0(t)` for `t >= 1`.
pub fn i0_cert(t: &Rational, acc: &Rational) -> Result<CertValue, Error> {
    if *t < Rational::from_integer(1.into()) {
        return Err(Error::Domain(format!("I0 domain guard t >= 1, got {t}")));
    }
    CertValue::from_sharp(i0_point(t, WORK_BITS), acc)
}

/// Certified `J0(t) = I0(2t)`.
pub fn j0_cert(t: &Rational, acc: &Rational) -> Result<CertValue, Error> {
    if *t < Rational::from_integer(1.into()) {
        return Err(Error::Domain(format!("J0 domain guard t >= 1, got {t}")));
    }
    CertValue::from_sharp(
        i0_point(&(t * Rational::from_integer(2.into())), WORK_BITS),
        acc,
    )
}

/// Certified `q0`, `q0'` or `q0''` at `(t, c)`.
pub fn q0_eval(t: &Rational, c: &Rational, order: u8, acc: &Rational) -> Result<CertValue, Error> {
    guard_domain(t, c)?;
    let series = match order {
        0 => &far_series().q0,
        1 => &far_series().q0_d1,
        2 => &far_series().q0_d2,
        _ => return Err(Error::Domain("q0 derivative order must be 0, 1 or 2".into())),
    };
    let env = kernel_vals(&RInterval::point(t.clone()), WORK_BITS);
    CertValue::from_sharp(series.eval(&env, &RInterval::point(c.clone())), acc)
}

/// Certified `B(t; c)`.
pub fn b_eval(t: &Rational, c: &Rational, acc: &Rational) -> Result<CertValue, Error> {
    guard_domain(t, c)?;
    let env = kernel_vals(&RInterval::point(t.clone()), WORK_BITS);
    CertValue::from_sharp(
        far_series().b.eval(&env, &RInterval::point(c.clone())),
        acc,
    )
}

/// Certified `V(t; c) = -(2/c) t e^t B(t; c)`, evaluated through the form
/// analytic in `c` at zero (the `c`-linear part of `B` divided symbolically
/// by `c`); `V(t; 0) = 1` exactly.
pub fn v_eval(t: &Rational, c: &Rational, acc: &Rational) -> Result<CertValue, Error> {
    guard_domain(t, c)?;
    let env = kernel_vals(&RInterval::point(t.clone()), WORK_BITS);
    CertValue::from_sharp(
        far_series().v.eval(&env, &RInterval::point(c.clone())),
        acc,
    )
}

/// Certified far-field residual `R(t; c)` of the two-term profile.
pub fn far_residual(t: &Rational, c: &Rational, acc: &Rational) -> Result<CertValue, Error> {
    guard_domain(t, c)?;
    let env = kernel_vals(&RInterval::point(t.clone()), WORK_BITS);
    CertValue::from_sharp(
        far_series().residual.eval(&env, &RInterval::point(c.clone())),
        acc,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat_dec, rat_int};

    fn acc12() -> Rational {
        rat_dec("1e-12")
    }

    #[test]
    fn kernels_lie_in_unit_interval() {
        for t in [rat(49, 25), rat(2, 1), rat(5, 1), rat(50, 1)] {
            let i = i0_point(&t, 192);
            assert!(i.lo() > &Rational::from_integer(0.into()), "t = {t}");
            assert!(i.hi() < &Rational::from_integer(1.into()), "t = {t}");
        }
    }

    #[test]
    fn j0_is_i0_at_doubled_argument() {
        for t in [rat_int(2), rat_int(3), rat_int(5)] {
            let j = j0_cert(&t, &acc12()).unwrap();
            let i2t = i0_cert(&(t * rat_int(2)), &acc12()).unwrap();
            assert!(j.enclosure.intersect(&i2t.enclosure).is_some());
        }
    }

    #[test]
    fn i0_tail_behaviour() {
        // t * I0(t) -> 1/2 from below; at t = 50 it sits in (0.4, 0.5)
        let t = rat_int(50);
        let i = i0_point(&t, 192);
        let ti = i.scale(&t);
        assert!(ti.lo() > &rat_dec("0.4"));
        assert!(ti.hi() < &rat_dec("0.5"));
    }

    #[test]
    fn q0_vanishes_at_zero_amplitude() {
        let v = q0_eval(&rat_int(2), &Rational::from_integer(0.into()), 0, &acc12()).unwrap();
        assert!(v.enclosure.contains(&Rational::from_integer(0.into())));
        assert!(v.enclosure.width() < rat_dec("1e-30"));
    }

    #[test]
    fn q0_two_closed_forms_agree() {
        // series-weight form vs the direct kernel form at t = 2, c = 1/4
        let t = rat_int(2);
        let c = rat(1, 4);
        let q = q0_eval(&t, &c, 0, &acc12()).unwrap().enclosure;

        let bits = 256;
        let i0 = i0_point(&t, bits);
        let j0 = i0_point(&rat_int(4), bits);
        let st = RInterval::point(t.clone()).sqrt(bits);
        let emt = exp_rational(&-t.clone(), bits);
        let em2t = emt.mul(&emt);
        // 2 c sqrt(t) e^-t I0 + c^2 e^-2t (2 J0 - I0 - I0^2)
        let first = st.mul(&emt).mul(&i0).scale(&(rat_int(2) * &c));
        let second = j0
            .scale(&rat_int(2))
            .sub(&i0)
            .sub(&i0.mul(&i0))
            .mul(&em2t)
            .scale(&(&c * &c));
        let direct = first.add(&second);
        assert!(q.intersect(&direct).is_some());
        assert!(direct.width() < rat_dec("1e-15"));
    }

    #[test]
    fn v_is_analytic_at_zero_amplitude() {
        let v0 = v_eval(&rat_int(2), &Rational::from_integer(0.into()), &acc12()).unwrap();
        assert!(v0.enclosure.contains(&Rational::from_integer(1.into())));
        // and the c -> 0 limit matches: compare with tiny c
        let v_small = v_eval(&rat_int(2), &rat_dec("1e-6"), &acc12()).unwrap();
        let diff = v_small.enclosure.sub(&v0.enclosure);
        assert!(diff.mag() < rat_dec("1e-4"));
    }

    #[test]
    fn v_tends_to_one_far_out() {
        let v = v_eval(&rat_int(30), &rat(1, 4), &acc12()).unwrap();
        let gap = v.enclosure.sub(&RInterval::one());
        assert!(gap.mag() < rat_dec("0.1"));
    }

    #[test]
    fn residual_zero_without_amplitude() {
        let r = far_residual(&rat_int(2), &Rational::from_integer(0.into()), &acc12()).unwrap();
        assert!(r.enclosure.mag() < rat_dec("1e-40"));
    }

    #[test]
    fn weighted_residual_decays_like_exp_minus_2t() {
        // sqrt(t) e^t R at t = 3 vs t = 4, ratio within [e^-2/2, 2 e^-2]
        let c = rat(1, 4);
        let w = |t: i64| {
            let tr = rat_int(t);
            let r = far_residual(&tr, &c, &acc12()).unwrap().enclosure;
            let st = RInterval::point(tr.clone()).sqrt(192);
            let et = exp_rational(&tr, 192);
            r.mul(&st).mul(&et)
        };
        let w3 = w(3);
        let w4 = w(4);
        let ratio = w4.div(&w3).mag();
        let e2 = exp_rational(&rat_int(-2), 128);
        assert!(ratio < e2.hi() * rat_int(2));
        let lo_gate = e2.lo() / rat_int(2);
        let ratio_lo = w4.div(&w3).mig();
        assert!(ratio_lo > lo_gate);
    }

    #[test]
    fn domain_guards_reject() {
        assert!(q0_eval(&rat(3, 2), &rat(1, 8), 0, &acc12()).is_err());
        assert!(q0_eval(&rat_int(2), &rat(1, 2), 0, &acc12()).is_err());
        assert!(i0_cert(&rat(1, 2), &acc12()).is_err());
    }
}
