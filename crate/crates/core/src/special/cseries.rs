//! Exact symbolic algebra for the far-field profile.
//!
//! Every far-field quantity used here (the decaying profile `q0`, its
//! derivatives, the driving term of the linearized equation, the residual)
//! lies in the algebra generated by
//!
//! * `I = I0(t)`, `J = J0(t) = I0(2t)` — the two kernels,
//! * `s = sqrt(t)` — Laurent powers of the square root,
//! * the weights `c^k e^{-kt}`.
//!
//! The algebra is closed under `d/dt` because `I0' = (1 + 1/(2t)) I0 -
//! 1/(2t)` and `J0' = (2 + 1/(2t)) J0 - 1/(2t)`, and `d/dt s^m =
//! (m/2) s^{m-2}`. A `CSeries` stores, for each power `k`, the polynomial
//! `P_k(I, J; s)` multiplying `c^k e^{-kt}`; all coefficient arithmetic is
//! exact rational. Numerical enclosures only enter at evaluation time.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::exact::interval::RInterval;
use crate::exact::rational::{rat, rat_int, Rational};

// ---------------------------------------------------------------------------
// Laurent polynomials in s = sqrt(t)
// ---------------------------------------------------------------------------

/// Laurent polynomial in `s`: power -> exact coefficient.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Rational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(pow: i64, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(pow, coeff);
        }
        Self { terms }
    }

    pub fn one() -> Self {
        Self::term(0, Rational::from_integer(1.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Rational::is_zero)
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (p, c) in &other.terms {
            let e = self.terms.entry(*p).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                self.terms.remove(p);
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &other.terms {
                let e = out.terms.entry(p1 + p2).or_insert_with(Rational::zero);
                *e += c1 * c2;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(p, c)| (*p, c * k)).collect(),
        }
    }

    /// Multiply by `s^m`.
    pub fn shift(&self, m: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(p, c)| (p + m, c.clone())).collect(),
        }
    }

    /// `d/dt`: `s^m -> (m/2) s^{m-2}`.
    pub fn dt(&self) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            if *p != 0 {
                let e = out.terms.entry(p - 2).or_insert_with(Rational::zero);
                *e += c * rat(*p, 2);
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn eval(&self, s_powers: &SPowers) -> RInterval {
        let mut acc = RInterval::zero();
        for (p, c) in &self.terms {
            acc = acc.add(&s_powers.pow(*p).scale(c));
        }
        acc
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }
}

/// Cache of interval powers of `s`, including negative powers.
pub struct SPowers {
    s: RInterval,
    cache: std::cell::RefCell<BTreeMap<i64, RInterval>>,
}

impl SPowers {
    pub fn new(s: RInterval) -> Self {
        assert!(s.lo().is_positive(), "s must be strictly positive");
        Self { s, cache: Default::default() }
    }

    pub fn pow(&self, m: i64) -> RInterval {
        if m == 0 {
            return RInterval::one();
        }
        if let Some(v) = self.cache.borrow().get(&m) {
            return v.clone();
        }
        let v = if m > 0 {
            self.s.pow(m as u32)
        } else {
            RInterval::one().div(&self.s.pow((-m) as u32))
        };
        self.cache.borrow_mut().insert(m, v.clone());
        v
    }
}

// ---------------------------------------------------------------------------
// Polynomials in (I, J) with Laurent coefficients
// ---------------------------------------------------------------------------

/// Polynomial in the kernels `I`, `J` with Laurent-in-`s` coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExpPoly {
    terms: BTreeMap<(u8, u8), Laurent>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_laurent(l: Laurent) -> Self {
        let mut terms = BTreeMap::new();
        if !l.is_zero() {
            terms.insert((0, 0), l);
        }
        Self { terms }
    }

    pub fn term(i: u8, j: u8, l: Laurent) -> Self {
        let mut terms = BTreeMap::new();
        if !l.is_zero() {
            terms.insert((i, j), l);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Laurent::is_zero)
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, l) in &other.terms {
            let e = self.terms.entry(*k).or_insert_with(Laurent::zero);
            e.add_assign(l);
            if e.is_zero() {
                self.terms.remove(k);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), l1) in &self.terms {
            for ((i2, j2), l2) in &other.terms {
                let key = (i1 + i2, j1 + j2);
                let prod = l1.mul(l2);
                let e = out.terms.entry(key).or_insert_with(Laurent::zero);
                e.add_assign(&prod);
            }
        }
        out.terms.retain(|_, l| !l.is_zero());
        out
    }

    pub fn scale_laurent(&self, l: &Laurent) -> Self {
        let mut out = Self::zero();
        for (k, inner) in &self.terms {
            let prod = inner.mul(l);
            if !prod.is_zero() {
                out.terms.insert(*k, prod);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.scale_laurent(&Laurent::term(0, r.clone()))
    }

    /// Exact `d/dt` using the closed kernel derivative identities.
    pub fn dt(&self) -> Self {
        let half_inv_t = Laurent::term(-2, rat(1, 2));
        let mut out = Self::zero();
        for ((i, j), l) in &self.terms {
            // coefficient derivative
            out.add_assign(&Self::term(*i, *j, l.dt()));
            if *i > 0 {
                let il = l.scale(&rat_int(*i as i64));
                // I' = (1 + 1/(2t)) I - 1/(2t)
                let mut keep = il.clone();
                keep.add_assign(&il.mul(&half_inv_t));
                out.add_assign(&Self::term(*i, *j, keep));
                out.add_assign(&Self::term(
                    i - 1,
                    *j,
                    il.mul(&half_inv_t).scale(&rat_int(-1)),
                ));
            }
            if *j > 0 {
                let jl = l.scale(&rat_int(*j as i64));
                // J' = (2 + 1/(2t)) J - 1/(2t)
                let mut keep = jl.scale(&rat_int(2));
                keep.add_assign(&jl.mul(&half_inv_t));
                out.add_assign(&Self::term(*i, *j, keep));
                out.add_assign(&Self::term(
                    *i,
                    j - 1,
                    jl.mul(&half_inv_t).scale(&rat_int(-1)),
                ));
            }
        }
        out
    }

    pub fn eval(&self, env: &KernelVals) -> RInterval {
        let mut acc = RInterval::zero();
        for ((i, j), l) in &self.terms {
            let mut v = l.eval(&env.s_powers);
            if *i > 0 {
                v = v.mul(&env.i0.pow(*i as u32));
            }
            if *j > 0 {
                v = v.mul(&env.j0.pow(*j as u32));
            }
            acc = acc.add(&v);
        }
        acc
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u8, u8), &Laurent)> {
        self.terms.iter()
    }
}

// ---------------------------------------------------------------------------
// Series in powers of c e^{-t}
// ---------------------------------------------------------------------------

/// `sum_k c^k e^{-kt} P_k(I, J; s)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CSeries {
    comps: Vec<ExpPoly>,
}

impl CSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_components(comps: Vec<ExpPoly>) -> Self {
        let mut s = Self { comps };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.comps.last().map_or(false, ExpPoly::is_zero) {
            self.comps.pop();
        }
    }

    pub fn component(&self, k: usize) -> ExpPoly {
        self.comps.get(k).cloned().unwrap_or_else(ExpPoly::zero)
    }

    pub fn max_order(&self) -> usize {
        self.comps.len().saturating_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.comps.len().max(other.comps.len());
        let mut comps = Vec::with_capacity(n);
        for k in 0..n {
            let mut p = self.component(k);
            p.add_assign(&other.component(k));
            comps.push(p);
        }
        Self::from_components(comps)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.comps.is_empty() || other.comps.is_empty() {
            return Self::zero();
        }
        let n = self.comps.len() + other.comps.len() - 1;
        let mut comps = vec![ExpPoly::zero(); n];
        for (k1, p1) in self.comps.iter().enumerate() {
            if p1.is_zero() {
                continue;
            }
            for (k2, p2) in other.comps.iter().enumerate() {
                if p2.is_zero() {
                    continue;
                }
                comps[k1 + k2].add_assign(&p1.mul(p2));
            }
        }
        Self::from_components(comps)
    }

    pub fn scale_laurent(&self, l: &Laurent) -> Self {
        Self::from_components(self.comps.iter().map(|p| p.scale_laurent(l)).collect())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_components(self.comps.iter().map(|p| p.scale(r)).collect())
    }

    /// Exact `d/dt`: the weight contributes `-k` per component.
    pub fn dt(&self) -> Self {
        let comps = self
            .comps
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let mut d = p.dt();
                d.add_assign(&p.scale(&rat_int(-(k as i64))));
                d
            })
            .collect();
        Self::from_components(comps)
    }

    /// Divide by `c e^{-t}` (shift `k -> k - 1`); the constant component
    /// must vanish. Turns `g` into an expression analytic in `c` at zero.
    pub fn div_c_exp(&self) -> Self {
        assert!(
            self.comps.first().map_or(true, ExpPoly::is_zero),
            "division by c e^-t needs a vanishing constant component"
        );
        if self.comps.len() <= 1 {
            return Self::zero();
        }
        Self::from_components(self.comps[1..].to_vec())
    }

    /// Evaluate at kernel values `env` and amplitude `c`.
    pub fn eval(&self, env: &KernelVals, c: &RInterval) -> RInterval {
        let mut acc = RInterval::zero();
        // Horner in the weight w = c e^{-t}
        let w = c.mul(&env.emt);
        for p in self.comps.iter().rev() {
            acc = acc.mul(&w).add(&p.eval(env));
        }
        acc
    }

    /// Evaluate the formal `c`-derivative `sum k c^{k-1} e^{-kt} P_k`.
    pub fn eval_dc(&self, env: &KernelVals, c: &RInterval) -> RInterval {
        let mut acc = RInterval::zero();
        for (k, p) in self.comps.iter().enumerate().skip(1) {
            let w = c.pow(k as u32 - 1).mul(&env.emt.pow(k as u32));
            acc = acc.add(&w.mul(&p.eval(env)).scale(&rat_int(k as i64)));
        }
        acc
    }
}

/// Kernel enclosures at a `t` argument (point or interval).
pub struct KernelVals {
    pub s_powers: SPowers,
    pub i0: RInterval,
    pub j0: RInterval,
    pub emt: RInterval,
}

// ---------------------------------------------------------------------------
// Builders for the far-field quantities
// ---------------------------------------------------------------------------

/// `q0`: components `2 s I` at order 1 and `2J - I - I^2` at order 2.
pub fn q0_series() -> CSeries {
    let p1 = ExpPoly::term(1, 0, Laurent::term(1, rat_int(2)));
    let mut p2 = ExpPoly::term(0, 1, Laurent::term(0, rat_int(2)));
    p2.add_assign(&ExpPoly::term(1, 0, Laurent::term(0, rat_int(-1))));
    p2.add_assign(&ExpPoly::term(2, 0, Laurent::term(0, rat_int(-1))));
    CSeries::from_components(vec![ExpPoly::zero(), p1, p2])
}

/// `B = -q0''/(2 sqrt(t)) + q0'/(4 t^{3/2}) - q0/(4 t^{5/2})`.
pub fn b_series() -> CSeries {
    let q0 = q0_series();
    let q1 = q0.dt();
    let q2 = q1.dt();
    let mut b = q2.scale_laurent(&Laurent::term(-1, rat(-1, 2)));
    b = b.add(&q1.scale_laurent(&Laurent::term(-3, rat(1, 4))));
    b.add(&q0.scale_laurent(&Laurent::term(-5, rat(-1, 4))))
}

/// `g = -2 t B = sqrt(t) q0'' - q0'/(2 sqrt(t)) + q0/(2 t^{3/2})`; this is
/// `e^{-t}`-times the curvature factor of the outer solution:
/// `F'' = sqrt(2) a^{3/2} g(t)`.
pub fn g_series() -> CSeries {
    b_series().scale_laurent(&Laurent::term(2, rat_int(-2)))
}

/// `V = e^t g / c`, analytic in `c` at zero; its constant component is
/// exactly 1.
pub fn v_series() -> CSeries {
    g_series().div_c_exp()
}

/// Far-field residual of the two-term profile: substituting `q0` into the
/// profile equation leaves
/// `R = q0''' + (1 + q0/(2t)) q0''
///      + (-1/(2t) + 3/(4t^2) - q0/(4t^2)) q0'
///      + (1/(2t^2) - 3/(4t^3)) q0 + q0^2/(4t^3)`.
/// Orders 1 and 2 cancel exactly; the series starts at order 3.
pub fn residual_series() -> CSeries {
    let q0 = q0_series();
    let q1 = q0.dt();
    let q2 = q1.dt();
    let q3 = q2.dt();

    let mut r = q3.clone();
    r = r.add(&q2);
    r = r.add(&q0.mul(&q2).scale_laurent(&Laurent::term(-2, rat(1, 2))));
    let mut lin1 = Laurent::term(-2, rat(-1, 2));
    lin1.add_assign(&Laurent::term(-4, rat(3, 4)));
    r = r.add(&q1.scale_laurent(&lin1));
    r = r.add(&q0.mul(&q1).scale_laurent(&Laurent::term(-4, rat(-1, 4))));
    let mut lin0 = Laurent::term(-4, rat(1, 2));
    lin0.add_assign(&Laurent::term(-6, rat(-3, 4)));
    r = r.add(&q0.scale_laurent(&lin0));
    r = r.add(&q0.mul(&q0).scale_laurent(&Laurent::term(-6, rat(1, 4))));
    r
}

// ---------------------------------------------------------------------------
// Asymptotic Laurent bounds (for tail estimates beyond a cap)
// ---------------------------------------------------------------------------

/// Laurent polynomial with interval coefficients: power of `s` -> enclosure.
pub type IntervalLaurent = BTreeMap<i64, RInterval>;

fn il_add_assign(a: &mut IntervalLaurent, b: &IntervalLaurent) {
    for (p, c) in b {
        let e = a.entry(*p).or_insert_with(RInterval::zero);
        *e = e.add(c);
    }
}

fn il_mul(a: &IntervalLaurent, b: &IntervalLaurent) -> IntervalLaurent {
    let mut out = IntervalLaurent::new();
    for (p1, c1) in a {
        for (p2, c2) in b {
            let e = out.entry(p1 + p2).or_insert_with(RInterval::zero);
            *e = e.add(&c1.mul(c2));
        }
    }
    out
}

fn il_pow(base: &IntervalLaurent, n: u8) -> IntervalLaurent {
    let mut acc: IntervalLaurent =
        [(0i64, RInterval::one())].into_iter().collect();
    for _ in 0..n {
        acc = il_mul(&acc, base);
    }
    acc
}

/// `I0(t) = 1/(2t) - 3/(4t^2) + 15/(8t^3) + d`, `|d| <= 105/(16 t^4)`,
/// valid for all `t > 0` (Taylor remainder of `(1+s)^{-3/2}` under the
/// Laplace integral representation).
fn i0_asymptotic() -> IntervalLaurent {
    [
        (-2i64, RInterval::point(rat(1, 2))),
        (-4, RInterval::point(rat(-3, 4))),
        (-6, RInterval::point(rat(15, 8))),
        (-8, RInterval::new(rat(-105, 16), rat(105, 16))),
    ]
    .into_iter()
    .collect()
}

/// Same expansion at `2t` for `J0`.
fn j0_asymptotic() -> IntervalLaurent {
    [
        (-2i64, RInterval::point(rat(1, 4))),
        (-4, RInterval::point(rat(-3, 16))),
        (-6, RInterval::point(rat(15, 64))),
        (-8, RInterval::new(rat(-105, 256), rat(105, 256))),
    ]
    .into_iter()
    .collect()
}

/// Replace the kernels by their asymptotic expansions with certified
/// remainders, producing a Laurent polynomial in `s` with interval
/// coefficients valid for every `t > 0`.
pub fn asymptotic_laurent(p: &ExpPoly) -> IntervalLaurent {
    let i_asym = i0_asymptotic();
    let j_asym = j0_asymptotic();
    let mut out = IntervalLaurent::new();
    for ((i, j), l) in p.iter() {
        let mut term = il_pow(&i_asym, *i);
        if *j > 0 {
            term = il_mul(&term, &il_pow(&j_asym, *j));
        }
        let mut lc = IntervalLaurent::new();
        for (pow, c) in l.iter() {
            lc.insert(*pow, RInterval::point(c.clone()));
        }
        il_add_assign(&mut out, &il_mul(&term, &lc));
    }
    out
}
