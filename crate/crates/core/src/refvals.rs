//! Published reference values that the verification suites reproduce.
//!
//! Each constant is quoted exactly as displayed in the published
//! certification (5 significant digits unless noted); comparisons against
//! freshly computed bounds use the comparators in [`crate::report`].

use crate::exact::rational::{rat_dec, Rational};

/// Inner-region error bounds on `[0, 5/2]`: `(|E|, |E'|, |E''|)`.
pub fn inner_bounds() -> [Rational; 3] {
    [rat_dec("7.4947e-6"), rat_dec("3.7474e-6"), rat_dec("4.8916e-6")]
}

/// Far-region bound coefficients: `|E''| <= C2 t^-1 e^-3t`,
/// `|E'| <= C1 t^-3/2 e^-3t`, `|E| <= C0 t^-2 e^-3t`.
pub fn outer_coeff_f2() -> Rational {
    rat_dec("5.4901e-4")
}

pub fn outer_coeff_f1() -> Rational {
    rat_dec("9.8179e-5")
}

pub fn outer_coeff_f() -> Rational {
    rat_dec("1.7558e-5")
}

/// Ceiling on the weighted norm of the far-field correction driver.
pub fn h_norm_ceiling() -> Rational {
    rat_dec("1.6955e-4")
}

/// Contraction margin reserved inside the far-field ceiling.
pub fn far_contraction_eps() -> Rational {
    rat_dec("0.03")
}

/// Matching: initial-residual ceiling and contraction-constant ceiling.
pub fn matching_residual_ceiling() -> Rational {
    rat_dec("4.1443e-5")
}

pub fn matching_beta_ceiling() -> Rational {
    rat_dec("0.8381")
}

/// Interface image range: `t(5/2) in (tm_low, tm_high)` uniformly over the
/// trust region, 6 decimals.
pub fn tm_low() -> Rational {
    rat_dec("1.962257")
}

pub fn tm_high() -> Rational {
    rat_dec("2.043219")
}

/// Subinterval split of `[0, 5/2]` used throughout: edges of I1..I4.
pub fn subinterval_edges() -> [Rational; 5] {
    [
        rat_dec("0"),
        rat_dec("1.25"),
        rat_dec("1.4"),
        rat_dec("2"),
        rat_dec("2.5"),
    ]
}

/// Residual range pairs `(lower, upper)` on I1..I4 from the local Taylor
/// method.
pub fn residual_taylor_pairs() -> [(Rational, Rational); 4] {
    [
        (rat_dec("-4.9058e-7"), rat_dec("5.1794e-7")),
        (rat_dec("-8.4748e-8"), rat_dec("7.5413e-7")),
        (rat_dec("1.1011e-7"), rat_dec("1.3040e-6")),
        (rat_dec("4.9134e-7"), rat_dec("2.9344e-6")),
    ]
}

/// Residual sup-norm bounds from the Chebyshev projection: global and
/// per-subregion.
pub fn residual_cheb_global() -> Rational {
    rat_dec("3.5551e-6")
}

pub fn residual_cheb_subregions() -> [Rational; 4] {
    [
        rat_dec("5.3776e-7"),
        rat_dec("9.6144e-7"),
        rat_dec("1.5004e-6"),
        rat_dec("2.9505e-6"),
    ]
}

/// Range tables `(lower, upper)` for the profile and its first two
/// derivatives on I1..I4 (4 decimals).
pub fn profile_ranges() -> [(Rational, Rational); 4] {
    [
        (rat_dec("-0.0601"), rat_dec("0.8004")),
        (rat_dec("0.7157"), rat_dec("0.9753")),
        (rat_dec("0.9039"), rat_dec("1.7938")),
        (rat_dec("1.7819"), rat_dec("2.6220")),
    ]
}

pub fn slope_ranges() -> [(Rational, Rational); 4] {
    [
        (rat_dec("-0.0001"), rat_dec("1.1990")),
        (rat_dec("1.1179"), rat_dec("1.3091")),
        (rat_dec("1.2134"), rat_dec("1.6066")),
        (rat_dec("1.4660"), rat_dec("1.7036")),
    ]
}

pub fn curvature_ranges() -> [(Rational, Rational); 4] {
    [
        (rat_dec("0.6770"), rat_dec("1.0144")),
        (rat_dec("0.5927"), rat_dec("0.7778")),
        (rat_dec("0.2599"), rat_dec("0.6890")),
        (rat_dec("0.0881"), rat_dec("0.3099")),
    ]
}

/// Sign-change brackets for the auxiliary weights `G1`, `G2`, `G3`.
pub fn g_brackets() -> [(Rational, Rational); 3] {
    [
        (rat_dec("1.15"), rat_dec("1.3")),
        (rat_dec("0.85"), rat_dec("1.05")),
        (rat_dec("1.25"), rat_dec("1.4")),
    ]
}

/// Displayed values of `G3` at the bracket ends, uniform in the parameter.
pub fn g3_at_bracket() -> [(Rational, Rational); 2] {
    [
        (rat_dec("0.0781"), rat_dec("0.3463")),
        (rat_dec("-0.3564"), rat_dec("-0.1190")),
    ]
}

/// Energy-method suprema rows `(M, M1, M2, M3)` on I1..I4.
pub fn suprema_rows() -> [[Rational; 4]; 4] {
    [
        [
            rat_dec("3.1930"),
            rat_dec("3.0482"),
            rat_dec("2.1323"),
            rat_dec("1.5886"),
        ],
        [
            rat_dec("0.3912"),
            rat_dec("0.3323"),
            rat_dec("0.0284"),
            rat_dec("1.0001"),
        ],
        [
            rat_dec("0.7762"),
            rat_dec("0.5465"),
            rat_dec("0.1701"),
            rat_dec("1.0020"),
        ],
        [
            rat_dec("0.7077"),
            rat_dec("0.3120"),
            rat_dec("0.0775"),
            rat_dec("1.0008"),
        ],
    ]
}

/// Error-chain table rows: `(B0, eps, col_a, col_b, col_c)` where the three
/// columns are printed under the headings `|E|`, `|E'|`, `|E''|`.
pub fn chain_rows() -> [[Rational; 5]; 4] {
    [
        [
            rat_dec("1.6538e-6"),
            rat_dec("5e-6"),
            rat_dec("1.6538e-6"),
            rat_dec("2.0673e-6"),
            rat_dec("1.2921e-6"),
        ],
        [
            rat_dec("2.4371e-6"),
            rat_dec("7e-7"),
            rat_dec("2.4371e-6"),
            rat_dec("3.6556e-7"),
            rat_dec("1.6296e-6"),
        ],
        [
            rat_dec("4.3873e-6"),
            rat_dec("3e-6"),
            rat_dec("4.3873e-6"),
            rat_dec("2.6324e-6"),
            rat_dec("2.6386e-6"),
        ],
        [
            rat_dec("7.4947e-6"),
            rat_dec("4e-6"),
            rat_dec("7.4947e-6"),
            rat_dec("3.7474e-6"),
            rat_dec("4.8916e-6"),
        ],
    ]
}

/// Per-interval contraction slack values.
pub fn chain_eps() -> [Rational; 4] {
    [
        rat_dec("5e-6"),
        rat_dec("7e-7"),
        rat_dec("3e-6"),
        rat_dec("4e-6"),
    ]
}

/// Classical wall stress at `alpha = 0` for this normalization.
pub fn wall_stress_zero() -> Rational {
    rat_dec("0.46960")
}

/// Far-field slope at `alpha = 0` (6 digits).
pub fn slope_zero() -> Rational {
    rat_dec("1.65519")
}
