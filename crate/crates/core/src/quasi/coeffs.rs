//! Compiled-in coefficient data for the inner quasi-solution.
//!
//! `P_NUMER_DENOM[i][j]` is the published coefficient multiplying
//! `beta^j y^i / ((i+1)(i+2)(i+3))` in the fitted cubic-integrated profile
//! polynomial; the nominal far-field parameter quadratics live alongside.

use crate::exact::bipoly::BiPoly;
use crate::exact::rational::{rat, rat_int, Rational};

/// `(numerator, denominator)` of `p[i][j]`, `i = 0..=13`, `j = 0..=5`.
pub const P_NUMER_DENOM: [[(i64, i64); 6]; 14] = [
    [
        (29589, 493148),
        (-9845, 82042),
        (-274, 40132715),
        (241, 11270972),
        (-422, 16143111),
        (308, 28130517),
    ],
    [
        (15185, 1706376),
        (-17096, 473735),
        (36599, 968864),
        (-19441, 3418968),
        (6287, 892276),
        (-10649, 3570017),
    ],
    [
        (-203116, 65155),
        (-3042, 970153),
        (-15440, 235863),
        (21239, 89058),
        (-114887, 372923),
        (5024, 37953),
    ],
    [
        (-72804, 75433),
        (239497, 147253),
        (213995, 192583),
        (-110079, 28121),
        (1322305, 259224),
        (-80021, 35684),
    ],
    [
        (106800, 43663),
        (-112122, 86717),
        (-155285, 19732),
        (525204, 17519),
        (-2029749, 49136),
        (391166, 20741),
    ],
    [
        (-387344, 32609),
        (77473, 4402),
        (304475, 15867),
        (-3049469, 26658),
        (445437, 2501),
        (-568723, 6514),
    ],
    [
        (3084825, 27611),
        (-1006071, 9319),
        (171511, 4286),
        (3723623, 24721),
        (-1097313, 2915),
        (1207261, 5453),
    ],
    [
        (-2254258, 5883),
        (3595213, 9561),
        (-1049674, 2379),
        (2081034, 4399),
        (1013365, 19943),
        (-1249672, 5459),
    ],
    [
        (1915077, 2126),
        (-3165632, 3527),
        (5196992, 3543),
        (-3429722, 1327),
        (3839299, 2153),
        (-2755673, 9363),
    ],
    [
        (-2860297, 1927),
        (3706169, 2627),
        (-5245388, 1929),
        (1764108, 317),
        (-6522639, 1366),
        (1111693, 833),
    ],
    [
        (281944, 179),
        (-3174435, 2257),
        (5003871, 1621),
        (-7633149, 1117),
        (6098777, 958),
        (-9281007, 4606),
    ],
    [
        (-2506157, 2481),
        (2704059, 3157),
        (-8285683, 3873),
        (6455381, 1295),
        (-4186545, 863),
        (3106817, 1912),
    ],
    [
        (2072736, 5813),
        (-1425478, 4881),
        (3778762, 4529),
        (-980233, 486),
        (3100252, 1537),
        (-4063417, 5821),
    ],
    [
        (-1051227, 19699),
        (745495, 17357),
        (-1839247, 13071),
        (1844827, 5276),
        (-2241089, 6290),
        (3813801, 30274),
    ],
];

/// The profile polynomial `P(y, beta)` with the cubic-integration
/// denominators `(i+1)(i+2)(i+3)` folded in.
pub fn profile_poly() -> BiPoly {
    let rows = P_NUMER_DENOM
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let i = i as i64;
            let denom = (i + 1) * (i + 2) * (i + 3);
            row.iter()
                .map(|&(n, d)| rat(n, d) / rat_int(denom))
                .collect()
        })
        .collect();
    BiPoly::from_rows(rows)
}

/// Coefficients `(constant, linear, quadratic)` of the nominal far-field
/// slope `a0(alpha)`.
pub fn a0_coeffs() -> [Rational; 3] {
    [rat(3221, 1946), rat(-797, 603), rat(176, 289)]
}

/// Coefficients of the nominal far-field intercept `b0(alpha)`.
pub fn b0_coeffs() -> [Rational; 3] {
    [rat(-2763, 1765), rat(761, 284), rat(-194, 237)]
}

/// Coefficients of the nominal far-field amplitude `c0(alpha)`.
pub fn c0_coeffs() -> [Rational; 3] {
    [rat(377, 1613), rat(174, 1357), rat(937, 6822)]
}

/// Trust-region radius `rho0 = 5e-4` for `(a, b, c)`.
pub fn rho0() -> Rational {
    rat(5, 10_000)
}

/// Admissible-parameter interval endpoints for `alpha`: `[-3/50, 3/50]`.
pub fn alpha_lo() -> Rational {
    rat(-3, 50)
}

pub fn alpha_hi() -> Rational {
    rat(3, 50)
}

pub fn eval_quadratic(c: &[Rational; 3], alpha: &Rational) -> Rational {
    &c[0] + (&c[1] + &c[2] * alpha) * alpha
}
