//! Upper bound on the degree of a conic bundle not lying on a cubic.
//!
//! Three cases, by the smallest degree of a hypersurface containing `S`:
//!
//! * not on a quintic, `d > 25`: the hyperplane section is a space curve not
//!   on a quintic surface, so `pi - 1 <= d^2/12 + d`;
//! * on a quintic but not a quartic, `d > 17`: `pi - 1 <= d^2/10 + d/2 - gamma`
//!   together with the cubic inequality in `chi(O_S)` and `gamma`;
//! * on a quartic, `d > 10`: the analogous quartic pair.
//!
//! Every case is closed by scanning `d` with exact rational arithmetic. The
//! scans stop at [`SCAN_LIMIT`]; tests check that a much larger limit gives
//! the same answers.

use serde::{Deserialize, Serialize};

use crate::bounds::{gp_bound, gp_residue};
use crate::numeric::{floor_rational, ratio, Rational};

/// Case 1 applies for `d > 25`.
pub const CASE1_THRESHOLD: i64 = 25;
/// Case 2 applies for `d > 17`.
pub const CASE2_THRESHOLD: i64 = 17;
/// Case 3 applies for `d > 10`.
pub const CASE3_THRESHOLD: i64 = 10;
/// Largest degree examined by the case scans.
pub const SCAN_LIMIT: i64 = 200;

/// `pi - 1 = d^2/8 - d/8 - 3 delta/4`, the sectional genus forced by the
/// double point formula.
pub fn pi_minus_one_from_double_point(d: i64, delta: Rational) -> Rational {
    ratio(d * d - d, 8) - delta * ratio(3, 4)
}

/// Largest `delta` allowed by `3d >= 4 delta`, as the rational `3d/4`.
pub fn delta_ceiling(d: i64) -> Rational {
    ratio(3 * d, 4)
}

/// Upper bound for `chi(O_S) = 1 - g`, obtained from the double point
/// formula by dropping the `-delta/8` term.
pub fn chi_upper_bound(d: i64) -> Rational {
    ratio(-d * d, 16) + ratio(9 * d, 16)
}

pub fn case1_feasible(d: i64) -> bool {
    let gp = gp_bound(d, 6).expect("s = 6 is supported");
    pi_minus_one_from_double_point(d, delta_ceiling(d)) <= gp
}

pub fn case1_max_degree() -> i64 {
    case1_max_degree_within(SCAN_LIMIT)
}

pub fn case1_max_degree_within(limit: i64) -> i64 {
    ((CASE1_THRESHOLD + 1)..=limit)
        .filter(|&d| case1_feasible(d))
        .max()
        .unwrap_or(CASE1_THRESHOLD)
}

/// Which hypersurface the cubic `chi`/`gamma` inequality belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypersurfaceCase {
    Quintic,
    Quartic,
}

impl HypersurfaceCase {
    pub fn modulus(self) -> i64 {
        match self {
            HypersurfaceCase::Quintic => 5,
            HypersurfaceCase::Quartic => 4,
        }
    }
}

/// The residue `r` and the largest admissible `gamma` at a degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDatum {
    pub case: HypersurfaceCase,
    pub d: i64,
    pub r: i64,
    pub gamma_max: i64,
}

impl GammaDatum {
    pub fn new(case: HypersurfaceCase, d: i64) -> Self {
        let bound = match case {
            HypersurfaceCase::Quintic => gamma_bound_quintic(d),
            HypersurfaceCase::Quartic => gamma_bound_quartic(d),
        };
        GammaDatum {
            case,
            d,
            r: gp_residue(d, case.modulus()),
            gamma_max: floor_rational(bound),
        }
    }

    /// `gamma` is a nonnegative integer, so a negative maximum rules the
    /// degree out.
    pub fn is_admissible(&self) -> bool {
        self.gamma_max >= 0
    }
}

/// Both sides of the cubic `chi`/`gamma` inequality, evaluated exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BFInequality {
    pub case_tag: HypersurfaceCase,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl BFInequality {
    /// Quintic: `d^3/150 - d/6 <= chi + gamma^2/2 + gamma (d/5 + 5/2)`.
    /// Quartic: `d^3/96 - d^2/16 - d/24 + 5/4 <= chi + gamma^2/2 + gamma (d/4 + 3/2)`.
    pub fn evaluate(case: HypersurfaceCase, d: i64, chi: Rational, gamma: Rational) -> Self {
        let (lhs, linear) = match case {
            HypersurfaceCase::Quintic => (
                ratio(d * d * d, 150) - ratio(d, 6),
                ratio(d, 5) + ratio(5, 2),
            ),
            HypersurfaceCase::Quartic => (
                ratio(d * d * d, 96) - ratio(d * d, 16) - ratio(d, 24) + ratio(5, 4),
                ratio(d, 4) + ratio(3, 2),
            ),
        };
        let rhs = chi + gamma * gamma * ratio(1, 2) + gamma * linear;
        BFInequality {
            case_tag: case,
            lhs,
            rhs,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.lhs <= self.rhs
    }
}

/// `gamma <= d (95 - 2d) / 80` in the quintic case.
pub fn gamma_bound_quintic(d: i64) -> Rational {
    ratio(d * (95 - 2 * d), 80)
}

/// `gamma <= 11d/16` in the quartic case.
pub fn gamma_bound_quartic(d: i64) -> Rational {
    ratio(11 * d, 16)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case2Analysis {
    pub a_priori_max: i64,
    pub gamma_max: i64,
    pub max_degree: i64,
}

/// Degrees over which the quintic `gamma` is maximised.
pub const CASE2_GAMMA_RANGE: (i64, i64) = (18, 47);

pub fn case2_feasible(d: i64, gamma: i64) -> bool {
    BFInequality::evaluate(
        HypersurfaceCase::Quintic,
        d,
        chi_upper_bound(d),
        Rational::from(gamma),
    )
    .is_feasible()
}

pub fn case2_analysis() -> Case2Analysis {
    case2_analysis_within(SCAN_LIMIT)
}

pub fn case2_analysis_within(limit: i64) -> Case2Analysis {
    let a_priori_max = ((CASE2_THRESHOLD + 1)..=limit)
        .filter(|&d| GammaDatum::new(HypersurfaceCase::Quintic, d).is_admissible())
        .max()
        .unwrap_or(CASE2_THRESHOLD);
    let (lo, hi) = CASE2_GAMMA_RANGE;
    let gamma_max = (lo..=hi)
        .map(|d| GammaDatum::new(HypersurfaceCase::Quintic, d).gamma_max)
        .max()
        .unwrap_or(0);
    let max_degree = (lo..=a_priori_max.min(hi))
        .filter(|&d| case2_feasible(d, gamma_max))
        .max()
        .unwrap_or(CASE2_THRESHOLD);
    Case2Analysis {
        a_priori_max,
        gamma_max,
        max_degree,
    }
}

/// `d^3/96 - 209 d^2/512 - 157 d/96 + 5/4`; case 3 needs this `<= 0`.
pub fn case3_polynomial(d: i64) -> Rational {
    ratio(d * d * d, 96) - ratio(209 * d * d, 512) - ratio(157 * d, 96) + ratio(5, 4)
}

/// `lhs - rhs` of the quartic inequality after substituting
/// `chi <= -d^2/16 + 9d/16` and `gamma <= 11d/16`. Agrees with
/// [`case3_polynomial`] identically.
pub fn case3_relaxed_gap(d: i64) -> Rational {
    let ineq = BFInequality::evaluate(
        HypersurfaceCase::Quartic,
        d,
        chi_upper_bound(d),
        gamma_bound_quartic(d),
    );
    ineq.lhs - ineq.rhs
}

pub fn case3_feasible(d: i64) -> bool {
    case3_polynomial(d) <= Rational::ZERO
}

pub fn case3_max_degree() -> i64 {
    case3_max_degree_within(SCAN_LIMIT)
}

pub fn case3_max_degree_within(limit: i64) -> i64 {
    ((CASE3_THRESHOLD + 1)..=limit)
        .filter(|&d| case3_feasible(d))
        .max()
        .unwrap_or(CASE3_THRESHOLD)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalBounds {
    pub d_max: i64,
    pub delta_max: i64,
}

impl GlobalBounds {
    /// The largest `delta` compatible with `3d >= 4 delta` at a given degree bound.
    pub fn from_degree_bound(d_max: i64) -> Self {
        GlobalBounds {
            d_max,
            delta_max: floor_rational(delta_ceiling(d_max)),
        }
    }
}

pub fn global_bounds() -> GlobalBounds {
    let d_max = [
        case1_max_degree(),
        case2_analysis().max_degree,
        case3_max_degree(),
        CASE1_THRESHOLD,
        CASE2_THRESHOLD,
        CASE3_THRESHOLD,
    ]
    .into_iter()
    .max()
    .expect("nonempty");
    GlobalBounds::from_degree_bound(d_max)
}
