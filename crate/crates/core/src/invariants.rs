//! Numerical invariants of a conic bundle `S` in P^4 and the relations tying
//! them together.
//!
//! Notation: `d` is the degree of `S`, `delta` the degree of the
//! hypersurface `V` swept out by the planes of the conics (equivalently the
//! degree of the base curve in the Grassmannian), `g` the genus of that base
//! curve and `pi` the sectional genus of `S`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{integer_roots_monic_quadratic, Rational};

/// Below this, `V` is a hyperplane and `S` would be degenerate.
pub const MIN_NONDEGENERATE_DELTA: i64 = 2;

/// Hypersurfaces of degree at most this are handled by the classification of
/// surfaces on quadrics and cubics rather than by computation.
pub const LOW_DEGREE_HYPERSURFACE_MAX: i64 = 3;

/// `pi` from `d`, `g`, `delta` via the adjunction relation
/// `pi - 1 = d + 2g - 2 - delta`.
pub fn sectional_genus(d: i64, g: i64, delta: i64) -> i64 {
    1 + d + 2 * g - 2 - delta
}

/// `d^2 - 9d - 8(2g - 2) + 2 delta`; zero iff the double point formula holds.
pub fn double_point_residual(d: i64, g: i64, delta: i64) -> i64 {
    d * d - 9 * d - 8 * (2 * g - 2) + 2 * delta
}

/// `3d - 4 delta`, the number of singular points of the fibration. A conic
/// bundle needs this to be nonnegative.
pub fn singular_fiber_count(d: i64, delta: i64) -> i64 {
    3 * d - 4 * delta
}

pub fn has_nonnegative_singular_fibers(d: i64, delta: i64) -> bool {
    singular_fiber_count(d, delta) >= 0
}

/// Linear normality of the plane bundle: `delta <= 2 + 3g`.
pub fn check_linear_normality(g: i64, delta: i64) -> bool {
    delta <= 2 + 3 * g
}

/// `delta <= 3` or `g - 1 >= delta^2/9 - 5 delta/8`, compared as
/// `72(g - 1) >= 8 delta^2 - 45 delta`.
pub fn check_genus_lower_bound(g: i64, delta: i64) -> bool {
    delta <= LOW_DEGREE_HYPERSURFACE_MAX || 72 * (g - 1) >= 8 * delta * delta - 45 * delta
}

/// Positive degrees `d` solving the double point formula for the given base
/// curve, subject to `3d >= 4 delta` and an optional upper bound.
pub fn solve_degree(g: i64, delta: i64, d_max: Option<i64>) -> Result<BTreeSet<i64>> {
    // d^2 - 9d + (16 - 16g + 2 delta) = 0
    let c = 16 - 16 * g + 2 * delta;
    let roots = integer_roots_monic_quadratic(Rational::from(-9), Rational::from(c))?;
    Ok(roots
        .into_iter()
        .filter(|&d| d > 0)
        .filter(|&d| has_nonnegative_singular_fibers(d, delta))
        .filter(|&d| d_max.is_none_or(|m| d <= m))
        .collect())
}

/// `chi(O_S) = 1 - g` for a conic bundle over a genus `g` curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCharacteristic {
    pub chi: i64,
}

impl EulerCharacteristic {
    pub fn of_conic_bundle(g: i64) -> Self {
        EulerCharacteristic { chi: 1 - g }
    }
}

/// A tuple `(d, delta, g, pi)` satisfying the conic bundle relations.
///
/// Construction checks `3d >= 4 delta`, the sectional genus relation, the
/// double point formula and its consequence `8(pi - 1) = d^2 - d - 6 delta`.
/// Linear normality is a separate filter and is exposed through
/// [`ConicBundleInvariants::is_linearly_normal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConicBundleInvariants {
    d: i64,
    delta: i64,
    g: i64,
    pi: i64,
}

impl ConicBundleInvariants {
    pub fn new(d: i64, delta: i64, g: i64, pi: i64) -> Result<Self> {
        let fail = |what: &str| {
            Err(Error::InvariantViolated(format!(
                "(d, delta, g, pi) = ({d}, {delta}, {g}, {pi}): {what}"
            )))
        };
        if d < 1 || delta < 1 || g < 0 {
            return fail("d and delta must be positive and g nonnegative");
        }
        if !has_nonnegative_singular_fibers(d, delta) {
            return fail("3d < 4 delta");
        }
        if pi != sectional_genus(d, g, delta) {
            return fail("pi - 1 != d + 2g - 2 - delta");
        }
        if double_point_residual(d, g, delta) != 0 {
            return fail("double point formula fails");
        }
        if 8 * (pi - 1) != d * d - d - 6 * delta {
            return fail("8(pi - 1) != d^2 - d - 6 delta");
        }
        Ok(ConicBundleInvariants { d, delta, g, pi })
    }

    /// Completes `(d, delta, g)` with the sectional genus and validates.
    pub fn from_degrees(d: i64, delta: i64, g: i64) -> Result<Self> {
        Self::new(d, delta, g, sectional_genus(d, g, delta))
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn pi(&self) -> i64 {
        self.pi
    }

    pub fn is_linearly_normal(&self) -> bool {
        check_linear_normality(self.g, self.delta)
    }

    pub fn euler_characteristic(&self) -> EulerCharacteristic {
        EulerCharacteristic::of_conic_bundle(self.g)
    }
}
