//! Intersection numbers on the sublattice of `Pic(S)` spanned by the
//! hyperplane class `H` and the fibre class `f`.
//!
//! The canonical class is only ever needed through `K.H` and `K.f`, so it is
//! kept as a linear functional on the sublattice instead of a coordinate
//! pair. `Pic(S)` may be larger than the span of `H` and `f`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::castelnuovo_bound;
use crate::error::{Error, Result};
use crate::numeric::{ratio, Rational};

/// `H^2 = d`, `H.f = 2`, `f^2 = 0`, `K.H = 2 pi - 2 - d`, `K.f = -2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceLattice {
    pub d: i64,
    pub pi: i64,
}

/// `a H + b f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    pub const HYPERPLANE: DivisorClass = DivisorClass { a: 1, b: 0 };
    pub const FIBER: DivisorClass = DivisorClass { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        DivisorClass { a, b }
    }

    pub fn scale(self, k: i64) -> Self {
        DivisorClass::new(k * self.a, k * self.b)
    }
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl std::ops::Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}H{:+}f", self.a, self.b)
    }
}

impl SurfaceLattice {
    pub fn new(d: i64, pi: i64) -> Self {
        SurfaceLattice { d, pi }
    }

    pub fn intersect(&self, x: DivisorClass, y: DivisorClass) -> i64 {
        x.a * y.a * self.d + 2 * (x.a * y.b + x.b * y.a)
    }

    pub fn k_dot(&self, x: DivisorClass) -> i64 {
        x.a * (2 * self.pi - 2 - self.d) - 2 * x.b
    }

    /// Degree in P^4: `x.H`.
    pub fn degree(&self, x: DivisorClass) -> i64 {
        self.intersect(x, DivisorClass::HYPERPLANE)
    }

    /// `1 + (x^2 + K.x)/2` by adjunction. Not necessarily an integer for a
    /// formal class.
    pub fn arithmetic_genus(&self, x: DivisorClass) -> Rational {
        Rational::ONE + ratio(self.intersect(x, x) + self.k_dot(x), 2)
    }

    /// The curve left in a hyperplane section after removing `k` fibres,
    /// i.e. the class `H - k f`.
    pub fn residual_curve(&self, k: i64) -> Result<ResidualCurve> {
        if k < 0 || 2 * k > self.d {
            return Err(Error::OutOfRange(format!(
                "cannot remove {k} conics from a hyperplane section of degree {}",
                self.d
            )));
        }
        let class = DivisorClass::HYPERPLANE - DivisorClass::FIBER.scale(k);
        let genus = self.arithmetic_genus(class);
        let p_a = genus
            .to_integer()
            .ok_or_else(|| Error::NonIntegralGenus(genus.to_string()))?;
        Ok(ResidualCurve {
            degree: self.degree(class),
            p_a,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualCurve {
    pub degree: i64,
    pub p_a: i64,
}

/// True when an irreducible curve of this degree and arithmetic genus cannot
/// sit in a hyperplane P^3: its genus exceeds Castelnuovo's bound there.
pub fn residual_impossible(degree: i64, p_a: i64) -> Result<bool> {
    Ok(p_a > castelnuovo_bound(degree, 3)?)
}
