//! Genus bounds for projective curves.
//!
//! All bounds are returned exactly; callers that compare against an integer
//! genus take the floor themselves.

use crate::error::{Error, Result};
use crate::numeric::{ratio, Rational};

/// `m` and `epsilon` in Castelnuovo's bound: `delta - 1 = m(r - 1) + epsilon`
/// with `0 <= epsilon <= r - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CastelnuovoAuxiliaries {
    pub m: i64,
    pub epsilon: i64,
}

impl CastelnuovoAuxiliaries {
    pub fn new(delta: i64, ambient: i64) -> Result<Self> {
        if ambient < 2 || delta < ambient {
            return Err(Error::DegenerateSpan { delta, ambient });
        }
        let m = (delta - 1) / (ambient - 1);
        Ok(CastelnuovoAuxiliaries {
            m,
            epsilon: delta - 1 - m * (ambient - 1),
        })
    }
}

/// Maximal genus of a nondegenerate curve of degree `delta` in P^`ambient`.
pub fn castelnuovo_bound(delta: i64, ambient: i64) -> Result<i64> {
    let CastelnuovoAuxiliaries { m, epsilon } = CastelnuovoAuxiliaries::new(delta, ambient)?;
    Ok(m * (m - 1) / 2 * (ambient - 1) + m * epsilon)
}

/// `(delta^2 - 7 delta + 12) / 10`: the genus bound in P^6 (meaningful for
/// `delta >= 6`).
pub fn harris_p6_bound(delta: i64) -> Rational {
    ratio(delta * delta - 7 * delta + 12, 10)
}

/// `(delta^2 - 5 delta + 10) / 10`: the genus bound for curves spanning P^5
/// and not lying on a surface of degree 4 (meaningful for `delta >= 5`).
pub fn harris_p5_bound(delta: i64) -> Rational {
    ratio(delta * delta - 5 * delta + 10, 10)
}

/// The residue `0 <= r < s` with `d + r = 0 mod s`.
pub fn gp_residue(d: i64, s: i64) -> i64 {
    (-d).rem_euclid(s)
}

/// Gruson-Peskine bound on `pi - 1` for a space curve of degree `d` not lying
/// on a surface of degree less than `s`.
pub fn gp_bound(d: i64, s: i64) -> Result<Rational> {
    match s {
        6 => Ok(ratio(d * d, 12) + d),
        5 => {
            let r = gp_residue(d, 5);
            Ok(ratio(d * d, 10) + ratio(d, 2) - ratio(2 * r * (5 - r), 5))
        }
        4 => {
            let r = gp_residue(d, 4);
            Ok(ratio(d * d, 8) - ratio(3 * r * (4 - r), 8))
        }
        _ => Err(Error::UnsupportedSurfaceDegree(s)),
    }
}

/// Arithmetic genus of a smooth plane curve of degree `delta`.
pub fn plane_curve_genus(delta: i64) -> i64 {
    (delta - 1) * (delta - 2) / 2
}
