//! Brute-force reference enumerations.
//!
//! Everything here scans raw integer boxes and evaluates the defining
//! formulas inline. Nothing calls into the library's solvers, so agreement
//! with the enumerators is a genuine cross-check.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Degrees scanned for roots of the double point formula.
pub const D_SCAN: i64 = 1000;
/// Genera scanned where the genus is not determined by the parameters.
pub const G_SCAN: i64 = 1000;
pub const D_MAX: i64 = 42;

/// `(d, delta, g)` plus a tag describing where it came from.
pub type Point = (i64, i64, i64, String);

pub fn double_point_holds(d: i64, delta: i64, g: i64) -> bool {
    d * d - 9 * d - 8 * (2 * g - 2) + 2 * delta == 0
}

/// Positive `d` in the scan box solving the double point formula.
pub fn raw_degrees(delta: i64, g: i64) -> Vec<i64> {
    (1..=D_SCAN)
        .filter(|&d| double_point_holds(d, delta, g))
        .collect()
}

/// `g` from `2g - 2`, if integral and nonnegative.
pub fn genus_of(twice_minus_two: i64) -> Option<i64> {
    (twice_minus_two % 2 == 0 && twice_minus_two / 2 + 1 >= 0).then_some(twice_minus_two / 2 + 1)
}

/// A named filter predicate.
pub type NamedFilter = (&'static str, Box<dyn Fn(&Point) -> bool>);

/// The standard filters, applied one at a time in a fixed order.
pub fn standard_filters() -> Vec<NamedFilter> {
    vec![
        ("singular-fibers", Box::new(|p: &Point| 3 * p.0 >= 4 * p.1)),
        ("degree-bound", Box::new(|p: &Point| p.0 <= D_MAX)),
        ("nondegenerate", Box::new(|p: &Point| p.1 >= 2)),
        ("linear-normality", Box::new(|p: &Point| p.1 <= 2 + 3 * p.2)),
        (
            "genus-lower-bound",
            Box::new(|p: &Point| p.1 <= 3 || 72 * (p.2 - 1) >= 8 * p.1 * p.1 - 45 * p.1),
        ),
    ]
}

/// Applies filters in sequence, returning every intermediate stage; the last
/// entry is the fixpoint.
pub fn filter_stages(
    raw: Vec<Point>,
    filters: &[NamedFilter],
) -> Vec<(&'static str, BTreeSet<Point>)> {
    let mut stages = vec![("raw", raw.into_iter().collect::<BTreeSet<_>>())];
    for (name, keep) in filters {
        let next = stages
            .last()
            .unwrap()
            .1
            .iter()
            .filter(|p| keep(p))
            .cloned()
            .collect();
        stages.push((name, next));
    }
    stages
}

pub fn fixpoint(raw: Vec<Point>) -> BTreeSet<Point> {
    filter_stages(raw, &standard_filters()).pop().unwrap().1
}

/// Scroll classes: cubic (`e = 3`, `beta >= -alpha`) or quartic (`e = 4`,
/// `beta >= -2 alpha`), raw box `0 <= alpha <= delta_max`,
/// `-2 alpha <= beta <= delta_max`.
pub fn raw_scroll(e: i64, delta_min: i64, delta_max: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for alpha in 0..=delta_max {
        for beta in -2 * alpha..=delta_max {
            let delta = e * alpha + beta;
            if delta < delta_min || delta > delta_max {
                continue;
            }
            let twice = if e == 3 {
                if beta < -alpha {
                    continue;
                }
                3 * alpha * alpha - 5 * alpha + 2 * alpha * beta - 2 * beta
            } else {
                4 * alpha * alpha - 6 * alpha + 2 * alpha * beta - 2 * beta
            };
            let Some(g) = genus_of(twice) else { continue };
            for d in raw_degrees(delta, g) {
                out.push((d, delta, g, format!("{alpha},{beta}")));
            }
        }
    }
    out
}

pub fn raw_veronese(delta_max: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for a in 2..=delta_max / 2 {
        let Some(g) = genus_of(a * (a - 3)) else {
            continue;
        };
        for d in raw_degrees(2 * a, g) {
            out.push((d, 2 * a, g, format!("a={a}")));
        }
    }
    out
}

pub fn raw_elliptic_cone(delta_max: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for alpha in 1..=delta_max {
        for (delta, twice, tag) in [
            (4 * alpha, 4 * alpha * (alpha - 1), "off-vertex"),
            (4 * alpha + 1, 2 * (2 * alpha + 1) * (alpha - 1), "vertex"),
        ] {
            if delta > delta_max {
                continue;
            }
            let Some(g) = genus_of(twice) else { continue };
            for d in raw_degrees(delta, g) {
                out.push((d, delta, g, format!("alpha={alpha},{tag}")));
            }
        }
    }
    out
}

pub fn raw_p5_span(delta_max: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for delta in 5..=delta_max {
        // floor((delta^2 - 5 delta + 10) / 10); the numerator is positive.
        let g_max = (delta * delta - 5 * delta + 10) / 10;
        for g in 2..=g_max {
            for d in raw_degrees(delta, g) {
                out.push((d, delta, g, String::new()));
            }
        }
    }
    out
}

pub fn raw_endgame() -> Vec<Point> {
    let mut out = Vec::new();
    for g in 0..=1 {
        for delta in 2..=5 {
            for d in raw_degrees(delta, g) {
                out.push((d, delta, g, String::new()));
            }
        }
    }
    out
}

/// Castelnuovo's bound in P^3 by the closed forms for even and odd degree.
pub fn space_curve_max_genus(delta: i64) -> i64 {
    if delta % 2 == 0 {
        (delta - 2) * (delta - 2) / 4
    } else {
        (delta - 1) * (delta - 3) / 4
    }
}

/// Cone case: `d = 2 delta + parity`, genus scanned rather than solved.
pub fn cone_fixpoint(parity: i64, delta_max: i64) -> BTreeSet<Point> {
    let mut out = BTreeSet::new();
    for delta in 3..=delta_max {
        let d = 2 * delta + parity;
        for g in 0..=G_SCAN {
            if !double_point_holds(d, delta, g) {
                continue;
            }
            let keep = 3 * d >= 4 * delta
                && delta <= 2 + 3 * g
                && (delta <= 3 || 72 * (g - 1) >= 8 * delta * delta - 45 * delta)
                && g <= space_curve_max_genus(delta)
                && g <= (delta - 1) * (delta - 2) / 2;
            if keep {
                out.insert((d, delta, g, String::new()));
            }
        }
    }
    out
}

/// Strips tags for comparison with enumerator output.
pub fn triples(points: &BTreeSet<Point>) -> BTreeSet<(i64, i64, i64)> {
    points.iter().map(|p| (p.0, p.1, p.2)).collect()
}
