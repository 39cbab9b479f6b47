//! Exhaustive enumeration of the numerical cases.
//!
//! Each geometric branch (the base curve on a cubic scroll, on a quartic
//! scroll, on a Veronese surface, on a cone over an elliptic quartic, `V` a
//! cone, a curve spanning P^5) reduces to a finite search over integer
//! parameters. For every parameter point the genus of the base curve is
//! computed, then the double point formula is solved for `d` and the
//! remaining necessary conditions are applied in a fixed order. Each
//! enumeration records the first condition that eliminated every rejected
//! point, so the output says why a branch is empty and not only that it is.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{castelnuovo_bound, harris_p5_bound, plane_curve_genus};
use crate::error::{Error, Result};
use crate::invariants::{
    check_genus_lower_bound, check_linear_normality, has_nonnegative_singular_fibers, solve_degree,
    ConicBundleInvariants, MIN_NONDEGENERATE_DELTA,
};
use crate::numeric::{floor_rational, ratio, Rational};

/// Largest degree of a conic bundle not on a cubic.
pub const CERTIFIED_D_MAX: i64 = 42;
/// Largest `delta` compatible with [`CERTIFIED_D_MAX`].
pub const CERTIFIED_DELTA_MAX: i64 = 31;
/// Smallest `delta` not covered by the classification on quadrics and cubics.
pub const CERTIFIED_DELTA_MIN: i64 = 4;
/// Largest `delta` for which a curve spanning P^5 off a quartic surface
/// passes the P^5 genus comparison.
pub const P5_SPAN_DELTA_MAX: i64 = 11;
/// Smallest `delta` of a curve spanning P^5.
pub const P5_SPAN_DELTA_MIN: i64 = 5;
/// Smallest `delta` examined in the cone case.
pub const CONE_DELTA_MIN: i64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseId {
    Cone,
    CubicScroll,
    QuarticScroll,
    Veronese,
    EllipticCone,
    P5Span,
    Endgame,
}

impl CaseId {
    pub const ALL: [CaseId; 7] = [
        CaseId::Cone,
        CaseId::CubicScroll,
        CaseId::QuarticScroll,
        CaseId::Veronese,
        CaseId::EllipticCone,
        CaseId::P5Span,
        CaseId::Endgame,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::Cone => "cone",
            CaseId::CubicScroll => "cubic-scroll",
            CaseId::QuarticScroll => "quartic-scroll",
            CaseId::Veronese => "veronese",
            CaseId::EllipticCone => "elliptic-cone",
            CaseId::P5Span => "p5-span",
            CaseId::Endgame => "endgame",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown case {s:?}")))
    }
}

/// Cubic scroll in P^4 or rational quartic scroll in P^5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScrollKind {
    Cubic,
    Quartic,
}

impl ScrollKind {
    pub fn degree(self) -> i64 {
        match self {
            ScrollKind::Cubic => 3,
            ScrollKind::Quartic => 4,
        }
    }

    /// Lower bound on `beta` for an effective class `alpha E + beta F`.
    pub fn min_beta(self, alpha: i64) -> i64 {
        match self {
            ScrollKind::Cubic => -alpha,
            ScrollKind::Quartic => -2 * alpha,
        }
    }
}

/// Numerical class `alpha E + beta F` of the base curve on a scroll, with `E`
/// a hyperplane section and `F` a line of the ruling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ScrollCurveClass {
    pub scroll: ScrollKind,
    pub alpha: i64,
    pub beta: i64,
}

impl ScrollCurveClass {
    pub fn new(scroll: ScrollKind, alpha: i64, beta: i64) -> Result<Self> {
        let class = ScrollCurveClass {
            scroll,
            alpha,
            beta,
        };
        if alpha < 0 {
            return Err(Error::InvalidScrollClass(format!("{class}: alpha < 0")));
        }
        if beta < scroll.min_beta(alpha) {
            return Err(Error::InvalidScrollClass(format!(
                "{class}: beta < {}",
                scroll.min_beta(alpha)
            )));
        }
        if class.delta() < 1 {
            return Err(Error::InvalidScrollClass(format!("{class}: degree < 1")));
        }
        Ok(class)
    }

    pub fn delta(&self) -> i64 {
        self.scroll.degree() * self.alpha + self.beta
    }

    /// `2g - 2` by adjunction on the scroll.
    pub fn twice_genus_minus_two(&self) -> i64 {
        let (a, b) = (self.alpha, self.beta);
        match self.scroll {
            ScrollKind::Cubic => 3 * a * a - 5 * a + 2 * a * b - 2 * b,
            ScrollKind::Quartic => 4 * a * a - 6 * a + 2 * a * b - 2 * b,
        }
    }

    /// Number of conics cut out on `S` by a hyperplane through a line of the
    /// ruling: the intersection number of the curve with `F`, which is `alpha`.
    pub fn ruling_conics(&self) -> i64 {
        self.alpha
    }
}

impl fmt::Display for ScrollCurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = |c: i64, sym: &str| match c {
            1 => sym.to_string(),
            -1 => format!("-{sym}"),
            c => format!("{c}{sym}"),
        };
        match (self.alpha, self.beta) {
            (0, b) => write!(f, "{}", coeff(b, "F")),
            (a, 0) => write!(f, "{}", coeff(a, "E")),
            (a, b) if b > 0 => write!(f, "{}+{}", coeff(a, "E"), coeff(b, "F")),
            (a, b) => write!(f, "{}{}", coeff(a, "E"), coeff(b, "F")),
        }
    }
}

/// Genus of a smooth curve in the given class; may be non-integral or
/// negative for classes that carry no smooth curve.
pub fn scroll_genus(class: &ScrollCurveClass) -> Rational {
    Rational::ONE + ratio(class.twice_genus_minus_two(), 2)
}

/// `d = 2 delta` or `d = 2 delta + 1` when `V` is a cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConeBranch {
    TwiceDelta,
    TwiceDeltaPlusOne,
}

impl ConeBranch {
    pub fn degree(self, delta: i64) -> i64 {
        match self {
            ConeBranch::TwiceDelta => 2 * delta,
            ConeBranch::TwiceDeltaPlusOne => 2 * delta + 1,
        }
    }

    /// `2g - 2`: `delta^2/2 - 2 delta` or `delta^2/2 - 3 delta/2 - 1`.
    pub fn twice_genus_minus_two(self, delta: i64) -> Rational {
        match self {
            ConeBranch::TwiceDelta => ratio(delta * delta, 2) - 2 * delta,
            ConeBranch::TwiceDeltaPlusOne => {
                ratio(delta * delta, 2) - ratio(3 * delta, 2) - Rational::ONE
            }
        }
    }
}

/// Parameters that located a candidate inside its branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ClassData {
    Scroll(ScrollCurveClass),
    /// Plane curve of degree `a` embedded by conics.
    Veronese {
        a: i64,
    },
    /// On the cone over an elliptic quartic; `through_vertex` selects
    /// `delta = 4 alpha + 1` over `delta = 4 alpha`.
    EllipticCone {
        alpha: i64,
        through_vertex: bool,
    },
    Cone {
        branch: ConeBranch,
    },
}

/// One point of an enumeration that passed every filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CandidateSolution {
    pub d: i64,
    pub delta: i64,
    pub g: i64,
    pub pi: i64,
    pub provenance: CaseId,
    pub class_data: Option<ClassData>,
}

impl CandidateSolution {
    /// Checks every conic bundle relation, including linear normality.
    pub fn new(
        d: i64,
        delta: i64,
        g: i64,
        provenance: CaseId,
        class_data: Option<ClassData>,
    ) -> Result<Self> {
        let inv = ConicBundleInvariants::from_degrees(d, delta, g)?;
        if !inv.is_linearly_normal() {
            return Err(Error::InvariantViolated(format!(
                "delta = {delta} > 2 + 3g with g = {g}"
            )));
        }
        Ok(CandidateSolution {
            d,
            delta,
            g,
            pi: inv.pi(),
            provenance,
            class_data,
        })
    }

    pub fn invariants(&self) -> Result<ConicBundleInvariants> {
        ConicBundleInvariants::new(self.d, self.delta, self.g, self.pi)
    }

    /// `g <= 1`: handled together in the final step rather than by its branch.
    pub fn is_rational_or_elliptic(&self) -> bool {
        self.g <= 1
    }

    /// Found with a search range wider than the proven bounds.
    pub fn outside_certified_region(&self) -> bool {
        self.delta > CERTIFIED_DELTA_MAX || self.d > CERTIFIED_D_MAX
    }

    pub fn same_invariants(&self, other: &CandidateSolution) -> bool {
        (self.d, self.delta, self.g, self.pi) == (other.d, other.delta, other.g, other.pi)
    }
}

/// The condition that eliminated a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    /// `2g - 2` odd.
    NonIntegralGenus,
    NegativeGenus,
    /// No positive `d` with `3d >= 4 delta` solves the double point formula.
    NoDegree,
    /// `3d < 4 delta`.
    SingularFibers,
    /// `d` above the global degree bound.
    DegreeBound,
    Degenerate,
    LinearNormality,
    GenusLowerBound,
    /// Genus above Castelnuovo's bound for space curves.
    SpaceCurveGenus,
    PlaneCurveGenus,
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant serializes");
        f.write_str(s.as_str().expect("string"))
    }
}

/// Survivors of one enumeration plus a count of what eliminated the rest.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub survivors: Vec<CandidateSolution>,
    pub examined: u64,
    pub rejected: BTreeMap<Filter, u64>,
}

impl Enumeration {
    fn reject(&mut self, filter: Filter) {
        *self.rejected.entry(filter).or_default() += 1;
    }

    fn note(&mut self, outcome: std::result::Result<(), Filter>) {
        if let Err(filter) = outcome {
            self.reject(filter);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.survivors.is_empty()
    }
}

/// Integer genus from `2g - 2`, or the filter that kills it.
fn genus_from(twice_genus_minus_two: Rational) -> std::result::Result<i64, Filter> {
    let twice = twice_genus_minus_two
        .to_integer()
        .ok_or(Filter::NonIntegralGenus)?;
    if twice.rem_euclid(2) != 0 {
        return Err(Filter::NonIntegralGenus);
    }
    let g = twice / 2 + 1;
    if g < 0 {
        return Err(Filter::NegativeGenus);
    }
    Ok(g)
}

/// Solves for `d` and applies the standard necessary conditions, recording
/// survivors and rejections in `out`.
fn admit(
    out: &mut Enumeration,
    g: i64,
    delta: i64,
    provenance: CaseId,
    class_data: Option<ClassData>,
) -> Result<()> {
    let degrees = solve_degree(g, delta, None)?;
    if degrees.is_empty() {
        out.reject(Filter::NoDegree);
        return Ok(());
    }
    for d in degrees {
        let verdict = if d > CERTIFIED_D_MAX {
            Err(Filter::DegreeBound)
        } else if delta < MIN_NONDEGENERATE_DELTA {
            Err(Filter::Degenerate)
        } else if !check_linear_normality(g, delta) {
            Err(Filter::LinearNormality)
        } else if !check_genus_lower_bound(g, delta) {
            Err(Filter::GenusLowerBound)
        } else {
            Ok(())
        };
        match verdict {
            Ok(()) => out
                .survivors
                .push(CandidateSolution::new(d, delta, g, provenance, class_data)?),
            Err(f) => out.reject(f),
        }
    }
    Ok(())
}

fn enumerate_scroll(
    scroll: ScrollKind,
    provenance: CaseId,
    delta_min: i64,
    delta_max: i64,
) -> Result<Enumeration> {
    let mut out = Enumeration::default();
    for delta in delta_min.max(1)..=delta_max {
        // beta >= -2 alpha on either scroll gives delta >= 2 alpha.
        for alpha in 0..=delta / 2 {
            let beta = delta - scroll.degree() * alpha;
            if beta < scroll.min_beta(alpha) {
                continue;
            }
            let class = ScrollCurveClass::new(scroll, alpha, beta)?;
            out.examined += 1;
            match genus_from(Rational::from(class.twice_genus_minus_two())) {
                Ok(g) => admit(
                    &mut out,
                    g,
                    delta,
                    provenance,
                    Some(ClassData::Scroll(class)),
                )?,
                Err(f) => out.reject(f),
            }
        }
    }
    Ok(out)
}

/// Classes `alpha E + beta F` on a cubic scroll with `delta_min <= delta <= delta_max`.
pub fn enumerate_cubic_scroll(delta_min: i64, delta_max: i64) -> Result<Enumeration> {
    enumerate_scroll(ScrollKind::Cubic, CaseId::CubicScroll, delta_min, delta_max)
}

/// Classes `alpha E + beta F` on a rational quartic scroll.
pub fn enumerate_quartic_scroll(delta_min: i64, delta_max: i64) -> Result<Enumeration> {
    enumerate_scroll(
        ScrollKind::Quartic,
        CaseId::QuarticScroll,
        delta_min,
        delta_max,
    )
}

/// Plane curves of degree `a` embedded by conics: `delta = 2a`,
/// `2g - 2 = a(a - 3)`.
pub fn enumerate_veronese(delta_max: i64) -> Result<Enumeration> {
    let mut out = Enumeration::default();
    for a in 2..=delta_max / 2 {
        out.examined += 1;
        match genus_from(Rational::from(a * (a - 3))) {
            Ok(g) => admit(
                &mut out,
                g,
                2 * a,
                CaseId::Veronese,
                Some(ClassData::Veronese { a }),
            )?,
            Err(f) => out.reject(f),
        }
    }
    Ok(out)
}

/// Curves on a cone over an elliptic quartic: `delta = 4 alpha + 1` with
/// `2g - 2 = 2(2 alpha + 1)(alpha - 1)` when the curve passes through the
/// vertex, otherwise `delta = 4 alpha` with `2g - 2 = 4 alpha (alpha - 1)`.
pub fn enumerate_elliptic_cone(delta_max: i64) -> Result<Enumeration> {
    let mut out = Enumeration::default();
    for alpha in 1..=delta_max / 4 {
        for through_vertex in [false, true] {
            let (delta, twice) = if through_vertex {
                (4 * alpha + 1, 2 * (2 * alpha + 1) * (alpha - 1))
            } else {
                (4 * alpha, 4 * alpha * (alpha - 1))
            };
            if delta > delta_max {
                continue;
            }
            out.examined += 1;
            let data = ClassData::EllipticCone {
                alpha,
                through_vertex,
            };
            match genus_from(Rational::from(twice)) {
                Ok(g) => admit(&mut out, g, delta, CaseId::EllipticCone, Some(data))?,
                Err(f) => out.reject(f),
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeEnumeration {
    /// `d = 2 delta`.
    pub survivors_even: Enumeration,
    /// `d = 2 delta + 1`.
    pub survivors_odd: Enumeration,
}

/// `V` a cone: `d = 2 delta` or `2 delta + 1`, with the genus determined by
/// the double point formula, compared against the genus bounds for space
/// and plane curves.
pub fn enumerate_cone_case(delta_max: i64) -> Result<ConeEnumeration> {
    let mut result = ConeEnumeration::default();
    for branch in [ConeBranch::TwiceDelta, ConeBranch::TwiceDeltaPlusOne] {
        let out = match branch {
            ConeBranch::TwiceDelta => &mut result.survivors_even,
            ConeBranch::TwiceDeltaPlusOne => &mut result.survivors_odd,
        };
        for delta in CONE_DELTA_MIN..=delta_max {
            out.examined += 1;
            let d = branch.degree(delta);
            let verdict = genus_from(branch.twice_genus_minus_two(delta)).and_then(|g| {
                if !has_nonnegative_singular_fibers(d, delta) {
                    Err(Filter::SingularFibers)
                } else if !check_linear_normality(g, delta) {
                    Err(Filter::LinearNormality)
                } else if !check_genus_lower_bound(g, delta) {
                    Err(Filter::GenusLowerBound)
                } else if g > castelnuovo_bound(delta, 3).expect("delta >= 3") {
                    Err(Filter::SpaceCurveGenus)
                } else if g > plane_curve_genus(delta) {
                    Err(Filter::PlaneCurveGenus)
                } else {
                    Ok(g)
                }
            });
            match verdict {
                Ok(g) => out.survivors.push(CandidateSolution::new(
                    d,
                    delta,
                    g,
                    CaseId::Cone,
                    Some(ClassData::Cone { branch }),
                )?),
                Err(f) => out.note(Err(f)),
            }
        }
    }
    Ok(result)
}

/// Curves spanning P^5 off a quartic surface with `5 <= delta <= delta_max`
/// and `2 <= g <= floor((delta^2 - 5 delta + 10)/10)`. Rational and elliptic
/// curves are left to the final step.
pub fn enumerate_p5_span(delta_max: i64) -> Result<Enumeration> {
    if delta_max > P5_SPAN_DELTA_MAX {
        return Err(Error::OutOfRange(format!(
            "p5-span enumeration needs delta_max <= {P5_SPAN_DELTA_MAX}, got {delta_max}"
        )));
    }
    let mut out = Enumeration::default();
    for delta in P5_SPAN_DELTA_MIN..=delta_max {
        for g in 2..=floor_rational(harris_p5_bound(delta)) {
            out.examined += 1;
            if !check_genus_lower_bound(g, delta) {
                out.reject(Filter::GenusLowerBound);
                continue;
            }
            admit(&mut out, g, delta, CaseId::P5Span, None)?;
        }
    }
    Ok(out)
}

/// Rational and elliptic base curves, `2 <= delta <= 5`.
pub fn enumerate_endgame() -> Result<Enumeration> {
    let mut out = Enumeration::default();
    for g in 0..=1 {
        for delta in MIN_NONDEGENERATE_DELTA..=5 {
            out.examined += 1;
            if !check_linear_normality(g, delta) {
                out.reject(Filter::LinearNormality);
                continue;
            }
            admit(&mut out, g, delta, CaseId::Endgame, None)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartic(alpha: i64, beta: i64) -> ScrollCurveClass {
        ScrollCurveClass::new(ScrollKind::Quartic, alpha, beta).unwrap()
    }

    #[test]
    fn scroll_class_validation() {
        assert!(ScrollCurveClass::new(ScrollKind::Cubic, 2, -2).is_ok());
        assert!(ScrollCurveClass::new(ScrollKind::Cubic, 2, -3).is_err());
        assert!(ScrollCurveClass::new(ScrollKind::Quartic, 2, -4).is_ok());
        assert!(ScrollCurveClass::new(ScrollKind::Quartic, 2, -5).is_err());
        assert!(ScrollCurveClass::new(ScrollKind::Quartic, -1, 6).is_err());
        assert!(ScrollCurveClass::new(ScrollKind::Cubic, 0, 0).is_err());
    }

    #[test]
    fn scroll_genus_examples() {
        assert_eq!(scroll_genus(&quartic(3, -1)), Rational::from(8));
        assert_eq!(scroll_genus(&quartic(6, 2)), Rational::from(65));
        let conic = ScrollCurveClass::new(ScrollKind::Cubic, 1, 0).unwrap();
        assert_eq!(scroll_genus(&conic), Rational::ZERO);
        assert_eq!(quartic(3, -1).delta(), 11);
        assert_eq!(quartic(6, 2).delta(), 26);
    }

    #[test]
    fn class_names() {
        assert_eq!(quartic(3, -1).to_string(), "3E-F");
        assert_eq!(quartic(6, 2).to_string(), "6E+2F");
        assert_eq!(quartic(1, 0).to_string(), "E");
        assert_eq!(quartic(0, 5).to_string(), "5F");
        assert_eq!(quartic(2, -4).to_string(), "2E-4F");
    }

    #[test]
    fn quartic_scroll_survivors() {
        let out = enumerate_quartic_scroll(CERTIFIED_DELTA_MIN, CERTIFIED_DELTA_MAX).unwrap();
        let got: Vec<_> = out
            .survivors
            .iter()
            .map(|c| (c.d, c.delta, c.g, c.pi))
            .collect();
        assert_eq!(got, vec![(15, 11, 8, 19), (36, 26, 65, 139)]);
        assert_eq!(
            out.survivors[0].class_data,
            Some(ClassData::Scroll(quartic(3, -1)))
        );
        assert!(out.survivors.iter().all(|c| c.d * 3 >= 4 * c.delta));
        assert!(out.survivors.iter().all(|c| !c.is_rational_or_elliptic()));
    }

    #[test]
    fn empty_branches() {
        assert!(enumerate_cubic_scroll(4, 31).unwrap().is_empty());
        assert!(enumerate_cubic_scroll(4, 3).unwrap().is_empty());
        assert_eq!(enumerate_cubic_scroll(4, 3).unwrap().examined, 0);
        assert!(enumerate_veronese(31).unwrap().is_empty());
        assert!(enumerate_p5_span(11).unwrap().is_empty());
    }

    #[test]
    fn veronese_intermediate() {
        // a = 4: g = 3, delta = 8, d(d - 9) = 16 has no integer root.
        assert!(solve_degree(3, 8, None).unwrap().is_empty());
        let out = enumerate_veronese(8).unwrap();
        assert_eq!(out.examined, 3);
        assert!(out.is_empty());
    }

    #[test]
    fn elliptic_cone() {
        let out = enumerate_elliptic_cone(31).unwrap();
        assert_eq!(out.examined, 14);
        assert_eq!(out.survivors.len(), 1);
        let s = out.survivors[0];
        assert_eq!((s.d, s.delta, s.g, s.pi), (8, 4, 1, 5));
        assert_eq!(
            s.class_data,
            Some(ClassData::EllipticCone {
                alpha: 1,
                through_vertex: false
            })
        );
        assert!(solve_degree(5, 8, None).unwrap().is_empty());
    }

    #[test]
    fn cone_case() {
        let out = enumerate_cone_case(31).unwrap();
        assert!(out.survivors_odd.is_empty());
        assert!(out
            .survivors_even
            .survivors
            .iter()
            .any(|c| (c.d, c.delta, c.g) == (8, 4, 1)));
        // delta = 4 on the odd branch: 2g - 2 = 1.
        assert_eq!(
            genus_from(ConeBranch::TwiceDeltaPlusOne.twice_genus_minus_two(4)),
            Err(Filter::NonIntegralGenus)
        );
        // delta = 5 on the odd branch: g = 3 > 2.
        assert_eq!(
            genus_from(ConeBranch::TwiceDeltaPlusOne.twice_genus_minus_two(5)),
            Ok(3)
        );
        assert_eq!(
            out.survivors_odd.rejected.get(&Filter::SpaceCurveGenus),
            Some(&14)
        );
    }

    #[test]
    fn p5_span() {
        assert!(solve_degree(6, 10, None).unwrap().is_empty());
        assert!(matches!(enumerate_p5_span(13), Err(Error::OutOfRange(_))));
        assert!(enumerate_p5_span(4).unwrap().survivors.is_empty());
    }

    #[test]
    fn endgame() {
        let out = enumerate_endgame().unwrap();
        let got: Vec<_> = out
            .survivors
            .iter()
            .map(|c| (c.d, c.delta, c.g, c.pi))
            .collect();
        assert_eq!(got, vec![(4, 2, 0, 1), (5, 2, 0, 2), (8, 4, 1, 5)]);
        assert_eq!(out.rejected.get(&Filter::LinearNormality), Some(&3));
        assert!(solve_degree(1, 5, None).unwrap().is_empty());
    }

    #[test]
    fn candidate_checks_linear_normality() {
        assert!(CandidateSolution::new(8, 4, 1, CaseId::Endgame, None).is_ok());
        assert!(CandidateSolution::new(15, 11, 2, CaseId::Endgame, None).is_err());
        let c = CandidateSolution::new(36, 26, 65, CaseId::QuarticScroll, None).unwrap();
        assert_eq!(c.pi, 139);
        assert!(!c.outside_certified_region());
    }

    #[test]
    fn case_ids_round_trip() {
        for c in CaseId::ALL {
            assert_eq!(c.as_str().parse::<CaseId>().unwrap(), c);
            assert_eq!(serde_json::to_value(c).unwrap(), c.as_str());
        }
        assert!("quadric".parse::<CaseId>().is_err());
    }
}
