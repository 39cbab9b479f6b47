//! Exact integer and rational arithmetic.
//!
//! Every bound in the case analysis has fractional coefficients, so all
//! comparisons go through [`Rational`], which is kept in lowest terms with a
//! positive denominator. Intermediate products are formed in `i128` and
//! narrowed back with a checked conversion, so overflow surfaces as an error
//! (or a panic from the operator impls) rather than wrapping.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Exact rational number in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: i64,
    denom: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { numer: 0, denom: 1 };
    pub const ONE: Rational = Rational { numer: 1, denom: 1 };

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        Self::reduce(numer as i128, denom as i128, "Rational::new")
    }

    pub const fn from_integer(n: i64) -> Self {
        Rational { numer: n, denom: 1 }
    }

    fn reduce(numer: i128, denom: i128, op: &'static str) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = gcd(numer, denom);
        let sign = if denom < 0 { -1 } else { 1 };
        let (n, d) = if g == 0 {
            (0, 1)
        } else {
            (sign * numer / g, sign * denom / g)
        };
        Ok(Rational {
            numer: i64::try_from(n).map_err(|_| Error::Overflow(op))?,
            denom: i64::try_from(d).map_err(|_| Error::Overflow(op))?,
        })
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.numer)
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let (a, b, c, d) = self.wide(rhs);
        Self::reduce(a * d + c * b, b * d, "add")
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        let (a, b, c, d) = self.wide(rhs);
        Self::reduce(a * d - c * b, b * d, "sub")
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let (a, b, c, d) = self.wide(rhs);
        Self::reduce(a * c, b * d, "mul")
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        let (a, b, c, d) = self.wide(rhs);
        Self::reduce(a * d, b * c, "div")
    }

    fn wide(self, rhs: Self) -> (i128, i128, i128, i128) {
        (
            self.numer as i128,
            self.denom as i128,
            rhs.numer as i128,
            rhs.denom as i128,
        )
    }

    pub fn floor(&self) -> i64 {
        floor_rational(*self)
    }

    pub fn is_negative(&self) -> bool {
        self.numer < 0
    }
}

/// Builds `numer/denom`, panicking on a zero denominator.
///
/// Convenience for literal coefficients; use [`Rational::new`] for
/// caller-supplied values.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom).expect("literal rational with zero denominator")
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("rational {}: {e}", stringify!($method)),
                }
            }
        }

        impl $trait<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                $trait::$method(self, Rational::from(rhs))
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational::ZERO - self
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, c, d) = self.wide(*other);
        (a * d).cmp(&(c * b))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::OutOfRange(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse().map_err(|_| bad())?;
                let d = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => Ok(Rational::from(s.trim().parse::<i64>().map_err(|_| bad())?)),
        }
    }
}

// Serialized as "p/q" (or "p" for integers) so JSON never carries floats.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Returns `r` with `r * r == n`, or `None` when `n` is not a perfect square.
pub fn exact_isqrt(n: i64) -> Result<Option<i64>> {
    if n < 0 {
        return Err(Error::NegativeRadicand(n));
    }
    let r = (n as u64).isqrt() as i64;
    Ok((r * r == n).then_some(r))
}

/// Greatest integer not exceeding `q`.
pub fn floor_rational(q: Rational) -> i64 {
    q.numer.div_euclid(q.denom)
}

/// Smallest integer not below `q`.
pub fn ceil_rational(q: Rational) -> i64 {
    -floor_rational(-q)
}

/// All integer roots of `x^2 + b x + c`.
///
/// Uses the discriminant directly: a root is rational only when `b^2 - 4c`
/// is the square of a rational, i.e. its reduced numerator and denominator
/// are both perfect squares.
pub fn integer_roots_monic_quadratic(b: Rational, c: Rational) -> Result<BTreeSet<i64>> {
    let disc = b
        .checked_mul(b)?
        .checked_sub(c.checked_mul(Rational::from(4))?)?;
    let mut roots = BTreeSet::new();
    if disc.is_negative() {
        return Ok(roots);
    }
    let (Some(sn), Some(sd)) = (exact_isqrt(disc.numer)?, exact_isqrt(disc.denom)?) else {
        return Ok(roots);
    };
    let sqrt_disc = Rational::new(sn, sd)?;
    let half = ratio(1, 2);
    for root in [
        (-b).checked_add(sqrt_disc)?.checked_mul(half)?,
        (-b).checked_sub(sqrt_disc)?.checked_mul(half)?,
    ] {
        if let Some(x) = root.to_integer() {
            roots.insert(x);
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(exact_isqrt(0), Ok(Some(0)));
        assert_eq!(exact_isqrt(441), Ok(Some(21)));
        assert_eq!(exact_isqrt(41), Ok(None));
        assert_eq!(exact_isqrt(-1), Err(Error::NegativeRadicand(-1)));
        assert_eq!(exact_isqrt(i64::MAX), Ok(None));
    }

    #[test]
    fn quadratic_roots_examples() {
        let roots = |b: i64, c: i64| {
            integer_roots_monic_quadratic(b.into(), c.into())
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>()
        };
        assert_eq!(roots(-9, 20), vec![4, 5]);
        assert_eq!(roots(0, 0), vec![0]);
        assert_eq!(roots(-9, -90), vec![-6, 15]);
        assert_eq!(roots(0, 1), Vec::<i64>::new());
        // x^2 - 5x/2 + 1 = (x - 2)(x - 1/2)
        let r = integer_roots_monic_quadratic(ratio(-5, 2), Rational::ONE).unwrap();
        assert_eq!(r.into_iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn floor_examples() {
        assert_eq!(floor_rational(ratio(76, 10)), 7);
        assert_eq!(floor_rational(Rational::from(5)), 5);
        assert_eq!(floor_rational(ratio(-3, 2)), -2);
        assert_eq!(ceil_rational(ratio(-3, 2)), -1);
        assert_eq!(ceil_rational(ratio(7, 2)), 4);
    }

    #[test]
    fn canonical_form() {
        let q = Rational::new(6, -4).unwrap();
        assert_eq!((q.numer(), q.denom()), (-3, 2));
        assert_eq!(Rational::new(0, -7).unwrap(), Rational::ZERO);
        assert_eq!(ratio(72, 10), ratio(36, 5));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = Rational::from(i64::MAX);
        assert_eq!(big.checked_add(big), Err(Error::Overflow("add")));
        assert_eq!(big.checked_mul(big), Err(Error::Overflow("mul")));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn operator_overflow_panics() {
        let _ = Rational::from(i64::MAX) * Rational::from(2);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("201/5".parse::<Rational>().unwrap(), ratio(201, 5));
        assert_eq!("-4/2".parse::<Rational>().unwrap(), Rational::from(-2));
        assert_eq!(ratio(1128, 80).to_string(), "141/10");
        assert_eq!(Rational::from(-3).to_string(), "-3");
        assert!("x".parse::<Rational>().is_err());
    }
}
