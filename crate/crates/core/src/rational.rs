//! Exact rational arithmetic for stability parameters and wall positions.
//!
//! Every parameter value, wall, and slack in this crate is an exact fraction;
//! floating point is never used. Values are kept in lowest terms with a
//! positive denominator, so equality of walls is literal equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    /// Builds `num/den` reduced to lowest terms.
    ///
    /// # Panics
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(Ratio::new(num, den))
    }

    pub fn integer(value: i64) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn zero() -> Self {
        Rational(Ratio::from_integer(0))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        *self.0.numer() < 0
    }

    pub fn is_zero(&self) -> bool {
        *self.0.numer() == 0
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    /// Smallest integer `>= self`.
    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    /// Exact decimal-style rendering: `"p/q"`, or `"p"` when the value is an
    /// integer. Used verbatim in report documents.
    pub fn display(&self) -> String {
        self.to_string()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serializes as `{"num": p, "den": q, "display": "p/q"}` so downstream
/// consumers never see a float.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rational", 3)?;
        s.serialize_field("num", &self.numer())?;
        s.serialize_field("den", &self.denom())?;
        s.serialize_field("display", &self.display())?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?} (expected `p` or `p/q` with q != 0)")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Parses `"p"` or `"p/q"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        match s.split_once('/') {
            None => {
                let n: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(Rational::integer(n))
            }
            Some((num, den)) => {
                let n: i64 = num.trim().parse().map_err(|_| bad())?;
                let d: i64 = den.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(n, d))
            }
        }
    }
}

macro_rules! delegate_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

delegate_binop!(Add, add);
delegate_binop!(Sub, sub);
delegate_binop!(Mul, mul);
delegate_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms_with_positive_denominator() {
        let r = Rational::new(2, -4);
        assert_eq!((r.numer(), r.denom()), (-1, 2));
        assert_eq!(r.to_string(), "-1/2");
    }

    #[test]
    fn integers_display_without_denominator() {
        assert_eq!(Rational::new(6, 3).to_string(), "2");
        assert_eq!(Rational::integer(-7).display(), "-7");
    }

    #[test]
    fn exact_ordering_and_arithmetic() {
        let a = Rational::new(1, 3);
        let b = Rational::new(1, 2);
        assert!(a < b);
        assert_eq!(a + b, Rational::new(5, 6));
        assert_eq!(b - a, Rational::new(1, 6));
        assert_eq!(a * b, Rational::new(1, 6));
        assert_eq!(a / b, Rational::new(2, 3));
        assert_eq!(-a, Rational::new(-1, 3));
    }

    #[test]
    fn floor_and_ceil_match_integer_semantics() {
        assert_eq!(Rational::new(-3, 2).floor(), -2);
        assert_eq!(Rational::new(-3, 2).ceil(), -1);
        assert_eq!(Rational::new(3, 2).floor(), 1);
        assert_eq!(Rational::new(3, 2).ceil(), 2);
        assert_eq!(Rational::integer(4).floor(), 4);
        assert_eq!(Rational::integer(4).ceil(), 4);
    }

    #[test]
    fn parses_fraction_literals() {
        assert_eq!("5".parse::<Rational>().unwrap(), Rational::integer(5));
        assert_eq!("-3/6".parse::<Rational>().unwrap(), Rational::new(-1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("a/2".parse::<Rational>().is_err());
    }

    #[test]
    fn serializes_as_num_den_display() {
        let json = serde_json::to_string(&Rational::new(-1, 2)).unwrap();
        assert_eq!(json, r#"{"num":-1,"den":2,"display":"-1/2"}"#);
    }
}
