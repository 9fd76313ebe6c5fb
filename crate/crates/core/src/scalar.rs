//! Scalar field abstraction.
//!
//! Every formula in this crate is polynomial with coefficients in `½ℤ`, so the
//! same code runs over exact rationals and over `f64`. Exact rationals decide
//! "is this zero" with certainty; floats decide it up to a [`Tolerance`].

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Absolute threshold below which a float is treated as zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(pub f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Sign of a scalar as decided at some tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Whether zero tests on this type are exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// `p / q`; `q` must be nonzero.
    fn ratio(p: i64, q: i64) -> Self;
    fn to_f64(&self) -> f64;

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn sign(&self, tol: Tolerance) -> Sign;

    fn is_zero_at(&self, tol: Tolerance) -> bool {
        self.sign(tol) == Sign::Zero
    }

    /// JSON encoding: `"p/q"` strings for exact values, numbers for floats.
    fn to_json(&self) -> serde_json::Value;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn ratio(p: i64, q: i64) -> Self {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn half(&self) -> Self {
        BigRational::new(self.numer().clone(), self.denom() * 2)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn sign(&self, _tol: Tolerance) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn ratio(p: i64, q: i64) -> Self {
        p as f64 / q as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn half(&self) -> Self {
        0.5 * self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn sign(&self, tol: Tolerance) -> Sign {
        if f64::abs(*self) <= tol.0 {
            Sign::Zero
        } else if *self > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Number::from_f64(*self)
            .map(serde_json::Value::Number)
            .unwrap_or(serde_json::Value::Null)
    }
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Ok(r) = BigRational::from_str(s) {
        if !r.denom().is_zero() {
            return Some(r);
        }
        return None;
    }
    if let Some((mantissa, exp)) = s.split_once(['e', 'E']) {
        // decimal text of a JSON number such as 1e-12 or 2.5E3
        let exp: i32 = exp.parse().ok().filter(|e: &i32| e.abs() <= 4096)?;
        if mantissa.contains('/') {
            return None;
        }
        let scale = Rational::from_integer(num_traits::pow(
            BigInt::from(10),
            exp.unsigned_abs() as usize,
        ));
        let m = parse_rational(mantissa)?;
        return Some(if exp >= 0 { m * scale } else { m / scale });
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.')?;
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str(&digits).ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let r = BigRational::new(numer, denom);
    Some(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("3/4"), Some(Rational::ratio(3, 4)));
        assert_eq!(parse_rational("-6/8"), Some(Rational::ratio(-3, 4)));
        assert_eq!(parse_rational("7"), Some(Rational::from_i64(7)));
        assert_eq!(parse_rational("-0.25"), Some(Rational::ratio(-1, 4)));
        assert_eq!(parse_rational(".5"), Some(Rational::ratio(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("1e3"), Some(Rational::from_i64(1000)));
        assert_eq!(parse_rational("-2.5E-2"), Some(Rational::ratio(-1, 40)));
        assert_eq!(parse_rational("1/2e3"), None);
        assert_eq!(parse_rational("1e"), None);
    }

    #[test]
    fn float_sign_respects_tolerance() {
        let tol = Tolerance::DEFAULT;
        assert_eq!(1e-10_f64.sign(tol), Sign::Zero);
        assert_eq!((-1e-8_f64).sign(tol), Sign::Negative);
        assert_eq!(2.0_f64.sign(Tolerance(3.0)), Sign::Zero);
    }

    #[test]
    fn exact_sign_ignores_tolerance() {
        let tiny = Rational::ratio(1, 1_000_000_000_000);
        assert_eq!(tiny.sign(Tolerance(1.0)), Sign::Positive);
        assert_eq!(Rational::from_i64(0).sign(Tolerance(1.0)), Sign::Zero);
    }

    #[test]
    fn rational_json_is_a_string() {
        assert_eq!(Rational::ratio(-1, 2).to_json(), serde_json::json!("-1/2"));
        assert_eq!(Rational::from_i64(3).to_json(), serde_json::json!("3"));
        assert_eq!(0.5_f64.to_json(), serde_json::json!(0.5));
    }
}
