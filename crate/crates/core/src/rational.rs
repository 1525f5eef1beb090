//! Exact rational scalar used for every orbit value and coefficient.
//!
//! [`Rational`] is a thin newtype over [`dashu_ratio::RBig`]. It keeps the
//! value normalized (coprime parts, positive denominator), parses and prints
//! the `p/q` form used in the CLI and JSON output, and adds the handful of
//! helpers the recurrence code needs (integer powers, exact fifth roots,
//! checked division).

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_int::ops::UnsignedAbs;
use dashu_int::{IBig, Sign, UBig};
use dashu_ratio::RBig;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(RBig);

impl Rational {
    /// Builds `numer/denom` from machine integers.
    ///
    /// # Panics
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(RBig::from_parts_signed(numer.into(), denom.into()))
    }

    pub fn from_bigints(numer: IBig, denom: IBig) -> Option<Self> {
        if denom == IBig::ZERO {
            None
        } else {
            Some(Rational(RBig::from_parts_signed(numer, denom)))
        }
    }

    pub fn integer(value: i64) -> Self {
        Rational(RBig::from(value))
    }

    pub fn zero() -> Self {
        Rational(RBig::ZERO)
    }

    pub fn one() -> Self {
        Rational(RBig::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.sign() == Sign::Negative
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_int()
    }

    pub fn numer(&self) -> &IBig {
        self.0.numerator()
    }

    pub fn denom(&self) -> &UBig {
        self.0.denominator()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `1/self`, or `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(RBig::ONE / &self.0))
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rational(&self.0 / &rhs.0))
        }
    }

    /// Integer power. Negative exponents of zero return `None`.
    pub fn pow(&self, exp: i32) -> Option<Self> {
        if exp >= 0 {
            Some(self.powu(exp as u32))
        } else {
            self.recip().map(|r| r.powu(exp.unsigned_abs()))
        }
    }

    /// Non-negative integer power; `0^0 = 1`.
    pub fn powu(&self, exp: u32) -> Self {
        Rational(self.0.pow(exp as usize))
    }

    /// Exact real `n`-th root when both numerator and denominator are perfect
    /// `n`-th powers. Odd roots of negative values are negative; even roots of
    /// negative values do not exist.
    pub fn exact_root(&self, n: u32) -> Option<Self> {
        assert!(n > 0, "root degree must be positive");
        if self.is_negative() && n.is_multiple_of(2) {
            return None;
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let num = self.numer().unsigned_abs();
        let den = self.denom().clone();
        let rn = num.nth_root(n as usize);
        let rd = den.nth_root(n as usize);
        if rn.pow(n as usize) != num || rd.pow(n as usize) != den {
            return None;
        }
        let rn = IBig::from(rn);
        let rn = if self.is_negative() { -rn } else { rn };
        Some(Rational(RBig::from_parts(rn, rd)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    pub fn as_big(&self) -> &RBig {
        &self.0
    }

    /// Decimal rendering with `digits` significant digits, in the style of
    /// C's `%g`.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        format_significant(self.to_f64(), digits)
    }
}

/// Running product of rationals kept as an unreduced fraction, so that long
/// products pay for a single gcd at the end.
#[derive(Debug, Clone)]
pub(crate) struct ProductAccumulator {
    numer: IBig,
    denom: IBig,
}

impl ProductAccumulator {
    pub(crate) fn new(start: &Rational) -> Self {
        ProductAccumulator {
            numer: start.numer().clone(),
            denom: IBig::from(start.denom().clone()),
        }
    }

    /// Multiplies by `num / den`; `den` must be nonzero.
    pub(crate) fn mul_ratio(&mut self, num: &Rational, den: &Rational) {
        self.numer *= num.numer() * den.denom();
        self.denom *= den.numer() * num.denom();
    }

    pub(crate) fn finish(self) -> Rational {
        Rational(RBig::from_parts_signed(self.numer, self.denom))
    }
}

/// `%g`-style formatting of a float with the given number of significant
/// digits; trailing zeros are dropped.
pub fn format_significant(value: f64, digits: usize) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, value);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -5 || exp >= digits as i32 {
        let mantissa = trim_fraction(mantissa);
        format!("{mantissa}e{exp}")
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{:.*}", decimals, value)).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::integer(value)
    }
}

impl From<RBig> for Rational {
    fn from(value: RBig) -> Self {
        Rational(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_int() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {input:?} as a rational: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p`, `p/q` and finite decimal literals such as `-0.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseRationalError {
            input: s.to_string(),
            reason,
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err("empty string"));
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: IBig = p.trim().parse().map_err(|_| err("bad numerator"))?;
            let q: IBig = q.trim().parse().map_err(|_| err("bad denominator"))?;
            return Rational::from_bigints(p, q).ok_or_else(|| err("zero denominator"));
        }
        if let Some((int, frac)) = t.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("bad decimal fraction"));
            }
            let negative = int.starts_with('-');
            let int_digits = int.trim_start_matches(['-', '+']);
            let int_part: IBig = if int_digits.is_empty() {
                IBig::ZERO
            } else {
                int_digits.parse().map_err(|_| err("bad integer part"))?
            };
            let frac_part: IBig = frac.parse().map_err(|_| err("bad decimal fraction"))?;
            let scale = UBig::from(10u8).pow(frac.len());
            let magnitude = int_part * IBig::from(scale.clone()) + frac_part;
            let numer = if negative { -magnitude } else { magnitude };
            return Ok(Rational(RBig::from_parts(numer, scale)));
        }
        let p: IBig = t.parse().map_err(|_| err("bad integer"))?;
        Ok(Rational(RBig::from(p)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, as for RBig. Use `checked_div` where the
// divisor can vanish.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Product<&'a Rational> for Rational {
    fn product<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        let x = r(6, -8);
        assert_eq!(x.numer(), &IBig::from(-3));
        assert_eq!(x.denom(), &UBig::from(4u8));
        let z = r(0, -5);
        assert_eq!(z.numer(), &IBig::ZERO);
        assert_eq!(z.denom(), &UBig::ONE);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/4".parse::<Rational>().unwrap(), r(3, 4));
        assert_eq!("-2".parse::<Rational>().unwrap(), r(-2, 1));
        assert_eq!(" 1/-4 ".parse::<Rational>().unwrap(), r(-1, 4));
        assert_eq!("-0.25".parse::<Rational>().unwrap(), r(-1, 4));
        assert_eq!("2.5".parse::<Rational>().unwrap(), r(5, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert_eq!(r(-6, 8).to_string(), "-3/4");
        assert_eq!(r(4, 2).to_string(), "2");
    }

    #[test]
    fn exact_fifth_roots() {
        assert_eq!(r(32, 1).exact_root(5), Some(r(2, 1)));
        assert_eq!(r(-32, 243).exact_root(5), Some(r(-2, 3)));
        assert_eq!(r(1, 1).exact_root(5), Some(r(1, 1)));
        assert_eq!(r(0, 1).exact_root(5), Some(r(0, 1)));
        assert_eq!(r(2, 1).exact_root(5), None);
        assert_eq!(r(-4, 1).exact_root(2), None);
    }

    #[test]
    fn powers() {
        assert_eq!(r(2, 3).powu(3), r(8, 27));
        assert_eq!(r(0, 1).powu(0), r(1, 1));
        assert_eq!(r(-1, 1).pow(-3), Some(r(-1, 1)));
        assert_eq!(r(0, 1).pow(-1), None);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.5, 12), "0.5");
        assert_eq!(format_significant(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(format_significant(-2.0, 12), "-2");
        assert_eq!(format_significant(1.5e-9, 12), "1.5e-9");
        assert_eq!(format_significant(123456789012345.0, 12), "1.23456789012e14");
        assert_eq!(r(1, 2).to_decimal_string(12), "0.5");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=20).prop_map(|(p, q)| r(p, q))
    }

    proptest! {
        #[test]
        fn field_laws_hold_exactly(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn display_parse_round_trip(a in small_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
