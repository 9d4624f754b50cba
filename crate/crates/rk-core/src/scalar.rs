//! Field abstraction shared by `f64` and exact rationals.

use std::fmt::Debug;
use std::str::FromStr;

use num::{BigInt, BigRational, Num, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Coefficient field for method forms and polynomials.
pub trait Scalar: Num + Clone + Debug + PartialOrd + Send + Sync + 'static {
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
    /// True when arithmetic in this field is exact.
    fn is_exact() -> bool;
    /// Parse either a decimal literal or a `num/den` string.
    fn parse(text: &str) -> Option<Self>;
    /// String form used by JSON output; `None` means emit a plain number.
    fn exact_string(&self) -> Option<String>;
    /// Equality up to `tol` for floats, exact for rationals.
    fn near(&self, other: &Self, tol: f64) -> bool {
        if Self::is_exact() {
            self == other
        } else {
            (self.to_f64() - other.to_f64()).abs() <= tol
        }
    }
}

impl Scalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn is_exact() -> bool {
        false
    }
    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        match text.split_once('/') {
            Some((n, d)) => Some(f64::from_str(n.trim()).ok()? / f64::from_str(d.trim()).ok()?),
            None => f64::from_str(text).ok(),
        }
    }
    fn exact_string(&self) -> Option<String> {
        None
    }
}

impl Scalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // Very large numerators and denominators: scale through logs.
            let sign = if self.is_negative() { -1.0 } else { 1.0 };
            let n = self.numer().abs();
            let d = self.denom().clone();
            let shift = n.bits().max(d.bits()).saturating_sub(1000);
            let n = ToPrimitive::to_f64(&(n >> shift)).unwrap_or(f64::INFINITY);
            let d = ToPrimitive::to_f64(&(d >> shift)).unwrap_or(f64::INFINITY);
            sign * n / d
        })
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn is_exact() -> bool {
        true
    }
    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        match text.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).ok()?;
                let d = BigInt::from_str(d.trim()).ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(BigRational::new(n, d))
            }
            None => {
                if let Ok(n) = BigInt::from_str(text) {
                    return Some(BigRational::from_integer(n));
                }
                // Decimal literals are converted exactly from their f64 value.
                let x = f64::from_str(text).ok()?;
                BigRational::from_float(x)
            }
        }
    }
    fn exact_string(&self) -> Option<String> {
        if self.denom().is_one() {
            Some(self.numer().to_string())
        } else {
            Some(format!("{}/{}", self.numer(), self.denom()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_print() {
        let x = <Rational as Scalar>::parse("-6/4").unwrap();
        assert_eq!(x.exact_string().unwrap(), "-3/2");
        assert_eq!(
            <Rational as Scalar>::parse("7")
                .unwrap()
                .exact_string()
                .unwrap(),
            "7"
        );
        assert!(<Rational as Scalar>::parse("1/0").is_none());
    }

    #[test]
    fn float_parse_accepts_fractions() {
        assert_eq!(<f64 as Scalar>::parse("1/4"), Some(0.25));
        assert_eq!(<f64 as Scalar>::parse(" 2.5 "), Some(2.5));
    }

    #[test]
    fn huge_rational_lowers_finitely() {
        let big = BigInt::from(10).pow(400u32);
        let x = BigRational::new(big.clone() * BigInt::from(3), big);
        assert!((Scalar::to_f64(&x) - 3.0).abs() < 1e-12);
    }
}
