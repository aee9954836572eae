//! Coefficient arithmetic: arbitrary-precision rationals by default, with a
//! 64-bit float mode for tolerant diagnostics. Mixing the modes promotes to
//! float.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arithmetic mode of a [`Scalar`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarMode {
    Rational,
    Float,
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarMode::Rational => write!(f, "rational"),
            ScalarMode::Float => write!(f, "float"),
        }
    }
}

/// A coefficient: exact rational (reduced, positive denominator) or f64.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// Exact fraction `num/den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn float(v: f64) -> Self {
        Scalar::Float(v)
    }

    pub fn mode(&self) -> ScalarMode {
        match self {
            Scalar::Rational(_) => ScalarMode::Rational,
            Scalar::Float(_) => ScalarMode::Float,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Float(f) => *f == 0.0,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_positive(),
            Scalar::Float(f) => *f > 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Float(f) => *f < 0.0,
        }
    }

    pub fn rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(f) => *f,
        }
    }

    pub fn to_float(&self) -> Scalar {
        Scalar::Float(self.to_f64())
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            Scalar::Float(f) => Scalar::Float(f.abs()),
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Float(f) => Scalar::Float(1.0 / f),
        })
    }

    /// Exact integer power (negative exponents allowed for nonzero values).
    pub fn powi(&self, e: i32) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.pow(e)),
            Scalar::Float(f) => Scalar::Float(f.powi(e)),
        }
    }

    /// Exact `deg`-th root, if it exists in the rationals.
    pub fn nth_root_exact(&self, deg: u32) -> Option<Scalar> {
        let r = self.rational()?;
        let (num, den) = (r.numer(), r.denom());
        if num.is_negative() && deg.is_multiple_of(2) {
            return None;
        }
        let num_abs = num.abs();
        let rn = num_abs.nth_root(deg);
        let rd = den.nth_root(deg);
        if num_abs != rn.clone().pow(deg) || *den != rd.clone().pow(deg) {
            return None;
        }
        let signed = if num.is_negative() { -rn } else { rn };
        Some(Scalar::Rational(BigRational::new(signed, rd)))
    }

    pub fn sqrt_exact(&self) -> Option<Scalar> {
        self.nth_root_exact(2)
    }

    /// Parses "p/q", an integer string, or (float mode) any f64 literal.
    pub fn parse(s: &str, mode: ScalarMode) -> Result<Scalar> {
        let s = s.trim();
        match mode {
            ScalarMode::Rational => {
                let parse_int = |t: &str| -> Result<BigInt> {
                    t.parse::<BigInt>()
                        .map_err(|_| Error::InvalidInput(format!("bad rational: {s:?}")))
                };
                if let Some((p, q)) = s.split_once('/') {
                    let den = parse_int(q)?;
                    if den.is_zero() {
                        return Err(Error::InvalidInput(format!("zero denominator: {s:?}")));
                    }
                    Ok(Scalar::Rational(BigRational::new(parse_int(p)?, den)))
                } else {
                    Ok(Scalar::Rational(BigRational::from_integer(parse_int(s)?)))
                }
            }
            ScalarMode::Float => {
                if let Some((p, q)) = s.split_once('/') {
                    let p: f64 = p
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad float: {s:?}")))?;
                    let q: f64 = q
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad float: {s:?}")))?;
                    Ok(Scalar::Float(p / q))
                } else {
                    s.parse::<f64>()
                        .map(Scalar::Float)
                        .map_err(|_| Error::InvalidInput(format!("bad float: {s:?}")))
                }
            }
        }
    }

    /// Canonical string form: "p", "p/q", or the shortest f64 representation.
    pub fn repr(&self) -> String {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Float(f) => format!("{f}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Float(a), Scalar::Float(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.partial_cmp(b),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rop:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a $rop b),
                    _ => Scalar::Float(self.to_f64() $rop rhs.to_f64()),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Float(f) => Scalar::Float(-f),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_field_laws() {
        let a = Scalar::ratio(2, 3);
        let b = Scalar::ratio(-5, 7);
        let c = Scalar::from_int(4);
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn reduction_and_repr() {
        assert_eq!(Scalar::ratio(4, 6).repr(), "2/3");
        assert_eq!(Scalar::ratio(-4, -6).repr(), "2/3");
        assert_eq!(Scalar::ratio(4, -6).repr(), "-2/3");
        assert_eq!(Scalar::from_int(-12).repr(), "-12");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-3/4", "22/7"] {
            let v = Scalar::parse(s, ScalarMode::Rational).unwrap();
            assert_eq!(v.repr(), s);
        }
        assert!(Scalar::parse("1/0", ScalarMode::Rational).is_err());
        assert!(Scalar::parse("x", ScalarMode::Rational).is_err());
        assert_eq!(
            Scalar::parse("1.5", ScalarMode::Float).unwrap().to_f64(),
            1.5
        );
    }

    #[test]
    fn exact_roots() {
        assert_eq!(
            Scalar::ratio(9, 4).sqrt_exact().unwrap(),
            Scalar::ratio(3, 2)
        );
        assert!(Scalar::from_int(2).sqrt_exact().is_none());
        assert_eq!(
            Scalar::from_int(-512).nth_root_exact(9).unwrap(),
            Scalar::from_int(-2)
        );
        assert!(Scalar::from_int(-4).nth_root_exact(2).is_none());
    }

    #[test]
    fn mixed_mode_promotes() {
        let x = &Scalar::ratio(1, 2) + &Scalar::float(0.25);
        assert_eq!(x.mode(), ScalarMode::Float);
        assert_eq!(x.to_f64(), 0.75);
    }
}
