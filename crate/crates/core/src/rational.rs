//! Arbitrary-precision exact fractions.
//!
//! [`Rational`] is always stored reduced with a positive denominator, so two
//! values are equal exactly when their numerators and denominators are.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom` in lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Integer power; negative exponents invert first. `None` for `0^e`, `e < 0`.
    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Rational::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    /// Exact square root when `self` is the square of a rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rational::new(n, d))
        } else {
            None
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Parses `[+-]digits` or `[+-]digits/digits`. Decimal points and
/// exponents are rejected so no input is silently rounded.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_rational(s, 0)
    }
}

/// Parses a rational, reporting error positions offset by `base`.
pub(crate) fn parse_rational(s: &str, base: usize) -> Result<Rational, Error> {
    let err = |position: usize, message: &str| Error::Parse {
        position: base + position,
        message: message.to_string(),
    };
    let bytes = s.as_bytes();
    let mut pos = 0;
    if matches!(bytes.first(), Some(b'+') | Some(b'-')) {
        pos = 1;
    }
    let int_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == int_start {
        return Err(err(pos, "expected digits"));
    }
    let numer: BigInt = s[..pos].parse().map_err(|_| err(0, "bad integer"))?;
    if pos == bytes.len() {
        return Ok(Rational::from_integer(numer));
    }
    if bytes[pos] != b'/' {
        return Err(err(pos, "expected '/' or end of input"));
    }
    pos += 1;
    let den_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == den_start {
        return Err(err(pos, "expected denominator digits"));
    }
    if pos != bytes.len() {
        return Err(err(pos, "unexpected trailing input"));
    }
    let denom: BigInt = s[den_start..].parse().map_err(|_| err(den_start, "bad integer"))?;
    if denom.is_zero() {
        return Err(err(den_start, "zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

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

/// Integer and zero operands skip the gcd work in `Ratio`; the closed forms
/// are dominated by such operands.
fn fast_add(a: &BigRational, b: &BigRational) -> Option<BigRational> {
    (a.is_integer() && b.is_integer()).then(|| BigRational::from_integer(a.numer() + b.numer()))
}

fn fast_sub(a: &BigRational, b: &BigRational) -> Option<BigRational> {
    (a.is_integer() && b.is_integer()).then(|| BigRational::from_integer(a.numer() - b.numer()))
}

fn fast_mul(a: &BigRational, b: &BigRational) -> Option<BigRational> {
    if a.is_zero() || b.is_zero() {
        Some(BigRational::zero())
    } else if a.is_integer() && b.is_integer() {
        Some(BigRational::from_integer(a.numer() * b.numer()))
    } else {
        None
    }
}

fn fast_div(_: &BigRational, _: &BigRational) -> Option<BigRational> {
    None
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $fast:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                match $fast(&self.0, &rhs.0) {
                    Some(v) => Rational(v),
                    None => Rational($trait::$method(&self.0, &rhs.0)),
                }
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, fast_add);
forward_binop!(Sub, sub, fast_sub);
forward_binop!(Mul, mul, fast_mul);
// Division panics on a zero divisor, like the integer types.
forward_binop!(Div, div, fast_div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Binomial coefficient `C(n, i)` as an exact rational.
pub fn binomial(n: u32, i: u32) -> Rational {
    if i > n {
        return Rational::zero();
    }
    let i = i.min(n - i);
    let mut acc = BigInt::one();
    for t in 0..i {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    Rational::from_integer(acc)
}
