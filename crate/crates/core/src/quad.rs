//! Arithmetic in the quadratic ring `Q[sqrt(D)]`.
//!
//! Every element carries its own `D`, so mixing elements from different
//! rings is caught at the operation rather than producing garbage. `D` may
//! be a perfect square, in which case the ring has zero divisors and
//! [`QuadExt::inv`] reports [`Error::NotInvertible`] for them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

/// The element `c0 + c1*sqrt(disc)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    c0: Rational,
    c1: Rational,
    disc: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
}

impl QuadExt {
    pub fn new(c0: Rational, c1: Rational, disc: Rational) -> Result<Self> {
        if disc.is_zero() {
            return Err(Error::InvalidParam("ring constant D must be nonzero"));
        }
        Ok(QuadExt { c0, c1, disc })
    }

    /// Caller guarantees `disc != 0`.
    pub(crate) fn from_parts(c0: Rational, c1: Rational, disc: Rational) -> Self {
        debug_assert!(!disc.is_zero());
        QuadExt { c0, c1, disc }
    }

    /// Embeds a rational into the ring with constant `disc`.
    pub fn rational(c: Rational, disc: &Rational) -> Self {
        Self::from_parts(c, Rational::zero(), disc.clone())
    }

    pub fn zero(disc: &Rational) -> Self {
        Self::rational(Rational::zero(), disc)
    }

    pub fn one(disc: &Rational) -> Self {
        Self::rational(Rational::one(), disc)
    }

    /// `sqrt(disc)` itself.
    pub fn sqrt_disc(disc: &Rational) -> Self {
        Self::from_parts(Rational::zero(), Rational::one(), disc.clone())
    }

    pub fn c0(&self) -> &Rational {
        &self.c0
    }

    pub fn c1(&self) -> &Rational {
        &self.c1
    }

    pub fn disc(&self) -> &Rational {
        &self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.c0.is_one() && self.c1.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.c1.is_zero()
    }

    fn check_disc(&self, rhs: &QuadExt) -> Result<()> {
        if self.disc == rhs.disc {
            Ok(())
        } else {
            Err(Error::DiscMismatch(self.disc.to_string(), rhs.disc.to_string()))
        }
    }

    pub fn arith(&self, rhs: &QuadExt, op: QuadOp) -> Result<QuadExt> {
        self.check_disc(rhs)?;
        Ok(match op {
            QuadOp::Add => self.add_unchecked(rhs),
            QuadOp::Sub => self.sub_unchecked(rhs),
            QuadOp::Mul => self.mul_unchecked(rhs),
        })
    }

    pub fn checked_add(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.arith(rhs, QuadOp::Add)
    }

    pub fn checked_sub(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.arith(rhs, QuadOp::Sub)
    }

    pub fn checked_mul(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.arith(rhs, QuadOp::Mul)
    }

    fn add_unchecked(&self, rhs: &QuadExt) -> QuadExt {
        Self::from_parts(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1, self.disc.clone())
    }

    fn sub_unchecked(&self, rhs: &QuadExt) -> QuadExt {
        Self::from_parts(&self.c0 - &rhs.c0, &self.c1 - &rhs.c1, self.disc.clone())
    }

    fn mul_unchecked(&self, rhs: &QuadExt) -> QuadExt {
        // Skip the surd cross terms when either side is rational; most
        // operands in the closed forms are.
        if rhs.c1.is_zero() {
            return self.scale(&rhs.c0);
        }
        if self.c1.is_zero() {
            return rhs.scale(&self.c0);
        }
        let c0 = &self.c0 * &rhs.c0 + &(&self.c1 * &rhs.c1) * &self.disc;
        let c1 = &self.c0 * &rhs.c1 + &self.c1 * &rhs.c0;
        Self::from_parts(c0, c1, self.disc.clone())
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, k: &Rational) -> QuadExt {
        Self::from_parts(&self.c0 * k, &self.c1 * k, self.disc.clone())
    }

    pub fn conj(&self) -> QuadExt {
        Self::from_parts(self.c0.clone(), -&self.c1, self.disc.clone())
    }

    /// `c0^2 - D*c1^2`, the product of the element and its conjugate.
    pub fn norm(&self) -> Rational {
        &self.c0 * &self.c0 - &(&self.c1 * &self.c1) * &self.disc
    }

    pub fn conj_norm(&self) -> (QuadExt, Rational) {
        (self.conj(), self.norm())
    }

    pub fn inv(&self) -> Result<QuadExt> {
        let norm = self.norm();
        let inv_norm = norm.recip().ok_or(Error::NotInvertible)?;
        Ok(self.conj().scale(&inv_norm))
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<QuadExt> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = QuadExt::one(&self.disc);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    /// The rational value of an element with no surd part.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.c1.is_zero() {
            Ok(self.c0.clone())
        } else {
            Err(Error::SurdResidue(self.to_string()))
        }
    }

    /// Whether the element equals one as a number. For a square `D = d^2`
    /// this reads `sqrt(D)` as `+d`, so `(p + sqrt(D))/2` is the larger root.
    pub fn is_one_valued(&self) -> bool {
        match self.split() {
            Some((plus, _)) => plus.is_one(),
            None => self.is_one(),
        }
    }

    /// When `D = d^2` for a rational `d`, the ring splits as `Q x Q` via
    /// `sqrt(D) -> +d` and `sqrt(D) -> -d`.
    pub(crate) fn split(&self) -> Option<(Rational, Rational)> {
        let d = self.disc.sqrt()?;
        let t = &self.c1 * &d;
        Some((&self.c0 + &t, &self.c0 - &t))
    }

    /// Inverse of [`QuadExt::split`].
    pub(crate) fn unsplit(plus: Rational, minus: Rational, disc: &Rational) -> Option<QuadExt> {
        let d = disc.sqrt()?;
        let two = Rational::from(2);
        let c0 = (&plus + &minus) / &two;
        let c1 = (plus - minus) / (two * d);
        Some(Self::from_parts(c0, c1, disc.clone()))
    }
}

// Operator forms panic on mismatched rings; use `arith` for a checked result.
macro_rules! quad_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                assert_eq!(self.disc, rhs.disc, "QuadExt operands from different rings");
                self.$inner(rhs)
            }
        }
        impl $trait<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                $trait::$method(&self, rhs)
            }
        }
    };
}

quad_binop!(Add, add, add_unchecked);
quad_binop!(Sub, sub, sub_unchecked);
quad_binop!(Mul, mul, mul_unchecked);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::from_parts(-&self.c0, -&self.c1, self.disc.clone())
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.c0, self.c1, self.disc)
    }
}

/// Parses exactly the rendered form `c0 + c1*sqrt(D)`.
impl FromStr for QuadExt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |position: usize, message: &str| Error::Parse {
            position,
            message: message.to_string(),
        };
        let plus = s.find(" + ").ok_or_else(|| err(0, "expected 'c0 + c1*sqrt(D)'"))?;
        let c0 = parse_rational(&s[..plus], 0)?;
        let rest_at = plus + 3;
        let rest = &s[rest_at..];
        let star = rest.find("*sqrt(").ok_or_else(|| err(rest_at, "expected '*sqrt('"))?;
        let c1 = parse_rational(&rest[..star], rest_at)?;
        let d_at = rest_at + star + 6;
        let tail = &s[d_at..];
        let close = tail.find(')').ok_or_else(|| err(s.len(), "expected ')'"))?;
        if close + 1 != tail.len() {
            return Err(err(d_at + close + 1, "unexpected trailing input"));
        }
        let disc = parse_rational(&tail[..close], d_at)?;
        QuadExt::new(c0, c1, disc).map_err(|_| err(d_at, "ring constant D must be nonzero"))
    }
}
