//! Generating functions of sequences (and their powers) with indices in
//! arithmetic progression, as explicit ratios of polynomials in `z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::rational::{binomial, Rational};
use crate::sequence::{term_by_recurrence, HoradamParams, LucasTerms, SeqKind, TermTable};

/// Polynomial in `z` with rational coefficients in ascending degree. The
/// zero polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    /// Coefficient of `z^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
    }

    fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().and_then(Rational::recip).expect("nonzero leading");
        let mut rem = self.0.clone();
        let mut quot = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = rem.last().expect("nonempty") * &lead_inv;
            for (t, d) in divisor.0.iter().enumerate() {
                rem[shift + t] -= &(&c * d);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    fn monic(&self) -> Poly {
        match self.leading().and_then(Rational::recip) {
            Some(inv) => self.scale(&inv),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

/// Renders every coefficient: `c0 + c1*z + c2*z^2`. Zero renders as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
        }
        Ok(())
    }
}

/// `num(z) / den(z)` with `den(0) = 1`, read as a formal power series.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    /// Scales both sides so the denominator's constant term is 1.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        let c0 = den.coeff(0);
        let inv = c0.recip().ok_or_else(|| {
            Error::DomainError("denominator must have a nonzero constant term".into())
        })?;
        Ok(RationalFn { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Lowest terms: divides out the polynomial gcd of numerator and
    /// denominator.
    pub fn reduced(&self) -> RationalFn {
        if self.num.is_zero() {
            return RationalFn { num: Poly::zero(), den: Poly::constant(Rational::one()) };
        }
        let g = self.num.gcd(&self.den);
        let (num, _) = self.num.div_rem(&g);
        let (den, _) = self.den.div_rem(&g);
        RationalFn::new(num, den).expect("gcd divides out a factor with nonzero constant term")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// First `m` power-series coefficients of `rf`, from
/// `c_j = num_j - sum_{t>=1} den_t c_{j-t}`.
pub fn series_coeffs(rf: &RationalFn, m: usize) -> Vec<Rational> {
    let den = rf.den.coeffs();
    let mut out: Vec<Rational> = Vec::with_capacity(m);
    for j in 0..m {
        let mut c = rf.num.coeff(j);
        for t in 1..den.len().min(j + 1) {
            c -= &(&den[t] * &out[j - t]);
        }
        out.push(c);
    }
    out
}

/// Generating function of `t_{rj+s}`: a linear numerator over
/// `q^r z^2 - v_r z + 1`.
pub fn gf_linear(params: &HoradamParams, kind: SeqKind, r: i64, s: i64) -> RationalFn {
    let q = params.q();
    let qr = q.pow(r).expect("q is nonzero");
    let qs = q.pow(s).expect("q is nonzero");
    let v_r = term_by_recurrence(params, SeqKind::V, r);
    let (lo, hi) = ((r - s).min(s - r).min(s), (r - s).max(s - r).max(s));
    let t = TermTable::new(params, kind, lo, hi);
    let linear = match kind {
        SeqKind::U => qs * t.get(r - s),
        SeqKind::V => -(qs * t.get(r - s)),
        SeqKind::W => -(&qr * t.get(s - r)),
    };
    let num = Poly::new(vec![t.get(s).clone(), linear]);
    let den = Poly::new(vec![Rational::one(), -v_r, qr]);
    RationalFn::new(num, den).expect("constant term is 1")
}

/// Generating function of `t_{rj+s}^n`, in lowest terms.
///
/// Each binomial term `i` contributes a linear numerator over
/// `q^{rn} z^2 - q^{ri} v_{r(n-2i)} z + 1`; terms `i` and `n - i` share a
/// denominator, so numerators are pooled per distinct denominator before
/// being brought over the common product.
pub fn gf_power(params: &HoradamParams, kind: SeqKind, n: u32, r: i64, s: i64) -> Result<RationalFn> {
    let nn = i64::from(n);
    let q = params.q();
    let qp = |e: i64| q.pow(e).expect("q is nonzero");
    let disc = params.disc();

    let mut indices = Vec::new();
    for i in 0..=nn {
        let m = nn - 2 * i;
        indices.extend([r * m, (r - s) * m, s * m, s * m + r * i, r * (nn - i)]);
    }
    let tables = LucasTerms::covering(params, indices);

    // (denominator, pooled numerator) per distinct denominator
    let mut parts: Vec<(Poly, Poly)> = Vec::new();
    let coeffs = params.binet_coeffs(SeqKind::W);
    let (a, b) = (&coeffs.alpha_coeff, &coeffs.beta_coeff);
    for i in 0..=nn {
        let m = nn - 2 * i;
        let den = Poly::new(vec![
            Rational::one(),
            -(qp(r * i) * tables.v(r * m)),
            qp(r * nn),
        ]);
        let scale = binomial(n, i as u32) * qp(s * i);
        let (c0, c1) = match kind {
            SeqKind::U | SeqKind::V => {
                let odd_u = kind == SeqKind::U && nn % 2 == 1;
                let seq = |m: i64| if odd_u { tables.u(m) } else { tables.v(m) };
                let sign = if kind == SeqKind::U && i % 2 == 1 { -scale } else { scale };
                let lin = qp(s * m + r * i) * seq((r - s) * m);
                let lin = if odd_u { lin } else { -lin };
                (
                    QuadExt::rational(&sign * seq(s * m), disc),
                    QuadExt::rational(sign * lin, disc),
                )
            }
            SeqKind::W => {
                let ca = &a.pow(nn - i)? * &b.pow(i)?;
                let cb = &a.pow(i)? * &b.pow(nn - i)?;
                let t3 = &ca * &(&tables.alpha_pow(s * m + r * i) * &tables.beta_pow(r * (nn - i)))
                    + &cb * &(&tables.alpha_pow(r * (nn - i)) * &tables.beta_pow(s * m + r * i));
                let t4 = &ca * &tables.alpha_pow(s * m) + &cb * &tables.beta_pow(s * m);
                (t4.scale(&scale), -t3.scale(&scale))
            }
        };
        let numer = Poly::new(vec![c0.to_rational()?, c1.to_rational()?]);
        match parts.iter_mut().find(|(d, _)| *d == den) {
            Some((_, pooled)) => *pooled = &*pooled + &numer,
            None => parts.push((den, numer)),
        }
    }

    let mut num = Poly::zero();
    let mut den = Poly::constant(Rational::one());
    for (g, (_, numer)) in parts.iter().enumerate() {
        let mut term = numer.clone();
        for (h, (other, _)) in parts.iter().enumerate() {
            if h != g {
                term = &term * other;
            }
        }
        num = &num + &term;
    }
    for (d, _) in &parts {
        den = &den * d;
    }

    let prefactor = match kind {
        SeqKind::U => Rational::from(2) * disc.pow(nn / 2).expect("D is nonzero"),
        SeqKind::V | SeqKind::W => Rational::from(2),
    };
    let inv = prefactor.recip().expect("prefactor is nonzero");
    Ok(RationalFn::new(num.scale(&inv), den)?.reduced())
}
