//! Horadam sequence families and term evaluation at any integer index.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::rational::Rational;

/// Parameters `(a, b, p, q)` of the family `w_0 = a`, `w_1 = b`,
/// `w_n = p*w_{n-1} - q*w_{n-2}`, with the discriminant `D = p^2 - 4q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HoradamParams {
    a: Rational,
    b: Rational,
    p: Rational,
    q: Rational,
    disc: Rational,
}

/// Which sequence of a family to evaluate. `U` and `V` ignore the family's
/// `(a, b)` and use `(0, 1)` and `(2, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    U,
    V,
    W,
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqKind::U => "u",
            SeqKind::V => "v",
            SeqKind::W => "w",
        })
    }
}

impl FromStr for SeqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" | "U" => Ok(SeqKind::U),
            "v" | "V" => Ok(SeqKind::V),
            "w" | "W" => Ok(SeqKind::W),
            _ => Err(Error::Parse { position: 0, message: format!("unknown sequence kind {s:?}") }),
        }
    }
}

/// Coefficients of the Binet form `w_n = A*alpha^n + B*beta^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinetCoeffs {
    pub alpha_coeff: QuadExt,
    pub beta_coeff: QuadExt,
}

impl HoradamParams {
    pub fn new(a: Rational, b: Rational, p: Rational, q: Rational) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidParam("p must be nonzero"));
        }
        if q.is_zero() {
            return Err(Error::InvalidParam("q must be nonzero"));
        }
        let disc = &p * &p - Rational::from(4) * &q;
        if disc.is_zero() {
            return Err(Error::DegenerateDiscriminant);
        }
        Ok(HoradamParams { a, b, p, q, disc })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(a: i64, b: i64, p: i64, q: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), p.into(), q.into())
    }

    pub fn fibonacci() -> Self {
        Self::from_ints(0, 1, 1, -1).expect("valid parameters")
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn disc(&self) -> &Rational {
        &self.disc
    }

    /// `(w_0, w_1)` for the requested kind.
    pub fn initial_values(&self, kind: SeqKind) -> (Rational, Rational) {
        match kind {
            SeqKind::U => (Rational::zero(), Rational::one()),
            SeqKind::V => (Rational::from(2), self.p.clone()),
            SeqKind::W => (self.a.clone(), self.b.clone()),
        }
    }

    /// The characteristic roots `alpha = (p + sqrt(D))/2`, `beta = (p - sqrt(D))/2`.
    pub fn roots(&self) -> (QuadExt, QuadExt) {
        let half = Rational::new(1, 2);
        let c0 = &self.p * &half;
        let alpha = QuadExt::from_parts(c0.clone(), half.clone(), self.disc.clone());
        let beta = QuadExt::from_parts(c0, -half, self.disc.clone());
        (alpha, beta)
    }

    /// `A = (b - a*beta)/(alpha - beta)`, `B = (a*alpha - b)/(alpha - beta)`.
    pub fn binet_coeffs(&self, kind: SeqKind) -> BinetCoeffs {
        let (a, b) = self.initial_values(kind);
        let (alpha, beta) = self.roots();
        // alpha - beta = sqrt(D), invertible because D != 0.
        let inv_diff = QuadExt::sqrt_disc(&self.disc).inv().expect("D is nonzero");
        let a = QuadExt::rational(a, &self.disc);
        let b = QuadExt::rational(b, &self.disc);
        BinetCoeffs {
            alpha_coeff: &(&b - &(&a * &beta)) * &inv_diff,
            beta_coeff: &(&(&a * &alpha) - &b) * &inv_diff,
        }
    }
}

/// `w_n` by stepping the recurrence forward from `(w_0, w_1)`, or backward
/// via `w_{n-2} = (p*w_{n-1} - w_n)/q` for negative `n`.
pub fn term_by_recurrence(params: &HoradamParams, kind: SeqKind, n: i64) -> Rational {
    let (w0, w1) = params.initial_values(kind);
    match n {
        0 => w0,
        n if n > 0 => {
            let (mut prev, mut cur) = (w0, w1);
            for _ in 1..n {
                let next = &params.p * &cur - &params.q * &prev;
                prev = cur;
                cur = next;
            }
            cur
        }
        n => {
            let q_inv = params.q.recip().expect("q is nonzero");
            // (cur, next) = (w_m, w_{m+1}), stepping m down to n
            let (mut cur, mut next) = (w0, w1);
            for _ in n..0 {
                let prev = (&params.p * &cur - &next) * &q_inv;
                next = cur;
                cur = prev;
            }
            cur
        }
    }
}

/// `w_n = A*alpha^n + B*beta^n` evaluated in `Q[sqrt(D)]`.
pub fn term_by_binet(params: &HoradamParams, kind: SeqKind, n: i64) -> Result<Rational> {
    let (alpha, beta) = params.roots();
    let coeffs = params.binet_coeffs(kind);
    let value = &coeffs.alpha_coeff * &alpha.pow(n)? + &coeffs.beta_coeff * &beta.pow(n)?;
    value.to_rational()
}

/// Terms `w_lo ..= w_hi` of one sequence, filled by a single sweep of the
/// recurrence.
#[derive(Clone, Debug)]
pub struct TermTable {
    lo: i64,
    values: Vec<Rational>,
}

impl TermTable {
    pub fn new(params: &HoradamParams, kind: SeqKind, lo: i64, hi: i64) -> Self {
        let lo = lo.min(0);
        let hi = hi.max(1);
        let len = (hi - lo + 1) as usize;
        let origin = (-lo) as usize;
        let mut values = vec![Rational::zero(); len];
        let (w0, w1) = params.initial_values(kind);
        values[origin] = w0;
        values[origin + 1] = w1;
        for idx in origin + 2..len {
            values[idx] = &params.p * &values[idx - 1] - &params.q * &values[idx - 2];
        }
        if origin > 0 {
            let q_inv = params.q.recip().expect("q is nonzero");
            for idx in (0..origin).rev() {
                values[idx] = (&params.p * &values[idx + 1] - &values[idx + 2]) * &q_inv;
            }
        }
        TermTable { lo, values }
    }

    /// Panics when `n` lies outside the table.
    pub fn get(&self, n: i64) -> &Rational {
        &self.values[(n - self.lo) as usize]
    }
}

/// `u_m`, `v_m` and `q^m` for every `m` in a window `[lo, hi]`, the
/// ingredients of every closed form. Also yields the root powers
/// `alpha^m = (v_m + u_m sqrt(D))/2` and `beta^m = conj(alpha^m)`.
///
/// Build one per family and reuse it across many sums to avoid re-running
/// the recurrence.
#[derive(Clone, Debug)]
pub struct LucasTerms {
    params: HoradamParams,
    lo: i64,
    hi: i64,
    u: TermTable,
    v: TermTable,
    q_pows: Vec<Rational>,
}

impl LucasTerms {
    pub fn new(params: &HoradamParams, lo: i64, hi: i64) -> Self {
        let lo = lo.min(0);
        let hi = hi.max(1);
        let len = (hi - lo + 1) as usize;
        let origin = (-lo) as usize;
        let mut q_pows = vec![Rational::one(); len];
        for idx in origin + 1..len {
            q_pows[idx] = &q_pows[idx - 1] * &params.q;
        }
        let q_inv = params.q.recip().expect("q is nonzero");
        for idx in (0..origin).rev() {
            q_pows[idx] = &q_pows[idx + 1] * &q_inv;
        }
        LucasTerms {
            params: params.clone(),
            lo,
            hi,
            u: TermTable::new(params, SeqKind::U, lo, hi),
            v: TermTable::new(params, SeqKind::V, lo, hi),
            q_pows,
        }
    }

    /// Smallest window containing every index in `indices`.
    pub fn covering(params: &HoradamParams, indices: impl IntoIterator<Item = i64>) -> Self {
        let (lo, hi) = indices.into_iter().fold((0, 1), |(lo, hi), m| (m.min(lo), m.max(hi)));
        Self::new(params, lo, hi)
    }

    pub fn params(&self) -> &HoradamParams {
        &self.params
    }

    pub fn covers(&self, lo: i64, hi: i64) -> bool {
        self.lo <= lo && hi <= self.hi
    }

    /// Panics outside the window.
    pub fn u(&self, m: i64) -> &Rational {
        self.u.get(m)
    }

    /// Panics outside the window.
    pub fn v(&self, m: i64) -> &Rational {
        self.v.get(m)
    }

    /// `q^e`; exponents outside the window are computed directly.
    pub fn q_pow(&self, e: i64) -> Rational {
        if self.lo <= e && e <= self.hi {
            self.q_pows[(e - self.lo) as usize].clone()
        } else {
            self.params.q.pow(e).expect("q is nonzero")
        }
    }

    pub fn alpha_pow(&self, m: i64) -> QuadExt {
        let half = Rational::new(1, 2);
        QuadExt::from_parts(self.v(m) * &half, self.u(m) * &half, self.params.disc.clone())
    }

    pub fn beta_pow(&self, m: i64) -> QuadExt {
        self.alpha_pow(m).conj()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn parameter_validation() {
        let fib = HoradamParams::from_ints(0, 1, 1, -1).unwrap();
        assert_eq!(fib.disc(), &r(5));
        let lucas = HoradamParams::from_ints(2, 1, 1, -1).unwrap();
        assert_eq!(lucas.disc(), &r(5));
        assert_eq!(HoradamParams::from_ints(0, 1, 2, 1), Err(Error::DegenerateDiscriminant));
        assert!(matches!(HoradamParams::from_ints(0, 1, 0, 1), Err(Error::InvalidParam(_))));
        assert!(matches!(HoradamParams::from_ints(0, 1, 1, 0), Err(Error::InvalidParam(_))));
    }

    #[test]
    fn roots_of_characteristic_polynomial() {
        let (alpha, beta) = HoradamParams::fibonacci().roots();
        assert_eq!(alpha.to_string(), "1/2 + 1/2*sqrt(5)");
        assert_eq!(beta.to_string(), "1/2 + -1/2*sqrt(5)");

        let params = HoradamParams::from_ints(0, 1, 3, 2).unwrap();
        let (alpha, beta) = params.roots();
        assert_eq!(alpha.to_string(), "3/2 + 1/2*sqrt(1)");
        assert_eq!(beta.to_string(), "3/2 + -1/2*sqrt(1)");
        assert_eq!((&alpha * &beta).to_rational().unwrap(), r(2));
        assert_eq!((&alpha + &beta).to_rational().unwrap(), r(3));
        assert_eq!(&alpha - &beta, QuadExt::sqrt_disc(params.disc()));
    }

    #[test]
    fn binet_coefficients() {
        let params = HoradamParams::from_ints(3, 2, 1, -1).unwrap();
        let d = params.disc().clone();
        let u = params.binet_coeffs(SeqKind::U);
        assert_eq!(u.alpha_coeff, QuadExt::new(r(0), Rational::new(1, 5), d.clone()).unwrap());
        assert_eq!(u.beta_coeff, -&u.alpha_coeff);
        let v = params.binet_coeffs(SeqKind::V);
        assert!(v.alpha_coeff.is_one() && v.beta_coeff.is_one());

        let w = params.binet_coeffs(SeqKind::W);
        let (alpha, beta) = params.roots();
        assert_eq!((&w.alpha_coeff + &w.beta_coeff).to_rational().unwrap(), r(3));
        let b = &w.alpha_coeff * &alpha + &w.beta_coeff * &beta;
        assert_eq!(b.to_rational().unwrap(), r(2));
        // A = (2 - 3*beta)/sqrt(5) = 3/2 + 1/10*sqrt(5)
        assert_eq!(w.alpha_coeff.to_string(), "3/2 + 1/10*sqrt(5)");
    }

    #[test]
    fn recurrence_examples() {
        let fib = HoradamParams::fibonacci();
        assert_eq!(term_by_recurrence(&fib, SeqKind::U, 6), r(8));
        assert_eq!(term_by_recurrence(&fib, SeqKind::U, -5), r(5));
        assert_eq!(term_by_recurrence(&fib, SeqKind::U, -6), r(-8));
        let any = HoradamParams::from_ints(7, -3, 3, 2).unwrap();
        assert_eq!(term_by_recurrence(&any, SeqKind::U, 0), r(0));
        assert_eq!(term_by_recurrence(&any, SeqKind::U, 1), r(1));
        assert_eq!(term_by_recurrence(&any, SeqKind::U, -1), Rational::new(-1, 2));
    }

    #[test]
    fn binet_examples() {
        let lucas = HoradamParams::fibonacci();
        assert_eq!(term_by_binet(&lucas, SeqKind::V, 4).unwrap(), r(7));
        assert_eq!(term_by_binet(&lucas, SeqKind::U, -5).unwrap(), r(5));
        let w = HoradamParams::from_ints(3, 2, 1, -1).unwrap();
        assert_eq!(term_by_binet(&w, SeqKind::W, 3).unwrap(), r(7));
    }

    #[test]
    fn table_matches_pointwise_recurrence() {
        let params = HoradamParams::new(r(-1), r(4), Rational::new(3, 2), r(-2)).unwrap();
        for kind in [SeqKind::U, SeqKind::V, SeqKind::W] {
            let table = TermTable::new(&params, kind, -9, 12);
            for n in -9..=12 {
                assert_eq!(table.get(n), &term_by_recurrence(&params, kind, n));
            }
        }
    }

    #[test]
    fn lucas_terms_window() {
        let params = HoradamParams::from_ints(0, 1, 3, -2).unwrap();
        let terms = LucasTerms::new(&params, -6, 9);
        let (alpha, beta) = params.roots();
        for m in -6..=9 {
            assert_eq!(terms.alpha_pow(m), alpha.pow(m).unwrap());
            assert_eq!(terms.beta_pow(m), beta.pow(m).unwrap());
            assert_eq!(terms.q_pow(m), params.q().pow(m).unwrap());
        }
        assert_eq!(terms.q_pow(40), params.q().pow(40).unwrap());
        assert!(terms.covers(-6, 9) && !terms.covers(-7, 0));
    }

    #[test]
    fn kind_overrides_initial_values() {
        let p = HoradamParams::from_ints(5, 5, 2, -2).unwrap();
        let as_u = HoradamParams::from_ints(0, 1, 2, -2).unwrap();
        let as_v = HoradamParams::from_ints(2, 2, 2, -2).unwrap();
        for n in -8..=8 {
            assert_eq!(
                term_by_recurrence(&p, SeqKind::U, n),
                term_by_recurrence(&as_u, SeqKind::W, n)
            );
            assert_eq!(
                term_by_recurrence(&p, SeqKind::V, n),
                term_by_recurrence(&as_v, SeqKind::W, n)
            );
        }
    }
}
