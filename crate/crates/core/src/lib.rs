//! Exact evaluation of Horadam and Lucas sequences, closed-form partial sums
//! and power sums over indices in arithmetic progression, and their
//! generating functions as rational functions.
//!
//! All arithmetic is exact: scalars are arbitrary-precision [`Rational`]s and
//! the characteristic roots live in the quadratic ring `Q[sqrt(D)]`
//! ([`QuadExt`]).

pub mod closed_forms;
pub mod error;
pub mod genfunc;
pub mod quad;
pub mod rational;
pub mod sequence;
pub mod verify;

pub use closed_forms::{
    brute_sum, geom_partial, lemma1_closed_form, lemma1_inf, lemma1_sum, lemma2_closed_form,
    lemma2_inf, lemma2_power_sum, sum_linear, sum_power, sum_power_with, LemmaArgs, SumSpec,
};
pub use error::{Error, Result, Vanishing};
pub use genfunc::{gf_linear, gf_power, series_coeffs, Poly, RationalFn};
pub use quad::{QuadExt, QuadOp};
pub use rational::{binomial, Rational};
pub use sequence::{term_by_binet, term_by_recurrence, BinetCoeffs, HoradamParams, LucasTerms, SeqKind,
    TermTable,
};
