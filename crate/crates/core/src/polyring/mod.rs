//! Exact polynomial and rational-series arithmetic over big rationals.
//!
//! No floating point is used anywhere; polynomiality and rank statements in
//! the engine are exact, so the arithmetic must be too.

pub mod multipoly;
pub mod series;
pub mod unipoly;

pub use multipoly::{graded_lex, monomial_string, MultiPoly};
pub use series::{try_divide_binomial, BinomialFactor, FactorMultiset, RationalSeries};
pub use unipoly::{cyclotomic_factor, divisors, UniPoly};

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

/// Renders one signed term: "h1*h2", "-h1", "2*h1^2", "1", "-1/2".
pub(crate) fn format_term(coeff: &BigRational, mono: &str) -> String {
    if mono.is_empty() {
        return coeff.to_string();
    }
    if coeff.is_one() {
        mono.to_string()
    } else if (-coeff).is_one() {
        format!("-{}", mono)
    } else {
        format!("{}*{}", coeff, mono)
    }
}

/// Joins signed term strings with " + " / " - " separators; "0" when empty.
pub(crate) fn join_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = String>,
) -> fmt::Result {
    let mut any = false;
    for term in terms {
        if !any {
            write!(f, "{}", term)?;
        } else if let Some(rest) = term.strip_prefix('-') {
            write!(f, " - {}", rest)?;
        } else {
            write!(f, " + {}", term)?;
        }
        any = true;
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

/// Exact "p" or "p/q" rendering of a rational; never a decimal.
pub fn coeff_string(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses "p" or "p/q" back into a rational.
pub fn parse_coeff(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        None => s.parse().ok().map(BigRational::from_integer),
        Some((num, den)) => {
            let n = num.parse().ok()?;
            let d: num_bigint::BigInt = den.parse().ok()?;
            if d == 0.into() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
    }
}
