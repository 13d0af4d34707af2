//! Formal rational series: a multivariate numerator over a multiset of
//! binomial factors (1 - h_i^m).
//!
//! Every denominator produced by the engine has this shape, which turns
//! rational-function simplification into repeated exact univariate division:
//! each binomial splits into the factors of its divisors, shared factors
//! cancel into the numerator, and the remainder is repacked into binomials.
//! No multivariate gcd is ever computed.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::multipoly::MultiPoly;
use super::unipoly::{cyclotomic_factor, divisors, UniPoly};

/// The factor (1 - h_{var+1}^exponent) of a series denominator.
/// Variable indices are 0-based internally and 1-based in display.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialFactor {
    pub var: usize,
    pub exponent: u32,
}

impl BinomialFactor {
    pub fn new(var: usize, exponent: u32) -> Self {
        assert!(exponent >= 1, "binomial exponent must be >= 1");
        BinomialFactor { var, exponent }
    }

    /// Expansion as a polynomial in a `vars`-variable ring.
    pub fn expand(&self, vars: usize) -> MultiPoly {
        MultiPoly::from_univariate(&UniPoly::binomial(self.exponent), self.var, vars)
    }
}

impl fmt::Display for BinomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "(1 - h{})", self.var + 1)
        } else {
            write!(f, "(1 - h{}^{})", self.var + 1, self.exponent)
        }
    }
}

/// Multiset of binomial factors, keyed by (variable, exponent).
pub type FactorMultiset = BTreeMap<(usize, u32), u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: MultiPoly,
    denominator: FactorMultiset,
}

impl RationalSeries {
    pub fn new(numerator: MultiPoly, factors: impl IntoIterator<Item = BinomialFactor>) -> Self {
        let mut denominator = FactorMultiset::new();
        for f in factors {
            assert!(f.var < numerator.vars(), "denominator variable out of range");
            *denominator.entry((f.var, f.exponent)).or_insert(0) += 1;
        }
        RationalSeries { numerator, denominator }
    }

    /// A polynomial viewed as a series with empty denominator.
    pub fn from_polynomial(p: MultiPoly) -> Self {
        RationalSeries { numerator: p, denominator: FactorMultiset::new() }
    }

    pub fn vars(&self) -> usize {
        self.numerator.vars()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &FactorMultiset {
        &self.denominator
    }

    /// Denominator factors with multiplicity, flattened and sorted.
    pub fn denominator_factors(&self) -> Vec<BinomialFactor> {
        let mut out = Vec::new();
        for (&(var, exponent), &mult) in &self.denominator {
            for _ in 0..mult {
                out.push(BinomialFactor { var, exponent });
            }
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_empty()
    }

    /// Re-homes a univariate series (vars = 1) into variable `var` of a
    /// `vars`-variable ring.
    pub fn embed(&self, vars: usize, var: usize) -> RationalSeries {
        assert_eq!(self.vars(), 1, "embed expects a univariate series");
        assert!(var < vars);
        let numerator =
            MultiPoly::from_univariate(&self.numerator.restrict_to_var(0), var, vars);
        let denominator = self
            .denominator
            .iter()
            .map(|(&(_, m), &mult)| ((var, m), mult))
            .collect();
        RationalSeries { numerator, denominator }
    }

    /// Sum over the least common multiset of binomial factors: the
    /// multiplicity of each (variable, exponent) pair is the max of the two
    /// sides, and each numerator is scaled by its complement.
    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        assert_eq!(self.vars(), other.vars(), "variable count mismatch");
        let mut common = self.denominator.clone();
        for (key, &mult) in &other.denominator {
            let entry = common.entry(*key).or_insert(0);
            *entry = (*entry).max(mult);
        }
        let left = scale_to_common(&self.numerator, &self.denominator, &common);
        let right = scale_to_common(&other.numerator, &other.denominator, &common);
        RationalSeries { numerator: left.add(&right), denominator: common }
    }

    /// Product: numerators multiply, denominator multisets concatenate.
    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        assert_eq!(self.vars(), other.vars(), "variable count mismatch");
        let mut denominator = self.denominator.clone();
        for (key, mult) in &other.denominator {
            *denominator.entry(*key).or_insert(0) += mult;
        }
        RationalSeries { numerator: self.numerator.mul(&other.numerator), denominator }
    }

    pub fn scale(&self, s: &BigRational) -> RationalSeries {
        RationalSeries {
            numerator: self.numerator.scale(s),
            denominator: if s.is_zero() { FactorMultiset::new() } else { self.denominator.clone() },
        }
    }

    /// Cancels every denominator factor that divides the numerator exactly.
    ///
    /// Binomials are split into the cyclotomic-style factors of their
    /// exponents' divisors, each factor is divided out of the numerator as
    /// often as possible, and the remainder is repacked into binomials
    /// (padding the numerator with the missing complements when a partial
    /// pack is left over). The result has an empty denominator iff the
    /// series is a polynomial.
    pub fn normalize(&self) -> RationalSeries {
        let vars = self.vars();
        let mut numerator = self.numerator.clone();
        // split into factor multisets per variable
        let mut split: Vec<BTreeMap<u32, u32>> = vec![BTreeMap::new(); vars];
        for (&(var, m), &mult) in &self.denominator {
            for d in divisors(m) {
                *split[var].entry(d).or_insert(0) += mult;
            }
        }
        if numerator.is_zero() {
            return RationalSeries::from_polynomial(numerator);
        }
        // cancel, largest factor first
        for (var, counts) in split.iter_mut().enumerate() {
            let ds: Vec<u32> = counts.keys().rev().copied().collect();
            for d in ds {
                let factor = cyclotomic_factor(d);
                while counts[&d] > 0 {
                    match numerator.div_exact_univariate(var, &factor) {
                        Some(q) => {
                            numerator = q;
                            *counts.get_mut(&d).unwrap() -= 1;
                        }
                        None => break,
                    }
                }
                if counts[&d] == 0 {
                    counts.remove(&d);
                }
            }
        }
        // repack what is left into binomials
        let mut denominator = FactorMultiset::new();
        for (var, counts) in split.iter_mut().enumerate() {
            while let Some((&top, _)) = counts.iter().next_back() {
                for d in divisors(top) {
                    match counts.get_mut(&d) {
                        Some(c) if *c > 0 => {
                            *c -= 1;
                            if *c == 0 {
                                counts.remove(&d);
                            }
                        }
                        _ => {
                            // complete the pack; the complement multiplies
                            // into the numerator to keep the value unchanged
                            numerator = numerator.mul_univariate(var, &cyclotomic_factor(d));
                        }
                    }
                }
                *denominator.entry((var, top)).or_insert(0) += 1;
            }
        }
        RationalSeries { numerator, denominator }
    }

    /// Power-series expansion with every term of any variable-degree above
    /// `bound` discarded. Each denominator factor expands as a truncated
    /// geometric series.
    pub fn truncate(&self, bound: u32) -> MultiPoly {
        let vars = self.vars();
        let mut out = self.numerator.truncate_box(bound);
        for (&(var, m), &mult) in &self.denominator {
            let mut geo = MultiPoly::zero(vars);
            let mut step = 0u32;
            while step <= bound {
                let mut e = vec![0u32; vars];
                e[var] = step;
                geo = geo.add(&MultiPoly::monomial(vars, e, BigRational::one()));
                step += m;
            }
            for _ in 0..mult {
                out = out.mul(&geo).truncate_box(bound);
            }
        }
        out
    }
}

fn scale_to_common(
    numerator: &MultiPoly,
    own: &FactorMultiset,
    common: &FactorMultiset,
) -> MultiPoly {
    let mut out = numerator.clone();
    for (&(var, m), &mult) in common {
        let deficit = mult - own.get(&(var, m)).copied().unwrap_or(0);
        for _ in 0..deficit {
            out = out.mul_univariate(var, &UniPoly::binomial(m));
        }
    }
    out
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({}) / (", self.numerator)?;
        let mut first = true;
        for (&(var, m), &mult) in &self.denominator {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}", BinomialFactor { var, exponent: m })?;
            if mult > 1 {
                write!(f, "^{}", mult)?;
            }
        }
        write!(f, ")")
    }
}

/// Exact division of a polynomial by (1 - h_i^m); None when not divisible.
pub fn try_divide_binomial(p: &MultiPoly, factor: BinomialFactor) -> Option<MultiPoly> {
    p.div_exact_univariate(factor.var, &UniPoly::binomial(factor.exponent))
}
