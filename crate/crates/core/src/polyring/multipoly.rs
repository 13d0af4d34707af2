//! Sparse multivariate polynomials over big rationals.
//!
//! Terms map exponent vectors to nonzero coefficients; zero coefficients are
//! never stored. Internal storage is unordered; display and serialization
//! sort terms in graded lexicographic order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: HashMap<Vec<u32>, BigRational>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly { vars, terms: HashMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        MultiPoly::constant(vars, BigRational::one())
    }

    pub fn constant(vars: usize, c: BigRational) -> Self {
        let mut terms = HashMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars], c);
        }
        MultiPoly { vars, terms }
    }

    /// A single term `c * h^exponents`.
    pub fn monomial(vars: usize, exponents: Vec<u32>, c: BigRational) -> Self {
        assert_eq!(exponents.len(), vars, "exponent vector length mismatch");
        let mut terms = HashMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        MultiPoly { vars, terms }
    }

    /// Places a univariate polynomial into variable `var` of a `vars`-variable ring.
    pub fn from_univariate(p: &UniPoly, var: usize, vars: usize) -> Self {
        assert!(var < vars);
        let mut terms = HashMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0u32; vars];
            e[var] = i as u32;
            terms.insert(e, c.clone());
        }
        MultiPoly { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![0; self.vars])
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        MultiPoly { vars: self.vars, terms }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut terms: HashMap<Vec<u32>, BigRational> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { vars: self.vars, terms }
    }

    pub fn scale(&self, s: &BigRational) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Multiplies by a univariate polynomial in variable `var`.
    pub fn mul_univariate(&self, var: usize, p: &UniPoly) -> MultiPoly {
        self.mul(&MultiPoly::from_univariate(p, var, self.vars))
    }

    /// Sum of all coefficients, i.e. the value at (1, ..., 1).
    pub fn eval_at_ones(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Largest exponent of `var` across all terms.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Per-variable box truncation: drops every term with any exponent
    /// exceeding `bound`.
    pub fn truncate_box(&self, bound: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().all(|&x| x <= bound))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// All variables except `var` set to zero, as a univariate polynomial.
    pub fn restrict_to_var(&self, var: usize) -> UniPoly {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().all(|(i, &x)| i == var || x == 0) {
                coeffs[e[var] as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// The polynomial with variables permuted: variable `i` of the result is
    /// variable `perm[i]` of the input.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.vars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let ne: Vec<u32> = (0..self.vars).map(|i| e[perm[i]]).collect();
                (ne, c.clone())
            })
            .collect();
        MultiPoly { vars: self.vars, terms }
    }

    /// Exact division by a univariate polynomial in `var`, treating the other
    /// variables as scalars. Returns None when the division leaves a
    /// remainder; the input is never modified.
    pub fn div_exact_univariate(&self, var: usize, divisor: &UniPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.degree().unwrap() as u32;
        if d == 0 {
            let inv = BigRational::one() / divisor.constant_term();
            return Some(self.scale(&inv));
        }
        let lead = divisor.coeffs()[d as usize].clone();
        let mut remainder = self.clone();
        let mut quotient = MultiPoly::zero(self.vars);
        loop {
            let top = match remainder.degree_in(var) {
                None => break, // remainder is zero: exact
                Some(t) if t < d => return None,
                Some(t) => t,
            };
            // peel off every term with the top degree in var
            let mut block = MultiPoly::zero(self.vars);
            for (e, c) in &remainder.terms {
                if e[var] == top {
                    let mut ne = e.clone();
                    ne[var] = top - d;
                    block.terms.insert(ne, c / &lead);
                }
            }
            quotient = quotient.add(&block);
            remainder = remainder.sub(&block.mul_univariate(var, divisor));
        }
        Some(quotient)
    }

    /// The gcd of the divisor with the full content of `self` viewed as a
    /// univariate polynomial in `var`: the largest factor of `divisor`
    /// dividing `self`. Returned with constant term 1.
    ///
    /// Requires a divisor with nonzero constant term.
    pub fn univariate_content_gcd(&self, var: usize, divisor: &UniPoly) -> UniPoly {
        let mut g = divisor.clone();
        let mut slices: HashMap<Vec<u32>, Vec<(u32, BigRational)>> = HashMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            let pow = key[var];
            key[var] = 0;
            slices.entry(key).or_default().push((pow, c.clone()));
        }
        for slice in slices.values() {
            if g.degree() == Some(0) {
                break;
            }
            let deg = slice.iter().map(|(p, _)| *p).max().unwrap_or(0) as usize;
            let mut coeffs = vec![BigRational::zero(); deg + 1];
            for (p, c) in slice {
                coeffs[*p as usize] = c.clone();
            }
            g = g.gcd(&UniPoly::new(coeffs));
        }
        if g.degree() == Some(0) {
            UniPoly::one()
        } else {
            g.constant_term_one()
        }
    }

    /// Terms in graded lexicographic order (total degree first, then
    /// lexicographic on exponent vectors).
    pub fn terms_sorted(&self) -> Vec<(Vec<u32>, BigRational)> {
        let mut out: Vec<(Vec<u32>, BigRational)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        out.sort_by(|(a, _), (b, _)| graded_lex(a, b));
        out
    }
}

/// Graded lexicographic comparison of exponent vectors.
pub fn graded_lex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| u64::from(x)).sum();
    let db: u64 = b.iter().map(|&x| u64::from(x)).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms_sorted().into_iter().map(|(e, c)| {
            let mono = monomial_string(&e);
            super::format_term(&c, &mono)
        });
        super::join_terms(f, terms)
    }
}

/// "h1*h2^3" style rendering of an exponent vector; empty for the constant.
pub fn monomial_string(exponents: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exponents.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("h{}", i + 1)),
            _ => parts.push(format!("h{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}
