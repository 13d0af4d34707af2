//! Dense univariate polynomials over big rationals.
//!
//! These back the exact-division and cancellation machinery of the series
//! module: cyclotomic-style factors of 1 - h^m, Euclidean gcd, and long
//! division. Coefficients are stored ascending with no trailing zeros.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::{One, Zero};

use once_cell::sync::Lazy;

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![BigRational::one()] }
    }

    /// 1 - h^m.
    pub fn binomial(m: u32) -> Self {
        let mut coeffs = vec![BigRational::zero(); m as usize + 1];
        coeffs[0] = BigRational::one();
        coeffs[m as usize] = -BigRational::one();
        UniPoly::new(coeffs)
    }

    /// From integer coefficients, ascending.
    pub fn from_ints(ints: &[i64]) -> Self {
        UniPoly::new(ints.iter().map(|&i| BigRational::from_integer(i.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeffs.first().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn mul(&self, other: &UniPoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (UniPoly::zero(), self.clone());
        }
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len() - d];
        for t in (d..rem.len()).rev() {
            if rem[t].is_zero() {
                continue;
            }
            let q = &rem[t] / &lead;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let delta = &q * b;
                rem[t - d + j] -= delta;
            }
            quot[t - d] = q;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact quotient, or None when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Rescaled so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None => UniPoly::zero(),
            Some(lead) => {
                let inv = BigRational::one() / lead;
                self.scale(&inv)
            }
        }
    }

    /// Rescaled so the constant term is 1; requires a nonzero constant term.
    pub fn constant_term_one(&self) -> UniPoly {
        let c = self.constant_term();
        assert!(!c.is_zero(), "cannot normalize a polynomial with zero constant term");
        let inv = BigRational::one() / c;
        self.scale(&inv)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(
            |(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => "h".to_string(),
                    _ => format!("h^{}", i),
                };
                crate::polyring::format_term(c, &mono)
            },
        );
        crate::polyring::join_terms(f, terms)
    }
}

/// Sorted divisors of m.
pub fn divisors(m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for d in 1..=m {
        if m.is_multiple_of(d) {
            out.push(d);
        }
    }
    out
}

static CYCLOTOMIC_CACHE: Lazy<Mutex<HashMap<u32, UniPoly>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The degree-phi(d) factor of 1 - h^d not dividing any 1 - h^e for proper
/// divisors e, normalized to constant term 1. These satisfy
/// `1 - h^m = prod over d | m of cyclotomic_factor(d)` exactly.
pub fn cyclotomic_factor(d: u32) -> UniPoly {
    assert!(d >= 1);
    if let Some(hit) = CYCLOTOMIC_CACHE.lock().unwrap().get(&d) {
        return hit.clone();
    }
    let mut quotient = UniPoly::binomial(d);
    for e in divisors(d) {
        if e == d {
            continue;
        }
        let factor = cyclotomic_factor(e);
        quotient = quotient
            .div_exact(&factor)
            .expect("1 - h^d is divisible by the factors of its proper divisors");
    }
    CYCLOTOMIC_CACHE.lock().unwrap().insert(d, quotient.clone());
    quotient
}
