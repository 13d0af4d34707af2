//! The series engine: per-cycle-type numerators, the partition-weighted
//! Hilbert series of the diagonal invariant ring, the module quotient Q with
//! its polynomiality and rank analysis, the separability split, and the
//! scaled limit at the all-ones point.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::GroupSpec;
use crate::partitions::{partitions_of, Partition};
use crate::polyring::series::FactorMultiset;
use crate::polyring::{coeff_string, BinomialFactor, MultiPoly, RationalSeries, UniPoly};

/// The polynomial counting, per multidegree, the invariant monomials fixed by
/// a permutation of the given cycle type, with exponent entries restricted to
/// one period [0, N-1] per orbit.
///
/// Computed by a residue-tracking dynamic program: for each part of the cycle
/// type, a pass over the k copies accumulates one polynomial per value of the
/// orbit-sum residue mod N; the per-part polynomials are then convolved
/// across the residue tuples of the partition-restricted orthogonal.
/// This stays in integer residue arithmetic throughout; no root of unity is
/// ever represented.
pub fn cycle_numerator(
    spec: &GroupSpec,
    cycle_type: &Partition,
    copies: usize,
    cap: u64,
) -> Result<MultiPoly> {
    require_copies(copies)?;
    if cycle_type.sum() as usize != spec.rank() {
        return Err(Error::InvalidParam(format!(
            "cycle type {} is not a partition of {}",
            cycle_type,
            spec.rank()
        )));
    }
    let modulus = spec.modulus();
    let restricted = spec.orthogonal().orthogonal_for_partition(cycle_type, cap)?;
    let parts = cycle_type.parts();
    let orbit_count = parts.len();

    // the DP work and output size are bounded by the number of admissible
    // exponent matrices: |restricted| * N^((copies-1) * orbits)
    let mut states = u128::from(restricted.order());
    for _ in 0..(copies - 1) * orbit_count {
        states = states.saturating_mul(u128::from(modulus));
        if states > u128::from(cap) {
            return Err(Error::Capacity { needed: states, cap });
        }
    }

    let mut per_part: Vec<Vec<MultiPoly>> = Vec::with_capacity(orbit_count);
    for &part in parts {
        let mut by_residue = vec![MultiPoly::zero(copies); modulus as usize];
        by_residue[0] = MultiPoly::one(copies);
        for row in 0..copies {
            let mut next = vec![MultiPoly::zero(copies); modulus as usize];
            for (residue, poly) in by_residue.iter().enumerate() {
                if poly.is_zero() {
                    continue;
                }
                for entry in 0..modulus {
                    let mut exponents = vec![0u32; copies];
                    exponents[row] = part * entry;
                    let shifted =
                        poly.mul(&MultiPoly::monomial(copies, exponents, BigRational::one()));
                    let target = (residue + entry as usize) % modulus as usize;
                    next[target] = next[target].add(&shifted);
                }
            }
            by_residue = next;
        }
        per_part.push(by_residue);
    }

    let mut out = MultiPoly::zero(copies);
    for tuple in restricted.elements() {
        let residues = tuple.components();
        let mut term = per_part[0][residues[0] as usize].clone();
        for (j, polys) in per_part.iter().enumerate().skip(1) {
            term = term.mul(&polys[residues[j] as usize]);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// The generating series of invariant monomials fixed by a permutation of the
/// given cycle type: `cycle_numerator` over one factor (1 - h_i^(N*part))
/// per copy and part.
pub fn cycle_series(
    spec: &GroupSpec,
    cycle_type: &Partition,
    copies: usize,
    cap: u64,
) -> Result<RationalSeries> {
    let numerator = cycle_numerator(spec, cycle_type, copies, cap)?;
    let modulus = spec.modulus();
    let mut factors = Vec::new();
    for var in 0..copies {
        for &part in cycle_type.parts() {
            factors.push(BinomialFactor::new(var, modulus * part));
        }
    }
    Ok(RationalSeries::new(numerator, factors))
}

/// The Poincaré-Hilbert series of the invariants of k diagonal copies,
/// assembled as the sum of `cycle_series` over all cycle types, each weighted
/// by the share of permutations with that type. The sum over the group is
/// performed over cycle types, never over individual permutations.
pub fn hilbert_series(spec: &GroupSpec, copies: usize, cap: u64) -> Result<RationalSeries> {
    require_copies(copies)?;
    let mut total = RationalSeries::from_polynomial(MultiPoly::zero(copies));
    for cycle_type in partitions_of(spec.rank() as u32)? {
        let term = cycle_series(spec, &cycle_type, copies, cap)?;
        total = total.add(&term.scale(&cycle_type.class_weight()));
    }
    Ok(total)
}

/// A non-binomial univariate factor left in the denominator of a normalized
/// quotient, attached to a single variable. Constant term is always 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ResidualFactor {
    pub var: usize,
    pub poly: UniPoly,
}

impl fmt::Display for ResidualFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let placed = MultiPoly::from_univariate(&self.poly, self.var, self.var + 1);
        write!(f, "({})", placed)
    }
}

impl fmt::Debug for ResidualFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Result of the quotient analysis for one group and copy count.
#[derive(Clone)]
pub struct QuotientResult {
    group: GroupSpec,
    copies: usize,
    hilbert: RationalSeries,
    numerator: MultiPoly,
    binomial_denominator: FactorMultiset,
    residual_denominator: Vec<ResidualFactor>,
    rank: Option<BigRational>,
    separable: Option<bool>,
}

impl QuotientResult {
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    /// The normalized Hilbert series R_k the quotient was derived from.
    pub fn hilbert(&self) -> &RationalSeries {
        &self.hilbert
    }

    /// Numerator of the normalized quotient; the whole quotient when
    /// `is_polynomial` holds.
    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    /// Leftover binomial denominator factors after normalization.
    pub fn binomial_denominator(&self) -> Vec<BinomialFactor> {
        let mut out = Vec::new();
        for (&(var, exponent), &mult) in &self.binomial_denominator {
            for _ in 0..mult {
                out.push(BinomialFactor { var, exponent });
            }
        }
        out
    }

    /// Leftover non-binomial univariate denominator factors.
    pub fn residual_denominator(&self) -> &[ResidualFactor] {
        &self.residual_denominator
    }

    /// True iff every denominator factor cancelled into the numerator.
    pub fn is_polynomial(&self) -> bool {
        self.binomial_denominator.is_empty() && self.residual_denominator.is_empty()
    }

    /// The quotient evaluated at (1, ..., 1); present iff polynomial.
    pub fn rank(&self) -> Option<&BigRational> {
        self.rank.as_ref()
    }

    /// |G|^(k-1).
    pub fn expected_rank(&self) -> BigUint {
        self.group.expected_rank(self.copies)
    }

    /// Whether the polynomial quotient splits as a product of univariate
    /// polynomials; present iff polynomial.
    pub fn separable(&self) -> Option<bool> {
        self.separable
    }

    /// True when the computed rank is an integer equal to |G|^(k-1).
    pub fn rank_matches(&self) -> Option<bool> {
        let rank = self.rank.as_ref()?;
        if !rank.is_integer() {
            return Some(false);
        }
        let expected: BigRational =
            BigRational::from_integer(self.expected_rank().into());
        Some(*rank == expected)
    }
}

impl fmt::Display for QuotientResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({}) / (", self.numerator)?;
        let mut first = true;
        for factor in self.binomial_denominator() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}", factor)?;
        }
        for residual in &self.residual_denominator {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}", residual)?;
        }
        write!(f, ")")
    }
}

/// Computes the quotient Q = R_k / (R_1(h_1) ... R_1(h_k)) in normalized
/// form and decides structurally whether it is a polynomial.
///
/// The denominator factors of R_1 multiply into the numerator; the binomial
/// denominator of R_k cancels through `normalize`; the numerator polynomial
/// of R_1, placed in each variable in turn, cancels by its exact univariate
/// gcd with the numerator. Whatever fails to cancel stays in the denominator,
/// so the polynomiality verdict never relies on a truncated expansion.
pub fn module_quotient(spec: &GroupSpec, copies: usize, cap: u64) -> Result<QuotientResult> {
    require_copies(copies)?;
    let hilbert = hilbert_series(spec, copies, cap)?.normalize();
    let univariate = hilbert_series(spec, 1, cap)?.normalize();

    let mut numerator = hilbert.numerator().clone();
    for var in 0..copies {
        for (&(_, m), &mult) in univariate.denominator() {
            for _ in 0..mult {
                numerator = numerator.mul_univariate(var, &UniPoly::binomial(m));
            }
        }
    }
    let reduced = RationalSeries::new(numerator, hilbert.denominator_factors()).normalize();
    let binomial_denominator = reduced.denominator().clone();
    let mut numerator = reduced.numerator().clone();

    let r1_numerator = univariate.numerator().restrict_to_var(0);
    let mut residual_denominator = Vec::new();
    if r1_numerator.degree() > Some(0) {
        for var in 0..copies {
            let g = numerator.univariate_content_gcd(var, &r1_numerator);
            let leftover = if g.is_one() {
                r1_numerator.clone()
            } else {
                numerator = numerator
                    .div_exact_univariate(var, &g)
                    .expect("content gcd divides the numerator");
                r1_numerator.div_exact(&g).expect("gcd divides the divisor")
            };
            if leftover.degree() > Some(0) {
                residual_denominator.push(ResidualFactor { var, poly: leftover });
            }
        }
    }

    let is_polynomial = binomial_denominator.is_empty() && residual_denominator.is_empty();
    let rank = is_polynomial.then(|| numerator.eval_at_ones());
    let separable = if is_polynomial {
        Some(splits_into_univariates(&numerator)?)
    } else {
        None
    };
    Ok(QuotientResult {
        group: spec.clone(),
        copies,
        hilbert,
        numerator,
        binomial_denominator,
        residual_denominator,
        rank,
        separable,
    })
}

/// Tests whether a polynomial with constant term 1 splits as
/// q(h_1) * ... * q(h_k): the candidate q is the restriction to the first
/// variable, and the product of its copies is compared exactly.
pub fn splits_into_univariates(q: &MultiPoly) -> Result<bool> {
    if !q.constant_term().is_one() {
        return Err(Error::ConstantTermNotOne(coeff_string(&q.constant_term())));
    }
    let candidate = q.restrict_to_var(0);
    let mut product = MultiPoly::one(q.vars());
    for var in 0..q.vars() {
        product = product.mul(&MultiPoly::from_univariate(&candidate, var, q.vars()));
    }
    Ok(product == *q)
}

/// The limit of (1-h_1)^n ... (1-h_k)^n R_k at the all-ones point, computed
/// exactly term by term through the factorization 1 - h^m = (1-h)(1+...+h^(m-1)).
///
/// A cycle type with fewer than n orbits keeps a positive power of (1-h_i)
/// after the factorization and contributes 0; the all-singletons type
/// contributes its numerator coefficient sum over the product of the
/// q-integer values m at h = 1.
pub fn scaled_limit(spec: &GroupSpec, copies: usize, cap: u64) -> Result<BigRational> {
    require_copies(copies)?;
    let n = spec.rank();
    let modulus = spec.modulus();
    let mut total = BigRational::zero();
    for cycle_type in partitions_of(n as u32)? {
        if cycle_type.part_count() < n {
            continue;
        }
        let numerator_at_ones = cycle_numerator(spec, &cycle_type, copies, cap)?.eval_at_ones();
        let mut q_integer_values = BigRational::one();
        for &part in cycle_type.parts() {
            let value = BigRational::from_integer(BigUint::from(modulus * part).into());
            for _ in 0..copies {
                q_integer_values *= &value;
            }
        }
        total += numerator_at_ones * cycle_type.class_weight() / q_integer_values;
    }
    Ok(total)
}

fn require_copies(copies: usize) -> Result<()> {
    if copies == 0 {
        return Err(Error::InvalidParam("copy count k must be >= 1".into()));
    }
    Ok(())
}
