//! Integer partitions, part multiplicities, and conjugacy-class sizes of the
//! symmetric group by cycle type.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition of `n` with parts stored in weakly increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Creates a partition from weakly increasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParam("partition must have at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParam("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParam("partition parts must be weakly increasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Multiplicity vector: entry `i - 1` counts the parts equal to `i`,
    /// for `1 <= i <= n`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let n = self.sum() as usize;
        let mut mult = vec![0u32; n];
        for &p in &self.parts {
            mult[p as usize - 1] += 1;
        }
        mult
    }

    /// Size of the conjugacy class of permutations with this cycle type:
    /// `n! / (1^m1 * ... * n^mn * m1! * ... * mn!)`.
    pub fn class_size(&self) -> BigUint {
        let n = self.sum();
        let mut numerator = BigUint::one();
        for i in 1..=n as u64 {
            numerator *= i;
        }
        numerator / self.centralizer_order()
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// `1^m1 * ... * n^mn * m1! * ... * mn!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut denom = BigUint::one();
        for (i, &m) in self.multiplicities().iter().enumerate() {
            let part = (i + 1) as u64;
            for _ in 0..m {
                denom *= part;
            }
            for f in 1..=m as u64 {
                denom *= f;
            }
        }
        denom
    }

    /// The weight `class_size / n!  =  1 / centralizer_order` of this cycle
    /// type in an average over the symmetric group.
    pub fn class_weight(&self) -> BigRational {
        let denom = self.centralizer_order();
        BigRational::new(BigUint::one().into(), denom.into())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, each exactly once, in lexicographic order on the
/// weakly increasing part sequences.
pub fn partitions_of(n: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::InvalidParam("partitions_of requires n >= 1".into()));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(n, 1, &mut current, &mut out);
    Ok(out)
}

fn extend(remaining: u32, min_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in min_part..=remaining {
        current.push(part);
        extend(remaining - part, part, current, out);
        current.pop();
    }
}
