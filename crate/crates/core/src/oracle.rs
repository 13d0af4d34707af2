//! Brute-force dimension counts for invariants, independent of the series
//! engine.
//!
//! A monomial in k copies of n variables is described by its k-by-n exponent
//! matrix. It is invariant under the abelian part H iff its column-sum
//! residues lie in the orthogonal complement of H; the dimension of the full
//! invariant space in a multidegree is then the number of orbits of the
//! column-permutation action on the admissible matrices, counted by
//! canonical form (sorted columns). Nothing here touches cycle types,
//! partition sums, or the series machinery.

use std::collections::HashSet;

use num_integer::binomial;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lattice::{GroupSpec, ZModVec};
use crate::polyring::MultiPoly;

/// Default cap on the number of exponent matrices enumerated per multidegree.
pub const DEFAULT_ORACLE_CAP: u64 = 1_000_000;

/// Dimension of the invariant space in one multidegree: the number of
/// column-sorted exponent matrices with the given row sums whose column-sum
/// residues lie in the orthogonal complement of H.
pub fn invariant_dimension(
    spec: &GroupSpec,
    copies: usize,
    multidegree: &[u32],
    cap: u64,
) -> Result<u64> {
    if multidegree.len() != copies {
        return Err(Error::InvalidParam(format!(
            "multidegree has {} entries for {} copies",
            multidegree.len(),
            copies
        )));
    }
    let n = spec.rank();
    let mut matrix_count: u128 = 1;
    for &d in multidegree {
        let rows = binomial(u128::from(d) + n as u128 - 1, n as u128 - 1);
        matrix_count = matrix_count.saturating_mul(rows);
        if matrix_count > u128::from(cap) {
            return Err(Error::Capacity { needed: matrix_count, cap });
        }
    }

    let rows: Vec<Vec<Vec<u32>>> =
        multidegree.iter().map(|&d| compositions(d, n)).collect();
    let modulus = spec.modulus();
    let orthogonal = spec.orthogonal();
    let mut canonical: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut choice = vec![0usize; copies];
    loop {
        let mut column_sums = vec![0u32; n];
        for (i, &c) in choice.iter().enumerate() {
            for (j, &e) in rows[i][c].iter().enumerate() {
                column_sums[j] += e;
            }
        }
        let residues =
            ZModVec::new(modulus, column_sums.iter().map(|&s| s % modulus).collect())?;
        if orthogonal.contains(&residues) {
            let mut columns: Vec<Vec<u32>> = (0..n)
                .map(|j| choice.iter().enumerate().map(|(i, &c)| rows[i][c][j]).collect())
                .collect();
            columns.sort();
            canonical.insert(columns);
        }
        if !advance_choice(&mut choice, &rows) {
            break;
        }
    }
    Ok(canonical.len() as u64)
}

/// The Hilbert series of the invariants truncated to the box of multidegrees
/// with every component at most `depth`, computed purely by dimension counts.
pub fn series(spec: &GroupSpec, copies: usize, depth: u32, cap: u64) -> Result<MultiPoly> {
    if copies == 0 {
        return Err(Error::InvalidParam("copy count k must be >= 1".into()));
    }
    let mut out = MultiPoly::zero(copies);
    let mut multidegree = vec![0u32; copies];
    loop {
        let dim = invariant_dimension(spec, copies, &multidegree, cap)?;
        if dim > 0 {
            out = out.add(&MultiPoly::monomial(
                copies,
                multidegree.clone(),
                BigRational::from_integer((dim as i64).into()),
            ));
        }
        if !advance_box(&mut multidegree, depth) {
            break;
        }
    }
    Ok(out)
}

/// All weak compositions of `total` into `parts` parts.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; parts];
    fill(total, 0, &mut current, &mut out);
    out
}

fn fill(remaining: u32, index: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if index + 1 == current.len() {
        current[index] = remaining;
        out.push(current.clone());
        return;
    }
    for value in 0..=remaining {
        current[index] = value;
        fill(remaining - value, index + 1, current, out);
    }
}

fn advance_choice(choice: &mut [usize], rows: &[Vec<Vec<u32>>]) -> bool {
    for (c, r) in choice.iter_mut().zip(rows) {
        *c += 1;
        if *c < r.len() {
            return true;
        }
        *c = 0;
    }
    false
}

fn advance_box(multidegree: &mut [u32], depth: u32) -> bool {
    for d in multidegree.iter_mut() {
        *d += 1;
        if *d <= depth {
            return true;
        }
        *d = 0;
    }
    false
}
