//! Vectors and subgroups of (Z/NZ)^m: generation from explicit generators,
//! stability under coordinate permutations, orthogonal complements with
//! respect to the dot product mod N, and the built-in group families.
//!
//! Subgroups are materialized as explicit element sets. Every enumeration of
//! the full ambient group (N^m candidates) is guarded by a configurable cap;
//! exceeding it is a hard error, never a silent approximation.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Default cap on ambient-group enumerations (number of candidate vectors).
pub const DEFAULT_CAP: u64 = 10_000_000;

/// A vector of residues mod N, always stored reduced to `[0, N-1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZModVec {
    modulus: u32,
    components: Vec<u32>,
}

impl ZModVec {
    /// Builds a vector, reducing every component mod N.
    pub fn new(modulus: u32, components: Vec<u32>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidParam("modulus must be >= 2".into()));
        }
        if components.is_empty() {
            return Err(Error::InvalidParam("vector must have length >= 1".into()));
        }
        let components = components.into_iter().map(|c| c % modulus).collect();
        Ok(ZModVec { modulus, components })
    }

    pub fn zero(modulus: u32, len: usize) -> Result<Self> {
        ZModVec::new(modulus, vec![0; len])
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[u32] {
        &self.components
    }

    /// Componentwise sum mod N.
    pub fn add(&self, other: &ZModVec) -> ZModVec {
        debug_assert_eq!(self.modulus, other.modulus);
        debug_assert_eq!(self.len(), other.len());
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| (a + b) % self.modulus)
            .collect();
        ZModVec { modulus: self.modulus, components }
    }

    /// Dot product mod N.
    pub fn dot(&self, other: &ZModVec) -> u32 {
        debug_assert_eq!(self.modulus, other.modulus);
        debug_assert_eq!(self.len(), other.len());
        let n = u64::from(self.modulus);
        let mut acc = 0u64;
        for (a, b) in self.components.iter().zip(&other.components) {
            acc = (acc + u64::from(*a) * u64::from(*b)) % n;
        }
        acc as u32
    }

    /// The vector with components `i` and `j` exchanged.
    pub fn swapped(&self, i: usize, j: usize) -> ZModVec {
        let mut components = self.components.clone();
        components.swap(i, j);
        ZModVec { modulus: self.modulus, components }
    }
}

impl fmt::Debug for ZModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.components, self.modulus)
    }
}

/// A subgroup of (Z/NZ)^m with its full element set materialized.
#[derive(Clone, PartialEq, Eq)]
pub struct ZModSubgroup {
    modulus: u32,
    dim: usize,
    generators: Vec<ZModVec>,
    elements: BTreeSet<ZModVec>,
}

impl ZModSubgroup {
    /// The smallest subgroup of (Z/NZ)^m containing the given generators.
    ///
    /// Rejects instances where the ambient group N^m exceeds `cap`.
    pub fn generate(modulus: u32, dim: usize, generators: Vec<ZModVec>, cap: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidParam("modulus must be >= 2".into()));
        }
        if dim == 0 {
            return Err(Error::InvalidParam("ambient dimension must be >= 1".into()));
        }
        check_cap(modulus, dim, cap)?;
        for g in &generators {
            if g.modulus() != modulus || g.len() != dim {
                return Err(Error::InvalidParam(format!(
                    "generator {:?} does not live in (Z/{}Z)^{}",
                    g, modulus, dim
                )));
            }
        }
        let zero = ZModVec::zero(modulus, dim)?;
        let mut elements = BTreeSet::new();
        elements.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(v) = frontier.pop() {
            for g in &generators {
                let next = v.add(g);
                if elements.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        Ok(ZModSubgroup { modulus, dim, generators, elements })
    }

    /// Wraps an explicit element set, using the elements themselves as the
    /// generator list. The caller guarantees closure.
    fn from_elements(modulus: u32, dim: usize, elements: BTreeSet<ZModVec>) -> Self {
        let generators = reduce_generators(modulus, dim, &elements);
        ZModSubgroup { modulus, dim, generators, elements }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[ZModVec] {
        &self.generators
    }

    /// Elements in sorted order.
    pub fn elements(&self) -> impl Iterator<Item = &ZModVec> {
        self.elements.iter()
    }

    pub fn contains(&self, v: &ZModVec) -> bool {
        self.elements.contains(v)
    }

    /// True iff the element set is fixed by every coordinate permutation.
    /// Adjacent transpositions generate the symmetric group, so only those
    /// are checked.
    pub fn is_sn_stable(&self) -> bool {
        if self.dim < 2 {
            return true;
        }
        self.elements.iter().all(|v| {
            (0..self.dim - 1).all(|i| self.elements.contains(&v.swapped(i, i + 1)))
        })
    }

    /// The orthogonal complement: all vectors pairing to zero with every
    /// generator under the dot product mod N. Bilinearity makes testing
    /// against generators equivalent to testing against all elements.
    pub fn orthogonal(&self, cap: u64) -> Result<ZModSubgroup> {
        check_cap(self.modulus, self.dim, cap)?;
        let mut elements = BTreeSet::new();
        let mut current = vec![0u32; self.dim];
        loop {
            let candidate = ZModVec { modulus: self.modulus, components: current.clone() };
            if self.generators.iter().all(|g| candidate.dot(g) == 0) {
                elements.insert(candidate);
            }
            if !advance(&mut current, self.modulus) {
                break;
            }
        }
        Ok(ZModSubgroup::from_elements(self.modulus, self.dim, elements))
    }

    /// The part of this group (seen as an orthogonal H-perp in dimension n)
    /// compatible with a cycle type: all `(k_1, ..., k_l)` such that the
    /// vector repeating `k_j` exactly `alpha_j` times lies in `self`.
    pub fn orthogonal_for_partition(&self, alpha: &Partition, cap: u64) -> Result<ZModSubgroup> {
        if alpha.sum() as usize != self.dim {
            return Err(Error::InvalidParam(format!(
                "partition of {} does not match ambient dimension {}",
                alpha.sum(),
                self.dim
            )));
        }
        let parts = alpha.parts();
        let l = parts.len();
        check_cap(self.modulus, l, cap)?;
        let mut elements = BTreeSet::new();
        let mut current = vec![0u32; l];
        loop {
            let mut expanded = Vec::with_capacity(self.dim);
            for (j, &p) in parts.iter().enumerate() {
                for _ in 0..p {
                    expanded.push(current[j]);
                }
            }
            let expanded = ZModVec { modulus: self.modulus, components: expanded };
            if self.elements.contains(&expanded) {
                elements.insert(ZModVec { modulus: self.modulus, components: current.clone() });
            }
            if !advance(&mut current, self.modulus) {
                break;
            }
        }
        Ok(ZModSubgroup::from_elements(self.modulus, l, elements))
    }
}

impl fmt::Debug for ZModSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ZModSubgroup(order {} in (Z/{}Z)^{})",
            self.order(),
            self.modulus,
            self.dim
        )
    }
}

/// Odometer step over [0, N-1]^m; returns false after the last vector.
fn advance(current: &mut [u32], modulus: u32) -> bool {
    for c in current.iter_mut() {
        *c += 1;
        if *c < modulus {
            return true;
        }
        *c = 0;
    }
    false
}

fn check_cap(modulus: u32, dim: usize, cap: u64) -> Result<()> {
    let mut size: u128 = 1;
    for _ in 0..dim {
        size = size.saturating_mul(u128::from(modulus));
        if size > u128::from(cap) {
            return Err(Error::Capacity { needed: size, cap });
        }
    }
    Ok(())
}

/// A small generating set extracted greedily from an element list.
fn reduce_generators(modulus: u32, dim: usize, elements: &BTreeSet<ZModVec>) -> Vec<ZModVec> {
    let mut generators: Vec<ZModVec> = Vec::new();
    let mut closure = BTreeSet::new();
    if let Ok(zero) = ZModVec::zero(modulus, dim) {
        closure.insert(zero);
    }
    for e in elements {
        if closure.contains(e) {
            continue;
        }
        generators.push(e.clone());
        // re-close under the enlarged generating set
        let mut frontier: Vec<ZModVec> = closure.iter().cloned().collect();
        while let Some(v) = frontier.pop() {
            for g in &generators {
                let next = v.add(g);
                if closure.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        if closure.len() == elements.len() {
            break;
        }
    }
    generators
}

/// Built-in families of groups H semidirect S_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// H trivial in (Z/2Z)^n; the symmetric group S_n.
    Symmetric { n: usize },
    /// H = (Z/2Z)^n; the signed permutation group B_n.
    Hyperoctahedral { n: usize },
    /// H = even-sum vectors of (Z/2Z)^n; the Coxeter group D_n.
    Demihyperoctahedral { n: usize },
    /// n = 2, H = pairs summing to zero mod N; the dihedral group of order 2N.
    Dihedral { modulus: u32 },
    /// N = d*e, H = vectors whose component sum vanishes mod e; the
    /// imprimitive complex reflection group G(de, e, n).
    GDeEn { d: u32, e: u32, n: usize },
    /// N = 2, n = 3, H = {0, (1,1,1)}: the direct product of S_3 with a
    /// global sign flip, isomorphic to the dihedral group of order 12.
    G2Example,
    /// A user-supplied S_n-stable subgroup.
    Custom,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Symmetric { .. } => "symmetric",
            Family::Hyperoctahedral { .. } => "hyperoctahedral",
            Family::Demihyperoctahedral { .. } => "demihyperoctahedral",
            Family::Dihedral { .. } => "dihedral",
            Family::GDeEn { .. } => "g-de-e-n",
            Family::G2Example => "g2-example",
            Family::Custom => "custom",
        }
    }
}

/// A full problem instance: the modulus N, the rank n, the S_n-stable
/// subgroup H of (Z/NZ)^n, and the cached orthogonal complement of H.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    family: Family,
    modulus: u32,
    n: usize,
    subgroup: ZModSubgroup,
    orthogonal: ZModSubgroup,
    order: BigUint,
}

impl GroupSpec {
    fn build(family: Family, modulus: u32, n: usize, subgroup: ZModSubgroup, cap: u64) -> Result<Self> {
        if !subgroup.is_sn_stable() {
            return Err(Error::NotSnStable);
        }
        let orthogonal = subgroup.orthogonal(cap)?;
        let mut order = BigUint::from(subgroup.order());
        for i in 1..=n as u64 {
            order *= i;
        }
        Ok(GroupSpec { family, modulus, n, subgroup, orthogonal, order })
    }

    /// S_n realized with N = 2 and trivial H.
    pub fn symmetric(n: usize, cap: u64) -> Result<Self> {
        require_rank(n)?;
        let h = ZModSubgroup::generate(2, n, vec![], cap)?;
        GroupSpec::build(Family::Symmetric { n }, 2, n, h, cap)
    }

    /// B_n: N = 2 and H the full group (Z/2Z)^n.
    pub fn hyperoctahedral(n: usize, cap: u64) -> Result<Self> {
        require_rank(n)?;
        let gens = basis_vectors(2, n)?;
        let h = ZModSubgroup::generate(2, n, gens, cap)?;
        GroupSpec::build(Family::Hyperoctahedral { n }, 2, n, h, cap)
    }

    /// D_n: N = 2 and H the even-sum subgroup of (Z/2Z)^n.
    pub fn demihyperoctahedral(n: usize, cap: u64) -> Result<Self> {
        require_rank(n)?;
        let h = sum_condition_subgroup(2, n, 1, cap)?;
        GroupSpec::build(Family::Demihyperoctahedral { n }, 2, n, h, cap)
    }

    /// The dihedral group of order 2N: n = 2 and H the zero-sum pairs mod N.
    pub fn dihedral(modulus: u32, cap: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidParam("dihedral requires N >= 2".into()));
        }
        let h = sum_condition_subgroup(modulus, 2, 1, cap)?;
        GroupSpec::build(Family::Dihedral { modulus }, modulus, 2, h, cap)
    }

    /// G(de, e, n): N = d*e and H the vectors with component sum divisible
    /// by e.
    pub fn g_de_e_n(d: u32, e: u32, n: usize, cap: u64) -> Result<Self> {
        require_rank(n)?;
        if d == 0 || e == 0 {
            return Err(Error::InvalidParam("g-de-e-n requires d >= 1 and e >= 1".into()));
        }
        let modulus = d.checked_mul(e).ok_or_else(|| {
            Error::InvalidParam("g-de-e-n modulus d*e overflows".into())
        })?;
        if modulus < 2 {
            return Err(Error::InvalidParam(
                "g-de-e-n requires modulus d*e >= 2".into(),
            ));
        }
        let h = sum_condition_subgroup(modulus, n, d, cap)?;
        GroupSpec::build(Family::GDeEn { d, e, n }, modulus, n, h, cap)
    }

    /// N = 2, n = 3, H = {(0,0,0), (1,1,1)}.
    pub fn g2_example(cap: u64) -> Result<Self> {
        let gen = ZModVec::new(2, vec![1, 1, 1])?;
        let h = ZModSubgroup::generate(2, 3, vec![gen], cap)?;
        GroupSpec::build(Family::G2Example, 2, 3, h, cap)
    }

    /// A custom S_n-stable subgroup given by explicit generators.
    pub fn custom(modulus: u32, n: usize, generators: Vec<ZModVec>, cap: u64) -> Result<Self> {
        require_rank(n)?;
        let h = ZModSubgroup::generate(modulus, n, generators, cap)?;
        GroupSpec::build(Family::Custom, modulus, n, h, cap)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The rank n (ambient dimension of H, number of permuted coordinates).
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn subgroup(&self) -> &ZModSubgroup {
        &self.subgroup
    }

    /// The orthogonal complement of H, computed once at construction.
    pub fn orthogonal(&self) -> &ZModSubgroup {
        &self.orthogonal
    }

    pub fn subgroup_order(&self) -> u64 {
        self.subgroup.order()
    }

    /// |G| = |H| * n!.
    pub fn group_order(&self) -> &BigUint {
        &self.order
    }

    /// |G|^(k-1), the expected module rank for k copies.
    pub fn expected_rank(&self, copies: usize) -> BigUint {
        let mut out = BigUint::one();
        for _ in 1..copies {
            out *= &self.order;
        }
        out
    }
}

fn require_rank(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParam("rank n must be >= 1".into()));
    }
    Ok(())
}

fn basis_vectors(modulus: u32, n: usize) -> Result<Vec<ZModVec>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            ZModVec::new(modulus, v)
        })
        .collect()
}

/// The subgroup { k : d * (k_1 + ... + k_n) == 0 mod N } of (Z/NZ)^n,
/// materialized by direct enumeration.
fn sum_condition_subgroup(modulus: u32, n: usize, d: u32, cap: u64) -> Result<ZModSubgroup> {
    check_cap(modulus, n, cap)?;
    let m = u64::from(modulus);
    let mut elements = BTreeSet::new();
    let mut current = vec![0u32; n];
    loop {
        let sum: u64 = current.iter().map(|&c| u64::from(c)).sum();
        if (sum * u64::from(d)).is_multiple_of(m) {
            elements.insert(ZModVec { modulus, components: current.clone() });
        }
        if !advance(&mut current, modulus) {
            break;
        }
    }
    Ok(ZModSubgroup::from_elements(modulus, n, elements))
}
