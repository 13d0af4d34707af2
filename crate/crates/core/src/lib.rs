//! Exact computation of the multigraded Poincaré-Hilbert series of diagonal
//! invariant rings for groups of the form H semidirect S_n, where H is a
//! permutation-stable subgroup of (Z/NZ)^n.
//!
//! The engine computes, entirely in exact rational arithmetic:
//!
//! - the Hilbert series R_k of the invariants of k diagonal copies of the
//!   defining representation, as a rational series with binomial denominator
//!   factors ([`molien::hilbert_series`]);
//! - the quotient Q_k of R_k by the product of univariate invariant series,
//!   deciding structurally whether it is a polynomial, and when it is,
//!   its value at (1, ..., 1) against the expected module rank |G|^(k-1)
//!   ([`molien::module_quotient`]);
//! - the scaled limit of R_k at the all-ones point, equal to 1/|G|
//!   ([`molien::scaled_limit`]);
//! - an independent brute-force oracle counting invariant monomial orbits
//!   degree by degree ([`oracle`]).

pub mod error;
pub mod lattice;
pub mod molien;
pub mod oracle;
pub mod partitions;
pub mod polyring;

pub use error::{Error, Result};
pub use lattice::{Family, GroupSpec, ZModSubgroup, ZModVec, DEFAULT_CAP};
pub use molien::{module_quotient, QuotientResult};
pub use partitions::{partitions_of, Partition};
pub use polyring::{BinomialFactor, MultiPoly, RationalSeries, UniPoly};
