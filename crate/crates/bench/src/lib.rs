//! Shared fixtures for the engine benchmarks.

use molien_core::lattice::{GroupSpec, DEFAULT_CAP};

pub fn dihedral_6() -> GroupSpec {
    GroupSpec::dihedral(6, DEFAULT_CAP).unwrap()
}

pub fn hyperoctahedral_3() -> GroupSpec {
    GroupSpec::hyperoctahedral(3, DEFAULT_CAP).unwrap()
}

pub fn sign_extended_s3() -> GroupSpec {
    GroupSpec::g2_example(DEFAULT_CAP).unwrap()
}
