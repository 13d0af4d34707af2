//! Acceptance suite: one test per criterion, every comparison exact.
//!
//! Each criterion prints its own pass line (visible with --nocapture):
//!
//!   cargo test -p molien-cli --test acceptance -- --nocapture

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use molien_core::lattice::{GroupSpec, ZModSubgroup, ZModVec, DEFAULT_CAP};
use molien_core::molien::{
    cycle_numerator, hilbert_series, module_quotient, scaled_limit, splits_into_univariates,
};
use molien_core::oracle::{self, DEFAULT_ORACLE_CAP};
use molien_core::partitions::Partition;
use molien_core::polyring::{try_divide_binomial, BinomialFactor, MultiPoly, RationalSeries};
use molien_core::Family;

use molien_cli::{run, RunConfig};

const CAP: u64 = DEFAULT_CAP;
const ORACLE_CAP: u64 = DEFAULT_ORACLE_CAP;

fn int(i: i64) -> BigRational {
    BigRational::from_integer(i.into())
}

fn poly(vars: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
    let mut p = MultiPoly::zero(vars);
    for (e, c) in terms {
        p = p.add(&MultiPoly::monomial(vars, e.to_vec(), int(*c)));
    }
    p
}

fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for i in 1..=n as u64 {
        out *= i;
    }
    out
}

/// The full acceptance grid of built-in groups.
fn grid() -> Vec<GroupSpec> {
    let mut specs = vec![
        GroupSpec::symmetric(2, CAP).unwrap(),
        GroupSpec::symmetric(3, CAP).unwrap(),
        GroupSpec::hyperoctahedral(2, CAP).unwrap(),
        GroupSpec::hyperoctahedral(3, CAP).unwrap(),
        GroupSpec::demihyperoctahedral(2, CAP).unwrap(),
        GroupSpec::demihyperoctahedral(3, CAP).unwrap(),
    ];
    for modulus in [3, 4, 5, 6] {
        specs.push(GroupSpec::dihedral(modulus, CAP).unwrap());
    }
    for (d, e, n) in [(1, 2, 2), (2, 2, 2), (1, 3, 2), (2, 1, 2)] {
        specs.push(GroupSpec::g_de_e_n(d, e, n, CAP).unwrap());
    }
    specs
}

fn describe(spec: &GroupSpec) -> String {
    format!("{} (N={}, n={})", spec.family().tag(), spec.modulus(), spec.rank())
}

#[test]
fn criterion_01_golden_quotients() {
    let s2 = GroupSpec::symmetric(2, CAP).unwrap();
    let q = module_quotient(&s2, 2, CAP).unwrap();
    assert!(q.is_polynomial());
    assert_eq!(q.numerator(), &poly(2, &[(&[0, 0], 1), (&[1, 1], 1)]));

    let q = module_quotient(&s2, 3, CAP).unwrap();
    assert!(q.is_polynomial());
    assert_eq!(
        q.numerator(),
        &poly(
            3,
            &[(&[0, 0, 0], 1), (&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)]
        )
    );

    let s3 = GroupSpec::symmetric(3, CAP).unwrap();
    let q = module_quotient(&s3, 2, CAP).unwrap();
    assert!(q.is_polynomial());
    assert_eq!(
        q.numerator(),
        &poly(
            2,
            &[
                (&[0, 0], 1),
                (&[1, 1], 1),
                (&[2, 1], 1),
                (&[1, 2], 1),
                (&[2, 2], 1),
                (&[3, 3], 1)
            ]
        )
    );

    let b2 = GroupSpec::hyperoctahedral(2, CAP).unwrap();
    let q = module_quotient(&b2, 2, CAP).unwrap();
    assert!(q.is_polynomial());
    assert_eq!(
        q.numerator(),
        &poly(
            2,
            &[
                (&[0, 0], 1),
                (&[1, 1], 1),
                (&[3, 1], 1),
                (&[2, 2], 2),
                (&[1, 3], 1),
                (&[3, 3], 1),
                (&[4, 4], 1)
            ]
        )
    );
    println!("[acceptance] criterion  1 (golden quotient values): PASS");
}

#[test]
fn criterion_02_dihedral_4_quotient() {
    let spec = GroupSpec::dihedral(4, CAP).unwrap();
    let q = module_quotient(&spec, 2, CAP).unwrap();
    assert!(q.is_polynomial(), "Q_2 for the order-8 dihedral group must be a polynomial");
    assert_eq!(
        &q.numerator().permute_vars(&[1, 0]),
        q.numerator(),
        "Q_2 must be symmetric in h1, h2"
    );
    assert_eq!(q.numerator().eval_at_ones(), int(8), "coefficient sum must be 8");

    // Q * R_1(h1) * R_1(h2) must reproduce the dimension counts
    let r1 = hilbert_series(&spec, 1, CAP).unwrap().normalize();
    let product = RationalSeries::from_polynomial(q.numerator().clone())
        .mul(&r1.embed(2, 0))
        .mul(&r1.embed(2, 1));
    let counted = oracle::series(&spec, 2, 6, ORACLE_CAP).unwrap();
    assert_eq!(product.truncate(6), counted);
    println!("[acceptance] criterion  2 (dihedral N=4 quotient, oracle-checked): PASS");
}

#[test]
fn criterion_03_non_polynomial_example() {
    let spec = GroupSpec::g2_example(CAP).unwrap();
    let q = module_quotient(&spec, 2, CAP).unwrap();
    assert!(!q.is_polynomial());
    assert!(q.binomial_denominator().is_empty());
    // one univariate factor 1 + h^4 remains in each of the two variables
    let residuals = q.residual_denominator();
    assert_eq!(residuals.len(), 2);
    let expected = molien_core::UniPoly::from_ints(&[1, 0, 0, 0, 1]);
    for (var, residual) in residuals.iter().enumerate() {
        assert_eq!(residual.var, var);
        assert_eq!(residual.poly, expected);
    }
    println!("[acceptance] criterion  3 (non-polynomial quotient with split denominator): PASS");
}

#[test]
fn criterion_04_rank_identity_over_the_grid() {
    for spec in grid() {
        let order = BigUint::from(spec.subgroup_order()) * factorial(spec.rank());
        for copies in 1..=3usize {
            let q = module_quotient(&spec, copies, CAP).unwrap();
            assert!(
                q.is_polynomial(),
                "{} k={}: quotient must be a polynomial",
                describe(&spec),
                copies
            );
            let mut expected = BigUint::one();
            for _ in 1..copies {
                expected *= &order;
            }
            assert_eq!(
                q.numerator().eval_at_ones(),
                BigRational::from_integer(expected.into()),
                "{} k={}",
                describe(&spec),
                copies
            );
        }
    }
    println!("[acceptance] criterion  4 (rank = |G|^(k-1) over the grid, k <= 3): PASS");
}

#[test]
fn criterion_05_order_product_identity() {
    for spec in grid() {
        let h = spec.subgroup();
        let ambient = u64::from(h.modulus()).pow(h.dim() as u32);
        assert_eq!(
            h.order() * spec.orthogonal().order(),
            ambient,
            "{}",
            describe(&spec)
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x4d4f4c49454e);
    for trial in 0..50 {
        let modulus: u32 = rng.random_range(2..=6);
        let n: usize = rng.random_range(1..=3);
        let mut generators = vec![
            // a random constant vector
            ZModVec::new(modulus, vec![rng.random_range(0..modulus); n]).unwrap(),
        ];
        // the full permutation orbit of a random vector
        let mut orbit_seed: Vec<u32> =
            (0..n).map(|_| rng.random_range(0..modulus)).collect();
        orbit_seed.sort_unstable();
        loop {
            generators.push(ZModVec::new(modulus, orbit_seed.clone()).unwrap());
            if !next_permutation(&mut orbit_seed) {
                break;
            }
        }
        let h = ZModSubgroup::generate(modulus, n, generators, CAP).unwrap();
        assert!(h.is_sn_stable(), "trial {}: closure must stay stable", trial);
        let perp = h.orthogonal(CAP).unwrap();
        let ambient = u64::from(modulus).pow(n as u32);
        assert_eq!(
            h.order() * perp.order(),
            ambient,
            "trial {}: N={} n={} |H|={}",
            trial,
            modulus,
            n,
            h.order()
        );
    }
    println!("[acceptance] criterion  5 (|H|*|H-perp| = N^n, grid + 50 random subgroups): PASS");
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[test]
fn criterion_06_scaled_limit_over_the_grid() {
    for spec in grid() {
        let order = BigUint::from(spec.subgroup_order()) * factorial(spec.rank());
        let expected = BigRational::new(BigUint::one().into(), order.into());
        for copies in 1..=3usize {
            assert_eq!(
                scaled_limit(&spec, copies, CAP).unwrap(),
                expected,
                "{} k={}",
                describe(&spec),
                copies
            );
        }
    }
    println!("[acceptance] criterion  6 (scaled limit = 1/|G| over the grid, k <= 3): PASS");
}

#[test]
fn criterion_07_engine_matches_oracle() {
    let mut compared = 0;
    for spec in grid() {
        if spec.rank() > 3 || spec.modulus() > 4 {
            continue;
        }
        for copies in 1..=2usize {
            let engine = hilbert_series(&spec, copies, CAP).unwrap().truncate(5);
            let counted = oracle::series(&spec, copies, 5, ORACLE_CAP).unwrap();
            assert_eq!(engine, counted, "{} k={}", describe(&spec), copies);
            compared += 1;
        }
    }
    assert!(compared >= 20, "grid restriction left only {} comparisons", compared);
    println!(
        "[acceptance] criterion  7 (engine = oracle to depth 5, {} spec/k pairs): PASS",
        compared
    );
}

#[test]
fn criterion_08_separability_and_base_case() {
    for spec in grid() {
        let q2 = module_quotient(&spec, 2, CAP).unwrap();
        assert!(q2.is_polynomial());
        if q2.numerator().term_count() > 1 {
            assert_eq!(
                splits_into_univariates(q2.numerator()),
                Ok(false),
                "{}: a non-constant quotient must not split",
                describe(&spec)
            );
            assert_eq!(q2.separable(), Some(false));
        }

        let q1 = module_quotient(&spec, 1, CAP).unwrap();
        assert!(q1.is_polynomial());
        assert_eq!(q1.numerator(), &MultiPoly::one(1), "{}", describe(&spec));
        assert_eq!(q1.rank(), Some(&int(1)));
    }
    println!("[acceptance] criterion  8 (no univariate split at k=2; Q=1 at k=1): PASS");
}

#[test]
fn criterion_09_cycle_numerator_closed_forms() {
    // trivial subgroup at modulus 2: prod over copies and parts of (1 + h_i^part)
    let closed_trivial = |copies: usize, parts: &[u32]| {
        let mut out = MultiPoly::one(copies);
        for var in 0..copies {
            for &p in parts {
                let mut e = vec![0u32; copies];
                e[var] = p;
                out = out.mul(&MultiPoly::one(copies).add(&MultiPoly::monomial(copies, e, int(1))));
            }
        }
        out
    };
    // prod over copies of (1 + s * h_i^p), the building block of the
    // plus/minus averages below
    let signed_product = |copies: usize, p: u32, sign: i64| {
        let mut out = MultiPoly::one(copies);
        for var in 0..copies {
            let mut e = vec![0u32; copies];
            e[var] = p;
            out = out.mul(&MultiPoly::one(copies).add(&MultiPoly::monomial(copies, e, int(sign))));
        }
        out
    };
    let half = BigRational::new(1.into(), 2.into());
    let even_part = |copies: usize, p: u32| {
        signed_product(copies, p, 1)
            .add(&signed_product(copies, p, -1))
            .scale(&half)
    };
    let odd_part = |copies: usize, p: u32| {
        signed_product(copies, p, 1)
            .sub(&signed_product(copies, p, -1))
            .scale(&half)
    };

    let s2 = GroupSpec::symmetric(2, CAP).unwrap();
    assert_eq!(
        cycle_numerator(&s2, &partition(&[2]), 1, CAP).unwrap(),
        closed_trivial(1, &[2])
    );
    assert_eq!(
        cycle_numerator(&s2, &partition(&[1, 1]), 2, CAP).unwrap(),
        closed_trivial(2, &[1, 1])
    );
    let s3 = GroupSpec::symmetric(3, CAP).unwrap();
    assert_eq!(
        cycle_numerator(&s3, &partition(&[1, 2]), 2, CAP).unwrap(),
        closed_trivial(2, &[1, 2])
    );

    // signed permutations, two singleton orbits: the even-exponent average
    // per orbit
    let b2 = GroupSpec::hyperoctahedral(2, CAP).unwrap();
    assert_eq!(
        cycle_numerator(&b2, &partition(&[1, 1]), 2, CAP).unwrap(),
        even_part(2, 1).mul(&even_part(2, 1))
    );

    // dihedral N=3, the 2-cycle type: every residue is admissible
    let i3 = GroupSpec::dihedral(3, CAP).unwrap();
    let geometric = |var: usize| {
        poly(2, &[(&[0, 0], 1)])
            .add(&MultiPoly::monomial(2, if var == 0 { vec![2, 0] } else { vec![0, 2] }, int(1)))
            .add(&MultiPoly::monomial(2, if var == 0 { vec![4, 0] } else { vec![0, 4] }, int(1)))
    };
    assert_eq!(
        cycle_numerator(&i3, &partition(&[2]), 2, CAP).unwrap(),
        geometric(0).mul(&geometric(1))
    );

    // sign-extended S_3: all three cycle types at k = 2
    let g2 = GroupSpec::g2_example(CAP).unwrap();
    assert_eq!(
        cycle_numerator(&g2, &partition(&[3]), 2, CAP).unwrap(),
        even_part(2, 3)
    );
    assert_eq!(
        cycle_numerator(&g2, &partition(&[1, 2]), 2, CAP).unwrap(),
        even_part(2, 1).mul(&signed_product(2, 2, 1))
    );
    let a = even_part(2, 1);
    let b = odd_part(2, 1);
    let expected = a.mul(&a).mul(&a).add(&a.mul(&b).mul(&b).scale(&int(3)));
    assert_eq!(
        cycle_numerator(&g2, &partition(&[1, 1, 1]), 2, CAP).unwrap(),
        expected
    );
    println!("[acceptance] criterion  9 (cycle-type numerators match closed forms): PASS");
}

#[test]
fn criterion_10_property_suites() {
    // ring axioms on fixed witnesses (the randomized suites live in the
    // standalone property test targets)
    let a = poly(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[1, 1], -1)]);
    let b = poly(2, &[(&[0, 1], 3), (&[2, 0], 1)]);
    let c = poly(2, &[(&[0, 0], -2), (&[1, 1], 5)]);
    assert_eq!(a.add(&b), b.add(&a));
    assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    assert_eq!(a.mul(&b), b.mul(&a));
    assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));

    // divide-then-multiply round trip
    let factor = BinomialFactor::new(1, 3);
    let product = a.mul(&factor.expand(2));
    assert_eq!(try_divide_binomial(&product, factor), Some(a.clone()));

    // truncation commutes with normalization and multiplication
    let s = RationalSeries::new(
        poly(2, &[(&[0, 0], 1), (&[2, 0], -1)]),
        [BinomialFactor::new(0, 1), BinomialFactor::new(1, 2)],
    );
    let t = RationalSeries::new(b.clone(), [BinomialFactor::new(0, 2)]);
    assert_eq!(s.normalize().truncate(4), s.truncate(4));
    let direct = s.mul(&t).truncate(4);
    let piecewise = RationalSeries::from_polynomial(s.truncate(4))
        .mul(&RationalSeries::from_polynomial(t.truncate(4)))
        .truncate(4);
    assert_eq!(direct, piecewise);

    // quotient symmetry under every variable transposition, k = 2 and 3
    for spec in grid() {
        let q = module_quotient(&spec, 2, CAP).unwrap();
        assert_eq!(&q.numerator().permute_vars(&[1, 0]), q.numerator());
    }
    let q3 = module_quotient(&GroupSpec::symmetric(3, CAP).unwrap(), 3, CAP).unwrap();
    for perm in [[1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]] {
        assert_eq!(&q3.numerator().permute_vars(&perm), q3.numerator());
    }

    // determinism of the JSON output
    let args = ["--family", "g", "--d", "2", "--e", "2", "--n", "2", "--k", "2"];
    let render = || {
        let config = RunConfig::parse_from_args(args.iter().copied()).unwrap();
        run(&config).unwrap().to_json()
    };
    assert_eq!(render(), render());
    println!("[acceptance] criterion 10 (property suites and determinism): PASS");
}

#[test]
fn grid_families_are_as_labelled() {
    // sanity on the grid itself: the g-de-e-n entries reproduce their
    // labelled orders |H| = N^(n-1) * d
    for spec in grid() {
        if let Family::GDeEn { d, e: _, n } = spec.family() {
            let expected = u64::from(spec.modulus()).pow(*n as u32 - 1) * u64::from(*d);
            assert_eq!(spec.subgroup_order(), expected);
        }
    }
}
