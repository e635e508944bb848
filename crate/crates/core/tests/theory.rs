mod common;

use common::{big, binomial};
use pi_lattice::lattice::{image_invariants, IntMatrix};
use pi_lattice::rings::{cyclic_ring, evaluation_rows, grassmann, ut2, EvalOptions};
use pi_lattice::theory::{
    all_pass, consequence_lattice, drensky_filtration, grassmann_identities, identity_lattice, ordinary_codim,
    ordinary_invariants, proper_invariants, run_claim, ut2_identities, verify_field_props, verify_grassmann,
    verify_proper_ordinary, verify_ut2, SuiteConfig, CLAIMS,
};
use pi_lattice::{AbelianInvariants, PiError, RingModel};

fn opts() -> EvalOptions {
    EvalOptions::default()
}

fn copies(m: i64, k: usize) -> AbelianInvariants {
    AbelianInvariants::from_cyclic(vec![big(m); k])
}

/// Invariants of `P_n / Id` from every ordered tuple of generators.
fn brute_force(ring: &RingModel, n: usize) -> AbelianInvariants {
    let (rows, moduli) = evaluation_rows(ring, n, 1 << 20).unwrap();
    let cols = common::factorial(n);
    image_invariants(&IntMatrix::from_rows(cols, rows).unwrap(), &moduli).unwrap()
}

#[test]
fn reduced_evaluation_matches_full_enumeration() {
    let rings = [ut2(2, 2).unwrap(), ut2(4, 2).unwrap(), ut2(0, 0).unwrap(), grassmann(3, 3).unwrap(), cyclic_ring(6)];
    for r in &rings {
        for n in 1..=3 {
            assert_eq!(ordinary_invariants(r, n, opts()).unwrap(), brute_force(r, n), "{} n = {n}", r.label());
        }
    }
}

#[test]
fn ut2_examples() {
    let r = ut2(2, 2).unwrap();
    assert_eq!(ordinary_invariants(&r, 4, opts()).unwrap(), copies(2, 18));
    assert_eq!(ordinary_invariants(&r, 5, opts()).unwrap(), copies(2, 50));
    assert_eq!(proper_invariants(&r, 3, opts()).unwrap(), copies(2, 2));
    assert_eq!(ordinary_invariants(&ut2(0, 0).unwrap(), 3, opts()).unwrap(), AbelianInvariants::free(6));
    let mixed = ordinary_invariants(&ut2(4, 2).unwrap(), 2, opts()).unwrap();
    assert_eq!(mixed, AbelianInvariants::from_cyclic(vec![big(4), big(2)]));
}

#[test]
fn grassmann_examples() {
    assert_eq!(ordinary_invariants(&grassmann(3, 5).unwrap(), 3, opts()).unwrap(), copies(3, 4));
    assert_eq!(ordinary_invariants(&grassmann(3, 5).unwrap(), 4, opts()).unwrap(), copies(3, 8));
    assert_eq!(ordinary_invariants(&grassmann(0, 5).unwrap(), 3, opts()).unwrap(), AbelianInvariants::free(4));
    assert!(proper_invariants(&grassmann(3, 5).unwrap(), 3, opts()).unwrap().is_trivial());
    assert_eq!(proper_invariants(&grassmann(3, 5).unwrap(), 4, opts()).unwrap(), copies(3, 1));
}

#[test]
fn cyclic_examples() {
    for m in [2u64, 3, 4, 5] {
        for n in 1..=3 {
            let rep = ordinary_codim(&cyclic_ring(m), n, opts()).unwrap();
            assert_eq!(rep.ordinary, copies(m as i64, 1));
            assert_eq!(rep.ordinary.codim(&big(m as i64)).unwrap(), 1);
            assert!(rep.proper.is_trivial());
        }
    }
}

#[test]
fn binomial_identity_for_small_rings() {
    for r in [ut2(2, 2).unwrap(), ut2(6, 3).unwrap(), grassmann(3, 4).unwrap(), cyclic_ring(12)] {
        for n in 0..=4 {
            let c = ordinary_invariants(&r, n, opts()).unwrap();
            let gammas: Vec<AbelianInvariants> = (0..=n).map(|j| proper_invariants(&r, j, opts()).unwrap()).collect();
            let mut sum = AbelianInvariants::trivial();
            for (j, g) in gammas.iter().enumerate() {
                sum = sum.direct_sum(&g.power(binomial(n, j)));
            }
            assert_eq!(c, sum, "{} n = {n}", r.label());
        }
    }
    let outcomes = verify_proper_ordinary(&ut2(2, 2).unwrap(), 5, opts()).unwrap();
    assert!(all_pass(&outcomes));
}

#[test]
fn identity_bases_generate_the_kernel() {
    for (ell, m) in [(2, 2), (4, 2), (0, 0)] {
        let ids: Vec<_> = ut2_identities(ell, m).into_iter().map(|(_, f)| f).collect();
        for n in 1..=4 {
            let kernel = identity_lattice(&ut2(ell, m).unwrap(), n, opts()).unwrap();
            assert_eq!(consequence_lattice(&ids, n).unwrap(), kernel, "ut2:{ell},{m} n = {n}");
        }
    }
    let ids: Vec<_> = grassmann_identities(3).into_iter().map(|(_, f)| f).collect();
    for n in 1..=4 {
        let kernel = identity_lattice(&grassmann(3, 5).unwrap(), n, opts()).unwrap();
        assert_eq!(consequence_lattice(&ids, n).unwrap(), kernel, "n = {n}");
    }
}

#[test]
fn filtration_factors() {
    let rep = drensky_filtration(&ut2(2, 2).unwrap(), 3, opts()).unwrap();
    let got: Vec<AbelianInvariants> = rep.factors.iter().map(|f| f.computed.invariants.clone()).collect();
    assert_eq!(got, vec![copies(2, 1), copies(2, 3), copies(2, 2)]);
    assert!(rep.factors.iter().all(|f| f.matches()));
    let rep = drensky_filtration(&grassmann(3, 4).unwrap(), 4, opts()).unwrap();
    assert!(rep.factors.iter().all(|f| f.matches()));
    assert!(drensky_filtration(&ut2(2, 2).unwrap(), 0, opts()).is_err());
}

#[test]
fn suites_pass_on_small_inputs() {
    assert!(all_pass(&verify_ut2(2, 2, 4, opts()).unwrap()));
    assert!(all_pass(&verify_ut2(4, 2, 3, opts()).unwrap()));
    assert!(all_pass(&verify_grassmann(3, 4, 3, opts()).unwrap()));
    assert!(all_pass(&verify_field_props(&ut2(3, 3).unwrap(), 3, opts()).unwrap()));
    assert!(verify_field_props(&ut2(4, 2).unwrap(), 3, opts()).is_err());
    assert!(verify_grassmann(3, 3, 3, opts()).is_err());
}

#[test]
fn claim_dispatch() {
    assert_eq!(CLAIMS.len(), 8);
    let cfg = SuiteConfig { n_max: Some(3), ..SuiteConfig::default() };
    assert!(all_pass(&run_claim("specht.psi", &cfg).unwrap()));
    assert!(matches!(run_claim("nope", &cfg), Err(PiError::Parse(_)) | Err(PiError::Precondition(_))));
}

#[test]
fn budget_is_enforced() {
    let tight = EvalOptions { budget: 3, ..EvalOptions::default() };
    assert!(matches!(ordinary_invariants(&ut2(2, 2).unwrap(), 4, tight), Err(PiError::ResourceExceeded { .. })));
}
