mod common;

use common::{big, factorial, poly};
use pi_lattice::multilinear::{decompose, derangements, proper_basis, recompose, saturation_check, CommutatorWord};
use pi_lattice::rings::{is_identity, ut2};
use pi_lattice::theory::consequence_lattice;
use pi_lattice::{MultilinearPoly, Permutation};

#[test]
fn monomials_follow_the_word() {
    let m = MultilinearPoly::monomial(Permutation::new(vec![1, 2, 3]).unwrap());
    assert_eq!(m, poly(3, &[(&[1, 2, 3], 1)]));
    let m = MultilinearPoly::monomial(Permutation::new(vec![2, 1]).unwrap());
    assert_eq!(m.coeff(&Permutation::new(vec![2, 1]).unwrap()), big(1));
    assert_eq!(m.len(), 1);
}

#[test]
fn commutator_expansions() {
    assert_eq!(CommutatorWord::bracket(&[1, 2]).unwrap().expand(), poly(2, &[(&[1, 2], 1), (&[2, 1], -1)]));
    assert_eq!(
        CommutatorWord::bracket(&[1, 2, 3]).unwrap().expand(),
        poly(3, &[(&[1, 2, 3], 1), (&[2, 1, 3], -1), (&[3, 1, 2], -1), (&[3, 2, 1], 1)])
    );
    assert_eq!(
        CommutatorWord::new(vec![1], vec![vec![2, 3]]).unwrap().expand(),
        poly(3, &[(&[1, 2, 3], 1), (&[1, 3, 2], -1)])
    );
}

#[test]
fn jacobi_identity_vanishes() {
    let e = |l: &[usize]| CommutatorWord::bracket(l).unwrap().expand();
    let sum = e(&[1, 2, 3]).try_add(&e(&[2, 3, 1])).unwrap().try_add(&e(&[3, 1, 2])).unwrap();
    assert!(sum.is_zero());
}

#[test]
fn proper_basis_sizes_are_derangement_numbers() {
    let sizes: Vec<usize> = (0..=6).map(|n| proper_basis(n).len()).collect();
    assert_eq!(sizes, vec![1, 0, 1, 2, 9, 44, 265]);
    for n in 0..=6 {
        assert_eq!(derangements(n), sizes[n]);
    }
    assert_eq!(proper_basis(2).element_poly(0).scale(&big(-1)), CommutatorWord::bracket(&[1, 2]).unwrap().expand());
}

#[test]
fn ranks_of_pn_split_binomially() {
    for n in 0..=6 {
        let total: usize = (0..=n).map(|j| common::binomial(n, j) * proper_basis(j).len()).sum();
        assert_eq!(total, factorial(n), "n = {n}");
    }
}

#[test]
fn proper_basis_spans_a_saturated_lattice() {
    for n in 2..=5 {
        let r = saturation_check(n).unwrap();
        assert!(r.ok(), "{r:?}");
    }
}

#[test]
fn proper_coordinates_round_trip() {
    let b = proper_basis(4);
    let f = CommutatorWord::new(vec![], vec![vec![3, 1], vec![4, 2]]).unwrap().expand();
    let c = b.coordinates(&f).unwrap().expect("product of commutators is proper");
    assert_eq!(b.combine(&c), f);
    assert!(b.coordinates(&poly(4, &[(&[1, 2, 3, 4], 1)])).unwrap().is_none());
}

#[test]
fn ordered_monomial_decomposes_to_itself() {
    for n in 1..=5 {
        let f = MultilinearPoly::monomial(Permutation::identity(n));
        let comps = decompose(&f).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].prefix, (1..=n).collect::<Vec<_>>());
        assert_eq!(comps[0].coords, vec![big(1)]);
        assert_eq!(recompose(n, &comps), f);
    }
}

#[test]
fn sample_rewriting_in_four_variables() {
    // x3 x1 x4 x2 = x1x2x3x4 + x1[x3,x2]x4 + x1x3[x4,x2] + [x3,x1]x2x4
    // modulo the consequences of [x1,x2][x3,x4]
    let lhs = poly(4, &[(&[3, 1, 4, 2], 1)]);
    let rhs = poly(
        4,
        &[
            (&[1, 2, 3, 4], 1),
            // x1[x3,x2]x4
            (&[1, 3, 2, 4], 1),
            (&[1, 2, 3, 4], -1),
            // x1x3[x4,x2]
            (&[1, 3, 4, 2], 1),
            (&[1, 3, 2, 4], -1),
            // [x3,x1]x2x4
            (&[3, 1, 2, 4], 1),
            (&[1, 3, 2, 4], -1),
        ],
    );
    let diff = lhs.try_add(&rhs.scale(&big(-1))).unwrap();
    assert!(!diff.is_zero());
    let id = CommutatorWord::new(vec![], vec![vec![1, 2], vec![3, 4]]).unwrap().expand();
    let cons = consequence_lattice(&[id], 4).unwrap();
    assert!(cons.contains(&diff.to_dense()).unwrap());
    assert!(is_identity(&ut2(0, 0).unwrap(), &diff).unwrap());
    assert_eq!(recompose(4, &decompose(&lhs).unwrap()), lhs);
}

#[test]
fn decomposition_prefixes_are_increasing() {
    let f = poly(4, &[(&[4, 3, 2, 1], 3), (&[2, 4, 1, 3], -2)]);
    let comps = decompose(&f).unwrap();
    for c in &comps {
        assert!(c.prefix.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(c.coords.len(), proper_basis(4 - c.prefix.len()).len());
    }
    assert_eq!(recompose(4, &comps), f);
}

#[test]
fn action_moves_variables() {
    let f = poly(3, &[(&[1, 2, 3], 1), (&[2, 1, 3], -1)]);
    let s = Permutation::new(vec![3, 1, 2]).unwrap();
    assert_eq!(f.act(&s).unwrap(), poly(3, &[(&[3, 1, 2], 1), (&[1, 3, 2], -1)]));
    assert!(f.act(&Permutation::identity(2)).is_err());
}

#[test]
fn degree_mismatch_is_rejected() {
    assert!(poly(2, &[(&[1, 2], 1)]).try_add(&poly(3, &[(&[1, 2, 3], 1)])).is_err());
    assert!(MultilinearPoly::from_terms(2, [(Permutation::identity(3), big(1))]).is_err());
    assert!(Permutation::new(vec![1, 1]).is_err());
}
