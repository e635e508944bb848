mod common;

use std::sync::Arc;

use common::{big, bigs, poly};
use num_bigint::BigInt;
use pi_lattice::multilinear::CommutatorWord;
use pi_lattice::rings::{cyclic_ring, direct_sum, evaluate, exponent, grassmann, is_identity, parse_ring_spec, ut2, RingElement};
use pi_lattice::theory::{ordinary_invariants, ut2_identities};
use pi_lattice::{AbelianInvariants, MultilinearPoly, Permutation, RingModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bracket(labels: &[usize]) -> MultilinearPoly {
    CommutatorWord::bracket(labels).unwrap().expand()
}

#[test]
fn cyclic_rings() {
    let z = cyclic_ring(0);
    assert_eq!(z.characteristic(), Some(big(0)));
    let z4 = Arc::new(cyclic_ring(4));
    let two = z4.generator(0).scale(&big(2));
    assert!(two.mul(&two).unwrap().is_zero());
    for m in [0u64, 2, 4, 9] {
        for n in 1..=4 {
            let inv = ordinary_invariants(&cyclic_ring(m), n, Default::default()).unwrap();
            let want = if m == 0 { AbelianInvariants::free(1) } else { AbelianInvariants::cyclic(big(m as i64)) };
            assert_eq!(inv, want, "Z_{m}, n = {n}");
        }
    }
}

#[test]
fn ut2_matrix_units() {
    let r = Arc::new(ut2(2, 2).unwrap());
    assert_eq!(r.characteristic(), Some(big(2)));
    let (e11, e22, e12) = (r.generator(0), r.generator(1), r.generator(2));
    assert_eq!(e11.commutator(&e12).unwrap(), e12);
    assert_eq!(e12.mul(&e22).unwrap(), e12);
    assert!(e12.mul(&e12).unwrap().is_zero());
    assert!(e22.mul(&e12).unwrap().is_zero());
    assert!(e12.mul(&e11).unwrap().is_zero());
    assert_eq!(evaluate(&bracket(&[1, 2]), &[e11, e12.clone()]).unwrap(), e12);
    assert!(ut2(4, 3).is_err());
    assert!(ut2(4, 0).is_err());
    assert!(ut2(0, 5).is_ok());
}

#[test]
fn ut2_with_unequal_moduli() {
    let r = ut2(4, 2).unwrap();
    let twice_bracket = bracket(&[1, 2]).scale(&big(2));
    assert!(is_identity(&r, &twice_bracket).unwrap());
    assert!(!is_identity(&r, &poly(1, &[(&[1], 2)])).unwrap());
    for (_, f) in ut2_identities(4, 2) {
        assert!(is_identity(&r, &f).unwrap());
    }
}

#[test]
fn grassmann_relations() {
    let g = Arc::new(grassmann(3, 4).unwrap());
    let e = |s: usize| g.basis_element(s);
    assert_eq!(e(0b01).mul(&e(0b10)).unwrap(), e(0b11));
    assert_eq!(e(0b10).mul(&e(0b01)).unwrap(), e(0b11).scale(&big(-1)));
    assert!(e(0b01).mul(&e(0b01)).unwrap().is_zero());
    assert!(is_identity(&g, &bracket(&[1, 2, 3])).unwrap());
    let args: Vec<RingElement> = [0b0001, 0b0010, 0b0100, 0b1000].iter().map(|&s| e(s)).collect();
    let f = CommutatorWord::new(vec![], vec![vec![1, 2], vec![3, 4]]).unwrap().expand();
    assert_eq!(evaluate(&f, &args).unwrap(), e(0b1111));
    assert!(grassmann(4, 3).is_err());
    assert!(grassmann(0, 3).is_ok());
}

#[test]
fn direct_sums() {
    let s = direct_sum(&[cyclic_ring(2), cyclic_ring(4)]).unwrap();
    assert_eq!(s.characteristic(), Some(big(4)));
    assert_eq!(exponent(&s), big(4));
    let one = direct_sum(&[ut2(2, 2).unwrap()]).unwrap();
    for n in 1..=3 {
        let a = ordinary_invariants(&one, n, Default::default()).unwrap();
        let b = ordinary_invariants(&ut2(2, 2).unwrap(), n, Default::default()).unwrap();
        assert_eq!(a, b);
    }
    let tower = direct_sum(&[cyclic_ring(2), cyclic_ring(4), cyclic_ring(8)]).unwrap();
    for n in 1..=3 {
        let a = ordinary_invariants(&tower, n, Default::default()).unwrap();
        assert_eq!(a, AbelianInvariants::cyclic(big(8)));
        assert_eq!(a.codim(&big(0)).unwrap(), 0);
    }
    assert!(direct_sum(&[]).is_err());
}

#[test]
fn evaluation_errors() {
    let a = Arc::new(ut2(2, 2).unwrap());
    let b = Arc::new(ut2(3, 3).unwrap());
    let f = bracket(&[1, 2]);
    assert!(evaluate(&f, &[a.generator(0)]).is_err());
    assert!(evaluate(&f, &[a.generator(0), b.generator(1)]).is_err());
    let x = a.generator(2);
    assert!(evaluate(&f, &[x.clone(), x]).unwrap().is_zero());
}

#[test]
fn spec_strings() {
    assert_eq!(parse_ring_spec("ut2:2,2").unwrap().label(), "ut2:2,2");
    assert_eq!(parse_ring_spec("grassmann:3,4").unwrap().rank(), 16);
    assert_eq!(parse_ring_spec("sum:[cyclic:2,cyclic:4]").unwrap().rank(), 2);
    for bad in ["", "ut2:3", "ut2:4,3", "grassmann:2,3", "foo:1", "sum:[cyclic:2,", "cyclic:x"] {
        assert!(parse_ring_spec(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn json_round_trip() {
    for r in [ut2(4, 2).unwrap(), grassmann(3, 3).unwrap(), direct_sum(&[cyclic_ring(3), ut2(0, 0).unwrap()]).unwrap()] {
        let j = r.to_json();
        let back = RingModel::from_json(&j).unwrap();
        assert_eq!(back, r);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(parse_ring_spec(&text).unwrap(), r);
    }
}

fn models() -> Vec<RingModel> {
    vec![
        cyclic_ring(0),
        cyclic_ring(6),
        ut2(0, 0).unwrap(),
        ut2(4, 2).unwrap(),
        grassmann(3, 3).unwrap(),
        grassmann(0, 3).unwrap(),
        direct_sum(&[cyclic_ring(2), ut2(3, 3).unwrap()]).unwrap(),
    ]
}

#[test]
fn every_model_is_associative() {
    for r in models() {
        let basis: Vec<Vec<BigInt>> =
            (0..r.rank()).map(|i| (0..r.rank()).map(|j| big(i64::from(i == j))).collect()).collect();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    assert_eq!(r.mul_vec(&r.mul_vec(a, b), c), r.mul_vec(a, &r.mul_vec(b, c)), "{}", r.label());
                }
            }
        }
    }
}

fn random_element(r: &Arc<RingModel>, rng: &mut ChaCha8Rng) -> RingElement {
    r.element((0..r.rank()).map(|_| big(rng.gen_range(-5..=5))).collect()).unwrap()
}

#[test]
fn evaluation_is_multilinear() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for r in models() {
        let r = Arc::new(r);
        for _ in 0..500 {
            let n = rng.gen_range(1..=4);
            let terms: Vec<(Permutation, BigInt)> = (0..3)
                .map(|_| (Permutation::unrank(n, rng.gen_range(0..common::factorial(n))), big(rng.gen_range(-3..=3))))
                .collect();
            let f = MultilinearPoly::from_terms(n, terms).unwrap();
            let args: Vec<RingElement> = (0..n).map(|_| random_element(&r, &mut rng)).collect();
            let slot = rng.gen_range(0..n);
            let extra = random_element(&r, &mut rng);
            let mut summed = args.clone();
            summed[slot] = args[slot].add(&extra).unwrap();
            let mut other = args.clone();
            other[slot] = extra;
            let lhs = evaluate(&f, &summed).unwrap();
            let rhs = evaluate(&f, &args).unwrap().add(&evaluate(&f, &other).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{}", r.label());
            let k = big(rng.gen_range(-4..=4));
            let mut scaled = args.clone();
            scaled[slot] = args[slot].scale(&k);
            assert_eq!(evaluate(&f, &scaled).unwrap(), evaluate(&f, &args).unwrap().scale(&k));
        }
    }
}

#[test]
fn centrality() {
    let g = grassmann(3, 3).unwrap();
    assert!(g.is_central(&g.generators()[0b011]));
    assert!(!g.is_central(&g.generators()[0b001]));
    let u = ut2(0, 0).unwrap();
    assert!(!u.is_central(&bigs(&[1, 0, 0])));
    assert!(u.is_central(&bigs(&[1, 1, 0])));
}
