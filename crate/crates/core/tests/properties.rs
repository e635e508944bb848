mod common;

use common::seeded;
use common::strategies::{perm, poly, proper_element, psi_case, sized_poly};
use pi_lattice::multilinear::{decompose, proper_basis, recompose};
use pi_lattice::specht::psi;
use pi_lattice::Permutation;
use proptest::prelude::*;

proptest! {
    #![proptest_config(seeded(200))]

    #[test]
    fn decompose_round_trip(f in sized_poly(5)) {
        let comps = decompose(&f).unwrap();
        prop_assert_eq!(recompose(f.degree(), &comps), f.clone());
        for c in &comps {
            prop_assert!(c.prefix.windows(2).all(|w| w[0] < w[1]));
            let b = proper_basis(f.degree() - c.prefix.len());
            prop_assert_eq!(b.combine(&c.coords), c.proper_part.clone());
        }
    }
}

proptest! {
    #![proptest_config(seeded(100))]

    #[test]
    fn action_inverts((f, s) in (1usize..=5).prop_flat_map(|n| (poly(n), perm(n)))) {
        let back = f.act(&s.inverse()).unwrap().act(&s).unwrap();
        prop_assert_eq!(back, f.clone());
        let t = Permutation::unrank(f.degree(), 0);
        prop_assert_eq!(f.act(&t).unwrap(), f);
    }

    #[test]
    fn action_composes((f, s, t) in (1usize..=4).prop_flat_map(|n| (poly(n), perm(n), perm(n)))) {
        let lhs = f.act(&t).unwrap().act(&s).unwrap();
        prop_assert_eq!(lhs, f.act(&s.compose(&t)).unwrap());
    }

    #[test]
    fn psi_commutes_with_permutations((_, i, v, x, s) in psi_case()) {
        let lhs = psi(i, v, &x.act(&s)).unwrap();
        let rhs = psi(i, v, &x).unwrap().act(&s);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn proper_lattice_is_permutation_stable((f, s) in (2usize..=5).prop_flat_map(proper_element)) {
        let b = proper_basis(f.degree());
        let g = f.act(&s).unwrap();
        let c = b.coordinates(&g).unwrap();
        prop_assert!(c.is_some());
        prop_assert_eq!(b.combine(&c.unwrap()), g);
    }
}
