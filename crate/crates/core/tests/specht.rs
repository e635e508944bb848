mod common;

use common::{big, hook_length, mn_character, partitions};
use pi_lattice::perm::partitions_of;
use pi_lattice::specht::{
    induce_mod, op_a, op_r, polytabloid, polytabloid_span, psi, specht_character, specht_lattice, specht_series,
    tabloid_module_basis, young_expected, GenPartition, Partition, PartitionPair, Tableau, TabloidVector,
};
use pi_lattice::AbelianInvariants;

fn pair(l: &[usize], m: &[usize]) -> PartitionPair {
    PartitionPair::from_parts(l, m).unwrap()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn sorted(mut v: Vec<Partition>) -> Vec<Partition> {
    v.sort();
    v
}

#[test]
fn tabloid_counts() {
    assert_eq!(tabloid_module_basis(&GenPartition::new(vec![4])).unwrap().len(), 1);
    assert_eq!(tabloid_module_basis(&GenPartition::new(vec![1, 1])).unwrap().len(), 2);
    assert_eq!(tabloid_module_basis(&GenPartition::new(vec![2, 1])).unwrap().len(), 3);
    assert_eq!(tabloid_module_basis(&GenPartition::new(vec![2, 0, 2])).unwrap().len(), 6);
}

#[test]
fn one_row_polytabloid_is_its_tabloid() {
    let p = pair(&[3], &[3]);
    let t = Tableau::initial(&p.mu);
    let e = polytabloid(&p, &t).unwrap();
    assert_eq!(e.coeffs.len(), 1);
    assert_eq!(e.coeffs.values().next(), Some(&big(1)));
}

#[test]
fn pair_validation() {
    assert!(PartitionPair::from_parts(&[2, 2], &[2, 1]).is_err());
    assert!(PartitionPair::from_parts(&[1], &[2]).is_err());
    assert!(Partition::new(vec![1, 2]).is_err());
    // fits and the first rows agree
    let p = pair(&[1, 1], &[1, 2]);
    assert_eq!(sorted(specht_series(&p).unwrap().labels()), vec![part(&[2, 1])]);
}

#[test]
fn pair_counts() {
    assert_eq!(PartitionPair::all(1).len(), 1);
    // (2);(2), (1);(1,1), (1,1);(1,1)
    assert_eq!(PartitionPair::all(2).len(), 3);
}

#[test]
fn ranks_follow_the_hook_formula() {
    for n in 1..=6 {
        for p in partitions(n) {
            let r = specht_lattice(&PartitionPair::specht(&part(&p))).unwrap().rank();
            assert_eq!(r, hook_length(&p), "{p:?}");
            assert_eq!(part(&p).hook_number(), big(r as i64));
        }
    }
    assert_eq!(specht_lattice(&pair(&[2, 1], &[2, 1])).unwrap().rank(), 2);
}

#[test]
fn closure_equals_span_of_all_polytabloids() {
    for n in 1..=5 {
        for p in PartitionPair::all(n) {
            let all = polytabloid_span(&p, &Tableau::all(&p.mu)).unwrap();
            assert_eq!(specht_lattice(&p).unwrap(), all, "{p}");
        }
    }
}

#[test]
fn standard_polytabloids_generate_exactly_for_specht_pairs() {
    let mut equal = Vec::new();
    for n in 1..=5 {
        let mut count = 0;
        for p in PartitionPair::all(n) {
            let std = polytabloid_span(&p, &Tableau::standard(&p.mu)).unwrap();
            let s = specht_lattice(&p).unwrap();
            assert!(s.contains_lattice(&std).unwrap());
            if std == s {
                count += 1;
                assert!(p.is_specht(), "{p}");
            } else {
                assert!(std.rank() < s.rank(), "{p}");
            }
        }
        equal.push(count);
    }
    assert_eq!(equal, vec![1, 2, 3, 5, 7]);
}

#[test]
fn lattices_are_saturated() {
    for n in 1..=5 {
        for p in PartitionPair::all(n) {
            assert!(specht_lattice(&p).unwrap().is_saturated().unwrap(), "{p}");
        }
    }
}

#[test]
fn psi_moves_boxes_up() {
    let mu = GenPartition::new(vec![2, 2]);
    let t = pi_lattice::specht::initial_tabloid(&mu);
    let mut x = TabloidVector::zero(mu);
    x.add_term(t, big(1));
    let y = psi(1, 1, &x).unwrap();
    assert_eq!(y.shape, GenPartition::new(vec![3, 1]));
    assert_eq!(y.coeffs.len(), 2);
    assert!(y.coeffs.values().all(|c| *c == big(1)));
}

#[test]
fn add_and_raise_operations() {
    let a = op_a(2, &pair(&[2, 1], &[2, 2])).unwrap().unwrap();
    assert_eq!(a.lambda, part(&[2, 2]));
    let a = op_a(3, &pair(&[2, 2], &[2, 2, 1])).unwrap().unwrap();
    assert_eq!(a.lambda, part(&[2, 2, 1]));
    assert!(op_a(2, &pair(&[1, 1], &[1, 2])).unwrap().is_none());
    assert_eq!(op_a(3, &pair(&[2, 1], &[2, 1, 1])).unwrap().unwrap().lambda, part(&[2, 1, 1]));
    let r = op_r(2, &pair(&[1], &[1, 1])).unwrap();
    assert_eq!((r.lambda, r.mu), (part(&[2]), GenPartition::new(vec![2])));
    let r = op_r(3, &pair(&[2, 1], &[2, 1, 2])).unwrap();
    assert_eq!((r.lambda, r.mu), (part(&[2, 1]), GenPartition::new(vec![2, 3])));
}

#[test]
fn series_examples() {
    let s = specht_series(&pair(&[2, 1], &[2, 1])).unwrap();
    assert_eq!(s.labels(), vec![part(&[2, 1])]);
    let s = specht_series(&pair(&[1, 1], &[1, 1, 1])).unwrap();
    assert_eq!(sorted(s.labels()), sorted(vec![part(&[2, 1]), part(&[1, 1, 1])]));
}

#[test]
fn series_factors_are_free_of_the_right_rank() {
    for n in 1..=5 {
        for p in PartitionPair::all(n) {
            let s = specht_series(&p).unwrap();
            let total: usize = s.factors.iter().map(|f| f.rank).sum();
            assert_eq!(total, specht_lattice(&p).unwrap().rank(), "{p}");
            for f in &s.factors {
                assert_eq!(f.rank, hook_length(f.label.parts()));
                assert_eq!(f.invariants, AbelianInvariants::free(f.rank));
            }
        }
    }
}

#[test]
fn induction_examples() {
    let r = induce_mod(&part(&[1]), 2, 0).unwrap();
    assert_eq!(sorted(r.labels()), sorted(vec![part(&[2]), part(&[1, 1])]));
    let r = induce_mod(&part(&[2, 1]), 5, 0).unwrap();
    assert_eq!(sorted(r.labels()), sorted(vec![part(&[4, 1]), part(&[3, 2]), part(&[3, 1, 1]), part(&[2, 2, 1])]));
    let r = induce_mod(&part(&[1, 1]), 3, 2).unwrap();
    let mut got: Vec<(Partition, AbelianInvariants)> = r.factors.iter().map(|f| (f.label.clone(), f.invariants.clone())).collect();
    got.sort_by(|a, b| a.0.cmp(&b.0));
    let two = |k| AbelianInvariants::from_cyclic(vec![big(2); k]);
    assert_eq!(got, vec![(part(&[1, 1, 1]), two(1)), (part(&[2, 1]), two(2))]);
    assert!(induce_mod(&part(&[2]), 2, 0).is_err());
}

#[test]
fn interlacing_examples() {
    assert_eq!(sorted(young_expected(&part(&[1]), 3).unwrap()), sorted(vec![part(&[3]), part(&[2, 1])]));
    assert_eq!(sorted(young_expected(&part(&[2, 2]), 5).unwrap()), sorted(vec![part(&[3, 2]), part(&[2, 2, 1])]));
}

#[test]
fn characters_match_border_strip_rule() {
    for n in 1..=6 {
        let classes = partitions_of(n);
        for p in partitions(n) {
            let chi = specht_character(&part(&p)).unwrap();
            let want: Vec<_> = classes.iter().map(|rho| big(mn_character(&p, rho))).collect();
            assert_eq!(chi, want, "{p:?}");
        }
    }
}

#[test]
fn character_examples() {
    let classes = partitions_of(3);
    let at = |p: &[usize], rho: &[usize]| {
        let i = classes.iter().position(|c| c == rho).unwrap();
        specht_character(&part(p)).unwrap()[i].clone()
    };
    for rho in &classes {
        assert_eq!(at(&[3], rho), big(1));
    }
    assert_eq!(at(&[1, 1, 1], &[2, 1]), big(-1));
    assert_eq!(at(&[2, 1], &[1, 1, 1]), big(2));
}
