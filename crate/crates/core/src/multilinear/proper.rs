use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::commutator::{product_words, CommutatorWord};
use super::poly::MultilinearPoly;
use crate::error::{exact, PiError, PiResult};
use crate::lattice::{HnfBuilder, IntMatrix, SubmoduleLattice};
use crate::perm::{factorial, rank_word, Permutation};
use crate::scalar::Scalar;

/// A ℤ-basis of `Γ_n(ℤ)` made of products of left-normed brackets.
#[derive(Debug, Serialize, Deserialize)]
pub struct ProperBasis {
    pub degree: usize,
    pub elements: Vec<CommutatorWord>,
    pub expansions: IntMatrix,
    #[serde(skip)]
    solver: OnceLock<(SubmoduleLattice<BigInt>, Vec<Vec<BigInt>>)>,
}

/// Set partitions of `items` into blocks of size at least 2, blocks listed
/// by increasing minimum.
pub fn set_partitions_min2(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let rest = &items[1..];
    let mut out = Vec::new();
    for mask in 1u64..(1 << rest.len()) {
        let mut block = vec![first];
        let mut remaining = Vec::new();
        for (i, &x) in rest.iter().enumerate() {
            if mask & (1 << i) != 0 {
                block.push(x);
            } else {
                remaining.push(x);
            }
        }
        for mut tail in set_partitions_min2(&remaining) {
            let mut p = vec![block.clone()];
            p.append(&mut tail);
            out.push(p);
        }
    }
    out.sort();
    out
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    Permutation::all(items.len()).iter().map(|p| p.word().iter().map(|&i| items[i - 1]).collect()).collect()
}

fn cartesian(choices: &[Vec<Vec<usize>>]) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for b in c {
                let mut p = prefix.clone();
                p.push(b.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Bracket choices for one block in the basis: `[x_max, x_{π(rest)}]`.
fn basis_brackets(block: &[usize]) -> Vec<Vec<usize>> {
    let max = *block.iter().max().expect("nonempty block");
    let rest: Vec<usize> = block.iter().copied().filter(|&x| x != max).collect();
    permutations_of(&rest)
        .into_iter()
        .map(|p| {
            let mut b = vec![max];
            b.extend(p);
            b
        })
        .collect()
}

/// Exhaustive bracket orderings of a block with the first entry above the second.
fn candidate_brackets(block: &[usize]) -> Vec<Vec<usize>> {
    permutations_of(block).into_iter().filter(|w| w[0] > w[1]).collect()
}

fn words_for(n: usize, pick: fn(&[usize]) -> Vec<Vec<usize>>) -> Vec<CommutatorWord> {
    let items: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for part in set_partitions_min2(&items) {
        let choices: Vec<Vec<Vec<usize>>> = part.iter().map(|b| pick(b)).collect();
        for factors in cartesian(&choices) {
            out.push(CommutatorWord { prefix: Vec::new(), factors });
        }
    }
    out
}

fn dense_row(n: usize, w: &CommutatorWord) -> Vec<i64> {
    let mut v = vec![0i64; factorial(n)];
    for (word, c) in product_words(&w.factors) {
        v[rank_word(&word)] += c;
    }
    v
}

pub fn derangements(n: usize) -> usize {
    match n {
        0 => 1,
        1 => 0,
        _ => (n - 1) * (derangements(n - 1) + derangements(n - 2)),
    }
}

impl ProperBasis {
    fn build(n: usize) -> Self {
        let elements = if n == 0 { vec![CommutatorWord { prefix: vec![], factors: vec![] }] } else { words_for(n, basis_brackets) };
        let rows: Vec<Vec<BigInt>> = elements.iter().map(|w| dense_row(n, w).into_iter().map(BigInt::from).collect()).collect();
        let expansions = IntMatrix::from_rows(factorial(n), rows).expect("consistent widths");
        Self { degree: n, elements, expansions, solver: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn expansion_rows<T: Scalar>(&self) -> Vec<Vec<T>> {
        self.expansions.lifted::<T>().expect("entries are ±1")
    }

    pub fn element_poly(&self, i: usize) -> MultilinearPoly {
        MultilinearPoly::from_dense(self.degree, &self.expansions.rows()[i]).expect("width n!")
    }

    pub fn lattice(&self) -> SubmoduleLattice<BigInt> {
        self.expansions.row_lattice()
    }

    fn solver(&self) -> &(SubmoduleLattice<BigInt>, Vec<Vec<BigInt>>) {
        self.solver.get_or_init(|| {
            // HNF of [E | I]: its left block H = U·E, right block U.
            let n = factorial(self.degree);
            let k = self.len();
            let aug = |i: usize| -> Vec<i64> {
                let mut r: Vec<i64> = self.expansions.rows()[i].iter().map(|x| i64::try_from(x).expect("±1")).collect();
                r.extend((0..k).map(|j| i64::from(i == j)));
                r
            };
            let lat = exact(
                || Ok(SubmoduleLattice::<i64>::from_rows(n + k, (0..k).map(aug))?.to_big()),
                || Ok(SubmoduleLattice::<BigInt>::from_rows(n + k, (0..k).map(|i| aug(i).into_iter().map(BigInt::from).collect()))?),
            )
            .expect("arbitrary precision cannot overflow");
            let h: Vec<Vec<BigInt>> = lat.basis().iter().map(|r| r[..n].to_vec()).collect();
            let u: Vec<Vec<BigInt>> = lat.basis().iter().map(|r| r[n..].to_vec()).collect();
            let hl = SubmoduleLattice::from_rows(n, h.clone()).expect("bigint");
            // the rows of H are already in echelon form, so the canonical
            // basis of `hl` coincides with H
            debug_assert_eq!(hl.basis(), &h[..]);
            (hl, u)
        })
    }

    /// Coordinates of a degree-`n` polynomial in this basis, `None` when it
    /// is not proper.
    pub fn coordinates(&self, f: &MultilinearPoly) -> PiResult<Option<Vec<BigInt>>> {
        if f.degree() != self.degree {
            return Err(PiError::DimensionMismatch { expected: self.degree, found: f.degree() });
        }
        if self.degree == 0 {
            return Ok(Some(vec![f.coeff(&Permutation::identity(0))]));
        }
        let (h, u) = self.solver();
        let Some(c) = h.coordinates(&f.to_dense())? else {
            return Ok(None);
        };
        Ok(Some(crate::lattice::vec_mat(&c, u, self.len())?))
    }

    /// Polynomial with the given coordinates.
    pub fn combine(&self, coords: &[BigInt]) -> MultilinearPoly {
        let v = crate::lattice::vec_mat(coords, self.expansions.rows(), factorial(self.degree)).expect("bigint");
        MultilinearPoly::from_dense(self.degree, &v).expect("width n!")
    }
}

/// The proper basis of degree `n` (`n = 0` gives the constant 1).
pub fn proper_basis(n: usize) -> Arc<ProperBasis> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ProperBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("cache lock").get(&n) {
        return b.clone();
    }
    let b = Arc::new(ProperBasis::build(n));
    cache.lock().expect("cache lock").entry(n).or_insert(b).clone()
}

/// Outcome of comparing the basis lattice with the lattice of every
/// bracket product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub degree: usize,
    pub basis_size: usize,
    pub candidate_count: usize,
    pub candidate_rank: usize,
    pub spans_all_candidates: bool,
    pub saturated_in_pn: bool,
}

impl SaturationReport {
    pub fn ok(&self) -> bool {
        self.spans_all_candidates && self.saturated_in_pn && self.candidate_rank == self.basis_size
    }
}

pub fn saturation_check(n: usize) -> PiResult<SaturationReport> {
    let basis = proper_basis(n);
    let candidates = words_for(n, candidate_brackets);
    let width = factorial(n);
    let mut b = HnfBuilder::<i64>::new(width);
    for w in &candidates {
        b.insert(dense_row(n, w))?;
    }
    let cand = b.finish()?;
    let own = SubmoduleLattice::<i64>::from_rows(width, basis.expansion_rows::<i64>())?;
    Ok(SaturationReport {
        degree: n,
        basis_size: basis.len(),
        candidate_count: candidates.len(),
        candidate_rank: cand.rank(),
        spans_all_candidates: own == cand,
        saturated_in_pn: own.is_saturated()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_are_derangement_numbers() {
        let sizes: Vec<usize> = (1..=6).map(|n| proper_basis(n).len()).collect();
        assert_eq!(sizes, vec![0, 1, 2, 9, 44, 265]);
        assert_eq!((1..=6).map(derangements).collect::<Vec<_>>(), sizes);
    }

    #[test]
    fn degree_two_is_single_commutator() {
        // normalised with the larger index first: [x2, x1] = -[x1, x2]
        let b = proper_basis(2);
        assert_eq!(b.elements, vec![CommutatorWord::bracket(&[2, 1]).unwrap()]);
        let c12 = CommutatorWord::bracket(&[1, 2]).unwrap().expand();
        assert_eq!(b.element_poly(0), -&c12);
    }

    #[test]
    fn saturated_up_to_five() {
        for n in 2..=5 {
            let r = saturation_check(n).unwrap();
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn coordinates_roundtrip() {
        let b = proper_basis(4);
        let coords: Vec<BigInt> = (0..b.len()).map(|i| BigInt::from(i as i64 - 4)).collect();
        let f = b.combine(&coords);
        assert_eq!(b.coordinates(&f).unwrap().unwrap(), coords);
        let mono = MultilinearPoly::monomial(Permutation::identity(4));
        assert_eq!(b.coordinates(&mono).unwrap(), None);
    }
}
