//! The filtration `P_n = M_0 ⊋ M_2 ⊇ M_3 ⊇ … ⊇ M_n ⊇ M_{n+1} = 0` of the
//! relatively free quotient, with `M_t` spanned by the products
//! `x_{i_1} ⋯ x_{i_{n−s}} · g(remaining variables)`, `g ∈ Γ_s`, `s ≥ t`.
//! There is no `M_1` since `Γ_1 = 0`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{PiError, PiResult};
use crate::lattice::{HnfBuilder, SubmoduleLattice};
use crate::multilinear::proper_basis;
use crate::perm::{factorial, rank_word};
use crate::rings::{EvalOptions, RingModel};

use super::codim::identity_lattice;
use super::modules::{induced_key, monomial_tables, proper_quotient_key, quotient_key, torsion_primes, ModuleKey};

/// Increasing subsets of `{1..n}` of size `k`, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rows (monomial coordinates of `P_n`) of `x_A · g(x_{C})` for every
/// `(n−t)`-subset `A` taken in increasing order, `C` its complement, and
/// `g` running over the proper basis of degree `t`.
pub fn level_rows(n: usize, t: usize) -> Vec<Vec<BigInt>> {
    let basis = proper_basis(t);
    let words: Vec<Vec<usize>> = crate::perm::Permutation::all(t).into_iter().map(|p| p.word().to_vec()).collect();
    let mut out = Vec::new();
    for prefix in subsets(n, n - t) {
        let rest: Vec<usize> = (1..=n).filter(|i| !prefix.contains(i)).collect();
        for row in basis.expansions.rows() {
            let mut v = vec![BigInt::from(0); factorial(n)];
            for (u, c) in words.iter().zip(row) {
                if c.sign() == num_bigint::Sign::NoSign {
                    continue;
                }
                let mut w = prefix.clone();
                w.extend(u.iter().map(|&j| rest[j - 1]));
                v[rank_word(&w)] += c;
            }
            out.push(v);
        }
    }
    out
}

/// Levels present in the filtration of `P_n`.
pub fn levels(n: usize) -> Vec<usize> {
    std::iter::once(0).chain(2..=n).collect()
}

/// `M_t` inside `P_n(ℤ)`, before passing to the quotient.
pub fn free_level(n: usize, t: usize) -> PiResult<SubmoduleLattice<BigInt>> {
    let mut b = HnfBuilder::new(factorial(n));
    for s in levels(n).into_iter().filter(|&s| s >= t) {
        for r in level_rows(n, s) {
            b.insert(r)?;
        }
    }
    Ok(b.finish()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrenskyFactor {
    /// `t` of the factor `M_t / M_{t'}` (`t'` the next level).
    pub t: usize,
    pub computed: ModuleKey,
    pub expected: ModuleKey,
}

impl DrenskyFactor {
    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DrenskyReport {
    pub ring: String,
    pub n: usize,
    pub primes: Vec<u64>,
    /// `M_t + K` for `t` in [`levels`], then `K = P_n ∩ Id(R)`.
    #[serde(skip)]
    pub chain: Vec<SubmoduleLattice<BigInt>>,
    pub factors: Vec<DrenskyFactor>,
}

/// Builds the chain modulo the identities of `R` and compares each factor
/// with the induced proper quotient (`t = 0`: the subgroup generated by `1_R`).
pub fn drensky_filtration(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<DrenskyReport> {
    if !ring.is_unital() {
        return Err(PiError::NotUnital);
    }
    if n == 0 {
        return Err(PiError::Precondition("the filtration needs n ≥ 1".into()));
    }
    let k = identity_lattice(ring, n, opts)?;
    let full = SubmoduleLattice::full(factorial(n));
    let total = crate::lattice::lattice_quotient_invariants(&full, &k)?;
    let primes = torsion_primes(&total);
    let lv = levels(n);
    let mut chain = Vec::with_capacity(lv.len() + 1);
    for &t in &lv {
        chain.push(free_level(n, t)?.sum(&k)?);
    }
    chain.push(k);
    let tables = monomial_tables(n);
    let mut factors = Vec::with_capacity(lv.len());
    for (i, &t) in lv.iter().enumerate() {
        let computed = quotient_key(n, &chain[i], &chain[i + 1], &tables, &primes)?;
        let expected = induced_key(&proper_quotient_key(ring, t, &primes, opts)?, n)?;
        factors.push(DrenskyFactor { t, computed, expected });
    }
    Ok(DrenskyReport { ring: ring.label().to_string(), n, primes, chain, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::AbelianInvariants;
    use crate::rings::{cyclic_ring, ut2};

    #[test]
    fn levels_give_a_basis_of_p_n() {
        for n in 1..=5 {
            let rows: Vec<Vec<BigInt>> = levels(n).into_iter().flat_map(|t| level_rows(n, t)).collect();
            assert_eq!(rows.len(), factorial(n));
            let lat = SubmoduleLattice::from_rows(factorial(n), rows).unwrap();
            assert_eq!(lat, SubmoduleLattice::full(factorial(n)));
        }
    }

    #[test]
    fn levels_are_invariant() {
        let n = 4;
        for t in levels(n) {
            let m = free_level(n, t).unwrap();
            for table in monomial_tables(n) {
                for b in m.basis() {
                    let moved = crate::lattice::relations::permute_coords(b, &table);
                    assert!(m.contains(&moved).unwrap());
                }
            }
        }
    }

    #[test]
    fn ut2_mod_2_at_degree_3() {
        let r = drensky_filtration(&ut2(2, 2).unwrap(), 3, EvalOptions::default()).unwrap();
        let inv: Vec<AbelianInvariants> = r.factors.iter().map(|f| f.computed.invariants.clone()).collect();
        let two = |k: usize| AbelianInvariants::cyclic(BigInt::from(2)).power(k);
        assert_eq!(inv, vec![two(1), two(3), two(2)]);
        assert!(r.factors.iter().all(DrenskyFactor::matches));
    }

    #[test]
    fn commutative_rings_stop_at_m0() {
        let r = drensky_filtration(&cyclic_ring(6), 3, EvalOptions::default()).unwrap();
        assert_eq!(r.factors[0].computed.invariants, AbelianInvariants::cyclic(BigInt::from(6)));
        assert!(r.factors[1..].iter().all(|f| f.computed.invariants.is_trivial()));
        assert!(r.factors.iter().all(DrenskyFactor::matches));
    }
}
