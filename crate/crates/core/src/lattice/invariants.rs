use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::hnf::SubmoduleLattice;
use super::snf::{relative_coordinates, snf_diagonal};
use crate::error::{PiError, PiResult};
use crate::scalar::Scalar;

/// Invariant-factor description `ℤ^free ⊕ ℤ_{d₁} ⊕ … ⊕ ℤ_{d_s}` with
/// `d₁ | d₂ | … | d_s` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianInvariants {
    #[serde(with = "crate::json::serde_ints")]
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

/// Prime factorisation by trial division.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// `Some((p, k))` when `q = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_power(q: &BigInt) -> Option<(BigInt, u32)> {
    let f = factorize(q);
    if f.len() == 1 {
        Some(f.into_iter().next().unwrap())
    } else {
        None
    }
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { torsion: Vec::new(), free_rank: rank }
    }

    /// Group `⊕ ℤ_{m}` over the given cyclic orders (`0` meaning `ℤ`,
    /// `1` the trivial group), normalised to invariant factors.
    pub fn from_cyclic<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        let mut free_rank = 0;
        let mut by_prime: BTreeMap<BigInt, Vec<BigInt>> = BTreeMap::new();
        for m in orders {
            let m = m.abs();
            if m.is_zero() {
                free_rank += 1;
                continue;
            }
            for (p, e) in factorize(&m) {
                by_prime.entry(p.clone()).or_default().push(num_traits::pow(p, e as usize));
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![BigInt::one(); len];
        for powers in by_prime.values_mut() {
            powers.sort();
            // largest powers go to the last invariant factors
            let offset = len - powers.len();
            for (i, q) in powers.iter().enumerate() {
                torsion[offset + i] *= q;
            }
        }
        Self { torsion, free_rank }
    }

    pub fn cyclic(m: BigInt) -> Self {
        Self::from_cyclic([m])
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Elementary divisors (prime powers), sorted.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self
            .torsion
            .iter()
            .flat_map(|d| factorize(d).into_iter().map(|(p, e)| num_traits::pow(p, e as usize)))
            .collect();
        out.sort();
        out
    }

    /// Number of `ℤ_q` summands (`q = p^k`), or the free rank for `q = 0`.
    pub fn codim(&self, q: &BigInt) -> Result<usize, PiError> {
        if q.is_zero() {
            return Ok(self.free_rank);
        }
        let (p, k) = prime_power(q).ok_or_else(|| PiError::NotPrimePower(q.to_string()))?;
        Ok(self
            .torsion
            .iter()
            .filter(|d| {
                let mut d = (*d).clone();
                let mut e = 0;
                while d.is_multiple_of(&p) {
                    d /= &p;
                    e += 1;
                }
                e == k
            })
            .count())
    }

    /// All `q` (0 and prime powers) with a nonzero count.
    pub fn occurring_q(&self) -> Vec<BigInt> {
        let mut qs: Vec<BigInt> = self.elementary_divisors();
        qs.dedup();
        if self.free_rank > 0 {
            qs.insert(0, BigInt::zero());
        }
        qs
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Direct sum of `k` copies.
    pub fn power(&self, k: usize) -> Self {
        let mut orders = Vec::new();
        for _ in 0..k {
            orders.extend(self.torsion.iter().cloned());
            orders.extend(std::iter::repeat_n(BigInt::zero(), self.free_rank));
        }
        Self::from_cyclic(orders)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let orders = self
            .torsion
            .iter()
            .chain(&other.torsion)
            .cloned()
            .chain(std::iter::repeat_n(BigInt::zero(), self.free_rank + other.free_rank));
        Self::from_cyclic(orders)
    }

    /// Number of cyclic summands in the invariant-factor decomposition.
    pub fn cyclic_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(|d| d.to_u64()).collect()
    }

    /// Cokernel invariants from a Smith diagonal of a matrix with `ncols` columns.
    pub fn from_smith_diagonal<T: Scalar>(diag: &[T], ncols: usize) -> Self {
        let nonzero: Vec<&T> = diag.iter().filter(|d| !d.is_zero()).collect();
        let free_rank = ncols - nonzero.len();
        let torsion = nonzero.into_iter().map(|d| d.to_bigint().abs()).filter(|d| !d.is_one()).collect();
        Self { torsion, free_rank }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", self.free_rank) });
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && &self.torsion[j] == d {
                j += 1;
            }
            parts.push(if j - i == 1 { format!("Z_{d}") } else { format!("Z_{d}^{}", j - i) });
            i = j;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Invariants of `outer / inner`.
pub fn lattice_quotient_invariants<T: Scalar>(
    outer: &SubmoduleLattice<T>,
    inner: &SubmoduleLattice<T>,
) -> PiResult<AbelianInvariants> {
    let coords = relative_coordinates(outer, inner)?.ok_or(PiError::NotContained)?;
    let d = snf_diagonal(&coords, outer.rank())?;
    Ok(AbelianInvariants::from_smith_diagonal(&d, outer.rank()))
}
