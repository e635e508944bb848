//! Comparison keys for `ℤS_n`-modules given as lattice quotients: abelian
//! invariants, the rational character and the characters over `𝔽_p` of
//! `Q/pQ`, all evaluated on the class representatives of `S_n`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{PiError, PiResult};
use crate::lattice::{factorize, lattice_quotient_invariants, AbelianInvariants, SubmoduleLattice};
use crate::perm::{class_representatives, left_action_table, partitions_of, Permutation};
use crate::rings::{binomial, EvalOptions, RingModel};
use crate::specht::{induced_character_at, modp_character, rational_character, specht_lattice, tabloid_module_basis, Partition, PartitionPair};

use super::codim::proper_identity_lattice;
use crate::multilinear::proper_basis;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleKey {
    /// Degree of the acting symmetric group.
    pub degree: usize,
    pub invariants: AbelianInvariants,
    /// Rational character, one value per cycle type in [`partitions_of`] order.
    #[serde(with = "crate::json::serde_ints")]
    pub rational: Vec<BigInt>,
    /// Character of `Q/pQ` over `𝔽_p` for each listed prime.
    pub modular: BTreeMap<u64, Vec<u64>>,
}

/// Prime divisors of the torsion orders.
pub fn torsion_primes(inv: &AbelianInvariants) -> Vec<u64> {
    let set: BTreeSet<u64> = inv
        .torsion
        .iter()
        .flat_map(factorize)
        .map(|(p, _)| p.to_u64().expect("prime divisor of a desk-scale exponent"))
        .collect();
    set.into_iter().collect()
}

/// Action tables of the class representatives of `S_n` on `P_n`.
pub fn monomial_tables(n: usize) -> Vec<Vec<usize>> {
    class_representatives(n).iter().map(left_action_table).collect()
}

/// Key of `outer / inner` under the given class tables.
pub fn quotient_key(
    degree: usize,
    outer: &SubmoduleLattice<BigInt>,
    inner: &SubmoduleLattice<BigInt>,
    tables: &[Vec<usize>],
    primes: &[u64],
) -> PiResult<ModuleKey> {
    let invariants = lattice_quotient_invariants(outer, inner)?;
    let rational = rational_character(outer, inner, tables)?;
    let mut modular = BTreeMap::new();
    for &p in primes {
        modular.insert(p, modp_character(outer, inner, p, tables)?);
    }
    Ok(ModuleKey { degree, invariants, rational, modular })
}

/// Key of `Γ_t / (Γ_t ∩ Id(R))` as an `S_t`-module; `t = 0` gives the
/// subgroup generated by `1_R`.
pub fn proper_quotient_key(ring: &RingModel, t: usize, primes: &[u64], opts: EvalOptions) -> PiResult<ModuleKey> {
    let outer = if t == 0 { SubmoduleLattice::full(1) } else { proper_basis(t).lattice() };
    let inner = proper_identity_lattice(ring, t, opts)?;
    quotient_key(t, &outer, &inner, &monomial_tables(t), primes)
}

/// Key of `S(λ) / m S(λ)`.
pub fn specht_quotient_key(lambda: &Partition, m: u64, primes: &[u64]) -> PiResult<ModuleKey> {
    let pair = PartitionPair::specht(lambda);
    let s = specht_lattice(&pair)?;
    let inner = if m == 0 { SubmoduleLattice::zero(s.ambient_rank()) } else { s.scaled(&BigInt::from(m))? };
    let basis = tabloid_module_basis(&pair.mu)?;
    let tables: Vec<Vec<usize>> = class_representatives(lambda.size()).iter().map(|g| basis.action_table(g)).collect();
    quotient_key(lambda.size(), &s, &inner, &tables, primes)
}

/// Key of the zero module of `S_n`.
pub fn zero_key(n: usize, primes: &[u64]) -> ModuleKey {
    let classes = partitions_of(n).len();
    ModuleKey {
        degree: n,
        invariants: AbelianInvariants::trivial(),
        rational: vec![BigInt::zero(); classes],
        modular: primes.iter().map(|&p| (p, vec![0; classes])).collect(),
    }
}

/// Key of `key ↑ S_n`, induced from `S_t × S_{n−t}` with the second factor
/// acting trivially. As an abelian group this is `C(n, t)` copies.
pub fn induced_key(key: &ModuleKey, n: usize) -> PiResult<ModuleKey> {
    let t = key.degree;
    if t > n {
        return Err(PiError::Precondition(format!("cannot induce from S_{t} to S_{n}")));
    }
    let index: BTreeMap<Vec<usize>, usize> = partitions_of(t).into_iter().enumerate().map(|(i, p)| (p, i)).collect();
    let reps: Vec<Permutation> = class_representatives(n);
    let rational = reps
        .iter()
        .map(|g| induced_character_at(g, t, |ct: &[usize]| key.rational[index[ct]].clone()))
        .collect();
    let modular = key
        .modular
        .iter()
        .map(|(&p, chi)| {
            let values = reps.iter().map(|g| induced_character_at(g, t, |ct: &[usize]| chi[index[ct]]) % p).collect();
            (p, values)
        })
        .collect();
    let copies = binomial(n as u64, t as u64) as usize;
    Ok(ModuleKey { degree: n, invariants: key.invariants.power(copies), rational, modular })
}
