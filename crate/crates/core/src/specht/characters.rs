//! Characters of lattice quotients inside permutation modules.
//!
//! A permutation `g` acts on the ambient coordinates through a table
//! (`e_j ↦ e_{table[j]}`). Traces are taken on `outer ⊗ ℚ` minus
//! `inner ⊗ ℚ`, or over `𝔽_p` on `outer / (inner + p·outer)`; the latter
//! detects the finite factors, on which every rational trace vanishes.

use num_bigint::BigInt;
use num_traits::Zero;

use super::module::specht_lattice;
use super::partition::{Partition, PartitionPair};
use super::tabloid::tabloid_module_basis;
use crate::error::{PiError, PiResult};
use crate::lattice::field::residue;
use crate::lattice::relations::permute_coords;
use crate::lattice::{EchelonModP, SubmoduleLattice};
use crate::perm::{class_representatives, Permutation};

/// Matrix of `g` on `lattice` in its own basis (row `i` = coordinates of `g·b_i`).
fn action_matrix(lattice: &SubmoduleLattice<BigInt>, table: &[usize]) -> PiResult<Vec<Vec<BigInt>>> {
    lattice
        .basis()
        .iter()
        .map(|b| {
            lattice
                .coordinates(&permute_coords(b, table))?
                .ok_or_else(|| PiError::Precondition("action does not preserve the lattice".into()))
        })
        .collect()
}

pub fn lattice_trace(lattice: &SubmoduleLattice<BigInt>, table: &[usize]) -> PiResult<BigInt> {
    let m = action_matrix(lattice, table)?;
    Ok(m.iter().enumerate().map(|(i, r)| r[i].clone()).sum())
}

/// Rational character of `outer / inner` at each table.
pub fn rational_character(
    outer: &SubmoduleLattice<BigInt>,
    inner: &SubmoduleLattice<BigInt>,
    tables: &[Vec<usize>],
) -> PiResult<Vec<BigInt>> {
    tables.iter().map(|t| Ok(lattice_trace(outer, t)? - lattice_trace(inner, t)?)).collect()
}

/// Character over `𝔽_p` of `outer / (inner + p·outer)` at each table.
pub fn modp_character(
    outer: &SubmoduleLattice<BigInt>,
    inner: &SubmoduleLattice<BigInt>,
    p: u64,
    tables: &[Vec<usize>],
) -> PiResult<Vec<u64>> {
    let k = outer.rank();
    let mut w = EchelonModP::new(k, p);
    for r in inner.basis() {
        let c = outer.coordinates(r)?.ok_or(PiError::NotContained)?;
        w.insert(c.iter().map(|x| residue(x, p)).collect());
    }
    let mut out = Vec::with_capacity(tables.len());
    for t in tables {
        let g: Vec<Vec<u64>> = action_matrix(outer, t)?.iter().map(|r| r.iter().map(|x| residue(x, p)).collect()).collect();
        let full: u64 = (0..k).map(|i| g[i][i]).fold(0, |a, b| (a + b) % p);
        let mut sub = 0u64;
        for (j, row) in w.rows().iter().enumerate() {
            let mut image = vec![0u64; k];
            for (i, &x) in row.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (y, &gij) in image.iter_mut().zip(&g[i]) {
                    *y = ((*y as u128 + x as u128 * gij as u128) % p as u128) as u64;
                }
            }
            let c = w.coordinates(&image).ok_or_else(|| PiError::Precondition("action does not preserve the sublattice".into()))?;
            sub = (sub + c[j]) % p;
        }
        out.push((full + p - sub) % p);
    }
    Ok(out)
}

/// Character of the Specht lattice `S(λ)` on the class representatives of `S_n`.
pub fn specht_character(lambda: &Partition) -> PiResult<Vec<BigInt>> {
    let pair = PartitionPair::specht(lambda);
    let lattice = specht_lattice(&pair)?;
    let basis = tabloid_module_basis(&pair.mu)?;
    let tables: Vec<Vec<usize>> = class_representatives(lambda.size()).iter().map(|g| basis.action_table(g)).collect();
    let zero = SubmoduleLattice::zero(lattice.ambient_rank());
    rational_character(&lattice, &zero, &tables)
}

/// Value at `g ∈ S_n` of a character induced from `S_t × S_{n−t}` (trivial
/// on the second factor): the sum over `t`-subsets `A` with `gA = A` of
/// `chi` at the cycle type of `g` restricted to `A`.
pub fn induced_character_at<X, F>(g: &Permutation, t: usize, chi: F) -> X
where
    X: Zero + std::ops::Add<Output = X>,
    F: Fn(&[usize]) -> X,
{
    let cycles = g.cycle_type();
    // a g-stable subset is a union of cycles
    let mut acc = X::zero();
    let k = cycles.len();
    for mask in 0u64..(1 << k) {
        let size: usize = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| cycles[i]).sum();
        if size != t {
            continue;
        }
        let mut ct: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| cycles[i]).collect();
        ct.sort_unstable_by(|a, b| b.cmp(a));
        acc = acc + chi(&ct);
    }
    acc
}
