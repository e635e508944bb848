//! Quotients `ℤ^N / K` where `K` is cut out by linear congruences.
//!
//! A relation is a row `r` with modulus `m`: `v ∈ K` iff `r·v ≡ 0 (mod m)`
//! (`m = 0` meaning equality). Free relations are folded into one Hermite
//! form `F`; a relation with modulus `m > 0` is rescaled by `L/m`, where `L`
//! is the lcm of all moduli, and folded into a lattice `T ⊇ Lℤ^N` kept
//! modulo `L`. Then `ℤ^N/K ≅ ℤ^{rank F} ⊕ ker(F)/K`, and the finite part
//! is read off the Smith form of `T` restricted to `ker F`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::hnf::{kernel_basis, HnfBuilder, SubmoduleLattice};
use super::invariants::AbelianInvariants;
use super::snf::snf_diagonal;
use crate::error::{PiError, PiResult};
use crate::scalar::{lift, Checked, Scalar};

/// Streaming accumulator for relation rows.
#[derive(Debug, Clone)]
pub struct RelationAccumulator<T> {
    ncols: usize,
    free: HnfBuilder<T>,
    torsion: Option<HnfBuilder<T>>,
    lcm: Option<T>,
}

impl<T: Scalar> RelationAccumulator<T> {
    /// `moduli` lists every modulus that will be used (to fix the common lcm).
    pub fn new(ncols: usize, moduli: &[BigInt]) -> PiResult<Self> {
        let mut l = BigInt::one();
        let mut any = false;
        for m in moduli {
            if !m.is_zero() {
                l = l.lcm(&m.abs());
                any = true;
            }
        }
        let lcm = if any { Some(lift::<T>(&l)?) } else { None };
        let torsion = lcm.clone().map(|l| HnfBuilder::with_modulus(ncols, l));
        Ok(Self { ncols, free: HnfBuilder::new(ncols), torsion, lcm })
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Fold in `row` with modulus `m`; returns whether either lattice grew.
    pub fn add_row(&mut self, row: &[T], m: &BigInt) -> PiResult<bool> {
        if row.len() != self.ncols {
            return Err(PiError::DimensionMismatch { expected: self.ncols, found: row.len() });
        }
        if m.is_zero() {
            return Ok(self.free.insert(row.to_vec())?);
        }
        let l = self.lcm.as_ref().ok_or_else(|| PiError::Precondition(format!("modulus {m} not declared")))?;
        let m = lift::<T>(&m.abs())?;
        if !l.is_multiple_of(&m) {
            return Err(PiError::Precondition(format!("modulus {m} not declared")));
        }
        let k = l.div_floor(&m);
        let scaled = row.iter().map(|x| x.mul_c(&k)).collect::<Checked<Vec<T>>>()?;
        Ok(self.torsion.as_mut().expect("torsion builder").insert(scaled)?)
    }

    /// Close both lattices under the coordinate permutations `perms`
    /// (`perm[j]` is the image of column `j`).
    pub fn close_under(&mut self, perms: &[Vec<usize>]) -> PiResult<()> {
        close_builder(&mut self.free, perms)?;
        if let Some(t) = self.torsion.as_mut() {
            close_builder(t, perms)?;
        }
        Ok(())
    }

    /// Fold in everything accumulated by `other` (same columns and moduli).
    pub fn merge(&mut self, other: Self) -> PiResult<()> {
        if other.ncols != self.ncols || other.lcm != self.lcm {
            return Err(PiError::Precondition("merging incompatible relation accumulators".into()));
        }
        for row in other.free.finish()?.basis() {
            self.free.insert(row.clone())?;
        }
        if let (Some(t), Some(o)) = (self.torsion.as_mut(), other.torsion) {
            for row in o.finish()?.basis() {
                t.insert(row.clone())?;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> PiResult<RelationLattices<T>> {
        Ok(RelationLattices {
            ncols: self.ncols,
            free: self.free.finish()?,
            torsion: match self.torsion {
                Some(t) => Some(t.finish()?),
                None => None,
            },
            lcm: self.lcm,
        })
    }
}

/// Apply a coordinate permutation to a vector.
pub fn permute_coords<T: Scalar>(v: &[T], perm: &[usize]) -> Vec<T> {
    let mut out = vec![T::zero(); v.len()];
    for (j, x) in v.iter().enumerate() {
        out[perm[j]] = x.clone();
    }
    out
}

fn close_builder<T: Scalar>(b: &mut HnfBuilder<T>, perms: &[Vec<usize>]) -> PiResult<()> {
    loop {
        let snap = b.snapshot()?;
        let mut grew = false;
        for row in snap.basis() {
            for p in perms {
                grew |= b.insert(permute_coords(row, p))?;
            }
        }
        if !grew {
            return Ok(());
        }
    }
}

/// Finished relation lattices: free relations `F` and rescaled torsion
/// relations `T ⊇ Lℤ^N` (absent when no modulus is positive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationLattices<T> {
    ncols: usize,
    free: SubmoduleLattice<T>,
    torsion: Option<SubmoduleLattice<T>>,
    lcm: Option<T>,
}

impl<T: Scalar> RelationLattices<T> {
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn free(&self) -> &SubmoduleLattice<T> {
        &self.free
    }

    pub fn torsion(&self) -> Option<&SubmoduleLattice<T>> {
        self.torsion.as_ref()
    }

    /// Pull the relations back along the map `ℤ^k → ℤ^N` sending `e_j` to
    /// `basis[j]`.
    pub fn restrict(&self, basis: &[Vec<T>]) -> PiResult<Self> {
        let k = basis.len();
        let apply = |r: &[T]| -> Checked<Vec<T>> { basis.iter().map(|b| super::hnf::dot(r, b)).collect() };
        let mut free = HnfBuilder::new(k);
        for r in self.free.basis() {
            free.insert(apply(r)?)?;
        }
        let torsion = match (&self.torsion, &self.lcm) {
            (Some(t), Some(l)) => {
                let mut b = HnfBuilder::with_modulus(k, l.clone());
                for r in t.basis() {
                    b.insert(apply(r)?)?;
                }
                Some(b.finish()?)
            }
            _ => None,
        };
        Ok(Self { ncols: k, free: free.finish()?, torsion, lcm: self.lcm.clone() })
    }

    /// `(U, T')`: a basis `U` of `ker F` and the Hermite form of the torsion
    /// relations expressed on `U`, seeded with `Lℤ^d`.
    fn reduced_torsion(&self) -> PiResult<(Vec<Vec<T>>, Option<SubmoduleLattice<T>>)> {
        let u = if self.free.is_zero() {
            SubmoduleLattice::<T>::full(self.ncols).basis().to_vec()
        } else {
            kernel_basis(self.free.basis(), self.ncols)?
        };
        let d = u.len();
        let t = match (&self.torsion, &self.lcm) {
            (Some(t), Some(l)) => {
                let mut b = HnfBuilder::with_modulus(d, l.clone());
                for r in t.basis() {
                    let row = u.iter().map(|x| super::hnf::dot(r, x)).collect::<Checked<Vec<T>>>()?;
                    b.insert(row)?;
                }
                Some(b.finish()?)
            }
            _ => None,
        };
        Ok((u, t))
    }

    /// Invariants of `ℤ^N / K`.
    pub fn invariants(&self) -> PiResult<AbelianInvariants> {
        let rho = self.free.rank();
        let (u, t) = self.reduced_torsion()?;
        let Some(t) = t else {
            return Ok(AbelianInvariants::free(rho));
        };
        let l = self.lcm.clone().expect("lcm with torsion").to_bigint();
        let diag = snf_diagonal(t.basis(), u.len())?;
        let orders = diag.iter().map(|s| &l / s.to_bigint());
        let mut inv = AbelianInvariants::from_cyclic(orders);
        inv.free_rank = rho;
        Ok(inv)
    }

    /// The kernel lattice `K ⊆ ℤ^N`.
    pub fn kernel(&self) -> PiResult<SubmoduleLattice<T>> {
        let (u, t) = self.reduced_torsion()?;
        let Some(t) = t else {
            return Ok(SubmoduleLattice::from_rows(self.ncols, u)?);
        };
        let l = self.lcm.clone().expect("lcm with torsion");
        let d = u.len();
        let tb = t.basis();
        // Columns of L·T'^{-1}: solve T' x = L e_j by back substitution.
        let mut out = Vec::with_capacity(d);
        for j in 0..d {
            let mut x = vec![T::zero(); d];
            for i in (0..d).rev() {
                let mut s = if i == j { l.clone() } else { T::zero() };
                for k in i + 1..d {
                    if !tb[i][k].is_zero() && !x[k].is_zero() {
                        s = s.sub_c(&tb[i][k].mul_c(&x[k])?)?;
                    }
                }
                let p = &tb[i][i];
                debug_assert!(s.is_multiple_of(p));
                x[i] = s.div_floor(p);
            }
            let mut v = vec![T::zero(); self.ncols];
            for (xi, ui) in x.iter().zip(&u) {
                if xi.is_zero() {
                    continue;
                }
                for (vk, uk) in v.iter_mut().zip(ui) {
                    if !uk.is_zero() {
                        *vk = vk.fma_c(xi, uk)?;
                    }
                }
            }
            out.push(v);
        }
        Ok(SubmoduleLattice::from_rows(self.ncols, out)?)
    }

    pub fn to_big(&self) -> RelationLattices<BigInt> {
        RelationLattices {
            ncols: self.ncols,
            free: self.free.to_big(),
            torsion: self.torsion.as_ref().map(|t| t.to_big()),
            lcm: self.lcm.as_ref().map(|l| l.to_bigint()),
        }
    }
}
