//! Exact integer linear algebra: Hermite and Smith normal forms, sublattices
//! of `ℤ^r`, invariant factors and evaluation-map quotients.

pub mod field;
pub mod hnf;
pub mod invariants;
pub mod matrix;
pub mod relations;
pub mod snf;

pub use field::{field_rank, rank_mod_p, EchelonModP};
pub use hnf::{dot, hnf, kernel_basis, left_kernel_basis, vec_mat, HnfBuilder, SubmoduleLattice};
pub use invariants::{factorize, lattice_quotient_invariants, prime_power, AbelianInvariants};
pub use matrix::{image_invariants, snf_report, IntMatrix, SnfReport};
pub use relations::{RelationAccumulator, RelationLattices};
pub use snf::{snf, snf_diagonal};

use num_bigint::BigInt;

use crate::error::PiResult;

/// Number of `ℤ_q` summands (`q` a prime power) or the free rank (`q = 0`).
pub fn codim_from_invariants(inv: &AbelianInvariants, q: &BigInt) -> PiResult<usize> {
    inv.codim(q)
}
