pub mod error;
pub mod json;
pub mod lattice;
pub mod multilinear;
pub mod perm;
pub mod rings;
pub mod scalar;
pub mod specht;
pub mod theory;

pub use error::{PiError, PiResult};
pub use lattice::AbelianInvariants;
pub use multilinear::MultilinearPoly;
pub use perm::Permutation;
pub use rings::RingModel;

/// Integers used throughout reports.
pub type Int = num_bigint::BigInt;
/// Sublattice of `ℤ^r` at arbitrary precision.
pub type Lattice = lattice::SubmoduleLattice<Int>;
/// Sublattice with machine-word entries; operations report overflow.
pub type SmallLattice = lattice::SubmoduleLattice<i64>;
