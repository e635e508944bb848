//! Multilinear polynomials `P_n(ℤ)`, commutators and proper polynomials.

pub mod commutator;
pub mod decompose;
pub mod poly;
pub mod proper;

pub use commutator::{bracket_words, product_words, CommutatorWord};
pub use decompose::{decompose, recompose, Component};
pub use poly::MultilinearPoly;
pub use proper::{derangements, proper_basis, saturation_check, ProperBasis, SaturationReport};
