//! Integral symmetric-group modules: tabloids, polytabloids, the lattices
//! `S(λ; μ)`, the maps `ψ_{i,v}`, Specht series and Young's rule.

mod characters;
mod module;
mod partition;
mod tabloid;

pub use module::{
    induce_mod, induction_pair, initial_tabloid, op_a, op_r, polytabloid, polytabloid_span, psi, psi_lemma, psi_lemma_at,
    psi_matrix, psi_target, specht_lattice, specht_series, young_expected, FiltrationFactor, FiltrationReport,
    PsiLemmaReport, Tableau,
};
pub use partition::{compositions, GenPartition, Partition, PartitionPair};
pub use tabloid::{tabloid_module_basis, Tabloid, TabloidBasis, TabloidVector, MAX_DEGREE};
pub use characters::{induced_character_at, lattice_trace, modp_character, rational_character, specht_character};
