//! Codimension sequences of ring models, the filtration of `P_n` by
//! proper parts, known identity bases and the verification suites.

pub mod codim;
pub mod drensky;
pub mod identities;
pub mod modules;
pub mod verify;

pub use codim::{
    identity_lattice, ordinary_codim, ordinary_invariants, per_q, proper_codim, proper_identity_lattice, proper_invariants,
    CodimReport, QCount,
};
pub use drensky::{drensky_filtration, DrenskyFactor, DrenskyReport};
pub use identities::{consequence_lattice, grassmann_identities, ut2_identities};
pub use modules::{induced_key, proper_quotient_key, specht_quotient_key, ModuleKey};
pub use verify::{
    all_pass, run_claim, verify_drensky, verify_field_props, verify_grassmann, verify_proper_ordinary, verify_psi_lemma,
    verify_specht_torsionfree, verify_ut2, verify_young, SuiteConfig, VerificationOutcome, CLAIMS,
};
