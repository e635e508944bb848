//! Ring models with exact arithmetic and multilinear evaluation.

mod eval;
mod model;
mod models;

pub use eval::{
    binomial, evaluate, evaluate_in, evaluation_relations, evaluation_rows, is_identity, multiset_count,
    selected_generators, EvalOptions, GeneratorFilter, DEFAULT_BUDGET,
};
pub use model::{reduce, RingElement, RingModel};
pub use models::{cyclic_ring, direct_sum, exponent, grassmann, grassmann_sign, parse_ring_spec, ut2};
