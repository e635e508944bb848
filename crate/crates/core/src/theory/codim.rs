use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{PiError, PiResult};
use crate::lattice::{vec_mat, AbelianInvariants, RelationLattices, SubmoduleLattice};
use crate::multilinear::proper_basis;
use crate::perm::factorial;
use crate::rings::{evaluation_relations, EvalOptions, GeneratorFilter, RingModel};

/// Additive order of `1_R` as a cyclic group (`ℤ` when it is 0).
pub fn unit_invariants(ring: &RingModel) -> PiResult<AbelianInvariants> {
    let ch = ring.characteristic().ok_or(PiError::NotUnital)?;
    Ok(AbelianInvariants::cyclic(ch))
}

/// Relations cutting out `P_n ∩ Id(R)`.
pub fn ordinary_relations(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<RelationLattices<BigInt>> {
    evaluation_relations(ring, n, EvalOptions { filter: GeneratorFilter::All, ..opts })
}

/// Relations cutting out `Γ_n ∩ Id(R)`, in coordinates of the proper basis.
/// Central generators are skipped: every proper polynomial vanishes once an
/// argument is central.
pub fn proper_relations(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<RelationLattices<BigInt>> {
    let rel = evaluation_relations(ring, n, EvalOptions { filter: GeneratorFilter::NonCentral, ..opts })?;
    rel.restrict(&proper_basis(n).expansion_rows::<BigInt>())
}

/// `P_n(ℤ) / (P_n(ℤ) ∩ Id(R, ℤ))`. For `n = 0` this is the subgroup
/// generated by `1_R`.
pub fn ordinary_invariants(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<AbelianInvariants> {
    if n == 0 {
        return unit_invariants(ring);
    }
    ordinary_relations(ring, n, opts)?.invariants()
}

/// `Γ_n(ℤ) / (Γ_n(ℤ) ∩ Id(R, ℤ))`, with `γ_0` read from `1_R` and `Γ_1 = 0`.
pub fn proper_invariants(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<AbelianInvariants> {
    match n {
        0 => unit_invariants(ring),
        1 => Ok(AbelianInvariants::trivial()),
        _ => proper_relations(ring, n, opts)?.invariants(),
    }
}

/// `P_n ∩ Id(R)` as a lattice in the monomial coordinates of `P_n`.
pub fn identity_lattice(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<SubmoduleLattice<BigInt>> {
    if n == 0 {
        return unit_lattice(ring);
    }
    ordinary_relations(ring, n, opts)?.kernel()
}

/// `Γ_n ∩ Id(R)` in the monomial coordinates of `P_n`.
pub fn proper_identity_lattice(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<SubmoduleLattice<BigInt>> {
    match n {
        0 => return unit_lattice(ring),
        1 => return Ok(SubmoduleLattice::zero(1)),
        _ => {}
    }
    let basis = proper_basis(n);
    let k = proper_relations(ring, n, opts)?.kernel()?;
    let rows = basis.expansion_rows::<BigInt>();
    Ok(k.map(factorial(n), |c| vec_mat(c, &rows, factorial(n)))?)
}

/// `ch R · ℤ` inside `P_0 = ℤ`.
fn unit_lattice(ring: &RingModel) -> PiResult<SubmoduleLattice<BigInt>> {
    let ch = ring.characteristic().ok_or(PiError::NotUnital)?;
    Ok(SubmoduleLattice::from_rows(1, [vec![ch]])?)
}

/// One `q` with its ordinary and proper counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCount {
    #[serde(with = "crate::json::serde_int")]
    pub q: BigInt,
    pub ordinary: usize,
    pub proper: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodimReport {
    pub ring: String,
    pub n: usize,
    pub ordinary: AbelianInvariants,
    pub proper: AbelianInvariants,
    pub per_q: Vec<QCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

/// Counts for every `q` occurring in either group, ascending (`0` first).
pub fn per_q(ordinary: &AbelianInvariants, proper: &AbelianInvariants) -> PiResult<Vec<QCount>> {
    let qs: BTreeSet<BigInt> = ordinary.occurring_q().into_iter().chain(proper.occurring_q()).collect();
    qs.into_iter()
        .map(|q| Ok(QCount { ordinary: ordinary.codim(&q)?, proper: proper.codim(&q)?, q }))
        .collect()
}

/// `c_n(R, q)` and `γ_n(R, q)` for every `q`.
pub fn ordinary_codim(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<CodimReport> {
    let start = Instant::now();
    let ordinary = ordinary_invariants(ring, n, opts)?;
    let proper = if ring.is_unital() || n >= 1 {
        proper_invariants_lenient(ring, n, opts)?
    } else {
        AbelianInvariants::trivial()
    };
    Ok(CodimReport {
        ring: ring.label().to_string(),
        n,
        per_q: per_q(&ordinary, &proper)?,
        ordinary,
        proper,
        timing_ms: Some(start.elapsed().as_secs_f64() * 1e3),
    })
}

fn proper_invariants_lenient(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<AbelianInvariants> {
    match proper_invariants(ring, n, opts) {
        Err(PiError::NotUnital) => Ok(AbelianInvariants::trivial()),
        other => other,
    }
}

/// Proper codimension group only.
pub fn proper_codim(ring: &RingModel, n: usize, opts: EvalOptions) -> PiResult<AbelianInvariants> {
    proper_invariants(ring, n, opts)
}
