//! Verification suites. Every comparison is an exact equality of integer
//! data; module comparisons use [`ModuleKey`] and are reported as
//! "consistent" rather than as isomorphisms.

use std::collections::BTreeMap;
use std::fmt::{self, Display};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{PiError, PiResult};
use crate::lattice::{field_rank, prime_power, snf_diagonal, AbelianInvariants, IntMatrix};
use crate::multilinear::MultilinearPoly;
use crate::rings::{binomial, evaluation_rows, grassmann, is_identity, multiset_count, ut2, EvalOptions, RingModel};
use crate::specht::{induce_mod, psi_lemma, specht_lattice, young_expected, Partition, PartitionPair};

use super::codim::{identity_lattice, ordinary_invariants, proper_invariants};
use super::drensky::drensky_filtration;
use super::identities::{consequence_lattice, grassmann_identities, ut2_identities};
use super::modules::{proper_quotient_key, specht_quotient_key, torsion_primes, zero_key, ModuleKey};

pub const CLAIMS: [&str; 8] =
    ["ut2.codim", "grassmann.codim", "proper-ordinary", "young", "drensky", "specht.torsionfree", "specht.psi", "field-props"];

/// Largest number of generator tuples for which identities are evaluated
/// directly; above it membership in the kernel lattice is used.
const DIRECT_EVALUATION_LIMIT: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub claim: String,
    pub check: String,
    pub case: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    /// Set when agreement only shows the comparison keys coincide.
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl VerificationOutcome {
    fn compare<T: PartialEq + Display>(claim: &str, check: &str, case: String, expected: &T, computed: &T) -> Self {
        let pass = expected == computed;
        Self {
            claim: claim.into(),
            check: check.into(),
            witness: (!pass).then(|| case.clone()),
            case,
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            consistent: false,
        }
    }

    fn consistent(mut self) -> Self {
        self.consistent = true;
        self
    }

    fn with_witness(mut self, w: Option<String>) -> Self {
        if !self.pass {
            self.witness = w.or(self.witness);
        }
        self
    }
}

impl Display for ModuleKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chi: Vec<String> = self.rational.iter().map(ToString::to_string).collect();
        write!(f, "{}; chi=[{}]", self.invariants, chi.join(","))?;
        for (p, v) in &self.modular {
            let v: Vec<String> = v.iter().map(ToString::to_string).collect();
            write!(f, "; chi_{p}=[{}]", v.join(","))?;
        }
        Ok(())
    }
}

struct Labels(Vec<Partition>);

impl Display for Labels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| format!("{p}")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl PartialEq for Labels {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

pub fn all_pass(outcomes: &[VerificationOutcome]) -> bool {
    outcomes.iter().all(|o| o.pass)
}

fn ut2_formula(ell: u64, m: u64, n: usize) -> AbelianInvariants {
    let count = ((n as u64 - 2) << (n - 1)) + 1;
    let orders = std::iter::once(BigInt::from(ell)).chain(std::iter::repeat_n(BigInt::from(m), count as usize));
    AbelianInvariants::from_cyclic(orders)
}

fn primes_of(orders: &[u64]) -> Vec<u64> {
    torsion_primes(&AbelianInvariants::from_cyclic(orders.iter().map(|&x| BigInt::from(x))))
}

/// Checks each identity on all generator tuples, or through membership in
/// the kernel lattice when there are too many tuples.
fn identity_checks(
    claim: &str,
    ring: &RingModel,
    identities: &[(String, MultilinearPoly)],
    opts: EvalOptions,
) -> PiResult<Vec<VerificationOutcome>> {
    let g = ring.generators().len() as u64;
    identities
        .par_iter()
        .map(|(name, f)| {
            let d = f.degree();
            let direct = g.checked_pow(d as u32).is_some_and(|t| t <= DIRECT_EVALUATION_LIMIT);
            let holds = if direct {
                is_identity(ring, f)?
            } else {
                identity_lattice(ring, d, opts)?.contains(&f.to_dense())?
            };
            let how = if direct { "all generator tuples" } else { "kernel membership" };
            Ok(VerificationOutcome::compare(claim, "identity", format!("{} {name} ({how})", ring.label()), &true, &holds))
        })
        .collect()
}

fn closure_check(
    claim: &str,
    ring: &RingModel,
    identities: &[(String, MultilinearPoly)],
    n: usize,
    opts: EvalOptions,
) -> PiResult<VerificationOutcome> {
    let polys: Vec<MultilinearPoly> = identities.iter().map(|(_, f)| f.clone()).collect();
    let k = identity_lattice(ring, n, opts)?;
    let c = consequence_lattice(&polys, n)?;
    let full = crate::lattice::SubmoduleLattice::full(k.ambient_rank());
    let kq = crate::lattice::lattice_quotient_invariants(&full, &k)?;
    let cq = crate::lattice::lattice_quotient_invariants(&full, &c)?;
    Ok(VerificationOutcome::compare(claim, "consequence-closure", format!("{} n={n}", ring.label()), &k, &c)
        .with_witness(Some(format!("P_n/kernel = {kq}, P_n/consequences = {cq}"))))
}

/// Refinement of the Drensky factors by Young's rule. `factor(t)` gives
/// the label of `Γ_t`'s quotient as a single Specht module and the modulus.
fn refined_factors(
    n: usize,
    ell: u64,
    proper_label: impl Fn(usize) -> Option<Partition>,
    m: u64,
) -> PiResult<(Vec<Partition>, AbelianInvariants)> {
    let mut labels = vec![Partition::new(vec![n])?];
    let mut total = AbelianInvariants::cyclic(BigInt::from(ell));
    for t in 2..=n {
        let Some(lambda) = proper_label(t) else { continue };
        if t < n {
            for f in induce_mod(&lambda, n, m)?.factors {
                labels.push(f.label);
                total = total.direct_sum(&f.invariants);
            }
        } else {
            let s = specht_quotient_key(&lambda, m, &[])?;
            labels.push(lambda);
            total = total.direct_sum(&s.invariants);
        }
    }
    labels.sort_by(|a, b| b.cmp(a));
    Ok((labels, total))
}

/// `ℤ_ℓ ⊕ ℤ_m^{(n−2)2^{n−1}+1}`, the identity basis, the proper quotient
/// `S((n−1,1))/m` and (for `n ≤ 4`) the refined factor table.
pub fn verify_ut2(ell: u64, m: u64, n_max: usize, opts: EvalOptions) -> PiResult<Vec<VerificationOutcome>> {
    let ring = ut2(ell, m)?;
    let claim = "ut2.codim";
    let primes = primes_of(&[ell, m]);
    let ids = ut2_identities(ell, m);
    let mut out = identity_checks(claim, &ring, &ids, opts)?;
    let per_n: Vec<Vec<VerificationOutcome>> = (2..=n_max)
        .into_par_iter()
        .map(|n| -> PiResult<Vec<VerificationOutcome>> {
            let case = format!("{} n={n}", ring.label());
            let mut v = Vec::new();
            let computed = ordinary_invariants(&ring, n, opts)?;
            v.push(VerificationOutcome::compare(claim, "formula", case.clone(), &ut2_formula(ell, m, n), &computed));
            v.push(closure_check(claim, &ring, &ids, n, opts)?);
            let proper = proper_quotient_key(&ring, n, &primes, opts)?;
            let expected = specht_quotient_key(&Partition::new(vec![n - 1, 1])?, m, &primes)?;
            v.push(VerificationOutcome::compare(claim, "proper-module", case.clone(), &expected, &proper).consistent());
            if n <= 4 {
                let drensky = drensky_filtration(&ring, n, opts)?;
                let matched = drensky.factors.iter().all(|f| f.matches());
                v.push(VerificationOutcome::compare(claim, "drensky-factors", case.clone(), &true, &matched).consistent());
                let (labels, total) = refined_factors(n, ell, |t| Partition::new(vec![t - 1, 1]).ok(), m)?;
                let table = ut2_table(n)?;
                v.push(VerificationOutcome::compare(claim, "young-refinement", case.clone(), &Labels(table), &Labels(labels)).consistent());
                v.push(VerificationOutcome::compare(claim, "refined-invariants", case, &computed, &total));
            }
            Ok(v)
        })
        .collect::<PiResult<_>>()?;
    out.extend(per_n.into_iter().flatten());
    Ok(out)
}

/// `(n)` once, then `λ = (λ_1, λ_2, λ_3) ⊢ n` with `λ_2 ≥ 1`, `λ_3 ≤ 1`,
/// repeated `λ_1 − λ_2 + 1` times; sorted descending.
pub fn ut2_table(n: usize) -> PiResult<Vec<Partition>> {
    let mut out = vec![Partition::new(vec![n])?];
    for l in Partition::all(n) {
        if l.len() >= 2 && l.len() <= 3 && l.part(3) <= 1 {
            for _ in 0..(l.part(1) - l.part(2) + 1) {
                out.push(l.clone());
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `ℤ_ℓ^{2^{n−1}}` at `K` and `K+1`, the identities, the proper pattern
/// and the hook accounting.
pub fn verify_grassmann(ell: u64, k: usize, n_max: usize, opts: EvalOptions) -> PiResult<Vec<VerificationOutcome>> {
    if k < n_max + 1 {
        return Err(PiError::Precondition(format!("truncation K = {k} must be at least n_max + 1 = {}", n_max + 1)));
    }
    let ring = grassmann(ell, k)?;
    let wider = grassmann(ell, k + 1)?;
    let claim = "grassmann.codim";
    let primes = primes_of(&[ell]);
    let ids = grassmann_identities(ell);
    let mut out = identity_checks(claim, &ring, &ids, opts)?;
    let per_n: Vec<Vec<VerificationOutcome>> = (2..=n_max)
        .into_par_iter()
        .map(|n| -> PiResult<Vec<VerificationOutcome>> {
            let case = format!("{} n={n}", ring.label());
            let mut v = Vec::new();
            let expected = AbelianInvariants::cyclic(BigInt::from(ell)).power(1 << (n - 1));
            let at_k = ordinary_invariants(&ring, n, opts)?;
            let at_k1 = ordinary_invariants(&wider, n, opts)?;
            v.push(VerificationOutcome::compare(claim, "formula", case.clone(), &expected, &at_k));
            v.push(VerificationOutcome::compare(claim, "formula", format!("{} n={n}", wider.label()), &expected, &at_k1));
            v.push(VerificationOutcome::compare(claim, "stabilization", format!("K={k} vs K={} n={n}", k + 1), &at_k, &at_k1));
            if n <= 4 {
                v.push(closure_check(claim, &ring, &ids, n, opts)?);
            }
            let proper = proper_quotient_key(&ring, n, &primes, opts)?;
            let expected = if n % 2 == 0 {
                specht_quotient_key(&Partition::new(vec![1; n])?, ell, &primes)?
            } else {
                zero_key(n, &primes)
            };
            v.push(VerificationOutcome::compare(claim, "proper-module", case.clone(), &expected, &proper).consistent());
            // hook accounting
            let mut rank_sum = 0usize;
            let mut ranks_ok = true;
            for j in 0..n {
                let r = specht_lattice(&PartitionPair::specht(&Partition::hook(n, j)))?.rank();
                ranks_ok &= r as u64 == binomial(n as u64 - 1, j as u64);
                rank_sum += r;
            }
            v.push(VerificationOutcome::compare(claim, "hook-ranks", case.clone(), &true, &ranks_ok));
            v.push(VerificationOutcome::compare(claim, "hook-rank-sum", case.clone(), &(1usize << (n - 1)), &rank_sum));
            if n <= 4 {
                let drensky = drensky_filtration(&ring, n, opts)?;
                let matched = drensky.factors.iter().all(|f| f.matches());
                v.push(VerificationOutcome::compare(claim, "drensky-factors", case.clone(), &true, &matched).consistent());
                let (labels, total) =
                    refined_factors(n, ell, |t| (t % 2 == 0).then(|| Partition::new(vec![1; t]).expect("valid")), ell)?;
                let hooks: Vec<Partition> = (0..n).map(|j| Partition::hook(n, j)).collect();
                v.push(VerificationOutcome::compare(claim, "hook-factors", case.clone(), &Labels(hooks), &Labels(labels)).consistent());
                v.push(VerificationOutcome::compare(claim, "refined-invariants", case, &at_k, &total));
            }
            Ok(v)
        })
        .collect::<PiResult<_>>()?;
    out.extend(per_n.into_iter().flatten());
    Ok(out)
}

/// `c_n(R, q) = Σ_j C(n, j) γ_j(R, q)` for every `q`, and the same as a
/// direct-sum decomposition of groups.
pub fn verify_proper_ordinary(ring: &RingModel, n_max: usize, opts: EvalOptions) -> PiResult<Vec<VerificationOutcome>> {
    if !ring.is_unital() {
        return Err(PiError::NotUnital);
    }
    let claim = "proper-ordinary";
    let gammas: Vec<AbelianInvariants> =
        (0..=n_max).into_par_iter().map(|j| proper_invariants(ring, j, opts)).collect::<PiResult<_>>()?;
    let ordinary: Vec<AbelianInvariants> =
        (0..=n_max).into_par_iter().map(|n| ordinary_invariants(ring, n, opts)).collect::<PiResult<_>>()?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        let mut sum = AbelianInvariants::trivial();
        for (j, g) in gammas.iter().enumerate().take(n + 1) {
            sum = sum.direct_sum(&g.power(binomial(n as u64, j as u64) as usize));
        }
        let c = &ordinary[n];
        let mut qs: Vec<BigInt> = c.occurring_q();
        qs.extend(sum.occurring_q());
        qs.sort();
        qs.dedup();
        for q in qs {
            let case = format!("{} n={n} q={q}", ring.label());
            out.push(VerificationOutcome::compare(claim, "count", case, &sum.codim(&q)?, &c.codim(&q)?));
        }
        out.push(VerificationOutcome::compare(claim, "group", format!("{} n={n}", ring.label()), &sum, c));
    }
    Ok(out)
}

/// `M_0/M_2 ≅ ℤ_ch` and every `M_t/M_{t+1}` against the induced proper quotient.
pub fn verify_drensky(ring: &RingModel, n_max: usize, opts: EvalOptions) -> PiResult<Vec<VerificationOutcome>> {
    let claim = "drensky";
    let ch = ring.characteristic().ok_or(PiError::NotUnital)?;
    let reports: Vec<_> =
        (2..=n_max).into_par_iter().map(|n| drensky_filtration(ring, n, opts)).collect::<PiResult<_>>()?;
    let mut out = Vec::new();
    for r in reports {
        let top = &r.factors[0];
        out.push(VerificationOutcome::compare(
            claim,
            "M0/M2",
            format!("{} n={}", r.ring, r.n),
            &AbelianInvariants::cyclic(ch.clone()),
            &top.computed.invariants,
        ));
        for f in &r.factors {
            let case = format!("{} n={} t={}", r.ring, r.n, f.t);
            out.push(VerificationOutcome::compare(claim, "factor", case, &f.expected, &f.computed).consistent());
        }
    }
    Ok(out)
}

/// Young's rule: the factors of `(S(λ)/m)↑S_n` are the interlacing `ν`,
/// each once, with invariants `ℤ_m^{hook number of ν}`.
pub fn verify_young(n_max: usize, ms: &[u64]) -> PiResult<Vec<VerificationOutcome>> {
    let claim = "young";
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for t in 0..n {
            for lambda in Partition::all(t) {
                for &m in ms {
                    cases.push((n, lambda.clone(), m));
                }
            }
        }
    }
    let results: Vec<Vec<VerificationOutcome>> = cases
        .par_iter()
        .map(|(n, lambda, m)| -> PiResult<Vec<VerificationOutcome>> {
            let rep = induce_mod(lambda, *n, *m)?;
            let case = format!("lambda={lambda} n={n} m={m}");
            let expected = young_expected(lambda, *n)?;
            let mut got = rep.labels();
            got.sort_by(|a, b| b.cmp(a));
            let mut v = vec![VerificationOutcome::compare(claim, "labels", case.clone(), &Labels(expected), &Labels(got))];
            let inv_ok = rep.factors.iter().all(|f| {
                let h = f.label.hook_number().to_usize().expect("desk-scale");
                f.invariants == AbelianInvariants::cyclic(BigInt::from(*m)).power(h)
            });
            v.push(VerificationOutcome::compare(claim, "invariants", case, &true, &inv_ok));
            Ok(v)
        })
        .collect::<PiResult<_>>()?;
    Ok(results.into_iter().flatten().collect())
}

/// Every `S(λ; μ)` with `|λ| ≤ n_max` is saturated: all Smith factors are 1.
pub fn verify_specht_torsionfree(n_max: usize) -> PiResult<Vec<VerificationOutcome>> {
    let claim = "specht.torsionfree";
    (1..=n_max)
        .map(|n| {
            let pairs = PartitionPair::all(n);
            let bad: Vec<String> = pairs
                .par_iter()
                .map(|p| -> PiResult<Option<String>> {
                    let s = specht_lattice(p)?;
                    let d = snf_diagonal(s.basis(), s.ambient_rank())?;
                    Ok((!d.iter().all(One::is_one)).then(|| p.to_string()))
                })
                .collect::<PiResult<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            let case = format!("n={n} ({} pairs)", pairs.len());
            Ok(VerificationOutcome::compare(claim, "snf", case, &0usize, &bad.len())
                .with_witness((!bad.is_empty()).then(|| bad.join(" "))))
        })
        .collect()
}

/// `ψ S(λ;μ) = S(R_c)` and `ker ψ ∩ S(λ;μ) = S(A_c)` for every pair with a gap.
pub fn verify_psi_lemma(n_max: usize) -> PiResult<Vec<VerificationOutcome>> {
    let claim = "specht.psi";
    (1..=n_max)
        .map(|n| {
            let results: Vec<(String, bool)> = PartitionPair::all(n)
                .par_iter()
                .map(|p| Ok(psi_lemma(p)?.map(|r| (p.to_string(), r.ok()))))
                .collect::<PiResult<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            let bad: Vec<String> = results.iter().filter(|(_, ok)| !ok).map(|(p, _)| p.clone()).collect();
            let case = format!("n={n} ({} applicable pairs)", results.len());
            Ok(VerificationOutcome::compare(claim, "image-kernel", case, &0usize, &bad.len())
                .with_witness((!bad.is_empty()).then(|| bad.join(" "))))
        })
        .collect()
}

/// Field ranks of the evaluation matrix against the integral codimensions,
/// for rings whose moduli are all 0 or all one prime `p`.
pub fn verify_field_props(ring: &RingModel, n_max: usize, opts: EvalOptions) -> PiResult<Vec<VerificationOutcome>> {
    let claim = "field-props";
    let first = ring.moduli().first().cloned().unwrap_or_else(BigInt::zero);
    if ring.moduli().iter().any(|m| m != &first) {
        return Err(PiError::Precondition("field surrogates need equal moduli".into()));
    }
    let p = if first.is_zero() {
        0
    } else {
        match prime_power(&first) {
            Some((p, 1)) => p.to_u64().ok_or_else(|| PiError::Precondition("prime too large".into()))?,
            _ => return Err(PiError::Precondition(format!("modulus {first} is not prime"))),
        }
    };
    let per_n: Vec<Vec<VerificationOutcome>> = (1..=n_max)
        .into_par_iter()
        .map(|n| -> PiResult<Vec<VerificationOutcome>> {
            let case = format!("{} n={n} p={p}", ring.label());
            let inv = ordinary_invariants(ring, n, opts)?;
            let (rows, _) = evaluation_rows(ring, n, opts.budget)?;
            let m = IntMatrix::from_rows(crate::perm::factorial(n), rows)?;
            let rank = field_rank(&m, p);
            let mut v = vec![VerificationOutcome::compare(claim, "field-rank", case.clone(), &inv.codim(&BigInt::from(p))?, &rank)];
            let q = BigInt::from(p);
            let off: BTreeMap<String, usize> = inv
                .occurring_q()
                .into_iter()
                .filter(|x| x != &q)
                .map(|x| Ok((x.to_string(), inv.codim(&x)?)))
                .collect::<PiResult<_>>()?;
            let shown = Off(off);
            v.push(VerificationOutcome::compare(claim, "off-characteristic", case, &Off(BTreeMap::new()), &shown));
            Ok(v)
        })
        .collect::<PiResult<_>>()?;
    Ok(per_n.into_iter().flatten().collect())
}

#[derive(PartialEq)]
struct Off(BTreeMap<String, usize>);

impl Display for Off {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(q, c)| format!("q={q}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Parameters for [`run_claim`].
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub ring: Option<RingModel>,
    pub n_max: Option<usize>,
    pub k: Option<usize>,
    pub ms: Vec<u64>,
    pub opts: EvalOptions,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { ring: None, n_max: None, k: None, ms: vec![0, 2, 3], opts: EvalOptions::default() }
    }
}

fn parse_label_params(label: &str, prefix: &str) -> Option<(u64, u64)> {
    let rest = label.strip_prefix(prefix)?;
    let (a, b) = rest.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Runs a suite by claim id. Without a ring, the built-in model families
/// are used.
pub fn run_claim(claim: &str, cfg: &SuiteConfig) -> PiResult<Vec<VerificationOutcome>> {
    let opts = cfg.opts;
    let unital_defaults = || -> PiResult<Vec<RingModel>> {
        Ok(match &cfg.ring {
            Some(r) => vec![r.clone()],
            None => vec![ut2(2, 2)?, ut2(3, 3)?, ut2(4, 2)?, ut2(0, 0)?, grassmann(3, 5)?, grassmann(0, 5)?, crate::rings::cyclic_ring(4)],
        })
    };
    match claim {
        "ut2.codim" => {
            let params = match &cfg.ring {
                Some(r) => {
                    let (ell, m) = parse_label_params(r.label(), "ut2:")
                        .filter(|&(ell, m)| ut2(ell, m).ok().as_ref() == Some(r))
                        .ok_or_else(|| PiError::Precondition(format!("{} is not a ut2 model", r.label())))?;
                    vec![(ell, m)]
                }
                None => vec![(2, 2), (3, 3), (4, 2), (0, 0)],
            };
            let n_max = cfg.n_max.unwrap_or(5);
            flatten(params.into_iter().map(|(ell, m)| verify_ut2(ell, m, n_max, opts)))
        }
        "grassmann.codim" => {
            let n_max = cfg.n_max.unwrap_or(4);
            let params = match &cfg.ring {
                Some(r) => {
                    let (ell, k) = parse_label_params(r.label(), "grassmann:")
                        .filter(|&(ell, k)| grassmann(ell, k as usize).ok().as_ref() == Some(r))
                        .ok_or_else(|| PiError::Precondition(format!("{} is not a grassmann model", r.label())))?;
                    vec![(ell, cfg.k.unwrap_or(k as usize))]
                }
                None => [3, 5, 0].into_iter().map(|ell| (ell, cfg.k.unwrap_or(n_max + 1))).collect(),
            };
            flatten(params.into_iter().map(|(ell, k)| verify_grassmann(ell, k, n_max, opts)))
        }
        "proper-ordinary" => {
            let n_max = cfg.n_max.unwrap_or(5);
            flatten(unital_defaults()?.iter().map(|r| {
                let n = if r.label().starts_with("grassmann") { n_max.min(4) } else { n_max };
                verify_proper_ordinary(r, n, opts)
            }))
        }
        "drensky" => {
            let n_max = cfg.n_max.unwrap_or(4);
            let rings = match &cfg.ring {
                Some(r) => vec![r.clone()],
                None => vec![ut2(2, 2)?, grassmann(3, 4)?],
            };
            flatten(rings.iter().map(|r| verify_drensky(r, n_max, opts)))
        }
        "young" => verify_young(cfg.n_max.unwrap_or(6), &cfg.ms),
        "specht.torsionfree" => verify_specht_torsionfree(cfg.n_max.unwrap_or(6)),
        "specht.psi" => verify_psi_lemma(cfg.n_max.unwrap_or(6)),
        "field-props" => {
            let n_max = cfg.n_max.unwrap_or(4);
            let rings = match &cfg.ring {
                Some(r) => vec![r.clone()],
                None => vec![ut2(0, 0)?, ut2(2, 2)?, ut2(3, 3)?],
            };
            flatten(rings.iter().map(|r| verify_field_props(r, n_max, opts)))
        }
        other => Err(PiError::Parse(format!("unknown claim id {other:?}; known: {}", CLAIMS.join(", ")))),
    }
}

fn flatten<I: Iterator<Item = PiResult<Vec<VerificationOutcome>>>>(it: I) -> PiResult<Vec<VerificationOutcome>> {
    let mut out = Vec::new();
    for v in it {
        out.extend(v?);
    }
    Ok(out)
}

/// Number of multisets of generators a degree-`n` computation touches.
pub fn work_estimate(ring: &RingModel, n: usize) -> u64 {
    multiset_count(ring.generators().len(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ut2_small() {
        let out = verify_ut2(2, 2, 3, EvalOptions::default()).unwrap();
        for o in &out {
            assert!(o.pass, "{o:?}");
        }
    }

    #[test]
    fn formula_values() {
        let counts: Vec<usize> = (2..=5).map(|n| ut2_formula(2, 2, n).cyclic_count()).collect();
        assert_eq!(counts, vec![2, 6, 18, 50]);
        assert_eq!(ut2_formula(4, 2, 2).to_string(), "Z_2 + Z_4");
    }

    #[test]
    fn table_sizes() {
        // (3), (2,1) twice, (1,1,1)
        assert_eq!(ut2_table(3).unwrap().len(), 4);
    }

    #[test]
    fn unknown_claim() {
        assert!(run_claim("nope", &SuiteConfig::default()).is_err());
    }
}
