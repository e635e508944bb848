use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use pi_lattice::json::{int_to_json, ints_to_json};
use pi_lattice::lattice::prime_power;
use pi_lattice::rings::{parse_ring_spec, EvalOptions, DEFAULT_BUDGET};
use pi_lattice::specht::{induce_mod, specht_lattice, specht_series, FiltrationReport, Partition, PartitionPair};
use pi_lattice::theory::{all_pass, ordinary_invariants, proper_invariants, run_claim, SuiteConfig, CLAIMS};
use pi_lattice::{AbelianInvariants, Int, PiError, PiResult};

use crate::output::{emit, Report, SCHEMA};
use crate::{CodimArgs, Command, SpechtCommand, Status, VerifyArgs};

pub fn run(cmd: &Command) -> PiResult<Status> {
    match cmd {
        Command::Codim(a) => codim(a),
        Command::Verify(a) => verify(a),
        Command::Specht { action } => specht(action),
    }
}

/// `4`, `2..5` or `2..=5` (both bounds inclusive).
pub fn parse_range(s: &str) -> PiResult<Vec<usize>> {
    let bad = || PiError::Parse(format!("invalid degree range {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

/// Comma-separated parts; empty or `0` is the empty partition.
pub fn parse_parts(s: &str) -> PiResult<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| PiError::InvalidPartition(s.to_string())))
        .collect()
}

fn invariants_json(inv: &AbelianInvariants) -> Value {
    json!({ "torsion": ints_to_json(&inv.torsion), "free_rank": inv.free_rank, "group": inv.to_string() })
}

fn parse_q(s: &str) -> PiResult<Int> {
    let q: Int = s.trim().parse().map_err(|_| PiError::Parse(format!("invalid q {s:?}")))?;
    if q != Int::from(0) && prime_power(&q).is_none() {
        return Err(PiError::NotPrimePower(q.to_string()));
    }
    Ok(q)
}

fn codim(a: &CodimArgs) -> PiResult<Status> {
    let ring = parse_ring_spec(&a.ring)?;
    let degrees = parse_range(&a.n)?;
    let q_filter = a.q.as_deref().map(parse_q).transpose()?;
    let opts = EvalOptions { budget: a.row_budget.unwrap_or(DEFAULT_BUDGET), ..EvalOptions::default() };
    let kind = if a.proper { "proper" } else { "ordinary" };
    let results: Vec<(usize, AbelianInvariants, f64)> = degrees
        .par_iter()
        .map(|&n| {
            let start = Instant::now();
            let inv = if a.proper { proper_invariants(&ring, n, opts)? } else { ordinary_invariants(&ring, n, opts)? };
            Ok((n, inv, start.elapsed().as_secs_f64() * 1e3))
        })
        .collect::<PiResult<_>>()?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for (n, inv, ms) in results {
        let qs = match &q_filter {
            Some(q) => vec![q.clone()],
            None => inv.occurring_q(),
        };
        let mut per_q = Vec::new();
        for q in qs {
            let count = inv.codim(&q)?;
            rows.push(vec![ring.label().to_string(), n.to_string(), kind.to_string(), q.to_string(), count.to_string()]);
            per_q.push(json!({ "q": int_to_json(&q), "count": count }));
        }
        let mut e = json!({ "n": n, "kind": kind, "invariants": invariants_json(&inv), "per_q": per_q });
        if a.timing {
            e["timing_ms"] = json!(ms);
        }
        entries.push(e);
    }
    let report = Report {
        json: json!({ "schema": SCHEMA, "command": "codim", "ring": ring.label(), "reports": entries }),
        header: vec!["ring", "n", "kind", "q", "count"],
        rows,
    };
    emit(&report, &a.output)?;
    Ok(Status::Pass)
}

fn verify(a: &VerifyArgs) -> PiResult<Status> {
    let claims: Vec<&str> = if a.claim == "all" {
        CLAIMS.to_vec()
    } else if CLAIMS.contains(&a.claim.as_str()) {
        vec![a.claim.as_str()]
    } else {
        return Err(PiError::Parse(format!("unknown claim id {:?}; known: all, {}", a.claim, CLAIMS.join(", "))));
    };
    let ring = a.ring.as_deref().map(parse_ring_spec).transpose()?;
    let mut cfg = SuiteConfig {
        ring,
        n_max: a.n_max,
        k: a.k,
        opts: EvalOptions { budget: a.row_budget.unwrap_or(DEFAULT_BUDGET), ..EvalOptions::default() },
        ..SuiteConfig::default()
    };
    if let Some(ms) = &a.m {
        cfg.ms = ms.clone();
    }
    let mut outcomes = Vec::new();
    for c in &claims {
        outcomes.extend(run_claim(c, &cfg)?);
    }
    let pass = all_pass(&outcomes);
    let rows = outcomes
        .iter()
        .map(|o| {
            vec![
                o.claim.clone(),
                o.check.clone(),
                o.case.clone(),
                o.pass.to_string(),
                o.consistent.to_string(),
                o.expected.clone(),
                o.computed.clone(),
                o.witness.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let report = Report {
        json: json!({
            "schema": SCHEMA,
            "command": "verify",
            "claims": claims,
            "seed": a.seed,
            "pass": pass,
            "outcomes": serde_json::to_value(&outcomes)?,
        }),
        header: vec!["claim", "check", "case", "pass", "consistent", "expected", "computed", "witness"],
        rows,
    };
    emit(&report, &a.output)?;
    Ok(if pass { Status::Pass } else { Status::Failed })
}

fn filtration_report(command: &str, extra: Value, rep: &FiltrationReport) -> PiResult<Report> {
    let mut json = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(m), Value::Object(e)) = (&mut json, extra) {
        m.extend(e);
    }
    json["shape"] = serde_json::to_value(&rep.shape)?;
    json["factors"] = serde_json::to_value(&rep.factors)?;
    let rows = rep
        .factors
        .iter()
        .enumerate()
        .map(|(i, f)| vec![i.to_string(), f.label.to_string(), f.rank.to_string(), f.invariants.to_string()])
        .collect();
    Ok(Report { json, header: vec!["index", "label", "rank", "invariants"], rows })
}

fn specht(cmd: &SpechtCommand) -> PiResult<Status> {
    match cmd {
        SpechtCommand::Filtrate { lambda, n, m, output } => {
            let lambda = Partition::new(parse_parts(lambda)?)?;
            let rep = induce_mod(&lambda, *n, *m)?;
            let extra = json!({ "lambda": lambda, "n": n, "m": m });
            emit(&filtration_report("specht filtrate", extra, &rep)?, output)?;
        }
        SpechtCommand::Rank { lambda, output } => {
            let lambda = Partition::new(parse_parts(lambda)?)?;
            let rank = specht_lattice(&PartitionPair::specht(&lambda))?.rank();
            let hook = lambda.hook_number();
            let report = Report {
                json: json!({
                    "schema": SCHEMA,
                    "command": "specht rank",
                    "lambda": lambda,
                    "rank": rank,
                    "hook_formula": int_to_json(&hook),
                }),
                header: vec!["lambda", "rank", "hook_formula"],
                rows: vec![vec![lambda.to_string(), rank.to_string(), hook.to_string()]],
            };
            emit(&report, output)?;
        }
        SpechtCommand::Series { lambda, mu, output } => {
            let pair = PartitionPair::from_parts(&parse_parts(lambda)?, &parse_parts(mu)?)?;
            let rep = specht_series(&pair)?;
            let extra = json!({ "lambda": pair.lambda, "mu": pair.mu });
            emit(&filtration_report("specht series", extra, &rep)?, output)?;
        }
    }
    Ok(Status::Pass)
}
