use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::model::RingModel;
use crate::error::{PiError, PiResult};

fn unit_vec(r: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); r];
    v[i] = BigInt::one();
    v
}

fn zero_table(r: usize) -> Vec<Vec<Vec<BigInt>>> {
    vec![vec![vec![BigInt::zero(); r]; r]; r]
}

/// `ℤ_m` (`ℤ` for `m = 0`).
pub fn cyclic_ring(m: u64) -> RingModel {
    let mut table = zero_table(1);
    table[0][0][0] = BigInt::one();
    RingModel::new(format!("cyclic:{m}"), vec![BigInt::from(m)], table, vec![unit_vec(1, 0)], Some(unit_vec(1, 0)))
        .expect("cyclic ring is valid")
}

/// Upper triangular `2×2` matrices with diagonal entries in `ℤ_ℓ` and
/// corner in `ℤ_m`; basis `e11, e22, e12`.
pub fn ut2(ell: u64, m: u64) -> PiResult<RingModel> {
    if ell > 0 && (m == 0 || !ell.is_multiple_of(m)) {
        return Err(PiError::InvalidRing(format!("ut2 needs m | ell, got ell = {ell}, m = {m}")));
    }
    let (e11, e22, e12) = (0, 1, 2);
    let mut t = zero_table(3);
    t[e11][e11][e11] = BigInt::one();
    t[e22][e22][e22] = BigInt::one();
    t[e11][e12][e12] = BigInt::one();
    t[e12][e22][e12] = BigInt::one();
    let moduli = vec![BigInt::from(ell), BigInt::from(ell), BigInt::from(m)];
    let unit = vec![BigInt::one(), BigInt::one(), BigInt::zero()];
    RingModel::new(format!("ut2:{ell},{m}"), moduli, t, (0..3).map(|i| unit_vec(3, i)).collect(), Some(unit))
}

/// Sign of `e_S e_T` for disjoint bitmasks: parity of pairs `s ∈ S, t ∈ T`
/// with `s > t`.
pub fn grassmann_sign(s: u32, t: u32) -> i64 {
    let mut inversions = 0;
    let mut rest = s;
    while rest != 0 {
        let b = rest.trailing_zeros();
        inversions += (t & ((1u32 << b) - 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Grassmann algebra over `ℤ_ℓ` on `K` anticommuting generators, basis
/// `e_S` indexed by bitmasks `S ⊆ {1..K}`.
pub fn grassmann(ell: u64, k: usize) -> PiResult<RingModel> {
    if ell != 0 && ell.is_multiple_of(2) {
        return Err(PiError::InvalidRing(format!("grassmann needs ell odd or 0, got {ell}")));
    }
    if k == 0 || k > 12 {
        return Err(PiError::InvalidRing(format!("grassmann needs 1 ≤ K ≤ 12, got {k}")));
    }
    let r = 1usize << k;
    let mut t = zero_table(r);
    for s in 0..r {
        for u in 0..r {
            if s & u == 0 {
                t[s][u][s | u] = BigInt::from(grassmann_sign(s as u32, u as u32));
            }
        }
    }
    RingModel::new(
        format!("grassmann:{ell},{k}"),
        vec![BigInt::from(ell); r],
        t,
        (0..r).map(|i| unit_vec(r, i)).collect(),
        Some(unit_vec(r, 0)),
    )
}

/// Componentwise direct sum.
pub fn direct_sum(models: &[RingModel]) -> PiResult<RingModel> {
    if models.is_empty() {
        return Err(PiError::InvalidRing("direct sum of no rings".into()));
    }
    let r: usize = models.iter().map(RingModel::rank).sum();
    let mut moduli = Vec::with_capacity(r);
    let mut table = zero_table(r);
    let mut generators = Vec::new();
    let mut unit = Some(Vec::with_capacity(r));
    let mut offset = 0;
    for m in models {
        let k = m.rank();
        moduli.extend(m.moduli().iter().cloned());
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    table[offset + i][offset + j][offset + l] = m.mult_table()[i][j][l].clone();
                }
            }
        }
        for g in m.generators() {
            let mut v = vec![BigInt::zero(); r];
            v[offset..offset + k].clone_from_slice(g);
            generators.push(v);
        }
        unit = match (unit, m.unit()) {
            (Some(mut u), Some(mu)) => {
                u.extend(mu.iter().cloned());
                Some(u)
            }
            _ => None,
        };
        offset += k;
    }
    let labels: Vec<&str> = models.iter().map(RingModel::label).collect();
    RingModel::new(format!("sum:[{}]", labels.join(",")), moduli, table, generators, unit)
}

/// Parse a ring description: `cyclic:m`, `ut2:ell,m`, `grassmann:ell,K`,
/// `sum:[spec,...]`, a JSON model document, or `@path` to a JSON file.
pub fn parse_ring_spec(spec: &str) -> PiResult<RingModel> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| PiError::Parse(format!("{path}: {e}")))?;
        return RingModel::from_json(&serde_json::from_str(&text)?);
    }
    if spec.starts_with('{') {
        return RingModel::from_json(&serde_json::from_str(spec)?);
    }
    let (kind, args) = spec.split_once(':').ok_or_else(|| PiError::Parse(format!("malformed ring spec {spec:?}")))?;
    let nums = |args: &str, count: usize| -> PiResult<Vec<u64>> {
        let v: Vec<u64> = args
            .split(',')
            .map(|a| a.trim().parse::<u64>().map_err(|_| PiError::Parse(format!("bad number {a:?} in {spec:?}"))))
            .collect::<PiResult<_>>()?;
        if v.len() != count {
            return Err(PiError::Parse(format!("{kind} takes {count} argument(s), got {}", v.len())));
        }
        Ok(v)
    };
    match kind.trim() {
        "cyclic" => Ok(cyclic_ring(nums(args, 1)?[0])),
        "ut2" => {
            let v = nums(args, 2)?;
            ut2(v[0], v[1])
        }
        "grassmann" => {
            let v = nums(args, 2)?;
            grassmann(v[0], v[1] as usize)
        }
        "sum" => {
            let inner = args
                .trim()
                .strip_prefix('[')
                .and_then(|a| a.strip_suffix(']'))
                .ok_or_else(|| PiError::Parse(format!("sum needs [..] in {spec:?}")))?;
            let parts = split_top_level(inner)?;
            let models = parts.iter().map(|p| parse_ring_spec(p)).collect::<PiResult<Vec<_>>>()?;
            direct_sum(&models)
        }
        other => Err(PiError::Parse(format!("unknown ring kind {other:?}"))),
    }
}

fn split_top_level(s: &str) -> PiResult<Vec<String>> {
    // a summand starts after a top-level comma followed by a ring kind, so
    // the comma inside `ut2:a,b` stays with its arguments
    let chars: Vec<char> = s.chars().collect();
    let mut parts = Vec::new();
    let mut start = 0;
    let mut depth = 0i32;
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                let next = chars[i + 1..].iter().find(|c| !c.is_whitespace());
                if matches!(next, Some(c) if c.is_alphabetic() || *c == '@') {
                    parts.push(chars[start..i].iter().collect::<String>());
                    start = i + 1;
                }
            }
            _ => {}
        }
        if depth < 0 {
            return Err(PiError::Parse(format!("unbalanced brackets in {s:?}")));
        }
    }
    if depth != 0 {
        return Err(PiError::Parse(format!("unbalanced brackets in {s:?}")));
    }
    parts.push(chars[start..].iter().collect::<String>());
    if parts.iter().any(|p| p.trim().is_empty()) {
        return Err(PiError::Parse(format!("empty summand in {s:?}")));
    }
    Ok(parts)
}

/// `lcm` of the additive orders of the generators (`0` if some has
/// infinite order).
pub fn exponent(model: &RingModel) -> BigInt {
    let mut l = BigInt::one();
    for g in model.generators() {
        let o = model.additive_order(g);
        if o.is_zero() {
            return BigInt::zero();
        }
        l = l.lcm(&o);
    }
    l
}
