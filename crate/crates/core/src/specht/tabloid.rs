use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::partition::GenPartition;
use crate::error::{PiError, PiResult};
use crate::perm::Permutation;

/// Largest `n` for which tabloid modules are built.
pub const MAX_DEGREE: usize = 8;

/// A row-equivalence class of fillings of `μ`: `rows[i]` is the sorted set
/// of entries in row `i` (entries `1..=n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tabloid {
    pub rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn shape(&self) -> GenPartition {
        GenPartition::new(self.rows.iter().map(Vec::len).collect())
    }

    /// Row index of every entry (`row_of[e - 1]`).
    pub fn row_of(&self) -> Vec<u8> {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        let mut out = vec![0u8; n];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                out[e - 1] = i as u8;
            }
        }
        out
    }

    pub fn from_row_of(row_of: &[u8], nrows: usize) -> Self {
        let mut rows = vec![Vec::new(); nrows];
        for (e, &r) in row_of.iter().enumerate() {
            rows[r as usize].push(e + 1);
        }
        Self { rows }
    }

    /// `σ[T]`: entry `e` moves to `σ(e)`.
    pub fn act(&self, sigma: &Permutation) -> Self {
        let mut rows: Vec<Vec<usize>> = self.rows.iter().map(|r| r.iter().map(|&e| sigma.apply(e)).collect()).collect();
        for r in rows.iter_mut() {
            r.sort_unstable();
        }
        Self { rows }
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn enumerate(shape: &[usize], remaining: &[usize], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Tabloid>) {
    if cur.len() == shape.len() {
        out.push(Tabloid { rows: cur.clone() });
        return;
    }
    for row in combinations(remaining, shape[cur.len()]) {
        let rest: Vec<usize> = remaining.iter().copied().filter(|x| !row.contains(x)).collect();
        cur.push(row);
        enumerate(shape, &rest, cur, out);
        cur.pop();
    }
}

/// The tabloid basis of `M(μ)` with an index for coordinates.
#[derive(Debug)]
pub struct TabloidBasis {
    pub shape: GenPartition,
    pub tabloids: Vec<Tabloid>,
    index: HashMap<Vec<u8>, usize>,
}

impl TabloidBasis {
    fn build(shape: &GenPartition) -> Self {
        let n = shape.size();
        let items: Vec<usize> = (1..=n).collect();
        let mut tabloids = Vec::new();
        enumerate(shape.parts(), &items, &mut Vec::new(), &mut tabloids);
        let index = tabloids.iter().enumerate().map(|(i, t)| (t.row_of(), i)).collect();
        Self { shape: shape.clone(), tabloids, index }
    }

    pub fn len(&self) -> usize {
        self.tabloids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tabloids.is_empty()
    }

    pub fn index_of_rows(&self, row_of: &[u8]) -> usize {
        self.index[row_of]
    }

    pub fn index_of(&self, t: &Tabloid) -> PiResult<usize> {
        self.index.get(&t.row_of()).copied().ok_or_else(|| PiError::InvalidPartition(format!("tabloid of shape {} is not in M{}", t.shape(), self.shape)))
    }

    /// Coordinate permutation of `σ`: column `j` goes to `table[j]`.
    pub fn action_table(&self, sigma: &Permutation) -> Vec<usize> {
        self.tabloids
            .iter()
            .map(|t| {
                let ro = t.row_of();
                let mut image = vec![0u8; ro.len()];
                for (e, &r) in ro.iter().enumerate() {
                    image[sigma.apply(e + 1) - 1] = r;
                }
                self.index[&image]
            })
            .collect()
    }
}

/// Tabloid basis of `M(μ)` in lexicographic order of row contents (cached).
pub fn tabloid_module_basis(shape: &GenPartition) -> PiResult<Arc<TabloidBasis>> {
    if shape.size() > MAX_DEGREE {
        return Err(PiError::Precondition(format!("tabloid modules are limited to n ≤ {MAX_DEGREE}")));
    }
    static CACHE: OnceLock<Mutex<HashMap<GenPartition, Arc<TabloidBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("cache lock").get(shape) {
        return Ok(b.clone());
    }
    let b = Arc::new(TabloidBasis::build(shape));
    cache.lock().expect("cache lock").insert(shape.clone(), b.clone());
    Ok(b)
}

/// An element of `M(μ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TabloidVector {
    pub shape: GenPartition,
    pub coeffs: BTreeMap<Tabloid, BigInt>,
}

impl TabloidVector {
    pub fn zero(shape: GenPartition) -> Self {
        Self { shape, coeffs: BTreeMap::new() }
    }

    pub fn add_term(&mut self, t: Tabloid, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn act(&self, sigma: &Permutation) -> Self {
        let mut out = Self::zero(self.shape.clone());
        for (t, c) in &self.coeffs {
            out.add_term(t.act(sigma), c.clone());
        }
        out
    }

    pub fn to_dense(&self) -> PiResult<Vec<BigInt>> {
        let basis = tabloid_module_basis(&self.shape)?;
        let mut v = vec![BigInt::zero(); basis.len()];
        for (t, c) in &self.coeffs {
            v[basis.index_of(t)?] += c;
        }
        Ok(v)
    }

    pub fn from_dense(shape: &GenPartition, v: &[BigInt]) -> PiResult<Self> {
        let basis = tabloid_module_basis(shape)?;
        if v.len() != basis.len() {
            return Err(PiError::DimensionMismatch { expected: basis.len(), found: v.len() });
        }
        let mut out = Self::zero(shape.clone());
        for (t, c) in basis.tabloids.iter().zip(v) {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let b = tabloid_module_basis(&GenPartition::new(vec![2, 1])).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.tabloids[0].rows, vec![vec![1, 2], vec![3]]);
        assert_eq!(b.tabloids[2].rows, vec![vec![2, 3], vec![1]]);
        assert_eq!(tabloid_module_basis(&GenPartition::new(vec![4])).unwrap().len(), 1);
        assert_eq!(tabloid_module_basis(&GenPartition::new(vec![1, 1])).unwrap().len(), 2);
        assert_eq!(tabloid_module_basis(&GenPartition::new(vec![2, 0, 2])).unwrap().len(), 6);
    }

    #[test]
    fn action_table_matches_act() {
        let b = tabloid_module_basis(&GenPartition::new(vec![2, 2])).unwrap();
        let s = Permutation::long_cycle(4);
        let table = b.action_table(&s);
        for (j, t) in b.tabloids.iter().enumerate() {
            assert_eq!(b.index_of(&t.act(&s)).unwrap(), table[j]);
        }
    }
}
