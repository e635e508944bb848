use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matrix::IntMatrix;

/// Residue of `x` modulo the prime `p`.
pub fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat inverse; p is prime and a ≠ 0
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Row echelon basis of a subspace of `𝔽_p^n`, built incrementally.
#[derive(Debug, Clone)]
pub struct EchelonModP {
    p: u64,
    ncols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl EchelonModP {
    pub fn new(ncols: usize, p: u64) -> Self {
        Self { p, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    /// Reduce `v` against the basis; returns the multipliers used.
    fn reduce(&self, v: &mut [u64]) -> Vec<u64> {
        let mut coeffs = vec![0; self.rows.len()];
        for (i, (row, &c)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let x = v[c];
            if x == 0 {
                continue;
            }
            coeffs[i] = x;
            for k in c..self.ncols {
                if row[k] != 0 {
                    v[k] = (v[k] + self.p - self.mul(x, row[k])) % self.p;
                }
            }
        }
        coeffs
    }

    /// Insert `v` (entries already reduced mod p); returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[c], self.p);
        for x in v.iter_mut() {
            *x = self.mul(*x, inv);
        }
        // keep pivots sorted so reduction order is valid
        let pos = self.pivots.partition_point(|&q| q < c);
        self.rows.insert(pos, v);
        self.pivots.insert(pos, c);
        true
    }

    /// Coordinates of `v` in the basis rows, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        let mut v = v.to_vec();
        let coeffs = self.reduce(&mut v);
        v.iter().all(|&x| x == 0).then_some(coeffs)
    }
}

/// Rank of the rows over `𝔽_p`.
pub fn rank_mod_p(rows: &[Vec<BigInt>], ncols: usize, p: u64) -> usize {
    let mut e = EchelonModP::new(ncols, p);
    for r in rows {
        e.insert(r.iter().map(|x| residue(x, p)).collect());
    }
    e.rank()
}

/// Rank over `ℚ` (`p = 0`) or over the prime field `𝔽_p`.
pub fn field_rank(m: &IntMatrix, p: u64) -> usize {
    if p == 0 {
        m.hnf().nrows()
    } else {
        rank_mod_p(m.rows(), m.ncols(), p)
    }
}
