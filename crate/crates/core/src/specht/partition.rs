use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{PiError, PiResult};
use crate::perm::partitions_of;

/// A partition `λ ⊢ n`: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PiError;
    fn try_from(parts: Vec<usize>) -> PiResult<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Trailing zeros are dropped; other parts must be weakly decreasing
    /// and positive.
    pub fn new(mut parts: Vec<usize>) -> PiResult<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PiError::InvalidPartition(format!("{parts:?} is not weakly decreasing and positive")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Self { parts }
    }

    /// Hook lengths row by row.
    pub fn hooks(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j - 1) + (conj.parts[j] - i - 1) + 1).collect())
            .collect()
    }

    /// `n! / ∏ hooks`, the number of standard tableaux.
    pub fn hook_number(&self) -> BigInt {
        let mut num: BigInt = (1..=self.size()).map(BigInt::from).product();
        for h in self.hooks().iter().flatten() {
            num /= BigInt::from(*h);
        }
        num
    }

    /// Hook shape `(n−k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Self {
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Self::new(parts).expect("hook shape")
    }

    /// All partitions of `n`, `(n)` first.
    pub fn all(n: usize) -> Vec<Self> {
        partitions_of(n).into_iter().map(|parts| Self { parts }).collect()
    }

    pub fn as_gen(&self) -> GenPartition {
        GenPartition { parts: self.parts.clone() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A composition `μ ⊨ n`; order matters. Rows of size zero may occur in the
/// middle (they arise from the raising operator); trailing zeros are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct GenPartition {
    parts: Vec<usize>,
}

impl From<Vec<usize>> for GenPartition {
    fn from(parts: Vec<usize>) -> Self {
        Self::new(parts)
    }
}

impl From<GenPartition> for Vec<usize> {
    fn from(p: GenPartition) -> Self {
        p.parts
    }
}

impl GenPartition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `μ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Number of tabloids, `n! / ∏ μ_i!`.
    pub fn multinomial(&self) -> BigInt {
        let fact = |k: usize| -> BigInt { (1..=k).map(BigInt::from).product::<BigInt>().max(BigInt::one()) };
        let mut num = fact(self.size());
        for &p in &self.parts {
            num /= fact(p);
        }
        num
    }
}

impl fmt::Display for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A pair `(λ; μ)` with `λ_i ≤ μ_i` and `λ_1 = μ_1`, where `λ` is a
/// partition of some `n' ≤ n = |μ|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionPair {
    pub lambda: Partition,
    pub mu: GenPartition,
}

impl PartitionPair {
    pub fn new(lambda: Partition, mu: GenPartition) -> PiResult<Self> {
        if lambda.len() > mu.len() || (1..=mu.len()).any(|i| lambda.part(i) > mu.part(i)) {
            return Err(PiError::InvalidPair(format!("{lambda} does not fit inside {mu}")));
        }
        if mu.is_empty() || lambda.part(1) != mu.part(1) {
            return Err(PiError::InvalidPair(format!("first rows of {lambda} and {mu} differ")));
        }
        Ok(Self { lambda, mu })
    }

    pub fn from_parts(lambda: &[usize], mu: &[usize]) -> PiResult<Self> {
        Self::new(Partition::new(lambda.to_vec())?, GenPartition::new(mu.to_vec()))
    }

    pub fn specht(lambda: &Partition) -> Self {
        Self { lambda: lambda.clone(), mu: lambda.as_gen() }
    }

    pub fn n(&self) -> usize {
        self.mu.size()
    }

    pub fn is_specht(&self) -> bool {
        self.lambda.parts() == self.mu.parts()
    }

    /// Minimal `c ≥ 2` with `λ_i = μ_i` for `i < c` and `λ_c < μ_c`.
    pub fn first_gap(&self) -> Option<usize> {
        (2..=self.mu.len()).find(|&c| self.lambda.part(c) < self.mu.part(c))
    }

    /// Every valid pair with `|μ| = n`, over all compositions `μ` of `n`
    /// (zero rows excluded) and all admissible `λ`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for mu in compositions(n) {
            let mut lam = vec![mu[0]];
            fill_lambda(&mu, 1, &mut lam, &mut out);
        }
        out.sort();
        out
    }
}

fn fill_lambda(mu: &[usize], i: usize, lam: &mut Vec<usize>, out: &mut Vec<PartitionPair>) {
    if i == mu.len() {
        let pair = PartitionPair::new(Partition::new(lam.clone()).expect("decreasing"), GenPartition::new(mu.to_vec()));
        out.push(pair.expect("admissible"));
        return;
    }
    for v in 0..=mu[i].min(lam[i - 1]) {
        lam.push(v);
        fill_lambda(mu, i + 1, lam, out);
        lam.pop();
    }
}

/// Compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.lambda, self.mu)
    }
}
