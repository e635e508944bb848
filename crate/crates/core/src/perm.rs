//! Permutations of `{1..n}` in one-line notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PiError, PiResult};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PiError;
    fn try_from(word: Vec<usize>) -> PiResult<Self> {
        Self::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Permutation {
    /// `σ(i) = word[i-1]`; the word must be a bijection on `{1..n}`.
    pub fn new(word: Vec<usize>) -> PiResult<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(PiError::InvalidPermutation(format!("{word:?}")));
            }
            seen[x] = true;
        }
        Ok(Self { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        Self { word }
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n).collect() }
    }

    /// The transposition `(a b)`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut w: Vec<usize> = (1..=n).collect();
        w.swap(a - 1, b - 1);
        Self { word: w }
    }

    /// The long cycle `(1 2 … n)`.
    pub fn long_cycle(n: usize) -> Self {
        Self { word: (1..=n).map(|i| i % n + 1).collect() }
    }

    /// Generators `(1 2)` and `(1 2 … n)` of `S_n` (empty for `n ≤ 1`).
    pub fn generators(n: usize) -> Vec<Self> {
        match n {
            0 | 1 => Vec::new(),
            2 => vec![Self::transposition(2, 1, 2)],
            _ => vec![Self::transposition(n, 1, 2), Self::long_cycle(n)],
        }
    }

    /// A permutation with the given cycle type, cycles on consecutive integers.
    pub fn with_cycle_type(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut word = vec![0; n];
        let mut start = 0;
        for &len in parts {
            for k in 0..len {
                word[start + k] = start + (k + 1) % len + 1;
            }
            start += len;
        }
        Self { word }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self { word: other.word.iter().map(|&i| self.word[i - 1]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut w = vec![0; self.word.len()];
        for (i, &x) in self.word.iter().enumerate() {
            w[x - 1] = i + 1;
        }
        Self { word: w }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Cycle lengths in weakly decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.word.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.word[i] - 1;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycle_type().iter().filter(|&&l| l % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position in the lexicographic order of `S_n`.
    pub fn rank(&self) -> usize {
        rank_word(&self.word)
    }

    pub fn unrank(n: usize, mut r: usize) -> Self {
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial(i);
            word.push(avail.remove(r / f));
            r %= f;
        }
        Self { word }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        (0..factorial(n)).map(|r| Self::unrank(n, r)).collect()
    }
}

/// Lexicographic rank of a word that is a permutation of `1..=n`.
pub fn rank_word(word: &[usize]) -> usize {
    let n = word.len();
    let mut r = 0;
    let mut used = 0u64;
    for (i, &x) in word.iter().enumerate() {
        let smaller_unused = (1..x).filter(|&y| used & (1 << y) == 0).count();
        r += smaller_unused * factorial(n - 1 - i);
        used |= 1 << x;
    }
    r
}

/// For each lexicographic index `w` of `S_n`, the index of `σ∘w`.
pub fn left_action_table(sigma: &Permutation) -> Vec<usize> {
    let n = sigma.degree();
    Permutation::all(n).iter().map(|w| sigma.compose(w).rank()).collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            go(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One representative per conjugacy class of `S_n`, ordered as [`partitions_of`].
pub fn class_representatives(n: usize) -> Vec<Permutation> {
    partitions_of(n).iter().map(|p| Permutation::with_cycle_type(p)).collect()
}
