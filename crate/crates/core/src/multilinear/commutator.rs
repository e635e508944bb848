use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::poly::MultilinearPoly;
use crate::error::{PiError, PiResult};

/// `x_{p_1} … x_{p_k} · [b_1] [b_2] …` with left-normed brackets
/// `[a, b, c] = [[a, b], c]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CommutatorWord {
    pub prefix: Vec<usize>,
    pub factors: Vec<Vec<usize>>,
}

/// Signed words of the left-normed bracket on `labels`.
pub fn bracket_words(labels: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let mut terms = vec![(vec![labels[0]], 1i64)];
    for &a in &labels[1..] {
        let mut next = Vec::with_capacity(terms.len() * 2);
        for (w, c) in &terms {
            let mut right = w.clone();
            right.push(a);
            next.push((right, *c));
            let mut left = Vec::with_capacity(w.len() + 1);
            left.push(a);
            left.extend_from_slice(w);
            next.push((left, -c));
        }
        terms = next;
    }
    terms
}

/// Signed words of a product of left-normed brackets (no cancellation).
pub fn product_words(factors: &[Vec<usize>]) -> Vec<(Vec<usize>, i64)> {
    let mut terms = vec![(Vec::new(), 1i64)];
    for b in factors {
        let bw = bracket_words(b);
        let mut next = Vec::with_capacity(terms.len() * bw.len());
        for (w, c) in &terms {
            for (v, d) in &bw {
                let mut x = w.clone();
                x.extend_from_slice(v);
                next.push((x, c * d));
            }
        }
        terms = next;
    }
    terms
}

impl CommutatorWord {
    pub fn new(prefix: Vec<usize>, factors: Vec<Vec<usize>>) -> PiResult<Self> {
        let w = Self { prefix, factors };
        w.validate()?;
        Ok(w)
    }

    /// A single bracket with empty prefix.
    pub fn bracket(labels: &[usize]) -> PiResult<Self> {
        Self::new(Vec::new(), vec![labels.to_vec()])
    }

    pub fn degree(&self) -> usize {
        self.prefix.len() + self.factors.iter().map(Vec::len).sum::<usize>()
    }

    fn validate(&self) -> PiResult<()> {
        let n = self.degree();
        let bad = |why: &str| Err(PiError::MalformedCommutator(format!("{self}: {why}")));
        if self.prefix.windows(2).any(|w| w[0] >= w[1]) {
            return bad("prefix not strictly increasing");
        }
        if self.factors.iter().any(|b| b.len() < 2) {
            return bad("bracket of length < 2");
        }
        let mut seen = vec![false; n + 1];
        for &x in self.prefix.iter().chain(self.factors.iter().flatten()) {
            if x == 0 || x > n {
                return bad("variable index out of range");
            }
            if seen[x] {
                return bad("repeated variable");
            }
            seen[x] = true;
        }
        Ok(())
    }

    /// Full expansion into monomials.
    pub fn expand(&self) -> MultilinearPoly {
        let n = self.degree();
        let terms = product_words(&self.factors).into_iter().map(|(w, c)| {
            let mut word = self.prefix.clone();
            word.extend(w);
            (word, BigInt::from(c))
        });
        MultilinearPoly::from_words(n, terms)
    }
}

impl fmt::Display for CommutatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.prefix {
            write!(f, "x{x}")?;
        }
        for b in &self.factors {
            let inner: Vec<String> = b.iter().map(|x| format!("x{x}")).collect();
            write!(f, "[{}]", inner.join(","))?;
        }
        if self.prefix.is_empty() && self.factors.is_empty() {
            write!(f, "1")?;
        }
        Ok(())
    }
}
