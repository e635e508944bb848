use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{PiError, PiResult};
use crate::perm::{factorial, rank_word, Permutation};

/// An element of `P_n(ℤ)`: integer coefficients on the monomials
/// `x_{σ(1)} … x_{σ(n)}`, keyed by `σ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultilinearPoly {
    degree: usize,
    coeffs: BTreeMap<Permutation, BigInt>,
}

impl MultilinearPoly {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coeffs: BTreeMap::new() }
    }

    pub fn monomial(sigma: Permutation) -> Self {
        let degree = sigma.degree();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(sigma, BigInt::one());
        Self { degree, coeffs }
    }

    /// The constant `c` in degree 0.
    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero(0);
        p.add_term(Permutation::identity(0), c);
        p
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> PiResult<Self>
    where
        I: IntoIterator<Item = (Permutation, BigInt)>,
    {
        let mut p = Self::zero(degree);
        for (s, c) in terms {
            if s.degree() != degree {
                return Err(PiError::DimensionMismatch { expected: degree, found: s.degree() });
            }
            p.add_term(s, c);
        }
        Ok(p)
    }

    /// Build from words over `1..=degree`; panics on invalid words.
    pub(crate) fn from_words<I>(degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<usize>, BigInt)>,
    {
        let mut p = Self::zero(degree);
        for (w, c) in terms {
            debug_assert_eq!(w.len(), degree);
            p.add_term(Permutation::from_word_unchecked(w), c);
        }
        p
    }

    pub fn add_term(&mut self, sigma: Permutation, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(sigma) {
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

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, sigma: &Permutation) -> BigInt {
        self.coeffs.get(sigma).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.degree);
        }
        Self { degree: self.degree, coeffs: self.coeffs.iter().map(|(s, c)| (s.clone(), c * k)).collect() }
    }

    fn check_degree(&self, other: &Self) -> PiResult<()> {
        if self.degree != other.degree {
            return Err(PiError::DimensionMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> PiResult<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    /// Rename `x_i` to `x_{σ(i)}` in every monomial.
    pub fn act(&self, sigma: &Permutation) -> PiResult<Self> {
        if sigma.degree() != self.degree {
            return Err(PiError::DimensionMismatch { expected: self.degree, found: sigma.degree() });
        }
        Ok(Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(w, c)| (sigma.compose(w), c.clone())).collect(),
        })
    }

    /// Coefficient vector indexed by the lexicographic rank of `σ`.
    pub fn to_dense(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); factorial(self.degree)];
        for (s, c) in &self.coeffs {
            v[rank_word(s.word())] = c.clone();
        }
        v
    }

    pub fn from_dense(degree: usize, v: &[BigInt]) -> PiResult<Self> {
        if v.len() != factorial(degree) {
            return Err(PiError::DimensionMismatch { expected: factorial(degree), found: v.len() });
        }
        let mut p = Self::zero(degree);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                p.coeffs.insert(Permutation::unrank(degree, i), c.clone());
            }
        }
        Ok(p)
    }

    /// Product `self · other` where `other`'s variables are shifted past ours:
    /// the result has degree `deg self + deg other` and `other`'s `x_j`
    /// becomes `x_{deg self + j}`.
    pub fn concat_shifted(&self, other: &Self) -> Self {
        let d = self.degree;
        let mut out = Self::zero(d + other.degree);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let mut w = a.word().to_vec();
                w.extend(b.word().iter().map(|x| x + d));
                out.add_term(Permutation::from_word_unchecked(w), ca * cb);
            }
        }
        out
    }
}

impl Add for &MultilinearPoly {
    type Output = MultilinearPoly;
    fn add(self, rhs: Self) -> MultilinearPoly {
        self.try_add(rhs).expect("degree mismatch in addition")
    }
}

impl Neg for &MultilinearPoly {
    type Output = MultilinearPoly;
    fn neg(self) -> MultilinearPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for &MultilinearPoly {
    type Output = MultilinearPoly;
    fn sub(self, rhs: Self) -> MultilinearPoly {
        self + &(-rhs)
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.coeffs.iter().enumerate() {
            let mono: String = if s.degree() == 0 { String::new() } else { s.word().iter().map(|x| format!("x{x}")).collect() };
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn monomials_add_up() {
        let m = MultilinearPoly::monomial(p(&[1, 2, 3]));
        let two = &m + &m;
        assert_eq!(two.coeff(&p(&[1, 2, 3])), BigInt::from(2));
        assert!((&m - &m).is_zero());
    }

    #[test]
    fn transposition_renames() {
        let m = MultilinearPoly::monomial(p(&[1, 2]));
        let t = m.act(&p(&[2, 1])).unwrap();
        assert_eq!(t, MultilinearPoly::monomial(p(&[2, 1])));
        assert!(m.act(&p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn dense_roundtrip_and_display() {
        let f = &MultilinearPoly::monomial(p(&[1, 2])) - &MultilinearPoly::monomial(p(&[2, 1]));
        assert_eq!(f.to_string(), "x1x2 - x2x1");
        let back = MultilinearPoly::from_dense(2, &f.to_dense()).unwrap();
        assert_eq!(back, f);
    }
}
