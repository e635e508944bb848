//! Rewriting of multilinear polynomials into the form
//! `Σ x_{i_1} … x_{i_k} · σ(g)` with `i_1 < … < i_k` and `g` proper.
//!
//! Terms are words of letters and left-normed brackets. The leftmost
//! offending adjacent pair is rewritten with
//! `y x = x y + [y, x]` (letters, `y > x`) and `c x = x c + [c, x]`
//! (bracket `c` followed by a letter) until every letter sits in an
//! increasing prefix followed only by brackets.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::commutator::product_words;
use super::poly::MultilinearPoly;
use super::proper::proper_basis;
use crate::error::{PiError, PiResult};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Factor {
    Letter(usize),
    Bracket(Vec<usize>),
}

/// One summand `x_{prefix} · σ(g)` of the decomposition; `g` has degree
/// `n - k` and is given both as a polynomial and by its coordinates in
/// `proper_basis(n - k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub prefix: Vec<usize>,
    pub sigma: Permutation,
    #[serde(with = "crate::json::serde_ints")]
    pub coords: Vec<BigInt>,
    pub proper_part: MultilinearPoly,
}

impl Component {
    /// `x_{prefix} · σ(proper_part)` as a degree-`n` polynomial.
    pub fn expand(&self) -> MultilinearPoly {
        let n = self.sigma.degree();
        let mut out = MultilinearPoly::zero(n);
        for (w, c) in self.proper_part.terms() {
            let mut word = self.prefix.clone();
            word.extend(w.word().iter().map(|&j| self.sigma.apply(j)));
            out.add_term(Permutation::from_word_unchecked(word), c.clone());
        }
        out
    }
}

fn violation(term: &[Factor]) -> Option<usize> {
    term.windows(2).position(|w| match (&w[0], &w[1]) {
        (Factor::Letter(y), Factor::Letter(x)) => y > x,
        (Factor::Bracket(_), Factor::Letter(_)) => true,
        _ => false,
    })
}

fn rewrite(term: &[Factor], i: usize) -> [Vec<Factor>; 2] {
    let (head, tail) = term.split_at(i);
    let (a, b) = (&tail[0], &tail[1]);
    let rest = &tail[2..];
    let Factor::Letter(x) = b else { unreachable!("violation ends in a letter") };
    let bracket = match a {
        Factor::Letter(y) => vec![*y, *x],
        Factor::Bracket(c) => {
            let mut c = c.clone();
            c.push(*x);
            c
        }
    };
    let swapped: Vec<Factor> = head.iter().cloned().chain([b.clone(), a.clone()]).chain(rest.iter().cloned()).collect();
    let merged: Vec<Factor> = head.iter().cloned().chain([Factor::Bracket(bracket)]).chain(rest.iter().cloned()).collect();
    [swapped, merged]
}

/// Rewrite `f` into normal words (increasing letters, then brackets).
fn normal_form(f: &MultilinearPoly) -> BTreeMap<Vec<Factor>, BigInt> {
    let mut pending: HashMap<Vec<Factor>, BigInt> = HashMap::new();
    for (w, c) in f.terms() {
        let term: Vec<Factor> = w.word().iter().map(|&x| Factor::Letter(x)).collect();
        *pending.entry(term).or_insert_with(BigInt::zero) += c;
    }
    let mut done: BTreeMap<Vec<Factor>, BigInt> = BTreeMap::new();
    while let Some(term) = pending.keys().next().cloned() {
        let c = pending.remove(&term).expect("present");
        if c.is_zero() {
            continue;
        }
        match violation(&term) {
            None => *done.entry(term).or_insert_with(BigInt::zero) += c,
            Some(i) => {
                for t in rewrite(&term, i) {
                    *pending.entry(t).or_insert_with(BigInt::zero) += &c;
                }
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

/// Decompose `f` along `P_n = ⊕ x_{i_1}…x_{i_k} σ_{i_1…i_k} Γ_{n-k}`.
/// Components are ordered by prefix; zero components are omitted.
pub fn decompose(f: &MultilinearPoly) -> PiResult<Vec<Component>> {
    let n = f.degree();
    let mut by_prefix: BTreeMap<Vec<usize>, Vec<(Vec<Vec<usize>>, BigInt)>> = BTreeMap::new();
    for (term, c) in normal_form(f) {
        let mut prefix = Vec::new();
        let mut brackets = Vec::new();
        for fct in term {
            match fct {
                Factor::Letter(x) => prefix.push(x),
                Factor::Bracket(b) => brackets.push(b),
            }
        }
        by_prefix.entry(prefix).or_default().push((brackets, c));
    }
    let mut out = Vec::new();
    for (prefix, terms) in by_prefix {
        let k = prefix.len();
        let complement: Vec<usize> = (1..=n).filter(|x| !prefix.contains(x)).collect();
        // relabel complement[j] ↦ j + 1
        let mut relabel = vec![0; n + 1];
        for (j, &x) in complement.iter().enumerate() {
            relabel[x] = j + 1;
        }
        let mut g = MultilinearPoly::zero(n - k);
        for (brackets, c) in terms {
            if brackets.is_empty() {
                g.add_term(Permutation::identity(0), c);
                continue;
            }
            for (w, s) in product_words(&brackets) {
                let word: Vec<usize> = w.iter().map(|&x| relabel[x]).collect();
                g.add_term(Permutation::from_word_unchecked(word), &c * s);
            }
        }
        if g.is_zero() {
            continue;
        }
        let basis = proper_basis(n - k);
        let coords = basis
            .coordinates(&g)?
            .ok_or_else(|| PiError::Precondition(format!("component at prefix {prefix:?} is not proper")))?;
        let mut word = complement.clone();
        word.extend(&prefix);
        out.push(Component { prefix, sigma: Permutation::from_word_unchecked(word), coords, proper_part: g });
    }
    Ok(out)
}

/// Sum of the expanded components.
pub fn recompose(n: usize, components: &[Component]) -> MultilinearPoly {
    components.iter().fold(MultilinearPoly::zero(n), |acc, c| &acc + &c.expand())
}
