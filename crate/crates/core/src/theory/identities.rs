//! Known identity bases and the lattice of their multilinear consequences.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::PiResult;
use crate::lattice::{HnfBuilder, SubmoduleLattice};
use crate::multilinear::{CommutatorWord, MultilinearPoly};
use crate::perm::{factorial, rank_word, Permutation};

fn product(factors: &[&[usize]]) -> MultilinearPoly {
    CommutatorWord::new(Vec::new(), factors.iter().map(|f| f.to_vec()).collect())
        .expect("well-formed bracket product")
        .expand()
}

fn scaled_variable(k: u64) -> MultilinearPoly {
    MultilinearPoly::monomial(Permutation::identity(1)).scale(&BigInt::from(k))
}

/// `[x_1,x_2][x_3,x_4]`, `ℓ x_1` and `m [x_1,x_2]`; zero polynomials are dropped.
pub fn ut2_identities(ell: u64, m: u64) -> Vec<(String, MultilinearPoly)> {
    let mut out = vec![("[x1,x2][x3,x4]".to_string(), product(&[&[1, 2], &[3, 4]]))];
    if ell > 0 {
        out.push((format!("{ell}*x1"), scaled_variable(ell)));
    }
    if m > 0 {
        out.push((format!("{m}*[x1,x2]"), product(&[&[1, 2]]).scale(&BigInt::from(m))));
    }
    out
}

/// `[x_1,x_2,x_3]`, `[x_2,x_1][x_3,x_4] + [x_2,x_3][x_1,x_4]` and `ℓ x_1`.
pub fn grassmann_identities(ell: u64) -> Vec<(String, MultilinearPoly)> {
    let mixed = &product(&[&[2, 1], &[3, 4]]) + &product(&[&[2, 3], &[1, 4]]);
    let mut out = vec![
        ("[x1,x2,x3]".to_string(), product(&[&[1, 2, 3]])),
        ("[x2,x1][x3,x4]+[x2,x3][x1,x4]".to_string(), mixed),
    ];
    if ell > 0 {
        out.push((format!("{ell}*x1"), scaled_variable(ell)));
    }
    out
}

/// Dense coordinates of `u · f(w_1, …, w_k) · v` where `u`, the `w_i` and
/// `v` are consecutive pieces of `word`, cut at `cuts = [c_0, …, c_k]`.
fn substitute(f: &MultilinearPoly, word: &[usize], cuts: &[usize]) -> Vec<BigInt> {
    let n = word.len();
    let k = f.degree();
    let mut v = vec![BigInt::zero(); factorial(n)];
    for (sigma, c) in f.terms() {
        let mut w = word[..cuts[0]].to_vec();
        for &j in sigma.word() {
            w.extend_from_slice(&word[cuts[j - 1]..cuts[j]]);
        }
        w.extend_from_slice(&word[cuts[k]..]);
        v[rank_word(&w)] += c;
    }
    v
}

/// Increasing cut sequences `c_0 < c_1 < … < c_k ≤ n` (`c_0` may be 0).
fn cut_sequences(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k + 1 {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().map_or(0, |&c| c + 1);
        let remaining = k + 1 - cur.len() - 1;
        for c in lo..=n.saturating_sub(remaining) {
            cur.push(c);
            go(n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// The multilinear part of degree `n` of the two-sided ideal closed under
/// substitutions generated by `identities`, i.e. the span of all
/// `u · f(w_1, …, w_k) · v` with monomials `u, w_i, v` in disjoint variables.
pub fn consequence_lattice(identities: &[MultilinearPoly], n: usize) -> PiResult<SubmoduleLattice<BigInt>> {
    let mut b = HnfBuilder::new(factorial(n));
    let words: Vec<Permutation> = Permutation::all(n);
    for f in identities.iter().filter(|f| !f.is_zero() && f.degree() <= n && f.degree() > 0) {
        let cuts = cut_sequences(n, f.degree());
        for w in &words {
            for c in &cuts {
                b.insert(substitute(f, w.word(), c))?;
            }
        }
    }
    Ok(b.finish()?)
}
