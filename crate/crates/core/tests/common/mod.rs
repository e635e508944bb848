//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use pi_lattice::{MultilinearPoly, Permutation};

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn bigs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Polynomial from `(word, coefficient)` pairs.
pub fn poly(n: usize, terms: &[(&[usize], i64)]) -> MultilinearPoly {
    MultilinearPoly::from_terms(n, terms.iter().map(|(w, c)| (Permutation::new(w.to_vec()).unwrap(), big(*c)))).unwrap()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Canonical row Hermite form by plain Euclidean elimination: positive
/// pivots, entries above a pivot in `[0, pivot)`, zero rows dropped.
pub fn hnf_oracle(rows: &[Vec<i128>], ncols: usize) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| m[i][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, best);
            if m[r][c] < 0 {
                for x in m[r].iter_mut() {
                    *x = -*x;
                }
            }
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c] != 0 {
                    let q = Integer::div_floor(&m[i][c], &m[r][c]);
                    let pivot_row = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                    if m[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                for i in 0..r {
                    let q = Integer::div_floor(&m[i][c], &m[r][c]);
                    let pivot_row = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                }
                r += 1;
                break;
            }
        }
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Smith invariants from determinantal divisors `d_k = gcd of k×k minors`.
pub fn snf_oracle(m: &[Vec<i128>], ncols: usize) -> Vec<i128> {
    let mut divisors = vec![1i128];
    for k in 1..=m.len().min(ncols) {
        let mut g = 0i128;
        for rs in subsets(m.len(), k) {
            for cs in subsets(ncols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| w[1] / w[0]).collect()
}

/// `n! / ∏ hooks`.
pub fn hook_length(parts: &[usize]) -> usize {
    let conj: Vec<usize> = (0..parts.first().copied().unwrap_or(0)).map(|j| parts.iter().filter(|&&p| p > j).count()).collect();
    let mut prod = 1usize;
    for (i, &p) in parts.iter().enumerate() {
        for (j, &c) in conj.iter().enumerate().take(p) {
            prod *= (p - j - 1) + (c - i - 1) + 1;
        }
    }
    factorial(parts.iter().sum()) / prod
}

/// Irreducible character `χ^λ` at cycle type `rho` by border-strip removal
/// on beta numbers.
pub fn mn_character(lambda: &[usize], rho: &[usize]) -> i64 {
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    mn_beta(&beta, rho)
}

fn mn_beta(beta: &[usize], rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.to_vec();
        next[i] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(&next, rest);
    }
    total
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Deterministic proptest configuration.
pub fn seeded(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x9e37_79b9),
        failure_persistence: None,
        ..proptest::test_runner::Config::default()
    }
}

/// Generators shared by the property suites.
pub mod strategies {
    use super::{big, factorial};
    use num_bigint::BigInt;
    use pi_lattice::multilinear::proper_basis;
    use pi_lattice::specht::{compositions, GenPartition, Tabloid, TabloidVector};
    use pi_lattice::{MultilinearPoly, Permutation};
    use proptest::prelude::*;

    pub fn perm(n: usize) -> impl Strategy<Value = Permutation> {
        (0..factorial(n)).prop_map(move |r| Permutation::unrank(n, r))
    }

    pub fn poly(n: usize) -> impl Strategy<Value = MultilinearPoly> {
        prop::collection::vec((0..factorial(n), -6i64..=6), 1..8).prop_map(move |terms| {
            MultilinearPoly::from_terms(n, terms.into_iter().map(|(r, c)| (Permutation::unrank(n, r), big(c)))).unwrap()
        })
    }

    pub fn sized_poly(max: usize) -> impl Strategy<Value = MultilinearPoly> {
        (1..=max).prop_flat_map(poly)
    }

    pub fn proper_element(n: usize) -> impl Strategy<Value = (MultilinearPoly, Permutation)> {
        let k = proper_basis(n).len();
        (prop::collection::vec(-4i64..=4, k), perm(n))
            .prop_map(move |(c, s)| (proper_basis(n).combine(&c.into_iter().map(BigInt::from).collect::<Vec<_>>()), s))
    }

    /// A shape, a row index with a row below it, a kept count, a vector and a permutation.
    pub fn psi_case() -> impl Strategy<Value = (GenPartition, usize, usize, TabloidVector, Permutation)> {
        (2usize..=6)
            .prop_flat_map(|n| (Just(n), prop::sample::select(compositions(n).into_iter().filter(|c| c.len() >= 2).collect::<Vec<_>>())))
            .prop_flat_map(|(n, mu)| {
                let rows = mu.len();
                (Just(n), Just(mu), 1..rows)
            })
            .prop_flat_map(|(n, mu, i)| {
                let below = mu[i];
                (Just(n), Just(mu), Just(i), 0..=below, prop::collection::vec((0..factorial(n), -3i64..=3), 1..5), perm(n))
            })
            .prop_map(|(n, mu, i, v, terms, s)| {
                let shape = GenPartition::new(mu.clone());
                let mut x = TabloidVector::zero(shape.clone());
                for (r, c) in terms {
                    // the tabloid of the r-th filling
                    let w = Permutation::unrank(n, r);
                    let mut rows = Vec::new();
                    let mut k = 0;
                    for &len in &mu {
                        let mut row: Vec<usize> = w.word()[k..k + len].to_vec();
                        row.sort_unstable();
                        rows.push(row);
                        k += len;
                    }
                    x.add_term(Tabloid { rows }, big(c));
                }
                (shape, i, v, x, s)
            })
    }
}
