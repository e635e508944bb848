//! Evaluation of multilinear polynomials on ring models.
//!
//! The kernel of the evaluation map `P_n(ℤ) → ∏ R` is cut out by one
//! congruence per (substitution, coordinate). Substituting generators is
//! enough by multilinearity, and renaming variables permutes the columns of
//! the evaluation matrix, so only one substitution per multiset of
//! generators is evaluated; the relation lattices are then closed under
//! `S_n` acting on the columns.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::model::{RingElement, RingModel};
use crate::error::{exact, PiError, PiResult};
use crate::lattice::{RelationAccumulator, RelationLattices};
use crate::multilinear::MultilinearPoly;
use crate::perm::{factorial, left_action_table, Permutation};
use crate::scalar::{lift, lift_vec, Checked, Scalar};

/// Default number of generator multisets one computation may evaluate.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// `Σ_σ coeff(σ)·a_{σ(1)}⋯a_{σ(n)}`.
pub fn evaluate(f: &MultilinearPoly, args: &[RingElement]) -> PiResult<RingElement> {
    if args.len() != f.degree() {
        return Err(PiError::DimensionMismatch { expected: f.degree(), found: args.len() });
    }
    let model = match args.first() {
        Some(a) => a.model().clone(),
        None => return Err(PiError::Precondition("degree-0 evaluation needs a ring; use evaluate_in".into())),
    };
    evaluate_in(&model, f, args)
}

/// [`evaluate`] with an explicit model, which also covers constants.
pub fn evaluate_in(model: &Arc<RingModel>, f: &MultilinearPoly, args: &[RingElement]) -> PiResult<RingElement> {
    if args.len() != f.degree() {
        return Err(PiError::DimensionMismatch { expected: f.degree(), found: args.len() });
    }
    if args.iter().any(|a| a.model() != model) {
        return Err(PiError::ModelMismatch);
    }
    let mut acc = RingElement::zero(model);
    for (sigma, c) in f.terms() {
        let mut term = match model.unit() {
            Some(u) => model.element(u.to_vec())?,
            None if f.degree() > 0 => args[sigma.apply(1) - 1].clone(),
            None => return Err(PiError::NotUnital),
        };
        let skip = usize::from(model.unit().is_none());
        for &i in &sigma.word()[skip..] {
            term = term.mul(&args[i - 1])?;
        }
        acc = acc.add(&term.scale(c))?;
    }
    Ok(acc)
}

/// Whether `f` vanishes on every tuple of generators.
pub fn is_identity(model: &RingModel, f: &MultilinearPoly) -> PiResult<bool> {
    let n = f.degree();
    let model = Arc::new(model.clone());
    let gens: Vec<RingElement> = (0..model.generators().len()).map(|i| model.generator(i)).collect();
    let mut tuple = vec![0usize; n];
    loop {
        let args: Vec<RingElement> = tuple.iter().map(|&i| gens[i].clone()).collect();
        if !evaluate_in(&model, f, &args)?.is_zero() {
            return Ok(false);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return Ok(true);
            }
            tuple[i] += 1;
            if tuple[i] < gens.len() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// Binomial coefficient saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of multisets of size `n` drawn from `g` generators.
pub fn multiset_count(g: usize, n: usize) -> u64 {
    if g == 0 {
        return u64::from(n == 0);
    }
    binomial((g + n - 1) as u64, n as u64)
}

/// Which generators enter the substitutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorFilter {
    All,
    /// Skip central generators: every proper polynomial vanishes as soon as
    /// one argument is central.
    NonCentral,
}

#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    pub budget: u64,
    pub filter: GeneratorFilter,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, filter: GeneratorFilter::All }
    }
}

pub fn selected_generators(model: &RingModel, filter: GeneratorFilter) -> Vec<Vec<BigInt>> {
    model
        .generators()
        .iter()
        .filter(|g| filter == GeneratorFilter::All || !model.is_central(g))
        .cloned()
        .collect()
}

fn multisets(g: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, g: usize, cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..g {
            cur.push(i);
            go(i, g, cur, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, g, &mut Vec::new(), n, &mut out);
    out
}

/// Structure constants prepared for repeated right multiplication.
struct Prepared<T> {
    rank: usize,
    moduli: Vec<T>,
    gens: Vec<Vec<T>>,
    // right[g][i]: (k, c) with e_i · gen_g = Σ c e_k
    right: Vec<Vec<Vec<(usize, T)>>>,
}

impl<T: Scalar> Prepared<T> {
    fn new(model: &RingModel, gens: &[Vec<BigInt>]) -> Checked<Self> {
        let r = model.rank();
        let table = model.sparse_table();
        let mut right = Vec::with_capacity(gens.len());
        for g in gens {
            let mut per_i = Vec::with_capacity(r);
            for row in table.iter().take(r) {
                let mut acc = vec![BigInt::zero(); r];
                for (j, gj) in g.iter().enumerate() {
                    if gj.is_zero() {
                        continue;
                    }
                    for (k, c) in &row[j] {
                        acc[*k] += gj * c;
                    }
                }
                let mut list = Vec::new();
                for (k, x) in acc.iter().enumerate() {
                    let x = super::model::reduce(x, &model.moduli()[k]);
                    if !x.is_zero() {
                        list.push((k, lift::<T>(&x)?));
                    }
                }
                per_i.push(list);
            }
            right.push(per_i);
        }
        Ok(Self {
            rank: r,
            moduli: lift_vec(model.moduli())?,
            gens: gens.iter().map(|g| lift_vec(g)).collect::<Checked<_>>()?,
            right,
        })
    }

    fn mul_right(&self, a: &[T], g: usize, out: &mut [T]) -> Checked<()> {
        for x in out.iter_mut() {
            *x = T::zero();
        }
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (k, c) in &self.right[g][i] {
                out[*k] = out[*k].fma_c(ai, c)?;
            }
        }
        for (x, m) in out.iter_mut().zip(&self.moduli) {
            if !m.is_zero() && !x.is_zero() {
                *x = x.rem_euclid_c(m);
            }
        }
        Ok(())
    }

    /// Values of all `n!` monomials (lexicographic order) at the
    /// substitution `x_i ↦ gen[tuple[i]]`; only nonzero leaves are returned.
    fn monomial_values(&self, tuple: &[usize]) -> Checked<Vec<(usize, Vec<T>)>> {
        let n = tuple.len();
        let mut leaves = Vec::new();
        let mut stack: Vec<Vec<T>> = vec![vec![T::zero(); self.rank]; n + 1];
        let mut counter = 0usize;
        self.dfs(tuple, 0, 0u64, &mut stack, &mut counter, &mut leaves)?;
        Ok(leaves)
    }

    fn dfs(
        &self,
        tuple: &[usize],
        depth: usize,
        used: u64,
        stack: &mut Vec<Vec<T>>,
        counter: &mut usize,
        leaves: &mut Vec<(usize, Vec<T>)>,
    ) -> Checked<()> {
        let n = tuple.len();
        if depth == n {
            leaves.push((*counter, stack[n].clone()));
            *counter += 1;
            return Ok(());
        }
        for v in 0..n {
            if used & (1 << v) != 0 {
                continue;
            }
            let g = tuple[v];
            if depth == 0 {
                stack[1].clone_from(&self.gens[g]);
            } else {
                let (head, tail) = stack.split_at_mut(depth + 1);
                self.mul_right(&head[depth], g, &mut tail[0])?;
            }
            if stack[depth + 1].iter().all(Zero::is_zero) {
                *counter += factorial(n - depth - 1);
                continue;
            }
            self.dfs(tuple, depth + 1, used | (1 << v), stack, counter, leaves)?;
        }
        Ok(())
    }

    /// Relation rows (one per coordinate with a nonzero entry), tagged with
    /// the index of their modulus.
    fn rows(&self, tuple: &[usize], ncols: usize) -> Checked<Vec<(usize, Vec<T>)>> {
        let leaves = self.monomial_values(tuple)?;
        let mut out: Vec<(usize, Vec<T>)> = Vec::new();
        let mut slot: Vec<Option<usize>> = vec![None; self.rank];
        for (col, val) in &leaves {
            for (k, x) in val.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let s = *slot[k].get_or_insert_with(|| {
                    out.push((k, vec![T::zero(); ncols]));
                    out.len() - 1
                });
                out[s].1[*col] = x.clone();
            }
        }
        for (k, row) in out.iter_mut() {
            if self.moduli[*k].is_zero() {
                if let Some(first) = row.iter().find(|x| !x.is_zero()) {
                    if first.is_negative() {
                        for x in row.iter_mut() {
                            *x = x.neg_c()?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

fn relations_with<T: Scalar>(
    model: &RingModel,
    gens: &[Vec<BigInt>],
    n: usize,
    tuples: &[Vec<usize>],
) -> PiResult<RelationLattices<BigInt>> {
    let ncols = factorial(n);
    let prep = Prepared::<T>::new(model, gens)?;
    let moduli = model.moduli();
    let fresh = || RelationAccumulator::<T>::new(ncols, moduli);
    let acc = tuples
        .par_chunks(2048)
        .map(|chunk| -> PiResult<RelationAccumulator<T>> {
            let mut acc = fresh()?;
            let mut seen: HashSet<(usize, Vec<T>)> = HashSet::new();
            for t in chunk {
                for (k, row) in prep.rows(t, ncols)? {
                    let m = &moduli[k];
                    // rows with equal moduli and entries give equal constraints
                    let key = (if m.is_zero() { usize::MAX } else { k }, row);
                    if seen.contains(&key) {
                        continue;
                    }
                    acc.add_row(&key.1, m)?;
                    seen.insert(key);
                }
            }
            Ok(acc)
        })
        .try_reduce(
            || fresh().expect("moduli lift when the chunks do"),
            |mut a, b| {
                a.merge(b)?;
                Ok(a)
            },
        )?;
    let mut acc = acc;
    let perms: Vec<Vec<usize>> = Permutation::generators(n).iter().map(left_action_table).collect();
    acc.close_under(&perms)?;
    Ok(acc.finish()?.to_big())
}

/// Relation lattices of the evaluation map `P_n(ℤ) → R` over all
/// substitutions of (selected) generators. The budget bounds the number of
/// generator multisets.
pub fn evaluation_relations(model: &RingModel, n: usize, opts: EvalOptions) -> PiResult<RelationLattices<BigInt>> {
    if n > 8 {
        return Err(PiError::Precondition(format!("degree {n} is beyond the supported range")));
    }
    let gens = selected_generators(model, opts.filter);
    let needed = multiset_count(gens.len(), n);
    if needed > opts.budget {
        return Err(PiError::ResourceExceeded { budget: opts.budget, needed });
    }
    let tuples = multisets(gens.len(), n);
    exact(|| relations_with::<i64>(model, &gens, n, &tuples), || relations_with::<BigInt>(model, &gens, n, &tuples))
}

/// Dense evaluation rows over every tuple of generators (not only sorted
/// ones), deduplicated, with their moduli. Intended for small cases; the
/// budget bounds the number of tuples.
pub fn evaluation_rows(model: &RingModel, n: usize, budget: u64) -> PiResult<(Vec<Vec<BigInt>>, Vec<BigInt>)> {
    let g = model.generators().len();
    let needed = (g as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if needed > budget {
        return Err(PiError::ResourceExceeded { budget, needed });
    }
    let ncols = factorial(n);
    let prep = Prepared::<BigInt>::new(model, model.generators())?;
    let mut seen = HashSet::new();
    let (mut rows, mut moduli) = (Vec::new(), Vec::new());
    let mut tuple = vec![0usize; n];
    'outer: loop {
        for (k, row) in prep.rows(&tuple, ncols)? {
            let m = model.moduli()[k].clone();
            if seen.insert((m.clone(), row.clone())) {
                rows.push(row);
                moduli.push(m);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'outer;
            }
            tuple[i] += 1;
            if tuple[i] < g {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
    Ok((rows, moduli))
}
