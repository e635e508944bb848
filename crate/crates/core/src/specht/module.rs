use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::partition::{GenPartition, Partition, PartitionPair};
use super::tabloid::{tabloid_module_basis, Tabloid, TabloidBasis, TabloidVector};
use crate::error::{exact, PiError, PiResult};
use crate::lattice::relations::permute_coords;
use crate::lattice::{lattice_quotient_invariants, AbelianInvariants, HnfBuilder, SubmoduleLattice};
use crate::perm::Permutation;
use crate::scalar::{lift_vec, small, Checked, Scalar};

/// A filling of a composition diagram; `rows[i]` lists the entries of row
/// `i` from left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Entries `1..=n` written row by row.
    pub fn initial(shape: &GenPartition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let r: Vec<usize> = (next + 1..=next + p).collect();
                next += p;
                r
            })
            .collect();
        Self { rows }
    }

    pub fn shape(&self) -> GenPartition {
        GenPartition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn act(&self, sigma: &Permutation) -> Self {
        Self { rows: self.rows.iter().map(|r| r.iter().map(|&e| sigma.apply(e)).collect()).collect() }
    }

    /// All fillings of `shape`.
    pub fn all(shape: &GenPartition) -> Vec<Self> {
        let t0 = Self::initial(shape);
        Permutation::all(shape.size()).iter().map(|s| t0.act(s)).collect()
    }

    /// Fillings increasing along rows and down columns.
    pub fn standard(shape: &GenPartition) -> Vec<Self> {
        Self::all(shape)
            .into_iter()
            .filter(|t| {
                let rows_ok = t.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
                let cols_ok = t.rows.windows(2).all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a < b));
                rows_ok && cols_ok
            })
            .collect()
    }

    fn row_of(&self) -> Vec<u8> {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        let mut out = vec![0u8; n];
        for (i, r) in self.rows.iter().enumerate() {
            for &e in r {
                out[e - 1] = i as u8;
            }
        }
        out
    }
}

fn check_shape(pair: &PartitionPair, t: &Tableau) -> PiResult<()> {
    if t.shape() != pair.mu {
        return Err(PiError::InvalidPair(format!("tableau shape {} does not match {}", t.shape(), pair.mu)));
    }
    let mut seen: Vec<usize> = t.rows.iter().flatten().copied().collect();
    seen.sort_unstable();
    if seen != (1..=pair.n()).collect::<Vec<_>>() {
        return Err(PiError::InvalidPermutation(format!("tableau entries must be 1..={}", pair.n())));
    }
    Ok(())
}

/// Heap's algorithm over all orderings of `items`, with signs.
fn signed_arrangements(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    for p in Permutation::all(items.len()) {
        out.push((p.word().iter().map(|&i| items[i - 1]).collect(), p.sign()));
    }
    out
}

/// Dense coordinates of `e^{λ,μ}_T` in `M(μ)`.
fn polytabloid_dense<T: Scalar>(pair: &PartitionPair, t: &Tableau, basis: &TabloidBasis) -> Checked<Vec<T>> {
    let lambda = &pair.lambda;
    // columns of the λ-subtableau: (rows, entries)
    let width = lambda.part(1);
    let cols: Vec<(Vec<usize>, Vec<usize>)> = (0..width)
        .map(|j| {
            let rows: Vec<usize> = (0..lambda.len()).filter(|&i| lambda.parts()[i] > j).collect();
            let entries = rows.iter().map(|&i| t.rows[i][j]).collect();
            (rows, entries)
        })
        .collect();
    let per_col: Vec<Vec<(Vec<usize>, i64)>> = cols.iter().map(|(_, e)| signed_arrangements(e)).collect();
    let base = t.row_of();
    let mut out = vec![T::zero(); basis.len()];
    let mut choice = vec![0usize; cols.len()];
    loop {
        let mut ro = base.clone();
        let mut sign = 1;
        for (j, (rows, _)) in cols.iter().enumerate() {
            let (arr, s) = &per_col[j][choice[j]];
            sign *= s;
            for (&r, &e) in rows.iter().zip(arr) {
                ro[e - 1] = r as u8;
            }
        }
        let idx = basis.index_of_rows(&ro);
        out[idx] = out[idx].add_c(&small(sign)?)?;
        let mut j = 0;
        loop {
            if j == cols.len() {
                return Ok(out);
            }
            choice[j] += 1;
            if choice[j] < per_col[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

/// `e^{λ,μ}_T`: signed sum over the column group of the `λ`-part of `T`.
pub fn polytabloid(pair: &PartitionPair, t: &Tableau) -> PiResult<TabloidVector> {
    check_shape(pair, t)?;
    let basis = tabloid_module_basis(&pair.mu)?;
    let dense = polytabloid_dense::<BigInt>(pair, t, &basis)?;
    TabloidVector::from_dense(&pair.mu, &dense)
}

fn generator_tables(basis: &TabloidBasis, n: usize) -> Vec<Vec<usize>> {
    Permutation::generators(n).iter().map(|g| basis.action_table(g)).collect()
}

/// `ℤS_n`-submodule generated by `seed`, given the coordinate tables of a
/// generating set.
pub(crate) fn cyclic_closure<T: Scalar>(seed: Vec<T>, tables: &[Vec<usize>]) -> Checked<SubmoduleLattice<T>> {
    let mut b = HnfBuilder::new(seed.len());
    let mut queue = Vec::new();
    if b.insert(seed.clone())? {
        queue.push(seed);
    }
    while let Some(v) = queue.pop() {
        for t in tables {
            let w = permute_coords(&v, t);
            if b.insert(w.clone())? {
                queue.push(w);
            }
        }
    }
    b.finish()
}

fn specht_lattice_t<T: Scalar>(pair: &PartitionPair) -> PiResult<SubmoduleLattice<BigInt>> {
    let basis = tabloid_module_basis(&pair.mu)?;
    let seed = polytabloid_dense::<T>(pair, &Tableau::initial(&pair.mu), &basis)?;
    let tables = generator_tables(&basis, pair.n());
    Ok(cyclic_closure(seed, &tables)?.to_big())
}

/// `S(λ; μ) ⊆ M(μ)`. Since `σ·e_T = e_{σT}`, the span of all polytabloids
/// is the `ℤS_n`-module generated by one of them, which is what is computed.
pub fn specht_lattice(pair: &PartitionPair) -> PiResult<SubmoduleLattice<BigInt>> {
    exact(|| specht_lattice_t::<i64>(pair), || specht_lattice_t::<BigInt>(pair))
}

/// Span of the polytabloids of the given tableaux.
pub fn polytabloid_span(pair: &PartitionPair, tableaux: &[Tableau]) -> PiResult<SubmoduleLattice<BigInt>> {
    let basis = tabloid_module_basis(&pair.mu)?;
    let mut b = HnfBuilder::<BigInt>::new(basis.len());
    for t in tableaux {
        check_shape(pair, t)?;
        b.insert(polytabloid_dense(pair, t, &basis)?)?;
    }
    Ok(b.finish()?)
}

/// Target shape of `ψ_{i,v}` on `M(μ)` (1-based row `i`).
pub fn psi_target(mu: &GenPartition, i: usize, v: usize) -> PiResult<GenPartition> {
    if i == 0 || v > mu.part(i + 1) {
        return Err(PiError::Precondition(format!("psi needs 1 ≤ i and 0 ≤ v ≤ μ_(i+1), got i = {i}, v = {v}")));
    }
    let mut parts = mu.parts().to_vec();
    parts.resize(parts.len().max(i + 1), 0);
    parts[i - 1] = mu.part(i) + mu.part(i + 1) - v;
    parts[i] = v;
    Ok(GenPartition::new(parts))
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = subsets(&items[1..], k);
    for mut s in subsets(&items[1..], k - 1) {
        s.insert(0, items[0]);
        out.push(s);
    }
    out
}

/// Matrix of `ψ_{i,v}`: one row per tabloid of `μ`, as sparse `(column, 1)`
/// entries over the tabloids of the target shape.
pub fn psi_matrix(mu: &GenPartition, i: usize, v: usize) -> PiResult<(GenPartition, Vec<Vec<usize>>)> {
    let nu = psi_target(mu, i, v)?;
    let src = tabloid_module_basis(mu)?;
    let dst = tabloid_module_basis(&nu)?;
    let (upper, lower) = ((i - 1) as u8, i as u8);
    let rows = src
        .tabloids
        .iter()
        .map(|t| {
            let ro = t.row_of();
            let lower_entries: Vec<usize> = t.rows.get(i).cloned().unwrap_or_default();
            subsets(&lower_entries, v)
                .into_iter()
                .map(|keep| {
                    let mut image = ro.clone();
                    for &e in &lower_entries {
                        image[e - 1] = if keep.contains(&e) { lower } else { upper };
                    }
                    dst.index_of_rows(&image)
                })
                .collect()
        })
        .collect();
    Ok((nu, rows))
}

/// `ψ_{i,v}(x)`.
pub fn psi(i: usize, v: usize, x: &TabloidVector) -> PiResult<TabloidVector> {
    let (nu, rows) = psi_matrix(&x.shape, i, v)?;
    let src = tabloid_module_basis(&x.shape)?;
    let dst = tabloid_module_basis(&nu)?;
    let mut out = TabloidVector::zero(nu);
    for (t, c) in &x.coeffs {
        for &col in &rows[src.index_of(t)?] {
            out.add_term(dst.tabloids[col].clone(), c.clone());
        }
    }
    Ok(out)
}

fn apply_sparse<T: Scalar>(x: &[T], rows: &[Vec<usize>], ncols: usize) -> Checked<Vec<T>> {
    let mut out = vec![T::zero(); ncols];
    for (xi, row) in x.iter().zip(rows) {
        if xi.is_zero() {
            continue;
        }
        for &c in row {
            out[c] = out[c].add_c(xi)?;
        }
    }
    Ok(out)
}

fn check_gap(c: usize, pair: &PartitionPair) -> PiResult<()> {
    let (l, m) = (&pair.lambda, &pair.mu);
    if c < 2 || m.part(c - 1) != l.part(c - 1) || m.part(c) <= l.part(c) {
        return Err(PiError::Precondition(format!("operator index c = {c} not admissible for {pair}")));
    }
    Ok(())
}

/// Adding operator; `None` is the zero pair.
pub fn op_a(c: usize, pair: &PartitionPair) -> PiResult<Option<PartitionPair>> {
    check_gap(c, pair)?;
    let l = &pair.lambda;
    if l.part(c) == l.part(c - 1) {
        return Ok(None);
    }
    let mut parts = l.parts().to_vec();
    parts.resize(parts.len().max(c), 0);
    parts[c - 1] += 1;
    Ok(Some(PartitionPair::new(Partition::new(parts)?, pair.mu.clone())?))
}

/// Raising operator.
pub fn op_r(c: usize, pair: &PartitionPair) -> PiResult<PartitionPair> {
    check_gap(c, pair)?;
    let (l, m) = (&pair.lambda, &pair.mu);
    let len = m.len().max(c);
    let mut mu: Vec<usize> = (1..=len).map(|i| m.part(i)).collect();
    let mut lam: Vec<usize> = (1..=len).map(|i| l.part(i)).collect();
    mu[c - 1] = l.part(c);
    mu[c - 2] = m.part(c - 1) + m.part(c) - l.part(c);
    lam[0] = mu[0];
    PartitionPair::new(Partition::new(lam)?, GenPartition::new(mu))
}

/// Image and kernel of a linear map restricted to a lattice.
pub(crate) struct Restriction {
    /// Hermite basis of the image.
    pub image: SubmoduleLattice<BigInt>,
    /// `pre[k]` are coefficients over the source basis mapping to `image.basis()[k]`.
    pub pre: Vec<Vec<BigInt>>,
    /// Kernel, in ambient coordinates of the source.
    pub kernel: SubmoduleLattice<BigInt>,
}

fn restrict_t<T: Scalar>(source: &SubmoduleLattice<BigInt>, rows: &[Vec<usize>], target_dim: usize) -> PiResult<Restriction> {
    let b: Vec<Vec<T>> = source.basis().iter().map(|r| lift_vec(r)).collect::<Checked<_>>()?;
    let k = b.len();
    let width = target_dim + k;
    let mut h = HnfBuilder::<T>::new(width);
    for (idx, r) in b.iter().enumerate() {
        let mut v = apply_sparse(r, rows, target_dim)?;
        v.resize(width, T::zero());
        v[target_dim + idx] = T::one();
        h.insert(v)?;
    }
    let lat = h.finish()?;
    let mut image_rows = Vec::new();
    let mut pre = Vec::new();
    let mut kernel_rows = Vec::new();
    for (r, &p) in lat.basis().iter().zip(lat.pivots()) {
        let u: Vec<BigInt> = r[target_dim..].iter().map(Scalar::to_bigint).collect();
        if p < target_dim {
            image_rows.push(r[..target_dim].iter().map(Scalar::to_bigint).collect::<Vec<_>>());
            pre.push(u);
        } else {
            kernel_rows.push(u);
        }
    }
    let image = SubmoduleLattice::from_rows(target_dim, image_rows)?;
    let src_big = source.basis();
    let ambient = source.ambient_rank();
    let kernel = SubmoduleLattice::from_rows(
        ambient,
        kernel_rows.iter().map(|u| crate::lattice::vec_mat(u, src_big, ambient)).collect::<Checked<Vec<_>>>()?,
    )?;
    Ok(Restriction { image, pre, kernel })
}

pub(crate) fn restrict(source: &SubmoduleLattice<BigInt>, rows: &[Vec<usize>], target_dim: usize) -> PiResult<Restriction> {
    exact(|| restrict_t::<i64>(source, rows, target_dim), || restrict_t::<BigInt>(source, rows, target_dim))
}

impl Restriction {
    /// `{x ∈ source : f(x) ∈ n}`; fails when `n` is not inside the image.
    pub fn preimage(&self, source: &SubmoduleLattice<BigInt>, n: &SubmoduleLattice<BigInt>) -> PiResult<SubmoduleLattice<BigInt>> {
        let ambient = source.ambient_rank();
        let mut b = HnfBuilder::from_lattice(&self.kernel);
        for y in n.basis() {
            let z = self.image.coordinates(y)?.ok_or(PiError::NotContained)?;
            let x = crate::lattice::vec_mat(&z, &self.pre, source.rank())?;
            b.insert(crate::lattice::vec_mat(&x, source.basis(), ambient)?)?;
        }
        Ok(b.finish()?)
    }
}

/// Outcome of comparing `ψ_{c−1,λ_c}` on `S(λ;μ)` with `S(R_c)` and `S(A_c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiLemmaReport {
    pub pair: PartitionPair,
    pub c: usize,
    pub raised: PartitionPair,
    pub added: Option<PartitionPair>,
    pub image_matches: bool,
    pub kernel_matches: bool,
}

impl PsiLemmaReport {
    pub fn ok(&self) -> bool {
        self.image_matches && self.kernel_matches
    }
}

/// Check `ψ S(λ;μ) = S(R_c)` and `ker ψ ∩ S(λ;μ) = S(A_c)` at the minimal
/// admissible `c`; `None` when `λ = μ`.
pub fn psi_lemma(pair: &PartitionPair) -> PiResult<Option<PsiLemmaReport>> {
    let Some(c) = pair.first_gap() else {
        return Ok(None);
    };
    psi_lemma_at(pair, c).map(Some)
}

/// [`psi_lemma`] at a given admissible `c`.
pub fn psi_lemma_at(pair: &PartitionPair, c: usize) -> PiResult<PsiLemmaReport> {
    let raised = op_r(c, pair)?;
    let added = op_a(c, pair)?;
    let s = specht_lattice(pair)?;
    let (nu, rows) = psi_matrix(&pair.mu, c - 1, pair.lambda.part(c))?;
    debug_assert_eq!(nu, raised.mu);
    let dim = tabloid_module_basis(&nu)?.len();
    let res = restrict(&s, &rows, dim)?;
    let image_matches = res.image == specht_lattice(&raised)?;
    let expected_kernel = match &added {
        Some(p) => specht_lattice(p)?,
        None => SubmoduleLattice::zero(s.ambient_rank()),
    };
    let kernel_matches = res.kernel == expected_kernel;
    Ok(PsiLemmaReport { pair: pair.clone(), c, raised, added, image_matches, kernel_matches })
}

/// One factor `M_i / M_{i+1}` of a filtration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationFactor {
    pub label: Partition,
    pub rank: usize,
    pub invariants: AbelianInvariants,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::json::serde_opt_ints")]
    pub characters: Option<Vec<BigInt>>,
}

/// A chain `M_0 ⊇ M_1 ⊇ … ⊇ M_k` inside `M(shape)` and its factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationReport {
    pub shape: GenPartition,
    #[serde(skip)]
    pub chain: Vec<SubmoduleLattice<BigInt>>,
    pub factors: Vec<FiltrationFactor>,
}

impl FiltrationReport {
    pub fn labels(&self) -> Vec<Partition> {
        self.factors.iter().map(|f| f.label.clone()).collect()
    }
}

/// The Specht series of `S(λ;μ)`: factors isomorphic to Specht modules,
/// obtained by pulling back the series of `S(R_c)` along `ψ_{c−1,λ_c}` and
/// continuing with the series of `S(A_c)`.
pub fn specht_series(pair: &PartitionPair) -> PiResult<FiltrationReport> {
    let (chain, labels) = series_chain(pair)?;
    let mut factors = Vec::with_capacity(labels.len());
    for (k, label) in labels.into_iter().enumerate() {
        let invariants = lattice_quotient_invariants(&chain[k], &chain[k + 1])?;
        factors.push(FiltrationFactor { rank: chain[k].rank() - chain[k + 1].rank(), label, invariants, characters: None });
    }
    Ok(FiltrationReport { shape: pair.mu.clone(), chain, factors })
}

fn series_chain(pair: &PartitionPair) -> PiResult<(Vec<SubmoduleLattice<BigInt>>, Vec<Partition>)> {
    let s = specht_lattice(pair)?;
    let Some(c) = pair.first_gap() else {
        let zero = SubmoduleLattice::zero(s.ambient_rank());
        return Ok((vec![s, zero], vec![pair.lambda.clone()]));
    };
    let raised = op_r(c, pair)?;
    let (upper, upper_labels) = series_chain(&raised)?;
    let (nu, rows) = psi_matrix(&pair.mu, c - 1, pair.lambda.part(c))?;
    let dim = tabloid_module_basis(&nu)?.len();
    let res = restrict(&s, &rows, dim)?;
    if res.image != upper[0] {
        return Err(PiError::Precondition(format!("psi image of S{pair} differs from S{raised}")));
    }
    let (lower, lower_labels) = match op_a(c, pair)? {
        Some(added) => series_chain(&added)?,
        None => (vec![SubmoduleLattice::zero(s.ambient_rank())], Vec::new()),
    };
    if res.kernel != lower[0] {
        return Err(PiError::Precondition(format!("psi kernel on S{pair} differs from the added pair")));
    }
    let mut chain = Vec::with_capacity(upper.len() + lower.len() - 1);
    for n in &upper[..upper.len() - 1] {
        chain.push(res.preimage(&s, n)?);
    }
    chain.extend(lower);
    let mut labels = upper_labels;
    labels.extend(lower_labels);
    Ok((chain, labels))
}

/// `μ = (λ_1, …, λ_s, n − t)`, realising `S(λ)↑S_n` as `S(λ; μ)`.
pub fn induction_pair(lambda: &Partition, n: usize) -> PiResult<PartitionPair> {
    let t = lambda.size();
    if t >= n {
        return Err(PiError::Precondition(format!("induction needs |λ| < n, got {t} ≥ {n}")));
    }
    if lambda.is_empty() {
        return Ok(PartitionPair::specht(&Partition::new(vec![n])?));
    }
    let mut mu = lambda.parts().to_vec();
    mu.push(n - t);
    PartitionPair::new(lambda.clone(), GenPartition::new(mu))
}

/// Filtration of `(S(λ)/mS(λ))↑S_n` with factors `(M_i + mS)/(M_{i+1} + mS)`.
pub fn induce_mod(lambda: &Partition, n: usize, m: u64) -> PiResult<FiltrationReport> {
    let pair = induction_pair(lambda, n)?;
    let mut rep = specht_series(&pair)?;
    if m == 0 {
        return Ok(rep);
    }
    let mb = BigInt::from(m);
    let ms = rep.chain[0].scaled(&mb)?;
    let chain: Vec<SubmoduleLattice<BigInt>> = rep.chain.iter().map(|l| l.sum(&ms)).collect::<Checked<_>>()?;
    for (k, f) in rep.factors.iter_mut().enumerate() {
        f.invariants = lattice_quotient_invariants(&chain[k], &chain[k + 1])?;
    }
    rep.chain = chain;
    Ok(rep)
}

/// Partitions `ν ⊢ n` interlacing `λ`: `λ_i ≤ ν_i ≤ λ_{i−1}`, ordered with
/// `(n)`-most first.
pub fn young_expected(lambda: &Partition, n: usize) -> PiResult<Vec<Partition>> {
    let t = lambda.size();
    if t >= n {
        return Err(PiError::Precondition(format!("interlacing needs |λ| < n, got {t} ≥ {n}")));
    }
    let s = lambda.len();
    let mut out = Vec::new();
    // ν_2..ν_{s+1}, then ν_1 takes the rest
    fn go(lambda: &Partition, i: usize, s: usize, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i > s + 1 {
            out.push(rest.clone());
            return;
        }
        for v in lambda.part(i)..=lambda.part(i - 1) {
            rest.push(v);
            go(lambda, i + 1, s, rest, out);
            rest.pop();
        }
    }
    let mut tails = Vec::new();
    go(lambda, 2, s, &mut Vec::new(), &mut tails);
    for tail in tails {
        let used: usize = tail.iter().sum();
        if used > n || n - used < lambda.part(1) {
            continue;
        }
        let mut parts = vec![n - used];
        parts.extend(tail);
        out.push(Partition::new(parts)?);
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Multiset `{ν}` together with the tabloid describing the first tableau;
/// exposed for reports.
pub fn initial_tabloid(shape: &GenPartition) -> Tabloid {
    Tabloid { rows: Tableau::initial(shape).rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(l: &[usize], m: &[usize]) -> PartitionPair {
        PartitionPair::from_parts(l, m).unwrap()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(specht_lattice(&pair(&[2, 1], &[2, 1])).unwrap().rank(), 2);
        assert_eq!(specht_lattice(&pair(&[4], &[4])).unwrap().rank(), 1);
        assert_eq!(specht_lattice(&pair(&[1, 1], &[1, 1])).unwrap().rank(), 1);
    }

    #[test]
    fn sign_polytabloid() {
        let p = pair(&[1, 1], &[1, 1]);
        let e = polytabloid(&p, &Tableau::initial(&p.mu)).unwrap();
        assert_eq!(e.to_dense().unwrap(), vec![BigInt::from(1), BigInt::from(-1)]);
    }

    #[test]
    fn operators() {
        assert_eq!(op_a(2, &pair(&[2, 1], &[2, 2])).unwrap(), Some(pair(&[2, 2], &[2, 2])));
        assert_eq!(op_a(3, &pair(&[2, 2], &[2, 2, 1])).unwrap(), Some(pair(&[2, 2, 1], &[2, 2, 1])));
        assert_eq!(op_r(2, &pair(&[1], &[1, 1])).unwrap(), pair(&[2], &[2]));
        assert_eq!(op_r(3, &pair(&[2, 1], &[2, 1, 2])).unwrap(), pair(&[2, 1], &[2, 3]));
        assert!(op_a(2, &pair(&[2, 2], &[2, 2])).is_err());
    }

    #[test]
    fn psi_two_rows() {
        let (nu, rows) = psi_matrix(&GenPartition::new(vec![2, 2]), 1, 1).unwrap();
        assert_eq!(nu.parts(), &[3, 1]);
        assert!(rows.iter().all(|r| r.len() == 2));
        let (nu, rows) = psi_matrix(&GenPartition::new(vec![1, 1]), 1, 0).unwrap();
        assert_eq!(nu.parts(), &[2]);
        assert_eq!(rows, vec![vec![0], vec![0]]);
    }

    #[test]
    fn smallest_series() {
        let rep = specht_series(&pair(&[1], &[1, 1])).unwrap();
        let labels: Vec<Vec<usize>> = rep.labels().iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(labels, vec![vec![2], vec![1, 1]]);
        let rep = specht_series(&pair(&[1, 1], &[1, 1, 1])).unwrap();
        let labels: Vec<Vec<usize>> = rep.labels().iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(labels, vec![vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn interlacing() {
        let l = Partition::new(vec![2, 1]).unwrap();
        let got: Vec<Vec<usize>> = young_expected(&l, 5).unwrap().iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![4, 1], vec![3, 2], vec![3, 1, 1], vec![2, 2, 1]]);
        let l = Partition::new(vec![2, 2]).unwrap();
        let got: Vec<Vec<usize>> = young_expected(&l, 5).unwrap().iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![3, 2], vec![2, 2, 1]]);
    }

    #[test]
    fn mod_two_induction() {
        let rep = induce_mod(&Partition::new(vec![1, 1]).unwrap(), 3, 2).unwrap();
        let inv: Vec<String> = rep.factors.iter().map(|f| f.invariants.to_string()).collect();
        assert_eq!(inv, vec!["Z_2^2", "Z_2"]);
    }
}
