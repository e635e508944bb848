use crate::scalar::{egcd, lift_vec, small, to_big_vec, Checked, Scalar};
use num_bigint::BigInt;

/// Incremental row Hermite normal form.
///
/// Rows are folded in one at a time; the echelon form is maintained after
/// every insertion so membership tests are always available. With a modulus
/// `L` the lattice is seeded with `L·ℤ^n` and every non-pivot entry is kept
/// in `[0, L)`, which bounds coefficient growth.
#[derive(Debug, Clone)]
pub struct HnfBuilder<T> {
    ncols: usize,
    rows: Vec<Vec<T>>,
    pivot_row: Vec<Option<usize>>,
    modulus: Option<T>,
}

impl<T: Scalar> HnfBuilder<T> {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new(), pivot_row: vec![None; ncols], modulus: None }
    }

    /// Lattice seeded with `modulus · ℤ^ncols`; `modulus` must be positive.
    pub fn with_modulus(ncols: usize, modulus: T) -> Self {
        assert!(modulus.is_positive(), "modulus must be positive");
        let mut b = Self::new(ncols);
        for j in 0..ncols {
            let mut row = vec![T::zero(); ncols];
            row[j] = modulus.clone();
            b.pivot_row[j] = Some(b.rows.len());
            b.rows.push(row);
        }
        b.modulus = Some(modulus);
        b
    }

    pub fn from_lattice(lattice: &SubmoduleLattice<T>) -> Self {
        let mut b = Self::new(lattice.ambient_rank);
        for (row, &p) in lattice.basis.iter().zip(&lattice.pivots) {
            b.pivot_row[p] = Some(b.rows.len());
            b.rows.push(row.clone());
        }
        b
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn modulus(&self) -> Option<&T> {
        self.modulus.as_ref()
    }

    fn reduce_entries(&self, v: &mut [T], from: usize) {
        if let Some(m) = &self.modulus {
            for x in v[from..].iter_mut() {
                if x.is_negative() || &*x >= m {
                    *x = x.rem_euclid_c(m);
                }
            }
        }
    }

    fn axpy(dst: &mut [T], a: &T, src: &[T], from: usize) -> Checked<()> {
        if a.is_zero() {
            return Ok(());
        }
        for (d, s) in dst[from..].iter_mut().zip(&src[from..]) {
            if !s.is_zero() {
                *d = d.fma_c(a, s)?;
            }
        }
        Ok(())
    }

    /// Reduce the entries of `row` at pivot columns right of `after` against
    /// the corresponding pivot rows.
    fn tail_reduce(&self, row: &mut [T], after: usize) -> Checked<()> {
        for c in after + 1..self.ncols {
            if let Some(r) = self.pivot_row[c] {
                let p = &self.rows[r][c];
                if row[c].is_negative() || &row[c] >= p {
                    let q = row[c].div_floor(p).neg_c()?;
                    let src = self.rows[r].clone();
                    Self::axpy(row, &q, &src, c)?;
                }
            }
        }
        Ok(())
    }

    /// Fold `v` into the lattice. Returns whether the lattice grew.
    pub fn insert(&mut self, mut v: Vec<T>) -> Checked<bool> {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce_entries(&mut v, 0);
        let mut changed = false;
        let mut col = 0;
        loop {
            let j = match (col..self.ncols).find(|&j| !v[j].is_zero()) {
                Some(j) => j,
                None => return Ok(changed),
            };
            match self.pivot_row[j] {
                None => {
                    if v[j].is_negative() {
                        for x in v[j..].iter_mut() {
                            *x = x.neg_c()?;
                        }
                        self.reduce_entries(&mut v, j + 1);
                    }
                    if self.modulus.is_none() {
                        self.tail_reduce(&mut v, j)?;
                    }
                    self.pivot_row[j] = Some(self.rows.len());
                    self.rows.push(v);
                    return Ok(true);
                }
                Some(r) => {
                    let p = self.rows[r][j].clone();
                    let x = v[j].clone();
                    if x.is_multiple_of(&p) {
                        let q = x.div_floor(&p).neg_c()?;
                        Self::axpy(&mut v, &q, &self.rows[r], j)?;
                        self.reduce_entries(&mut v, j + 1);
                    } else {
                        let (g, a, b) = egcd(&p, &x)?;
                        let xg = x.div_floor(&g);
                        let pg = p.div_floor(&g);
                        let row = &self.rows[r];
                        let mut new_row = vec![T::zero(); self.ncols];
                        let mut new_v = vec![T::zero(); self.ncols];
                        for k in j..self.ncols {
                            new_row[k] = a.mul_c(&row[k])?.fma_c(&b, &v[k])?;
                            new_v[k] = xg.mul_c(&row[k])?.sub_c(&pg.mul_c(&v[k])?)?;
                        }
                        self.reduce_entries(&mut new_row, j + 1);
                        self.reduce_entries(&mut new_v, j + 1);
                        if self.modulus.is_none() {
                            self.tail_reduce(&mut new_row, j)?;
                        }
                        self.rows[r] = new_row;
                        v = new_v;
                        changed = true;
                    }
                    col = j + 1;
                }
            }
        }
    }

    /// Remainder of `v` after elimination; `None` when `v` is not a member,
    /// otherwise the coefficients of `v` in terms of the current rows.
    fn solve(&self, v: &[T]) -> Checked<Option<Vec<(usize, T)>>> {
        let mut v = v.to_vec();
        self.reduce_entries(&mut v, 0);
        let mut coeffs = Vec::new();
        for j in 0..self.ncols {
            if v[j].is_zero() {
                continue;
            }
            let r = match self.pivot_row[j] {
                Some(r) => r,
                None => return Ok(None),
            };
            let p = &self.rows[r][j];
            if !v[j].is_multiple_of(p) {
                return Ok(None);
            }
            let q = v[j].div_floor(p);
            Self::axpy(&mut v, &q.neg_c()?, &self.rows[r], j)?;
            self.reduce_entries(&mut v, j + 1);
            coeffs.push((r, q));
        }
        Ok(Some(coeffs))
    }

    pub fn contains(&self, v: &[T]) -> Checked<bool> {
        Ok(self.solve(v)?.is_some())
    }

    pub fn finish(self) -> Checked<SubmoduleLattice<T>> {
        let ncols = self.ncols;
        let mut pivots: Vec<usize> = (0..ncols).filter(|&c| self.pivot_row[c].is_some()).collect();
        pivots.sort_unstable();
        let mut rows: Vec<Vec<T>> = pivots.iter().map(|&c| self.rows[self.pivot_row[c].unwrap()].clone()).collect();
        canonicalize(&mut rows, &pivots)?;
        Ok(SubmoduleLattice { ambient_rank: ncols, basis: rows, pivots })
    }

    pub fn snapshot(&self) -> Checked<SubmoduleLattice<T>> {
        self.clone().finish()
    }
}

/// Bring an echelon basis (rows sorted by pivot, positive pivots) into
/// reduced form: entries above each pivot lie in `[0, pivot)`.
fn canonicalize<T: Scalar>(rows: &mut [Vec<T>], pivots: &[usize]) -> Checked<()> {
    for i in 0..rows.len() {
        let c = pivots[i];
        let (upper, lower) = rows.split_at_mut(i);
        let prow = &lower[0];
        let p = &prow[c];
        for h in upper.iter_mut() {
            if h[c].is_negative() || &h[c] >= p {
                let q = h[c].div_floor(p).neg_c()?;
                for k in c..h.len() {
                    if !prow[k].is_zero() {
                        h[k] = h[k].fma_c(&q, &prow[k])?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// A sublattice of `ℤ^r` stored by its canonical row Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubmoduleLattice<T> {
    ambient_rank: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> SubmoduleLattice<T> {
    pub fn zero(ambient_rank: usize) -> Self {
        Self { ambient_rank, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_rank: usize) -> Self {
        let basis = (0..ambient_rank)
            .map(|i| {
                let mut r = vec![T::zero(); ambient_rank];
                r[i] = T::one();
                r
            })
            .collect();
        Self { ambient_rank, basis, pivots: (0..ambient_rank).collect() }
    }

    pub fn from_rows<I>(ambient_rank: usize, rows: I) -> Checked<Self>
    where
        I: IntoIterator<Item = Vec<T>>,
    {
        let mut b = HnfBuilder::new(ambient_rank);
        for r in rows {
            b.insert(r)?;
        }
        b.finish()
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v` in this lattice's basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[T]) -> Checked<Option<Vec<T>>> {
        let mut v = v.to_vec();
        let mut coords = vec![T::zero(); self.basis.len()];
        let mut next = 0;
        for j in 0..self.ambient_rank {
            if v[j].is_zero() {
                continue;
            }
            while next < self.pivots.len() && self.pivots[next] < j {
                next += 1;
            }
            if next == self.pivots.len() || self.pivots[next] != j {
                return Ok(None);
            }
            let row = &self.basis[next];
            if !v[j].is_multiple_of(&row[j]) {
                return Ok(None);
            }
            let q = v[j].div_floor(&row[j]);
            let nq = q.neg_c()?;
            for k in j..self.ambient_rank {
                if !row[k].is_zero() {
                    v[k] = v[k].fma_c(&nq, &row[k])?;
                }
            }
            coords[next] = q;
        }
        Ok(Some(coords))
    }

    pub fn contains(&self, v: &[T]) -> Checked<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_lattice(&self, other: &Self) -> Checked<bool> {
        for r in &other.basis {
            if !self.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Checked<Self> {
        let mut b = HnfBuilder::from_lattice(self);
        for r in &other.basis {
            b.insert(r.clone())?;
        }
        b.finish()
    }

    /// Image of the lattice under the linear map `v ↦ f(v)`.
    pub fn map<F>(&self, target_rank: usize, mut f: F) -> Checked<Self>
    where
        F: FnMut(&[T]) -> Checked<Vec<T>>,
    {
        let mut b = HnfBuilder::new(target_rank);
        for r in &self.basis {
            b.insert(f(r)?)?;
        }
        b.finish()
    }

    pub fn convert<U: Scalar>(&self) -> Checked<SubmoduleLattice<U>> {
        let basis = self
            .basis
            .iter()
            .map(|r| lift_vec::<U>(&to_big_vec(r)))
            .collect::<Checked<Vec<_>>>()?;
        Ok(SubmoduleLattice { ambient_rank: self.ambient_rank, basis, pivots: self.pivots.clone() })
    }

    pub fn to_big(&self) -> SubmoduleLattice<BigInt> {
        SubmoduleLattice {
            ambient_rank: self.ambient_rank,
            basis: self.basis.iter().map(|r| to_big_vec(r)).collect(),
            pivots: self.pivots.clone(),
        }
    }

    /// Scale every basis vector by `k`.
    pub fn scaled(&self, k: &T) -> Checked<Self> {
        if k.is_zero() {
            return Ok(Self::zero(self.ambient_rank));
        }
        let k = k.abs_c()?;
        let basis = self
            .basis
            .iter()
            .map(|r| r.iter().map(|x| x.mul_c(&k)).collect::<Checked<Vec<_>>>())
            .collect::<Checked<Vec<_>>>()?;
        Ok(Self { ambient_rank: self.ambient_rank, basis, pivots: self.pivots.clone() })
    }

    /// Whether `ℤ^r / self` is torsion-free, i.e. every Smith invariant of the
    /// basis is 1. Equivalent to the columns of the basis spanning `ℤ^rank`.
    pub fn is_saturated(&self) -> Checked<bool> {
        let k = self.basis.len();
        let cols = (0..self.ambient_rank).map(|c| self.basis.iter().map(|r| r[c].clone()).collect::<Vec<T>>());
        let l = SubmoduleLattice::from_rows(k, cols)?;
        Ok(l.basis.iter().enumerate().all(|(i, r)| r[i].is_one()) && l.rank() == k)
    }
}

impl<T: Scalar> std::fmt::Display for SubmoduleLattice<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "lattice of rank {} in Z^{}", self.rank(), self.ambient_rank())
    }
}

/// Row HNF of `rows` (nonzero rows only).
pub fn hnf<T: Scalar>(ncols: usize, rows: &[Vec<T>]) -> Checked<Vec<Vec<T>>> {
    Ok(SubmoduleLattice::from_rows(ncols, rows.iter().cloned())?.basis)
}

/// Basis of the saturated lattice `{x ∈ ℤ^ncols : r·x = 0 for every row r}`.
pub fn kernel_basis<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> Checked<Vec<Vec<T>>> {
    let m = rows.len();
    let width = m + ncols;
    let mut b = HnfBuilder::new(width);
    for x in 0..ncols {
        let mut v = vec![T::zero(); width];
        for (i, r) in rows.iter().enumerate() {
            v[i] = r[x].clone();
        }
        v[m + x] = small(1)?;
        b.insert(v)?;
    }
    let lat = b.finish()?;
    Ok(lat
        .basis
        .iter()
        .zip(&lat.pivots)
        .filter(|(_, &p)| p >= m)
        .map(|(r, _)| r[m..].to_vec())
        .collect())
}

/// `{y : y·M = 0}` for the row matrix `M` with `ncols` columns.
pub fn left_kernel_basis<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> Checked<Vec<Vec<T>>> {
    let transposed: Vec<Vec<T>> = (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect();
    kernel_basis(&transposed, rows.len())
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> Checked<T> {
    let mut s = T::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s = s.fma_c(x, y)?;
        }
    }
    Ok(s)
}

/// Row vector times matrix given as a list of rows.
pub fn vec_mat<T: Scalar>(v: &[T], m: &[Vec<T>], ncols: usize) -> Checked<Vec<T>> {
    let mut out = vec![T::zero(); ncols];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, r) in out.iter_mut().zip(row) {
            if !r.is_zero() {
                *o = o.fma_c(x, r)?;
            }
        }
    }
    Ok(out)
}
