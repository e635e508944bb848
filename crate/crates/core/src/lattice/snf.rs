use super::hnf::{hnf, SubmoduleLattice};
use crate::scalar::{Checked, Scalar};

fn transpose<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

fn is_diagonal<T: Scalar>(rows: &[Vec<T>]) -> bool {
    rows.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

/// Nonzero Smith invariants `d₁ | d₂ | … | d_k` of the matrix with the given
/// rows (zero diagonal entries are omitted; `k` is the rank).
pub fn snf_diagonal<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> Checked<Vec<T>> {
    // Alternate row and column Hermite reductions until the matrix is diagonal.
    let mut m = hnf(ncols, rows)?;
    let mut width = ncols;
    loop {
        if is_diagonal(&m) {
            break;
        }
        let t = transpose(&m, width);
        width = m.len();
        m = hnf(width, &t)?;
    }
    let mut d: Vec<T> = m.iter().enumerate().map(|(i, r)| r[i].abs_c()).collect::<Checked<_>>()?;
    // diag(a, b) ~ diag(gcd, lcm): repeat until the chain divides.
    let k = d.len();
    for i in 0..k {
        for j in i + 1..k {
            if !d[j].is_multiple_of(&d[i]) {
                let g = d[i].gcd(&d[j]);
                let l = d[i].div_floor(&g).mul_c(&d[j])?;
                d[i] = g;
                d[j] = l;
            }
        }
    }
    Ok(d)
}

/// Full Smith diagonal of an `nrows × ncols` matrix, padded with zeros to
/// `min(nrows, ncols)` entries.
pub fn snf<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> Checked<Vec<T>> {
    let mut d = snf_diagonal(rows, ncols)?;
    d.resize(rows.len().min(ncols), T::zero());
    Ok(d)
}

/// Coordinates of `inner`'s basis in `outer`'s basis; fails with `None` when
/// `inner ⊄ outer`.
pub fn relative_coordinates<T: Scalar>(
    outer: &SubmoduleLattice<T>,
    inner: &SubmoduleLattice<T>,
) -> Checked<Option<Vec<Vec<T>>>> {
    let mut out = Vec::with_capacity(inner.rank());
    for r in inner.basis() {
        match outer.coordinates(r)? {
            Some(c) => out.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}
