use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::hnf::SubmoduleLattice;
use super::invariants::AbelianInvariants;
use super::relations::RelationAccumulator;
use super::snf::snf;
use crate::error::{exact, PiError, PiResult};
use crate::scalar::{lift_vec, to_big_vec, Scalar};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::from(1);
        }
        m
    }

    pub fn from_rows(cols: usize, data: Vec<Vec<BigInt>>) -> PiResult<Self> {
        for r in &data {
            if r.len() != cols {
                return Err(PiError::DimensionMismatch { expected: cols, found: r.len() });
            }
        }
        Ok(Self { rows: data.len(), cols, data })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_rows(cols, data).expect("ragged rows")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols).map(|c| self.data.iter().map(|r| r[c].clone()).collect()).collect();
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub(crate) fn lifted<T: Scalar>(&self) -> PiResult<Vec<Vec<T>>> {
        Ok(self.data.iter().map(|r| lift_vec(r)).collect::<Result<_, _>>()?)
    }

    /// Row Hermite normal form (zero rows dropped).
    pub fn hnf(&self) -> Self {
        let basis = exact(
            || Ok(SubmoduleLattice::<i64>::from_rows(self.cols, self.lifted::<i64>()?)?.to_big()),
            || Ok(SubmoduleLattice::<BigInt>::from_rows(self.cols, self.data.clone())?),
        )
        .expect("arbitrary precision cannot overflow");
        Self { rows: basis.rank(), cols: self.cols, data: basis.basis().to_vec() }
    }

    pub fn row_lattice(&self) -> SubmoduleLattice<BigInt> {
        let h = self.hnf();
        SubmoduleLattice::from_rows(self.cols, h.data).expect("arbitrary precision cannot overflow")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<Vec<String>> = self.data.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings: Vec<Vec<String>> = Vec::deserialize(d)?;
        let data = strings
            .iter()
            .map(|r| r.iter().map(|x| BigInt::from_str(x).map_err(serde::de::Error::custom)).collect())
            .collect::<Result<Vec<Vec<BigInt>>, _>>()?;
        let cols = data.first().map_or(0, Vec::len);
        IntMatrix::from_rows(cols, data).map_err(serde::de::Error::custom)
    }
}

/// Smith form of a matrix together with the invariants of its cokernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfReport {
    #[serde(with = "crate::json::serde_ints")]
    pub diagonal: Vec<BigInt>,
    pub invariants: AbelianInvariants,
}

pub fn snf_report(m: &IntMatrix) -> SnfReport {
    let diagonal = exact(
        || Ok(to_big_vec(&snf(&m.lifted::<i64>()?, m.cols)?)),
        || Ok(snf(&m.data, m.cols)?),
    )
    .expect("arbitrary precision cannot overflow");
    let invariants = AbelianInvariants::from_smith_diagonal(&diagonal, m.cols);
    SnfReport { diagonal, invariants }
}

/// Invariants of the image of the evaluation map: `ℤ^cols / K` where `K`
/// is the set of `v` with `row_i · v ≡ 0 (mod target_moduli[i])`.
pub fn image_invariants(eval_matrix: &IntMatrix, target_moduli: &[BigInt]) -> PiResult<AbelianInvariants> {
    if target_moduli.len() != eval_matrix.rows {
        return Err(PiError::DimensionMismatch { expected: eval_matrix.rows, found: target_moduli.len() });
    }
    fn run<T: Scalar>(m: &IntMatrix, moduli: &[BigInt]) -> PiResult<AbelianInvariants> {
        let mut acc = RelationAccumulator::<T>::new(m.cols, moduli)?;
        for (row, q) in m.data.iter().zip(moduli) {
            acc.add_row(&lift_vec::<T>(row)?, q)?;
        }
        acc.finish()?.invariants()
    }
    exact(|| run::<i64>(eval_matrix, target_moduli), || run::<BigInt>(eval_matrix, target_moduli))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn zero_map_has_trivial_image() {
        let m = IntMatrix::zeros(2, 3);
        let inv = image_invariants(&m, &big(&[0, 5])).unwrap();
        assert!(inv.is_trivial());
    }

    #[test]
    fn identity_mod_two() {
        let inv = image_invariants(&IntMatrix::identity(3), &big(&[2, 2, 2])).unwrap();
        assert_eq!(inv.torsion, big(&[2, 2, 2]));
        assert_eq!(inv.free_rank, 0);
    }

    #[test]
    fn mixed_moduli() {
        // rows (1,1) free and (0,1) mod 4: image ≅ ℤ ⊕ ℤ_4
        let m = IntMatrix::from_i64(&[vec![1, 1], vec![0, 1]]);
        let inv = image_invariants(&m, &big(&[0, 4])).unwrap();
        assert_eq!(inv.free_rank, 1);
        assert_eq!(inv.torsion, big(&[4]));
    }

    #[test]
    fn json_uses_strings() {
        let m = IntMatrix::from_rows(1, vec![vec![BigInt::from(10).pow(30)]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1000000000000000000000000000000"]]"#);
        let back: IntMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn snf_of_coprime_diagonal() {
        let r = snf_report(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(r.diagonal, big(&[1, 6]));
        assert_eq!(r.invariants.torsion, big(&[6]));
    }
}
