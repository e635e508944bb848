use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{PiError, PiResult};
use crate::json::{ints_to_json, json_to_int, json_to_ints};
use crate::lattice::SubmoduleLattice;

/// A ring given by a finite presentation of its additive group
/// `⊕ ℤ_{moduli[i]}` (`0` meaning `ℤ`) and structure constants
/// `e_i e_j = Σ_k mult_table[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingModel {
    label: String,
    moduli: Vec<BigInt>,
    mult_table: Vec<Vec<Vec<BigInt>>>,
    generators: Vec<Vec<BigInt>>,
    unit: Option<Vec<BigInt>>,
    sparse: Vec<Vec<Vec<(usize, BigInt)>>>,
}

/// Reduce into `[0, m)` when `m > 0`.
pub fn reduce(x: &BigInt, m: &BigInt) -> BigInt {
    if m.is_zero() {
        x.clone()
    } else {
        x.mod_floor(m)
    }
}

impl RingModel {
    /// Build and validate a model. Entries are reduced; the multiplication
    /// must be well defined on `⊕ ℤ_{m_i}`, associative (checked on basis
    /// triples when the rank is at most 64), the generators must span the
    /// additive group and the unit, if any, must act as identity.
    pub fn new(
        label: impl Into<String>,
        moduli: Vec<BigInt>,
        mult_table: Vec<Vec<Vec<BigInt>>>,
        generators: Vec<Vec<BigInt>>,
        unit: Option<Vec<BigInt>>,
    ) -> PiResult<Self> {
        let r = moduli.len();
        let bad = |why: String| Err(PiError::InvalidRing(why));
        if moduli.iter().any(|m| m.is_negative()) {
            return bad("negative modulus".into());
        }
        if mult_table.len() != r || mult_table.iter().any(|row| row.len() != r || row.iter().any(|c| c.len() != r)) {
            return bad(format!("multiplication table must be {r}×{r}×{r}"));
        }
        if generators.iter().chain(unit.iter()).any(|g| g.len() != r) {
            return bad(format!("element vectors must have length {r}"));
        }
        let mult_table: Vec<Vec<Vec<BigInt>>> = mult_table
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.iter().zip(&moduli).map(|(x, m)| reduce(x, m)).collect()).collect())
            .collect();
        let norm = |v: Vec<BigInt>| -> Vec<BigInt> { v.iter().zip(&moduli).map(|(x, m)| reduce(x, m)).collect() };
        let generators: Vec<Vec<BigInt>> = generators.into_iter().map(norm).collect();
        let unit = unit.map(norm);
        let sparse = mult_table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect())
                    .collect()
            })
            .collect();
        let model = Self { label: label.into(), moduli, mult_table, generators, unit, sparse };
        model.validate()?;
        Ok(model)
    }

    fn validate(&self) -> PiResult<()> {
        let r = self.rank();
        let bad = |why: String| Err(PiError::InvalidRing(format!("{}: {why}", self.label)));
        // m_i e_i = 0 must be respected by the product in both slots
        for i in 0..r {
            for j in 0..r {
                for (k, c) in &self.sparse[i][j] {
                    for m in [&self.moduli[i], &self.moduli[j]] {
                        if !reduce(&(m * c), &self.moduli[*k]).is_zero() {
                            return bad(format!("product e{i}·e{j} is not compatible with the moduli"));
                        }
                    }
                }
            }
        }
        if r <= 64 {
            for i in 0..r {
                for j in 0..r {
                    let ij = self.basis_product(i, j);
                    for k in 0..r {
                        let left = self.mul_vec_basis(&ij, k);
                        let jk = self.basis_product(j, k);
                        let right = self.mul_basis_vec(i, &jk);
                        if left != right {
                            return bad(format!("not associative on (e{i}, e{j}, e{k})"));
                        }
                    }
                }
            }
        }
        // generators together with m_i e_i span ℤ^r
        let mut rows: Vec<Vec<BigInt>> = self.generators.clone();
        for (i, m) in self.moduli.iter().enumerate() {
            if !m.is_zero() {
                let mut v = vec![BigInt::zero(); r];
                v[i] = m.clone();
                rows.push(v);
            }
        }
        let span = SubmoduleLattice::from_rows(r, rows).expect("bigint");
        if span != SubmoduleLattice::full(r) {
            return bad("generators do not span the additive group".into());
        }
        if let Some(u) = &self.unit {
            for g in &self.generators {
                if &self.mul_vec(u, g) != g || &self.mul_vec(g, u) != g {
                    return bad("unit does not act as identity".into());
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    pub fn mult_table(&self) -> &[Vec<Vec<BigInt>>] {
        &self.mult_table
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn unit(&self) -> Option<&[BigInt]> {
        self.unit.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub(crate) fn sparse_table(&self) -> &[Vec<Vec<(usize, BigInt)>>] {
        &self.sparse
    }

    fn reduce_vec(&self, v: &mut [BigInt]) {
        for (x, m) in v.iter_mut().zip(&self.moduli) {
            if !m.is_zero() {
                *x = x.mod_floor(m);
            }
        }
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.rank()];
        for (k, c) in &self.sparse[i][j] {
            v[*k] = c.clone();
        }
        v
    }

    fn mul_vec_basis(&self, a: &[BigInt], j: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rank()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in &self.sparse[i][j] {
                out[*k] += x * c;
            }
        }
        self.reduce_vec(&mut out);
        out
    }

    fn mul_basis_vec(&self, i: usize, b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rank()];
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            for (k, c) in &self.sparse[i][j] {
                out[*k] += y * c;
            }
        }
        self.reduce_vec(&mut out);
        out
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rank()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                for (k, c) in &self.sparse[i][j] {
                    out[*k] += x * y * c;
                }
            }
        }
        self.reduce_vec(&mut out);
        out
    }

    pub fn add_vec(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce_vec(&mut out);
        out
    }

    /// Additive order of a coordinate vector (`0` if infinite).
    pub fn additive_order(&self, v: &[BigInt]) -> BigInt {
        let mut l = BigInt::one();
        for (x, m) in v.iter().zip(&self.moduli) {
            if x.is_zero() {
                continue;
            }
            if m.is_zero() {
                return BigInt::zero();
            }
            l = l.lcm(&(m / m.gcd(x)));
        }
        l
    }

    /// `ch R`: additive order of the unit.
    pub fn characteristic(&self) -> Option<BigInt> {
        self.unit.as_ref().map(|u| self.additive_order(u))
    }

    /// Whether `g` commutes with every generator.
    pub fn is_central(&self, g: &[BigInt]) -> bool {
        self.generators.iter().all(|h| self.mul_vec(g, h) == self.mul_vec(h, g))
    }

    pub fn element(self: &Arc<Self>, coords: Vec<BigInt>) -> PiResult<RingElement> {
        if coords.len() != self.rank() {
            return Err(PiError::DimensionMismatch { expected: self.rank(), found: coords.len() });
        }
        let mut coords = coords;
        self.reduce_vec(&mut coords);
        Ok(RingElement { model: self.clone(), coords })
    }

    /// The `i`-th basis element `e_i`.
    pub fn basis_element(self: &Arc<Self>, i: usize) -> RingElement {
        let mut v = vec![BigInt::zero(); self.rank()];
        v[i] = BigInt::one();
        self.element(v).expect("rank-sized vector")
    }

    pub fn generator(self: &Arc<Self>, i: usize) -> RingElement {
        self.element(self.generators[i].clone()).expect("rank-sized vector")
    }

    pub fn to_json(&self) -> Value {
        let table: Vec<Value> = self
            .mult_table
            .iter()
            .map(|row| Value::Array(row.iter().map(|c| ints_to_json(c)).collect()))
            .collect();
        json!({
            "label": self.label,
            "rank": self.rank(),
            "moduli": ints_to_json(&self.moduli),
            "mult_table": table,
            "generators": self.generators.iter().map(|g| ints_to_json(g)).collect::<Vec<_>>(),
            "unit": self.unit.as_ref().map(|u| ints_to_json(u)),
        })
    }

    pub fn from_json(v: &Value) -> PiResult<Self> {
        let field = |k: &str| v.get(k).ok_or_else(|| PiError::Parse(format!("missing field {k:?}")));
        let label = field("label")?.as_str().ok_or_else(|| PiError::Parse("label must be a string".into()))?;
        let rank = json_to_int(field("rank")?)?;
        let moduli = json_to_ints(field("moduli")?)?;
        if BigInt::from(moduli.len()) != rank {
            return Err(PiError::InvalidRing(format!("rank {rank} but {} moduli", moduli.len())));
        }
        let arr = |v: &Value, what: &str| -> PiResult<Vec<Value>> {
            v.as_array().cloned().ok_or_else(|| PiError::Parse(format!("{what} must be an array")))
        };
        let mut table = Vec::new();
        for row in arr(field("mult_table")?, "mult_table")? {
            let mut r = Vec::new();
            for c in arr(&row, "mult_table row")? {
                r.push(json_to_ints(&c)?);
            }
            table.push(r);
        }
        let generators = arr(field("generators")?, "generators")?.iter().map(json_to_ints).collect::<PiResult<_>>()?;
        let unit = match v.get("unit") {
            None | Some(Value::Null) => None,
            Some(u) => Some(json_to_ints(u)?),
        };
        Self::new(label, moduli, table, generators, unit)
    }
}

impl Serialize for RingModel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingModel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// An element of a [`RingModel`] with canonically reduced coordinates.
#[derive(Debug, Clone)]
pub struct RingElement {
    model: Arc<RingModel>,
    coords: Vec<BigInt>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_model(other) && self.coords == other.coords
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn model(&self) -> &Arc<RingModel> {
        &self.model
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    fn same_model(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.model, &other.model) || self.model == other.model
    }

    pub fn zero(model: &Arc<RingModel>) -> Self {
        Self { model: model.clone(), coords: vec![BigInt::zero(); model.rank()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> PiResult<Self> {
        if !self.same_model(other) {
            return Err(PiError::ModelMismatch);
        }
        Ok(Self { model: self.model.clone(), coords: self.model.mul_vec(&self.coords, &other.coords) })
    }

    pub fn add(&self, other: &Self) -> PiResult<Self> {
        if !self.same_model(other) {
            return Err(PiError::ModelMismatch);
        }
        Ok(Self { model: self.model.clone(), coords: self.model.add_vec(&self.coords, &other.coords) })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut coords: Vec<BigInt> = self.coords.iter().map(|x| x * k).collect();
        self.model.reduce_vec(&mut coords);
        Self { model: self.model.clone(), coords }
    }

    pub fn commutator(&self, other: &Self) -> PiResult<Self> {
        self.mul(other)?.add(&other.mul(self)?.scale(&BigInt::from(-1)))
    }
}
