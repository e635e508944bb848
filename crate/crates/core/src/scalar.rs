//! Exact integer scalars.
//!
//! All algebra in this crate is generic over [`Scalar`]: `i64`, `i128` and
//! [`BigInt`]. Fixed-width scalars use checked arithmetic and report
//! [`Overflow`] instead of wrapping, so a computation is either exact or
//! aborted; [`crate::error::exact`] repeats an overflowed computation at
//! arbitrary precision.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive};

/// A fixed-width computation left the representable range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("integer overflow in fixed-width scalar")]
pub struct Overflow;

pub type Checked<T> = Result<T, Overflow>;

pub trait Scalar:
    Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Clone
    + Debug
    + Display
    + Hash
    + Send
    + Sync
    + 'static
{
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
    fn from_i64(v: i64) -> Option<Self>;

    fn add_c(&self, other: &Self) -> Checked<Self> {
        self.checked_add(other).ok_or(Overflow)
    }

    fn sub_c(&self, other: &Self) -> Checked<Self> {
        self.checked_sub(other).ok_or(Overflow)
    }

    fn mul_c(&self, other: &Self) -> Checked<Self> {
        self.checked_mul(other).ok_or(Overflow)
    }

    fn neg_c(&self) -> Checked<Self> {
        Self::zero().sub_c(self)
    }

    /// `self + a * b`
    fn fma_c(&self, a: &Self, b: &Self) -> Checked<Self> {
        self.add_c(&a.mul_c(b)?)
    }

    fn abs_c(&self) -> Checked<Self> {
        if self.is_negative() {
            self.neg_c()
        } else {
            Ok(self.clone())
        }
    }

    /// Least non-negative residue; `m` must be positive.
    fn rem_euclid_c(&self, m: &Self) -> Self {
        self.mod_floor(m)
    }
}

macro_rules! impl_prim_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_bigint(v: &BigInt) -> Option<Self> {
                <$t as num_traits::FromPrimitive>::from_i128(v.to_i128()?)
            }
            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn from_i64(v: i64) -> Option<Self> {
                <$t as num_traits::FromPrimitive>::from_i64(v)
            }
        }
    )*};
}

impl_prim_scalar!(i64, i128);

impl Scalar for BigInt {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_i64(v: i64) -> Option<Self> {
        Some(BigInt::from(v))
    }
    fn add_c(&self, other: &Self) -> Checked<Self> {
        Ok(self + other)
    }
    fn sub_c(&self, other: &Self) -> Checked<Self> {
        Ok(self - other)
    }
    fn mul_c(&self, other: &Self) -> Checked<Self> {
        Ok(self * other)
    }
    fn neg_c(&self) -> Checked<Self> {
        Ok(-self)
    }
}

pub fn lift<T: Scalar>(v: &BigInt) -> Checked<T> {
    T::from_bigint(v).ok_or(Overflow)
}

pub fn lift_vec<T: Scalar>(v: &[BigInt]) -> Checked<Vec<T>> {
    v.iter().map(lift).collect()
}

pub fn small<T: Scalar>(v: i64) -> Checked<T> {
    T::from_i64(v).ok_or(Overflow)
}

pub fn to_big_vec<T: Scalar>(v: &[T]) -> Vec<BigInt> {
    v.iter().map(Scalar::to_bigint).collect()
}

/// Extended gcd with non-negative gcd: returns `(g, x, y)` with `a*x + b*y = g`.
pub fn egcd<T: Scalar>(a: &T, b: &T) -> Checked<(T, T, T)> {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (T::one(), T::zero());
    let (mut t0, mut t1) = (T::zero(), T::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = r0.sub_c(&q.mul_c(&r1)?)?;
        let s2 = s0.sub_c(&q.mul_c(&s1)?)?;
        let t2 = t0.sub_c(&q.mul_c(&t1)?)?;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        Ok((r0.neg_c()?, s0.neg_c()?, t0.neg_c()?))
    } else {
        Ok((r0, s0, t0))
    }
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
