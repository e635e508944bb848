//! Integer ↔ JSON conversions: integers within `±2^53` become JSON numbers,
//! larger ones decimal strings. Both forms are accepted on input.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::Value;

use crate::error::{PiError, PiResult};

const SAFE: i64 = 1 << 53;

pub fn int_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if v.abs() <= SAFE => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn json_to_int(v: &Value) -> PiResult<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(PiError::Parse(format!("non-integer number {n}")))
            }
        }
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| PiError::Parse(format!("not an integer: {s:?}"))),
        other => Err(PiError::Parse(format!("expected integer, found {other}"))),
    }
}

pub fn ints_to_json(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

pub fn json_to_ints(v: &Value) -> PiResult<Vec<BigInt>> {
    match v {
        Value::Array(a) => a.iter().map(json_to_int).collect(),
        other => Err(PiError::Parse(format!("expected array, found {other}"))),
    }
}

pub fn usize_to_json(x: usize) -> Value {
    int_to_json(&BigInt::from(x))
}

pub fn is_big(x: &BigInt) -> bool {
    x.abs() > BigInt::from(SAFE)
}

/// `#[serde(with = ...)]` adapter for a single integer.
pub mod serde_int {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        super::int_to_json(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        super::json_to_int(&serde_json::Value::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// `#[serde(with = ...)]` adapter for integer vectors.
pub mod serde_ints {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        super::ints_to_json(xs).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        super::json_to_ints(&serde_json::Value::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// `#[serde(with = ...)]` adapter for optional integer vectors.
pub mod serde_opt_ints {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(xs: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
        xs.as_ref().map(|v| super::ints_to_json(v)).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<BigInt>>, D::Error> {
        match Option::<serde_json::Value>::deserialize(d)? {
            None => Ok(None),
            Some(v) => super::json_to_ints(&v).map(Some).map_err(D::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold() {
        let small = BigInt::from(SAFE);
        assert_eq!(int_to_json(&small), Value::from(SAFE));
        let big = small + 1;
        assert_eq!(int_to_json(&big), Value::String("9007199254740993".into()));
        assert_eq!(json_to_int(&int_to_json(&big)).unwrap(), big);
        assert!(json_to_int(&Value::from(1.5)).is_err());
    }
}
