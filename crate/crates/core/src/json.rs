//! JSON encoding of big integers and matrices.
//!
//! Integers with `|x| < 2^53` are plain JSON numbers; larger ones are decimal strings.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::IntMatrix;

const SAFE: i64 = 1 << 53;

pub fn int_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if v.abs() < SAFE => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::Parse(format!("not an integer: {n}")))
            }
        }
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        other => Err(Error::Parse(format!("not an integer: {other}"))),
    }
}

pub fn ints_to_json(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

pub fn ints_from_json(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array, got {v}")))?
        .iter()
        .map(int_from_json)
        .collect()
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(m.rows().iter().map(|r| ints_to_json(r)).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<IntMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a matrix, got {v}")))?
        .iter()
        .map(ints_from_json)
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(&rows)
}

/// `true` when the value fits a JSON number without rounding.
pub fn is_safe(x: &BigInt) -> bool {
    x.abs() < BigInt::from(SAFE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn small_and_large() {
        assert_eq!(int_to_json(&BigInt::from(29)), json!(29));
        assert_eq!(int_to_json(&BigInt::from(-29)), json!(-29));
        let big: BigInt = "131281403380000000000".parse().unwrap();
        assert_eq!(int_to_json(&big), json!("131281403380000000000"));
        assert_eq!(int_from_json(&json!("131281403380000000000")).unwrap(), big);
        let edge = BigInt::from(SAFE);
        assert_eq!(int_to_json(&edge), json!("9007199254740992"));
        assert_eq!(int_to_json(&(edge - 1)), json!(9007199254740991i64));
    }

    #[test]
    fn rejects_non_integers() {
        assert!(int_from_json(&json!(1.5)).is_err());
        assert!(int_from_json(&json!("x")).is_err());
        assert!(int_from_json(&json!(null)).is_err());
    }

    #[test]
    fn matrix_roundtrip() {
        let m = IntMatrix::from_rows(&[vec![3, 5], vec![7, 12]]).unwrap();
        let v = matrix_to_json(&m);
        assert_eq!(v, json!([[3, 5], [7, 12]]));
        assert_eq!(matrix_from_json(&v).unwrap(), m);
        assert!(matrix_from_json(&json!([[1, 2], [3]])).is_err());
    }
}
