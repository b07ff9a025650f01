//! JSON encoding of exact scalars and matrices.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise. Rationals are always strings: `"3"`, `"-1/2"`.
//! Readers accept numbers and strings for both.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use super::matrix::{Matrix, Scalar};
use crate::error::{Error, Result};

pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Option<Self>;
}

impl JsonScalar for BigInt {
    fn to_json(&self) -> Value {
        match self.to_i64() {
            Some(v) => Value::from(v),
            None => Value::String(self.to_string()),
        }
    }

    fn from_json(v: &Value) -> Option<Self> {
        match v {
            Value::Number(n) => n.as_i64().map(BigInt::from),
            Value::String(s) => BigInt::from_str(s.trim()).ok(),
            _ => None,
        }
    }
}

impl JsonScalar for BigRational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Option<Self> {
        match v {
            Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(i.into())),
            Value::String(s) => parse_rational(s),
            _ => None,
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => BigInt::from_str(s).ok().map(BigRational::from_integer),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            (!q.is_zero()).then(|| BigRational::new(p, q))
        }
    }
}

impl<T: JsonScalar> Matrix<T> {
    /// Entries as a list of rows.
    pub fn rows_to_json(&self) -> Value {
        Value::Array(
            (0..self.rows()).map(|r| Value::Array(self.row(r).iter().map(JsonScalar::to_json).collect())).collect(),
        )
    }

    /// Reads a list of rows with the given expected shape. `field` names the
    /// JSON field in error messages.
    pub fn rows_from_json(v: &Value, rows: usize, cols: usize, field: &str) -> Result<Self> {
        let list = v.as_array().ok_or_else(|| Error::parse(field, "expected an array of rows"))?;
        if list.len() != rows {
            return Err(Error::parse(field, format!("expected {rows} rows, found {}", list.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (r, row) in list.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| Error::parse(field, format!("row {r} is not an array")))?;
            if row.len() != cols {
                return Err(Error::parse(field, format!("row {r} has {} entries, expected {cols}", row.len())));
            }
            for (c, e) in row.iter().enumerate() {
                data.push(T::from_json(e).ok_or_else(|| Error::parse(field, format!("bad entry at ({r},{c}): {e}")))?);
            }
        }
        Matrix::new(rows, cols, data)
    }

    /// `{"rows": r, "cols": c, "data": [[...]]}`.
    pub fn to_json(&self) -> Value {
        json!({ "rows": self.rows(), "cols": self.cols(), "data": self.rows_to_json() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let dim = |key: &str| -> Result<usize> {
            v.get(key)
                .and_then(Value::as_u64)
                .map(|n| n as usize)
                .ok_or_else(|| Error::parse(key, "expected a nonnegative integer"))
        };
        let rows = dim("rows")?;
        let cols = dim("cols")?;
        let data = v.get("data").ok_or_else(|| Error::parse("data", "missing"))?;
        Self::rows_from_json(data, rows, cols, "data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{IntMatrix, RatMatrix};

    #[test]
    fn rational_strings() {
        let m =
            RatMatrix::new(1, 2, vec![BigRational::new((-1).into(), 2.into()), BigRational::from_integer(3.into())])
                .unwrap();
        let v = m.to_json();
        assert_eq!(v.to_string(), r#"{"cols":2,"data":[["-1/2","3"]],"rows":1}"#);
        assert_eq!(RatMatrix::from_json(&v).unwrap(), m);
    }

    #[test]
    fn big_integers_become_strings() {
        let big: BigInt = BigInt::from(i64::MAX) * 4;
        let m = IntMatrix::new(1, 1, vec![big.clone()]).unwrap();
        let v = m.to_json();
        assert!(v["data"][0][0].is_string());
        assert_eq!(IntMatrix::from_json(&v).unwrap().get(0, 0), &big);
    }

    #[test]
    fn shape_errors_name_the_field() {
        let v = json!({"rows": 2, "cols": 1, "data": [[1]]});
        match IntMatrix::from_json(&v) {
            Err(Error::Parse { field, .. }) => assert_eq!(field, "data"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_rational("1/0").is_none());
    }
}
