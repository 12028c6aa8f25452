//! Tensor JSON: `{"dims":[n1,n2,n3], "entries":[[i,j,k,value],...]}` with
//! values as integers, decimal strings, or `{"poly":{"exp":coeff}}`.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{Ring, Tensor3};
use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::json::BigIntValue;

pub trait JsonValue: Ring {
    fn to_value(&self) -> Value;
    fn from_value(v: &Value) -> Result<Self>;
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl JsonValue for BigInt {
    fn to_value(&self) -> Value {
        serde_json::to_value(BigIntValue(self.clone())).expect("integer serializes")
    }

    fn from_value(v: &Value) -> Result<Self> {
        match v {
            Value::Number(_) | Value::String(_) => serde_json::from_value::<BigIntValue>(v.clone())
                .map(|b| b.0)
                .map_err(|e| parse_err(e.to_string())),
            other => Err(parse_err(format!("expected an integer, got {other}"))),
        }
    }
}

impl JsonValue for Polynomial {
    fn to_value(&self) -> Value {
        json!({ "poly": self })
    }

    fn from_value(v: &Value) -> Result<Self> {
        match v {
            Value::Object(m) if m.len() == 1 && m.contains_key("poly") => {
                serde_json::from_value(m["poly"].clone()).map_err(|e| parse_err(e.to_string()))
            }
            Value::Object(_) => Err(parse_err("polynomial values must be {\"poly\": {...}}")),
            other => BigInt::from_value(other).map(Polynomial::from),
        }
    }
}

impl<R: JsonValue> Tensor3<R> {
    pub fn to_json_value(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|([i, j, k], v)| json!([i, j, k, v.to_value()]))
            .collect();
        json!({ "dims": self.dims(), "entries": entries })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("tensor serializes")
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| parse_err("tensor must be an object"))?;
        if let Some(k) = obj.keys().find(|k| *k != "dims" && *k != "entries") {
            return Err(parse_err(format!("unknown tensor field {k}")));
        }
        let dims: [usize; 3] = serde_json::from_value(obj.get("dims").cloned().unwrap_or(Value::Null))
            .map_err(|e| parse_err(format!("dims: {e}")))?;
        let mut t: Tensor3<R> = Tensor3::new(dims);
        let entries = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| parse_err("entries must be an array"))?;
        for e in entries {
            let parts = e
                .as_array()
                .filter(|p| p.len() == 4)
                .ok_or_else(|| parse_err(format!("entry {e} is not [i,j,k,value]")))?;
            let mut idx = [0usize; 3];
            for a in 0..3 {
                idx[a] = parts[a]
                    .as_u64()
                    .ok_or_else(|| parse_err(format!("entry {e}: bad index")))? as usize;
            }
            let value = R::from_value(&parts[3])?;
            if !t.get(idx).is_zero() {
                return Err(parse_err(format!("entry {idx:?} listed twice")));
            }
            t.set(idx, value).map_err(|err| parse_err(err.to_string()))?;
        }
        Ok(t)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

/// A parsed tensor: integer entries, or polynomial ones if any value is a
/// polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyTensor {
    Int(Tensor3<BigInt>),
    Poly(Tensor3<Polynomial>),
}

impl AnyTensor {
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        let has_poly = v
            .get("entries")
            .and_then(Value::as_array)
            .is_some_and(|es| es.iter().any(|e| e.get(3).is_some_and(Value::is_object)));
        Ok(if has_poly {
            AnyTensor::Poly(Tensor3::from_json_value(&v)?)
        } else {
            AnyTensor::Int(Tensor3::from_json_value(&v)?)
        })
    }
}
