//! Shared JSON value helpers.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A big integer that serializes as a JSON number when it fits in `i64` and as
/// a decimal string otherwise. Both forms are accepted on input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigIntValue(pub BigInt);

impl Serialize for BigIntValue {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => ser.serialize_i64(v),
            None => ser.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for BigIntValue {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            UInt(u64),
            Str(String),
        }
        match Raw::deserialize(de)? {
            Raw::Int(v) => Ok(BigIntValue(v.into())),
            Raw::UInt(v) => Ok(BigIntValue(v.into())),
            Raw::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map(BigIntValue)
                .map_err(|_| serde::de::Error::custom(format!("bad integer '{s}'"))),
        }
    }
}
