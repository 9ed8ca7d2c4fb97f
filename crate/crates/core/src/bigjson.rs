//! Serde adapters that write arbitrary-precision integers as plain JSON
//! numbers (never strings or digit arrays).

use num_bigint::{BigInt, BigUint};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

fn to_number<E: serde::ser::Error>(digits: String) -> Result<serde_json::Number, E> {
    digits.parse::<serde_json::Number>().map_err(E::custom)
}

fn from_number<'de, D: Deserializer<'de>, T: std::str::FromStr>(d: D) -> Result<T, D::Error> {
    let n = serde_json::Number::deserialize(d)?;
    n.to_string().parse::<T>().map_err(|_| de::Error::custom(format!("expected an integer, got {n}")))
}

pub fn number_from_bigint(n: &BigInt) -> serde_json::Number {
    n.to_string().parse().expect("decimal integer is a JSON number")
}

pub mod int {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_number(n.to_string())?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_number(d)
    }
}

pub mod uint {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        to_number(n.to_string())?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        from_number(d)
    }
}

/// Maps with string keys and big-integer values.
pub mod int_map {
    use super::*;
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(m: &BTreeMap<String, BigInt>, s: S) -> Result<S::Ok, S::Error> {
        let mut out = serde_json::Map::new();
        for (k, v) in m {
            out.insert(k.clone(), serde_json::Value::Number(number_from_bigint(v)));
        }
        out.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, BigInt>, D::Error> {
        let raw = BTreeMap::<String, serde_json::Number>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                v.to_string()
                    .parse::<BigInt>()
                    .map(|n| (k, n))
                    .map_err(|_| de::Error::custom(format!("expected an integer, got {v}")))
            })
            .collect()
    }
}
