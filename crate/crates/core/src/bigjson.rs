//! Serde adapters for big integers: plain numbers while they are exactly
//! representable as doubles (`≤ 2^53`), decimal strings beyond that.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;
use std::fmt;

const SAFE: u64 = 1 << 53;

struct Any;

impl Visitor<'_> for Any {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse().map_err(|_| E::custom(format!("bad integer {v:?}")))
    }
}

pub mod nat {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match x.to_u64() {
            Some(v) if v <= SAFE => s.serialize_u64(v),
            _ => s.serialize_str(&x.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        d.deserialize_any(Any)?
            .to_biguint()
            .ok_or_else(|| de::Error::custom("negative value"))
    }
}

pub mod int {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match x.to_i64() {
            Some(v) if v.unsigned_abs() <= SAFE => s.serialize_i64(v),
            _ => s.serialize_str(&x.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        d.deserialize_any(Any)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct T(#[serde(with = "super::nat")] BigUint);

    #[test]
    fn threshold() {
        let small = T(BigUint::from(1u64 << 53));
        assert_eq!(serde_json::to_string(&small).unwrap(), "9007199254740992");
        let big = T(BigUint::from((1u64 << 53) + 1));
        let js = serde_json::to_string(&big).unwrap();
        assert_eq!(js, "\"9007199254740993\"");
        assert_eq!(serde_json::from_str::<T>(&js).unwrap(), big);
    }
}
