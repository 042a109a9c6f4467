//! Serde adapters writing [`Natural`] values as decimal strings, so JSON
//! output never loses precision.

use serde::{de, Deserialize, Deserializer, Serializer};

use crate::natural::Natural;

pub fn serialize<T: Natural, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn deserialize<'de, T: Natural, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
    let text = String::deserialize(d)?;
    text.parse()
        .map_err(|_| de::Error::custom(format!("not a decimal integer: {text:?}")))
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<T: Natural, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, T: Natural, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        items
            .iter()
            .map(|t| {
                t.parse()
                    .map_err(|_| de::Error::custom(format!("not a decimal integer: {t:?}")))
            })
            .collect()
    }
}
