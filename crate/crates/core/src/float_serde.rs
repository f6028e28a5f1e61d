//! JSON has no encoding for infinities; they travel as `null`.

use serde::{Deserialize, Deserializer, Serializer};

/// `+inf` and NaN serialize as `null`; `null` deserializes as `+inf`.
pub fn serialize<S: Serializer>(value: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    if value.is_finite() {
        serializer.serialize_f64(*value)
    } else if *value == f64::NEG_INFINITY {
        Err(serde::ser::Error::custom("negative infinity is not representable"))
    } else {
        serializer.serialize_none()
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(deserializer)?.unwrap_or(f64::INFINITY))
}
