//! JSON helpers. Big integers always travel as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;

pub fn big_as_string<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub fn rational_as_string<S: Serializer>(
    value: &BigRational,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

/// Serializes one value as a single JSON line (no trailing newline).
pub fn to_json_line<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types always serialize")
}
