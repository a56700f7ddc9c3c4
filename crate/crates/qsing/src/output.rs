//! Structured output records.
//!
//! Every command emits line-delimited JSON records carrying a
//! `"schema": 1` field. Numeric values are exact integers of arbitrary
//! size (never floating point), so records round-trip:
//! parsing a formatted record reproduces it bit for bit.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::divisor::ExceptionalDivisor;
use crate::error::{Error, Result};

/// Current record schema version.
pub const SCHEMA_VERSION: u32 = 1;

/// An arbitrary-precision integer rendered as a plain JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let number = serde_json::Number::deserialize(deserializer)?;
        number
            .to_string()
            .parse::<BigInt>()
            .map(JsonInt)
            .map_err(|_| D::Error::custom(format!("'{number}' is not an integer")))
    }
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        JsonInt(v.clone())
    }
}

impl From<&BigUint> for JsonInt {
    fn from(v: &BigUint) -> Self {
        JsonInt(BigInt::from(v.clone()))
    }
}

impl From<u64> for JsonInt {
    fn from(v: u64) -> Self {
        JsonInt(BigInt::from(v))
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Divisor graph in the record stream; mirrors the divisor file format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivisorJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<JsonInt>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub central: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arms: Option<Vec<Vec<JsonInt>>>,
}

impl From<&ExceptionalDivisor> for DivisorJson {
    fn from(d: &ExceptionalDivisor) -> Self {
        match d {
            ExceptionalDivisor::Chain { self_intersections } => DivisorJson {
                chain: Some(self_intersections.iter().map(JsonInt::from).collect()),
                central: None,
                arms: None,
            },
            ExceptionalDivisor::Star { central, arms } => DivisorJson {
                chain: None,
                central: Some(JsonInt::from(central)),
                arms: Some(
                    arms.iter()
                        .map(|arm| arm.iter().map(JsonInt::from).collect())
                        .collect(),
                ),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChartJson {
    pub eta: [JsonInt; 2],
    pub xi: [JsonInt; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionJson {
    pub index: usize,
    pub inverse_holds: bool,
    pub recursion_holds: bool,
    pub coefficient: JsonInt,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualBasisJson {
    pub index: usize,
    pub holds: bool,
}

/// Record emitted by `resolve`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolveRecord {
    pub schema: u32,
    pub kind: String,
    pub group: String,
    pub order: JsonInt,
    pub route: String,
    pub m: JsonInt,
    pub orbit_dim: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding_dim: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hj: Option<Vec<JsonInt>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_hj: Option<Vec<JsonInt>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor: Option<DivisorJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<[JsonInt; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomials: Option<Vec<[JsonInt; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charts: Option<Vec<ChartJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transitions: Option<Vec<TransitionJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_basis: Option<Vec<DualBasisJson>>,
}

/// One instantiated row of the dimension table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Record {
    pub schema: u32,
    pub kind: String,
    pub row: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub d: JsonInt,
    pub m: JsonInt,
    /// Second evaluation of `m` where the row admits one
    /// (`2e + 3k - 8` on row 3, `2e + 3k - 7` on row 4).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_alt: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<JsonInt>,
}

/// One residue-class row of the closed-form table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table3Record {
    pub schema: u32,
    pub kind: String,
    pub family: String,
    pub modulus: u64,
    pub residue: u64,
    pub offset: u64,
    pub divisor: u64,
    pub constant: u64,
    pub formula: String,
    pub smallest_l: u64,
    pub m_at_smallest: JsonInt,
}

/// One invariant sweep outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub schema: u32,
    pub kind: String,
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// Machine-readable error object, written to the error stream.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub schema: u32,
    pub kind: String,
    pub error: String,
    pub message: String,
    pub exit_code: i32,
}

/// Exit codes: 2 for parse errors, 3 for validation and data errors,
/// 4 for missing divisor data, 1 for internal-consistency failures.
pub fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::ParseError(_) => 2,
        Error::DivisorDataRequired(_) => 4,
        Error::NotCoprime { .. }
        | Error::QOutOfRange { .. }
        | Error::TableTwoConditionViolated { .. }
        | Error::MinimalityViolation { .. }
        | Error::ArmCountError { .. }
        | Error::ShapeMismatch { .. }
        | Error::HyperkahlerInput
        | Error::ResidueClassInvalid { .. }
        | Error::TableThreeDisagreement(_)
        | Error::NoEmbeddingRelation { .. }
        | Error::DivisorDataMismatch(_) => 3,
        Error::ChainInvariantViolation(_)
        | Error::NoIntegerSolution { .. }
        | Error::IndexOutOfRange { .. } => 1,
    }
}

/// Short stable name of an error variant for the error record.
pub fn error_name(error: &Error) -> &'static str {
    match error {
        Error::NotCoprime { .. } => "NotCoprime",
        Error::QOutOfRange { .. } => "QOutOfRange",
        Error::TableTwoConditionViolated { .. } => "TableTwoConditionViolated",
        Error::ChainInvariantViolation(_) => "ChainInvariantViolation",
        Error::NoIntegerSolution { .. } => "NoIntegerSolution",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::ParseError(_) => "ParseError",
        Error::MinimalityViolation { .. } => "MinimalityViolation",
        Error::ArmCountError { .. } => "ArmCountError",
        Error::ShapeMismatch { .. } => "ShapeMismatch",
        Error::HyperkahlerInput => "HyperkahlerInput",
        Error::DivisorDataRequired(_) => "DivisorDataRequired",
        Error::ResidueClassInvalid { .. } => "ResidueClassInvalid",
        Error::TableThreeDisagreement(_) => "TableThreeDisagreement",
        Error::NoEmbeddingRelation { .. } => "NoEmbeddingRelation",
        Error::DivisorDataMismatch(_) => "DivisorDataMismatch",
    }
}

pub fn error_record(error: &Error) -> ErrorRecord {
    ErrorRecord {
        schema: SCHEMA_VERSION,
        kind: "error".into(),
        error: error_name(error).into(),
        message: error.to_string(),
        exit_code: exit_code_for(error),
    }
}

/// Serializes any record to its single-line JSON form.
pub fn to_line<T: Serialize>(record: &T) -> Result<String> {
    serde_json::to_string(record).map_err(|e| Error::ParseError(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_int_round_trips_beyond_u64() {
        let huge = JsonInt(BigInt::parse_bytes(b"123456789012345678901234567890123", 10).unwrap());
        let line = serde_json::to_string(&huge).unwrap();
        assert_eq!(line, "123456789012345678901234567890123");
        let back: JsonInt = serde_json::from_str(&line).unwrap();
        assert_eq!(back, huge);
        let neg = JsonInt(BigInt::from(-42));
        let line = serde_json::to_string(&neg).unwrap();
        assert_eq!(line, "-42");
    }

    #[test]
    fn json_int_rejects_floats() {
        assert!(serde_json::from_str::<JsonInt>("2.5").is_err());
        assert!(serde_json::from_str::<JsonInt>("1e3").is_err());
    }

    #[test]
    fn resolve_record_round_trips() {
        let record = ResolveRecord {
            schema: SCHEMA_VERSION,
            kind: "resolve".into(),
            group: "cyclic:7/3".into(),
            order: JsonInt::from(7u64),
            route: "table1-row3".into(),
            m: JsonInt::from(9u64),
            orbit_dim: 2,
            j: Some(JsonInt::from(8u64)),
            k: Some(JsonInt::from(3u64)),
            d: Some(JsonInt::from(11u64)),
            h1: Some(JsonInt::from(4u64)),
            embedding_dim: Some(JsonInt::from(4u64)),
            hj: Some(vec![JsonInt::from(3u64), JsonInt::from(2u64), JsonInt::from(2u64)]),
            dual_hj: None,
            divisor: Some(DivisorJson {
                chain: Some(vec![
                    JsonInt(BigInt::from(-3)),
                    JsonInt(BigInt::from(-2)),
                    JsonInt(BigInt::from(-2)),
                ]),
                central: None,
                arms: None,
            }),
            lattice: None,
            monomials: None,
            charts: None,
            transitions: None,
            dual_basis: None,
        };
        let line = to_line(&record).unwrap();
        let back: ResolveRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, record);
    }

    #[test]
    fn exit_codes_follow_the_documented_mapping() {
        assert_eq!(exit_code_for(&Error::ParseError("x".into())), 2);
        assert_eq!(
            exit_code_for(&Error::NotCoprime {
                p: BigUint::from(6u32),
                q: BigUint::from(3u32)
            }),
            3
        );
        assert_eq!(exit_code_for(&Error::DivisorDataRequired("g".into())), 4);
        assert_eq!(exit_code_for(&Error::NoIntegerSolution { index: 0 }), 1);
    }
}
