//! Exceptional divisor dual graphs and the counts derived from them.
//!
//! Minimal resolutions of the quotient singularities treated here have
//! exactly two graph shapes: a chain of rational curves (cyclic
//! groups) or three Hirzebruch-Jung strings attached to a central
//! rational curve (non-cyclic groups). Self-intersection numbers are
//! stored as the negative integers geometers write, all `<= -2`;
//! adjacency is implicit in the shape, so no general graph type is
//! needed.
//!
//! External divisor records are single-line JSON objects, either
//! `{"chain": [-3, -2]}` or
//! `{"central": -2, "arms": [[-2], [-2], [-2]]}`, with optional
//! `"label"` and `"source"` strings. A bundled dataset of classical
//! shapes ships with the crate (see [`crate::data`]).

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::hj;

/// Dual graph of the exceptional set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExceptionalDivisor {
    /// A Hirzebruch-Jung string; entries are the self-intersections
    /// `-e_1, ..., -e_k`.
    Chain { self_intersections: Vec<BigInt> },
    /// Three strings attached to a central curve of self-intersection
    /// `central = -b`.
    Star {
        central: BigInt,
        arms: [Vec<BigInt>; 3],
    },
}

fn check_minimal<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> Result<()> {
    let minus_two = BigInt::from(-2);
    for v in values {
        if *v > minus_two {
            return Err(Error::MinimalityViolation {
                found: v.to_string(),
            });
        }
    }
    Ok(())
}

impl ExceptionalDivisor {
    /// A validated chain; every entry must be `<= -2` and the chain
    /// non-empty.
    pub fn chain(self_intersections: Vec<BigInt>) -> Result<Self> {
        if self_intersections.is_empty() {
            return Err(Error::ParseError("chain must be non-empty".into()));
        }
        check_minimal(&self_intersections)?;
        Ok(ExceptionalDivisor::Chain { self_intersections })
    }

    /// A validated three-armed star; the central curve and every arm
    /// entry must be `<= -2`, and arms must be non-empty.
    pub fn star(central: BigInt, arms: [Vec<BigInt>; 3]) -> Result<Self> {
        check_minimal(std::iter::once(&central))?;
        for arm in &arms {
            if arm.is_empty() {
                return Err(Error::ParseError("star arms must be non-empty".into()));
            }
            check_minimal(arm)?;
        }
        Ok(ExceptionalDivisor::Star { central, arms })
    }

    pub fn chain_i64(entries: &[i64]) -> Result<Self> {
        Self::chain(entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn star_i64(central: i64, arms: [&[i64]; 3]) -> Result<Self> {
        Self::star(
            BigInt::from(central),
            arms.map(|a| a.iter().map(|&v| BigInt::from(v)).collect()),
        )
    }

    /// All self-intersection numbers, central curve first for stars.
    pub fn curves(&self) -> Vec<&BigInt> {
        match self {
            ExceptionalDivisor::Chain { self_intersections } => {
                self_intersections.iter().collect()
            }
            ExceptionalDivisor::Star { central, arms } => std::iter::once(central)
                .chain(arms.iter().flatten())
                .collect(),
        }
    }

    /// Number of exceptional curves `k`.
    pub fn curve_count(&self) -> usize {
        self.curves().len()
    }

    /// True when every curve is a `-2` curve, i.e. the graph is one of
    /// the ADE (SU(2)) configurations.
    pub fn is_ade(&self) -> bool {
        let minus_two = BigInt::from(-2);
        self.curves().into_iter().all(|v| *v == minus_two)
    }

    pub fn shape_name(&self) -> &'static str {
        match self {
            ExceptionalDivisor::Chain { .. } => "chain",
            ExceptionalDivisor::Star { .. } => "star",
        }
    }
}

/// The counts attached to a divisor: `j = 2 sum (e_i - 1)`, the curve
/// count `k`, `d = j + k`, and the deformation-space dimension
/// `h1 = sum (e_i - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorCounts {
    pub j_gamma: BigUint,
    pub k_gamma: BigUint,
    pub d_gamma: BigUint,
    pub h1_theta: BigUint,
}

/// Sums `e_i - 1` over the given self-intersections `-e_i`.
fn sum_e_minus_one<'a>(curves: impl IntoIterator<Item = &'a BigInt>) -> BigUint {
    let total: BigInt = curves.into_iter().map(|v| -v - 1).sum();
    total
        .to_biguint()
        .expect("self-intersections <= -2 make each term positive")
}

/// Computes all four counts of a divisor.
pub fn counts(divisor: &ExceptionalDivisor) -> DivisorCounts {
    let h1_theta = sum_e_minus_one(divisor.curves());
    let j_gamma = BigUint::from(2u32) * &h1_theta;
    let k_gamma = BigUint::from(divisor.curve_count());
    let d_gamma = &j_gamma + &k_gamma;
    DivisorCounts {
        j_gamma,
        k_gamma,
        d_gamma,
        h1_theta,
    }
}

/// `h1` of a star computed two ways: as the split count
/// `(b - 1) + sum_arms sum (e - 1)` and as the flat sum over all
/// curves. The central curve contributes `b - 1` to the flat sum, so
/// the two always agree; returning both keeps the identity assertable.
pub fn star_h1_split(divisor: &ExceptionalDivisor) -> Result<(BigUint, BigUint)> {
    match divisor {
        ExceptionalDivisor::Star { central, arms } => {
            let b_minus_one = (-central - 1i32)
                .to_biguint()
                .expect("central <= -2");
            let arm_sum: BigUint = arms.iter().map(sum_e_minus_one).sum();
            let split = b_minus_one + arm_sum;
            let flat = sum_e_minus_one(divisor.curves());
            Ok((split, flat))
        }
        other => Err(Error::ShapeMismatch {
            expected: "star",
            found: other.shape_name(),
        }),
    }
}

/// The chain divisor of the cyclic group `1/p (1, q)`: self
/// intersections `-e_i` from the Hirzebruch-Jung expansion.
pub fn cyclic_divisor(p: &BigUint, q: &BigUint) -> Result<ExceptionalDivisor> {
    let expansion = hj::hj_expand(p, q)?;
    ExceptionalDivisor::chain(expansion.entries.iter().map(|e| -e).collect())
}

/// Embedding dimension of a dihedral-family singularity from its star:
/// `e = sum (e_i - 2) + 3` over all curves including the central one.
pub fn dihedral_embedding_dimension(divisor: &ExceptionalDivisor) -> Result<BigUint> {
    match divisor {
        ExceptionalDivisor::Star { .. } => {
            let total: BigInt = divisor.curves().into_iter().map(|v| -v - 2).sum();
            Ok(total.to_biguint().expect("entries <= -2") + BigUint::from(3u32))
        }
        other => Err(Error::ShapeMismatch {
            expected: "star",
            found: other.shape_name(),
        }),
    }
}

/// A divisor record as stored in data files: the graph plus optional
/// label and source annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorRecord {
    pub label: Option<String>,
    pub source: Option<String>,
    pub divisor: ExceptionalDivisor,
}

fn int_from_json(value: &serde_json::Value) -> Result<BigInt> {
    match value {
        serde_json::Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| Error::ParseError(format!("'{n}' is not an integer"))),
        other => Err(Error::ParseError(format!("expected an integer, got {other}"))),
    }
}

fn int_list_from_json(value: &serde_json::Value) -> Result<Vec<BigInt>> {
    value
        .as_array()
        .ok_or_else(|| Error::ParseError(format!("expected a list, got {value}")))?
        .iter()
        .map(int_from_json)
        .collect()
}

/// Parses a single JSON divisor record. Exactly one of `"chain"` and
/// `"central"`/`"arms"` must be present; self-intersections are
/// validated (`<= -2`), and a star must have exactly three arms.
pub fn load_divisor(text: &str) -> Result<DivisorRecord> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::ParseError(format!("invalid divisor record: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::ParseError("divisor record must be a JSON object".into()))?;

    for key in obj.keys() {
        if !matches!(key.as_str(), "chain" | "central" | "arms" | "label" | "source") {
            return Err(Error::ParseError(format!("unknown field '{key}'")));
        }
    }
    let get_str = |key: &str| -> Result<Option<String>> {
        match obj.get(key) {
            None => Ok(None),
            Some(serde_json::Value::String(s)) => Ok(Some(s.clone())),
            Some(other) => Err(Error::ParseError(format!(
                "field '{key}' must be a string, got {other}"
            ))),
        }
    };
    let label = get_str("label")?;
    let source = get_str("source")?;

    let divisor = match (obj.get("chain"), obj.get("central"), obj.get("arms")) {
        (Some(chain), None, None) => ExceptionalDivisor::chain(int_list_from_json(chain)?)?,
        (None, Some(central), Some(arms)) => {
            let arm_lists = arms
                .as_array()
                .ok_or_else(|| Error::ParseError("'arms' must be a list of lists".into()))?;
            if arm_lists.len() != 3 {
                return Err(Error::ArmCountError {
                    found: arm_lists.len(),
                });
            }
            let mut parsed = arm_lists
                .iter()
                .map(int_list_from_json)
                .collect::<Result<Vec<_>>>()?;
            let a2 = parsed.pop().unwrap();
            let a1 = parsed.pop().unwrap();
            let a0 = parsed.pop().unwrap();
            ExceptionalDivisor::star(int_from_json(central)?, [a0, a1, a2])?
        }
        (None, Some(_), None) => {
            return Err(Error::ArmCountError { found: 0 });
        }
        _ => {
            return Err(Error::ParseError(
                "record must have either 'chain' or 'central' + 'arms'".into(),
            ))
        }
    };
    Ok(DivisorRecord {
        label,
        source,
        divisor,
    })
}

/// Renders a record back to its single-line JSON form.
pub fn format_divisor(record: &DivisorRecord) -> String {
    let mut obj = serde_json::Map::new();
    if let Some(label) = &record.label {
        obj.insert("label".into(), serde_json::Value::String(label.clone()));
    }
    let num = |v: &BigInt| {
        serde_json::Value::Number(
            serde_json::Number::from_string_unchecked(v.to_string()),
        )
    };
    let list = |vs: &[BigInt]| serde_json::Value::Array(vs.iter().map(num).collect());
    match &record.divisor {
        ExceptionalDivisor::Chain { self_intersections } => {
            obj.insert("chain".into(), list(self_intersections));
        }
        ExceptionalDivisor::Star { central, arms } => {
            obj.insert("central".into(), num(central));
            obj.insert(
                "arms".into(),
                serde_json::Value::Array(arms.iter().map(|a| list(a)).collect()),
            );
        }
    }
    if let Some(source) = &record.source {
        obj.insert("source".into(), serde_json::Value::String(source.clone()));
    }
    serde_json::Value::Object(obj).to_string()
}

/// Parses a dataset: one JSON record per line, `#` comments and blank
/// lines allowed.
pub fn parse_divisor_dataset(text: &str) -> Result<Vec<DivisorRecord>> {
    let mut records = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let record = load_divisor(trimmed)
            .map_err(|e| Error::ParseError(format!("line {}: {e}", lineno + 1)))?;
        records.push(record);
    }
    Ok(records)
}
