//! Access to the bundled data files.
//!
//! Two datasets ship embedded in the library: `divisors.jsonl` (named
//! exceptional divisor shapes) and `table3.jsonl` (the closed-form
//! dimension rows for the T*/O*/I* families). Setting the environment
//! variable `QSING_DATA_DIR` to a directory containing files of the
//! same names replaces the bundled data at runtime.

use std::path::PathBuf;

use num_bigint::{BigInt, BigUint};
use serde::Deserialize;

use crate::divisor::{parse_divisor_dataset, DivisorRecord};
use crate::error::{Error, Result};
use crate::group::Table3Family;

const BUNDLED_DIVISORS: &str = include_str!("../data/divisors.jsonl");
const BUNDLED_TABLE3: &str = include_str!("../data/table3.jsonl");

/// Name of the override environment variable.
pub const DATA_DIR_ENV: &str = "QSING_DATA_DIR";

fn override_file(name: &str) -> Option<PathBuf> {
    std::env::var_os(DATA_DIR_ENV).map(|dir| PathBuf::from(dir).join(name))
}

fn load_text(name: &str, bundled: &'static str) -> Result<String> {
    match override_file(name) {
        Some(path) => std::fs::read_to_string(&path).map_err(|e| {
            Error::ParseError(format!("cannot read {}: {e}", path.display()))
        }),
        None => Ok(bundled.to_string()),
    }
}

/// All bundled (or overridden) divisor records.
pub fn divisor_records() -> Result<Vec<DivisorRecord>> {
    parse_divisor_dataset(&load_text("divisors.jsonl", BUNDLED_DIVISORS)?)
}

/// Looks up a divisor record by its label.
pub fn divisor_by_label(label: &str) -> Result<Option<DivisorRecord>> {
    Ok(divisor_records()?
        .into_iter()
        .find(|r| r.label.as_deref() == Some(label)))
}

/// One residue-class row of the closed-form dimension table:
/// `m(l) = (l - offset) / divisor + constant` for
/// `l = residue (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table3Row {
    pub family: Table3Family,
    pub modulus: u64,
    pub residue: u64,
    pub offset: u64,
    pub divisor: u64,
    pub constant: u64,
    /// Affine relation `l = l_rel.0 * b + l_rel.1`, when known.
    pub l_rel: Option<(i64, i64)>,
    /// Affine relation `e = e_rel.0 * b + e_rel.1`, when known.
    pub e_rel: Option<(i64, i64)>,
}

impl Table3Row {
    /// Whether `l` falls in this row's residue class.
    pub fn matches(&self, l: u64) -> bool {
        l % self.modulus == self.residue
    }

    /// Evaluates the closed form at `l`, verifying the congruence and
    /// exact divisibility.
    pub fn m_at(&self, l: u64) -> Result<BigUint> {
        if !self.matches(l) || l < self.offset {
            return Err(Error::ResidueClassInvalid {
                family: self.family.name().into(),
                l,
            });
        }
        let diff = BigInt::from(l) - BigInt::from(self.offset);
        let (quot, rem) = num_integer::Integer::div_rem(&diff, &BigInt::from(self.divisor));
        if !num_traits::Zero::is_zero(&rem) {
            return Err(Error::ResidueClassInvalid {
                family: self.family.name().into(),
                l,
            });
        }
        let m = quot + BigInt::from(self.constant);
        m.to_biguint().ok_or(Error::ResidueClassInvalid {
            family: self.family.name().into(),
            l,
        })
    }

    /// Smallest `l > 1` in this row's residue class.
    pub fn smallest_l(&self) -> u64 {
        if self.residue > 1 {
            self.residue
        } else {
            self.residue + self.modulus
        }
    }

    /// Human-readable closed form.
    pub fn formula(&self) -> String {
        format!("(l - {}) / {} + {}", self.offset, self.divisor, self.constant)
    }
}

#[derive(Deserialize)]
struct RawTable3Row {
    family: String,
    modulus: u64,
    residue: u64,
    offset: u64,
    divisor: u64,
    constant: u64,
    #[serde(default)]
    l_rel: Option<[i64; 2]>,
    #[serde(default)]
    e_rel: Option<[i64; 2]>,
}

/// All rows of the closed-form table, in file order.
pub fn table3_rows() -> Result<Vec<Table3Row>> {
    let text = load_text("table3.jsonl", BUNDLED_TABLE3)?;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let context = |msg: String| Error::ParseError(format!("table3 line {}: {msg}", lineno + 1));
        let raw: RawTable3Row =
            serde_json::from_str(trimmed).map_err(|e| context(e.to_string()))?;
        let family = Table3Family::from_name(&raw.family)
            .ok_or_else(|| context(format!("unknown family '{}'", raw.family)))?;
        if raw.modulus == 0 || raw.divisor == 0 {
            return Err(context("modulus and divisor must be positive".into()));
        }
        if raw.residue >= raw.modulus {
            return Err(context("residue must be reduced mod modulus".into()));
        }
        rows.push(Table3Row {
            family,
            modulus: raw.modulus,
            residue: raw.residue,
            offset: raw.offset,
            divisor: raw.divisor,
            constant: raw.constant,
            l_rel: raw.l_rel.map(|[a, b]| (a, b)),
            e_rel: raw.e_rel.map(|[a, b]| (a, b)),
        });
    }
    Ok(rows)
}

/// The row covering the given family and parameter `l`.
pub fn table3_row_for(family: Table3Family, l: u64) -> Result<Table3Row> {
    table3_rows()?
        .into_iter()
        .find(|row| row.family == family && row.matches(l))
        .ok_or(Error::ResidueClassInvalid {
            family: family.name().into(),
            l,
        })
}
