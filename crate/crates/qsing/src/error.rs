use num_bigint::BigUint;
use thiserror::Error;

/// Errors shared across the library.
///
/// Variants split into three groups: input validation (`NotCoprime`,
/// `QOutOfRange`, `TableTwoConditionViolated`, parse and divisor-record
/// errors), dispatch preconditions (`HyperkahlerInput`,
/// `DivisorDataRequired`, `ShapeMismatch`, `NoEmbeddingRelation`), and
/// internal-consistency failures that signal a bug or corrupted data
/// rather than bad user input (`ChainInvariantViolation`,
/// `NoIntegerSolution`, `TableThreeDisagreement`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: BigUint, q: BigUint },

    #[error("q = {q} out of range for p = {p}: need 1 <= q < p and p >= 2")]
    QOutOfRange { p: BigUint, q: BigUint },

    #[error("group parameter condition violated: {which}")]
    TableTwoConditionViolated { which: String },

    #[error("lattice chain invariant violated: {0}")]
    ChainInvariantViolation(String),

    #[error("no integer coefficient solves the transition recursion at index {index}")]
    NoIntegerSolution { index: usize },

    #[error("chart index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("divisor contains a curve of self-intersection {found}; minimality requires <= -2")]
    MinimalityViolation { found: String },

    #[error("star divisor must have exactly 3 arms, found {found}")]
    ArmCountError { found: usize },

    #[error("operation requires a {expected} divisor, found a {found}")]
    ShapeMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("group is hyperkahler; use the hyperkahler moduli route")]
    HyperkahlerInput,

    #[error("divisor data required for {0}; supply a divisor file or a bundled label")]
    DivisorDataRequired(String),

    #[error("l = {l} matches no residue-class row for the {family} family")]
    ResidueClassInvalid { family: String, l: u64 },

    #[error("divisor data disagrees with the closed-form dimension: {0}")]
    TableThreeDisagreement(String),

    #[error("no (l, e) embedding relation available for {family} residue {residue}")]
    NoEmbeddingRelation { family: String, residue: u64 },

    #[error("divisor data does not match the group: {0}")]
    DivisorDataMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
