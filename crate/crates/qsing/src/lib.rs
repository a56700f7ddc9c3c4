//! Exact-arithmetic resolution combinatorics for quotient surface
//! singularities, and the dimension of the local moduli space of
//! scalar-flat Kahler ALE metrics on their minimal resolutions.
//!
//! For a finite subgroup of U(2) without complex reflections the crate
//! computes, over arbitrary-precision integers and rationals:
//!
//! - [`hj`]: ceiling-type continued fractions of `p/q`, their duals,
//!   the embedding dimension, and the Riemenschneider identities as
//!   executable checks;
//! - [`toric`]: the lattice-point chain of the cyclic resolution, the
//!   invariant monomial generators, the chart atlas, transition-map
//!   identities, and derivation frame changes;
//! - [`divisor`]: exceptional divisor dual graphs (chains and
//!   three-armed stars), their counts `j`, `k`, `d`, `h1`, and an
//!   external record format for divisor data;
//! - [`group`]: descriptor validation, group order, and dispatch
//!   classification;
//! - [`moduli`]: the moduli dimension `m` for every accepted group,
//!   with double-count cross-checks and the closed-form residue-class
//!   table for the T*/O*/I* families;
//! - [`sweep`]: exhaustive invariant sweeps with fault injection;
//! - [`cli`] and [`output`]: the `qsing` command-line tool and its
//!   line-delimited record format.
//!
//! The `examples/` directory has one runnable example per capability;
//! start with `cargo run --example moduli_report`.

pub mod cli;
pub mod data;
pub mod divisor;
pub mod error;
pub mod group;
pub mod hj;
pub mod moduli;
pub mod output;
pub mod sweep;
pub mod toric;

pub use divisor::{
    counts, cyclic_divisor, dihedral_embedding_dimension, load_divisor, star_h1_split,
    DivisorCounts, DivisorRecord, ExceptionalDivisor,
};
pub use error::{Error, Result};
pub use group::{
    canonical_label, classify, order, parse_group, validate, DispatchClass, GroupDescriptor,
    PolyhedralFactor, Table3Family, ValidatedGroup,
};
pub use hj::{
    dual_expand, embedding_dimension, hj_expand, riemenschneider_check, HJExpansion,
    RiemenschneiderReport,
};
pub use moduli::{
    full_report, moduli_dimension_cyclic, moduli_dimension_hyperkahler,
    moduli_dimension_noncyclic, table3_consistency, ModuliReport, Route, Table3Consistency,
};
pub use toric::{
    chart_atlas, derivation_change_of_frame, invariant_monomials, lattice_chain,
    verify_transitions, Chart, ChartAtlas, ChainPoint, FrameChange, LatticeChain,
    LaurentMonomial, Mat2, TransitionReport,
};
