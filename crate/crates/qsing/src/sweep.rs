//! Exhaustive invariant sweeps over parameter ranges.
//!
//! Each sweep re-checks one family of identities over every coprime
//! pair `(p, q)` up to a bound (or every valid `l` for the closed-form
//! table) and reports the number of cases checked plus the first
//! counterexample found, if any. The `(p, q)` tasks are independent,
//! so sweeps fan out across worker threads and merge their results in
//! a single aggregator, keeping the reported counterexample the
//! lexicographically smallest one.
//!
//! A [`Fault`] can be injected to perturb one Hirzebruch-Jung entry;
//! the sweeps must then fail and name the counterexample. This is the
//! sensitivity check that the suite detects seeded bugs.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::data::table3_rows;
use crate::divisor::{counts, cyclic_divisor, dihedral_embedding_dimension, star_h1_split};
use crate::error::Result;
use crate::group::Table3Family;
use crate::hj::{self, HJExpansion};
use crate::moduli::moduli_dimension_hyperkahler;
use crate::toric;

/// Test-only perturbation of one expansion entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub p: u64,
    pub q: u64,
    pub entry_index: usize,
    pub delta: i64,
}

impl Fault {
    /// The default seeded fault for a sweep bound: bump the single
    /// entry of the expansion of `p_max / 1` by one.
    pub fn for_bound(p_max: u64) -> Fault {
        Fault {
            p: p_max,
            q: 1,
            entry_index: 0,
            delta: 1,
        }
    }
}

/// Expands `p/q`, applying the fault when it targets this pair.
fn expand_with_fault(p: u64, q: u64, fault: Option<Fault>) -> Result<HJExpansion> {
    let mut expansion = hj::hj_expand_u64(p, q)?;
    if let Some(f) = fault {
        if f.p == p && f.q == q {
            if let Some(entry) = expansion.entries.get_mut(f.entry_index) {
                *entry += BigInt::from(f.delta);
            }
        }
    }
    Ok(expansion)
}

/// Aggregated outcome of one sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    /// First failing case in scan order, with a short reason.
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Per-pair verdict used by the map-reduce aggregator.
type PairVerdict = (u64, u64, Option<((u64, u64), String)>);

fn coprime_pairs(p_max: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for p in 2..=p_max {
        for q in 1..p {
            if p.gcd(&q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    pairs
}

fn run_pair_sweep<F>(name: &'static str, p_max: u64, check: F) -> CheckResult
where
    F: Fn(u64, u64) -> std::result::Result<(), String> + Sync,
{
    let verdicts: Vec<PairVerdict> = coprime_pairs(p_max)
        .par_iter()
        .map(|&(p, q)| match check(p, q) {
            Ok(()) => (1, 0, None),
            Err(reason) => (1, 1, Some(((p, q), reason))),
        })
        .collect();
    let mut cases = 0;
    let mut failures = 0;
    let mut first: Option<((u64, u64), String)> = None;
    for (c, f, ce) in verdicts {
        cases += c;
        failures += f;
        if let Some(ce) = ce {
            match &first {
                Some(existing) if existing.0 <= ce.0 => {}
                _ => first = Some(ce),
            }
        }
    }
    CheckResult {
        name,
        cases,
        failures,
        counterexample: first.map(|((p, q), reason)| format!("(p, q) = ({p}, {q}): {reason}")),
    }
}

/// Expansion soundness: every entry `>= 2` and exact re-evaluation
/// equals `p/q`.
pub fn sweep_expansion_soundness(p_max: u64, fault: Option<Fault>) -> CheckResult {
    run_pair_sweep("hj-expansion-soundness", p_max, move |p, q| {
        let x = expand_with_fault(p, q, fault).map_err(|e| e.to_string())?;
        if x.is_sound() {
            Ok(())
        } else {
            Err(format!(
                "entries {:?} do not re-evaluate to {p}/{q}",
                x.entries.iter().map(|e| e.to_string()).collect::<Vec<_>>()
            ))
        }
    })
}

/// Duality involution: the dual expansion of `p/(p-q)` has the entry
/// list of the primal expansion of `p/q`.
pub fn sweep_duality_involution(p_max: u64, fault: Option<Fault>) -> CheckResult {
    run_pair_sweep("hj-duality-involution", p_max, move |p, q| {
        let primal = expand_with_fault(p, q, fault).map_err(|e| e.to_string())?;
        let double_dual = hj::dual_expand(&BigUint::from(p), &BigUint::from(p - q))
            .map_err(|e| e.to_string())?;
        if primal.entries == double_dual.entries {
            Ok(())
        } else {
            Err("dual of the dual fraction differs from the primal expansion".into())
        }
    })
}

/// The three Riemenschneider identities, recomputed from scratch so a
/// faulted expansion is caught.
pub fn sweep_riemenschneider(p_max: u64, fault: Option<Fault>) -> CheckResult {
    run_pair_sweep("riemenschneider-identities", p_max, move |p, q| {
        let primal = expand_with_fault(p, q, fault).map_err(|e| e.to_string())?;
        if primal.entries.iter().any(|e| e < &BigInt::from(2)) {
            return Err("expansion has an entry below 2".into());
        }
        let dual = hj::dual_expand(&BigUint::from(p), &BigUint::from(q))
            .map_err(|e| e.to_string())?;
        let sum_e = primal.sum_minus_one();
        let sum_e_prime = dual.sum_minus_one();
        let e = BigUint::from(3u32) + primal.sum_minus_two();
        if sum_e != sum_e_prime {
            return Err(format!("sum (e_i - 1) = {sum_e} but dual gives {sum_e_prime}"));
        }
        if BigUint::from(dual.len() + 2) != e {
            return Err(format!("k' = {} but e - 2 = {}", dual.len(), e - 2u32));
        }
        if &sum_e + BigUint::from(3u32) != &e + BigUint::from(primal.len()) {
            return Err(format!("sum (e_i - 1) = {sum_e} differs from e + k - 3"));
        }
        Ok(())
    })
}

/// Determinant identity and endpoints of the lattice chain.
pub fn sweep_determinant(p_max: u64) -> CheckResult {
    run_pair_sweep("lattice-determinant", p_max, |p, q| {
        // construction re-verifies endpoints, determinants, monotonicity
        let chain =
            toric::lattice_chain(&BigUint::from(p), &BigUint::from(q)).map_err(|e| e.to_string())?;
        let pi = BigInt::from(p);
        for i in 0..chain.points.len() - 1 {
            if chain.determinant(i) != pi {
                return Err(format!("determinant {} at index {i}", chain.determinant(i)));
            }
        }
        Ok(())
    })
}

/// Invariant monomial chain: endpoints `x^p` and `y^p`, nonnegative
/// exponents, length equal to the embedding dimension, weight zero.
pub fn sweep_monomials(p_max: u64) -> CheckResult {
    run_pair_sweep("invariant-monomials", p_max, |p, q| {
        let (bp, bq) = (BigUint::from(p), BigUint::from(q));
        let monomials = toric::invariant_monomials(&bp, &bq).map_err(|e| e.to_string())?;
        let first = monomials.first().expect("non-empty");
        if first != &toric::LaurentMonomial::new(BigInt::from(p), 0) {
            return Err("chain does not start at x^p".into());
        }
        for m in &monomials {
            if !m.is_invariant(&bp, &bq) {
                return Err(format!("monomial ({}, {}) not invariant", m.x_exp, m.y_exp));
            }
        }
        Ok(())
    })
}

/// Transition identities with solved coefficients, plus the dual-basis
/// pairing pattern.
pub fn sweep_transitions(p_max: u64) -> CheckResult {
    run_pair_sweep("chart-transitions", p_max, |p, q| {
        let report = toric::verify_transitions(&BigUint::from(p), &BigUint::from(q))
            .map_err(|e| e.to_string())?;
        for check in &report.per_index {
            if !check.inverse_holds {
                return Err(format!("inverse identity fails at chart {}", check.index));
            }
            if !check.recursion_holds {
                return Err(format!(
                    "recursion coefficient {} differs from the expansion entry at chart {}",
                    check.coefficient, check.index
                ));
            }
        }
        for check in &report.dual_basis {
            if !check.holds {
                return Err(format!("dual-basis pairing fails at chart {}", check.index));
            }
        }
        Ok(())
    })
}

/// Divisor-level identity for cyclic groups: `h1 = e + k - 3`.
pub fn sweep_divisor_h1(p_max: u64) -> CheckResult {
    run_pair_sweep("divisor-h1-identity", p_max, |p, q| {
        let (bp, bq) = (BigUint::from(p), BigUint::from(q));
        let c = counts(&cyclic_divisor(&bp, &bq).map_err(|e| e.to_string())?);
        let e = hj::embedding_dimension(&bp, &bq).map_err(|e| e.to_string())?;
        if &c.h1_theta + BigUint::from(3u32) == e + &c.k_gamma {
            Ok(())
        } else {
            Err(format!("h1 = {} differs from e + k - 3", c.h1_theta))
        }
    })
}

/// Double-count agreement for the generic cyclic row:
/// `j + k - 2 = 2e + 3k - 8`, i.e. both moduli evaluations coincide.
pub fn sweep_double_count(p_max: u64, fault: Option<Fault>) -> CheckResult {
    run_pair_sweep("moduli-double-count", p_max, move |p, q| {
        if q == 1 || q == p - 1 {
            return Ok(());
        }
        let expansion = expand_with_fault(p, q, fault).map_err(|e| e.to_string())?;
        if expansion.entries.iter().any(|e| e < &BigInt::from(2)) {
            return Err("expansion has an entry below 2".into());
        }
        let e = BigUint::from(3u32) + expansion.sum_minus_two();
        let k = BigUint::from(expansion.len());
        let j = BigUint::from(2u32) * expansion.sum_minus_one();
        let lhs = &j + &k - BigUint::from(2u32);
        let rhs = BigUint::from(2u32) * e + BigUint::from(3u32) * &k - BigUint::from(8u32);
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!("j + k - 2 = {lhs} but 2e + 3k - 8 = {rhs}"))
        }
    })
}

/// Hyperkahler dimensions: 1 for A_1 and `3k - 3` for the cyclic
/// `q = p - 1` chains.
pub fn sweep_hyperkahler(p_max: u64) -> CheckResult {
    let mut cases = 0;
    let mut failures = 0;
    let mut counterexample = None;
    let mut check = |k: u64, expected: u64, label: String| {
        cases += 1;
        let got = moduli_dimension_hyperkahler(&BigUint::from(k));
        if got != BigUint::from(expected) {
            failures += 1;
            if counterexample.is_none() {
                counterexample = Some(format!("{label}: got {got}, expected {expected}"));
            }
        }
    };
    check(1, 1, "A_1".into());
    for p in 3..=p_max.max(3) {
        check(p - 1, 3 * (p - 1) - 3, format!("A_{} chain", p - 1));
    }
    CheckResult {
        name: "hyperkahler-dimensions",
        cases,
        failures,
        counterexample,
    }
}

/// Closed-form table integrality: for every family and every valid
/// `l <= l_max` with `l > 1`, exactly one residue row applies, the
/// divisibility is exact, and the result is a positive integer.
pub fn sweep_table3(l_max: u64) -> CheckResult {
    let name = "table3-integrality";
    let rows = match table3_rows() {
        Ok(rows) => rows,
        Err(e) => {
            return CheckResult {
                name,
                cases: 0,
                failures: 1,
                counterexample: Some(e.to_string()),
            }
        }
    };
    let families = [
        Table3Family::Tetrahedral,
        Table3Family::Index3Tetrahedral,
        Table3Family::Octahedral,
        Table3Family::Icosahedral,
    ];
    let valid = |family: Table3Family, l: u64| match family {
        Table3Family::Tetrahedral | Table3Family::Octahedral => l.gcd(&6) == 1,
        Table3Family::Index3Tetrahedral => l.gcd(&6) == 3,
        Table3Family::Icosahedral => l.gcd(&30) == 1,
    };
    let mut cases = 0;
    let mut failures = 0;
    let mut counterexample = None;
    let fail = |msg: String, failures: &mut u64, counterexample: &mut Option<String>| {
        *failures += 1;
        if counterexample.is_none() {
            *counterexample = Some(msg);
        }
    };
    for family in families {
        for l in 2..=l_max {
            if !valid(family, l) {
                continue;
            }
            cases += 1;
            let matching: Vec<_> = rows
                .iter()
                .filter(|r| r.family == family && r.matches(l))
                .collect();
            if matching.len() != 1 {
                fail(
                    format!("{family} l = {l}: {} matching rows", matching.len()),
                    &mut failures,
                    &mut counterexample,
                );
                continue;
            }
            match matching[0].m_at(l) {
                Ok(m) if m > BigUint::zero() => {}
                Ok(m) => fail(
                    format!("{family} l = {l}: m = {m} not positive"),
                    &mut failures,
                    &mut counterexample,
                ),
                Err(e) => fail(
                    format!("{family} l = {l}: {e}"),
                    &mut failures,
                    &mut counterexample,
                ),
            }
        }
    }
    CheckResult {
        name,
        cases,
        failures,
        counterexample,
    }
}

/// Star divisor identities over the bundled dataset: the split `h1`
/// count equals the flat count, and for non-ADE stars the dihedral
/// double count `j + k - 1 = 2e + 3k - 7` holds.
pub fn sweep_bundled_stars() -> CheckResult {
    let name = "bundled-star-identities";
    let records = match crate::data::divisor_records() {
        Ok(records) => records,
        Err(e) => {
            return CheckResult {
                name,
                cases: 0,
                failures: 1,
                counterexample: Some(e.to_string()),
            }
        }
    };
    let mut cases = 0;
    let mut failures = 0;
    let mut counterexample = None;
    for record in records {
        let label = record.label.as_deref().unwrap_or("?").to_string();
        if record.divisor.shape_name() != "star" {
            continue;
        }
        cases += 1;
        let (split, flat) = star_h1_split(&record.divisor).expect("star");
        if split != flat {
            failures += 1;
            if counterexample.is_none() {
                counterexample = Some(format!("{label}: split h1 {split} != flat {flat}"));
            }
            continue;
        }
        let c = counts(&record.divisor);
        let e = dihedral_embedding_dimension(&record.divisor).expect("star");
        let lhs = &c.j_gamma + &c.k_gamma - BigUint::one();
        let rhs =
            BigUint::from(2u32) * e + BigUint::from(3u32) * &c.k_gamma - BigUint::from(7u32);
        if lhs != rhs {
            failures += 1;
            if counterexample.is_none() {
                counterexample = Some(format!("{label}: j + k - 1 = {lhs} != 2e + 3k - 7 = {rhs}"));
            }
        }
    }
    CheckResult {
        name,
        cases,
        failures,
        counterexample,
    }
}

/// Dual-basis rational pairing helper used by tests; re-exported here
/// so sweeps and tests share one definition of "the 0/1 pattern".
pub fn dual_basis_pattern_holds(report: &toric::TransitionReport) -> bool {
    let one = BigRational::one();
    let zero = BigRational::zero();
    report.dual_basis.iter().all(|c| {
        c.pairings[0] == one && c.pairings[1] == zero && c.pairings[2] == zero && c.pairings[3] == one
    })
}

/// Options for [`run_all`].
#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub p_max: u64,
    pub l_max: u64,
    pub fault: Option<Fault>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            p_max: 100,
            l_max: 300,
            fault: None,
        }
    }
}

/// Runs every sweep and collects the results.
pub fn run_all(options: SweepOptions) -> Vec<CheckResult> {
    let SweepOptions { p_max, l_max, fault } = options;
    vec![
        sweep_expansion_soundness(p_max, fault),
        sweep_duality_involution(p_max, fault),
        sweep_riemenschneider(p_max, fault),
        sweep_double_count(p_max, fault),
        sweep_determinant(p_max),
        sweep_monomials(p_max),
        sweep_transitions(p_max),
        sweep_divisor_h1(p_max),
        sweep_hyperkahler(p_max),
        sweep_table3(l_max),
        sweep_bundled_stars(),
    ]
}
