//! Command-line front end.
//!
//! Four subcommands: `resolve` (one group, full report plus optional
//! toric sections), `table1` and `table3` (reproduce the dimension
//! tables), and `verify` (run every invariant sweep). Structured
//! output is line-delimited JSON (see [`crate::output`]); `--format md`
//! renders tables for reading. Errors go to the error stream as JSON
//! objects with exit codes 2 (parse), 3 (validation/data),
//! 4 (missing divisor data).

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_integer::Integer;

use crate::data;
use crate::divisor::{counts, cyclic_divisor, dihedral_embedding_dimension, ExceptionalDivisor};
use crate::error::{Error, Result};
use crate::group::{canonical_label, order, parse_group, GroupDescriptor, ValidatedGroup};
use crate::hj;
use crate::moduli::{full_report, ModuliReport};
use crate::output::{
    error_record, to_line, ChartJson, DivisorJson, DualBasisJson, JsonInt, ResolveRecord,
    Table1Record, Table3Record, TransitionJson, VerifyRecord, SCHEMA_VERSION,
};
use crate::sweep::{run_all, Fault, SweepOptions};
use crate::toric;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Line-delimited JSON records.
    Json,
    /// Markdown tables for reading.
    Md,
}

#[derive(Parser, Debug)]
#[command(
    name = "qsing",
    version,
    about = "Resolution combinatorics and moduli dimensions for quotient surface singularities",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the full report for one group descriptor.
    Resolve {
        /// Group descriptor: cyclic:p/q, dihedral:l,n, tetra:l, octa:l,
        /// icosa:l, idx2dihedral:l,n, idx3tetra:l
        descriptor: String,
        /// Include the scaled lattice chain (cyclic groups only).
        #[arg(long)]
        lattice: bool,
        /// Include the invariant monomial generators (cyclic only).
        #[arg(long)]
        monomials: bool,
        /// Include the chart atlas and transition report (cyclic only).
        #[arg(long)]
        charts: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Read divisor records from this file instead of the bundled
        /// dataset.
        #[arg(long, value_name = "PATH")]
        divisor_file: Option<PathBuf>,
        /// Select a divisor record by label.
        #[arg(long, value_name = "LABEL")]
        divisor_label: Option<String>,
    },
    /// Reproduce the dimension table, instantiating the cyclic rows up
    /// to a bound and the non-cyclic row over the bundled stars.
    Table1 {
        /// Largest cyclic order p to instantiate.
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        pmax: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit every residue-class row of the closed-form table with its
    /// smallest instance.
    Table3 {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run every invariant sweep; exits nonzero if any fails.
    Verify {
        /// Bound on p for the coprime-pair sweeps.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
        pmax: u64,
        /// Bound on l for the closed-form table sweep.
        #[arg(long, default_value_t = 300, value_parser = clap::value_parser!(u64).range(2..))]
        lmax: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Test-only: perturb one expansion entry so the sweeps must
        /// fail.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// Entry point for the binary: parses `std::env::args`.
pub fn run() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run_from(args, &mut std::io::stdout(), &mut std::io::stderr())
}

/// Testable entry point with explicit streams. Returns the exit code.
pub fn run_from<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{rendered}");
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let record = error_record(&e);
            let _ = writeln!(err, "{}", to_line(&record).unwrap_or_else(|_| e.to_string()));
            record.exit_code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let emit = |out: &mut dyn Write, text: String| -> Result<()> {
        writeln!(out, "{text}").map_err(|e| Error::ParseError(format!("write failed: {e}")))
    };
    match cli.command {
        Command::Resolve {
            descriptor,
            lattice,
            monomials,
            charts,
            format,
            divisor_file,
            divisor_label,
        } => {
            let group = parse_group(&descriptor)?;
            let divisor = resolve_divisor(&group, divisor_file.as_deref(), divisor_label.as_deref())?;
            let record = build_resolve_record(
                &group,
                divisor.as_ref(),
                Sections {
                    lattice,
                    monomials,
                    charts,
                },
            )?;
            match format {
                Format::Json => emit(out, to_line(&record)?)?,
                Format::Md => emit(out, render_resolve_md(&record))?,
            }
            Ok(0)
        }
        Command::Table1 { pmax, format } => {
            let records = table1_records(pmax)?;
            match format {
                Format::Json => {
                    for record in &records {
                        emit(out, to_line(record)?)?;
                    }
                }
                Format::Md => emit(out, render_table1_md(&records))?,
            }
            Ok(0)
        }
        Command::Table3 { format } => {
            let records = table3_records()?;
            match format {
                Format::Json => {
                    for record in &records {
                        emit(out, to_line(record)?)?;
                    }
                }
                Format::Md => emit(out, render_table3_md(&records))?,
            }
            Ok(0)
        }
        Command::Verify {
            pmax,
            lmax,
            format,
            inject_fault,
        } => {
            let fault = inject_fault.then(|| Fault::for_bound(pmax));
            let results = run_all(SweepOptions {
                p_max: pmax,
                l_max: lmax,
                fault,
            });
            let all_passed = results.iter().all(|r| r.passed());
            match format {
                Format::Json => {
                    for result in &results {
                        let record = VerifyRecord {
                            schema: SCHEMA_VERSION,
                            kind: "verify-check".into(),
                            name: result.name.into(),
                            cases: result.cases,
                            failures: result.failures,
                            counterexample: result.counterexample.clone(),
                        };
                        emit(out, to_line(&record)?)?;
                    }
                }
                Format::Md => {
                    for result in &results {
                        let status = if result.passed() { "PASS" } else { "FAIL" };
                        let mut line =
                            format!("{status} {} ({} cases)", result.name, result.cases);
                        if let Some(ce) = &result.counterexample {
                            line.push_str(&format!(" counterexample: {ce}"));
                        }
                        emit(out, line)?;
                    }
                    let verdict = if all_passed { "all sweeps passed" } else { "FAILURES" };
                    emit(out, verdict.to_string())?;
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

struct Sections {
    lattice: bool,
    monomials: bool,
    charts: bool,
}

/// Divisor lookup order: explicit file, then bundled dataset by label,
/// then the label implied by an `l = 1` descriptor, then nothing.
fn resolve_divisor(
    group: &ValidatedGroup,
    file: Option<&std::path::Path>,
    label: Option<&str>,
) -> Result<Option<ExceptionalDivisor>> {
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::ParseError(format!("cannot read {}: {e}", path.display())))?;
        let records = crate::divisor::parse_divisor_dataset(&text)?;
        return match label {
            Some(label) => records
                .into_iter()
                .find(|r| r.label.as_deref() == Some(label))
                .map(|r| Some(r.divisor))
                .ok_or_else(|| {
                    Error::ParseError(format!(
                        "no record labelled '{label}' in {}",
                        path.display()
                    ))
                }),
            None if records.len() == 1 => Ok(Some(records.into_iter().next().unwrap().divisor)),
            None if records.is_empty() => {
                Err(Error::ParseError(format!("{} has no records", path.display())))
            }
            None => Err(Error::ParseError(format!(
                "{} has {} records; choose one with --divisor-label",
                path.display(),
                records.len()
            ))),
        };
    }
    if let Some(label) = label {
        return match data::divisor_by_label(label)? {
            Some(record) => Ok(Some(record.divisor)),
            None => Err(Error::ParseError(format!(
                "no bundled divisor labelled '{label}'"
            ))),
        };
    }
    if let Some(implied) = canonical_label(group) {
        return Ok(data::divisor_by_label(&implied)?.map(|r| r.divisor));
    }
    Ok(None)
}

fn big_pair(group: &ValidatedGroup) -> Option<(BigUint, BigUint)> {
    match group.descriptor() {
        GroupDescriptor::Cyclic { p, q } => Some((p.clone(), q.clone())),
        _ => None,
    }
}

fn build_resolve_record(
    group: &ValidatedGroup,
    divisor: Option<&ExceptionalDivisor>,
    sections: Sections,
) -> Result<ResolveRecord> {
    let report: ModuliReport = full_report(group.descriptor(), divisor)?;
    let cyclic = big_pair(group);

    if cyclic.is_none() && (sections.lattice || sections.monomials || sections.charts) {
        return Err(Error::ShapeMismatch {
            expected: "cyclic descriptor for the toric sections",
            found: "non-cyclic descriptor",
        });
    }

    let mut record = ResolveRecord {
        schema: SCHEMA_VERSION,
        kind: "resolve".into(),
        group: group.to_string(),
        order: JsonInt::from(&order(group)),
        route: report.route.to_string(),
        m: JsonInt::from(&report.m_gamma),
        orbit_dim: report.orbit_dim,
        j: None,
        k: None,
        d: None,
        h1: None,
        embedding_dim: report.embedding_dim.as_ref().map(JsonInt::from),
        hj: None,
        dual_hj: None,
        divisor: None,
        lattice: None,
        monomials: None,
        charts: None,
        transitions: None,
        dual_basis: None,
    };
    if let Some(c) = &report.counts {
        record.j = Some(JsonInt::from(&c.j_gamma));
        record.k = Some(JsonInt::from(&c.k_gamma));
        record.d = Some(JsonInt::from(&c.d_gamma));
        record.h1 = Some(JsonInt::from(&c.h1_theta));
    }

    if let Some((p, q)) = &cyclic {
        let expansion = hj::hj_expand(p, q)?;
        record.hj = Some(expansion.entries.iter().map(JsonInt::from).collect());
        // the dual has e - 2 entries, which is enormous when the primal
        // entries are large (e.g. q = 1 gives p - 1 of them); emit it
        // only when it is small enough to materialize
        let dual_len = BigUint::from(1u32) + expansion.sum_minus_two();
        if dual_len <= BigUint::from(10_000u32) {
            let dual = hj::dual_expand(p, q)?;
            record.dual_hj = Some(dual.entries.iter().map(JsonInt::from).collect());
        }
        record.divisor = Some(DivisorJson::from(&cyclic_divisor(p, q)?));
        if sections.lattice {
            let chain = toric::lattice_chain(p, q)?;
            record.lattice = Some(
                chain
                    .points
                    .iter()
                    .map(|pt| [JsonInt::from(&pt.s), JsonInt::from(&pt.t)])
                    .collect(),
            );
        }
        if sections.monomials {
            let monomials = toric::invariant_monomials(p, q)?;
            record.monomials = Some(
                monomials
                    .iter()
                    .map(|m| [JsonInt::from(&m.x_exp), JsonInt::from(&m.y_exp)])
                    .collect(),
            );
        }
        if sections.charts {
            let atlas = toric::chart_atlas(p, q)?;
            record.charts = Some(
                atlas
                    .charts
                    .iter()
                    .map(|c| ChartJson {
                        eta: [JsonInt::from(&c.eta.x_exp), JsonInt::from(&c.eta.y_exp)],
                        xi: [JsonInt::from(&c.xi.x_exp), JsonInt::from(&c.xi.y_exp)],
                    })
                    .collect(),
            );
            let transitions = toric::verify_transitions(p, q)?;
            record.transitions = Some(
                transitions
                    .per_index
                    .iter()
                    .map(|t| TransitionJson {
                        index: t.index,
                        inverse_holds: t.inverse_holds,
                        recursion_holds: t.recursion_holds,
                        coefficient: JsonInt::from(&t.coefficient),
                    })
                    .collect(),
            );
            record.dual_basis = Some(
                transitions
                    .dual_basis
                    .iter()
                    .map(|d| DualBasisJson {
                        index: d.index,
                        holds: d.holds,
                    })
                    .collect(),
            );
        }
    } else if let Some(div) = divisor {
        record.divisor = Some(DivisorJson::from(div));
    }
    Ok(record)
}

fn render_resolve_md(record: &ResolveRecord) -> String {
    let mut lines = vec![
        format!("# {}", record.group),
        String::new(),
        format!("- order: {}", record.order),
        format!("- route: {}", record.route),
        format!("- m: {}", record.m),
        format!("- orbit dimension: {}", record.orbit_dim),
    ];
    if let (Some(d), Some(j), Some(k), Some(h1)) = (&record.d, &record.j, &record.k, &record.h1) {
        lines.push(format!("- d: {d} (j = {j}, k = {k}, h1 = {h1})"));
    }
    if let Some(e) = &record.embedding_dim {
        lines.push(format!("- embedding dimension: {e}"));
    }
    let int_list = |v: &[JsonInt]| {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    };
    if let Some(entries) = &record.hj {
        lines.push(format!("- hj expansion: [{}]", int_list(entries)));
    }
    if let Some(entries) = &record.dual_hj {
        lines.push(format!("- dual expansion: [{}]", int_list(entries)));
    }
    if let Some(div) = &record.divisor {
        if let Some(chain) = &div.chain {
            lines.push(format!("- divisor: chain [{}]", int_list(chain)));
        } else if let (Some(central), Some(arms)) = (&div.central, &div.arms) {
            let arms: Vec<String> = arms.iter().map(|a| format!("[{}]", int_list(a))).collect();
            lines.push(format!(
                "- divisor: star central {central}, arms {}",
                arms.join(" ")
            ));
        }
    }
    let pair_list = |v: &[[JsonInt; 2]]| {
        v.iter()
            .map(|[a, b]| format!("({a}, {b})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    if let Some(points) = &record.lattice {
        lines.push(format!("- lattice chain: {}", pair_list(points)));
    }
    if let Some(monomials) = &record.monomials {
        lines.push(format!("- invariant monomials: {}", pair_list(monomials)));
    }
    if let Some(charts) = &record.charts {
        lines.push("- charts (eta, xi exponents):".into());
        for (i, c) in charts.iter().enumerate() {
            lines.push(format!(
                "    {i}: eta = ({}, {}), xi = ({}, {})",
                c.eta[0], c.eta[1], c.xi[0], c.xi[1]
            ));
        }
    }
    if let Some(transitions) = &record.transitions {
        lines.push("- transitions:".into());
        for t in transitions {
            lines.push(format!(
                "    {}: inverse {}, recursion {} (coefficient {})",
                t.index,
                if t.inverse_holds { "ok" } else { "FAIL" },
                if t.recursion_holds { "ok" } else { "FAIL" },
                t.coefficient
            ));
        }
    }
    lines.join("\n")
}

/// Instantiates the four dimension-table rows: `(3, 1)`, the
/// `1/p (1, 1)` family, every generic cyclic pair up to `pmax`, and the
/// bundled non-SU(2) stars. Rows 3 and 4 carry both evaluations of `m`.
pub fn table1_records(pmax: u64) -> Result<Vec<Table1Record>> {
    let mut records = Vec::new();
    let base = |row: u8| Table1Record {
        schema: SCHEMA_VERSION,
        kind: "table1-row".into(),
        row,
        group: None,
        label: None,
        d: JsonInt::from(0u64),
        m: JsonInt::from(0u64),
        m_alt: None,
        e: None,
        k: None,
    };

    // row 1: 1/3 (1, 1)
    {
        let report = full_report(&GroupDescriptor::cyclic(3, 1), None)?;
        let c = report.counts.as_ref().expect("cyclic counts");
        let mut record = base(1);
        record.group = Some("cyclic:3/1".into());
        record.d = JsonInt::from(&c.d_gamma);
        record.m = JsonInt::from(&report.m_gamma);
        records.push(record);
    }

    // row 2: 1/p (1, 1) for 4 <= p <= pmax
    for p in 4..=pmax {
        let report = full_report(&GroupDescriptor::cyclic(p, 1), None)?;
        let c = report.counts.as_ref().expect("cyclic counts");
        let mut record = base(2);
        record.group = Some(format!("cyclic:{p}/1"));
        record.d = JsonInt::from(&c.d_gamma);
        record.m = JsonInt::from(&report.m_gamma);
        records.push(record);
    }

    // row 3: generic cyclic pairs
    for p in 2..=pmax {
        for q in 2..p.saturating_sub(1) {
            if p.gcd(&q) != 1 {
                continue;
            }
            let report = full_report(&GroupDescriptor::cyclic(p, q), None)?;
            let c = report.counts.as_ref().expect("cyclic counts");
            let e = report.embedding_dim.as_ref().expect("cyclic embedding");
            let alt = BigUint::from(2u32) * e + BigUint::from(3u32) * &c.k_gamma
                - BigUint::from(8u32);
            let mut record = base(3);
            record.group = Some(format!("cyclic:{p}/{q}"));
            record.d = JsonInt::from(&c.d_gamma);
            record.m = JsonInt::from(&report.m_gamma);
            record.m_alt = Some(JsonInt::from(&alt));
            record.e = Some(JsonInt::from(e));
            record.k = Some(JsonInt::from(&c.k_gamma));
            records.push(record);
        }
    }

    // row 4: bundled non-SU(2) stars
    for bundled in data::divisor_records()? {
        let div = &bundled.divisor;
        if div.shape_name() != "star" || div.is_ade() {
            continue;
        }
        let c = counts(div);
        let e = dihedral_embedding_dimension(div)?;
        let m = &c.d_gamma - BigUint::from(1u32);
        let alt =
            BigUint::from(2u32) * &e + BigUint::from(3u32) * &c.k_gamma - BigUint::from(7u32);
        let mut record = base(4);
        record.label = bundled.label.clone();
        record.d = JsonInt::from(&c.d_gamma);
        record.m = JsonInt::from(&m);
        record.m_alt = Some(JsonInt::from(&alt));
        record.e = Some(JsonInt::from(&e));
        record.k = Some(JsonInt::from(&c.k_gamma));
        records.push(record);
    }
    Ok(records)
}

fn render_table1_md(records: &[Table1Record]) -> String {
    let mut lines = vec![
        "| row | group | d | m |".to_string(),
        "|-----|-------|---|---|".to_string(),
    ];
    for r in records {
        let who = r
            .group
            .clone()
            .or_else(|| r.label.clone())
            .unwrap_or_default();
        lines.push(format!("| {} | {} | {} | {} |", r.row, who, r.d, r.m));
    }
    lines.join("\n")
}

/// All residue-class rows with computed (not hard-coded) smallest
/// instances.
pub fn table3_records() -> Result<Vec<Table3Record>> {
    let mut records = Vec::new();
    for row in data::table3_rows()? {
        let smallest_l = row.smallest_l();
        let m = row.m_at(smallest_l)?;
        records.push(Table3Record {
            schema: SCHEMA_VERSION,
            kind: "table3-row".into(),
            family: row.family.name().into(),
            modulus: row.modulus,
            residue: row.residue,
            offset: row.offset,
            divisor: row.divisor,
            constant: row.constant,
            formula: row.formula(),
            smallest_l,
            m_at_smallest: JsonInt::from(&m),
        });
    }
    Ok(records)
}

fn render_table3_md(records: &[Table3Record]) -> String {
    let mut lines = vec![
        "| family | l mod | m(l) | smallest l > 1 | m |".to_string(),
        "|--------|-------|------|----------------|---|".to_string(),
    ];
    for r in records {
        lines.push(format!(
            "| {} | {} (mod {}) | {} | {} | {} |",
            r.family, r.residue, r.modulus, r.formula, r.smallest_l, r.m_at_smallest
        ));
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_strings(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_from(
            std::iter::once("qsing").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn resolve_cyclic_7_3_lattice() {
        let (code, out, _) = run_to_strings(&["resolve", "cyclic:7/3", "--lattice"]);
        assert_eq!(code, 0);
        let record: ResolveRecord = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(record.m.to_string(), "9");
        let lattice = record.lattice.unwrap();
        let pairs: Vec<(String, String)> = lattice
            .iter()
            .map(|[a, b]| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(
            pairs,
            [("0", "7"), ("1", "3"), ("3", "2"), ("5", "1"), ("7", "0")]
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .to_vec()
        );
    }

    #[test]
    fn resolve_tetra_7() {
        let (code, out, _) = run_to_strings(&["resolve", "tetra:7"]);
        assert_eq!(code, 0);
        let record: ResolveRecord = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(record.m.to_string(), "19");
        assert_eq!(record.route, "table3-tetra-r1");
        assert!(record.d.is_none());
    }

    #[test]
    fn resolve_exit_codes() {
        let (code, _, err) = run_to_strings(&["resolve", "cyclic:6/3"]);
        assert_eq!(code, 3);
        assert!(err.contains("NotCoprime"));

        let (code, _, err) = run_to_strings(&["resolve", "not-a-descriptor"]);
        assert_eq!(code, 2);
        assert!(err.contains("ParseError"));

        let (code, _, err) = run_to_strings(&["resolve", "dihedral:3,5"]);
        assert_eq!(code, 4);
        assert!(err.contains("DivisorDataRequired"));
    }

    #[test]
    fn resolve_toric_sections_require_cyclic() {
        let (code, _, err) = run_to_strings(&["resolve", "tetra:7", "--lattice"]);
        assert_eq!(code, 3);
        assert!(err.contains("ShapeMismatch"));
    }

    #[test]
    fn resolve_d4_by_canonical_label() {
        let (code, out, _) = run_to_strings(&["resolve", "dihedral:1,2"]);
        assert_eq!(code, 0);
        let record: ResolveRecord = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(record.m.to_string(), "9");
        assert_eq!(record.route, "hyperkahler-ade");
    }

    #[test]
    fn table1_has_expected_anchors() {
        let records = table1_records(7).unwrap();
        let row1 = records.iter().find(|r| r.row == 1).unwrap();
        assert_eq!((row1.d.to_string(), row1.m.to_string()), ("5".into(), "2".into()));
        let row2_5 = records
            .iter()
            .find(|r| r.group.as_deref() == Some("cyclic:5/1"))
            .unwrap();
        assert_eq!(
            (row2_5.d.to_string(), row2_5.m.to_string()),
            ("9".into(), "5".into())
        );
        let row3_73 = records
            .iter()
            .find(|r| r.group.as_deref() == Some("cyclic:7/3"))
            .unwrap();
        assert_eq!(
            (row3_73.d.to_string(), row3_73.m.to_string()),
            ("11".into(), "9".into())
        );
        assert_eq!(row3_73.m, *row3_73.m_alt.as_ref().unwrap());
        assert!(records.iter().any(|r| r.row == 4));
    }

    #[test]
    fn table3_smallest_instances() {
        let records = table3_records().unwrap();
        assert_eq!(records.len(), 15);
        let find = |family: &str, residue: u64| {
            records
                .iter()
                .find(|r| r.family == family && r.residue == residue)
                .unwrap()
        };
        let tetra1 = find("tetra", 1);
        assert_eq!((tetra1.smallest_l, tetra1.m_at_smallest.to_string()), (7, "19".into()));
        let octa11 = find("octa", 11);
        assert_eq!((octa11.smallest_l, octa11.m_at_smallest.to_string()), (11, "17".into()));
        let icosa1 = find("icosa", 1);
        assert_eq!((icosa1.smallest_l, icosa1.m_at_smallest.to_string()), (31, "25".into()));
    }

    #[test]
    fn verify_small_bounds_passes() {
        let (code, out, _) = run_to_strings(&["verify", "--pmax", "20", "--lmax", "40"]);
        assert_eq!(code, 0);
        for line in out.trim().lines() {
            let record: VerifyRecord = serde_json::from_str(line).unwrap();
            assert_eq!(record.failures, 0);
        }
    }

    #[test]
    fn verify_minimal_bound() {
        let (code, _, _) = run_to_strings(&["verify", "--pmax", "2", "--lmax", "2"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn verify_with_fault_fails_and_names_counterexample() {
        let (code, out, _) =
            run_to_strings(&["verify", "--pmax", "20", "--lmax", "40", "--inject-fault"]);
        assert_eq!(code, 1);
        let failing: Vec<VerifyRecord> = out
            .trim()
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .filter(|r: &VerifyRecord| r.failures > 0)
            .collect();
        assert!(!failing.is_empty());
        assert!(failing
            .iter()
            .all(|r| r.counterexample.as_ref().unwrap().contains("(20, 1)")));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_to_strings(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("resolve"));
        // the fault flag stays hidden
        assert!(!out.contains("inject-fault"));
    }

    #[test]
    fn md_formats_render() {
        let (code, out, _) = run_to_strings(&["resolve", "cyclic:7/3", "--charts", "--format", "md"]);
        assert_eq!(code, 0);
        assert!(out.contains("# cyclic:7/3"));
        assert!(out.contains("coefficient 3"));
        let (code, out, _) = run_to_strings(&["table3", "--format", "md"]);
        assert_eq!(code, 0);
        assert!(out.contains("| icosa | 29 (mod 30) |"));
    }
}
