//! Render both dimension tables as markdown.
//!
//! Run with: cargo run --example reproduce_tables

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qsing::cli::run_from(
        ["qsing", "table1", "--pmax", "12", "--format", "md"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    println!("{}", String::from_utf8(out).unwrap());

    let mut out = Vec::new();
    let code = qsing::cli::run_from(["qsing", "table3", "--format", "md"], &mut out, &mut err);
    assert_eq!(code, 0);
    println!("{}", String::from_utf8(out).unwrap());
}
