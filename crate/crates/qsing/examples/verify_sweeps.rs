//! Run every invariant sweep at modest bounds and print the tallies.
//!
//! Run with: cargo run --release --example verify_sweeps

use qsing::sweep::{run_all, SweepOptions};

fn main() {
    let options = SweepOptions {
        p_max: 80,
        l_max: 200,
        fault: None,
    };
    println!("sweeping p <= {}, l <= {} ...\n", options.p_max, options.l_max);
    let mut all_passed = true;
    for result in run_all(options) {
        let status = if result.passed() { "PASS" } else { "FAIL" };
        println!("{status}  {:28} {:>6} cases", result.name, result.cases);
        if let Some(ce) = &result.counterexample {
            println!("      counterexample: {ce}");
        }
        all_passed &= result.passed();
    }
    println!("\noverall: {}", if all_passed { "all sweeps passed" } else { "FAILURES" });
    std::process::exit(if all_passed { 0 } else { 1 });
}
