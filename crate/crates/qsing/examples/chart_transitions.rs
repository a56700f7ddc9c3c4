//! The chart atlas of the toric resolution, the transition-map
//! identities, and the derivation frame change.
//!
//! Run with: cargo run --example chart_transitions

use num_bigint::BigUint;
use qsing::{chart_atlas, derivation_change_of_frame, verify_transitions};

fn main() {
    let (p, q) = (BigUint::from(7u32), BigUint::from(3u32));

    let atlas = chart_atlas(&p, &q).unwrap();
    println!("charts of the 1/7 (1, 3) resolution:");
    for (i, chart) in atlas.charts.iter().enumerate() {
        println!("  chart {i}: eta = {}, xi = {}", chart.eta, chart.xi);
    }

    let report = verify_transitions(&p, &q).unwrap();
    println!("\ntransitions (eta_i = 1/xi_(i+1), eta_(i+1) = eta_i^m xi_i):");
    for check in &report.per_index {
        println!(
            "  {} -> {}: inverse {}, solved m = {} (matches entry: {})",
            check.index,
            check.index + 1,
            check.inverse_holds,
            check.coefficient,
            check.recursion_holds
        );
    }
    println!("\ndual-basis pairings <c, exponents> over exact rationals:");
    for check in &report.dual_basis {
        let p: Vec<String> = check.pairings.iter().map(|r| r.to_string()).collect();
        println!("  chart {}: [{}] -> {}", check.index, p.join(", "), check.holds);
    }

    let fc = derivation_change_of_frame(&p, &q, 1).unwrap();
    println!("\nframe change at chart 1 (rows over exact rationals):");
    for row in &fc.forward.rows {
        println!("  forward ({}, {})", row[0], row[1]);
    }
    for row in &fc.inverse.rows {
        println!("  inverse ({}, {})", row[0], row[1]);
    }
    println!("  product is the identity: {}", fc.forward.mul(&fc.inverse) == qsing::Mat2::identity());
}
