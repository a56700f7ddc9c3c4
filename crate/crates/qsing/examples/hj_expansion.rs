//! Continued-fraction expansions and the Riemenschneider identities.
//!
//! Run with: cargo run --example hj_expansion

use num_bigint::BigUint;
use qsing::{dual_expand, embedding_dimension, hj_expand, riemenschneider_check};

fn main() {
    for (p, q) in [(7u32, 3u32), (5, 1), (5, 4), (12, 5), (31, 12)] {
        let (p, q) = (BigUint::from(p), BigUint::from(q));
        let primal = hj_expand(&p, &q).unwrap();
        let dual = dual_expand(&p, &q).unwrap();
        let e = embedding_dimension(&p, &q).unwrap();
        let report = riemenschneider_check(&p, &q).unwrap();

        println!("p/q = {p}/{q}");
        println!("  [e_1, ..., e_k]   = {:?}", strings(&primal.entries));
        println!("  re-evaluates to     {}", primal.evaluate());
        println!("  dual (p/(p-q))    = {:?}", strings(&dual.entries));
        println!("  embedding dim e   = {e}");
        println!(
            "  sum(e_i - 1) = {}, sum(e_i' - 1) = {}, k' = {}, identities hold: {}",
            report.sum_e, report.sum_e_prime, report.k_prime, report.holds
        );
        println!();
    }

    // arbitrary precision: a 41-digit p is no different
    let p = BigUint::from(10u32).pow(40) + 1u32;
    let q = BigUint::from(3u32);
    let x = hj_expand(&p, &q).unwrap();
    println!("p = 10^40 + 1, q = 3 expands to {:?}", strings(&x.entries));
    println!("sound: {}", x.is_sound());
}

fn strings(entries: &[num_bigint::BigInt]) -> Vec<String> {
    entries.iter().map(|e| e.to_string()).collect()
}
