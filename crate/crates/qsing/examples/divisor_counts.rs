//! Exceptional divisor graphs and the counts j, k, d, h1.
//!
//! Run with: cargo run --example divisor_counts

use num_bigint::BigUint;
use qsing::{
    counts, cyclic_divisor, dihedral_embedding_dimension, load_divisor, star_h1_split,
};

fn main() {
    // cyclic groups resolve to chains derived from the expansion
    for (p, q) in [(2u32, 1u32), (7, 3), (5, 1)] {
        let (p, q) = (BigUint::from(p), BigUint::from(q));
        let div = cyclic_divisor(&p, &q).unwrap();
        let c = counts(&div);
        println!(
            "1/{p} (1, {q}): {:?}  j = {}, k = {}, d = {}, h1 = {}",
            div, c.j_gamma, c.k_gamma, c.d_gamma, c.h1_theta
        );
    }

    // star records in the external format
    let d4 = load_divisor(r#"{"label": "D4", "central": -2, "arms": [[-2], [-2], [-2]]}"#).unwrap();
    let c = counts(&d4.divisor);
    println!(
        "\nD4 star: j = {}, k = {}, d = {}, h1 = {}",
        c.j_gamma, c.k_gamma, c.d_gamma, c.h1_theta
    );
    let (split, flat) = star_h1_split(&d4.divisor).unwrap();
    println!("h1 split count (b - 1) + arm sums = {split}, flat count = {flat}");

    let dihedral =
        load_divisor(r#"{"central": -3, "arms": [[-2], [-2], [-2, -2]]}"#).unwrap();
    let e = dihedral_embedding_dimension(&dihedral.divisor).unwrap();
    let c = counts(&dihedral.divisor);
    println!(
        "\ndihedral star (central -3): e = {e}, j + k - 1 = {}, 2e + 3k - 7 = {}",
        &c.j_gamma + &c.k_gamma - BigUint::from(1u32),
        BigUint::from(2u32) * &e + BigUint::from(3u32) * &c.k_gamma - BigUint::from(7u32)
    );
}
