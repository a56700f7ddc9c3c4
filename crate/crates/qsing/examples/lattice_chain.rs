//! The scaled lattice-point chain of a cyclic quotient resolution and
//! its determinant identity.
//!
//! Run with: cargo run --example lattice_chain

use num_bigint::BigUint;
use qsing::lattice_chain;

fn main() {
    for (p, q) in [(2u32, 1u32), (7, 3), (5, 1), (11, 4)] {
        let (p, q) = (BigUint::from(p), BigUint::from(q));
        let chain = lattice_chain(&p, &q).unwrap();
        println!("1/{p} (1, {q}):");
        for (i, point) in chain.points.iter().enumerate() {
            println!("  P_{i} = ({}, {})", point.s, point.t);
        }
        for i in 0..chain.points.len() - 1 {
            // t_i s_{i+1} - t_{i+1} s_i = 1/p, scaled by p^2
            assert_eq!(chain.determinant(i).to_string(), p.to_string());
        }
        println!("  every consecutive determinant equals {p}");
        println!();
    }
}
