//! Generators of the invariant ring of a cyclic group action, as
//! Laurent exponent pairs.
//!
//! Run with: cargo run --example invariant_monomials

use num_bigint::BigUint;
use qsing::{embedding_dimension, invariant_monomials};

fn main() {
    for (p, q) in [(2u32, 1u32), (3, 1), (7, 3), (12, 5)] {
        let (p, q) = (BigUint::from(p), BigUint::from(q));
        let monomials = invariant_monomials(&p, &q).unwrap();
        let e = embedding_dimension(&p, &q).unwrap();
        println!("1/{p} (1, {q}): {e} generators");
        for m in &monomials {
            println!("  {m}  (weight {} mod {p})", m.weight(&p, &q));
        }
        assert_eq!(BigUint::from(monomials.len()), e);
        println!();
    }
}
