//! Hirzebruch-Jung continued fractions and the Riemenschneider identities.
//!
//! The expansion of `p/q` here is the ceiling-type ("minus") continued
//! fraction
//!
//! ```text
//! p/q = e_1 - 1/(e_2 - 1/(... - 1/e_k)),    e_i >= 2,
//! ```
//!
//! written `[e_1, ..., e_k]`. Everything is exact: parameters are
//! arbitrary-precision integers and re-evaluation happens over exact
//! rationals, so an expansion can always certify itself against its
//! source fraction.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A ceiling-type continued fraction expansion of `p/q` with all
/// entries `>= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HJExpansion {
    pub p: BigUint,
    pub q: BigUint,
    pub entries: Vec<BigInt>,
}

impl HJExpansion {
    /// Number of entries `k`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Re-evaluates the expansion as an exact rational, from the right:
    /// `r_k = e_k`, `r_i = e_i - 1/r_{i+1}`. This is the independent
    /// oracle for the expansion: the result must equal `p/q`.
    pub fn evaluate(&self) -> BigRational {
        let mut rev = self.entries.iter().rev();
        let last = rev.next().expect("expansion has at least one entry");
        let mut acc = BigRational::from(last.clone());
        for e in rev {
            acc = BigRational::from(e.clone()) - acc.recip();
        }
        acc
    }

    /// True when every entry is `>= 2` and the exact re-evaluation
    /// equals `p/q`.
    pub fn is_sound(&self) -> bool {
        let two = BigInt::from(2u32);
        if self.entries.is_empty() || self.entries.iter().any(|e| e < &two) {
            return false;
        }
        let target = BigRational::new(
            BigInt::from(self.p.clone()),
            BigInt::from(self.q.clone()),
        );
        self.evaluate() == target
    }

    /// `sum (e_i - 1)`.
    pub fn sum_minus_one(&self) -> BigUint {
        let total: BigInt = self.entries.iter().map(|e| e - 1).sum();
        total.to_biguint().expect("entries >= 2 make the sum positive")
    }

    /// `sum (e_i - 2)`.
    pub fn sum_minus_two(&self) -> BigUint {
        let total: BigInt = self.entries.iter().map(|e| e - 2).sum();
        total.to_biguint().expect("entries >= 2 make the sum nonnegative")
    }
}

/// Checks `gcd(p, q) = 1` and `1 <= q < p` (so in particular `p >= 2`).
pub fn check_fraction(p: &BigUint, q: &BigUint) -> Result<()> {
    if q.is_zero() || q >= p {
        return Err(Error::QOutOfRange {
            p: p.clone(),
            q: q.clone(),
        });
    }
    if !p.gcd(q).is_one() {
        return Err(Error::NotCoprime {
            p: p.clone(),
            q: q.clone(),
        });
    }
    Ok(())
}

/// Expands `p/q` by the ceiling algorithm: `e = ceil(p/q)`, then
/// `(p, q) <- (q, e q - p)` until `q = 0`. The loop terminates because
/// `q` strictly decreases, and every entry is `>= 2` because `q < p`.
pub fn hj_expand(p: &BigUint, q: &BigUint) -> Result<HJExpansion> {
    check_fraction(p, q)?;
    let mut entries = Vec::new();
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        // ceil(a/b) = (a + b - 1) / b for positive integers
        let e = (&a + &b - BigUint::one()) / &b;
        let next = &e * &b - &a;
        entries.push(BigInt::from(e));
        a = b;
        b = next;
    }
    let expansion = HJExpansion {
        p: p.clone(),
        q: q.clone(),
        entries,
    };
    debug_assert!(expansion.is_sound());
    Ok(expansion)
}

/// The dual expansion `p/(p - q) = [a_1, ..., a_k']`. For `q = p - 1`
/// this is the single entry `[p]`.
pub fn dual_expand(p: &BigUint, q: &BigUint) -> Result<HJExpansion> {
    check_fraction(p, q)?;
    hj_expand(p, &(p - q))
}

/// Embedding dimension of the cyclic quotient singularity:
/// `e = 3 + sum (e_i - 2)`. Equivalently `k' + 2` with `k'` the dual
/// expansion length; [`riemenschneider_check`] asserts the equivalence.
pub fn embedding_dimension(p: &BigUint, q: &BigUint) -> Result<BigUint> {
    let expansion = hj_expand(p, q)?;
    Ok(BigUint::from(3u32) + expansion.sum_minus_two())
}

/// Joint report for the three Riemenschneider identities linking an
/// expansion, its dual, and the embedding dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiemenschneiderReport {
    /// `sum (e_i - 1)` over the primal expansion.
    pub sum_e: BigUint,
    /// `sum (e_i' - 1)` over the dual expansion.
    pub sum_e_prime: BigUint,
    /// Length `k'` of the dual expansion.
    pub k_prime: usize,
    /// Embedding dimension `e`.
    pub e: BigUint,
    /// All three identities hold: `sum_e = sum_e_prime`,
    /// `k' = e - 2`, `sum_e = e + k - 3`.
    pub holds: bool,
}

/// Evaluates the three identities
///
/// ```text
/// sum (e_i - 1) = sum (e_i' - 1),   k' = e - 2,   sum (e_i - 1) = e + k - 3
/// ```
///
/// as an executable identity check: `holds` is true for every valid
/// `(p, q)`.
pub fn riemenschneider_check(p: &BigUint, q: &BigUint) -> Result<RiemenschneiderReport> {
    let primal = hj_expand(p, q)?;
    let dual = dual_expand(p, q)?;
    let sum_e = primal.sum_minus_one();
    let sum_e_prime = dual.sum_minus_one();
    let e = BigUint::from(3u32) + primal.sum_minus_two();
    let k = primal.len();
    let k_prime = dual.len();

    let first = sum_e == sum_e_prime;
    let second = BigUint::from(k_prime + 2) == e;
    let third = &sum_e + BigUint::from(3u32) == &e + BigUint::from(k);
    Ok(RiemenschneiderReport {
        sum_e,
        sum_e_prime,
        k_prime,
        e,
        holds: first && second && third,
    })
}

/// Convenience for tests and sweeps over machine-sized parameters.
pub fn hj_expand_u64(p: u64, q: u64) -> Result<HJExpansion> {
    hj_expand(&BigUint::from(p), &BigUint::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn entries_of(expansion: &HJExpansion) -> Vec<i64> {
        expansion
            .entries
            .iter()
            .map(|e| i64::try_from(e).unwrap())
            .collect()
    }

    #[test]
    fn expand_7_3() {
        let x = hj_expand_u64(7, 3).unwrap();
        assert_eq!(entries_of(&x), vec![3, 2, 2]);
        // oracle: 3 - 1/(2 - 1/2) = 7/3
        assert_eq!(
            x.evaluate(),
            BigRational::new(BigInt::from(7), BigInt::from(3))
        );
    }

    #[test]
    fn expand_q_one_is_single_entry() {
        let x = hj_expand_u64(5, 1).unwrap();
        assert_eq!(entries_of(&x), vec![5]);
    }

    #[test]
    fn expand_q_p_minus_one_is_all_twos() {
        let x = hj_expand_u64(5, 4).unwrap();
        assert_eq!(entries_of(&x), vec![2, 2, 2, 2]);
        assert!(x.is_sound());
    }

    #[test]
    fn rejects_non_coprime() {
        assert_eq!(
            hj_expand_u64(6, 3),
            Err(Error::NotCoprime { p: big(6), q: big(3) })
        );
    }

    #[test]
    fn rejects_out_of_range_q() {
        assert!(matches!(hj_expand_u64(5, 0), Err(Error::QOutOfRange { .. })));
        assert!(matches!(hj_expand_u64(5, 5), Err(Error::QOutOfRange { .. })));
        assert!(matches!(hj_expand_u64(5, 7), Err(Error::QOutOfRange { .. })));
        assert!(matches!(hj_expand_u64(1, 1), Err(Error::QOutOfRange { .. })));
    }

    #[test]
    fn dual_7_3() {
        let x = dual_expand(&big(7), &big(3)).unwrap();
        assert_eq!(entries_of(&x), vec![2, 4]);
        assert_eq!(
            x.evaluate(),
            BigRational::new(BigInt::from(7), BigInt::from(4))
        );
    }

    #[test]
    fn dual_of_p_minus_one_is_single_entry() {
        let x = dual_expand(&big(3), &big(2)).unwrap();
        assert_eq!(entries_of(&x), vec![3]);
    }

    #[test]
    fn dual_of_q_one_is_all_twos() {
        let x = dual_expand(&big(5), &big(1)).unwrap();
        assert_eq!(entries_of(&x), vec![2, 2, 2, 2]);
    }

    #[test]
    fn embedding_dimension_examples() {
        assert_eq!(embedding_dimension(&big(7), &big(3)).unwrap(), big(4));
        assert_eq!(embedding_dimension(&big(3), &big(2)).unwrap(), big(3));
        // for q = 1 the invariants are the p + 1 monomials of degree p
        for p in 2..=12u64 {
            assert_eq!(embedding_dimension(&big(p), &big(1)).unwrap(), big(p + 1));
        }
    }

    #[test]
    fn riemenschneider_examples() {
        let r = riemenschneider_check(&big(7), &big(3)).unwrap();
        assert_eq!(r.sum_e, big(4));
        assert_eq!(r.sum_e_prime, big(4));
        assert_eq!(r.k_prime, 2);
        assert_eq!(r.e, big(4));
        assert!(r.holds);

        // [2] is self-dual
        let r = riemenschneider_check(&big(2), &big(1)).unwrap();
        assert_eq!(r.sum_e, big(1));
        assert_eq!(r.sum_e_prime, big(1));
        assert_eq!(r.k_prime, 1);
        assert_eq!(r.e, big(3));
        assert!(r.holds);

        assert!(riemenschneider_check(&big(12), &big(5)).unwrap().holds);
    }

    #[test]
    fn works_far_beyond_machine_width() {
        // the dual of this fraction would have ~p/3 entries, so only
        // the primal side is materialized here
        let p: BigUint = BigUint::from(10u32).pow(40) + 1u32;
        let q = BigUint::from(3u32);
        let x = hj_expand(&p, &q).unwrap();
        assert_eq!(x.len(), 2);
        assert!(x.is_sound());
        assert_eq!(
            embedding_dimension(&p, &q).unwrap(),
            BigUint::from(3u32) + x.sum_minus_two()
        );
    }

    proptest! {
        #[test]
        fn expansion_sound_and_dual_involutive(p in 2u64..400, q in 1u64..400) {
            prop_assume!(q < p && p.gcd(&q) == 1);
            let (bp, bq) = (big(p), big(q));
            let x = hj_expand(&bp, &bq).unwrap();
            prop_assert!(x.is_sound());
            // dual of the dual fraction recovers the primal entry list
            let dd = dual_expand(&bp, &big(p - q)).unwrap();
            prop_assert_eq!(dd.entries, x.entries);
        }

        #[test]
        fn riemenschneider_holds(p in 2u64..400, q in 1u64..400) {
            prop_assume!(q < p && p.gcd(&q) == 1);
            prop_assert!(riemenschneider_check(&big(p), &big(q)).unwrap().holds);
        }

        #[test]
        fn derived_table1_identity(p in 2u64..300, q in 2u64..300) {
            // 2 sum(e_i - 1) + k - 2 = 2e + 3k - 8 whenever q is not 1 or p-1
            prop_assume!(q < p - 1 && p.gcd(&q) == 1);
            let (bp, bq) = (big(p), big(q));
            let x = hj_expand(&bp, &bq).unwrap();
            let e = embedding_dimension(&bp, &bq).unwrap();
            let k = big(x.len() as u64);
            let lhs = big(2u64) * x.sum_minus_one() + &k;
            let rhs = big(2u64) * e + big(3u64) * &k - big(6u64);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
