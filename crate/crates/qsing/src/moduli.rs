//! Dimension of the local moduli space of scalar-flat Kahler ALE
//! metrics on the minimal resolution, for every group the library
//! accepts.
//!
//! The dispatch runs hyperkahler detection first (`q = p - 1` for
//! cyclic groups, `l = 1` for non-cyclic ones, where the dimension is
//! `3k - 3` for `k >= 2` curves and 1 for A_1), then the four
//! dimension-table rows: `1/3 (1,1)`, `1/p (1,1)` with `p >= 4`,
//! generic cyclic, and non-cyclic. In the non-hyperkahler cases the
//! dimension is `d` minus the dimension of a maximal isometry orbit
//! (3, 4, 2, 1 respectively); scaled metrics are not identified, so
//! nothing further is subtracted. Routes that admit two evaluations of
//! the same number (`j + k - 2` against `2e + 3k - 8`, and `j + k - 1`
//! against `2e + 3k - 7`) compute both.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::data::{table3_row_for, table3_rows, Table3Row};
use crate::divisor::{
    counts, cyclic_divisor, dihedral_embedding_dimension, DivisorCounts, ExceptionalDivisor,
};
use crate::error::{Error, Result};
use crate::group::{
    classify, validate, DispatchClass, GroupDescriptor, Table3Family, ValidatedGroup,
};
use crate::hj;

/// Which formula produced a moduli dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Table1Row1,
    Table1Row2,
    Table1Row3,
    Table1Row4,
    Table3Formula { family: Table3Family, residue: u64 },
    HyperkahlerA1,
    HyperkahlerAde,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Table1Row1 => write!(f, "table1-row1"),
            Route::Table1Row2 => write!(f, "table1-row2"),
            Route::Table1Row3 => write!(f, "table1-row3"),
            Route::Table1Row4 => write!(f, "table1-row4"),
            Route::Table3Formula { family, residue } => {
                write!(f, "table3-{}-r{residue}", family.name())
            }
            Route::HyperkahlerA1 => write!(f, "hyperkahler-a1"),
            Route::HyperkahlerAde => write!(f, "hyperkahler-ade"),
        }
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table1-row1" => return Ok(Route::Table1Row1),
            "table1-row2" => return Ok(Route::Table1Row2),
            "table1-row3" => return Ok(Route::Table1Row3),
            "table1-row4" => return Ok(Route::Table1Row4),
            "hyperkahler-a1" => return Ok(Route::HyperkahlerA1),
            "hyperkahler-ade" => return Ok(Route::HyperkahlerAde),
            _ => {}
        }
        let rest = s
            .strip_prefix("table3-")
            .ok_or_else(|| Error::ParseError(format!("unknown route '{s}'")))?;
        let (family, residue) = rest
            .rsplit_once("-r")
            .ok_or_else(|| Error::ParseError(format!("unknown route '{s}'")))?;
        let family = Table3Family::from_name(family)
            .ok_or_else(|| Error::ParseError(format!("unknown route family '{family}'")))?;
        let residue = residue
            .parse::<u64>()
            .map_err(|_| Error::ParseError(format!("bad residue in route '{s}'")))?;
        Ok(Route::Table3Formula { family, residue })
    }
}

/// Full result of a moduli-dimension computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliReport {
    pub group: GroupDescriptor,
    pub route: Route,
    /// Divisor counts, when a divisor is derivable or supplied.
    pub counts: Option<DivisorCounts>,
    /// Embedding dimension, when derivable from the route.
    pub embedding_dim: Option<BigUint>,
    /// Dimension of a maximal isometry orbit (the subtraction applied
    /// to `d`); for the hyperkahler routes this records `d - m`.
    pub orbit_dim: u32,
    /// Dimension of the local moduli space.
    pub m_gamma: BigUint,
}

fn assert_double_count(m: &BigUint, alt: &BigUint, what: &str) {
    debug_assert_eq!(m, alt, "{what} double count disagrees");
}

/// Moduli dimension for non-hyperkahler cyclic groups.
///
/// `1/3 (1,1)` subtracts a 3-dimensional orbit from `d = 5`;
/// `1/p (1,1)` with `p >= 4` subtracts 4 from `d = 2p - 1`; generic
/// `q` subtracts 2, giving `j + k - 2`, which also equals
/// `2e + 3k - 8`. Hyperkahler input (`q = p - 1`, including `(2,1)`)
/// is rejected so the caller routes it correctly.
pub fn moduli_dimension_cyclic(p: &BigUint, q: &BigUint) -> Result<ModuliReport> {
    let group = validate(GroupDescriptor::Cyclic {
        p: p.clone(),
        q: q.clone(),
    })?;
    let class = classify(&group);
    let divisor = cyclic_divisor(p, q)?;
    let c = counts(&divisor);
    let embedding = hj::embedding_dimension(p, q)?;
    let (route, orbit_dim) = match class {
        DispatchClass::HyperkahlerA1 | DispatchClass::HyperkahlerAde { .. } => {
            return Err(Error::HyperkahlerInput)
        }
        DispatchClass::CyclicQ1P3 => (Route::Table1Row1, 3),
        DispatchClass::CyclicQ1 { .. } => (Route::Table1Row2, 4),
        DispatchClass::CyclicGeneric { .. } => (Route::Table1Row3, 2),
        DispatchClass::DihedralFamily | DispatchClass::ToiFamily { .. } => {
            unreachable!("cyclic descriptor cannot reach a non-cyclic class")
        }
    };
    let m_gamma = &c.d_gamma - BigUint::from(orbit_dim);
    if route == Route::Table1Row3 {
        let alt = BigUint::from(2u32) * &embedding + BigUint::from(3u32) * &c.k_gamma
            - BigUint::from(8u32);
        assert_double_count(&m_gamma, &alt, "row 3");
    }
    Ok(ModuliReport {
        group: group.into_descriptor(),
        route,
        counts: Some(c),
        embedding_dim: Some(embedding),
        orbit_dim,
        m_gamma,
    })
}

/// Hyperkahler moduli dimension by curve count: 1 for a single curve
/// (A_1), `3k - 3` for `k >= 2`.
pub fn moduli_dimension_hyperkahler(k: &BigUint) -> BigUint {
    if k.is_one() {
        BigUint::one()
    } else {
        BigUint::from(3u32) * k - BigUint::from(3u32)
    }
}

/// Moduli dimension for non-cyclic groups with `l > 1`.
///
/// Dihedral families need divisor data and give `m = j + k - 1`
/// (equal to `2e + 3k - 7` through the star's embedding dimension).
/// The T*/O*/I* families use the closed form for the residue class of
/// `l`; when divisor data is also supplied, `j + k - 1` must agree
/// with the closed form or the data is rejected.
pub fn moduli_dimension_noncyclic(
    group: &ValidatedGroup,
    divisor: Option<&ExceptionalDivisor>,
) -> Result<ModuliReport> {
    match classify(group) {
        DispatchClass::DihedralFamily => {
            let div = divisor
                .ok_or_else(|| Error::DivisorDataRequired(group.to_string()))?;
            if div.shape_name() != "star" {
                return Err(Error::ShapeMismatch {
                    expected: "star",
                    found: div.shape_name(),
                });
            }
            let c = counts(div);
            let embedding = dihedral_embedding_dimension(div)?;
            let m_gamma = &c.d_gamma - BigUint::one();
            let alt = BigUint::from(2u32) * &embedding + BigUint::from(3u32) * &c.k_gamma
                - BigUint::from(7u32);
            assert_double_count(&m_gamma, &alt, "row 4");
            Ok(ModuliReport {
                group: group.descriptor().clone(),
                route: Route::Table1Row4,
                counts: Some(c),
                embedding_dim: Some(embedding),
                orbit_dim: 1,
                m_gamma,
            })
        }
        DispatchClass::ToiFamily { family, residue } => {
            let l = group.descriptor().l().expect("non-cyclic");
            let row = table3_row_for(family, l)?;
            let m_gamma = row.m_at(l)?;
            let c = divisor.map(counts);
            if let Some(c) = &c {
                let from_divisor = &c.d_gamma - BigUint::one();
                if from_divisor != m_gamma {
                    return Err(Error::TableThreeDisagreement(format!(
                        "divisor gives j + k - 1 = {from_divisor} but the {family} closed form \
                         at l = {l} gives {m_gamma}"
                    )));
                }
            }
            Ok(ModuliReport {
                group: group.descriptor().clone(),
                route: Route::Table3Formula { family, residue },
                counts: c,
                embedding_dim: None,
                orbit_dim: 1,
                m_gamma,
            })
        }
        DispatchClass::HyperkahlerA1 | DispatchClass::HyperkahlerAde { .. } => {
            Err(Error::HyperkahlerInput)
        }
        _ => Err(Error::ShapeMismatch {
            expected: "non-cyclic descriptor",
            found: "cyclic descriptor",
        }),
    }
}

/// Result of checking that a closed-form row is consistent with
/// `m = 2e + 3k - 7` under an affine `(l, e)` relation in the
/// parameter `b`: the implied curve count solved from the equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table3Consistency {
    pub row: Table3Row,
    /// Coefficient of `b` in the solved `k(b)`; zero exactly when the
    /// implied count is independent of `b`.
    pub slope: BigRational,
    /// Constant term of the solved `k(b)`; the implied curve count
    /// when `slope = 0`.
    pub implied_k: BigRational,
    /// True when the implied count is `b`-independent, integral, and
    /// positive.
    pub is_constant_integer: bool,
}

/// Solves `2 e(b) + 3 k - 7 = m(l(b))` symbolically for `k` as an
/// affine function of `b`, using the row's bundled `(l, e)` relations.
/// Rows without relations yield [`Error::NoEmbeddingRelation`].
pub fn table3_consistency(family: Table3Family, residue: u64) -> Result<Table3Consistency> {
    let row = table3_rows()?
        .into_iter()
        .find(|r| r.family == family && r.residue == residue)
        .ok_or(Error::ResidueClassInvalid {
            family: family.name().into(),
            l: residue,
        })?;
    let (la, lb) = row.l_rel.ok_or(Error::NoEmbeddingRelation {
        family: family.name().into(),
        residue,
    })?;
    let (ea, eb) = row.e_rel.ok_or(Error::NoEmbeddingRelation {
        family: family.name().into(),
        residue,
    })?;

    // m(l(b)) = (la b + lb - offset)/divisor + constant, so
    // 3 k(b) = m(l(b)) + 7 - 2 e(b) splits into slope and intercept.
    let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let divisor = i64::try_from(row.divisor).expect("divisor fits i64");
    let offset = i64::try_from(row.offset).expect("offset fits i64");
    let constant = i64::try_from(row.constant).expect("constant fits i64");
    let slope = (rat(la, divisor) - rat(2 * ea, 1)) / rat(3, 1);
    let implied_k =
        (rat(lb - offset, divisor) + rat(constant + 7 - 2 * eb, 1)) / rat(3, 1);
    let is_constant_integer =
        slope.is_zero() && implied_k.is_integer() && implied_k.is_positive();
    Ok(Table3Consistency {
        row,
        slope,
        implied_k,
        is_constant_integer,
    })
}

/// Numerical evaluation of the implied curve count at a concrete `b`,
/// for cross-checking the symbolic solve: `k(b) = (m(l(b)) + 7 - 2
/// e(b)) / 3`.
pub fn table3_implied_k_at(row: &Table3Row, b: i64) -> Result<BigRational> {
    let (la, lb) = row.l_rel.ok_or(Error::NoEmbeddingRelation {
        family: row.family.name().into(),
        residue: row.residue,
    })?;
    let (ea, eb) = row.e_rel.ok_or(Error::NoEmbeddingRelation {
        family: row.family.name().into(),
        residue: row.residue,
    })?;
    let l = la
        .checked_mul(b)
        .and_then(|v| v.checked_add(lb))
        .filter(|v| *v > 1)
        .ok_or_else(|| Error::ParseError(format!("l(b) out of range at b = {b}")))?;
    let m = row.m_at(u64::try_from(l).expect("positive"))?;
    let e = BigInt::from(ea) * BigInt::from(b) + BigInt::from(eb);
    let numerator = BigInt::from(m) + BigInt::from(7) - BigInt::from(2) * e;
    Ok(BigRational::new(numerator, BigInt::from(3)))
}

/// Dispatches any valid descriptor to its moduli route, using the
/// divisor when one is supplied. Cyclic groups derive their own chain;
/// a supplied divisor must then match it. Non-cyclic `l = 1` groups
/// need an ADE divisor to fix the curve count.
pub fn full_report(
    desc: &GroupDescriptor,
    divisor: Option<&ExceptionalDivisor>,
) -> Result<ModuliReport> {
    let group = validate(desc.clone())?;
    if let (GroupDescriptor::Cyclic { p, q }, Some(div)) = (group.descriptor(), divisor) {
        let derived = cyclic_divisor(p, q)?;
        if *div != derived {
            return Err(Error::DivisorDataMismatch(format!(
                "cyclic:{p}/{q} resolves to {:?}, not the supplied divisor",
                derived
            )));
        }
    }
    match classify(&group) {
        DispatchClass::HyperkahlerA1 => {
            let two = BigUint::from(2u32);
            let c = counts(&cyclic_divisor(&two, &BigUint::one())?);
            hyperkahler_report(group, c)
        }
        DispatchClass::HyperkahlerAde { curves: Some(k) } => {
            // the chain is k curves of self-intersection -2, so the
            // counts close up without materializing it; this keeps
            // q = p - 1 usable for p far beyond any chain that fits
            // in memory
            let c = DivisorCounts {
                j_gamma: BigUint::from(2u32) * &k,
                k_gamma: k.clone(),
                d_gamma: BigUint::from(3u32) * &k,
                h1_theta: k,
            };
            hyperkahler_report(group, c)
        }
        DispatchClass::HyperkahlerAde { curves: None } => {
            let div = divisor
                .ok_or_else(|| Error::DivisorDataRequired(group.to_string()))?;
            if !div.is_ade() {
                return Err(Error::DivisorDataMismatch(format!(
                    "{group} lies in SU(2); its divisor must consist of -2 curves"
                )));
            }
            hyperkahler_report(group, counts(div))
        }
        DispatchClass::CyclicQ1P3
        | DispatchClass::CyclicQ1 { .. }
        | DispatchClass::CyclicGeneric { .. } => match group.descriptor() {
            GroupDescriptor::Cyclic { p, q } => moduli_dimension_cyclic(p, q),
            _ => unreachable!("cyclic class implies cyclic descriptor"),
        },
        DispatchClass::DihedralFamily | DispatchClass::ToiFamily { .. } => {
            moduli_dimension_noncyclic(&group, divisor)
        }
    }
}

fn hyperkahler_report(group: ValidatedGroup, c: DivisorCounts) -> Result<ModuliReport> {
    let m_gamma = moduli_dimension_hyperkahler(&c.k_gamma);
    let route = if c.k_gamma.is_one() {
        Route::HyperkahlerA1
    } else {
        Route::HyperkahlerAde
    };
    let orbit = &c.d_gamma - &m_gamma;
    let orbit_dim = u32::try_from(&orbit).expect("d - m is 2 or 3");
    Ok(ModuliReport {
        group: group.into_descriptor(),
        route,
        counts: Some(c),
        embedding_dim: None,
        orbit_dim,
        m_gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_group;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn report(desc: &str) -> ModuliReport {
        full_report(&desc.parse().unwrap(), None).unwrap()
    }

    #[test]
    fn cyclic_3_1() {
        let r = report("cyclic:3/1");
        assert_eq!(r.route, Route::Table1Row1);
        assert_eq!(r.m_gamma, big(2));
        assert_eq!(r.counts.unwrap().d_gamma, big(5));
        assert_eq!(r.orbit_dim, 3);
    }

    #[test]
    fn cyclic_q1_family() {
        let r = report("cyclic:5/1");
        assert_eq!(r.route, Route::Table1Row2);
        assert_eq!(r.m_gamma, big(5));
        assert_eq!(r.counts.unwrap().d_gamma, big(9));
        assert_eq!(r.orbit_dim, 4);
        // d = 2p - 1, m = 2p - 5 across the family
        for p in 4u64..=40 {
            let r = report(&format!("cyclic:{p}/1"));
            assert_eq!(r.counts.unwrap().d_gamma, big(2 * p - 1));
            assert_eq!(r.m_gamma, big(2 * p - 5));
        }
    }

    #[test]
    fn cyclic_generic_7_3() {
        let r = report("cyclic:7/3");
        assert_eq!(r.route, Route::Table1Row3);
        assert_eq!(r.m_gamma, big(9));
        let c = r.counts.unwrap();
        assert_eq!(c.d_gamma, big(11));
        // both evaluations: j + k - 2 and 2e + 3k - 8
        assert_eq!(&c.j_gamma + &c.k_gamma - big(2), big(9));
        assert_eq!(
            big(2) * r.embedding_dim.unwrap() + big(3) * &c.k_gamma - big(8),
            big(9)
        );
    }

    #[test]
    fn cyclic_rejects_hyperkahler_input() {
        assert_eq!(
            moduli_dimension_cyclic(&big(2), &big(1)),
            Err(Error::HyperkahlerInput)
        );
        assert_eq!(
            moduli_dimension_cyclic(&big(5), &big(4)),
            Err(Error::HyperkahlerInput)
        );
    }

    #[test]
    fn hyperkahler_dimensions() {
        assert_eq!(moduli_dimension_hyperkahler(&big(1)), big(1));
        assert_eq!(moduli_dimension_hyperkahler(&big(3)), big(6));
        assert_eq!(moduli_dimension_hyperkahler(&big(4)), big(9));
    }

    #[test]
    fn a1_report() {
        let r = report("cyclic:2/1");
        assert_eq!(r.route, Route::HyperkahlerA1);
        assert_eq!(r.m_gamma, big(1));
        assert_eq!(r.counts.unwrap().d_gamma, big(3));
        assert_eq!(r.orbit_dim, 2);
    }

    #[test]
    fn ade_cyclic_reports() {
        for p in 3u64..=20 {
            let r = report(&format!("cyclic:{p}/{}", p - 1));
            assert_eq!(r.route, Route::HyperkahlerAde);
            assert_eq!(r.m_gamma, big(3 * (p - 1) - 3));
            assert_eq!(r.orbit_dim, 3);
            // closed-form counts match the materialized chain
            let chain = counts(&cyclic_divisor(&big(p), &big(p - 1)).unwrap());
            assert_eq!(r.counts.unwrap(), chain);
        }
    }

    #[test]
    fn ade_cyclic_far_beyond_chain_memory() {
        let p = BigUint::from(10u32).pow(30);
        let q = &p - 1u32;
        let r = full_report(
            &GroupDescriptor::Cyclic { p: p.clone(), q: q.clone() },
            None,
        )
        .unwrap();
        assert_eq!(r.m_gamma, BigUint::from(3u32) * &q - BigUint::from(3u32));
    }

    #[test]
    fn d4_star_is_nine_dimensional() {
        let d4 = ExceptionalDivisor::star_i64(-2, [&[-2], &[-2], &[-2]]).unwrap();
        let r = full_report(&"dihedral:1,2".parse().unwrap(), Some(&d4)).unwrap();
        assert_eq!(r.route, Route::HyperkahlerAde);
        assert_eq!(r.m_gamma, big(9));
    }

    #[test]
    fn l1_noncyclic_requires_divisor_data() {
        assert!(matches!(
            full_report(&"tetra:1".parse().unwrap(), None),
            Err(Error::DivisorDataRequired(_))
        ));
        let not_ade = ExceptionalDivisor::star_i64(-3, [&[-2], &[-2], &[-2]]).unwrap();
        assert!(matches!(
            full_report(&"tetra:1".parse().unwrap(), Some(&not_ade)),
            Err(Error::DivisorDataMismatch(_))
        ));
    }

    #[test]
    fn toi_closed_forms() {
        let r = report("tetra:7");
        assert_eq!(
            r.route,
            Route::Table3Formula {
                family: Table3Family::Tetrahedral,
                residue: 1
            }
        );
        assert_eq!(r.m_gamma, big(19));
        assert!(r.counts.is_none());
        assert_eq!(r.orbit_dim, 1);

        assert_eq!(report("octa:5").m_gamma, big(19));
        assert_eq!(report("icosa:29").m_gamma, big(19));
        assert_eq!(report("idx3tetra:3").m_gamma, big(16));
    }

    #[test]
    fn dihedral_requires_divisor() {
        let group = parse_group("dihedral:3,5").unwrap();
        assert!(matches!(
            moduli_dimension_noncyclic(&group, None),
            Err(Error::DivisorDataRequired(_))
        ));
        let chain = ExceptionalDivisor::chain_i64(&[-3]).unwrap();
        assert!(matches!(
            moduli_dimension_noncyclic(&group, Some(&chain)),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn dihedral_star_double_count() {
        let group = parse_group("dihedral:3,5").unwrap();
        let star = ExceptionalDivisor::star_i64(-3, [&[-2], &[-2], &[-2, -2]]).unwrap();
        let r = moduli_dimension_noncyclic(&group, Some(&star)).unwrap();
        assert_eq!(r.route, Route::Table1Row4);
        let c = r.counts.unwrap();
        // j + k - 1 and 2e + 3k - 7
        assert_eq!(&c.j_gamma + &c.k_gamma - big(1), r.m_gamma);
        assert_eq!(
            big(2) * r.embedding_dim.unwrap() + big(3) * &c.k_gamma - big(7),
            r.m_gamma
        );
        assert_eq!(r.orbit_dim, 1);
    }

    #[test]
    fn toi_divisor_agreement_and_disagreement() {
        // star(2; [2], [3], [5]): j + k - 1 = 16 + 4 - 1 = 19, matching
        // the icosahedral closed form at l = 29
        let group = parse_group("icosa:29").unwrap();
        let star = ExceptionalDivisor::star_i64(-2, [&[-2], &[-3], &[-5]]).unwrap();
        let r = moduli_dimension_noncyclic(&group, Some(&star)).unwrap();
        assert_eq!(r.m_gamma, big(19));
        assert!(r.counts.is_some());

        let wrong = ExceptionalDivisor::star_i64(-2, [&[-2], &[-2], &[-2]]).unwrap();
        assert!(matches!(
            moduli_dimension_noncyclic(&group, Some(&wrong)),
            Err(Error::TableThreeDisagreement(_))
        ));
    }

    #[test]
    fn cyclic_report_rejects_contradictory_divisor() {
        let wrong = ExceptionalDivisor::chain_i64(&[-4]).unwrap();
        assert!(matches!(
            full_report(&"cyclic:7/3".parse().unwrap(), Some(&wrong)),
            Err(Error::DivisorDataMismatch(_))
        ));
        // the correct chain is accepted
        let right = ExceptionalDivisor::chain_i64(&[-3, -2, -2]).unwrap();
        assert!(full_report(&"cyclic:7/3".parse().unwrap(), Some(&right)).is_ok());
    }

    #[test]
    fn i7_consistency_solves_constant_k() {
        // the implied count is surfaced, not pinned: assert only that
        // it is b-independent, integral, positive, and matches the
        // numerical solve at every b
        let c = table3_consistency(Table3Family::Icosahedral, 7).unwrap();
        assert!(c.slope.is_zero());
        assert!(c.is_constant_integer);
        for b in 2..=12 {
            assert_eq!(table3_implied_k_at(&c.row, b).unwrap(), c.implied_k);
        }
    }

    #[test]
    fn consistency_needs_a_relation() {
        assert!(matches!(
            table3_consistency(Table3Family::Tetrahedral, 1),
            Err(Error::NoEmbeddingRelation { .. })
        ));
        assert!(matches!(
            table3_consistency(Table3Family::Tetrahedral, 2),
            Err(Error::ResidueClassInvalid { .. })
        ));
    }

    #[test]
    fn routes_round_trip() {
        let routes = [
            Route::Table1Row1,
            Route::Table1Row2,
            Route::Table1Row3,
            Route::Table1Row4,
            Route::Table3Formula {
                family: Table3Family::Icosahedral,
                residue: 29,
            },
            Route::HyperkahlerA1,
            Route::HyperkahlerAde,
        ];
        for route in routes {
            assert_eq!(route.to_string().parse::<Route>().unwrap(), route);
        }
    }

    #[test]
    fn orbit_subtraction_pattern() {
        // m = d - orbit for all non-hyperkahler routes
        for desc in ["cyclic:3/1", "cyclic:6/1", "cyclic:11/4"] {
            let r = report(desc);
            let d = r.counts.as_ref().unwrap().d_gamma.clone();
            assert_eq!(r.m_gamma, d - big(u64::from(r.orbit_dim)));
            assert!((1..=4).contains(&r.orbit_dim));
        }
    }
}
