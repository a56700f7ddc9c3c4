//! Finite subgroups of U(2) without complex reflections: descriptors,
//! validation, group order, and the dispatch classification that
//! decides which moduli formula applies.
//!
//! Cyclic groups are the `1/p (1, q)` actions
//! `(z1, z2) -> (w z1, w^q z2)` with `w` a primitive `p`th root of
//! unity, `gcd(p, q) = 1`, `1 <= q < p`. The non-cyclic groups form six
//! families built from the binary polyhedral groups via the double
//! cover `SU(2) x SU(2) -> SO(4)`, each carrying a parameter `l` (and
//! `n` for the dihedral ones) subject to a coprimality condition.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::hj::check_fraction;

/// Binary polyhedral factor of a product-type group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyhedralFactor {
    /// Binary dihedral of order `4n`.
    Dihedral { n: u64 },
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

/// A finite subgroup of U(2) without complex reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    /// The cyclic `1/p (1, q)` action.
    Cyclic { p: BigUint, q: BigUint },
    /// `phi(L(1, 2l) x F)` for a binary polyhedral factor `F`.
    PhiProduct { factor: PolyhedralFactor, l: u64 },
    /// Index-2 diagonal subgroup of `phi(L(1, 4l) x D*_{4n})`.
    Index2Dihedral { l: u64, n: u64 },
    /// Index-3 diagonal subgroup of `phi(L(1, 6l) x T*)`.
    Index3Tetrahedral { l: u64 },
}

impl GroupDescriptor {
    pub fn cyclic(p: u64, q: u64) -> Self {
        GroupDescriptor::Cyclic {
            p: BigUint::from(p),
            q: BigUint::from(q),
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, GroupDescriptor::Cyclic { .. })
    }

    /// The `l` parameter of a non-cyclic descriptor.
    pub fn l(&self) -> Option<u64> {
        match self {
            GroupDescriptor::Cyclic { .. } => None,
            GroupDescriptor::PhiProduct { l, .. }
            | GroupDescriptor::Index2Dihedral { l, .. }
            | GroupDescriptor::Index3Tetrahedral { l } => Some(*l),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic { p, q } => write!(f, "cyclic:{p}/{q}"),
            GroupDescriptor::PhiProduct { factor, l } => match factor {
                PolyhedralFactor::Dihedral { n } => write!(f, "dihedral:{l},{n}"),
                PolyhedralFactor::Tetrahedral => write!(f, "tetra:{l}"),
                PolyhedralFactor::Octahedral => write!(f, "octa:{l}"),
                PolyhedralFactor::Icosahedral => write!(f, "icosa:{l}"),
            },
            GroupDescriptor::Index2Dihedral { l, n } => write!(f, "idx2dihedral:{l},{n}"),
            GroupDescriptor::Index3Tetrahedral { l } => write!(f, "idx3tetra:{l}"),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Parses the CLI syntax: `cyclic:p/q`, `dihedral:l,n`, `tetra:l`,
    /// `octa:l`, `icosa:l`, `idx2dihedral:l,n`, `idx3tetra:l`.
    /// Formatting a parsed descriptor reproduces the input exactly.
    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: String| Error::ParseError(msg);
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| err(format!("missing ':' in descriptor '{s}'")))?;
        let uint = |t: &str| -> Result<BigUint> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(format!("'{t}' is not an unsigned integer")));
            }
            if t.len() > 1 && t.starts_with('0') {
                return Err(err(format!("'{t}' has a leading zero")));
            }
            t.parse::<BigUint>()
                .map_err(|e| err(format!("'{t}': {e}")))
        };
        let small = |t: &str| -> Result<u64> {
            u64::try_from(&uint(t)?)
                .map_err(|_| err(format!("'{t}' exceeds the supported parameter range")))
        };
        let pair = |t: &str| -> Result<(u64, u64)> {
            let (a, b) = t
                .split_once(',')
                .ok_or_else(|| err(format!("expected 'l,n' in '{t}'")))?;
            Ok((small(a)?, small(b)?))
        };
        match head {
            "cyclic" => {
                let (p, q) = rest
                    .split_once('/')
                    .ok_or_else(|| err(format!("expected 'p/q' in '{rest}'")))?;
                Ok(GroupDescriptor::Cyclic {
                    p: uint(p)?,
                    q: uint(q)?,
                })
            }
            "dihedral" => {
                let (l, n) = pair(rest)?;
                Ok(GroupDescriptor::PhiProduct {
                    factor: PolyhedralFactor::Dihedral { n },
                    l,
                })
            }
            "tetra" => Ok(GroupDescriptor::PhiProduct {
                factor: PolyhedralFactor::Tetrahedral,
                l: small(rest)?,
            }),
            "octa" => Ok(GroupDescriptor::PhiProduct {
                factor: PolyhedralFactor::Octahedral,
                l: small(rest)?,
            }),
            "icosa" => Ok(GroupDescriptor::PhiProduct {
                factor: PolyhedralFactor::Icosahedral,
                l: small(rest)?,
            }),
            "idx2dihedral" => {
                let (l, n) = pair(rest)?;
                Ok(GroupDescriptor::Index2Dihedral { l, n })
            }
            "idx3tetra" => Ok(GroupDescriptor::Index3Tetrahedral { l: small(rest)? }),
            other => Err(err(format!("unknown group family '{other}'"))),
        }
    }
}

/// A descriptor whose invariants have been checked. Constructed only by
/// [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedGroup(GroupDescriptor);

impl ValidatedGroup {
    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.0
    }

    pub fn into_descriptor(self) -> GroupDescriptor {
        self.0
    }
}

impl fmt::Display for ValidatedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn condition(ok: bool, which: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::TableTwoConditionViolated {
            which: which.to_string(),
        })
    }
}

/// Checks every descriptor invariant.
///
/// Cyclic: `gcd(p, q) = 1`, `1 <= q < p`. These two conditions already
/// exclude complex reflections: a generator power `diag(w^j, w^{jq})`
/// with `0 < j < p` has neither eigenvalue equal to 1, because `p | j`
/// and (by coprimality) `p | jq` both fail. The unit tests verify this
/// by enumerating the eigenvalue exponents for small `p`.
///
/// Non-cyclic families: the coprimality conditions of their defining
/// table (`gcd(l, 2n) = 1`, `gcd(l, 6) = 1`, `gcd(l, 30) = 1`,
/// `gcd(l, 2) = 2` with `gcd(l, n) = 1`, `gcd(l, 6) = 3`). `l = 1` is
/// accepted where the conditions allow it; those groups sit in SU(2)
/// and route to the hyperkahler branch.
pub fn validate(desc: GroupDescriptor) -> Result<ValidatedGroup> {
    match &desc {
        GroupDescriptor::Cyclic { p, q } => {
            check_fraction(p, q)?;
        }
        GroupDescriptor::PhiProduct { factor, l } => {
            condition(*l >= 1, "l must be positive")?;
            match factor {
                PolyhedralFactor::Dihedral { n } => {
                    condition(*n >= 1, "n must be positive")?;
                    let two_n = 2u128 * u128::from(*n);
                    condition(
                        u128::from(*l).gcd(&two_n) == 1,
                        &format!("dihedral product requires gcd(l, 2n) = 1; gcd({l}, {two_n}) != 1"),
                    )?;
                }
                PolyhedralFactor::Tetrahedral | PolyhedralFactor::Octahedral => {
                    condition(
                        gcd(*l, 6) == 1,
                        &format!("tetrahedral/octahedral product requires gcd(l, 6) = 1; l = {l}"),
                    )?;
                }
                PolyhedralFactor::Icosahedral => {
                    condition(
                        gcd(*l, 30) == 1,
                        &format!("icosahedral product requires gcd(l, 30) = 1; l = {l}"),
                    )?;
                }
            }
        }
        GroupDescriptor::Index2Dihedral { l, n } => {
            condition(*n >= 1, "n must be positive")?;
            condition(
                gcd(*l, 2) == 2,
                &format!("index-2 dihedral requires gcd(l, 2) = 2; l = {l}"),
            )?;
            condition(
                gcd(*l, *n) == 1,
                &format!("index-2 dihedral requires gcd(l, n) = 1; gcd({l}, {n}) != 1"),
            )?;
        }
        GroupDescriptor::Index3Tetrahedral { l } => {
            condition(
                gcd(*l, 6) == 3,
                &format!("index-3 tetrahedral requires gcd(l, 6) = 3; l = {l}"),
            )?;
        }
    }
    Ok(ValidatedGroup(desc))
}

/// Parses and validates in one step.
pub fn parse_group(s: &str) -> Result<ValidatedGroup> {
    validate(s.parse()?)
}

/// Group order: `p` for cyclic, `4ln` / `24l` / `48l` / `120l` for the
/// product families, `4ln` and `24l` for the index-2 and index-3
/// diagonal subgroups.
pub fn order(group: &ValidatedGroup) -> BigUint {
    match group.descriptor() {
        GroupDescriptor::Cyclic { p, .. } => p.clone(),
        GroupDescriptor::PhiProduct { factor, l } => {
            let l = BigUint::from(*l);
            match factor {
                PolyhedralFactor::Dihedral { n } => BigUint::from(4u32) * l * BigUint::from(*n),
                PolyhedralFactor::Tetrahedral => BigUint::from(24u32) * l,
                PolyhedralFactor::Octahedral => BigUint::from(48u32) * l,
                PolyhedralFactor::Icosahedral => BigUint::from(120u32) * l,
            }
        }
        GroupDescriptor::Index2Dihedral { l, n } => {
            BigUint::from(4u32) * BigUint::from(*l) * BigUint::from(*n)
        }
        GroupDescriptor::Index3Tetrahedral { l } => BigUint::from(24u32) * BigUint::from(*l),
    }
}

/// The closed-form dimension table families (the non-dihedral,
/// non-cyclic cases with `l > 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Table3Family {
    Tetrahedral,
    Index3Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl Table3Family {
    /// Modulus of the residue classes for this family.
    pub fn modulus(self) -> u64 {
        match self {
            Table3Family::Tetrahedral | Table3Family::Index3Tetrahedral => 6,
            Table3Family::Octahedral => 12,
            Table3Family::Icosahedral => 30,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Table3Family::Tetrahedral => "tetra",
            Table3Family::Index3Tetrahedral => "idx3tetra",
            Table3Family::Octahedral => "octa",
            Table3Family::Icosahedral => "icosa",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "tetra" => Some(Table3Family::Tetrahedral),
            "idx3tetra" => Some(Table3Family::Index3Tetrahedral),
            "octa" => Some(Table3Family::Octahedral),
            "icosa" => Some(Table3Family::Icosahedral),
            _ => None,
        }
    }
}

impl fmt::Display for Table3Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which moduli-dimension route a validated group takes. Exactly one
/// class applies to each group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DispatchClass {
    /// `1/2 (1, 1)`: the Eguchi-Hanson space.
    HyperkahlerA1,
    /// SU(2) quotients other than A_1. For cyclic `1/p (1, p-1)` the
    /// number of exceptional curves is `p - 1`; for the non-cyclic
    /// `l = 1` groups it is not derivable here and must come from
    /// divisor data.
    HyperkahlerAde { curves: Option<BigUint> },
    /// `1/3 (1, 1)`.
    CyclicQ1P3,
    /// `1/p (1, 1)` with `p >= 4`.
    CyclicQ1 { p: BigUint },
    /// `1/p (1, q)` with `q` neither 1 nor `p - 1`.
    CyclicGeneric { p: BigUint, q: BigUint },
    /// Dihedral-type non-cyclic groups with `l > 1` (product and
    /// index-2 families).
    DihedralFamily,
    /// Tetrahedral/octahedral/icosahedral non-cyclic groups with
    /// `l > 1`, identified by their residue class.
    ToiFamily { family: Table3Family, residue: u64 },
}

/// Total, deterministic dispatch. Hyperkahler detection (`q = p - 1`
/// for cyclic, `l = 1` for non-cyclic) runs before everything else, so
/// `1/3 (1, 2)` is A_2 rather than the `1/3 (1, 1)` row and `p = 2`
/// always lands on A_1.
pub fn classify(group: &ValidatedGroup) -> DispatchClass {
    match group.descriptor() {
        GroupDescriptor::Cyclic { p, q } => {
            let one = BigUint::one();
            if *q == p - &one {
                if *p == BigUint::from(2u32) {
                    DispatchClass::HyperkahlerA1
                } else {
                    DispatchClass::HyperkahlerAde {
                        curves: Some(p - &one),
                    }
                }
            } else if q.is_one() {
                if *p == BigUint::from(3u32) {
                    DispatchClass::CyclicQ1P3
                } else {
                    DispatchClass::CyclicQ1 { p: p.clone() }
                }
            } else {
                DispatchClass::CyclicGeneric {
                    p: p.clone(),
                    q: q.clone(),
                }
            }
        }
        GroupDescriptor::PhiProduct { factor, l } => {
            if *l == 1 {
                return DispatchClass::HyperkahlerAde { curves: None };
            }
            match factor {
                PolyhedralFactor::Dihedral { .. } => DispatchClass::DihedralFamily,
                PolyhedralFactor::Tetrahedral => DispatchClass::ToiFamily {
                    family: Table3Family::Tetrahedral,
                    residue: l % 6,
                },
                PolyhedralFactor::Octahedral => DispatchClass::ToiFamily {
                    family: Table3Family::Octahedral,
                    residue: l % 12,
                },
                PolyhedralFactor::Icosahedral => DispatchClass::ToiFamily {
                    family: Table3Family::Icosahedral,
                    residue: l % 30,
                },
            }
        }
        // l is even for the index-2 family and divisible by 3 for the
        // index-3 family, so neither ever has l = 1
        GroupDescriptor::Index2Dihedral { .. } => DispatchClass::DihedralFamily,
        GroupDescriptor::Index3Tetrahedral { l } => DispatchClass::ToiFamily {
            family: Table3Family::Index3Tetrahedral,
            residue: l % 6,
        },
    }
}

/// Bundled-divisor label implied by an `l = 1` descriptor: the ADE type
/// of the SU(2) resolution (`D*_{4n} -> D_{n+2}`, `T* -> E6`,
/// `O* -> E7`, `I* -> E8`). This is a fixed lookup, not a derivation;
/// `n = 1` yields the chain `A3` since `D*_4` is cyclic of order 4.
pub fn canonical_label(group: &ValidatedGroup) -> Option<String> {
    match group.descriptor() {
        GroupDescriptor::PhiProduct { factor, l: 1 } => Some(match factor {
            PolyhedralFactor::Dihedral { n: 1 } => "A3".to_string(),
            PolyhedralFactor::Dihedral { n } => format!("D{}", n.saturating_add(2)),
            PolyhedralFactor::Tetrahedral => "E6".to_string(),
            PolyhedralFactor::Octahedral => "E7".to_string(),
            PolyhedralFactor::Icosahedral => "E8".to_string(),
        }),
        _ => None,
    }
}
