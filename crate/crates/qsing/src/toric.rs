//! Toric chart combinatorics for the cyclic quotient `1/p (1, q)`.
//!
//! The resolution is encoded by a chain of lattice points
//! `c_0 = (0, 1), c_1 = (1/p)(1, q), ..., c_{k+1} = (1, 0)`, stored here
//! pre-scaled by `p` so that every point is an integer pair and the
//! determinant identity `t_i s_{i+1} - t_{i+1} s_i = 1/p` becomes
//! an exact integer statement. Charts, invariant monomials, and
//! transition maps are all manipulated as Laurent exponent vectors;
//! no series or coefficients appear anywhere.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hj::{self, check_fraction};

/// A lattice point `P_i = p * c_i = (p s_i, p t_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPoint {
    /// First component `p * s_i`; runs from 0 up to `p`.
    pub s: BigInt,
    /// Second component `p * t_i`; runs from `p` down to 0.
    pub t: BigInt,
}

impl ChainPoint {
    pub fn new(s: impl Into<BigInt>, t: impl Into<BigInt>) -> Self {
        Self {
            s: s.into(),
            t: t.into(),
        }
    }

    /// Pairing `<c_i, (a, b)> = s_i a + t_i b` as an exact rational,
    /// where `c_i = P_i / p`.
    pub fn pair(&self, exponents: &LaurentMonomial, p: &BigUint) -> BigRational {
        let num = &self.s * &exponents.x_exp + &self.t * &exponents.y_exp;
        BigRational::new(num, BigInt::from(p.clone()))
    }
}

/// The scaled lattice chain `P_0, ..., P_{k+1}` for `1/p (1, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeChain {
    pub p: BigUint,
    pub q: BigUint,
    pub points: Vec<ChainPoint>,
}

impl LatticeChain {
    /// Number of interior points `k` (the chain has `k + 2` points).
    pub fn k(&self) -> usize {
        self.points.len() - 2
    }

    /// Scaled determinant of a consecutive pair:
    /// `(P_i)_t (P_{i+1})_s - (P_{i+1})_t (P_i)_s`. Equals `p` at every
    /// index of a valid chain.
    pub fn determinant(&self, i: usize) -> BigInt {
        let a = &self.points[i];
        let b = &self.points[i + 1];
        &a.t * &b.s - &b.t * &a.s
    }

    fn check_invariants(&self) -> Result<()> {
        let p = BigInt::from(self.p.clone());
        let q = BigInt::from(self.q.clone());
        let n = self.points.len();
        if n < 2 {
            return Err(Error::ChainInvariantViolation("fewer than two points".into()));
        }
        let first = &self.points[0];
        let last = &self.points[n - 1];
        if first != &ChainPoint::new(0, p.clone()) {
            return Err(Error::ChainInvariantViolation(format!(
                "first point ({}, {}) is not (0, {p})",
                first.s, first.t
            )));
        }
        if last != &ChainPoint::new(p.clone(), 0) {
            return Err(Error::ChainInvariantViolation(format!(
                "last point ({}, {}) is not ({p}, 0)",
                last.s, last.t
            )));
        }
        if n > 2 && self.points[1] != ChainPoint::new(BigInt::one(), q) {
            return Err(Error::ChainInvariantViolation(
                "second point is not (1, q)".into(),
            ));
        }
        for (i, w) in self.points.windows(2).enumerate() {
            if self.determinant(i) != p {
                return Err(Error::ChainInvariantViolation(format!(
                    "determinant at index {i} is {}, expected {p}",
                    self.determinant(i)
                )));
            }
            if w[0].s.is_negative() || w[0].t.is_negative() {
                return Err(Error::ChainInvariantViolation(format!(
                    "negative component at index {i}"
                )));
            }
            if w[1].s <= w[0].s || w[1].t >= w[0].t {
                return Err(Error::ChainInvariantViolation(format!(
                    "chain not monotone between indices {i} and {}",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

/// Builds the chain by `P_0 = (0, p)`, `P_1 = (1, q)`,
/// `P_{i+1} = e_i P_i - P_{i-1}` with the entries of the
/// Hirzebruch-Jung expansion of `p/q`, then verifies every chain
/// invariant (endpoints, determinants, monotonicity). A violation is
/// reported as [`Error::ChainInvariantViolation`]; it signals an
/// internal bug, never bad input.
pub fn lattice_chain(p: &BigUint, q: &BigUint) -> Result<LatticeChain> {
    let expansion = hj::hj_expand(p, q)?;
    let mut points = Vec::with_capacity(expansion.len() + 2);
    points.push(ChainPoint::new(0, BigInt::from(p.clone())));
    points.push(ChainPoint::new(1, BigInt::from(q.clone())));
    for e in &expansion.entries {
        let prev = &points[points.len() - 2];
        let cur = &points[points.len() - 1];
        let next = ChainPoint {
            s: e * &cur.s - &prev.s,
            t: e * &cur.t - &prev.t,
        };
        points.push(next);
    }
    let chain = LatticeChain {
        p: p.clone(),
        q: q.clone(),
        points,
    };
    chain.check_invariants()?;
    Ok(chain)
}

/// An exponent pair `(a, b)` standing for `x^a y^b`; either exponent
/// may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMonomial {
    pub x_exp: BigInt,
    pub y_exp: BigInt,
}

impl LaurentMonomial {
    pub fn new(x_exp: impl Into<BigInt>, y_exp: impl Into<BigInt>) -> Self {
        Self {
            x_exp: x_exp.into(),
            y_exp: y_exp.into(),
        }
    }

    /// Weight of the monomial under the `1/p (1, q)` action:
    /// `(a + q b) mod p`, reduced to `0..p`.
    pub fn weight(&self, p: &BigUint, q: &BigUint) -> BigUint {
        let modulus = BigInt::from(p.clone());
        let w = (&self.x_exp + BigInt::from(q.clone()) * &self.y_exp).mod_floor(&modulus);
        w.to_biguint().expect("mod_floor of a positive modulus is nonnegative")
    }

    /// True when the weight vanishes, i.e. the monomial descends to the
    /// quotient.
    pub fn is_invariant(&self, p: &BigUint, q: &BigUint) -> bool {
        self.weight(p, q).is_zero()
    }

    /// Componentwise negation (the exponents of the reciprocal monomial).
    pub fn inverse(&self) -> LaurentMonomial {
        LaurentMonomial {
            x_exp: -&self.x_exp,
            y_exp: -&self.y_exp,
        }
    }
}

impl std::fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn factor(f: &mut std::fmt::Formatter<'_>, var: char, e: &BigInt) -> std::fmt::Result {
            if e.is_one() {
                write!(f, "{var}")
            } else {
                write!(f, "{var}^{e}")
            }
        }
        if self.x_exp.is_zero() && self.y_exp.is_zero() {
            return write!(f, "1");
        }
        let mut first = true;
        for (var, e) in [('x', &self.x_exp), ('y', &self.y_exp)] {
            if e.is_zero() {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            factor(f, var, e)?;
            first = false;
        }
        Ok(())
    }
}

/// Generators of the invariant ring of `1/p (1, q)` as exponent pairs:
/// `w_0 = (p, 0)`, `w_1 = (p - q, 1)`, `w_{i+1} = a_i w_i - w_{i-1}`
/// with the dual expansion entries `a_i`, ending at `w_{k'+1} = (0, p)`.
/// The count equals the embedding dimension and every monomial is
/// invariant; both facts are re-verified on each call.
pub fn invariant_monomials(p: &BigUint, q: &BigUint) -> Result<Vec<LaurentMonomial>> {
    let dual = hj::dual_expand(p, q)?;
    let mut monomials = Vec::with_capacity(dual.len() + 2);
    monomials.push(LaurentMonomial::new(BigInt::from(p.clone()), 0));
    monomials.push(LaurentMonomial::new(BigInt::from(p - q), 1));
    for a in &dual.entries {
        let prev = &monomials[monomials.len() - 2];
        let cur = &monomials[monomials.len() - 1];
        let next = LaurentMonomial {
            x_exp: a * &cur.x_exp - &prev.x_exp,
            y_exp: a * &cur.y_exp - &prev.y_exp,
        };
        monomials.push(next);
    }

    let last = monomials.last().expect("at least two monomials");
    if last != &LaurentMonomial::new(0, BigInt::from(p.clone())) {
        return Err(Error::ChainInvariantViolation(format!(
            "monomial chain ends at ({}, {}) instead of (0, {p})",
            last.x_exp, last.y_exp
        )));
    }
    let e = hj::embedding_dimension(p, q)?;
    if BigUint::from(monomials.len()) != e {
        return Err(Error::ChainInvariantViolation(format!(
            "monomial count {} differs from embedding dimension {e}",
            monomials.len()
        )));
    }
    for m in &monomials {
        if m.x_exp.is_negative() || m.y_exp.is_negative() {
            return Err(Error::ChainInvariantViolation(format!(
                "invariant monomial ({}, {}) has a negative exponent",
                m.x_exp, m.y_exp
            )));
        }
        if !m.is_invariant(p, q) {
            return Err(Error::ChainInvariantViolation(format!(
                "monomial ({}, {}) is not invariant",
                m.x_exp, m.y_exp
            )));
        }
    }
    Ok(monomials)
}

/// Coordinate pair of chart `i`: `xi_i = x^{p t_i} y^{-p s_i}` and
/// `eta_i = x^{-p t_{i+1}} y^{p s_{i+1}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub eta: LaurentMonomial,
    pub xi: LaurentMonomial,
}

/// The charts `i = 0..=k` covering the resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartAtlas {
    pub p: BigUint,
    pub q: BigUint,
    pub charts: Vec<Chart>,
}

/// Builds all `k + 1` charts from the lattice chain and checks that
/// every chart monomial is invariant.
pub fn chart_atlas(p: &BigUint, q: &BigUint) -> Result<ChartAtlas> {
    let chain = lattice_chain(p, q)?;
    atlas_from_chain(&chain)
}

pub(crate) fn atlas_from_chain(chain: &LatticeChain) -> Result<ChartAtlas> {
    let (p, q) = (&chain.p, &chain.q);
    let mut charts = Vec::with_capacity(chain.points.len() - 1);
    for w in chain.points.windows(2) {
        let xi = LaurentMonomial {
            x_exp: w[0].t.clone(),
            y_exp: -&w[0].s,
        };
        let eta = LaurentMonomial {
            x_exp: -&w[1].t,
            y_exp: w[1].s.clone(),
        };
        for m in [&xi, &eta] {
            if !m.is_invariant(p, q) {
                return Err(Error::ChainInvariantViolation(format!(
                    "chart monomial ({}, {}) is not invariant",
                    m.x_exp, m.y_exp
                )));
            }
        }
        charts.push(Chart { eta, xi });
    }
    Ok(ChartAtlas {
        p: p.clone(),
        q: q.clone(),
        charts,
    })
}

/// Outcome of the two transition identities between charts `i` and
/// `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionCheck {
    pub index: usize,
    /// Exponents of `eta_i` equal the negated exponents of `xi_{i+1}`.
    pub inverse_holds: bool,
    /// The solved coefficient matches the Hirzebruch-Jung entry.
    pub recursion_holds: bool,
    /// The unique integer `m` with `eta_{i+1} = eta_i^m xi_i` at the
    /// exponent level.
    pub coefficient: BigInt,
}

/// Per-chart dual-basis pairings `<c_i, eta_i> = 1`, `<c_i, xi_i> = 0`,
/// `<c_{i+1}, eta_i> = 0`, `<c_{i+1}, xi_i> = 1`, evaluated in exact
/// rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualBasisCheck {
    pub index: usize,
    pub pairings: [BigRational; 4],
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionReport {
    pub per_index: Vec<TransitionCheck>,
    pub dual_basis: Vec<DualBasisCheck>,
}

impl TransitionReport {
    pub fn all_hold(&self) -> bool {
        self.per_index
            .iter()
            .all(|c| c.inverse_holds && c.recursion_holds)
            && self.dual_basis.iter().all(|c| c.holds)
    }
}

/// Verifies, as exact exponent-vector identities, that
/// `eta_i = xi_{i+1}^{-1}` and `eta_{i+1} = eta_i^{e_{i+1}} xi_i` at
/// every consecutive chart pair, solving for the integer coefficient
/// rather than assuming it, and that the chart monomials are dual to
/// the chain points under the rational pairing.
pub fn verify_transitions(p: &BigUint, q: &BigUint) -> Result<TransitionReport> {
    let expansion = hj::hj_expand(p, q)?;
    let chain = lattice_chain(p, q)?;
    let atlas = atlas_from_chain(&chain)?;
    let charts = &atlas.charts;

    let mut per_index = Vec::with_capacity(charts.len().saturating_sub(1));
    for i in 0..charts.len() - 1 {
        let (cur, next) = (&charts[i], &charts[i + 1]);
        let inverse_holds = cur.eta == next.xi.inverse();
        // solve eta_{i+1} = m * eta_i + xi_i componentwise
        let coefficient = solve_coefficient(&cur.eta, &cur.xi, &next.eta)
            .ok_or(Error::NoIntegerSolution { index: i })?;
        let recursion_holds = coefficient == expansion.entries[i];
        per_index.push(TransitionCheck {
            index: i,
            inverse_holds,
            recursion_holds,
            coefficient,
        });
    }

    let one = BigRational::one();
    let zero = BigRational::zero();
    let mut dual_basis = Vec::with_capacity(charts.len());
    for (i, chart) in charts.iter().enumerate() {
        let (ci, cn) = (&chain.points[i], &chain.points[i + 1]);
        let pairings = [
            ci.pair(&chart.eta, p),
            ci.pair(&chart.xi, p),
            cn.pair(&chart.eta, p),
            cn.pair(&chart.xi, p),
        ];
        let holds = pairings[0] == one
            && pairings[1] == zero
            && pairings[2] == zero
            && pairings[3] == one;
        dual_basis.push(DualBasisCheck {
            index: i,
            pairings,
            holds,
        });
    }

    Ok(TransitionReport {
        per_index,
        dual_basis,
    })
}

/// Finds the unique integer `m` with `target = m * base + offset` on
/// both exponents, if one exists.
fn solve_coefficient(
    base: &LaurentMonomial,
    offset: &LaurentMonomial,
    target: &LaurentMonomial,
) -> Option<BigInt> {
    let rx = &target.x_exp - &offset.x_exp;
    let ry = &target.y_exp - &offset.y_exp;
    let m = if !base.x_exp.is_zero() {
        let (quot, rem) = rx.div_rem(&base.x_exp);
        if !rem.is_zero() {
            return None;
        }
        quot
    } else if !base.y_exp.is_zero() {
        let (quot, rem) = ry.div_rem(&base.y_exp);
        if !rem.is_zero() {
            return None;
        }
        quot
    } else {
        return None;
    };
    if &m * &base.x_exp == rx && &m * &base.y_exp == ry {
        Some(m)
    } else {
        None
    }
}

/// 2x2 matrix over exact rationals; just enough for the frame-change
/// checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub rows: [[BigRational; 2]; 2],
}

impl Mat2 {
    pub fn identity() -> Self {
        let one = BigRational::one();
        let zero = BigRational::zero();
        Mat2 {
            rows: [[one.clone(), zero.clone()], [zero, one]],
        }
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let entry = |r: usize, c: usize| {
            &self.rows[r][0] * &other.rows[0][c] + &self.rows[r][1] * &other.rows[1][c]
        };
        Mat2 {
            rows: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]],
        }
    }
}

/// Change of frame between the logarithmic derivations of chart `i`
/// and the torus frame `{x d/dx, y d/dy}`.
///
/// `forward` has rows `(s_i, t_i)` and `(s_{i+1}, t_{i+1})`: the
/// coefficients of `eta_i d/d(eta_i)` and `xi_i d/d(xi_i)` in the torus
/// frame (so `d/d(eta_i)` itself carries the `1/eta_i` prefactor of the
/// chart coordinate in [`Chart`], and likewise for `xi_i`). `inverse`
/// expresses the torus frame back in chart derivations with the
/// integer entries `p (-t_{i+1}, t_i)` and `p (s_{i+1}, -s_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameChange {
    pub chart: Chart,
    pub forward: Mat2,
    pub inverse: Mat2,
}

/// Frame-change matrices at chart `i`, `0 <= i <= k`. The two matrices
/// are exact inverses of each other; this is re-checked on every call.
pub fn derivation_change_of_frame(p: &BigUint, q: &BigUint, i: usize) -> Result<FrameChange> {
    check_fraction(p, q)?;
    let chain = lattice_chain(p, q)?;
    let max = chain.k();
    if i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    let atlas = atlas_from_chain(&chain)?;
    let pb = BigInt::from(p.clone());
    let rat = |n: &BigInt| BigRational::new(n.clone(), pb.clone());
    let whole = |n: BigInt| BigRational::from(n);

    let (a, b) = (&chain.points[i], &chain.points[i + 1]);
    let forward = Mat2 {
        rows: [[rat(&a.s), rat(&a.t)], [rat(&b.s), rat(&b.t)]],
    };
    let inverse = Mat2 {
        rows: [
            [whole(-&b.t), whole(a.t.clone())],
            [whole(b.s.clone()), whole(-&a.s)],
        ],
    };
    if forward.mul(&inverse) != Mat2::identity() {
        return Err(Error::ChainInvariantViolation(format!(
            "frame matrices at chart {i} are not mutually inverse"
        )));
    }
    Ok(FrameChange {
        chart: atlas.charts[i].clone(),
        forward,
        inverse,
    })
}
