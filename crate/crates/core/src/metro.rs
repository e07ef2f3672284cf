//! The metro equation `a x - S(x) b - D(x) = c`.
//!
//! Solvability for `c != 0` is equivalent to `(t - b^c)(t - a)` being a
//! W-polynomial: `x` is a solution exactly when `a - c x^-1` is a second
//! right root of that quadratic.

use crate::error::{Error, Result};
use crate::eval::evaluate;
use crate::linalg::{linear_map_matrix, BaseMatrix};
use crate::qpoly::QPoly;
use crate::ring::{Backend, BaseField, Derivation, Elem, OreContext, RatFunc};
use crate::skewpoly::SkewPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetroStatus {
    Solution(Elem),
    NoSolution,
    Undecided(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    Unique,
    /// Two distinct solutions.
    Multiple(Elem, Elem),
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Exhaustive,
    LinearAlgebra,
    Commutative,
    Antiderivative,
    RationalAnsatz,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetroReport {
    pub status: MetroStatus,
    pub uniqueness: Uniqueness,
    pub strategy: Strategy,
}

impl MetroReport {
    fn new(status: MetroStatus, uniqueness: Uniqueness, strategy: Strategy) -> Self {
        MetroReport { status, uniqueness, strategy }
    }

    pub fn solution(&self) -> Option<&Elem> {
        match &self.status {
            MetroStatus::Solution(x) => Some(x),
            _ => None,
        }
    }

    /// `Some(true/false)` when solvability was decided.
    pub fn solvable(&self) -> Option<bool> {
        match self.status {
            MetroStatus::Solution(_) => Some(true),
            MetroStatus::NoSolution => Some(false),
            MetroStatus::Undecided(_) => None,
        }
    }
}

/// `a x - S(x) b - D(x)`.
pub fn metro_lhs(ctx: &OreContext, a: &Elem, b: &Elem, x: &Elem) -> Elem {
    ctx.sub(&ctx.sub(&ctx.mul(a, x), &ctx.mul(&ctx.apply_s(x), b)), &ctx.apply_d(x))
}

pub fn solve_metro(ctx: &OreContext, a: &Elem, b: &Elem, c: &Elem) -> Result<MetroReport> {
    if ctx.is_zero(c) {
        return Err(Error::ZeroC);
    }
    let report = if let Ok(all) = ctx.enumerate() {
        exhaustive(ctx, a, b, c, &all)
    } else if ctx.capabilities().finite_dimensional.is_some() {
        linear(ctx, a, b, c)?
    } else if ctx.backend().is_commutative() && ctx.s_is_identity() {
        commutative(ctx, a, b, c)
    } else {
        MetroReport::new(
            MetroStatus::Undecided(format!("no solving strategy for {}", ctx.describe())),
            Uniqueness::Unknown,
            Strategy::None,
        )
    };
    if let MetroStatus::Solution(x) = &report.status {
        assert_eq!(&metro_lhs(ctx, a, b, x), c, "metro solution failed substitution");
    }
    Ok(report)
}

fn exhaustive(ctx: &OreContext, a: &Elem, b: &Elem, c: &Elem, all: &[Elem]) -> MetroReport {
    let sols: Vec<&Elem> = all.iter().filter(|x| &metro_lhs(ctx, a, b, x) == c).collect();
    match sols.as_slice() {
        [] => MetroReport::new(MetroStatus::NoSolution, Uniqueness::Unique, Strategy::Exhaustive),
        [x] => MetroReport::new(MetroStatus::Solution((*x).clone()), Uniqueness::Unique, Strategy::Exhaustive),
        [x, y, ..] => MetroReport::new(
            MetroStatus::Solution((*x).clone()),
            Uniqueness::Multiple((*x).clone(), (*y).clone()),
            Strategy::Exhaustive,
        ),
    }
}

fn linear(ctx: &OreContext, a: &Elem, b: &Elem, c: &Elem) -> Result<MetroReport> {
    let m = linear_map_matrix(ctx, |x| metro_lhs(ctx, a, b, x))?;
    let backend = ctx.backend();
    let Some(sol) = m.solve(&backend.coordinates(c).expect("element of K")) else {
        return Ok(MetroReport::new(MetroStatus::NoSolution, Uniqueness::Unknown, Strategy::LinearAlgebra));
    };
    let x = backend.from_coordinates(&sol);
    let kernel = m.kernel();
    let uniqueness = match kernel.first() {
        None => Uniqueness::Unique,
        Some(k) => Uniqueness::Multiple(x.clone(), ctx.add(&x, &backend.from_coordinates(k))),
    };
    Ok(MetroReport::new(MetroStatus::Solution(x), uniqueness, Strategy::LinearAlgebra))
}

fn as_func(e: &Elem) -> &RatFunc {
    match e {
        Elem::Func(f) => f,
        _ => panic!("expected a rational function"),
    }
}

/// `(a - b) x - D(x) = c` over a commutative field with `S = id`.
fn commutative(ctx: &OreContext, a: &Elem, b: &Elem, c: &Elem) -> MetroReport {
    let diff = ctx.sub(a, b);
    if matches!(ctx.derivation(), Derivation::Zero | Derivation::Inner(_)) {
        // inner derivations vanish on a commutative field
        return if ctx.is_zero(&diff) {
            MetroReport::new(MetroStatus::NoSolution, Uniqueness::Unique, Strategy::Commutative)
        } else {
            let x = ctx.mul(c, &ctx.inv(&diff));
            MetroReport::new(MetroStatus::Solution(x), Uniqueness::Unique, Strategy::Commutative)
        };
    }
    if ctx.is_zero(&diff) {
        let cf = as_func(c);
        if !cf.is_polynomial() {
            return MetroReport::new(
                MetroStatus::Undecided("c is not a polynomial, no antiderivative attempted".into()),
                Uniqueness::Unknown,
                Strategy::Antiderivative,
            );
        }
        let x = Elem::Func(RatFunc::from_poly(cf.num().integral().neg()));
        let other = ctx.add(&x, &ctx.one());
        return MetroReport::new(MetroStatus::Solution(x.clone()), Uniqueness::Multiple(x, other), Strategy::Antiderivative);
    }
    let bound = 2 * [a, b, c].iter().map(|e| as_func(e).max_degree()).max().unwrap_or(0) + 4;
    match rational_ansatz(ctx, a, b, c, bound) {
        Some(x) => MetroReport::new(MetroStatus::Solution(x), Uniqueness::Unknown, Strategy::RationalAnsatz),
        None => MetroReport::new(
            MetroStatus::Undecided(format!("no solution P/Q with deg P <= {bound} for the tried denominators")),
            Uniqueness::Unknown,
            Strategy::RationalAnsatz,
        ),
    }
}

/// Searches `x = P / Q^m` with `deg P <= bound`, `m <= 2` and `Q` the
/// common denominator of `a - b` and `c`. The linear conditions on `P` are
/// sampled at rational points and every candidate is checked exactly.
fn rational_ansatz(ctx: &OreContext, a: &Elem, b: &Elem, c: &Elem, bound: usize) -> Option<Elem> {
    let (fa, fb, fc) = (as_func(a), as_func(b), as_func(c));
    let q = lcm(&lcm(fa.den(), fb.den()), fc.den());
    let mut den = QPoly::one();
    for _ in 0..=2 {
        let basis: Vec<Elem> =
            (0..=bound).map(|k| Elem::Func(RatFunc::new(QPoly::monomial(BigRational::one(), k), den.clone()))).collect();
        let images: Vec<RatFunc> = basis.iter().map(|e| as_func(&metro_lhs(ctx, a, b, e)).clone()).collect();
        let npts = 3 * (bound + 1) + 4 * (q.degree().unwrap_or(0) + den.degree().unwrap_or(0)) + 10;
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        let mut rhs = Vec::new();
        let mut j: i64 = 0;
        while rows.len() < npts {
            j += 1;
            let pt = BigRational::new(BigInt::from(j), BigInt::from(3)) - BigRational::from_integer(BigInt::from(7));
            let (Some(vc), Some(vals)) = (fc.eval(&pt), images.iter().map(|r| r.eval(&pt)).collect::<Option<Vec<_>>>())
            else {
                continue;
            };
            if fa.eval(&pt).is_none() || fb.eval(&pt).is_none() || den.eval(&pt).is_zero() {
                continue;
            }
            rows.push(vals.into_iter().map(Elem::Rat).collect());
            rhs.push(Elem::Rat(vc));
        }
        let m = BaseMatrix::from_columns(
            BaseField::Rationals,
            rows.len(),
            &(0..=bound).map(|k| rows.iter().map(|r| r[k].clone()).collect()).collect::<Vec<_>>(),
        );
        if let Some(p) = m.solve(&rhs) {
            let num = QPoly::new(p.into_iter().map(|e| if let Elem::Rat(r) = e { r } else { unreachable!() }).collect());
            let x = Elem::Func(RatFunc::new(num, den.clone()));
            if &metro_lhs(ctx, a, b, &x) == c {
                return Some(x);
            }
        }
        den = den.mul(&q);
    }
    None
}

fn lcm(p: &QPoly, q: &QPoly) -> QPoly {
    p.mul(q).exact_div(&p.gcd(q)).expect("gcd divides").make_monic()
}

/// Both sides of the equivalence between solvability and `(t - b^c)(t - a)`
/// being a W-polynomial, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub quadratic: SkewPoly,
    pub metro: MetroReport,
    /// Whether the quadratic has a second right root; `None` if undecided.
    pub wedderburn: Option<bool>,
    pub second_root: Option<Elem>,
}

impl EquivalenceReport {
    pub fn agree(&self) -> Option<bool> {
        Some(self.metro.solvable()? == self.wedderburn?)
    }
}

/// `(t - b^c)(t - a)`.
pub fn metro_quadratic(ctx: &Arc<OreContext>, a: &Elem, b: &Elem, c: &Elem) -> Result<SkewPoly> {
    let bc = ctx.conjugate(b, c)?;
    Ok(&SkewPoly::linear(ctx, &bc) * &SkewPoly::linear(ctx, a))
}

pub fn metro_wedderburn_equivalence(ctx: &Arc<OreContext>, a: &Elem, b: &Elem, c: &Elem) -> Result<EquivalenceReport> {
    if ctx.is_zero(c) {
        return Err(Error::ZeroC);
    }
    let f = metro_quadratic(ctx, a, b, c)?;
    let metro = solve_metro(ctx, a, b, c)?;
    let (wedderburn, second_root) = second_root(&f, a, c)?;
    Ok(EquivalenceReport { quadratic: f, metro, wedderburn, second_root })
}

/// A right root of `f` other than `a`: by enumeration, from the conjugacy
/// classes on the quaternions, by rational roots on `Q`, and otherwise among
/// `a - c x^-1` for small candidates `x`.
fn second_root(f: &SkewPoly, a: &Elem, c: &Elem) -> Result<(Option<bool>, Option<Elem>)> {
    let ctx = f.context();
    match ctx.backend() {
        Backend::FiniteField(_) | Backend::Rationals | Backend::Quaternions => {
            let cert = crate::wedd::is_wedderburn(f)?;
            let other = cert.roots().iter().find(|r| *r != a).cloned();
            let other = match (cert.is_w(), other) {
                (true, None) => {
                    // the certificate may list a conjugate of a; pick any other root
                    crate::eval::right_roots(f, Some(cert.roots()))?.into_iter().find(|r| r != a)
                }
                (_, o) => o,
            };
            Ok((Some(cert.is_w()), if cert.is_w() { other } else { None }))
        }
        Backend::RationalFunctions { .. } => {
            let mut cands = crate::wedd::default_candidates(ctx);
            cands.extend(
                crate::wedd::default_candidates(ctx)
                    .iter()
                    .filter_map(|x| ctx.checked_inv(x))
                    .map(|xi| ctx.sub(a, &ctx.mul(c, &xi))),
            );
            let found = cands.into_iter().find(|y| y != a && ctx.is_zero(&evaluate(f, y)));
            Ok(match found {
                Some(y) => (Some(true), Some(y)),
                None => (None, None),
            })
        }
    }
}

/// Report of the uniqueness statement for an algebraic class of `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassUniquenessReport {
    pub quadratic: SkewPoly,
    pub wedderburn: bool,
    pub metro: MetroReport,
}

impl ClassUniquenessReport {
    pub fn holds(&self) -> bool {
        self.wedderburn && self.metro.uniqueness == Uniqueness::Unique && self.metro.solution().is_some()
    }
}

/// Whether `x` and `y` are `(S, D)`-conjugate, where decidable.
pub fn conjugate_class_member(ctx: &OreContext, x: &Elem, y: &Elem) -> Option<bool> {
    if let Ok(all) = ctx.enumerate() {
        return Some(all.iter().filter(|c| !ctx.is_zero(c)).any(|c| ctx.conjugate(x, c).as_ref() == Ok(y)));
    }
    crate::wedd::classes::same_class(ctx, x, y)
}

pub fn class_algebraic_uniqueness(ctx: &Arc<OreContext>, b: &Elem, a: &Elem, c: &Elem) -> Result<ClassUniquenessReport> {
    if ctx.is_zero(c) {
        return Err(Error::ZeroC);
    }
    let member = conjugate_class_member(ctx, b, a)
        .ok_or_else(|| Error::CapabilityMissing(format!("class of b is not known to be algebraic over {}", ctx.describe())))?;
    if member {
        return Err(Error::AInClass);
    }
    let quadratic = metro_quadratic(ctx, a, b, c)?;
    let wedderburn = crate::wedd::is_wedderburn(&quadratic)?.is_w();
    let metro = solve_metro(ctx, a, b, c)?;
    Ok(ClassUniquenessReport { quadratic, wedderburn, metro })
}
