//! Wedderburn polynomials: zero sets and their ranks, certificates,
//! complete splittings, companion and Vandermonde matrices, and the dual
//! (left-root) representation.
//!
//! `f` is a W-polynomial when it is the minimal polynomial of its own zero
//! set, i.e. `rk V(f) = deg f`. Zero sets are computed exactly on finite
//! fields (enumeration), on `Q` (rational roots) and on the quaternions with
//! `S = id` (conjugacy classes and exponential spaces). On rational
//! functions only a finite candidate search is possible, and a negative
//! answer is reported as [`Error::Incomplete`] unless a quadratic can be
//! settled through the metro equation.

pub mod classes;
pub mod expspace;
pub mod theorems;

use crate::algset::{adjoin, minimal_polynomial};
use crate::error::{Error, Result};
use crate::eval::{evaluate, power_functions, right_roots};
use crate::linalg::KMatrix;
use crate::qpoly::QPoly;
use crate::ring::{Backend, Derivation, Elem, Endomorphism, OreContext};
use crate::skewpoly::SkewPoly;
use std::sync::Arc;

/// Evidence for or against `f` being a W-polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WCertificate {
    /// `deg f` P-independent right roots whose minimal polynomial is `f`.
    IsW { poly: SkewPoly, roots: Vec<Elem> },
    /// `f_(V(f))`, a proper right divisor of `f`, with a P-basis of `V(f)`.
    NotW { poly: SkewPoly, v_poly: SkewPoly, basis: Vec<Elem> },
}

impl WCertificate {
    pub fn is_w(&self) -> bool {
        matches!(self, WCertificate::IsW { .. })
    }

    /// The P-basis carried by the certificate.
    pub fn roots(&self) -> &[Elem] {
        match self {
            WCertificate::IsW { roots, .. } => roots,
            WCertificate::NotW { basis, .. } => basis,
        }
    }

    /// Re-checks the certificate from scratch.
    pub fn verify(&self) -> bool {
        match self {
            WCertificate::IsW { poly, roots } => minimal_polynomial(poly.context(), roots).poly == *poly,
            WCertificate::NotW { poly, v_poly, basis } => {
                minimal_polynomial(poly.context(), basis).poly == *v_poly
                    && v_poly.degree() < poly.degree()
                    && poly.right_divisible_by(v_poly).unwrap_or(false)
                    && basis.iter().all(|a| poly.context().is_zero(&evaluate(poly, a)))
            }
        }
    }
}

/// How the zero set was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSource {
    Enumeration,
    RationalRoots,
    QuaternionClasses,
    CandidateSearch,
}

/// `f_(V(f))` with a P-basis of `V(f)`.
#[derive(Clone, Debug)]
pub struct ZeroSet {
    pub v_poly: SkewPoly,
    pub basis: Vec<Elem>,
    /// Whether `V(f)` was searched completely.
    pub complete: bool,
    pub source: RootSource,
}

impl ZeroSet {
    pub fn rank(&self) -> usize {
        self.v_poly.deg()
    }
}

fn require_nonzero(f: &SkewPoly) -> Result<SkewPoly> {
    if f.is_zero() {
        Err(Error::Precondition("the zero polynomial has every element as a root".into()))
    } else {
        Ok(f.monic())
    }
}

/// Coefficients of a classical polynomial over `Q`.
fn rational_coeffs(f: &SkewPoly) -> QPoly {
    QPoly::new(
        f.coeffs()
            .iter()
            .map(|c| match c {
                Elem::Rat(r) => r.clone(),
                _ => panic!("expected a rational coefficient"),
            })
            .collect(),
    )
}

/// Small candidate roots tried on rational-function backends.
pub fn default_candidates(ctx: &OreContext) -> Vec<Elem> {
    let v = ctx.backend().variable().unwrap_or('x');
    let texts = [
        "0", "1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3", "V", "-V", "2V", "-2V", "V/2", "-V/2", "V^2", "-V^2",
        "V+1", "V-1", "-V+1", "-V-1", "1/V", "-1/V", "2/V", "-2/V", "V+1/V", "V-1/V", "-V+1/V", "-V-1/V",
        "1/(V+1)", "1/(V-1)", "V^2+1", "V^2-1", "V^3", "2V+1/V",
    ];
    texts
        .iter()
        .filter_map(|s| ctx.elem(&s.replace('V', &v.to_string())).ok())
        .collect()
}

/// Computes `f_(V(f))` for a nonzero `f`. `extra` adds candidates on
/// backends where the search is not exhaustive.
pub fn zero_set(f: &SkewPoly, extra: Option<&[Elem]>) -> Result<ZeroSet> {
    let f = require_nonzero(f)?;
    let ctx = f.context().clone();
    match ctx.backend() {
        Backend::FiniteField(_) => {
            let roots = right_roots(&f, None)?;
            let m = minimal_polynomial(&ctx, &roots);
            Ok(ZeroSet { v_poly: m.poly, basis: m.basis, complete: true, source: RootSource::Enumeration })
        }
        Backend::Rationals => {
            let roots: Vec<Elem> = rational_coeffs(&f).rational_roots().into_iter().map(Elem::Rat).collect();
            let m = minimal_polynomial(&ctx, &roots);
            Ok(ZeroSet { v_poly: m.poly, basis: m.basis, complete: true, source: RootSource::RationalRoots })
        }
        Backend::Quaternions => quaternion_zero_set(&f),
        Backend::RationalFunctions { .. } => candidate_zero_set(&f, extra),
    }
}

/// Greedy search over conjugacy classes: inside the class of `a`, the roots
/// of `g` are the `a^x` with `x` in `E(g, a)`, so a basis vector of
/// `E(f, a)` outside `E(g, a)` yields a root that raises the rank.
fn quaternion_zero_set(f: &SkewPoly) -> Result<ZeroSet> {
    let ctx = f.context();
    let cls = classes::root_classes(f)?;
    let mut g = SkewPoly::one(ctx);
    let mut basis = Vec::new();
    for cl in &cls {
        let a = &cl.rep;
        let ef = expspace::exponential_base_basis(f, a)?;
        loop {
            let eg = expspace::exponential_base_basis(&g, a)?;
            let mut next = None;
            for x in &ef {
                if !expspace::in_base_span(ctx, &eg, x)? {
                    next = Some(x.clone());
                    break;
                }
            }
            let Some(x) = next else { break };
            let root = ctx.conjugate(a, &x)?;
            g = adjoin(&g, &root).expect("new root raises the rank");
            basis.push(root);
        }
    }
    Ok(ZeroSet { v_poly: g, basis, complete: true, source: RootSource::QuaternionClasses })
}

fn candidate_zero_set(f: &SkewPoly, extra: Option<&[Elem]>) -> Result<ZeroSet> {
    let ctx = f.context();
    let mut cands = default_candidates(ctx);
    if f.deg() == 1 {
        cands.insert(0, ctx.neg(&f.coeff(0)));
    }
    if let Some(e) = extra {
        cands.extend(e.iter().cloned());
    }
    let roots = right_roots(f, Some(&cands))?;
    let m = minimal_polynomial(ctx, &roots);
    let n = f.deg();
    if m.poly.deg() == n {
        return Ok(ZeroSet { v_poly: m.poly, basis: m.basis, complete: true, source: RootSource::CandidateSearch });
    }
    if n == 2 && m.poly.deg() == 1 {
        // f = (t - b)(t - a): a second root a - x^-1 exists iff a x - S(x) b - D(x) = 1 is solvable
        let a = m.basis[0].clone();
        let (q, _) = f.right_divmod(&SkewPoly::linear(ctx, &a))?;
        let b = ctx.neg(&q.coeff(0));
        let report = crate::metro::solve_metro(ctx, &a, &b, &ctx.one())?;
        match report.status {
            crate::metro::MetroStatus::Solution(x) => {
                let y = ctx.sub(&a, &ctx.inv(&x));
                debug_assert!(ctx.is_zero(&evaluate(f, &y)));
                let m = minimal_polynomial(ctx, &[a, y]);
                return Ok(ZeroSet { v_poly: m.poly, basis: m.basis, complete: true, source: RootSource::CandidateSearch });
            }
            crate::metro::MetroStatus::NoSolution => {
                return Ok(ZeroSet { v_poly: m.poly, basis: m.basis, complete: true, source: RootSource::CandidateSearch });
            }
            crate::metro::MetroStatus::Undecided(_) => {}
        }
    }
    Ok(ZeroSet { v_poly: m.poly, basis: m.basis, complete: false, source: RootSource::CandidateSearch })
}

/// Decides whether `f` is a W-polynomial. Non-monic input is normalised by
/// its leading coefficient first.
pub fn is_wedderburn(f: &SkewPoly) -> Result<WCertificate> {
    is_wedderburn_with(f, None)
}

pub fn is_wedderburn_with(f: &SkewPoly, extra: Option<&[Elem]>) -> Result<WCertificate> {
    let poly = require_nonzero(f)?;
    let zs = zero_set(&poly, extra)?;
    if zs.v_poly == poly {
        Ok(WCertificate::IsW { poly, roots: zs.basis })
    } else if zs.complete {
        Ok(WCertificate::NotW { poly, v_poly: zs.v_poly, basis: zs.basis })
    } else {
        Err(Error::Incomplete(format!(
            "found only {} independent roots of a degree {} polynomial in the candidate domain",
            zs.rank(),
            poly.deg()
        )))
    }
}

/// A right root chosen deterministically: first in enumeration order on
/// finite fields, smallest on `Q`, by class order on the quaternions, and
/// first in the candidate list otherwise.
pub fn first_root(f: &SkewPoly, extra: Option<&[Elem]>) -> Result<Option<Elem>> {
    let f = require_nonzero(f)?;
    let ctx = f.context();
    Ok(match ctx.backend() {
        Backend::FiniteField(_) => right_roots(&f, None)?.into_iter().next(),
        Backend::Rationals => rational_coeffs(&f).rational_roots().into_iter().min().map(Elem::Rat),
        Backend::Quaternions => classes::root_classes(&f)?.into_iter().next().map(|c| match c.roots {
            classes::ClassRoots::Isolated(y) => y,
            _ => c.rep,
        }),
        Backend::RationalFunctions { .. } => {
            let zs = candidate_zero_set(&f, extra)?;
            zs.basis.into_iter().next()
        }
    })
}

/// A complete splitting `f = (t - c_n) ... (t - c_1)`, listed as `[c_1, ..., c_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Split {
    Linear(Vec<Elem>),
    NotSplit(String),
}

/// Splits a monic `f` by repeatedly peeling off a right root.
pub fn split(f: &SkewPoly) -> Result<Split> {
    split_with(f, None)
}

pub fn split_with(f: &SkewPoly, extra: Option<&[Elem]>) -> Result<Split> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let ctx = f.context();
    let mut cur = f.clone();
    let mut roots = Vec::new();
    while cur.deg() > 0 {
        let Some(a) = first_root(&cur, extra)? else {
            let why = match ctx.backend() {
                Backend::RationalFunctions { .. } => "no right root in the candidate domain",
                _ => "a factor has no right root",
            };
            return Ok(Split::NotSplit(format!("{why}: {cur}")));
        };
        cur = cur.right_divmod(&SkewPoly::linear(ctx, &a))?.0;
        roots.push(a);
    }
    Ok(Split::Linear(roots))
}

/// Formats `[c_1, ..., c_n]` as `(t-c_n)*...*(t-c_1)`.
pub fn format_factors(ctx: &Arc<OreContext>, roots: &[Elem]) -> String {
    if roots.is_empty() {
        return "1".into();
    }
    roots.iter().rev().map(|c| format!("({})", SkewPoly::linear(ctx, c))).collect::<Vec<_>>().join("*")
}

/// Every complete splitting chain of `f` over a finite field.
pub fn all_splittings(f: &SkewPoly) -> Result<Vec<Vec<Elem>>> {
    let ctx = f.context();
    let f = require_nonzero(f)?;
    if f.deg() == 0 {
        return Ok(vec![vec![]]);
    }
    let mut out = Vec::new();
    for a in right_roots(&f, None)? {
        let q = f.right_divmod(&SkewPoly::linear(ctx, &a))?.0;
        for mut rest in all_splittings(&q)? {
            rest.insert(0, a.clone());
            out.push(rest);
        }
    }
    Ok(out)
}

/// Companion matrix of a monic `f`: ones on the superdiagonal and
/// `-b_0, ..., -b_(n-1)` in the last row.
pub fn companion(f: &SkewPoly) -> Result<KMatrix> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let ctx = f.context();
    let n = f.deg();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i + 1 == n {
                        ctx.neg(&f.coeff(j))
                    } else if j == i + 1 {
                        ctx.one()
                    } else {
                        ctx.zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(KMatrix::from_rows(rows))
}

/// The `n x n` matrix whose `(i+1)`-st row is `(N_i(c_1), ..., N_i(c_n))`.
pub fn vandermonde(ctx: &OreContext, cs: &[Elem]) -> KMatrix {
    let n = cs.len();
    let cols: Vec<Vec<Elem>> = cs.iter().map(|c| power_functions(ctx, c, n.saturating_sub(1))).collect();
    KMatrix::from_rows((0..n).map(|i| cols.iter().map(|col| col[i].clone()).collect()).collect())
}

/// Whether `V = V(c_1, ..., c_n)` is invertible and
/// `C(f) V = S(V) diag(c_1, ..., c_n) + D(V)` holds entrywise.
pub fn diagonalization_check(f: &SkewPoly, roots: &[Elem]) -> Result<bool> {
    let ctx = f.context();
    if roots.len() != f.deg() {
        return Err(Error::Precondition("need exactly deg f roots".into()));
    }
    let c = companion(f)?;
    let v = vandermonde(ctx, roots);
    if !v.is_invertible(ctx) {
        return Ok(false);
    }
    let lhs = c.mul(ctx, &v);
    let rhs = v.map(|x| ctx.apply_s(x)).scale_columns(ctx, roots).add(ctx, &v.map(|x| ctx.apply_d(x)));
    Ok(lhs == rhs)
}

/// The ring `K[t', S^-1, -D S^-1]`, anti-isomorphic to `R` via `t -> t'`,
/// when `K` is commutative and it can be described by a context. Left roots
/// of `f` are the right roots of its image there.
pub fn opposite(ctx: &OreContext) -> Option<Arc<OreContext>> {
    if !ctx.backend().is_commutative() {
        return None;
    }
    let endo = match (ctx.endomorphism(), ctx.backend()) {
        (Endomorphism::Identity, _) => Endomorphism::Identity,
        (Endomorphism::Frobenius(e), Backend::FiniteField(f)) => Endomorphism::Frobenius(f.degree() - e % f.degree()),
        _ => return None,
    };
    // on a commutative ring -D(S^-1 x) = d x - S^-1(x) d for D inner by d
    let deriv = match ctx.derivation() {
        Derivation::Zero => Derivation::Zero,
        Derivation::Inner(d) => Derivation::Inner(d.clone()),
        Derivation::Formal => return None,
    };
    OreContext::new(ctx.backend().clone(), endo, deriv).ok().map(Arc::new)
}

/// Image of `sum b_i t^i` under the anti-isomorphism: `sum t'^i b_i`.
pub fn anti(f: &SkewPoly, target: &Arc<OreContext>) -> SkewPoly {
    let t = SkewPoly::t(target);
    let mut acc = SkewPoly::zero(target);
    let mut power = SkewPoly::one(target);
    for b in f.coeffs() {
        acc = &acc + &(&power * &SkewPoly::constant(target, b.clone()));
        power = &power * &t;
    }
    acc
}

/// Degree of the monic generator of `∩ (t - b_i) R`, when computable.
pub fn left_rank(ctx: &Arc<OreContext>, bs: &[Elem]) -> Option<usize> {
    let mut distinct = bs.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() <= 2 {
        return Some(distinct.len());
    }
    let op = opposite(ctx)?;
    Some(minimal_polynomial(&op, &distinct).rank())
}

/// Left roots over all of a finite `K`, via the opposite ring.
pub fn left_roots_via_opposite(f: &SkewPoly) -> Option<Vec<Elem>> {
    let op = opposite(f.context())?;
    right_roots(&anti(f, &op), None).ok()
}

/// The dual left-root representation of `f = f_B` for a P-independent `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualRepresentation {
    pub poly: SkewPoly,
    pub basis: Vec<Elem>,
    /// `b_i = a_i^(h_i(a_i))` with `h_i` the minimal polynomial of the others.
    pub duals: Vec<Elem>,
    /// Every `t - b_i` left-divides `f`.
    pub left_divides: bool,
    /// No monic polynomial of lower degree is left-divisible by all `t - b_i`;
    /// `None` when this cannot be decided.
    pub left_independent: Option<bool>,
}

impl DualRepresentation {
    pub fn verified(&self) -> bool {
        self.left_divides && self.left_independent != Some(false)
    }
}

pub fn dual_representation(ctx: &Arc<OreContext>, basis: &[Elem]) -> Result<DualRepresentation> {
    if !crate::algset::is_p_independent(ctx, basis) {
        return Err(Error::NotPIndependent);
    }
    let f = minimal_polynomial(ctx, basis).poly;
    let mut duals = Vec::new();
    for (i, a) in basis.iter().enumerate() {
        let others: Vec<Elem> = basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, x)| x.clone()).collect();
        let h = minimal_polynomial(ctx, &others).poly;
        duals.push(ctx.conjugate(a, &evaluate(&h, a))?);
    }
    let mut left_divides = true;
    for b in &duals {
        left_divides &= crate::eval::is_left_root(&f, b)?;
    }
    let left_independent = left_rank(ctx, &duals).map(|r| r == basis.len());
    Ok(DualRepresentation { poly: f, basis: basis.to_vec(), duals, left_divides, left_independent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn hq() -> Arc<OreContext> {
        Arc::new(OreContext::classical(Backend::Quaternions))
    }

    fn f4_frob() -> Arc<OreContext> {
        Arc::new(OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Zero).unwrap())
    }

    fn qu() -> Arc<OreContext> {
        Arc::new(
            OreContext::new(Backend::RationalFunctions { var: 'u' }, Endomorphism::Identity, Derivation::Formal)
                .unwrap(),
        )
    }

    fn p(ctx: &Arc<OreContext>, s: &str) -> SkewPoly {
        parse_polynomial(s, ctx).unwrap()
    }

    fn e(ctx: &OreContext, s: &str) -> Elem {
        ctx.elem(s).unwrap()
    }

    #[test]
    fn quaternion_certificates() {
        let ctx = hq();
        let cert = is_wedderburn(&p(&ctx, "t^2+[1]")).unwrap();
        assert!(cert.is_w() && cert.verify());
        assert_eq!(cert.roots(), [e(&ctx, "i"), e(&ctx, "-i")]);
        let g = &p(&ctx, "t-[j]") * &p(&ctx, "t-[i]");
        let cert = is_wedderburn(&g).unwrap();
        assert!(cert.verify());
        match cert {
            WCertificate::NotW { v_poly, .. } => assert_eq!(v_poly, p(&ctx, "t-[i]")),
            _ => panic!("expected NOT_W"),
        }
    }

    #[test]
    fn central_polynomial_of_a_quaternion() {
        let ctx = hq();
        let a = e(&ctx, "1+2i-j+3k");
        // t^2 - 2t + 15
        let f = p(&ctx, "t^2-[2]*t+[15]");
        assert!(ctx.is_zero(&f.eval(&a)));
        assert!(is_wedderburn(&f).unwrap().is_w());
    }

    #[test]
    fn repeated_factor_in_differential_model() {
        let ctx = qu();
        let u = e(&ctx, "u");
        let f = &SkewPoly::linear(&ctx, &u) * &SkewPoly::linear(&ctx, &u);
        let cert = is_wedderburn(&f).unwrap();
        assert!(cert.is_w() && cert.verify());
        assert!(cert.roots().contains(&e(&ctx, "u+1/u")));
    }

    #[test]
    fn splittings() {
        let ctx = hq();
        let s = split(&p(&ctx, "t^2+[1]")).unwrap();
        assert_eq!(s, Split::Linear(vec![e(&ctx, "i"), e(&ctx, "-i")]));
        assert_eq!(format_factors(&ctx, &[e(&ctx, "i"), e(&ctx, "-i")]), "(t+[i])*(t-[i])");
        let q = Arc::new(OreContext::classical(Backend::Rationals));
        assert!(matches!(split(&p(&q, "t^2+[1]")).unwrap(), Split::NotSplit(_)));
        let f4 = f4_frob();
        assert_eq!(split(&p(&f4, "t^2+[1]")).unwrap(), Split::Linear(vec![f4.one(), f4.one()]));
    }

    #[test]
    fn matrices() {
        let q = OreContext::classical(Backend::Rationals);
        let qa = Arc::new(q.clone());
        let c = companion(&p(&qa, "t^2+[1]")).unwrap();
        assert_eq!(c.rows(), vec![vec![e(&q, "0"), e(&q, "1")], vec![e(&q, "-1"), e(&q, "0")]]);
        let ctx = hq();
        let v = vandermonde(&ctx, &[e(&ctx, "i"), e(&ctx, "j")]);
        assert_eq!(v.rows(), vec![vec![e(&ctx, "1"), e(&ctx, "1")], vec![e(&ctx, "i"), e(&ctx, "j")]]);
        assert_eq!(vandermonde(&ctx, &[e(&ctx, "k")]).rows(), vec![vec![e(&ctx, "1")]]);
    }

    #[test]
    fn diagonalization() {
        let ctx = hq();
        let (i, j) = (e(&ctx, "i"), e(&ctx, "j"));
        assert!(diagonalization_check(&p(&ctx, "t^2+[1]"), &[i.clone(), j.clone()]).unwrap());
        let g = &p(&ctx, "t-[j]") * &p(&ctx, "t-[i]");
        assert!(!diagonalization_check(&g, &[i.clone(), i]).unwrap());
        let f4 = f4_frob();
        assert!(diagonalization_check(&p(&f4, "t^2+[1]"), &[f4.one(), e(&f4, "w")]).unwrap());
    }

    #[test]
    fn duals() {
        let ctx = hq();
        let d = dual_representation(&ctx, &[e(&ctx, "i"), e(&ctx, "j")]).unwrap();
        assert_eq!(d.duals, vec![e(&ctx, "-j"), e(&ctx, "-i")]);
        assert!(d.verified());
        let a = e(&ctx, "1+k");
        assert_eq!(dual_representation(&ctx, &[a.clone()]).unwrap().duals, vec![a]);
        assert_eq!(dual_representation(&ctx, &[e(&ctx, "i"), e(&ctx, "i")]), Err(Error::NotPIndependent));
        let f4 = f4_frob();
        let d = dual_representation(&f4, &[f4.one(), e(&f4, "w")]).unwrap();
        assert_eq!(d.duals[1], f4.one());
        assert!(d.verified());
    }

    #[test]
    fn opposite_ring_left_roots() {
        let ctx = Arc::new(OreContext::new(Backend::f8(), Endomorphism::Frobenius(1), Derivation::Inner(Elem::Gf(2))).unwrap());
        let all = ctx.enumerate().unwrap();
        for a in &all {
            for b in &all {
                let f = &SkewPoly::linear(&ctx, a) * &SkewPoly::linear(&ctx, b);
                let direct = crate::eval::left_roots(&f, None).unwrap();
                assert_eq!(left_roots_via_opposite(&f).unwrap(), direct);
            }
        }
    }
}
