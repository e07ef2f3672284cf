//! Right roots over the rational quaternions, organised by conjugacy class.
//!
//! With `S = id` and `D` inner by `d`, the element `s = t - d` is central, so
//! a right root `a` of `f` corresponds to the classical root `a - d` of `f`
//! rewritten in `s`. Classically every root lies in a class with a rational
//! minimal polynomial `q` of degree one or two, and `q` divides the norm
//! polynomial `f f̄`. Reducing `f` modulo `q` leaves `A s + B`: the whole class
//! consists of roots when `A = B = 0`, and otherwise the only candidate is
//! `-A^-1 B`.

use crate::error::{Error, Result};
use crate::qpoly::{cmp_deg_lex, divisors, QPoly};
use crate::ring::{Backend, Derivation, Elem, Endomorphism, OreContext, Quaternion};
use crate::skewpoly::SkewPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::Arc;

/// Which part of a class consists of roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassRoots {
    /// A central class `{r}` with `r` a root.
    Central,
    /// Every element of the class is a root.
    Whole,
    /// Exactly one root in the class.
    Isolated(Elem),
}

/// A conjugacy class of `K` that meets `V(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootClass {
    /// Monic rational minimal polynomial of the class in the central variable `t - d`.
    pub minpoly: QPoly,
    /// Canonical representative of the class.
    pub rep: Elem,
    pub roots: ClassRoots,
}

/// The inner element `d` when the context is `(HQ, id, 0)` or `(HQ, id, inner d)`.
pub fn quaternion_shift(ctx: &OreContext) -> Option<Quaternion> {
    if !matches!(ctx.backend(), Backend::Quaternions) || *ctx.endomorphism() != Endomorphism::Identity {
        return None;
    }
    match ctx.derivation() {
        Derivation::Zero => Some(Quaternion::zero()),
        Derivation::Inner(Elem::Quat(d)) => Some(d.clone()),
        _ => None,
    }
}

fn quat(e: &Elem) -> &Quaternion {
    match e {
        Elem::Quat(q) => q,
        _ => panic!("expected a quaternion"),
    }
}

fn classical_hq() -> Arc<OreContext> {
    Arc::new(OreContext::classical(Backend::Quaternions))
}

/// Coefficients of `f(s + d)` as a classical polynomial in the central `s`.
pub fn shifted_coefficients(f: &SkewPoly, d: &Quaternion) -> Vec<Quaternion> {
    let n = f.coeffs().len();
    let b: Vec<&Quaternion> = f.coeffs().iter().map(quat).collect();
    // binom[i][j] * d^(i-j)
    let mut dpow = vec![Quaternion::one()];
    for i in 1..n {
        dpow.push(dpow[i - 1].mul(d));
    }
    let mut out = vec![Quaternion::zero(); n];
    for (i, bi) in b.iter().enumerate() {
        let mut binom = BigInt::one();
        for j in (0..=i).rev() {
            // binom = C(i, j)
            let term = bi.mul(&dpow[i - j]).scale(&BigRational::from_integer(binom.clone()));
            out[j] = out[j].add(&term);
            if j > 0 {
                binom = binom * BigInt::from(j) / BigInt::from(i - j + 1);
            }
        }
    }
    out
}

/// `f f̄` for a classical quaternion polynomial; its coefficients are rational.
pub fn norm_polynomial(c: &[Quaternion]) -> QPoly {
    if c.is_empty() {
        return QPoly::zero();
    }
    let mut out = vec![BigRational::zero(); 2 * c.len() - 1];
    for (i, a) in c.iter().enumerate() {
        for (j, b) in c.iter().enumerate() {
            let p = a.mul(&b.conj());
            debug_assert!(i != j || p.is_scalar());
            out[i + j] += p.re;
        }
    }
    QPoly::new(out)
}

/// Monic irreducible quadratic factors over `Q` of a squarefree polynomial
/// with no real roots in those factors. Candidates come from floating-point
/// complex roots and are kept only after exact division.
pub fn complex_quadratic_factors(p: &QPoly) -> Vec<QPoly> {
    let Some(n) = p.degree() else { return vec![] };
    if n < 2 {
        return vec![];
    }
    let ints = p.primitive_integer();
    let lead = ints.last().unwrap().abs();
    let lead_divs: Vec<u64> = match lead.to_u64() {
        Some(l) if l <= 1_000_000 => divisors(l),
        _ => vec![1],
    };
    let prim = QPoly::new(ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    let mut found: Vec<QPoly> = Vec::new();
    for z in p.complex_roots() {
        if z.im <= 1e-9 {
            continue;
        }
        let (s, nn) = (2.0 * z.re, z.norm_sqr());
        for &a in &lead_divs {
            let af = a as f64;
            let (b, c) = ((-af * s).round(), (af * nn).round());
            if !b.is_finite() || !c.is_finite() || b.abs() > 1e15 || c.abs() > 1e15 {
                continue;
            }
            let (b, c) = (BigInt::from(b as i64), BigInt::from(c as i64));
            if &b * &b - BigInt::from(4 * a) * &c >= BigInt::zero() {
                continue;
            }
            let q = QPoly::new(vec![
                BigRational::from_integer(c),
                BigRational::from_integer(b),
                BigRational::from_integer(a.into()),
            ]);
            if prim.exact_div(&q).is_some() {
                let m = q.make_monic();
                if !found.contains(&m) {
                    found.push(m);
                }
                break;
            }
        }
    }
    found
}

fn three_square_obstruction(mut n: BigInt) -> bool {
    let four = BigInt::from(4);
    while !n.is_zero() && (&n % &four).is_zero() {
        n /= &four;
    }
    (&n % BigInt::from(8)) == BigInt::from(7)
}

fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn two_squares(n: &BigInt, budget: &mut u64) -> Option<(BigInt, BigInt)> {
    if let Some(r) = isqrt_exact(n) {
        return Some((r, BigInt::zero()));
    }
    let mut y = BigInt::one();
    while &(&y * &y * 2) <= n {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        if let Some(x) = isqrt_exact(&(n - &y * &y)) {
            return Some((x, y));
        }
        y += 1;
    }
    None
}

/// A pure quaternion `v` with `|v|^2 = m`, preferring the fewest nonzero
/// components, or `None` when `m` is not a sum of three rational squares
/// (or the bounded search gives up).
pub fn pure_of_norm(m: &BigRational) -> Option<Quaternion> {
    if !m.is_positive() {
        return None;
    }
    // m = P/Q, and P Q = x^2 + y^2 + z^2 gives v = (x, y, z)/Q
    let (p, q) = (m.numer().clone(), m.denom().clone());
    let n = &p * &q;
    if three_square_obstruction(n.clone()) {
        return None;
    }
    let mut budget = 2_000_000u64;
    let (x, y, z) = if let Some((x, y)) = two_squares(&n, &mut budget) {
        (x, y, BigInt::zero())
    } else {
        let mut z = BigInt::one();
        loop {
            if &z * &z > n || budget == 0 {
                return None;
            }
            if let Some((x, y)) = two_squares(&(&n - &z * &z), &mut budget) {
                break (x, y, z);
            }
            z += 1;
        }
    };
    let r = |v: BigInt| BigRational::new(v, q.clone());
    Some(Quaternion::new(BigRational::zero(), r(x), r(y), r(z)))
}

/// The quaternions whose classical minimal polynomial is the monic `q`
/// (degree 1 or 2) have this canonical representative, if any exist.
pub fn class_representative(q: &QPoly) -> Option<Quaternion> {
    match q.degree()? {
        1 => Some(Quaternion::scalar(-q.coeff(0))),
        2 => {
            let alpha = -q.coeff(1) / BigRational::from_integer(2.into());
            let m = q.coeff(0) - &alpha * &alpha;
            pure_of_norm(&m).map(|v| Quaternion::scalar(alpha).add(&v))
        }
        _ => None,
    }
}

/// `q(y) = 0` for a rational polynomial and a quaternion.
fn qpoly_at(q: &QPoly, y: &Quaternion) -> Quaternion {
    q.coeffs()
        .iter()
        .rev()
        .fold(Quaternion::zero(), |acc, c| acc.mul(y).add(&Quaternion::scalar(c.clone())))
}

/// Rational minimal polynomial of a quaternion.
pub fn quaternion_minpoly(a: &Quaternion) -> QPoly {
    if a.is_scalar() {
        QPoly::new(vec![-a.re.clone(), BigRational::one()])
    } else {
        QPoly::new(vec![a.norm(), -a.trace(), BigRational::one()])
    }
}

/// The conjugacy classes meeting `V(f)`, sorted by minimal polynomial
/// (degree first, then coefficients).
pub fn root_classes(f: &SkewPoly) -> Result<Vec<RootClass>> {
    let ctx = f.context();
    let d = quaternion_shift(ctx).ok_or_else(|| Error::CapabilityMissing("quaternion class search".into()))?;
    if f.is_zero() {
        return Err(Error::Precondition("the zero polynomial".into()));
    }
    let c = shifted_coefficients(f, &d);
    let hq = classical_hq();
    let g = SkewPoly::new(&hq, c.iter().cloned().map(Elem::Quat).collect());
    let norm = norm_polynomial(&c).squarefree_part();
    let shift = |x: &Quaternion| Elem::Quat(x.add(&d));
    let mut out = Vec::new();
    for r in norm.rational_roots() {
        let rq = Elem::Quat(Quaternion::scalar(r.clone()));
        if hq.is_zero(&g.eval(&rq)) {
            out.push(RootClass {
                minpoly: QPoly::new(vec![-r.clone(), BigRational::one()]),
                rep: shift(&Quaternion::scalar(r)),
                roots: ClassRoots::Central,
            });
        }
    }
    for q in complex_quadratic_factors(&norm) {
        let qs = SkewPoly::new(&hq, q.coeffs().iter().map(|x| Elem::Quat(Quaternion::scalar(x.clone()))).collect());
        let rem = g.right_rem(&qs)?;
        let (b, a) = (quat(&rem.coeff(0)).clone(), quat(&rem.coeff(1)).clone());
        let (roots, fallback) = if a.is_zero() && b.is_zero() {
            (ClassRoots::Whole, None)
        } else if a.is_zero() {
            continue;
        } else {
            let y = a.inv().unwrap().mul(&b).neg();
            if !qpoly_at(&q, &y).is_zero() {
                continue;
            }
            (ClassRoots::Isolated(shift(&y)), Some(y))
        };
        let rep = match (class_representative(&q), fallback) {
            (Some(r), _) => r,
            (None, Some(y)) => y,
            (None, None) => {
                if three_square_obstruction(q.coeff(0).numer() * q.coeff(0).denom()) {
                    continue;
                }
                return Err(Error::Incomplete("no representative found for a quaternion class".into()));
            }
        };
        out.push(RootClass { minpoly: q, rep: shift(&rep), roots });
    }
    out.sort_by(|x, y| cmp_deg_lex(&x.minpoly, &y.minpoly));
    Ok(out)
}

/// Whether `x` lies in the class of `y` under `(id, inner d)`.
pub fn same_class(ctx: &OreContext, x: &Elem, y: &Elem) -> Option<bool> {
    let d = quaternion_shift(ctx)?;
    let (x, y) = (quat(x).sub(&d), quat(y).sub(&d));
    Some(quaternion_minpoly(&x) == quaternion_minpoly(&y))
}

/// The rational minimal polynomial `t'^2 - tr t' + N` (in `t' = t - d`) of the
/// class of `a`, as a polynomial over the context.
pub fn class_polynomial(ctx: &Arc<OreContext>, a: &Elem) -> Option<SkewPoly> {
    let d = quaternion_shift(ctx)?;
    let q = quaternion_minpoly(&quat(a).sub(&d));
    // q(t - d): expand with t - d central
    let s = SkewPoly::linear(ctx, &Elem::Quat(d));
    let mut acc = SkewPoly::zero(ctx);
    let mut power = SkewPoly::one(ctx);
    for c in q.coeffs() {
        acc = &acc + &power.left_scale(&Elem::Quat(Quaternion::scalar(c.clone())));
        power = &power * &s;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn hq() -> Arc<OreContext> {
        classical_hq()
    }

    #[test]
    fn classes_of_t2_plus_1() {
        let ctx = hq();
        let f = parse_polynomial("t^2+[1]", &ctx).unwrap();
        let cl = root_classes(&f).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].roots, ClassRoots::Whole);
        assert_eq!(cl[0].rep, ctx.elem("i").unwrap());
    }

    #[test]
    fn isolated_root() {
        let ctx = hq();
        let f = &parse_polynomial("t-[j]", &ctx).unwrap() * &parse_polynomial("t-[i]", &ctx).unwrap();
        let cl = root_classes(&f).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].roots, ClassRoots::Isolated(ctx.elem("i").unwrap()));
    }

    #[test]
    fn mixed_classes() {
        let ctx = hq();
        // (t - 2)(t - (1+j)) has a central root 2 and an isolated root in the class of 1+j
        let f = &parse_polynomial("t-[2]", &ctx).unwrap() * &parse_polynomial("t-[1+j]", &ctx).unwrap();
        let cl = root_classes(&f).unwrap();
        assert_eq!(cl.len(), 2);
        assert_eq!(cl[0].roots, ClassRoots::Central);
        assert_eq!(cl[1].roots, ClassRoots::Isolated(ctx.elem("1+j").unwrap()));
        assert_eq!(cl[1].rep, ctx.elem("1+i").unwrap());
    }

    #[test]
    fn representatives() {
        // t^2 + 3: |v|^2 = 3 needs three squares; t^2 + 7 has no rational point
        let q3 = QPoly::from_ints(&[3, 0, 1]);
        let r = class_representative(&q3).unwrap();
        assert_eq!(r.norm(), BigRational::from_integer(3.into()));
        assert!(class_representative(&QPoly::from_ints(&[7, 0, 1])).is_none());
        let q = QPoly::new(vec![BigRational::new(5.into(), 4.into()), BigRational::one(), BigRational::one()]);
        let r = class_representative(&q).unwrap();
        assert!(qpoly_at(&q, &r).is_zero());
    }

    #[test]
    fn inner_shift_moves_roots() {
        let j = Elem::Quat(Quaternion::from_ints(0, 0, 1, 0));
        let ctx = Arc::new(OreContext::new(Backend::Quaternions, Endomorphism::Identity, Derivation::Inner(j)).unwrap());
        let a = ctx.elem("1+i").unwrap();
        let f = SkewPoly::linear(&ctx, &a);
        let cl = root_classes(&f).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].roots, ClassRoots::Isolated(a));
    }
}
