//! Evaluation at scalars, `(S, D)`-conjugation, the transform
//! `Phi_h(x) = x^(h(x))`, and right and left root sets.

use crate::error::{Error, Result};
use crate::ring::{Elem, OreContext};
use crate::skewpoly::SkewPoly;
use std::sync::Arc;

/// `N_0(a), ..., N_n(a)` with `N_i(a) = S(N_(i-1)(a)) a + D(N_(i-1)(a))`.
pub fn power_functions(ctx: &OreContext, a: &Elem, n: usize) -> Vec<Elem> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(ctx.one());
    for i in 1..=n {
        let prev = &out[i - 1];
        out.push(ctx.add(&ctx.mul(&ctx.apply_s(prev), a), &ctx.apply_d(prev)));
    }
    out
}

/// `f(a) = sum b_i N_i(a)`, the remainder of `f` on right division by `t - a`.
pub fn evaluate(f: &SkewPoly, a: &Elem) -> Elem {
    let ctx = f.context();
    if f.is_zero() {
        return ctx.zero();
    }
    let n = power_functions(ctx, a, f.deg());
    f.coeffs().iter().zip(&n).fold(ctx.zero(), |acc, (b, ni)| ctx.add(&acc, &ctx.mul(b, ni)))
}

/// `a^c = S(c) a c^-1 + D(c) c^-1`.
pub fn conjugate(ctx: &OreContext, a: &Elem, c: &Elem) -> Result<Elem> {
    ctx.conjugate(a, c)
}

/// `Phi_h(x) = x^(h(x))`, undefined on the roots of `h`.
pub fn phi_transform(h: &SkewPoly, x: &Elem) -> Result<Elem> {
    let hx = evaluate(h, x);
    if h.context().is_zero(&hx) {
        return Err(Error::UndefinedAtRoot);
    }
    conjugate(h.context(), x, &hx)
}

fn search_domain(ctx: &OreContext, domain: Option<&[Elem]>) -> Result<Vec<Elem>> {
    match domain {
        Some(d) => Ok(dedup(d.to_vec())),
        None => ctx.enumerate().map_err(|_| Error::DomainRequired),
    }
}

fn dedup(mut v: Vec<Elem>) -> Vec<Elem> {
    let mut seen = std::collections::HashSet::new();
    v.retain(|x| seen.insert(x.clone()));
    v
}

/// Right roots of `f` in the domain, or in all of `K` when it is finite.
/// The result keeps the domain order.
pub fn right_roots(f: &SkewPoly, domain: Option<&[Elem]>) -> Result<Vec<Elem>> {
    if f.is_zero() {
        return Err(Error::Precondition("the zero polynomial vanishes everywhere".into()));
    }
    let ctx = f.context();
    Ok(search_domain(ctx, domain)?.into_iter().filter(|a| ctx.is_zero(&evaluate(f, a))).collect())
}

/// Whether `t - b` left-divides `f`.
pub fn is_left_root(f: &SkewPoly, b: &Elem) -> Result<bool> {
    let ctx = f.context();
    Ok(f.left_divisible_by(&SkewPoly::linear(ctx, b))?.unwrap_or(false))
}

/// The `b` in the domain with `f` in `(t - b) R`.
pub fn left_roots(f: &SkewPoly, domain: Option<&[Elem]>) -> Result<Vec<Elem>> {
    if f.is_zero() {
        return Err(Error::Precondition("the zero polynomial is divisible by everything".into()));
    }
    let ctx = f.context();
    let mut out = Vec::new();
    for b in search_domain(ctx, domain)? {
        if is_left_root(f, &b)? {
            out.push(b);
        }
    }
    Ok(out)
}

/// How a set of left roots sits relative to the cosets of `S(K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CosetReport {
    /// All pairwise differences lie in `S(K)`.
    SingleCoset,
    /// No two distinct roots differ by an element of `S(K)`.
    PairwiseDistinctCosets,
    /// Neither alternative; the witness pair lies in one coset while another
    /// pair does not.
    Mixed { same: (Elem, Elem), different: (Elem, Elem) },
}

/// Classifies the cosets of `S(K)` met by `sample`, which must consist of
/// left roots of `f`. A monic `f` must give [`CosetReport::SingleCoset`].
pub fn coset_check(f: &SkewPoly, sample: &[Elem]) -> Result<CosetReport> {
    let ctx = f.context();
    for b in sample {
        if !is_left_root(f, b)? {
            return Err(Error::Precondition(format!("{} is not a left root", ctx.fmt(b))));
        }
    }
    let sample = dedup(sample.to_vec());
    let mut same = None;
    let mut different = None;
    for (i, a) in sample.iter().enumerate() {
        for b in &sample[i + 1..] {
            if ctx.in_s_image(&ctx.sub(a, b))? {
                same.get_or_insert_with(|| (a.clone(), b.clone()));
            } else {
                different.get_or_insert_with(|| (a.clone(), b.clone()));
            }
        }
    }
    Ok(match (same, different) {
        (_, None) => CosetReport::SingleCoset,
        (None, Some(_)) => CosetReport::PairwiseDistinctCosets,
        (Some(same), Some(different)) => CosetReport::Mixed { same, different },
    })
}

/// `t - a` as a polynomial over `ctx`.
pub fn linear(ctx: &Arc<OreContext>, a: &Elem) -> SkewPoly {
    SkewPoly::linear(ctx, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::{Backend, Derivation, Endomorphism};

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

    fn units(ctx: &OreContext) -> Vec<Elem> {
        ["i", "-i", "j", "-j", "k", "-k"].iter().map(|s| ctx.elem(s).unwrap()).collect()
    }

    #[test]
    fn power_function_values() {
        let ctx = f4_frob();
        let w = ctx.elem("w").unwrap();
        assert_eq!(power_functions(&ctx, &w, 2)[2], ctx.one());
        let qu = qu();
        let u = qu.elem("u").unwrap();
        assert_eq!(power_functions(&qu, &u, 2)[2], qu.elem("u^2+1").unwrap());
        let hq = hq();
        let a = hq.elem("1+2i-j").unwrap();
        let n = power_functions(&hq, &a, 3);
        assert_eq!(n[3], hq.mul(&hq.mul(&a, &a), &a));
    }

    #[test]
    fn evaluation_examples() {
        let ctx = hq();
        let i = ctx.elem("i").unwrap();
        let j = ctx.elem("j").unwrap();
        assert!(ctx.is_zero(&evaluate(&parse_polynomial("t^2+[1]", &ctx).unwrap(), &i)));
        let g = &SkewPoly::linear(&ctx, &j) * &SkewPoly::linear(&ctx, &i);
        assert_eq!(parse_polynomial("(t-[j])(t-[i])", &ctx).unwrap(), g);
        assert_eq!(evaluate(&g, &j), ctx.elem("-2k").unwrap());

        let f4 = f4_frob();
        let w = f4.elem("w").unwrap();
        assert_eq!(evaluate(&parse_polynomial("t^2+[1]", &f4).unwrap(), &w), f4.zero());
    }

    #[test]
    fn conjugation_examples() {
        let qu = qu();
        let u = qu.elem("u").unwrap();
        assert_eq!(conjugate(&qu, &qu.zero(), &u).unwrap(), qu.elem("1/u").unwrap());
        assert_eq!(conjugate(&qu, &u, &qu.zero()), Err(Error::ZeroConjugator));
        let hq = hq();
        let (i, j) = (hq.elem("i").unwrap(), hq.elem("j").unwrap());
        assert_eq!(conjugate(&hq, &i, &j).unwrap(), hq.elem("-i").unwrap());
    }

    #[test]
    fn phi_examples() {
        let hq = hq();
        let h = parse_polynomial("t-[i]", &hq).unwrap();
        assert_eq!(phi_transform(&h, &hq.elem("j").unwrap()).unwrap(), hq.elem("-i").unwrap());
        assert_eq!(phi_transform(&h, &hq.elem("i").unwrap()), Err(Error::UndefinedAtRoot));
        let f4 = f4_frob();
        let t = SkewPoly::t(&f4);
        assert_eq!(phi_transform(&t, &f4.elem("w").unwrap()).unwrap(), f4.elem("w^2").unwrap());
    }

    #[test]
    fn root_sets() {
        let hq = hq();
        let (i, j) = (hq.elem("i").unwrap(), hq.elem("j").unwrap());
        let g = &SkewPoly::linear(&hq, &j) * &SkewPoly::linear(&hq, &i);
        assert_eq!(right_roots(&g, Some(&units(&hq))).unwrap(), vec![i]);
        assert_eq!(right_roots(&g, None), Err(Error::DomainRequired));
        let f = parse_polynomial("t^2+[1]", &hq).unwrap();
        assert_eq!(left_roots(&f, Some(&units(&hq))).unwrap().len(), 6);

        let f4 = f4_frob();
        let f = parse_polynomial("t^2+[1]", &f4).unwrap();
        let roots: Vec<String> = right_roots(&f, None).unwrap().iter().map(|a| f4.fmt(a)).collect();
        assert_eq!(roots, ["1", "w", "w+1"]);
    }

    #[test]
    fn left_roots_under_squaring() {
        let qx = Arc::new(
            OreContext::new(Backend::RationalFunctions { var: 'x' }, Endomorphism::SquareVariable, Derivation::Zero)
                .unwrap(),
        );
        let x = qx.elem("x").unwrap();
        let f = &SkewPoly::linear(&qx, &x) * &SkewPoly::t(&qx);
        assert_eq!(left_roots(&f, Some(&[x.clone(), qx.zero()])).unwrap(), vec![x.clone()]);
        assert_eq!(coset_check(&f, &[x]).unwrap(), CosetReport::SingleCoset);
    }
}
