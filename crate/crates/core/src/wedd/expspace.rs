//! `(S, D)`-centralizers and exponential spaces, computed as kernels of
//! base-linear maps on `K`.

use crate::error::{Error, Result};
use crate::linalg::{linear_map_matrix, BaseMatrix};
use crate::ring::{Elem, OreContext};
use crate::skewpoly::SkewPoly;
use serde::Serialize;

/// `E(f, a)` as a right vector space over the centralizer `C_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialSpace {
    pub rep: Elem,
    /// A basis over the base field.
    pub base_basis: Vec<Elem>,
    /// A basis over `C_a`.
    pub basis: Vec<Elem>,
    pub centralizer: Vec<Elem>,
}

impl ExponentialSpace {
    /// Dimension over `C_a`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDimension {
    pub rep: String,
    pub dim: usize,
}

fn kernel_elems(ctx: &OreContext, m: &BaseMatrix) -> Vec<Elem> {
    m.kernel().iter().map(|v| ctx.backend().from_coordinates(v)).collect()
}

/// A base-field basis of `C_a = {c : S(c) a + D(c) = a c}`.
pub fn centralizer(ctx: &OreContext, a: &Elem) -> Result<Vec<Elem>> {
    let m = linear_map_matrix(ctx, |c| ctx.sub(&ctx.add(&ctx.mul(&ctx.apply_s(c), a), &ctx.apply_d(c)), &ctx.mul(a, c)))?;
    Ok(kernel_elems(ctx, &m))
}

/// `Λ_f(x) = sum b_i Λ_i(x)` with `Λ_0(x) = x` and
/// `Λ_(i+1)(x) = S(Λ_i(x)) a + D(Λ_i(x))`, so `Λ_f(x) = f(a^x) x`.
pub fn lambda(f: &SkewPoly, a: &Elem, x: &Elem) -> Elem {
    let ctx = f.context();
    let mut acc = ctx.zero();
    let mut li = x.clone();
    for (i, b) in f.coeffs().iter().enumerate() {
        if i > 0 {
            li = ctx.add(&ctx.mul(&ctx.apply_s(&li), a), &ctx.apply_d(&li));
        }
        acc = ctx.add(&acc, &ctx.mul(b, &li));
    }
    acc
}

/// A base-field basis of `E(f, a) = {0} ∪ {x != 0 : f(a^x) = 0}`.
pub fn exponential_base_basis(f: &SkewPoly, a: &Elem) -> Result<Vec<Elem>> {
    let ctx = f.context();
    let m = linear_map_matrix(ctx, |x| lambda(f, a, x))?;
    Ok(kernel_elems(ctx, &m))
}

/// Whether `x` lies in the base-field span of `span`.
pub fn in_base_span(ctx: &OreContext, span: &[Elem], x: &Elem) -> Result<bool> {
    let b = ctx.backend();
    let field = b.base_field().ok_or_else(|| Error::CapabilityMissing("no base field".into()))?;
    let n = b.base_dimension().unwrap();
    let cols: Vec<Vec<Elem>> = span.iter().map(|v| b.coordinates(v).unwrap()).collect();
    let r0 = BaseMatrix::from_columns(field, n, &cols).rank();
    let mut cols = cols;
    cols.push(b.coordinates(x).unwrap());
    Ok(BaseMatrix::from_columns(field, n, &cols).rank() == r0)
}

/// `E(f, a)` with a basis over `C_a`, obtained greedily from a base basis.
pub fn exponential_space(f: &SkewPoly, a: &Elem) -> Result<ExponentialSpace> {
    let ctx = f.context();
    let base_basis = exponential_base_basis(f, a)?;
    let cent = centralizer(ctx, a)?;
    let mut span: Vec<Elem> = Vec::new();
    let mut basis = Vec::new();
    for x in &base_basis {
        if in_base_span(ctx, &span, x)? {
            continue;
        }
        basis.push(x.clone());
        span.extend(cent.iter().map(|c| ctx.mul(x, c)));
    }
    debug_assert_eq!(base_basis.len(), basis.len() * cent.len());
    Ok(ExponentialSpace { rep: a.clone(), base_basis, basis, centralizer: cent })
}

/// The `(S, D)`-conjugacy classes of a finite `K`, each led by its first
/// element in enumeration order.
pub fn finite_classes(ctx: &OreContext) -> Result<Vec<Vec<Elem>>> {
    let all = ctx.enumerate()?;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for a in &all {
        if seen.contains(a) {
            continue;
        }
        let mut class: Vec<Elem> = all
            .iter()
            .filter(|c| !ctx.is_zero(c))
            .map(|c| ctx.conjugate(a, c).unwrap())
            .collect();
        class.sort();
        class.dedup();
        for x in &class {
            seen.insert(x.clone());
        }
        // the leader is the class member that comes first in enumeration order
        let leader = all.iter().find(|x| class.contains(x)).unwrap().clone();
        class.retain(|x| *x != leader);
        class.insert(0, leader);
        out.push(class);
    }
    Ok(out)
}

/// `sum_j dim_(C_j) E(f, a_j)` over class representatives `reps`.
pub fn dimension_sum(f: &SkewPoly, reps: &[Elem]) -> Result<(usize, Vec<ClassDimension>)> {
    let ctx = f.context();
    let mut total = 0;
    let mut per = Vec::new();
    for a in reps {
        let e = exponential_space(f, a)?;
        if e.dim() > 0 {
            per.push(ClassDimension { rep: ctx.fmt(a), dim: e.dim() });
        }
        total += e.dim();
    }
    Ok((total, per))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::{Backend, Derivation, Endomorphism};
    use std::sync::Arc;

    fn hq() -> Arc<OreContext> {
        Arc::new(OreContext::classical(Backend::Quaternions))
    }

    #[test]
    fn centralizers() {
        let ctx = hq();
        assert_eq!(centralizer(&ctx, &ctx.elem("i").unwrap()).unwrap().len(), 2);
        assert_eq!(centralizer(&ctx, &ctx.elem("3").unwrap()).unwrap().len(), 4);
        let f4 = OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Zero).unwrap();
        assert_eq!(centralizer(&f4, &f4.zero()).unwrap().len(), 2);
    }

    #[test]
    fn exponential_dimensions() {
        let ctx = hq();
        let i = ctx.elem("i").unwrap();
        let f = parse_polynomial("t^2+[1]", &ctx).unwrap();
        let e = exponential_space(&f, &i).unwrap();
        assert_eq!((e.base_basis.len(), e.dim()), (4, 2));
        let lin = SkewPoly::linear(&ctx, &ctx.elem("1+j").unwrap());
        assert_eq!(exponential_space(&lin, &ctx.elem("1+j").unwrap()).unwrap().dim(), 1);
        let g = &parse_polynomial("t-[j]", &ctx).unwrap() * &parse_polynomial("t-[i]", &ctx).unwrap();
        assert_eq!(exponential_space(&g, &i).unwrap().dim(), 1);
    }

    #[test]
    fn lambda_matches_evaluation() {
        let ctx = Arc::new(OreContext::new(Backend::f8(), Endomorphism::Frobenius(1), Derivation::Inner(Elem::Gf(2))).unwrap());
        let f = parse_polynomial("t^2+[w]*t+[1]", &ctx).unwrap();
        for a in ctx.enumerate().unwrap() {
            for x in ctx.enumerate().unwrap().into_iter().skip(1) {
                let ax = ctx.conjugate(&a, &x).unwrap();
                assert_eq!(lambda(&f, &a, &x), ctx.mul(&f.eval(&ax), &x));
            }
        }
    }

    #[test]
    fn f4_frobenius_classes() {
        let ctx = OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Zero).unwrap();
        let classes = finite_classes(&ctx).unwrap();
        // a^c = c a: {0} and the nonzero elements form one class each
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[1].len(), 3);
    }
}
