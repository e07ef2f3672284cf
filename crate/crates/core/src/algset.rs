//! Finite algebraic sets: minimal polynomials, rank, P-dependence,
//! P-bases and closures.

use crate::error::{Error, Result};
use crate::eval::evaluate;
use crate::ring::{Elem, OreContext};
use crate::skewpoly::SkewPoly;
use std::sync::Arc;

/// The minimal polynomial of a finite set together with the P-basis
/// that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPolynomial {
    pub poly: SkewPoly,
    /// The generators that raised the degree, in input order.
    pub basis: Vec<Elem>,
}

impl MinimalPolynomial {
    pub fn rank(&self) -> usize {
        self.poly.deg()
    }
}

/// Builds `f_Δ` one generator at a time: while `g(a) != 0` the polynomial
/// `(t - a^(g(a))) g` is the least left multiple of `g` and `t - a`.
pub fn minimal_polynomial(ctx: &Arc<OreContext>, gens: &[Elem]) -> MinimalPolynomial {
    let mut g = SkewPoly::one(ctx);
    let mut basis = Vec::new();
    for a in gens {
        if let Some(next) = adjoin(&g, a) {
            g = next;
            basis.push(a.clone());
        }
    }
    MinimalPolynomial { poly: g, basis }
}

/// `(t - a^(g(a))) g`, or `None` when `g(a) = 0`.
pub fn adjoin(g: &SkewPoly, a: &Elem) -> Option<SkewPoly> {
    let ctx = g.context();
    let ga = evaluate(g, a);
    if ctx.is_zero(&ga) {
        return None;
    }
    let b = ctx.conjugate(a, &ga).expect("nonzero conjugator");
    Some(&SkewPoly::linear(ctx, &b) * g)
}

pub fn rank(ctx: &Arc<OreContext>, gens: &[Elem]) -> usize {
    minimal_polynomial(ctx, gens).rank()
}

/// Whether `d` is P-dependent on the set, i.e. `f_Δ(d) = 0`.
pub fn is_p_dependent(ctx: &Arc<OreContext>, d: &Elem, gens: &[Elem]) -> bool {
    ctx.is_zero(&evaluate(&minimal_polynomial(ctx, gens).poly, d))
}

/// Whether no generator is P-dependent on the others.
pub fn is_p_independent(ctx: &Arc<OreContext>, gens: &[Elem]) -> bool {
    let mut distinct = gens.to_vec();
    distinct.sort();
    distinct.dedup();
    distinct.len() == gens.len() && rank(ctx, gens) == gens.len()
}

/// The elements of the domain (all of `K` when finite) killed by `f_Δ`.
pub fn closure(ctx: &Arc<OreContext>, gens: &[Elem], domain: Option<&[Elem]>) -> Result<Vec<Elem>> {
    let f = minimal_polynomial(ctx, gens).poly;
    crate::eval::right_roots(&f, domain)
}

/// Whether `Δ` equals its closure inside the domain.
pub fn is_full(ctx: &Arc<OreContext>, gens: &[Elem], domain: Option<&[Elem]>) -> Result<bool> {
    let mut domain_all: Vec<Elem>;
    let domain = match domain {
        Some(d) => {
            // the set itself is always part of the search
            domain_all = d.to_vec();
            domain_all.extend(gens.iter().cloned());
            Some(domain_all.as_slice())
        }
        None => {
            if ctx.enumerate().is_err() {
                return Err(Error::DomainRequired);
            }
            None
        }
    };
    Ok(closure(ctx, gens, domain)?.iter().all(|x| gens.contains(x)))
}
