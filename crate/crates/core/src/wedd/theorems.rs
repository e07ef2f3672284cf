//! Executable forms of the structure theorems for W-polynomials: the
//! factor and product criteria, the rank identities, and several mutually
//! independent W-tests on finite fields.

use super::{all_splittings, dual_representation, is_wedderburn, split, vandermonde, zero_set, Split};
use crate::algset::{minimal_polynomial, rank};
use crate::error::{Error, Result};
use crate::eval::{left_roots, phi_transform, right_roots};
use crate::linalg::BaseMatrix;
use crate::ring::{Elem, OreContext};
use crate::skewpoly::SkewPoly;
use std::collections::HashMap;
use std::sync::Arc;

/// Outcome of one condition of a criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Untested(String),
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Untested(_) => None,
        }
    }
}

/// W-test for a quadratic through its number of distinct right roots, the
/// criterion that two distinct roots already span rank two.
pub fn quadratic_is_w(q: &SkewPoly) -> Result<bool> {
    let ctx = q.context();
    if ctx.enumerate().is_ok() {
        return Ok(right_roots(q, None)?.len() >= 2);
    }
    Ok(is_wedderburn(q)?.is_w())
}

/// `(t - c_j) ... (t - c_(i+1))` for the chain `[c_1, ..., c_n]`.
fn chain_product(ctx: &Arc<OreContext>, chain: &[Elem], i: usize, j: usize) -> SkewPoly {
    (i..j).fold(SkewPoly::one(ctx), |acc, k| &SkewPoly::linear(ctx, &chain[k]) * &acc)
}

/// All monic factors that appear as consecutive products in the chains.
fn chain_factors(ctx: &Arc<OreContext>, chains: &[Vec<Elem>]) -> Vec<SkewPoly> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for chain in chains {
        for i in 0..chain.len() {
            for j in i + 1..=chain.len() {
                let p = chain_product(ctx, chain, i, j);
                if seen.insert(p.clone()) {
                    out.push(p);
                }
            }
        }
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}

/// Splitting chains of a monic `f`: all of them on finite fields, one otherwise.
fn chains(f: &SkewPoly) -> Result<(Vec<Vec<Elem>>, bool)> {
    if f.context().enumerate().is_ok() {
        return Ok((all_splittings(f)?, true));
    }
    Ok(match split(f)? {
        Split::Linear(c) => (vec![c], false),
        Split::NotSplit(_) => (vec![], false),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorReport {
    pub is_w: bool,
    pub splits: bool,
    /// Every monic factor found is W.
    pub factors_w: bool,
    /// Every monic quadratic factor found is W.
    pub quadratic_factors_w: bool,
    pub factors_examined: usize,
    /// Whether every monic factor was examined.
    pub exhaustive: bool,
}

impl FactorReport {
    pub fn consistent(&self) -> bool {
        let second = self.splits && self.factors_w;
        let third = self.splits && self.quadratic_factors_w;
        self.is_w == second && self.is_w == third
    }
}

/// Checks: `f` is W, `f` splits with all monic factors W, and `f` splits
/// with all monic quadratic factors W, on the factors reachable from
/// splitting chains (all of them on finite fields).
pub fn factor_theorem_check(f: &SkewPoly) -> Result<FactorReport> {
    let f = f.monic();
    let ctx = f.context();
    let is_w = is_wedderburn(&f)?.is_w();
    let (chains, exhaustive) = chains(&f)?;
    let factors = chain_factors(ctx, &chains);
    let mut cache: HashMap<SkewPoly, bool> = HashMap::new();
    let mut factors_w = true;
    let mut quadratic_factors_w = true;
    for p in &factors {
        let w = match p.deg() {
            1 => true,
            2 => quadratic_is_w(p)?,
            _ => *cache.entry(p.clone()).or_insert(is_wedderburn(p)?.is_w()),
        };
        factors_w &= w;
        if p.deg() == 2 {
            quadratic_factors_w &= w;
        }
    }
    Ok(FactorReport {
        is_w,
        splits: !chains.is_empty() || f.deg() == 0,
        factors_w,
        quadratic_factors_w,
        factors_examined: factors.len(),
        exhaustive,
    })
}

/// Whether `1 = u g + h v` for some `u, v`, by a base-linear solve with
/// `deg u < deg h` and `deg v < deg g`.
pub fn one_in_rg_plus_hr(g: &SkewPoly, h: &SkewPoly) -> Result<bool> {
    let ctx = g.context();
    let (dg, dh) = (g.deg(), h.deg());
    if dg == 0 || dh == 0 {
        return Ok(true);
    }
    let b = ctx.backend();
    let (Some(field), Some(basis)) = (b.base_field(), b.base_basis()) else {
        return Err(Error::CapabilityMissing(format!("{} is not finite-dimensional over its center", b.tag())));
    };
    let len = dg + dh;
    let flatten = |p: &SkewPoly| -> Vec<Elem> { (0..len).flat_map(|i| b.coordinates(&p.coeff(i)).unwrap()).collect() };
    let mut cols = Vec::new();
    for i in 0..dh {
        for e in &basis {
            cols.push(flatten(&(&SkewPoly::monomial(ctx, e.clone(), i) * g)));
        }
    }
    for j in 0..dg {
        for e in &basis {
            cols.push(flatten(&(h * &SkewPoly::monomial(ctx, e.clone(), j))));
        }
    }
    let m = BaseMatrix::from_columns(field, len * basis.len(), &cols);
    Ok(m.solve(&flatten(&SkewPoly::one(ctx))).is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductReport {
    pub product: SkewPoly,
    pub g_w: bool,
    pub h_w: bool,
    /// The four equivalent conditions, in order: `gh` is W; the comaximality
    /// condition; `V(g)` inside the image of `Φ_h`; all quadratics
    /// `(t - a)(t - b)` with `a` in `V(g)` and `b` in `V'(h)` are W.
    pub conditions: [Verdict; 4],
}

impl ProductReport {
    /// All decided conditions agree.
    pub fn consistent(&self) -> bool {
        let decided: Vec<bool> = self.conditions.iter().filter_map(Verdict::as_bool).collect();
        decided.windows(2).all(|w| w[0] == w[1])
    }
}

/// The four conditions of the product criterion for monic `g`, `h`.
/// `domain` supplies root candidates on infinite backends.
pub fn product_theorem_check(g: &SkewPoly, h: &SkewPoly, domain: Option<&[Elem]>) -> Result<ProductReport> {
    if !g.is_monic() || !h.is_monic() {
        return Err(Error::NotMonic);
    }
    let ctx = g.context();
    let product = g * h;
    let c1 = Verdict::from_bool(is_wedderburn(&product)?.is_w());
    let g_w = is_wedderburn(g)?.is_w();
    let h_w = is_wedderburn(h)?.is_w();
    let both = g_w && h_w;
    let enumerable = ctx.enumerate().is_ok();

    let c2 = if !both {
        Verdict::False
    } else {
        match one_in_rg_plus_hr(g, h) {
            Ok(v) => Verdict::from_bool(v),
            Err(Error::CapabilityMissing(m)) => Verdict::Untested(m),
            Err(e) => return Err(e),
        }
    };

    let c3 = if !both {
        Verdict::False
    } else if enumerable {
        let mut image = Vec::new();
        for x in ctx.enumerate()? {
            if let Ok(y) = phi_transform(h, &x) {
                image.push(y);
            }
        }
        Verdict::from_bool(right_roots(g, None)?.iter().all(|a| image.contains(a)))
    } else {
        Verdict::Untested("the image of the transform needs an enumerable field".into())
    };

    let c4 = if !both {
        Verdict::False
    } else if enumerable || domain.is_some() {
        let vg = right_roots(g, domain)?;
        let vh = left_roots(h, domain)?;
        let mut all = true;
        'outer: for a in &vg {
            for b in &vh {
                let q = &SkewPoly::linear(ctx, a) * &SkewPoly::linear(ctx, b);
                if !quadratic_is_w(&q)? {
                    all = false;
                    break 'outer;
                }
            }
        }
        Verdict::from_bool(all)
    } else {
        Verdict::Untested("root sets of g and h need a domain".into())
    };
    Ok(ProductReport { product, g_w, h_w, conditions: [c1, c2, c3, c4] })
}

/// `lhs` and `rhs` of a rank identity or bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankComparison {
    pub lhs: usize,
    pub rhs: usize,
}

impl RankComparison {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `rk V(f)`: exact where the zero set is, otherwise limited to `domain`.
pub fn zero_set_rank(f: &SkewPoly, domain: Option<&[Elem]>) -> Result<usize> {
    let zs = zero_set(f, domain)?;
    if !zs.complete && domain.is_none() {
        return Err(Error::DomainRequired);
    }
    Ok(zs.rank())
}

/// `rk Δ + rk Γ` against `rk(Δ ∪ Γ) + rk(cl Δ ∩ cl Γ)`. The intersection of
/// closures is the zero set of `rgcd(f_Δ, f_Γ)`.
pub fn rank_union_check(ctx: &Arc<OreContext>, delta: &[Elem], gamma: &[Elem], domain: Option<&[Elem]>) -> Result<RankComparison> {
    let fd = minimal_polynomial(ctx, delta).poly;
    let fg = minimal_polynomial(ctx, gamma).poly;
    let union: Vec<Elem> = delta.iter().chain(gamma).cloned().collect();
    let gcd = fd.rgcd(&fg)?;
    Ok(RankComparison { lhs: fd.deg() + fg.deg(), rhs: rank(ctx, &union) + zero_set_rank(&gcd, domain)? })
}

/// `rk Φ_h(Δ)` against `rk Δ - rk(cl Δ ∩ V(h))` for `Δ` disjoint from `V(h)`.
pub fn phi_rank_check(h: &SkewPoly, delta: &[Elem], domain: Option<&[Elem]>) -> Result<RankComparison> {
    let ctx = h.context();
    let mut image = Vec::new();
    for x in delta {
        image.push(phi_transform(h, x).map_err(|_| Error::DisjointnessViolated)?);
    }
    let fd = minimal_polynomial(ctx, delta).poly;
    let meet = zero_set_rank(&fd.rgcd(h)?, domain)?;
    Ok(RankComparison { lhs: rank(ctx, &image), rhs: fd.deg() - meet })
}

/// `rk V(gh)` against `rk V(g) + rk V(h)`.
pub fn product_rank_bound(g: &SkewPoly, h: &SkewPoly, domain: Option<&[Elem]>) -> Result<RankComparison> {
    Ok(RankComparison { lhs: zero_set_rank(&(g * h), domain)?, rhs: zero_set_rank(g, domain)? + zero_set_rank(h, domain)? })
}

/// Independent W-tests for `f` over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteVerdicts {
    /// The library decision (minimal polynomial of the zero set).
    pub is_w: bool,
    /// Some `deg f` roots have an invertible Vandermonde matrix.
    pub brute_force: bool,
    /// `f` splits and every monic quadratic factor has two distinct roots.
    pub quadratic: bool,
    /// Exponential-space dimensions over all classes sum to `deg f`.
    pub expspace: bool,
    /// A P-basis of `V(f)` of size `deg f` has a verified dual representation.
    pub dual: bool,
    /// The left roots have rank `deg f`, when computable.
    pub left_rank: Option<bool>,
}

impl FiniteVerdicts {
    pub fn agree(&self) -> bool {
        let v = self.is_w;
        self.brute_force == v && self.quadratic == v && self.expspace == v && self.dual == v && self.left_rank.unwrap_or(v) == v
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn finite_verdicts(f: &SkewPoly) -> Result<FiniteVerdicts> {
    let f = f.monic();
    let ctx = f.context();
    let all = ctx.enumerate()?;
    let n = f.deg();
    let is_w = is_wedderburn(&f)?.is_w();

    let roots = right_roots(&f, None)?;
    let brute_force = subsets_of_size(roots.len(), n).iter().any(|s| {
        let cs: Vec<Elem> = s.iter().map(|&i| roots[i].clone()).collect();
        vandermonde(ctx, &cs).is_invertible(ctx)
    });

    let (chains, _) = chains(&f)?;
    let quadratic = (n == 0 || !chains.is_empty())
        && chain_factors(ctx, &chains).iter().filter(|p| p.deg() == 2).all(|p| right_roots(p, None).map(|r| r.len() >= 2).unwrap_or(false));

    let reps: Vec<Elem> = super::expspace::finite_classes(ctx)?.into_iter().map(|c| c[0].clone()).collect();
    let expspace = super::expspace::dimension_sum(&f, &reps)?.0 == n;

    let basis = minimal_polynomial(ctx, &roots).basis;
    let dual = basis.len() == n && {
        let d = dual_representation(ctx, &basis)?;
        d.left_divides && d.left_independent == Some(true) && d.poly == f
    };

    let left_rank = super::left_roots_via_opposite(&f).and_then(|lr| {
        let op = super::opposite(ctx)?;
        Some(minimal_polynomial(&op, &lr).rank() == n)
    });
    debug_assert!(all.len() >= roots.len());
    Ok(FiniteVerdicts { is_w, brute_force, quadratic, expspace, dual, left_rank })
}

/// Over a finite `K`: `f` is W iff every `q` whose left roots include
/// those of `f` is a right multiple `f r`. Tested on all monic `q` of degree
/// at most `max_deg`.
pub fn left_root_criterion(f: &SkewPoly, max_deg: usize) -> Result<bool> {
    let f = f.monic();
    let ctx = f.context();
    let universe = ctx.enumerate()?;
    let lf = left_roots(&f, None)?;
    for q in crate::lattice::monic_polynomials(ctx, &universe, max_deg) {
        let mut contains = true;
        for b in &lf {
            contains &= crate::eval::is_left_root(&q, b)?;
        }
        if contains && q.left_divisible_by(&f)? != Some(true) {
            return Ok(false);
        }
    }
    Ok(true)
}
