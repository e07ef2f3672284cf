//! Replays the classical worked examples of the theory, each as an exact
//! check with a short description of what was compared.

use crate::algset::{is_full, minimal_polynomial};
use crate::eval::{phi_transform, right_roots};
use crate::lattice::intersection_report;
use crate::metro::{metro_wedderburn_equivalence, solve_metro, MetroStatus};
use crate::parse::parse_polynomial;
use crate::ring::{Backend, Derivation, Elem, Endomorphism, OreContext};
use crate::skewpoly::SkewPoly;
use crate::wedd::{is_wedderburn, WCertificate};
use crate::Result;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, passed: bool, detail: String) -> ExampleOutcome {
    ExampleOutcome { name, passed, detail }
}

fn hq() -> Arc<OreContext> {
    Arc::new(OreContext::classical(Backend::Quaternions))
}

fn differential_qu() -> Arc<OreContext> {
    Arc::new(OreContext::new(Backend::RationalFunctions { var: 'u' }, Endomorphism::Identity, Derivation::Formal).unwrap())
}

fn sum_of_squares_w() -> Result<ExampleOutcome> {
    let ctx = hq();
    let f = parse_polynomial("t^2+[1]", &ctx)?;
    let cert = is_wedderburn(&f)?;
    let roots: Vec<String> = cert.roots().iter().map(|r| ctx.fmt(r)).collect();
    Ok(outcome("t^2+1 is a W-polynomial over HQ", cert.is_w() && cert.verify(), format!("roots {}", roots.join(", "))))
}

fn twisted_product_not_w() -> Result<ExampleOutcome> {
    let ctx = hq();
    let g = &parse_polynomial("t-[j]", &ctx)? * &parse_polynomial("t-[i]", &ctx)?;
    let cert = is_wedderburn(&g)?;
    let ok = match &cert {
        WCertificate::NotW { v_poly, .. } => *v_poly == parse_polynomial("t-[i]", &ctx)?,
        _ => false,
    };
    Ok(outcome("(t-j)(t-i) is not W over HQ, its zero set is {i}", ok && cert.verify(), format!("f_V = {}", match &cert {
        WCertificate::NotW { v_poly, .. } => v_poly.to_string(),
        WCertificate::IsW { poly, .. } => poly.to_string(),
    })))
}

fn small_minimal_polynomials() -> Result<ExampleOutcome> {
    let ctx = hq();
    let empty = minimal_polynomial(&ctx, &[]).poly;
    let a = ctx.elem("1+j")?;
    let single = minimal_polynomial(&ctx, &[a.clone()]).poly;
    Ok(outcome(
        "the empty set has minimal polynomial 1, a singleton {a} has t-a",
        empty.is_one() && single == SkewPoly::linear(&ctx, &a),
        format!("f_empty = {empty}, f_{{1+j}} = {single}"),
    ))
}

fn central_quadratic() -> Result<ExampleOutcome> {
    let ctx = hq();
    let a = ctx.elem("1+2i-j+3k")?;
    // trace 2, norm 1 + 4 + 1 + 9
    let f = parse_polynomial("t^2-[2]*t+[15]", &ctx)?;
    let cert = is_wedderburn(&f)?;
    Ok(outcome(
        "the central quadratic of a non-central quaternion is W",
        ctx.is_zero(&f.eval(&a)) && cert.is_w(),
        format!("{f} vanishes at {}", ctx.fmt(&a)),
    ))
}

fn phi_generalises_conjugation() -> Result<ExampleOutcome> {
    let ctx = hq();
    let (i, j) = (ctx.elem("i")?, ctx.elem("j")?);
    let by_const = phi_transform(&SkewPoly::constant(&ctx, j.clone()), &i)?;
    let by_one = phi_transform(&SkewPoly::one(&ctx), &i)?;
    let f4 = Arc::new(OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Zero)?);
    let all_nonzero = f4.enumerate()?.into_iter().filter(|x| !f4.is_zero(x)).collect::<Vec<Elem>>();
    let t = SkewPoly::t(&f4);
    let restricts_s = all_nonzero.iter().all(|x| phi_transform(&t, x).ok() == Some(f4.apply_s(x)));
    Ok(outcome(
        "the transform by a constant c is conjugation by c; by 1 the identity; by t the map S when D = 0",
        by_const == ctx.conjugate(&i, &j)? && by_one == i && restricts_s,
        format!("Phi_j(i) = {}", ctx.fmt(&by_const)),
    ))
}

fn rgcd_of_non_full_sets() -> Result<ExampleOutcome> {
    let ctx = hq();
    let e = |s: &str| ctx.elem(s);
    let dom = ["i", "-i", "j", "-j", "k", "-k"].iter().map(|s| e(s)).collect::<Result<Vec<_>>>()?;
    let delta = vec![e("i")?];
    let gamma = vec![e("j")?, e("k")?];
    let r = intersection_report(&ctx, &[delta.clone(), gamma.clone()], Some(&dom))?;
    let ok = r.rgcd == SkewPoly::linear(&ctx, &e("i")?)
        && r.intersection_minpoly.is_one()
        && is_full(&ctx, &delta, Some(&dom))?
        && !is_full(&ctx, &gamma, Some(&dom))?;
    Ok(outcome(
        "rgcd(t-i, t^2+1) = t-i although {i} and {j,k} are disjoint ({j,k} is not full)",
        ok,
        format!("rgcd = {}, minimal polynomial of the intersection = {}", r.rgcd, r.intersection_minpoly),
    ))
}

fn repeated_linear_factor() -> Result<ExampleOutcome> {
    let ctx = differential_qu();
    let u = ctx.elem("u")?;
    let f = &SkewPoly::linear(&ctx, &u) * &SkewPoly::linear(&ctx, &u);
    let cert = is_wedderburn(&f)?;
    let second = ctx.elem("u+1/u")?;
    let roots_ok = right_roots(&f, Some(&[u.clone(), second.clone()]))? == vec![u.clone(), second.clone()];
    Ok(outcome(
        "(t-u)^2 is W over Q(u) with d/du, with roots u and u+1/u",
        cert.is_w() && cert.verify() && roots_ok,
        format!("certificate roots {}", cert.roots().iter().map(|r| ctx.fmt(r)).collect::<Vec<_>>().join(", ")),
    ))
}

fn metro_in_differential_model() -> Result<ExampleOutcome> {
    let ctx = differential_qu();
    let u = ctx.elem("u")?;
    let r = solve_metro(&ctx, &u, &u, &ctx.one())?;
    let eq = metro_wedderburn_equivalence(&ctx, &u, &u, &ctx.one())?;
    Ok(outcome(
        "u x - x u - x' = 1 over Q(u) has the solution x = -u",
        r.status == MetroStatus::Solution(ctx.elem("-u")?) && eq.agree() == Some(true),
        format!("x = {}", r.solution().map(|x| ctx.fmt(x)).unwrap_or_default()),
    ))
}

fn metro_equivalence_on_quaternions() -> Result<ExampleOutcome> {
    let ctx = hq();
    let (i, j, one) = (ctx.elem("i")?, ctx.elem("j")?, ctx.one());
    let yes = metro_wedderburn_equivalence(&ctx, &i, &i, &j)?;
    let no = metro_wedderburn_equivalence(&ctx, &i, &i, &one)?;
    Ok(outcome(
        "i x - x i = j is solvable and (t+i)(t-i) is W; i x - x i = 1 is not and (t-i)^2 is not W",
        yes.agree() == Some(true) && yes.wedderburn == Some(true) && no.agree() == Some(true) && no.wedderburn == Some(false),
        format!("quadratics {} and {}", yes.quadratic, no.quadratic),
    ))
}

/// Every worked example, in a fixed order.
pub fn all() -> Vec<ExampleOutcome> {
    let runs: [(&'static str, fn() -> Result<ExampleOutcome>); 9] = [
        ("sum of squares", sum_of_squares_w),
        ("twisted product", twisted_product_not_w),
        ("small minimal polynomials", small_minimal_polynomials),
        ("central quadratic", central_quadratic),
        ("transform", phi_generalises_conjugation),
        ("non-full intersection", rgcd_of_non_full_sets),
        ("repeated factor", repeated_linear_factor),
        ("differential metro", metro_in_differential_model),
        ("quaternion metro", metro_equivalence_on_quaternions),
    ];
    runs.iter()
        .map(|(name, run)| run().unwrap_or_else(|e| outcome(name, false, format!("error: {e}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_examples_pass() {
        for o in super::all() {
            assert!(o.passed, "{}: {}", o.name, o.detail);
        }
    }
}
