//! Acceptance criteria 1 to 11, all exact. Prints one line per criterion
//! and exits non-zero if any fails.

mod common;

use common::{backends, finite, hq, nonzero, poly, poly_of_degree, rng, RankOracle};
use num_rational::BigRational;
use std::sync::Arc;
use std::time::{Duration, Instant};
use wedderburn::algset::minimal_polynomial;
use wedderburn::eval::{coset_check, left_roots, phi_transform, right_roots, CosetReport};
use wedderburn::lattice::{build_full_lattice_with, build_w_lattice_with, duality_check, intersection_report, modular_law_exhaustive, monic_polynomials, ClosureTable};
use wedderburn::metro::{class_algebraic_uniqueness, metro_lhs, metro_wedderburn_equivalence, solve_metro, MetroStatus, Uniqueness};
use wedderburn::parse::parse_polynomial;
use wedderburn::ring::{Backend, Derivation, Elem, Endomorphism, OreContext, Quaternion};
use wedderburn::skewpoly::SkewPoly;
use wedderburn::wedd::{default_candidates, is_wedderburn, is_wedderburn_with, theorems, WCertificate};

struct Outcome {
    failures: Vec<String>,
    cases: usize,
    note: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), cases: 0, note: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }
}

fn remainder_theorem() -> Outcome {
    let mut out = Outcome::new();
    let mut r = rng(1);
    for (name, ctx) in backends() {
        for _ in 0..1000 {
            let f = poly(&ctx, &mut r, 4);
            let a = common::elem(&ctx, &mut r);
            let lin = SkewPoly::linear(&ctx, &a);
            let (q, rem) = f.right_divmod(&lin).unwrap();
            let fa = f.eval(&a);
            let ok = rem.coeffs().len() <= 1 && rem.coeff(0) == fa && rem == SkewPoly::constant(&ctx, fa.clone()) && &(&q * &lin) + &rem == f;
            out.check(ok, || format!("{name}: f = {f}, a = {}", ctx.fmt(&a)));
        }
    }
    out
}

fn product_formula() -> Outcome {
    let mut out = Outcome::new();
    let mut r = rng(2);
    let mut zero_branch = 0;
    for (name, ctx) in backends() {
        for n in 0..1000 {
            let a = common::elem(&ctx, &mut r);
            let g = poly(&ctx, &mut r, 3);
            let mut h = poly(&ctx, &mut r, 2);
            if n % 4 == 0 {
                h = &h * &SkewPoly::linear(&ctx, &a);
            }
            let ha = h.eval(&a);
            let lhs = (&g * &h).eval(&a);
            let rhs = if ctx.is_zero(&ha) {
                zero_branch += 1;
                ctx.zero()
            } else {
                ctx.mul(&g.eval(&ctx.conjugate(&a, &ha).unwrap()), &ha)
            };
            out.check(lhs == rhs, || format!("{name}: g = {g}, h = {h}, a = {}", ctx.fmt(&a)));
        }
    }
    out.note = format!("{zero_branch} cases with h(a) = 0");
    out.check(zero_branch >= 1750, || "too few h(a) = 0 cases".into());
    out
}

fn conjugation_law() -> Outcome {
    let mut out = Outcome::new();
    let mut r = rng(3);
    for (name, ctx) in backends() {
        for _ in 0..1000 {
            let a = common::elem(&ctx, &mut r);
            let (c, d) = (nonzero(&ctx, &mut r), nonzero(&ctx, &mut r));
            let lhs = ctx.conjugate(&ctx.conjugate(&a, &c).unwrap(), &d).unwrap();
            let rhs = ctx.conjugate(&a, &ctx.mul(&d, &c)).unwrap();
            out.check(lhs == rhs, || format!("{name}: a = {}, c = {}, d = {}", ctx.fmt(&a), ctx.fmt(&c), ctx.fmt(&d)));
        }
    }
    out
}

fn degree_identity() -> Outcome {
    let mut out = Outcome::new();
    let mut r = rng(4);
    for (name, ctx) in backends() {
        for n in 0..1000 {
            let mut f = poly(&ctx, &mut r, 3);
            let mut g = poly(&ctx, &mut r, 3);
            if n % 3 == 0 {
                // force a nontrivial common right factor
                let c = poly_of_degree(&ctx, &mut r, 1 + n % 2);
                f = &f * &c;
                g = &g * &c;
            }
            let (d, m) = f.rgcd_llcm(&g).unwrap();
            let ok = f.deg() + g.deg() == d.deg() + m.deg()
                && f.right_divisible_by(&d).unwrap()
                && g.right_divisible_by(&d).unwrap()
                && m.right_divisible_by(&f).unwrap()
                && m.right_divisible_by(&g).unwrap();
            out.check(ok, || format!("{name}: f = {f}, g = {g}"));
        }
    }
    out
}

fn worked_examples() -> Outcome {
    let mut out = Outcome::new();
    let ctx = hq();
    let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
    let e = |s: &str| ctx.elem(s).unwrap();

    let c = is_wedderburn(&p("t^2+[1]")).unwrap();
    out.check(c.is_w() && c.verify(), || "t^2+1 over HQ".into());

    let g = &p("t-[j]") * &p("t-[i]");
    let c = is_wedderburn(&g).unwrap();
    let v_ok = matches!(&c, WCertificate::NotW { v_poly, .. } if *v_poly == p("t-[i]"));
    out.check(v_ok && c.verify(), || format!("(t-j)(t-i): {c:?}"));
    let v = right_roots(&g, Some(&[e("i"), e("j"), e("-i"), e("k")])).unwrap();
    out.check(v == vec![e("i")], || "V((t-j)(t-i)) restricted".into());

    let dom: Vec<Elem> = ["i", "-i", "j", "-j", "k", "-k"].iter().map(|s| e(s)).collect();
    let rep = intersection_report(&ctx, &[vec![e("i")], vec![e("j"), e("k")]], Some(&dom)).unwrap();
    out.check(rep.rgcd == p("t-[i]") && rep.intersection_minpoly.is_one(), || format!("{rep:?}"));
    out.check(p("t-[i]").rgcd(&p("t^2+[1]")).unwrap() == p("t-[i]"), || "rgcd(t-i, t^2+1)".into());

    let qu = Arc::new(OreContext::new(Backend::RationalFunctions { var: 'u' }, Endomorphism::Identity, Derivation::Formal).unwrap());
    let u = qu.elem("u").unwrap();
    let second = qu.elem("u+1/u").unwrap();
    let f = &SkewPoly::linear(&qu, &u) * &SkewPoly::linear(&qu, &u);
    let c = is_wedderburn(&f).unwrap();
    let roots = right_roots(&f, Some(&[u.clone(), second.clone()])).unwrap();
    let basis_ok = minimal_polynomial(&qu, &[u.clone(), second.clone()]).poly == f;
    out.check(c.is_w() && c.verify() && roots.len() == 2 && basis_ok, || format!("(t-u)^2: {c:?}"));

    let m = solve_metro(&qu, &u, &u, &qu.one()).unwrap();
    out.check(m.status == MetroStatus::Solution(qu.elem("-u").unwrap()), || format!("metro over Q(u): {m:?}"));

    for o in wedderburn::worked_examples::all() {
        out.check(o.passed, || format!("{}: {}", o.name, o.detail));
    }
    out
}

fn verdicts_exhaustive() -> Outcome {
    let mut out = Outcome::new();
    for (name, backend) in [("F4", Backend::f4()), ("F8", Backend::f8())] {
        for inner in [None, Some(2)] {
            let ctx = finite(backend.clone(), inner);
            let mut oracle = RankOracle::new(&ctx, 3);
            let all = ctx.enumerate().unwrap();
            for f in monic_polynomials(&ctx, &all, 3) {
                let v = theorems::finite_verdicts(&f).unwrap();
                let zeros = oracle.zero_mask(&f);
                let brute = oracle.rank(zeros) == f.deg();
                out.check(v.agree() && brute == v.is_w, || format!("{name} D={inner:?}: {f}: {v:?}, oracle {brute}"));
            }
        }
    }
    out
}

fn rank_theorems() -> Outcome {
    let mut out = Outcome::new();
    for inner in [None, Some(2)] {
        let ctx = finite(Backend::f4(), inner);
        let mut oracle = RankOracle::new(&ctx, 4);
        let n = oracle.universe.len();
        let full = (1u64 << n) - 1;

        for dm in 0..=full {
            for gm in 0..=full {
                let (d, g) = (oracle.elements(dm), oracle.elements(gm));
                let c = theorems::rank_union_check(&ctx, &d, &g, None).unwrap();
                let meet = oracle.closure(dm) & oracle.closure(gm);
                let lhs = oracle.rank(dm) + oracle.rank(gm);
                let rhs = oracle.rank(dm | gm) + oracle.rank(meet);
                out.check(lhs == rhs && (c.lhs, c.rhs) == (lhs, rhs), || format!("union D={inner:?} {dm:b} {gm:b}: {c:?} vs ({lhs}, {rhs})"));
            }
        }

        let all = ctx.enumerate().unwrap();
        let hs = monic_polynomials(&ctx, &all, 2);
        for h in &hs {
            let vh = oracle.zero_mask(h);
            for dm in 0..=full {
                if dm & vh != 0 {
                    continue;
                }
                let d = oracle.elements(dm);
                let c = theorems::phi_rank_check(h, &d, None).unwrap();
                let image: Vec<Elem> = d.iter().map(|x| phi_transform(h, x).unwrap()).collect();
                let lhs = oracle.rank(oracle.mask(&image));
                let cl = oracle.closure(dm);
                let rhs = oracle.rank(dm) - oracle.rank(cl & vh);
                out.check(lhs == rhs && (c.lhs, c.rhs) == (lhs, rhs), || format!("transform D={inner:?} h = {h}, {dm:b}: {c:?} vs ({lhs}, {rhs})"));
            }
        }

        for g in &hs {
            for h in &hs {
                let c = theorems::product_rank_bound(g, h, None).unwrap();
                let gh = g * h;
                let lhs = oracle.rank(oracle.zero_mask(&gh));
                let rhs = oracle.rank(oracle.zero_mask(g)) + oracle.rank(oracle.zero_mask(h));
                out.check(lhs <= rhs && (c.lhs, c.rhs) == (lhs, rhs), || format!("product D={inner:?} {g} * {h}: {c:?}"));
            }
        }
    }

    let ctx = hq();
    let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
    let e = |ss: &[&str]| ss.iter().map(|s| ctx.elem(s).unwrap()).collect::<Vec<_>>();
    let dom = e(&["i", "-i", "j", "-j", "k", "-k"]);
    let c = theorems::rank_union_check(&ctx, &e(&["i"]), &e(&["j", "k"]), Some(&dom)).unwrap();
    out.check((c.lhs, c.rhs) == (3, 3), || format!("HQ union {c:?}"));
    let c = theorems::phi_rank_check(&p("t-[i]"), &e(&["j", "k"]), None).unwrap();
    out.check((c.lhs, c.rhs) == (1, 1), || format!("HQ transform {c:?}"));
    let c = theorems::product_rank_bound(&p("t-[j]"), &p("t-[i]"), None).unwrap();
    out.check((c.lhs, c.rhs) == (1, 2), || format!("HQ product {c:?}"));
    out
}

fn metro_equivalence() -> Outcome {
    let mut out = Outcome::new();
    for inner in [None, Some(2)] {
        let ctx = finite(Backend::f8(), inner);
        let all = ctx.enumerate().unwrap();
        for a in &all {
            for b in &all {
                for c in all.iter().filter(|c| !ctx.is_zero(c)) {
                    let solvable = all.iter().any(|x| metro_lhs(&ctx, a, b, x) == *c);
                    let q = &SkewPoly::linear(&ctx, &ctx.conjugate(b, c).unwrap()) * &SkewPoly::linear(&ctx, a);
                    let two_roots = all.iter().filter(|x| ctx.is_zero(&q.eval(x))).count() >= 2;
                    let r = metro_wedderburn_equivalence(&ctx, a, b, c).unwrap();
                    let ok = solvable == two_roots && r.agree() == Some(true) && r.metro.solvable() == Some(solvable);
                    out.check(ok, || format!("F8 D={inner:?} a={a:?} b={b:?} c={c:?}: {r:?}"));
                }
            }
        }
    }

    let ctx = hq();
    let mut r = rng(8);
    let mut solvable = 0;
    for n in 0..200 {
        let a = nonzero(&ctx, &mut r);
        let b = if n % 3 == 0 { ctx.conjugate(&a, &nonzero(&ctx, &mut r)).unwrap() } else { nonzero(&ctx, &mut r) };
        let c = nonzero(&ctx, &mut r);
        let rep = metro_wedderburn_equivalence(&ctx, &a, &b, &c).unwrap();
        if rep.metro.solvable() == Some(true) {
            solvable += 1;
        }
        let sub_ok = rep.metro.solution().map_or(true, |x| metro_lhs(&ctx, &a, &b, x) == c);
        out.check(rep.agree() == Some(true) && sub_ok, || format!("HQ a={} b={} c={}: {rep:?}", ctx.fmt(&a), ctx.fmt(&b), ctx.fmt(&c)));
    }

    let mut unique = 0;
    while unique < 100 {
        let b = nonzero(&ctx, &mut r);
        let a = nonzero(&ctx, &mut r);
        let c = nonzero(&ctx, &mut r);
        let Ok(rep) = class_algebraic_uniqueness(&ctx, &b, &a, &c) else { continue };
        unique += 1;
        out.check(rep.holds() && rep.metro.uniqueness == Uniqueness::Unique, || format!("outside class b={} a={}: {rep:?}", ctx.fmt(&b), ctx.fmt(&a)));
    }
    out.note = format!("{solvable}/200 random HQ triples solvable");
    out
}

fn lattice_duality() -> Outcome {
    let mut out = Outcome::new();
    let mut notes = Vec::new();
    for (name, backend) in [("F4", Backend::f4()), ("F8", Backend::f8())] {
        let start = Instant::now();
        let ctx = finite(backend, None);
        let table = ClosureTable::new(&ctx).unwrap();
        let full = build_full_lattice_with(&ctx, &table).unwrap();
        let w = build_w_lattice_with(&ctx, &table).unwrap();
        for v in full.verify().into_iter().chain(w.verify()) {
            out.check(false, || format!("{name}: {v}"));
        }
        let d = duality_check(&full, &w).unwrap();
        out.check(d.ok(), || format!("{name}: {:?}", d.violations));
        let m = modular_law_exhaustive(&table);
        out.check(m.violations.is_empty(), || format!("{name}: {:?}", m.violations));
        out.cases += d.intervals_checked + m.triples;
        let elapsed = start.elapsed();
        out.check(elapsed < Duration::from_secs(120), || format!("{name} took {elapsed:?}"));
        notes.push(format!("{name}: {} nodes, {} intervals, {} triples, {:.1}s", full.len(), d.intervals_checked, m.triples, elapsed.as_secs_f64()));
    }
    out.note = notes.join("; ");
    out
}

fn coset_alternative() -> Outcome {
    let mut out = Outcome::new();
    let ctx = common::ctx(Backend::RationalFunctions { var: 'x' }, Endomorphism::SquareVariable, Derivation::Zero);
    let x = ctx.elem("x").unwrap();
    let mut r = rng(10);
    let candidates = default_candidates(&ctx);
    let mut discovered = 0;

    // f = (t - b1)(alpha t + beta1) has the two left roots b1 and
    // b2 = b1 - S(delta)/alpha, in one coset exactly when alpha is in S(K).
    let build = |alpha: &Elem, b1: &Elem, delta: &Elem| {
        let sd = ctx.apply_s(delta);
        let beta1 = ctx.sub(delta, &ctx.mul(&ctx.mul(b1, delta), &ctx.mul(alpha, &ctx.inv(&sd))));
        let f = &SkewPoly::linear(&ctx, b1) * &SkewPoly::new(&ctx, vec![beta1, alpha.clone()]);
        let b2 = ctx.sub(b1, &ctx.mul(&sd, &ctx.inv(alpha)));
        (f, b2)
    };

    for n in 0..200 {
        let b1 = common::elem(&ctx, &mut r);
        let delta = nonzero(&ctx, &mut r);
        let monic = n < 100;
        let (f, b2) = if monic {
            build(&ctx.one(), &b1, &delta)
        } else if n % 2 == 0 {
            build(&ctx.mul(&x, &ctx.apply_s(&nonzero(&ctx, &mut r))), &b1, &delta)
        } else {
            let g = &SkewPoly::linear(&ctx, &b1) * &SkewPoly::linear(&ctx, &common::elem(&ctx, &mut r));
            (&g * &SkewPoly::constant(&ctx, x.clone()), b1.clone())
        };
        let mut domain = candidates.clone();
        domain.extend([b1.clone(), b2.clone(), ctx.add(&b1, &ctx.one()), ctx.add(&b1, &x)]);
        let roots = left_roots(&f, Some(&domain)).unwrap();
        discovered += roots.len();
        let has_both = roots.contains(&b1) && roots.contains(&b2);
        let report = coset_check(&f, &roots).unwrap();
        let ok = if monic {
            report == CosetReport::SingleCoset && f.is_monic()
        } else {
            !matches!(report, CosetReport::Mixed { .. }) && !f.is_monic()
        };
        out.check(ok && has_both, || format!("f = {f}: roots {:?}, {report:?}", roots.iter().map(|b| ctx.fmt(b)).collect::<Vec<_>>()));
    }
    out.note = format!("{discovered} left roots discovered");
    out
}

fn central_quadratics() -> Outcome {
    let mut out = Outcome::new();
    let ctx = hq();
    let mut r = rng(11);
    let mut n = 0;
    while n < 100 {
        let Elem::Quat(a) = nonzero(&ctx, &mut r) else { unreachable!() };
        if a.is_scalar() {
            continue;
        }
        n += 1;
        let scalar = |q: BigRational| Elem::Quat(Quaternion::scalar(q));
        let f = SkewPoly::new(&ctx, vec![scalar(a.norm()), scalar(-a.trace()), ctx.one()]);
        let c = is_wedderburn_with(&f, None).unwrap();
        let vanishes = ctx.is_zero(&f.eval(&Elem::Quat(a.clone())));
        out.check(c.is_w() && c.verify() && vanishes, || format!("{f}: {c:?}"));
    }
    out
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 11] = [
        ("remainder theorem", remainder_theorem, Some(10)),
        ("product formula", product_formula, None),
        ("conjugation law", conjugation_law, None),
        ("degree identity", degree_identity, None),
        ("worked examples", worked_examples, None),
        ("W-recognition cross-validation", verdicts_exhaustive, Some(60)),
        ("rank theorems", rank_theorems, None),
        ("metro equivalence and uniqueness", metro_equivalence, None),
        ("lattice duality", lattice_duality, None),
        ("left-root coset alternative", coset_alternative, None),
        ("central quadratics", central_quadratics, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = run();
        let secs = start.elapsed().as_secs_f64();
        if let Some(l) = limit {
            out.check(secs < *l as f64, || format!("runtime {secs:.1}s exceeds {l}s"));
        }
        let ok = out.failures.is_empty();
        let note = if out.note.is_empty() { String::new() } else { format!(", {}", out.note) };
        println!("criterion {:>2} {}: {} ({} checks, {secs:.2}s{note})", i + 1, name, if ok { "PASS" } else { "FAIL" }, out.cases);
        for f in out.failures.iter().filter(|f| !f.is_empty()) {
            println!("    {f}");
        }
        if !ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
