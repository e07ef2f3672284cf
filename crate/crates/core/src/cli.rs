//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit code with captured output, so it can be tested without
//! spawning a process.
//!
//! Exit codes: 0 on success, 1 when `--strict` is given and a decision
//! procedure answered "no", 2 on usage, parse and context errors.

use crate::algset::{is_p_dependent, minimal_polynomial};
use crate::error::Error;
use crate::eval::{conjugate, evaluate, left_roots, phi_transform, right_roots};
use crate::lattice::{build_full_lattice_with, build_w_lattice_with, duality_check, modular_law_exhaustive, ClosureTable};
use crate::metro::{class_algebraic_uniqueness, metro_wedderburn_equivalence, solve_metro, MetroReport, MetroStatus, Uniqueness};
use crate::parse::parse_polynomial;
use crate::ring::{Backend, Derivation, Elem, Endomorphism, OreContext};
use crate::wedd::{self, expspace, theorems, Split, WCertificate};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::sync::Arc;

#[derive(Parser, Debug)]
#[command(name = "wedderburn", version, about = "Wedderburn polynomials in Ore extensions K[t,S,D]")]
struct Cli {
    /// Coefficient ring: Q, F2, F4, F8, Qx, Qu or HQ.
    #[arg(long, global = true, default_value = "Q")]
    ring: String,
    /// Endomorphism: id, frob, frob:<e> or xsq.
    #[arg(long = "S", global = true, default_value = "id")]
    s: String,
    /// Derivation: zero, ddx (also ddu) or inner:<element>.
    #[arg(long = "D", global = true, default_value = "zero")]
    d: String,
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with code 1 when the answer is negative.
    #[arg(long, global = true)]
    strict: bool,
    /// Comma-separated candidate elements for searches over infinite rings.
    #[arg(long, global = true, allow_hyphen_values = true)]
    domain: Option<String>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate f at a.
    Eval {
        poly: String,
        #[arg(allow_hyphen_values = true)]
        elem: String,
    },
    /// The (S,D)-conjugate a^c.
    Conj {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// The transform x^(h(x)).
    Phi {
        poly: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Right roots, over the whole field or the given domain.
    Roots { poly: String },
    /// Left roots, over the whole field or the given domain.
    LeftRoots { poly: String },
    /// Minimal polynomial of a finite set.
    Minpoly {
        #[arg(allow_hyphen_values = true)]
        elems: Vec<String>,
    },
    /// Rank of a finite set.
    Rank {
        #[arg(allow_hyphen_values = true)]
        elems: Vec<String>,
    },
    /// A P-basis of a finite set.
    Pbasis {
        #[arg(allow_hyphen_values = true)]
        elems: Vec<String>,
    },
    /// Whether an element is P-dependent on the set.
    ClosureMember {
        #[arg(allow_hyphen_values = true)]
        member: String,
        #[arg(allow_hyphen_values = true)]
        elems: Vec<String>,
    },
    /// Decide whether f is a W-polynomial.
    IsWedderburn { poly: String },
    /// Split a monic f into linear factors.
    Split { poly: String },
    /// The dual left-root representation of a P-independent set.
    Dual {
        #[arg(allow_hyphen_values = true)]
        elems: Vec<String>,
    },
    /// Exponential space E(f, a) with its dimension over the centralizer.
    Expspace {
        poly: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Check C(f) V = S(V) diag(c) + D(V) with V invertible.
    VandermondeCheck {
        poly: String,
        #[arg(allow_hyphen_values = true)]
        roots: Vec<String>,
    },
    /// Factor criterion: W, all factors W, all quadratic factors W.
    FactorCheck { poly: String },
    /// Product criterion for f = g h.
    ProductCheck { g: String, h: String },
    /// Rank identities for unions, transforms and products.
    RankTheorems {
        #[command(subcommand)]
        which: RankCommand,
    },
    /// Least left common multiple.
    Llcm { f: String, g: String },
    /// Right greatest common divisor.
    Rgcd { f: String, g: String },
    /// Lattices of full sets and W-polynomials over a finite field.
    Lattice {
        #[command(subcommand)]
        action: LatticeCommand,
    },
    /// The metro equation a x - S(x) b - D(x) = c.
    Metro {
        #[command(subcommand)]
        action: MetroCommand,
    },
    /// Replay the classical worked examples.
    PaperExamples,
    /// Run one command per line from a file.
    Batch { file: String },
}

#[derive(Subcommand, Debug)]
enum RankCommand {
    /// rk Δ + rk Γ against rk(Δ ∪ Γ) + rk(cl Δ ∩ cl Γ); sets are comma-separated.
    Union {
        #[arg(allow_hyphen_values = true)]
        delta: String,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
    },
    /// rk Φ_h(Δ) against rk Δ - rk(cl Δ ∩ V(h)).
    Phi {
        h: String,
        #[arg(allow_hyphen_values = true)]
        delta: String,
    },
    /// rk V(gh) against rk V(g) + rk V(h).
    Product { g: String, h: String },
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    /// List the nodes of both lattices.
    Build {
        /// Emit the Hasse diagram of the full-set lattice as DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Verify the duality, modularity and the modular law for P-dependence.
    Check,
}

#[derive(Args, Debug, Clone)]
struct MetroArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
}

use clap::Args;

#[derive(Subcommand, Debug)]
enum MetroCommand {
    /// Solve the equation.
    Solve(MetroArgs),
    /// Compare solvability with (t - b^c)(t - a) being W.
    Equiv(MetroArgs),
    /// Uniqueness when a lies outside the algebraic class of b.
    Unique(MetroArgs),
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Answer {
    text: String,
    result: Value,
    certificate: Option<Value>,
    inputs: Value,
    negative: bool,
}

impl Answer {
    fn new(text: impl Into<String>, result: Value, inputs: Value) -> Self {
        Answer { text: text.into(), result, certificate: None, inputs, negative: false }
    }

    fn negative(mut self, n: bool) -> Self {
        self.negative = n;
        self
    }

    fn certificate(mut self, c: Value) -> Self {
        self.certificate = Some(c);
        self
    }
}

/// Builds a context from the `--ring`, `--S` and `--D` values.
pub fn ring_context(ring: &str, s: &str, d: &str) -> crate::Result<Arc<OreContext>> {
    let backend = match ring {
        "Q" => Backend::Rationals,
        "F2" => Backend::f2(),
        "F4" => Backend::f4(),
        "F8" => Backend::f8(),
        "Qx" => Backend::RationalFunctions { var: 'x' },
        "Qu" => Backend::RationalFunctions { var: 'u' },
        "HQ" => Backend::Quaternions,
        other => return Err(Error::InvalidContext(format!("unknown ring {other}"))),
    };
    let endo = match s {
        "id" => Endomorphism::Identity,
        "frob" => Endomorphism::Frobenius(1),
        "xsq" => Endomorphism::SquareVariable,
        other => match other.strip_prefix("frob:").map(str::parse::<u32>) {
            Some(Ok(e)) => Endomorphism::Frobenius(e),
            _ => return Err(Error::InvalidContext(format!("unknown endomorphism {other}"))),
        },
    };
    let deriv = match d {
        "zero" => Derivation::Zero,
        "ddx" | "ddu" | "d/dx" | "d/du" => Derivation::Formal,
        other => match other.strip_prefix("inner:") {
            Some(text) => Derivation::Inner(OreContext::classical(backend.clone()).elem(text)?),
            None => return Err(Error::InvalidContext(format!("unknown derivation {other}"))),
        },
    };
    Ok(Arc::new(OreContext::new(backend, endo, deriv)?))
}

fn elems(ctx: &OreContext, texts: &[String]) -> crate::Result<Vec<Elem>> {
    texts.iter().map(|t| ctx.elem(t)).collect()
}

fn comma_elems(ctx: &OreContext, text: &str) -> crate::Result<Vec<Elem>> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(|t| ctx.elem(t)).collect()
}

fn show(ctx: &OreContext, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|x| ctx.fmt(x)).collect()
}

fn joined(ctx: &OreContext, xs: &[Elem]) -> String {
    if xs.is_empty() {
        "(none)".into()
    } else {
        show(ctx, xs).join(", ")
    }
}

fn metro_json(ctx: &OreContext, r: &MetroReport) -> Value {
    let status = match &r.status {
        MetroStatus::Solution(x) => json!({"kind": "SOLUTION", "x": ctx.fmt(x)}),
        MetroStatus::NoSolution => json!({"kind": "NO_SOLUTION"}),
        MetroStatus::Undecided(why) => json!({"kind": "UNDECIDED", "reason": why}),
    };
    let uniqueness = match &r.uniqueness {
        Uniqueness::Unique => json!({"kind": "UNIQUE"}),
        Uniqueness::Multiple(x, y) => json!({"kind": "MULTIPLE", "witnesses": [ctx.fmt(x), ctx.fmt(y)]}),
        Uniqueness::Unknown => json!({"kind": "UNKNOWN"}),
    };
    json!({"status": status, "uniqueness": uniqueness, "strategy": r.strategy})
}

fn metro_text(ctx: &OreContext, r: &MetroReport) -> String {
    let status = match &r.status {
        MetroStatus::Solution(x) => format!("x = {}", ctx.fmt(x)),
        MetroStatus::NoSolution => "NO_SOLUTION".into(),
        MetroStatus::Undecided(why) => format!("UNDECIDED: {why}"),
    };
    let uniqueness = match &r.uniqueness {
        Uniqueness::Unique => "UNIQUE".to_string(),
        Uniqueness::Multiple(x, y) => format!("MULTIPLE ({}, {})", ctx.fmt(x), ctx.fmt(y)),
        Uniqueness::Unknown => "UNKNOWN".into(),
    };
    let strategy = serde_json::to_value(r.strategy).unwrap();
    format!("{status}\nuniqueness: {uniqueness}\nstrategy: {}", strategy.as_str().unwrap_or(""))
}

fn verdict_json(v: &theorems::Verdict) -> Value {
    match v {
        theorems::Verdict::True => json!(true),
        theorems::Verdict::False => json!(false),
        theorems::Verdict::Untested(why) => json!({"untested": why}),
    }
}

fn verdict_text(v: &theorems::Verdict) -> String {
    match v {
        theorems::Verdict::True => "true".into(),
        theorems::Verdict::False => "false".into(),
        theorems::Verdict::Untested(why) => format!("UNTESTED ({why})"),
    }
}

fn dispatch(cli: &Cli) -> crate::Result<Answer> {
    if let Command::PaperExamples = cli.cmd {
        let outcomes = crate::worked_examples::all();
        let text = outcomes
            .iter()
            .map(|o| format!("{} {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail))
            .collect::<Vec<_>>()
            .join("\n");
        let result: Vec<Value> =
            outcomes.iter().map(|o| json!({"name": o.name, "passed": o.passed, "detail": o.detail})).collect();
        let failed = outcomes.iter().any(|o| !o.passed);
        return Ok(Answer::new(text, json!(result), json!({})).negative(failed));
    }
    let ctx = ring_context(&cli.ring, &cli.s, &cli.d)?;
    let poly = |text: &str| parse_polynomial(text, &ctx);
    let domain = match &cli.domain {
        Some(d) => Some(comma_elems(&ctx, d)?),
        None => None,
    };
    let dom = domain.as_deref();
    Ok(match &cli.cmd {
        Command::Eval { poly: p, elem } => {
            let (f, a) = (poly(p)?, ctx.elem(elem)?);
            let v = ctx.fmt(&evaluate(&f, &a));
            Answer::new(v.clone(), json!(v), json!({"f": f.to_string(), "a": ctx.fmt(&a)}))
        }
        Command::Conj { a, c } => {
            let (a, c) = (ctx.elem(a)?, ctx.elem(c)?);
            let v = ctx.fmt(&conjugate(&ctx, &a, &c)?);
            Answer::new(v.clone(), json!(v), json!({"a": ctx.fmt(&a), "c": ctx.fmt(&c)}))
        }
        Command::Phi { poly: p, x } => {
            let (h, x) = (poly(p)?, ctx.elem(x)?);
            let v = ctx.fmt(&phi_transform(&h, &x)?);
            Answer::new(v.clone(), json!(v), json!({"h": h.to_string(), "x": ctx.fmt(&x)}))
        }
        Command::Roots { poly: p } => {
            let f = poly(p)?;
            let r = right_roots(&f, dom)?;
            Answer::new(joined(&ctx, &r), json!(show(&ctx, &r)), json!({"f": f.to_string()})).negative(r.is_empty())
        }
        Command::LeftRoots { poly: p } => {
            let f = poly(p)?;
            let r = left_roots(&f, dom)?;
            Answer::new(joined(&ctx, &r), json!(show(&ctx, &r)), json!({"f": f.to_string()})).negative(r.is_empty())
        }
        Command::Minpoly { elems: e } => {
            let xs = elems(&ctx, e)?;
            let m = minimal_polynomial(&ctx, &xs);
            Answer::new(format!("{}\nbasis: {}", m.poly, joined(&ctx, &m.basis)), json!(m.poly.to_string()), json!({"set": show(&ctx, &xs)}))
                .certificate(json!({"basis": show(&ctx, &m.basis), "rank": m.rank()}))
        }
        Command::Rank { elems: e } => {
            let xs = elems(&ctx, e)?;
            let r = minimal_polynomial(&ctx, &xs).rank();
            Answer::new(r.to_string(), json!(r), json!({"set": show(&ctx, &xs)}))
        }
        Command::Pbasis { elems: e } => {
            let xs = elems(&ctx, e)?;
            let b = minimal_polynomial(&ctx, &xs).basis;
            Answer::new(joined(&ctx, &b), json!(show(&ctx, &b)), json!({"set": show(&ctx, &xs)}))
        }
        Command::ClosureMember { member, elems: e } => {
            let (d, xs) = (ctx.elem(member)?, elems(&ctx, e)?);
            let dep = is_p_dependent(&ctx, &d, &xs);
            Answer::new(dep.to_string(), json!(dep), json!({"d": ctx.fmt(&d), "set": show(&ctx, &xs)})).negative(!dep)
        }
        Command::IsWedderburn { poly: p } => {
            let f = poly(p)?;
            let inputs = json!({"f": f.to_string()});
            match wedd::is_wedderburn_with(&f, dom) {
                Ok(WCertificate::IsW { roots, .. }) => {
                    Answer::new(format!("IS_W\nroots: {}", joined(&ctx, &roots)), json!("IS_W"), inputs)
                        .certificate(json!({"roots": show(&ctx, &roots)}))
                }
                Ok(WCertificate::NotW { v_poly, basis, .. }) => Answer::new(
                    format!("NOT_W\nf_V(f): {v_poly}\nbasis of V(f): {}", joined(&ctx, &basis)),
                    json!("NOT_W"),
                    inputs,
                )
                .certificate(json!({"v_poly": v_poly.to_string(), "basis": show(&ctx, &basis)}))
                .negative(true),
                Err(Error::Incomplete(why)) => {
                    Answer::new(format!("UNDECIDED: {why}"), json!("UNDECIDED"), inputs).certificate(json!({"reason": why}))
                }
                Err(e) => return Err(e),
            }
        }
        Command::Split { poly: p } => {
            let f = poly(p)?;
            let inputs = json!({"f": f.to_string()});
            match wedd::split_with(&f, dom)? {
                Split::Linear(cs) => {
                    Answer::new(wedd::format_factors(&ctx, &cs), json!(wedd::format_factors(&ctx, &cs)), inputs)
                        .certificate(json!({"roots": show(&ctx, &cs)}))
                }
                Split::NotSplit(why) => Answer::new(format!("NOT_SPLIT: {why}"), json!("NOT_SPLIT"), inputs)
                    .certificate(json!({"reason": why}))
                    .negative(true),
            }
        }
        Command::Dual { elems: e } => {
            let xs = elems(&ctx, e)?;
            let d = wedd::dual_representation(&ctx, &xs)?;
            let indep = match d.left_independent {
                Some(true) => "verified",
                Some(false) => "FAILED",
                None => "untested",
            };
            let lines: Vec<String> = d.duals.iter().enumerate().map(|(i, b)| format!("b_{} = {}", i + 1, ctx.fmt(b))).collect();
            Answer::new(
                format!("{}\nf = {}\nleft division: {}\nleft independence: {indep}", lines.join("\n"), d.poly, d.left_divides),
                json!(show(&ctx, &d.duals)),
                json!({"basis": show(&ctx, &xs)}),
            )
            .certificate(json!({"f": d.poly.to_string(), "left_divides": d.left_divides, "left_independent": d.left_independent}))
            .negative(!d.verified())
        }
        Command::Expspace { poly: p, a } => {
            let (f, a) = (poly(p)?, ctx.elem(a)?);
            let e = expspace::exponential_space(&f, &a)?;
            Answer::new(
                format!(
                    "dimension over C_a: {}\nbasis: {}\ncentralizer basis: {}",
                    e.dim(),
                    joined(&ctx, &e.basis),
                    joined(&ctx, &e.centralizer)
                ),
                json!(e.dim()),
                json!({"f": f.to_string(), "a": ctx.fmt(&a)}),
            )
            .certificate(json!({"basis": show(&ctx, &e.basis), "centralizer": show(&ctx, &e.centralizer), "base_basis": show(&ctx, &e.base_basis)}))
        }
        Command::VandermondeCheck { poly: p, roots } => {
            let (f, cs) = (poly(p)?, elems(&ctx, roots)?);
            let ok = wedd::diagonalization_check(&f, &cs)?;
            Answer::new(ok.to_string(), json!(ok), json!({"f": f.to_string(), "roots": show(&ctx, &cs)})).negative(!ok)
        }
        Command::FactorCheck { poly: p } => {
            let f = poly(p)?;
            let r = theorems::factor_theorem_check(&f)?;
            Answer::new(
                format!(
                    "W: {}\nsplits with all factors W: {}\nsplits with all quadratic factors W: {}\nfactors examined: {}{}\nconsistent: {}",
                    r.is_w,
                    r.splits && r.factors_w,
                    r.splits && r.quadratic_factors_w,
                    r.factors_examined,
                    if r.exhaustive { "" } else { " (one splitting chain)" },
                    r.consistent()
                ),
                json!({"is_w": r.is_w, "all_factors_w": r.splits && r.factors_w, "quadratic_factors_w": r.splits && r.quadratic_factors_w, "consistent": r.consistent()}),
                json!({"f": f.to_string()}),
            )
            .negative(!r.is_w)
        }
        Command::ProductCheck { g, h } => {
            let (g, h) = (poly(g)?, poly(h)?);
            let r = theorems::product_theorem_check(&g, &h, dom)?;
            let names = ["gh is W", "1 in Rg + hR", "V(g) in im Phi_h", "quadratics (t-a)(t-b) are W"];
            let text = names.iter().zip(&r.conditions).map(|(n, v)| format!("{n}: {}", verdict_text(v))).collect::<Vec<_>>();
            Answer::new(
                format!("{}\nconsistent: {}", text.join("\n"), r.consistent()),
                json!({"conditions": r.conditions.iter().map(verdict_json).collect::<Vec<_>>(), "consistent": r.consistent()}),
                json!({"g": g.to_string(), "h": h.to_string()}),
            )
            .negative(r.conditions[0] != theorems::Verdict::True)
        }
        Command::RankTheorems { which } => {
            let (cmp, inputs, bound) = match which {
                RankCommand::Union { delta, gamma } => {
                    let (d, g) = (comma_elems(&ctx, delta)?, comma_elems(&ctx, gamma)?);
                    (theorems::rank_union_check(&ctx, &d, &g, dom)?, json!({"delta": show(&ctx, &d), "gamma": show(&ctx, &g)}), false)
                }
                RankCommand::Phi { h, delta } => {
                    let (h, d) = (poly(h)?, comma_elems(&ctx, delta)?);
                    (theorems::phi_rank_check(&h, &d, dom)?, json!({"h": h.to_string(), "delta": show(&ctx, &d)}), false)
                }
                RankCommand::Product { g, h } => {
                    let (g, h) = (poly(g)?, poly(h)?);
                    (theorems::product_rank_bound(&g, &h, dom)?, json!({"g": g.to_string(), "h": h.to_string()}), true)
                }
            };
            let holds = if bound { cmp.lhs <= cmp.rhs } else { cmp.equal() };
            let rel = if bound { "<=" } else { "=" };
            Answer::new(
                format!("lhs = {}, rhs = {}\n{} {rel} {}: {holds}", cmp.lhs, cmp.rhs, cmp.lhs, cmp.rhs),
                json!({"lhs": cmp.lhs, "rhs": cmp.rhs, "holds": holds}),
                inputs,
            )
            .negative(!holds)
        }
        Command::Llcm { f, g } => {
            let (f, g) = (poly(f)?, poly(g)?);
            let m = f.llcm(&g)?;
            Answer::new(m.to_string(), json!(m.to_string()), json!({"f": f.to_string(), "g": g.to_string()}))
        }
        Command::Rgcd { f, g } => {
            let (f, g) = (poly(f)?, poly(g)?);
            let d = f.rgcd(&g)?;
            Answer::new(d.to_string(), json!(d.to_string()), json!({"f": f.to_string(), "g": g.to_string()}))
        }
        Command::Lattice { action } => {
            let table = ClosureTable::new(&ctx)?;
            let full = build_full_lattice_with(&ctx, &table)?;
            let w = build_w_lattice_with(&ctx, &table)?;
            match action {
                LatticeCommand::Build { dot } => {
                    let rows: Vec<Value> = (0..full.len())
                        .map(|i| json!({"set": full.label(i), "rank": full.dimension(i), "poly": w.label(i)}))
                        .collect();
                    let edges: Vec<[usize; 2]> = full.hasse_edges().into_iter().map(|(a, b)| [a, b]).collect();
                    let text = if *dot {
                        full.to_dot()
                    } else {
                        let mut lines = vec![format!("{} full sets, {} W-polynomials", full.len(), w.len())];
                        lines.extend((0..full.len()).map(|i| format!("{:>3}  rank {}  {}  {}", i, full.dimension(i), full.label(i), w.label(i))));
                        lines.join("\n")
                    };
                    Answer::new(text, json!({"nodes": rows, "edges": edges}), json!({}))
                }
                LatticeCommand::Check => {
                    let mut violations = full.verify();
                    violations.extend(w.verify());
                    let dual = duality_check(&full, &w)?;
                    violations.extend(dual.violations.clone());
                    let modular = modular_law_exhaustive(&table);
                    violations.extend(modular.violations.clone());
                    let text = format!(
                        "full sets: {}\nW-polynomials: {}\nintervals checked: {}\nmodular-law triples: {}\nviolations: {}",
                        full.len(),
                        w.len(),
                        dual.intervals_checked,
                        modular.triples,
                        violations.len()
                    );
                    let text = if violations.is_empty() { text } else { format!("{text}\n{}", violations.join("\n")) };
                    Answer::new(
                        text,
                        json!({"full_sets": full.len(), "w_polynomials": w.len(), "intervals_checked": dual.intervals_checked, "modular_law_triples": modular.triples, "violations": violations}),
                        json!({}),
                    )
                    .negative(!violations.is_empty())
                }
            }
        }
        Command::Metro { action } => {
            let args = match action {
                MetroCommand::Solve(a) | MetroCommand::Equiv(a) | MetroCommand::Unique(a) => a,
            };
            let (a, b, c) = (ctx.elem(&args.a)?, ctx.elem(&args.b)?, ctx.elem(&args.c)?);
            let inputs = json!({"a": ctx.fmt(&a), "b": ctx.fmt(&b), "c": ctx.fmt(&c)});
            match action {
                MetroCommand::Solve(_) => {
                    let r = solve_metro(&ctx, &a, &b, &c)?;
                    Answer::new(metro_text(&ctx, &r), metro_json(&ctx, &r), inputs).negative(r.status == MetroStatus::NoSolution)
                }
                MetroCommand::Equiv(_) => {
                    let r = metro_wedderburn_equivalence(&ctx, &a, &b, &c)?;
                    let opt = |v: Option<bool>| v.map(|b| b.to_string()).unwrap_or_else(|| "undecided".into());
                    let text = format!(
                        "{}\nquadratic: {}\nW: {}\nsecond root: {}\nagree: {}",
                        metro_text(&ctx, &r.metro),
                        r.quadratic,
                        opt(r.wedderburn),
                        r.second_root.as_ref().map(|y| ctx.fmt(y)).unwrap_or_else(|| "(none)".into()),
                        opt(r.agree())
                    );
                    Answer::new(
                        text,
                        json!({"metro": metro_json(&ctx, &r.metro), "quadratic": r.quadratic.to_string(), "wedderburn": r.wedderburn, "second_root": r.second_root.as_ref().map(|y| ctx.fmt(y)), "agree": r.agree()}),
                        inputs,
                    )
                    .negative(r.agree() == Some(false))
                }
                MetroCommand::Unique(_) => {
                    let r = class_algebraic_uniqueness(&ctx, &b, &a, &c)?;
                    let text = format!("{}\nquadratic: {}\nW: {}\nholds: {}", metro_text(&ctx, &r.metro), r.quadratic, r.wedderburn, r.holds());
                    Answer::new(
                        text,
                        json!({"metro": metro_json(&ctx, &r.metro), "quadratic": r.quadratic.to_string(), "wedderburn": r.wedderburn, "holds": r.holds()}),
                        inputs,
                    )
                    .negative(!r.holds())
                }
            }
        }
        Command::PaperExamples | Command::Batch { .. } => unreachable!("handled earlier"),
    })
}

fn run_batch(file: &str, json_mode: bool) -> Output {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return Output { code: 2, stdout: String::new(), stderr: format!("error: cannot read {file}: {e}\n") },
    };
    let mut code = 0;
    let mut stdout = String::new();
    let mut stderr = String::new();
    let mut docs = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(words) = shlex::split(line) else {
            stderr += &format!("line {}: unbalanced quotes\n", n + 1);
            code = 2;
            continue;
        };
        let mut argv = vec!["wedderburn".to_string()];
        argv.extend(words);
        if json_mode && !argv.iter().any(|a| a == "--json") {
            argv.push("--json".into());
        }
        let out = run(argv);
        code = code.max(out.code);
        stderr += &out.stderr;
        if json_mode {
            docs.push(serde_json::from_str::<Value>(&out.stdout).unwrap_or(Value::Null));
        } else {
            stdout += &format!("> {line}\n{}", out.stdout);
        }
    }
    if json_mode {
        stdout = serde_json::to_string_pretty(&docs).unwrap() + "\n";
    }
    Output { code, stdout, stderr }
}

/// Moves global options in front of the subcommand. Positional element lists
/// accept leading hyphens (`-i`), which would otherwise swallow a trailing
/// `--json`; element literals never start with `--`, so this is unambiguous.
fn hoist_globals(args: Vec<std::ffi::OsString>) -> Vec<std::ffi::OsString> {
    const FLAGS: [&str; 2] = ["--json", "--strict"];
    const VALUED: [&str; 4] = ["--ring", "--S", "--D", "--domain"];
    let mut globals = Vec::new();
    let mut rest = Vec::new();
    let mut it = args.into_iter();
    rest.extend(it.next());
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--" {
            rest.push(a);
            rest.extend(it.by_ref());
            break;
        }
        if FLAGS.contains(&s.as_ref()) || VALUED.iter().any(|v| s.starts_with(&format!("{v}="))) {
            globals.push(a);
        } else if VALUED.contains(&s.as_ref()) {
            globals.push(a);
            globals.extend(it.next());
        } else {
            rest.push(a);
        }
    }
    let sub = rest.split_off(rest.len().min(1));
    rest.extend(globals);
    rest.extend(sub);
    rest
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(hoist_globals(args.into_iter().map(Into::into).collect())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: msg, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: msg }
            };
        }
    };
    if let Command::Batch { file } = &cli.cmd {
        return run_batch(file, cli.json);
    }
    match dispatch(&cli) {
        Ok(ans) => {
            let code = if cli.strict && ans.negative { 1 } else { 0 };
            let stdout = if cli.json {
                let ring = ring_context(&cli.ring, &cli.s, &cli.d).map(|c| c.describe()).unwrap_or_default();
                let mut doc = json!({"ring": ring, "inputs": ans.inputs, "result": ans.result});
                if let Some(c) = ans.certificate {
                    doc["certificate"] = c;
                }
                serde_json::to_string_pretty(&doc).unwrap() + "\n"
            } else {
                ans.text + "\n"
            };
            Output { code, stdout, stderr: String::new() }
        }
        Err(e) => Output { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Entry point for the binary: runs on the process arguments and exits.
pub fn main_with_env() -> ! {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Output {
        run(std::iter::once("wedderburn").chain(args.iter().copied()))
    }

    #[test]
    fn is_wedderburn_over_quaternions() {
        let out = go(&["is-wedderburn", "--ring", "HQ", "t^2+[1]"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "IS_W\nroots: i, -i\n");
        let out = go(&["is-wedderburn", "--ring", "HQ", "--strict", "t^2-[i+j]*t+[k]"]);
        assert_eq!(out.code, 1, "{}", out.stdout);
    }

    #[test]
    fn rgcd_and_metro() {
        assert_eq!(go(&["rgcd", "--ring", "HQ", "t-[i]", "t^2+[1]"]).stdout, "t-[i]\n");
        let out = go(&["metro", "solve", "--ring", "Qu", "--D", "ddx", "--a", "u", "--b", "u", "--c", "1"]);
        assert!(out.stdout.starts_with("x = -u\n"), "{}", out.stdout);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(go(&["frobnicate"]).code, 2);
        assert_eq!(go(&["eval", "--ring", "HQ", "t+[q]", "1"]).code, 2);
        assert_eq!(go(&["eval", "--ring", "Q", "--S", "frob", "t", "1"]).code, 2);
    }

    #[test]
    fn json_document() {
        let out = go(&["is-wedderburn", "--ring", "HQ", "--json", "t^2+[1]"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["result"], "IS_W");
        assert_eq!(v["ring"], "HQ; S=id; D=zero");
        assert_eq!(v["certificate"]["roots"], json!(["i", "-i"]));
    }
}
