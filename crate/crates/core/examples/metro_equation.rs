//! The metro equation a x - S(x) b - D(x) = c and its link to the quadratic
//! (t - b^c)(t - a).

use std::sync::Arc;
use wedderburn::metro::{metro_lhs, metro_wedderburn_equivalence, solve_metro, MetroStatus};
use wedderburn::ring::{Backend, Derivation, Endomorphism, OreContext};

fn main() -> wedderburn::Result<()> {
    let hq = Arc::new(OreContext::classical(Backend::Quaternions));
    let (a, b, c) = (hq.elem("i")?, hq.elem("2")?, hq.elem("1")?);
    let rep = solve_metro(&hq, &a, &b, &c)?;
    if let MetroStatus::Solution(x) = &rep.status {
        println!("i x - x 2 = 1: x = {} (check {})", hq.fmt(x), hq.fmt(&metro_lhs(&hq, &a, &b, x)));
    }
    println!("strategy {:?}, uniqueness {:?}", rep.strategy, rep.uniqueness);

    // same class: no solution iff the quadratic fails to be W
    let (a, b, c) = (hq.elem("i")?, hq.elem("i")?, hq.elem("j")?);
    let eq = metro_wedderburn_equivalence(&hq, &a, &b, &c)?;
    let x = eq.metro.solution().map(|x| hq.fmt(x));
    println!("a = b = i, c = j: quadratic {}, W {:?}, x = {x:?}, agree {:?}", eq.quadratic, eq.wedderburn, eq.agree());

    // a differential equation over Q(u): u x - x u - x' = 1
    let qu = Arc::new(OreContext::new(Backend::RationalFunctions { var: 'u' }, Endomorphism::Identity, Derivation::Formal)?);
    let (a, c) = (qu.elem("u")?, qu.elem("1")?);
    let rep = solve_metro(&qu, &a, &a, &c)?;
    println!("Q(u): {:?} via {:?}", rep.solution().map(|x| qu.fmt(x)), rep.strategy);
    Ok(())
}
