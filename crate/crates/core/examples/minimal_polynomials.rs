//! Algebraic sets: minimal polynomials, rank, P-bases and closure.

use std::sync::Arc;
use wedderburn::algset::{closure, is_p_independent, minimal_polynomial, rank};
use wedderburn::ring::{Backend, Derivation, Elem, Endomorphism, OreContext};

fn show(ctx: &OreContext, xs: &[Elem]) -> String {
    xs.iter().map(|x| ctx.fmt(x)).collect::<Vec<_>>().join(", ")
}

fn main() -> wedderburn::Result<()> {
    let hq = Arc::new(OreContext::classical(Backend::Quaternions));
    let gens: Vec<Elem> = ["i", "j", "k"].iter().map(|s| hq.elem(s)).collect::<Result<_, _>>()?;
    let m = minimal_polynomial(&hq, &gens);
    println!("f_{{i,j,k}} = {}  rank {}  P-basis {}", m.poly, m.rank(), show(&hq, &m.basis));
    println!("{{i, j}} independent: {}", is_p_independent(&hq, &gens[..2]));

    // closure is only enumerable over a finite field
    let f4 = Arc::new(OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Zero)?);
    let pair = vec![f4.elem("1")?, f4.elem("w")?];
    let cl = closure(&f4, &pair, None)?;
    println!("over F4: rank {} closure {{{}}}", rank(&f4, &pair), show(&f4, &cl));
    println!("f_closure = {}", minimal_polynomial(&f4, &cl).poly);
    Ok(())
}
