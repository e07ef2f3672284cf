//! Evaluation at a point, twisted conjugation and the product formula.

use std::sync::Arc;
use wedderburn::eval::{left_roots, phi_transform, power_functions, right_roots};
use wedderburn::parse::parse_polynomial;
use wedderburn::ring::{Backend, Derivation, Elem, Endomorphism, OreContext};

fn main() -> wedderburn::Result<()> {
    let hq = Arc::new(OreContext::classical(Backend::Quaternions));
    let j = hq.elem("j")?;
    let f = parse_polynomial("(t-[j])(t-[i])", &hq)?;
    println!("f = {f}");
    println!("f(j) = {}", hq.fmt(&f.eval(&j)));

    // a^c = S(c) a c^-1 + D(c) c^-1
    let i = hq.elem("i")?;
    println!("i^j = {}", hq.fmt(&hq.conjugate(&i, &j)?));

    // (gh)(a) = g(a^h(a)) h(a) whenever h(a) != 0
    let g = parse_polynomial("t-[j]", &hq)?;
    let h = parse_polynomial("t-[i]", &hq)?;
    let a = hq.elem("1+k")?;
    let moved = phi_transform(&h, &a)?;
    let rhs = hq.mul(&g.eval(&moved), &h.eval(&a));
    println!("(gh)(1+k) = {}  g(a^h(a)) h(a) = {}", hq.fmt(&f.eval(&a)), hq.fmt(&rhs));

    // power functions N_i on F8 with a twist and an inner derivation
    let f8 = Arc::new(OreContext::new(Backend::f8(), Endomorphism::Frobenius(1), Derivation::Inner(Elem::Gf(2)))?);
    let w = f8.elem("w")?;
    let ns: Vec<String> = power_functions(&f8, &w, 4).iter().map(|n| f8.fmt(n)).collect();
    println!("N_0..N_4(w) over F8 = {}", ns.join(", "));

    let q = parse_polynomial("t^2+[w]", &f8)?;
    let fmt = |xs: Vec<Elem>| xs.iter().map(|x| f8.fmt(x)).collect::<Vec<_>>().join(", ");
    println!("right roots of {q}: [{}]", fmt(right_roots(&q, None)?));
    println!("left roots of {q}: [{}]", fmt(left_roots(&q, None)?));
    Ok(())
}
