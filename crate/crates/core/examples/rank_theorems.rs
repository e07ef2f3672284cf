//! Rank of zero sets under unions, Phi-transforms and products, and the
//! product theorem for W-polynomials.

use std::sync::Arc;
use wedderburn::parse::parse_polynomial;
use wedderburn::ring::{Backend, Derivation, Endomorphism, OreContext};
use wedderburn::wedd::theorems::{phi_rank_check, product_rank_bound, product_theorem_check, rank_union_check};

fn main() -> wedderburn::Result<()> {
    let hq = Arc::new(OreContext::classical(Backend::Quaternions));
    let (i, j, k) = (hq.elem("i")?, hq.elem("j")?, hq.elem("k")?);

    let u = rank_union_check(&hq, &[i.clone(), j.clone()], &[k.clone()], None)?;
    println!("rank of union vs formula: {} = {}", u.lhs, u.rhs);

    let h = parse_polynomial("t-[i]", &hq)?;
    let p = phi_rank_check(&h, &[j, k], None)?;
    println!("rank after Phi_(t-i): {} = {}", p.lhs, p.rhs);

    let g = parse_polynomial("t-[j]", &hq)?;
    let b = product_rank_bound(&g, &h, None)?;
    println!("rk V(gh) <= rk V(g) + rk V(h): {} <= {}", b.lhs, b.rhs);

    // on F4 every condition of the product theorem is decidable
    let f4 = Arc::new(OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Zero)?);
    let g = parse_polynomial("t^2+[1]", &f4)?;
    let h = parse_polynomial("t-[w]", &f4)?;
    let r = product_theorem_check(&g, &h, None)?;
    println!("F4: gh = {}, conditions {:?}, consistent {}", r.product, r.conditions, r.consistent());
    Ok(())
}
