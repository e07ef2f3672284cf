//! Roots of quaternion polynomials by conjugacy class, exponential spaces,
//! and central quadratics.

use std::sync::Arc;
use wedderburn::parse::parse_polynomial;
use wedderburn::ring::{Backend, OreContext};
use wedderburn::wedd::classes::{class_polynomial, root_classes, ClassRoots};
use wedderburn::wedd::expspace::exponential_space;

fn main() -> wedderburn::Result<()> {
    let hq = Arc::new(OreContext::classical(Backend::Quaternions));
    let f = parse_polynomial("(t^2+[1])(t-[1+j])", &hq)?;
    println!("f = {f}");
    for class in root_classes(&f)? {
        let kind = match &class.roots {
            ClassRoots::Central => "central root".to_string(),
            ClassRoots::Whole => "whole class".to_string(),
            ClassRoots::Isolated(r) => format!("only {}", hq.fmt(r)),
        };
        println!("  class of {}: {kind}", hq.fmt(&class.rep));
    }

    let i = hq.elem("i")?;
    let e = exponential_space(&f, &i)?;
    println!("E(f, i) has dimension {} over C_i", e.dim());

    // every non-central quaternion's class polynomial is a W quadratic
    let a = hq.elem("1+2i-j+3k")?;
    let q = class_polynomial(&hq, &a).expect("classical quaternions");
    println!("class polynomial of {}: {q}", hq.fmt(&a));
    Ok(())
}
