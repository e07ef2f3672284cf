//! Reading and printing elements and polynomials.

use std::sync::Arc;
use wedderburn::cli::ring_context;
use wedderburn::parse::{parse_element, parse_polynomial};
use wedderburn::ring::{Backend, OreContext};

fn main() -> wedderburn::Result<()> {
    let hq = Arc::new(OreContext::classical(Backend::Quaternions));
    let a = parse_element("1/2-3i+k", &hq)?;
    println!("{}", hq.fmt(&a));
    // coefficients in brackets, juxtaposition is multiplication
    let f = parse_polynomial("(t-[j])(t-[i]) + [2]t^2", &hq)?;
    println!("{f}");
    assert_eq!(parse_polynomial(&f.to_string(), &hq)?, f);
    match parse_polynomial("(t-[1]", &hq) {
        Err(e) => println!("error: {e}"),
        Ok(p) => println!("unexpected {p}"),
    }

    // contexts by name, as on the command line
    let ctx = ring_context("Qx", "xsq", "zero")?;
    println!("{}", ctx.describe());
    let g = parse_polynomial("t*[x+1]", &ctx)?;
    println!("t*(x+1) = {g}");
    Ok(())
}
