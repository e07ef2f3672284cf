//! Skew polynomial arithmetic in K[t; S, D]: products obey t*b = S(b)t + D(b).

use std::sync::Arc;
use wedderburn::parse::parse_polynomial;
use wedderburn::ring::{Backend, Derivation, Endomorphism, OreContext};

fn main() -> wedderburn::Result<()> {
    // quaternions, no twist
    let hq = Arc::new(OreContext::classical(Backend::Quaternions));
    let f = parse_polynomial("t-[j]", &hq)?;
    let g = parse_polynomial("t-[i]", &hq)?;
    println!("(t-j)(t-i) = {}", &f * &g);
    println!("(t-i)(t-j) = {}", &g * &f);

    // Frobenius on F4: t*w = w^2 t
    let f4 = Arc::new(OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Zero)?);
    let t = parse_polynomial("t", &f4)?;
    let w = parse_polynomial("[w]", &f4)?;
    println!("over F4 with Frobenius: t*w = {}", &t * &w);

    // differential operators over Q(x): t*x = x t + 1
    let qx = Arc::new(OreContext::new(Backend::RationalFunctions { var: 'x' }, Endomorphism::Identity, Derivation::Formal)?);
    let t = parse_polynomial("t", &qx)?;
    let x = parse_polynomial("[x]", &qx)?;
    println!("over Q(x) with d/dx: t*x = {}", &t * &x);

    // right division with remainder, gcd and lcm
    let f = parse_polynomial("t^3+[i]*t+[1]", &hq)?;
    let g = parse_polynomial("t^2+[1]", &hq)?;
    let (q, r) = f.right_divmod(&g)?;
    println!("{f} = ({q})({g}) + {r}");
    let (d, m) = parse_polynomial("(t-[j])(t-[i])", &hq)?.rgcd_llcm(&parse_polynomial("t^2+[1]", &hq)?)?;
    println!("rgcd = {d}, llcm = {m}");
    Ok(())
}
