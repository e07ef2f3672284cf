//! Deciding whether a polynomial is Wedderburn, with a checkable certificate,
//! and splitting W-polynomials into linear factors.

use std::sync::Arc;
use wedderburn::parse::parse_polynomial;
use wedderburn::ring::{Backend, Derivation, Elem, Endomorphism, OreContext};
use wedderburn::wedd::theorems::finite_verdicts;
use wedderburn::wedd::{diagonalization_check, format_factors, is_wedderburn, split, Split, WCertificate};

fn main() -> wedderburn::Result<()> {
    let hq = Arc::new(OreContext::classical(Backend::Quaternions));
    for text in ["t^2+[1]", "(t-[j])(t-[i])", "t^3-[2]*t^2+[2]*t"] {
        let f = parse_polynomial(text, &hq)?;
        let cert = is_wedderburn(&f)?;
        match &cert {
            WCertificate::IsW { roots, .. } => {
                let rs: Vec<String> = roots.iter().map(|r| hq.fmt(r)).collect();
                println!("{f}: W, roots {}", rs.join(", "));
                println!("  companion diagonalizes: {}", diagonalization_check(&f, roots)?);
            }
            WCertificate::NotW { v_poly, .. } => println!("{f}: not W, f_V(f) = {v_poly}"),
        }
        assert!(cert.verify());
        if let Split::Linear(rs) = split(&f)? {
            println!("  {f} = {}", format_factors(&hq, &rs));
        }
    }

    // over a finite field several independent tests must agree
    let f8 = Arc::new(OreContext::new(Backend::f8(), Endomorphism::Frobenius(1), Derivation::Inner(Elem::Gf(2)))?);
    let f = parse_polynomial("t^3+[w]*t+[1]", &f8)?;
    let v = finite_verdicts(&f)?;
    println!("F8: {f} W = {}, all tests agree: {}", v.is_w, v.agree());
    Ok(())
}
