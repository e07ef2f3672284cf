//! The lattice of full algebraic sets and the dual lattice of W-polynomials
//! over a small finite field.

use std::sync::Arc;
use wedderburn::lattice::{build_full_lattice, build_w_lattice, duality_check};
use wedderburn::ring::{Backend, Derivation, Endomorphism, OreContext};

fn main() -> wedderburn::Result<()> {
    let f4 = Arc::new(OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Zero)?);
    let full = build_full_lattice(&f4)?;
    let w = build_w_lattice(&f4)?;
    println!("{} full sets, {} monic W-polynomials", full.len(), w.len());
    for n in 0..full.len() {
        println!("  {} (rank {})", full.label(n), full.dimension(n));
    }
    let report = duality_check(&full, &w)?;
    println!("anti-isomorphic: {} ({} intervals checked)", report.ok(), report.intervals_checked);
    println!("modularity violations: {}", full.modularity_violations().len());
    println!("{}", w.to_dot());
    Ok(())
}
