//! psi for a handful of groups, next to psi of the cyclic group of the
//! same order.
//!
//!     cargo run --example psi_values

use psigroup::analysis::psi_report;
use psigroup::families::{abelian, alternating, dicyclic, dihedral, symmetric};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let groups = [
        symmetric(3)?,
        dihedral(8)?,
        dicyclic(8)?,
        abelian(&[2, 2, 2])?,
        symmetric(4)?,
        alternating(5)?,
    ];
    println!(
        "{:<10} {:>5} {:>6} {:>8}  ratio",
        "group", "n", "psi", "psi(C_n)"
    );
    for g in &groups {
        let r = psi_report(g);
        println!(
            "{:<10} {:>5} {:>6} {:>8}  {}",
            r.label, r.n, r.psi, r.psi_cn, r.ratio
        );
    }
    Ok(())
}
