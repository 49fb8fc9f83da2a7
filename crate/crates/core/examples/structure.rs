//! Solvability data and the Sylow case split for a group given on the
//! command line as a family name and parameters.
//!
//!     cargo run --example structure -- semidirect 7 3 2
//!     cargo run --example structure -- alternating 5

use psigroup::analysis::{psi_report, structure_report, thresholds};
use psigroup::harness::build_family;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (name, params) = match args.split_first() {
        Some((n, p)) => (n.as_str(), p.to_vec()),
        None => ("semidirect", vec!["7".into(), "3".into(), "2".into()]),
    };
    let g = build_family(name, &params)?;
    let r = psi_report(&g);
    let s = structure_report(&g);

    println!("{} of order {}, psi = {}", r.label, r.n, r.psi);
    println!("derived series orders: {:?}", s.derived_orders);
    println!(
        "solvable: {}, |Z| = {}, G'' central: {}",
        s.solvable, s.center_order, s.second_derived_central
    );
    if let Some(t) = thresholds::theorem6(&r) {
        println!("psi >= {t}: {}", thresholds::meets(&r, &t));
    }
    println!(
        "Sylow p cyclic {}, normal {}; Sylow q cyclic {}",
        s.sylow_p_cyclic, s.sylow_p_normal, s.sylow_q_cyclic
    );
    println!("case: {}", s.theorem6_case);
    Ok(())
}
