//! The bound psi(G) <= 7/11 psi(C_n) for non-cyclic G is attained by
//! C_2k x C_2 with k odd. Prints that family and the largest ratio seen in
//! the standard corpus.
//!
//!     cargo run --release --example sharpness

use psigroup::analysis::psi_report;
use psigroup::arith::ratio;
use psigroup::families::prop2_group;
use psigroup::harness::{Corpus, STANDARD_MAX_ORDER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bound = ratio(7, 11);
    for k in (1..=15).step_by(2) {
        let r = psi_report(&prop2_group(k)?);
        let mark = if r.ratio == bound { "=" } else { "<" };
        println!(
            "{:<8} psi {:>5} / {:>5} = {} {mark} 7/11",
            r.label, r.psi, r.psi_cn, r.ratio
        );
    }

    let corpus = Corpus::standard(STANDARD_MAX_ORDER)?;
    let best = corpus
        .entries()
        .iter()
        .filter(|e| !e.group().is_cyclic())
        .filter(|e| e.report().ratio < bound)
        .max_by(|a, b| a.report().ratio.cmp(&b.report().ratio))
        .expect("corpus has non-cyclic groups");
    println!(
        "largest ratio below 7/11 among {} groups: {} ({})",
        corpus.len(),
        best.label(),
        best.report().ratio
    );
    Ok(())
}
