//! Runs every check over the standard corpus and prints the summary lines.
//!
//!     cargo run --release --example verify_all

use psigroup::harness::{run_all, Corpus, STANDARD_MAX_ORDER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Corpus::standard(STANDARD_MAX_ORDER)?;
    println!("{} groups", corpus.len());
    for r in run_all(&corpus) {
        println!("{r}");
        for c in r.counterexamples.iter().take(3) {
            println!("    {}: {}", c.label, c.detail);
        }
    }
    Ok(())
}
