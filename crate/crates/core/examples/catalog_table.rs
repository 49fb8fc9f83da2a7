//! Writes the psi table of the small-group catalog as CSV to stdout, or
//! JSON with `--json`.
//!
//!     cargo run --example catalog_table -- --json

use psigroup::harness::{write_table, Corpus, TableFormat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let json = std::env::args().any(|a| a == "--json");
    let format = if json {
        TableFormat::Json
    } else {
        TableFormat::Csv
    };
    let corpus = Corpus::builtin(16)?;
    write_table(&corpus, format, std::io::stdout().lock())?;
    Ok(())
}
