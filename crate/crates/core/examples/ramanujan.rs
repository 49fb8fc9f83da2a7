//! Partial products of (p^2 + 1) / (p^2 - 1) over the primes, approaching 5/2,
//! with the gap computed exactly.
//!
//!     cargo run --release --example ramanujan

use num_traits::ToPrimitive;
use psigroup::arith::{ramanujan_partial, ratio, PrimeProduct};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for s in [1, 2, 5, 10, 100, 1000] {
        let v = ramanujan_partial(s)?;
        println!("s = {s:>5}: {:.8}", v.to_f64().unwrap_or(f64::NAN));
    }
    let all = PrimeProduct::ramanujan_below(1_000_000);
    let gap = ratio(5, 2) - all.to_rational();
    println!(
        "{} primes below 10^6: 5/2 - product = {:.3e}",
        all.terms,
        gap.to_f64().unwrap_or(f64::NAN)
    );
    Ok(())
}
