//! psi of C_m : C_k against the product formula, with the element-wise
//! facts it rests on.
//!
//!     cargo run --example semidirect_formula

use psigroup::analysis::semidirect_lemma_check;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, k, e) in [
        (7, 3, 2),
        (5, 4, 2),
        (19, 9, 4),
        (13, 6, 4),
        (11, 5, 3),
        (7, 6, 2),
    ] {
        let c = semidirect_lemma_check(m, k, e)?;
        println!(
            "{:<10} psi {:>4}  formula {:>4}  |C_F(P)| {}  fixed-point-free {}  all hold {}",
            c.label,
            c.psi_g,
            c.formula,
            c.z_order,
            c.trivial_or_fixed_point_free,
            c.all_hold()
        );
    }
    Ok(())
}
