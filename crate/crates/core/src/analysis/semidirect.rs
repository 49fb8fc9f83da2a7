use num_integer::Integer;

use super::{psi, AnalysisError};
use crate::arith::factorize;
use crate::families::semidirect_cyclic;

/// `psi(P) psi(Z) + |P| psi(F \ Z)` with `psi(F \ Z) = psi(F) - psi(Z)`.
pub fn psi_semidirect_formula(psi_p: u64, p_order: u64, psi_f: u64, psi_z: u64) -> u64 {
    psi_p * psi_z + p_order * (psi_f - psi_z)
}

/// Element-wise verification of the structure of `C_m ⋊ C_k` for a cyclic
/// `p`-group `P = C_m` and a complement `F = C_k` of coprime order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectCheck {
    pub label: String,
    pub psi_g: u64,
    pub psi_p: u64,
    pub psi_f: u64,
    pub psi_z: u64,
    pub p_order: u64,
    /// `|C_F(P)|`
    pub z_order: u64,
    pub formula: u64,
    /// Every element of `F` centralizes `P` or fixes only the identity.
    pub trivial_or_fixed_point_free: bool,
    /// `o(ux) = o(u) o(x)` for `u` in `P`, `x` in `C_F(P)`.
    pub central_orders_multiply: bool,
    /// `o(ux) = o(x)` for `u` in `P`, `x` in `F \ C_F(P)`.
    pub noncentral_orders_preserved: bool,
    /// `psi(G) < psi(P) psi(Z) + |P| psi(F)`
    pub strict_upper: bool,
}

impl SemidirectCheck {
    pub fn all_hold(&self) -> bool {
        self.formula == self.psi_g
            && self.trivial_or_fixed_point_free
            && self.central_orders_multiply
            && self.noncentral_orders_preserved
            && self.strict_upper
    }
}

/// Builds `semidirect_cyclic(m, k, e)` and checks the decomposition of
/// `psi` element by element. `m` must be a prime power coprime to `k > 1`.
pub fn semidirect_lemma_check(m: u64, k: u64, e: i64) -> Result<SemidirectCheck, AnalysisError> {
    let f = factorize(m).map_err(|err| AnalysisError::PreconditionFailed(err.to_string()))?;
    if !f.is_prime_power() {
        return Err(AnalysisError::PreconditionFailed(format!(
            "{m} is not a prime power"
        )));
    }
    let p = f.factors()[0].0;
    if k < 2 || k.gcd(&p) != 1 {
        return Err(AnalysisError::PreconditionFailed(format!(
            "complement order {k} must exceed 1 and be prime to {p}"
        )));
    }
    let g = semidirect_cyclic(m, k, e)?;
    let (a, x) = (&g.generators()[0], &g.generators()[1]);
    let big_p = g.subgroup_generated(std::slice::from_ref(a))?;
    let big_f = g.subgroup_generated(std::slice::from_ref(x))?;
    let z_elems: Vec<_> = big_f
        .elements()
        .iter()
        .filter(|y| y.mul(a) == a.mul(y))
        .cloned()
        .collect();
    let big_z = big_f.subgroup_generated(&z_elems)?;
    debug_assert_eq!(big_z.order() as usize, z_elems.len());

    let trivial_or_fixed_point_free = big_f.elements().iter().all(|y| {
        let yi = y.inverse();
        let fixed = big_p
            .elements()
            .iter()
            .filter(|u| y.mul(u).mul(&yi) == **u)
            .count() as u64;
        fixed == 1 || fixed == big_p.order()
    });
    let mut central_orders_multiply = true;
    let mut noncentral_orders_preserved = true;
    for y in big_f.elements() {
        let central = big_z.contains(y);
        for u in big_p.elements() {
            let ord = u.mul(y).order();
            if central {
                central_orders_multiply &= ord == u.order() * y.order();
            } else {
                noncentral_orders_preserved &= ord == y.order();
            }
        }
    }

    let (psi_g, psi_p, psi_f, psi_z) = (psi(&g), psi(&big_p), psi(&big_f), psi(&big_z));
    let formula = psi_semidirect_formula(psi_p, big_p.order(), psi_f, psi_z);
    Ok(SemidirectCheck {
        label: g.label().unwrap_or("").to_string(),
        psi_g,
        psi_p,
        psi_f,
        psi_z,
        p_order: big_p.order(),
        z_order: big_z.order(),
        formula,
        trivial_or_fixed_point_free,
        central_orders_multiply,
        noncentral_orders_preserved,
        strict_upper: psi_g < psi_p * psi_z + big_p.order() * psi_f,
    })
}

/// Every `(m, k, e)` with `m <= max_m` a prime power, `2 <= k <= max_k`
/// prime to `m`, and `e` ranging over the residues mod `m` of
/// multiplicative order dividing `k`.
pub(crate) fn lemma_parameters(max_m: u64, max_k: u64) -> Vec<(u64, u64, i64)> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        let f = factorize(m).unwrap();
        if !f.is_prime_power() {
            continue;
        }
        for k in 2..=max_k {
            if k.gcd(&m) != 1 {
                continue;
            }
            for e in 1..m {
                if e.gcd(&m) == 1 && pow_mod(e, k, m) == 1 {
                    out.push((m, k, e as i64));
                }
            }
        }
    }
    out
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let (mut acc, mut b) = (1 % m, b % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}
