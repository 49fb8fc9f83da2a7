//! The invariant `psi(G)`, exact comparisons against `psi(C_n)`, and the
//! structural data the solvability bounds refer to.
//!
//! All comparisons are exact. Thresholds such as `psi(C_n) / (2(q-1))` are
//! built as [`Rational`]s and compared with `psi(G)` directly, so equality
//! cases are reported as equalities rather than lost to rounding.

mod semidirect;
mod structure;

pub(crate) use semidirect::lemma_parameters;
pub use semidirect::{psi_semidirect_formula, semidirect_lemma_check, SemidirectCheck};
pub(crate) use structure::structure_report_with;
pub use structure::{structure_report, StructureReport, Theorem6Case};

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::{self, factorize, Factorization, Rational};
use crate::permgroup::{GroupError, PermGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("the bound only applies to non-cyclic groups")]
    CyclicGroup,
    #[error("the bound needs a group of order at least 2")]
    TrivialGroup,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

/// Sum of the element orders of `g`.
pub fn psi(g: &PermGroup) -> u64 {
    g.element_orders().iter().sum()
}

pub(crate) fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `psi(G)` next to `psi(C_n)` for the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiReport {
    pub label: String,
    pub n: u64,
    pub psi: u64,
    pub psi_cn: u128,
    /// `psi / psi_cn`, reduced.
    pub ratio: Rational,
    /// Smallest prime divisor of `n`; `None` for the trivial group.
    pub q: Option<u64>,
    /// Largest prime divisor of `n`; `None` for the trivial group.
    pub p: Option<u64>,
    pub cyclic: bool,
}

impl PsiReport {
    pub fn factorization(&self) -> Factorization {
        factorize(self.n).expect("group order is positive")
    }
}

pub fn psi_report(g: &PermGroup) -> PsiReport {
    let n = g.order();
    let f = factorize(n).expect("group order is positive");
    let psi_g = psi(g);
    let psi_cn = arith::psi_cyclic(n).expect("group order is positive");
    PsiReport {
        label: g.label().unwrap_or("").to_string(),
        n,
        psi: psi_g,
        psi_cn,
        ratio: Rational::new(psi_g.into(), psi_cn.into()),
        q: f.smallest_prime(),
        p: f.largest_prime(),
        cyclic: g.is_cyclic(),
    }
}

/// Outcome of the elementary bound `psi(G) <= (n-1) n / q + 1 < n^2 / q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop5Check {
    pub bound: Rational,
    pub holds: bool,
    pub equality: bool,
    /// `psi(G) < n^2 / q`
    pub outer_holds: bool,
}

pub fn prop5_bound(g: &PermGroup) -> Result<Prop5Check, AnalysisError> {
    let n = g.order();
    if n < 2 {
        return Err(AnalysisError::TrivialGroup);
    }
    if g.is_cyclic() {
        return Err(AnalysisError::CyclicGroup);
    }
    let q = factorize(n).expect("n >= 2").smallest_prime().unwrap();
    let n_big = BigInt::from(n);
    let bound = Rational::new((&n_big - 1) * &n_big, q.into()) + int(1);
    let outer = Rational::new(&n_big * &n_big, q.into());
    let value = int(psi(g));
    Ok(Prop5Check {
        holds: value <= bound,
        equality: value == bound,
        outer_holds: value < outer,
        bound,
    })
}

/// `psi(G)` against `psi(P) psi(G/P)` for a cyclic normal Sylow subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop210Check {
    pub psi_g: u64,
    /// `psi(P) * psi(G/P)`
    pub product: u64,
    pub inequality_holds: bool,
    pub equality: bool,
    pub central: bool,
}

pub fn prop210_check(g: &PermGroup, p: u64) -> Result<Prop210Check, AnalysisError> {
    let sylow = g.sylow_subgroup(p)?;
    if !sylow.is_cyclic() {
        return Err(AnalysisError::PreconditionFailed(format!(
            "Sylow {p}-subgroup is not cyclic"
        )));
    }
    if !g.is_normal(&sylow)? {
        return Err(AnalysisError::PreconditionFailed(format!(
            "Sylow {p}-subgroup is not normal"
        )));
    }
    let quotient = g.quotient_group(&sylow)?;
    let psi_g = psi(g);
    let product = psi(&sylow) * psi(&quotient);
    Ok(Prop210Check {
        psi_g,
        product,
        inequality_holds: psi_g <= product,
        equality: psi_g == product,
        central: g.is_central(&sylow)?,
    })
}

/// Thresholds of the form `c * psi(C_n)` or `c * n * phi(n)` used as
/// hypotheses, all exact.
pub mod thresholds {
    use super::*;

    /// `psi(C_n) / (2 (q - 1))`
    pub fn theorem6(r: &PsiReport) -> Option<Rational> {
        r.q.map(|q| Rational::new(r.psi_cn.into(), BigInt::from(2 * (q - 1))))
    }

    /// `psi(C_n) / q`
    pub fn corollary7(r: &PsiReport) -> Option<Rational> {
        r.q.map(|q| Rational::new(r.psi_cn.into(), q.into()))
    }

    /// `psi(C_n) / (q + 1)`
    pub fn corollary8(r: &PsiReport) -> Option<Rational> {
        r.q.map(|q| Rational::new(r.psi_cn.into(), (q + 1).into()))
    }

    /// `(3/5) n phi(n)`
    pub fn theorem10(r: &PsiReport) -> Rational {
        let phi = arith::euler_phi(r.n).expect("n >= 1");
        Rational::new(BigInt::from(3) * r.n * phi, 5.into())
    }

    /// `n phi(n) / q`
    pub fn theorem11(r: &PsiReport) -> Option<Rational> {
        let phi = arith::euler_phi(r.n).expect("n >= 1");
        r.q.map(|q| Rational::new(BigInt::from(r.n) * phi, q.into()))
    }

    /// `n phi(n) / 5`, the contrast value quoted for `A_5`.
    pub fn one_fifth_n_phi(r: &PsiReport) -> Rational {
        let phi = arith::euler_phi(r.n).expect("n >= 1");
        Rational::new(BigInt::from(r.n) * phi, 5.into())
    }

    /// Whether `psi(G) >= threshold`.
    pub fn meets(r: &PsiReport, threshold: &Rational) -> bool {
        int(r.psi) >= *threshold
    }
}
