use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{first_primes, is_prime, primes_below, ratio, ArithError, Rational};

/// An unreduced product of rationals over a list of primes.
///
/// Reducing a product over tens of thousands of primes costs far more than
/// the product itself, so comparisons are done by cross-multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeProduct {
    pub numerator: BigUint,
    pub denominator: BigUint,
    /// Number of primes that contributed a factor.
    pub terms: usize,
}

impl PrimeProduct {
    /// `prod (q^2 + 1) / (q^2 - 1)` over `primes`.
    pub fn ramanujan(primes: &[u64]) -> Self {
        let (numerator, denominator) = product_tree(primes, &|q| {
            let q2 = u128::from(q) * u128::from(q);
            (q2 + 1, q2 - 1)
        });
        PrimeProduct {
            numerator,
            denominator,
            terms: primes.len(),
        }
    }

    /// The Ramanujan partial product over every prime `< limit`.
    pub fn ramanujan_below(limit: u64) -> Self {
        Self::ramanujan(&primes_below(limit))
    }

    /// Exact comparison against `r` (which must be non-negative).
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let (rn, rd) = (r.numer(), r.denom());
        let rn = rn.to_biguint().expect("non-negative comparand");
        let rd = rd.to_biguint().expect("positive denominator");
        (&self.numerator * rd).cmp(&(&self.denominator * rn))
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(
            BigInt::from(self.numerator.clone()),
            BigInt::from(self.denominator.clone()),
        )
    }
}

fn product_tree(primes: &[u64], factor: &dyn Fn(u64) -> (u128, u128)) -> (BigUint, BigUint) {
    match primes.len() {
        0 => (BigUint::one(), BigUint::one()),
        1 => {
            let (n, d) = factor(primes[0]);
            (BigUint::from(n), BigUint::from(d))
        }
        len => {
            let (l, r) = primes.split_at(len / 2);
            let (ln, ld) = product_tree(l, factor);
            let (rn, rd) = product_tree(r, factor);
            (ln * rn, ld * rd)
        }
    }
}

/// Partial Ramanujan product `prod_{i<=s} (q_i^2+1)/(q_i^2-1)` over the
/// first `s` primes, reduced.
pub fn ramanujan_partial(s: usize) -> Result<Rational, ArithError> {
    if s == 0 {
        return Err(ArithError::Zero);
    }
    Ok(PrimeProduct::ramanujan(&first_primes(s)).to_rational())
}

/// `prod (p^2-1)/(p^2+1)` over a strictly ascending prime list, and whether
/// it exceeds `5/6`.
pub fn lemma28_product(primes: &[u64]) -> Result<(Rational, bool), ArithError> {
    if primes.is_empty() {
        return Err(ArithError::Empty);
    }
    if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(ArithError::NotPrime(bad));
    }
    if primes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ArithError::NotAscending);
    }
    let (n, d) = product_tree(primes, &|p| {
        let p2 = u128::from(p) * u128::from(p);
        (p2 - 1, p2 + 1)
    });
    let value = Rational::new(BigInt::from(n), BigInt::from(d));
    let holds = value > ratio(5, 6);
    Ok((value, holds))
}
