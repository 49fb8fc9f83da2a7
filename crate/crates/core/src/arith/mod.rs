//! Exact integer and rational arithmetic: factorization, Euler's totient,
//! the closed form for the sum of element orders of a cyclic group, and
//! the prime products used in the solvability bounds.

mod primes;
mod products;

pub use primes::{first_primes, is_prime, primes_below};
pub use products::{lemma28_product, ramanujan_partial, PrimeProduct};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// Largest input accepted by [`factorize`].
pub const MAX_INPUT: u64 = i64::MAX as u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("argument must be positive")]
    Zero,
    #[error("argument {n} is below the minimum {min}")]
    TooSmall { n: u64, min: u64 },
    #[error("argument {0} exceeds 2^63-1")]
    TooLarge(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime list must be strictly ascending")]
    NotAscending,
    #[error("prime list must be non-empty")]
    Empty,
}

/// Builds the exact rational `num/den`.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Prime-power decomposition `n = p_1^a_1 ... p_t^a_t` with `p_1 < ... < p_t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs, ascending by prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Smallest prime divisor, `None` for `n = 1`.
    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    /// Largest prime divisor, `None` for `n = 1`.
    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The largest power of `p` dividing `n`.
    pub fn p_part(&self, p: u64) -> u64 {
        p.pow(self.exponent_of(p))
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }
}

/// Factors `n` by trial division up to `sqrt(n)`.
pub fn factorize(n: u64) -> Result<Factorization, ArithError> {
    if n == 0 {
        return Err(ArithError::Zero);
    }
    if n > MAX_INPUT {
        return Err(ArithError::TooLarge(n));
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut push = |p: u64, m: &mut u64| {
        let mut e = 0;
        while (*m).is_multiple_of(p) {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut m);
    push(3, &mut m);
    // 6k +- 1 wheel
    let mut d = 5u64;
    while d.saturating_mul(d) <= m {
        push(d, &mut m);
        push(d + 2, &mut m);
        d += 6;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

/// Euler's totient via `n * prod (1 - 1/p)`.
pub fn euler_phi(n: u64) -> Result<u64, ArithError> {
    Ok(phi_of(&factorize(n)?))
}

pub(crate) fn phi_of(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Lower bound `(q-1) n / p` on `phi(n)`, with `q`, `p` the smallest and
/// largest prime divisors of `n`, and whether `phi(n)` meets it.
pub fn phi_lower_bound(n: u64) -> Result<(Rational, bool), ArithError> {
    if n < 2 {
        return Err(ArithError::TooSmall { n, min: 2 });
    }
    let f = factorize(n)?;
    let (q, p) = (f.smallest_prime().unwrap(), f.largest_prime().unwrap());
    let bound = ratio(u128::from(q - 1) * u128::from(n), p);
    let phi = Rational::from_integer(BigInt::from(phi_of(&f)));
    let holds = phi >= bound;
    Ok((bound, holds))
}

/// Sum of element orders of the cyclic group of order `n`:
/// `prod (p^(2r+1) + 1) / (p + 1)` over the prime powers `p^r` of `n`.
pub fn psi_cyclic(n: u64) -> Result<u128, ArithError> {
    Ok(psi_cyclic_of(&factorize(n)?))
}

pub(crate) fn psi_cyclic_of(f: &Factorization) -> u128 {
    f.factors
        .iter()
        .map(|&(p, r)| {
            let p_big = BigUint::from(p);
            let num = p_big.pow(2 * r + 1) + 1u32;
            let den = p_big + 1u32;
            debug_assert!((&num % &den).is_zero());
            (num / den)
                .to_u128()
                .expect("psi of a prime-power factor of n < 2^63 fits in u128")
        })
        .product()
}

/// Lower estimate `2 n^2 / (p + 1)` for `psi(C_n)`, `p` the largest prime
/// divisor, and whether the closed form meets it.
pub fn psi_cyclic_floor(n: u64) -> Result<(Rational, bool), ArithError> {
    if n < 2 {
        return Err(ArithError::TooSmall { n, min: 2 });
    }
    let f = factorize(n)?;
    let p = f.largest_prime().unwrap();
    let n2 = BigInt::from(n) * BigInt::from(n);
    let lower = Rational::new(n2 * 2, BigInt::from(p) + 1);
    let holds = Rational::from_integer(BigInt::from(psi_cyclic_of(&f))) >= lower;
    Ok((lower, holds))
}
