/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes `< limit`, ascending (sieve of Eratosthenes).
pub fn primes_below(limit: u64) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let limit = usize::try_from(limit).expect("sieve limit fits in memory");
    let mut composite = vec![false; limit];
    let mut out = Vec::new();
    for i in 2..limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j < limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    if count == 0 {
        return Vec::new();
    }
    // p_s < s (ln s + ln ln s) for s >= 6
    let s = count.max(6) as f64;
    let mut limit = (s * (s.ln() + s.ln().ln())).ceil() as u64 + 10;
    loop {
        let mut ps = primes_below(limit);
        if ps.len() >= count {
            ps.truncate(count);
            return ps;
        }
        limit *= 2;
    }
}
