//! Small-prime utilities.

/// Trial-division primality; adequate for the word-sized moduli used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Endless iterator over the primes in increasing order.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

/// Writes `q = p^d` with `p` prime and `d ≥ 1`, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut d = 0;
    while rest % p == 0 {
        rest /= p;
        d += 1;
    }
    (rest == 1).then_some((p, d))
}

/// True for primes of the form `2^k - 1`.
pub fn is_mersenne_prime(q: u64) -> bool {
    is_prime(q) && (q + 1).is_power_of_two()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let s = primes_up_to(1000);
        let t: Vec<u64> = (0..=1000).filter(|&n| is_prime(n)).collect();
        assert_eq!(s, t);
        assert_eq!(primes_up_to(1_000_000).len(), 78_498);
        assert_eq!(primes().take(5).collect::<Vec<_>>(), vec![2, 3, 5, 7, 11]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn mersenne() {
        let m: Vec<u64> = (1..200).filter(|&q| is_mersenne_prime(q)).collect();
        assert_eq!(m, vec![3, 7, 31, 127]);
    }
}
