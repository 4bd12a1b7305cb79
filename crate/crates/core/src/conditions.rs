//! Sampled frequencies of the cycle-structure conditions behind the
//! asymptotic argument: a "large" prime cycle whose length is coprime to every
//! other cycle, and cycles whose length is a Mersenne prime.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::CycleType;
use crate::perm::random_permutation;
use crate::primes::{is_mersenne_prime, is_prime};

/// A sampled proportion with its binomial standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Proportion {
    pub hits: u64,
    pub estimate: f64,
    pub std_error: f64,
}

impl Proportion {
    fn from_hits(hits: u64, trials: u64) -> Self {
        let p = hits as f64 / trials as f64;
        Self {
            hits,
            estimate: p,
            std_error: (p * (1.0 - p) / trials as f64).sqrt(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionStats {
    pub n: u32,
    pub trials: u64,
    /// Inclusive prime window `[⌈(ln n)²⌉, ⌊n/2⌋]`; may be empty.
    pub window: (u32, u32),
    /// Some prime `p` in the window occurs as a cycle length, and every other
    /// cycle length is coprime to `p`.
    pub coprime_prime_cycle: Proportion,
    /// Some cycle length is a Mersenne prime `q` with `(ln n)² ≤ q ≤ n`.
    pub mersenne_cycle: Proportion,
}

/// `[⌈(ln n)²⌉, ⌊n/2⌋]`, natural logarithm.
pub fn prime_window(n: u32) -> (u32, u32) {
    let lo = (n as f64).ln().powi(2).ceil() as u32;
    (lo, n / 2)
}

/// Whether `ct` has a cycle of prime length `p` in the window with all other lengths coprime to `p`.
pub fn has_coprime_prime_cycle(ct: &CycleType) -> bool {
    let (lo, hi) = prime_window(ct.degree());
    let parts = ct.parts();
    (lo..=hi).filter(|&p| is_prime(p.into())).any(|p| {
        let mut p_cycles = 0;
        for &len in parts {
            if len == p {
                p_cycles += 1;
            } else if len % p == 0 {
                return false;
            }
        }
        p_cycles == 1
    })
}

/// Whether `ct` has a cycle whose length is a Mersenne prime at least `(ln n)²`.
pub fn has_mersenne_cycle(ct: &CycleType) -> bool {
    let lo = prime_window(ct.degree()).0;
    ct.parts()
        .iter()
        .any(|&len| len >= lo && is_mersenne_prime(len.into()))
}

/// Mersenne primes `q` with `(ln n)² ≤ q ≤ n`.
pub fn admissible_mersenne_primes(n: u32) -> Vec<u32> {
    let lo = prime_window(n).0;
    (lo.max(2)..=n)
        .filter(|&q| is_mersenne_prime(q.into()))
        .collect()
}

pub fn condition_stats<R: Rng + ?Sized>(n: u32, trials: u64, rng: &mut R) -> Result<ConditionStats> {
    if n < 5 {
        return Err(Error::Domain(format!("condition statistics need n >= 5, got {n}")));
    }
    if trials == 0 {
        return Err(Error::Input("trials must be positive".into()));
    }
    let (mut a, mut b) = (0u64, 0u64);
    for _ in 0..trials {
        let ct = random_permutation(n as usize, rng).cycle_type();
        a += has_coprime_prime_cycle(&ct) as u64;
        b += has_mersenne_cycle(&ct) as u64;
    }
    Ok(ConditionStats {
        n,
        trials,
        window: prime_window(n),
        coprime_prime_cycle: Proportion::from_hits(a, trials),
        mersenne_cycle: Proportion::from_hits(b, trials),
    })
}
