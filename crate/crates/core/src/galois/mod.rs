//! Nonsolvability certificates for Galois groups via Dedekind's criterion.
//!
//! For a prime `p` not dividing the leading coefficient with `f mod p`
//! squarefree, the factor degrees of `f mod p` form the cycle type of an
//! element of `Gal(f/Q)` acting on the roots. Once the collected cycle types
//! fit in no solvable subgroup of `S_n`, the Galois group is nonsolvable.

mod modp;
mod poly;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::atlas::{AtlasCaps, SolvableAtlas, ENGINE_VERSION};
use crate::error::{Error, Result};
use crate::partition::CycleType;
use crate::primes::{primes, primes_up_to};
use crate::prob::{is_covered, CoverageQuery};

pub use modp::{ddf_components, ddf_pattern, reduce_mod, usable_prime, ModPolynomial, Reduction};
pub use poly::{IntPolynomial, MAX_PARSE_DEGREE};

/// How primes are visited by the certifier.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "order")]
pub enum PrimeOrder {
    #[default]
    Increasing,
    /// A seeded shuffle of an initial window of primes, then increasing order.
    Shuffled { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub p: u64,
    pub pattern: CycleType,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Conclusion {
    Nonsolvable,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasMeta {
    pub version: String,
    pub max_degree: u32,
    pub caps: AtlasCaps,
}

impl AtlasMeta {
    pub fn of(atlas: &SolvableAtlas) -> Self {
        Self {
            version: ENGINE_VERSION.to_string(),
            max_degree: atlas.max_degree(),
            caps: *atlas.caps(),
        }
    }
}

/// Outcome of a certification run.
///
/// With conclusion `nonsolvable` the listed patterns are factorization
/// patterns of `f` at usable primes and, together, lie in no solvable
/// subgroup of `S_n`: a proof that `Gal(f/Q)` is not solvable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub poly: IntPolynomial,
    pub degree: usize,
    pub primes: Vec<Evidence>,
    pub conclusion: Conclusion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub prime_order: PrimeOrder,
    pub atlas_meta: AtlasMeta,
}

impl Certificate {
    pub fn is_certificate(&self) -> bool {
        self.conclusion == Conclusion::Nonsolvable
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Re-derives every pattern and rechecks non-coverage against `atlas`.
    pub fn verify(&self, atlas: &SolvableAtlas) -> Result<bool> {
        if !self.is_certificate() {
            return Ok(false);
        }
        let mut seen = Vec::new();
        for e in &self.primes {
            if seen.contains(&e.p) || !usable_prime(&self.poly, e.p) {
                return Ok(false);
            }
            seen.push(e.p);
            if ddf_pattern(&reduce_mod(&self.poly, e.p).poly)? != e.pattern {
                return Ok(false);
            }
        }
        let q = CoverageQuery::new(self.degree as u32, self.patterns())?;
        Ok(!is_covered(&q, atlas)?)
    }

    pub fn patterns(&self) -> Vec<CycleType> {
        self.primes.iter().map(|e| e.pattern.clone()).collect()
    }

    /// Human-readable account of the run.
    pub fn transcript(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "f = {}  (degree {})", self.poly, self.degree);
        for e in &self.primes {
            let _ = writeln!(
                s,
                "  p = {}: p does not divide the leading coefficient and f mod p is squarefree; \
                 factor degrees {}",
                e.p, e.pattern
            );
        }
        match self.conclusion {
            Conclusion::Nonsolvable => {
                let _ = writeln!(
                    s,
                    "By Dedekind's criterion Gal(f/Q), as a subgroup of S_{}, contains elements of \
                     each cycle type above.",
                    self.degree
                );
                let _ = writeln!(
                    s,
                    "No solvable subgroup of S_{} contains all of these cycle types, so Gal(f/Q) is \
                     not solvable.",
                    self.degree
                );
            }
            Conclusion::Inconclusive => {
                let _ = writeln!(
                    s,
                    "Inconclusive: {}.",
                    self.reason.as_deref().unwrap_or("no certificate found")
                );
            }
        }
        let _ = write!(
            s,
            "Solvable atlas: {} up to degree {}.",
            self.atlas_meta.version, self.atlas_meta.max_degree
        );
        s
    }
}

fn prime_sequence(order: PrimeOrder, budget: usize) -> Box<dyn Iterator<Item = u64>> {
    match order {
        PrimeOrder::Increasing => Box::new(primes()),
        PrimeOrder::Shuffled { seed } => {
            let window = 4 * budget as u64 + 64;
            let mut head: Vec<u64> = primes().take(window as usize).collect();
            let last = *head.last().expect("window is nonempty");
            head.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            Box::new(head.into_iter().chain(primes().skip_while(move |&p| p <= last)))
        }
    }
}

/// Looks for a nonsolvability certificate among the first `budget` usable primes.
pub fn certify_nonsolvable(
    f: &IntPolynomial,
    budget: usize,
    atlas: &SolvableAtlas,
    order: PrimeOrder,
) -> Result<Certificate> {
    let n = f.degree();
    let mut cert = Certificate {
        poly: f.clone(),
        degree: n,
        primes: Vec::new(),
        conclusion: Conclusion::Inconclusive,
        reason: None,
        prime_order: order,
        atlas_meta: AtlasMeta::of(atlas),
    };
    if n <= 4 {
        cert.reason = Some(format!("all subgroups of S_n solvable, n ≤ 4 (n = {n})"));
        return Ok(cert);
    }
    if !f.is_separable() {
        return Err(Error::Domain(format!("{f} is not separable over Q")));
    }
    let degree = u32::try_from(n).map_err(|_| Error::Input("degree too large".into()))?;
    atlas.row(degree)?;
    let mut distinct: Vec<CycleType> = Vec::new();
    for p in prime_sequence(order, budget) {
        if cert.primes.len() >= budget {
            break;
        }
        if !usable_prime(f, p) {
            continue;
        }
        let pattern = ddf_pattern(&reduce_mod(f, p).poly)?;
        cert.primes.push(Evidence {
            p,
            pattern: pattern.clone(),
        });
        if distinct.contains(&pattern) {
            continue;
        }
        distinct.push(pattern);
        let q = CoverageQuery::new(degree, distinct.clone())?;
        if !is_covered(&q, atlas)? {
            cert.conclusion = Conclusion::Nonsolvable;
            return Ok(cert);
        }
    }
    cert.reason = Some(format!(
        "the patterns at {} usable primes fit inside a solvable subgroup of S_{n}",
        cert.primes.len()
    ));
    Ok(cert)
}

/// Counts and densities of factorization patterns over usable primes `≤ bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusTable {
    pub poly: IntPolynomial,
    pub bound: u64,
    pub usable_primes: u64,
    pub patterns: BTreeMap<CycleType, (u64, f64)>,
}

impl FrobeniusTable {
    /// JSON with patterns as a list of `{pattern, count, density}` records.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .patterns
            .iter()
            .map(|(t, (c, d))| serde_json::json!({ "pattern": t, "count": c, "density": d }))
            .collect();
        serde_json::json!({
            "poly": self.poly,
            "bound": self.bound,
            "usable_primes": self.usable_primes,
            "patterns": rows,
        })
    }
}

pub fn frobenius_frequencies(f: &IntPolynomial, bound: u64) -> Result<FrobeniusTable> {
    if !f.is_separable() {
        return Err(Error::Domain(format!("{f} is not separable over Q")));
    }
    if f.degree() == 0 {
        return Err(Error::Input("constant polynomial has no roots".into()));
    }
    let ps = primes_up_to(bound);
    let pattern_at = |&p: &u64| -> Option<CycleType> {
        usable_prime(f, p).then(|| ddf_pattern(&reduce_mod(f, p).poly).expect("usable"))
    };
    #[cfg(feature = "parallel")]
    let found: Vec<Option<CycleType>> = {
        use rayon::prelude::*;
        ps.par_iter().map(pattern_at).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let found: Vec<Option<CycleType>> = ps.iter().map(pattern_at).collect();
    let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
    for t in found.into_iter().flatten() {
        *counts.entry(t).or_insert(0) += 1;
    }
    let total: u64 = counts.values().sum();
    let patterns = counts
        .into_iter()
        .map(|(t, c)| (t, (c, c as f64 / total.max(1) as f64)))
        .collect();
    Ok(FrobeniusTable {
        poly: f.clone(),
        bound,
        usable_primes: total,
        patterns,
    })
}
