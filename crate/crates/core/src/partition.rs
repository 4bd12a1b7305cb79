//! Integer partitions as cycle types of permutations.
//!
//! A [`CycleType`] is a partition of `n` with parts stored in weakly
//! decreasing order. The canonical enumeration order is descending
//! lexicographic on the part lists, so for `n = 4` the order is
//! `[4], [3,1], [2,2], [2,1,1], [1,1,1,1]`: the `n`-cycle comes first and the
//! identity type last.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default ceiling on the degree passed to [`enumerate_partitions`].
pub const DEFAULT_PARTITION_CAP: u32 = 64;

/// A partition of `degree`, i.e. the cycle type of a permutation of `degree` points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    parts: Vec<u32>,
    degree: u32,
}

impl CycleType {
    /// Builds a cycle type from cycle lengths in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Input("cycle lengths must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let degree = parts.iter().sum();
        Ok(Self { parts, degree })
    }

    /// Builds from parts already known to be positive and weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let degree = parts.iter().sum();
        Self { parts, degree }
    }

    /// The type `[1^n]` of the identity.
    pub fn identity(n: u32) -> Self {
        Self::from_sorted(vec![1; n as usize])
    }

    /// Builds a cycle type from multiplicities, `mult[i]` being the number of `(i+1)`-cycles.
    pub fn from_multiplicities(mult: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (i, &m) in mult.iter().enumerate().rev() {
            parts.extend(std::iter::repeat(i as u32 + 1).take(m as usize));
        }
        Self::from_sorted(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_identity(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// `m[i]` is the number of parts equal to `i + 1`; the vector has length `degree`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.degree as usize];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// Multiset union of the parts: the cycle type of a direct product element.
    pub fn merge(&self, other: &CycleType) -> CycleType {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        CycleType::from_sorted(parts)
    }

    /// Parity of any permutation with this cycle type.
    pub fn parity(&self) -> Parity {
        if (self.degree as usize - self.parts.len()) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `λ! = ∏ i^{m_i} m_i!`, the order of the centralizer of an element of this type.
    pub fn centralizer_order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (i, &m) in self.multiplicities().iter().enumerate() {
            if m > 0 {
                acc *= BigUint::from(i as u32 + 1).pow(m);
                acc *= factorial(m);
            }
        }
        acc
    }

    /// `n!/λ!`, the number of permutations of this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.degree) / self.centralizer_order()
    }

    /// Comparison in canonical enumeration order (descending lexicographic).
    pub fn canonical_cmp(&self, other: &CycleType) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        CycleType::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Parity of a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Returns `λ.parity()`.
pub fn parity(ct: &CycleType) -> Parity {
    ct.parity()
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// All partitions of `n` in canonical order, with the default degree cap.
pub fn enumerate_partitions(n: u32) -> Result<Vec<CycleType>> {
    enumerate_partitions_capped(n, DEFAULT_PARTITION_CAP)
}

/// All partitions of `n` in canonical (descending lexicographic) order.
pub fn enumerate_partitions_capped(n: u32, cap: u32) -> Result<Vec<CycleType>> {
    if n > cap {
        return Err(Error::Size {
            what: "partition degree",
            value: n.into(),
            cap: cap.into(),
        });
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    Ok(out)
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<CycleType>) {
    if rest == 0 {
        out.push(CycleType::from_sorted(cur.clone()));
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        cur.push(part);
        fill(rest - part, part, cur, out);
        cur.pop();
    }
}

/// `∏ 1/(i^{m_i} m_i!)`, with `mult[i]` the required number of `(i+1)`-cycles.
///
/// This upper-bounds the probability that a uniform permutation has at least
/// `mult[i]` cycles of length `i+1` for every `i`.
pub fn min_pattern_probability_bound(mult: &[u32]) -> BigRational {
    let mut den = BigUint::one();
    for (i, &m) in mult.iter().enumerate() {
        den *= BigUint::from(i as u32 + 1).pow(m) * factorial(m);
    }
    BigRational::new(One::one(), den.into())
}

/// Dense indexing of the partitions of one degree.
#[derive(Debug)]
pub struct PartitionTable {
    degree: u32,
    types: Vec<CycleType>,
    index: HashMap<Vec<u32>, usize>,
}

impl PartitionTable {
    fn build(n: u32) -> Self {
        let types = enumerate_partitions_capped(n, u32::MAX).expect("uncapped");
        let index = types
            .iter()
            .enumerate()
            .map(|(i, t)| (t.parts.clone(), i))
            .collect();
        Self {
            degree: n,
            types,
            index,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn types(&self) -> &[CycleType] {
        &self.types
    }

    pub fn get(&self, i: usize) -> &CycleType {
        &self.types[i]
    }

    /// Index of `ct`; `None` if the degree differs.
    pub fn index_of(&self, ct: &CycleType) -> Option<usize> {
        self.index_of_parts(&ct.parts)
    }

    pub fn index_of_parts(&self, parts: &[u32]) -> Option<usize> {
        self.index.get(parts).copied()
    }

    /// Index of the identity type, always the last one.
    pub fn identity_index(&self) -> usize {
        self.types.len() - 1
    }
}

static TABLES: [OnceLock<PartitionTable>; DEFAULT_PARTITION_CAP as usize + 1] =
    [const { OnceLock::new() }; DEFAULT_PARTITION_CAP as usize + 1];

/// Shared partition table for degree `n`, built on first use.
pub fn partition_table(n: u32) -> Result<&'static PartitionTable> {
    let slot = TABLES.get(n as usize).ok_or(Error::Size {
        what: "partition degree",
        value: n.into(),
        cap: DEFAULT_PARTITION_CAP.into(),
    })?;
    Ok(slot.get_or_init(|| PartitionTable::build(n)))
}

/// Exact fraction helper: `num/den` with `den` nonzero.
pub(crate) fn ratio(num: BigUint, den: BigUint) -> BigRational {
    debug_assert!(!den.is_zero());
    BigRational::new(num.into(), den.into())
}
