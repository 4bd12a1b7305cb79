//! Sets of cycle types of one degree, stored as bitsets over the partition table.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partition_table, CycleType, PartitionTable};

/// Where a cycle-type set came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Primitive,
    Wreath,
    Product,
    Enumerated,
}

/// The set of cycle types occurring in some subgroup of `S_n`.
///
/// Equality, hashing and ordering ignore the provenance tag.
#[derive(Clone)]
pub struct CycleTypeSet {
    degree: u32,
    bits: Vec<u64>,
    provenance: Provenance,
}

impl CycleTypeSet {
    /// The empty set at `degree`. Group-derived sets always contain the identity;
    /// use [`CycleTypeSet::trivial`] for that.
    pub fn empty(degree: u32, provenance: Provenance) -> Result<Self> {
        let table = partition_table(degree)?;
        Ok(Self {
            degree,
            bits: vec![0; table.len().div_ceil(64)],
            provenance,
        })
    }

    /// `{[1^n]}`, the set of the trivial group.
    pub fn trivial(degree: u32, provenance: Provenance) -> Result<Self> {
        let mut s = Self::empty(degree, provenance)?;
        s.insert_index(s.table().identity_index());
        Ok(s)
    }

    pub fn from_types<'a, I>(degree: u32, types: I, provenance: Provenance) -> Result<Self>
    where
        I: IntoIterator<Item = &'a CycleType>,
    {
        let mut s = Self::empty(degree, provenance)?;
        for t in types {
            s.insert(t)?;
        }
        Ok(s)
    }

    /// All partitions of `degree`: the set of `S_n`.
    pub fn full(degree: u32, provenance: Provenance) -> Result<Self> {
        let mut s = Self::empty(degree, provenance)?;
        for i in 0..s.table().len() {
            s.insert_index(i);
        }
        Ok(s)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn table(&self) -> &'static PartitionTable {
        partition_table(self.degree).expect("degree validated at construction")
    }

    pub fn insert(&mut self, t: &CycleType) -> Result<()> {
        let i = self.table().index_of(t).ok_or_else(|| {
            Error::Input(format!(
                "cycle type {t} has degree {}, set has degree {}",
                t.degree(),
                self.degree
            ))
        })?;
        self.insert_index(i);
        Ok(())
    }

    #[inline]
    pub fn insert_index(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn contains(&self, t: &CycleType) -> bool {
        self.table()
            .index_of(t)
            .is_some_and(|i| self.contains_index(i))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn contains_identity(&self) -> bool {
        self.contains_index(self.table().identity_index())
    }

    /// Partition-table indices of the members, ascending (canonical order).
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Members in canonical order.
    pub fn types(&self) -> Vec<CycleType> {
        let table = self.table();
        self.indices().map(|i| table.get(i).clone()).collect()
    }

    pub fn is_subset(&self, other: &CycleTypeSet) -> bool {
        self.degree == other.degree
            && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &CycleTypeSet) {
        assert_eq!(self.degree, other.degree);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    /// Canonical family order: larger sets first, then lexicographic on member lists.
    pub fn family_cmp(&self, other: &CycleTypeSet) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.len().cmp(&self.len()))
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialEq for CycleTypeSet {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.bits == other.bits
    }
}

impl Eq for CycleTypeSet {}

impl Hash for CycleTypeSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.bits.hash(state);
    }
}

impl PartialOrd for CycleTypeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycleTypeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.family_cmp(other)
    }
}

impl fmt::Debug for CycleTypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, t) in self.types().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for CycleTypeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.types().serialize(s)
    }
}
