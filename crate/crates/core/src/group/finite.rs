//! Explicitly enumerated finite permutation groups and solvable-subgroup
//! search by cyclic extension.
//!
//! Every solvable group `H` has a normal subgroup `K` of prime index, and
//! `H = ⟨K, g⟩` for any `g ∈ H \ K`. Starting from the trivial group and
//! repeatedly adjoining an element `g ∈ N(K)` with `g^r ∈ K` for a prime `r`
//! therefore reaches every solvable subgroup, and only solvable ones.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::primes::is_prime;

use super::PermGroup;

/// Elements of a small group, indexed, with fast multiplication.
#[derive(Debug)]
pub struct EnumeratedGroup {
    degree: usize,
    elems: Vec<Permutation>,
    index: HashMap<u128, u32>,
    inv: Vec<u32>,
    gens: Vec<u32>,
    table: Option<Vec<u16>>,
    class_of: Vec<u32>,
}

/// Largest group for which a full multiplication table is kept.
const TABLE_LIMIT: usize = 6000;
/// Largest group this module will enumerate.
pub const ENUMERATION_LIMIT: u64 = 200_000;

fn key(p: &Permutation) -> u128 {
    p.images()
        .iter()
        .fold(0u128, |acc, &x| (acc << 5) | x as u128)
}

/// A subgroup of an [`EnumeratedGroup`], as sorted element indices plus a membership bitset.
#[derive(Debug, Clone)]
pub struct Subgroup {
    elems: Vec<u32>,
    bits: Vec<u64>,
    gens: Vec<u32>,
}

impl Subgroup {
    fn from_elems(mut elems: Vec<u32>, gens: Vec<u32>, group_order: usize) -> Self {
        elems.sort_unstable();
        let mut bits = vec![0u64; group_order.div_ceil(64)];
        for &e in &elems {
            bits[e as usize / 64] |= 1 << (e % 64);
        }
        Self { elems, bits, gens }
    }

    #[inline]
    pub fn contains(&self, e: u32) -> bool {
        self.bits[e as usize / 64] >> (e % 64) & 1 == 1
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }
}

impl EnumeratedGroup {
    pub fn new(group: &PermGroup) -> Result<Self> {
        let degree = group.degree();
        if degree > 25 {
            return Err(Error::Size {
                what: "enumerated group degree",
                value: degree as u128,
                cap: 25,
            });
        }
        let order = group.order_u64().unwrap_or(u64::MAX);
        if order > ENUMERATION_LIMIT {
            return Err(Error::Size {
                what: "enumerated group order",
                value: order.into(),
                cap: ENUMERATION_LIMIT.into(),
            });
        }
        let mut elems = group.elements();
        elems.sort();
        let index: HashMap<u128, u32> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (key(p), i as u32))
            .collect();
        let lookup = |p: &Permutation| index[&key(p)];
        let inv = elems.iter().map(|p| lookup(&p.inverse())).collect();
        let gens = group.generators().iter().map(lookup).collect();
        let table = (elems.len() <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(elems.len() * elems.len());
            for a in &elems {
                for b in &elems {
                    t.push(lookup(&a.then(b)) as u16);
                }
            }
            t
        });
        let mut g = Self {
            degree,
            elems,
            index,
            inv,
            gens,
            table,
            class_of: Vec::new(),
        };
        g.class_of = g.conjugacy_classes();
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elems[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(&key(p)).copied()
    }

    pub fn identity(&self) -> u32 {
        self.index[&key(&Permutation::identity(self.degree))]
    }

    /// `a` then `b`.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elems.len() + b as usize] as u32,
            None => self.index[&key(&self.elems[a as usize].then(&self.elems[b as usize]))],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `x⁻¹ a x`.
    #[inline]
    pub fn conj(&self, a: u32, x: u32) -> u32 {
        self.mul(self.mul(self.inv(x), a), x)
    }

    fn conjugacy_classes(&self) -> Vec<u32> {
        let n = self.elems.len();
        let mut class = vec![u32::MAX; n];
        let mut next = 0;
        for start in 0..n as u32 {
            if class[start as usize] != u32::MAX {
                continue;
            }
            class[start as usize] = next;
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                for &g in &self.gens {
                    let b = self.conj(a, g);
                    if class[b as usize] == u32::MAX {
                        class[b as usize] = next;
                        stack.push(b);
                    }
                }
            }
            next += 1;
        }
        class
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_elems(vec![self.identity()], Vec::new(), self.order())
    }

    /// Subgroup generated by element indices.
    pub fn closure(&self, gens: &[u32]) -> Subgroup {
        let id = self.identity();
        let mut seen = HashSet::from([id]);
        let mut elems = vec![id];
        let mut k = 0;
        while k < elems.len() {
            for &g in gens {
                let y = self.mul(elems[k], g);
                if seen.insert(y) {
                    elems.push(y);
                }
            }
            k += 1;
        }
        Subgroup::from_elems(elems, gens.to_vec(), self.order())
    }

    /// Elements of `N(K)`.
    pub fn normalizer(&self, k: &Subgroup) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&x| k.gens.iter().all(|&h| k.contains(self.conj(h, x))))
            .collect()
    }

    // Smallest m >= 1 with g^m in K.
    fn index_power(&self, k: &Subgroup, g: u32) -> (u32, Vec<u32>) {
        let mut powers = vec![self.identity()];
        let mut x = g;
        while !k.contains(x) {
            powers.push(x);
            x = self.mul(x, g);
        }
        (powers.len() as u32, powers)
    }

    fn extend(&self, k: &Subgroup, g: u32, powers: &[u32]) -> Subgroup {
        let mut elems = Vec::with_capacity(k.order() * powers.len());
        for &t in powers {
            for &h in &k.elems {
                elems.push(self.mul(h, t));
            }
        }
        let mut gens = k.gens.clone();
        gens.push(g);
        Subgroup::from_elems(elems, gens, self.order())
    }

    // Prime-index extensions of K by elements of `candidates`, skipping elements
    // already inside an extension found earlier (same index, hence same group).
    fn prime_extensions(&self, k: &Subgroup, candidates: &[u32]) -> Vec<Subgroup> {
        let mut covered = vec![0u64; self.order().div_ceil(64)];
        let mut out = Vec::new();
        for &g in candidates {
            if k.contains(g) || covered[g as usize / 64] >> (g % 64) & 1 == 1 {
                continue;
            }
            let (m, powers) = self.index_power(k, g);
            if !is_prime(m.into()) {
                continue;
            }
            let h = self.extend(k, g, &powers);
            for &e in &h.elems {
                covered[e as usize / 64] |= 1 << (e % 64);
            }
            out.push(h);
        }
        out
    }

    /// Every solvable subgroup, deduplicated by element set.
    pub fn solvable_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let triv = self.trivial_subgroup();
        seen.insert(triv.bits.clone());
        let mut all = vec![triv];
        let mut k = 0;
        while k < all.len() {
            let norm = self.normalizer(&all[k]);
            for h in self.prime_extensions(&all[k], &norm) {
                if seen.insert(h.bits.clone()) {
                    all.push(h);
                }
            }
            k += 1;
        }
        all
    }

    fn invariant(&self, h: &Subgroup) -> (usize, Vec<u32>) {
        let mut classes: Vec<u32> = h.elems.iter().map(|&e| self.class_of[e as usize]).collect();
        classes.sort_unstable();
        (h.order(), classes)
    }

    /// Whether some `x` with `x⁻¹ A x = B` exists.
    pub fn are_conjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.order() == b.order()
            && (0..self.order() as u32)
                .any(|x| a.gens.iter().all(|&h| b.contains(self.conj(h, x))))
    }

    // Orbit representatives of N acting on itself by conjugation, N given by its elements.
    fn conjugation_orbit_reps(&self, norm: &[u32]) -> Vec<u32> {
        let member: HashSet<u32> = norm.iter().copied().collect();
        // Generators of N, greedily.
        let mut gens: Vec<u32> = Vec::new();
        let mut span = self.closure(&gens);
        for &x in norm {
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        let mut seen: HashSet<u32> = HashSet::new();
        let mut reps = Vec::new();
        for &x in norm {
            if seen.contains(&x) {
                continue;
            }
            reps.push(x);
            seen.insert(x);
            let mut stack = vec![x];
            while let Some(a) = stack.pop() {
                for &g in &gens {
                    let b = self.conj(a, g);
                    debug_assert!(member.contains(&b));
                    if seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
        }
        reps
    }

    /// One representative of every conjugacy class of solvable subgroups.
    pub fn solvable_subgroup_classes(&self) -> Vec<Subgroup> {
        let mut reps = vec![self.trivial_subgroup()];
        let mut by_invariant: HashMap<(usize, Vec<u32>), Vec<usize>> = HashMap::new();
        by_invariant.insert(self.invariant(&reps[0]), vec![0]);
        let mut k = 0;
        while k < reps.len() {
            let norm = self.normalizer(&reps[k]);
            let candidates = self.conjugation_orbit_reps(&norm);
            for h in self.prime_extensions(&reps[k], &candidates) {
                let inv = self.invariant(&h);
                let bucket = by_invariant.entry(inv).or_default();
                if bucket.iter().any(|&r| self.are_conjugate(&h, &reps[r])) {
                    continue;
                }
                bucket.push(reps.len());
                reps.push(h);
            }
            k += 1;
        }
        reps
    }
}
