//! Permutation groups given by generators, backed by a deterministic
//! Schreier–Sims stabilizer chain.

mod affine;
mod blocks;
mod constructions;
mod finite;
mod oracle;

pub use affine::{
    affine_group, general_linear_group, gl_order, primitive_solvable_ct_sets,
    primitive_solvable_ct_sets_with, AffineCaps,
};
pub use blocks::{minimal_blocks, BlockSystem, BlockStructure};
pub use constructions::{alternating, cyclic, dihedral, direct_product, symmetric, wreath_product};
pub use finite::{EnumeratedGroup, Subgroup};
pub use oracle::{all_solvable_subgroup_ct_sets, ORACLE_MAX_DEGREE};

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::ctset::{CycleTypeSet, Provenance};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of elements walked by [`PermGroup::cycle_type_set`].
pub const DEFAULT_ELEMENT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    // transversal[y] maps the base point to y; inverse stored alongside.
    transversal: Vec<Option<(Permutation, Permutation)>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[base] = Some((Permutation::identity(n), Permutation::identity(n)));
        Self {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    // Extends the orbit and transversal with the current generators.
    fn grow_orbit(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            let y = self.orbit[k];
            let (uy, _) = self.transversal[y].clone().expect("orbit point has rep");
            for g in &self.gens {
                let z = g.apply(y);
                if self.transversal[z].is_none() {
                    let uz = uy.then(g);
                    let inv = uz.inverse();
                    self.transversal[z] = Some((uz, inv));
                    self.orbit.push(z);
                }
            }
            k += 1;
        }
    }
}

#[derive(Debug, Clone)]
struct Chain {
    levels: Vec<Level>,
}

impl Chain {
    fn build(n: usize, gens: &[Permutation]) -> Self {
        let mut chain = Chain { levels: Vec::new() };
        for g in gens.iter().filter(|g| !g.is_identity()) {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.first_moved().expect("non-identity");
                chain.levels.push(Level::new(b, n));
            }
        }
        for g in gens.iter().filter(|g| !g.is_identity()) {
            for level in chain.levels.iter_mut() {
                level.gens.push(g.clone());
                if g.apply(level.base) != level.base {
                    break;
                }
            }
        }
        for level in chain.levels.iter_mut() {
            level.grow_orbit();
        }
        for i in (0..chain.levels.len()).rev() {
            chain.complete(i, n);
        }
        chain
    }

    // Strips `g` starting at level `from`; returns the residue and the level where it stopped.
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let y = g.apply(level.base);
            match &level.transversal[y] {
                Some((_, inv)) => g = g.then(inv),
                None => return (g, i),
            }
        }
        let depth = self.levels.len();
        (g, depth)
    }

    // Ensures every Schreier generator of level `i` sifts through levels below it.
    fn complete(&mut self, i: usize, n: usize) {
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let y = self.levels[i].orbit[k];
            let mut s = 0;
            while s < self.levels[i].gens.len() {
                let level = &self.levels[i];
                let g = &level.gens[s];
                let z = g.apply(y);
                let (uy, _) = level.transversal[y].as_ref().expect("rep");
                let (_, uz_inv) = level.transversal[z].as_ref().expect("rep");
                let schreier = uy.then(g).then(uz_inv);
                let (res, j) = self.strip(schreier, i + 1);
                if !res.is_identity() {
                    if j == self.levels.len() {
                        let b = res.first_moved().expect("non-identity");
                        self.levels.push(Level::new(b, n));
                    }
                    for l in i + 1..=j {
                        self.levels[l].gens.push(res.clone());
                        self.levels[l].grow_orbit();
                    }
                    for l in (i + 1..=j).rev() {
                        self.complete(l, n);
                    }
                }
                s += 1;
            }
            k += 1;
        }
    }
}

/// A permutation group on `degree` points.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Chain>,
}

impl PermGroup {
    /// Group generated by `gens` on `degree` points; mixed degrees are rejected.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::Input(format!(
                "generator {bad} has degree {}, expected {degree}",
                bad.degree()
            )));
        }
        Ok(Self {
            degree,
            generators: gens,
            chain: OnceLock::new(),
        })
    }

    /// Group generated by a nonempty list of same-degree permutations.
    pub fn from_generators(gens: Vec<Permutation>) -> Result<Self> {
        let degree = gens
            .first()
            .map(|g| g.degree())
            .ok_or_else(|| Error::Input("empty generator list has no degree".into()))?;
        Self::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("no generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &Chain {
        self.chain
            .get_or_init(|| Chain::build(self.degree, &self.generators))
    }

    /// Base points of the stabilizer chain.
    pub fn base(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.base).collect()
    }

    /// Strong generators collected across the chain.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.chain().levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Lengths of the fundamental orbits.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.orbit_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, l| acc * l)
    }

    /// Order as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().strip(g.clone(), 0).0.is_identity()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain().levels.is_empty()
    }

    /// Orbit of `point` under the generators.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            for g in &self.generators {
                let z = g.apply(orbit[k]);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
            k += 1;
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Calls `f` on every element exactly once, walking the transversals.
    pub fn for_each_element<F: FnMut(&Permutation)>(&self, mut f: F) {
        let levels = &self.chain().levels;
        let id = Permutation::identity(self.degree);
        fn walk<F: FnMut(&Permutation)>(levels: &[Level], depth: usize, acc: &Permutation, f: &mut F) {
            // Elements are u_{m-1} · ... · u_0 in the `then` order; build from the top level.
            if depth == 0 {
                f(acc);
                return;
            }
            let level = &levels[depth - 1];
            for &y in &level.orbit {
                let (u, _) = level.transversal[y].as_ref().expect("rep");
                walk(levels, depth - 1, &acc.then(u), f);
            }
        }
        walk(levels, levels.len(), &id, &mut f);
    }

    /// All elements; intended for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        self.for_each_element(|g| out.push(g.clone()));
        out
    }

    /// Exact set of cycle types of the elements, by exhaustive enumeration.
    pub fn cycle_type_set(&self, element_cap: u64) -> Result<CycleTypeSet> {
        let order = self.order();
        if order > BigUint::from(element_cap) {
            return Err(Error::Size {
                what: "group order",
                value: order.to_u128().unwrap_or(u128::MAX),
                cap: element_cap.into(),
            });
        }
        let mut set = CycleTypeSet::empty(self.degree as u32, Provenance::Enumerated)?;
        let table = set.table();
        self.for_each_element(|g| {
            let ct = g.cycle_type();
            set.insert_index(table.index_of(&ct).expect("same degree"));
        });
        Ok(set)
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> PermGroup {
        let mut closure =
            PermGroup::new(self.degree, gens.iter().filter(|g| !g.is_identity()).cloned().collect())
                .expect("same degree");
        loop {
            let mut added = false;
            let current = closure.generators.clone();
            for h in &current {
                for g in &self.generators {
                    let c = h.conjugate_by(g);
                    if !closure.contains(&c) {
                        let mut gs = closure.generators.clone();
                        gs.push(c);
                        closure = PermGroup::new(self.degree, gs).expect("same degree");
                        added = true;
                    }
                }
            }
            if !added {
                return closure;
            }
        }
    }

    /// Commutator subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = &self.generators;
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Orders along the derived series, stopping when it stabilizes.
    pub fn derived_series_orders(&self) -> Vec<BigUint> {
        let mut out = vec![self.order()];
        let mut g = self.clone();
        loop {
            let d = g.derived_subgroup();
            let o = d.order();
            if &o == out.last().expect("nonempty") {
                return out;
            }
            out.push(o);
            if d.is_trivial() {
                return out;
            }
            g = d;
        }
    }

    /// True iff the derived series reaches the trivial group.
    pub fn is_solvable(&self) -> bool {
        self.derived_series_orders()
            .last()
            .is_some_and(|o| o.is_one())
    }
}

/// Group generated by `gens`; an empty list needs the degree from [`PermGroup::new`].
pub fn group_from_generators(gens: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::from_generators(gens)
}

/// True iff the derived series of `g` terminates in the trivial group.
pub fn is_solvable(g: &PermGroup) -> bool {
    g.is_solvable()
}
