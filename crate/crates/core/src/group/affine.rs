//! Affine groups `V ⋊ H ≤ AGL(d, p)` acting on the `p^d` vectors of `F_p^d`, and the
//! cycle-type sets of primitive solvable groups.
//!
//! A primitive solvable group of degree `q` is affine: `q = p^d` and the group is
//! `V ⋊ H` with `H ≤ GL(d, p)` solvable and irreducible. The search enumerates
//! the solvable subgroups of `GL(d, p)` up to conjugacy, keeps the irreducible
//! ones and records the cycle types of the corresponding affine groups.

use serde::{Deserialize, Serialize};

use crate::atlas::thin_maximal;
use crate::ctset::{CycleTypeSet, Provenance};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::primes::{is_prime, prime_power};

use super::finite::{EnumeratedGroup, Subgroup};
use super::PermGroup;

/// Limits on the matrix-group search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineCaps {
    /// Largest `|GL(d, p)|` whose subgroups are enumerated.
    pub max_gl_order: u64,
}

impl AffineCaps {
    /// Enough for every prime power below 16 plus 25.
    pub const DEFAULT: AffineCaps = AffineCaps { max_gl_order: 1_000 };
    /// Adds `GL(4, 2)`, needed for degree 16.
    pub const STRETCH: AffineCaps = AffineCaps {
        max_gl_order: 100_000,
    };
}

impl Default for AffineCaps {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// `F_p^d` with vectors numbered by their base-`p` digits, first coordinate least significant.
#[derive(Clone, Copy, Debug)]
pub(crate) struct FpSpace {
    p: u32,
    d: u32,
    size: usize,
}

impl FpSpace {
    pub(crate) fn new(p: u32, d: u32) -> Self {
        Self {
            p,
            d,
            size: (p as usize).pow(d),
        }
    }

    fn digits(&self, mut idx: usize) -> Vec<u32> {
        (0..self.d)
            .map(|_| {
                let r = (idx % self.p as usize) as u32;
                idx /= self.p as usize;
                r
            })
            .collect()
    }

    fn index(&self, v: &[u32]) -> usize {
        v.iter()
            .rev()
            .fold(0usize, |acc, &x| acc * self.p as usize + x as usize)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.index(&s)
    }

    // Row-major d×d matrix acting on column vectors.
    fn apply_matrix(&self, m: &[u32], v: &[u32]) -> Vec<u32> {
        let d = self.d as usize;
        (0..d)
            .map(|i| (0..d).map(|j| m[i * d + j] * v[j]).sum::<u32>() % self.p)
            .collect()
    }

    fn matrix_perm(&self, m: &[u32]) -> Permutation {
        let images = (0..self.size)
            .map(|x| self.index(&self.apply_matrix(m, &self.digits(x))) as u32)
            .collect();
        Permutation::from_images_unchecked(images)
    }

    fn translation(&self, v: usize) -> Permutation {
        let images = (0..self.size).map(|x| self.add(x, v) as u32).collect();
        Permutation::from_images_unchecked(images)
    }

    fn identity_matrix(&self) -> Vec<u32> {
        let d = self.d as usize;
        (0..d * d).map(|k| u32::from(k / d == k % d)).collect()
    }

    // diag(ω, 1, ..., 1) and the elementary transvections generate GL(d, p).
    fn gl_generators(&self) -> Vec<Permutation> {
        let d = self.d as usize;
        let mut gens = Vec::new();
        let omega = primitive_root(self.p);
        if omega != 1 {
            let mut m = self.identity_matrix();
            m[0] = omega;
            gens.push(self.matrix_perm(&m));
        }
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    let mut m = self.identity_matrix();
                    m[i * d + j] = 1;
                    gens.push(self.matrix_perm(&m));
                }
            }
        }
        gens
    }

    fn basis_translations(&self) -> Vec<Permutation> {
        (0..self.d as usize)
            .map(|k| self.translation((self.p as usize).pow(k as u32)))
            .collect()
    }

    // Smallest subspace containing v and invariant under the given linear maps.
    fn spin(&self, v: usize, maps: &[&Permutation]) -> usize {
        let mut inside = vec![false; self.size];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut queue = vec![v];
        while let Some(w) = queue.pop() {
            if inside[w] {
                continue;
            }
            // Adding w to a subspace W gives W + F_p w.
            let current = members.clone();
            let mut multiple = w;
            for _ in 1..self.p {
                for &u in &current {
                    let s = self.add(u, multiple);
                    if !inside[s] {
                        inside[s] = true;
                        members.push(s);
                    }
                }
                multiple = self.add(multiple, w);
            }
            for &m in maps {
                for &u in &members {
                    let img = m.apply(u);
                    if !inside[img] {
                        queue.push(img);
                    }
                }
            }
        }
        members.len()
    }
}

fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| {
            let mut x = 1u64;
            for k in 1..p {
                x = x * g as u64 % p as u64;
                if x == 1 {
                    return k == p - 1;
                }
            }
            false
        })
        .expect("prime modulus has a primitive root")
}

/// `|GL(d, p)| = ∏ (p^d - p^i)`.
pub fn gl_order(d: u32, p: u64) -> u128 {
    let q = (p as u128).pow(d);
    (0..d).map(|i| q - (p as u128).pow(i)).product()
}

/// `AGL(d, p)` acting on the `p^d` vectors.
pub fn affine_group(d: u32, p: u32) -> Result<PermGroup> {
    if !is_prime(p.into()) || d == 0 {
        return Err(Error::Input(format!("AGL({d},{p}) needs a prime p and d >= 1")));
    }
    let space = FpSpace::new(p, d);
    let mut gens = space.basis_translations();
    gens.extend(space.gl_generators());
    PermGroup::new(space.size, gens)
}

/// `GL(d, p)` in its linear action on the `p^d` vectors.
pub fn general_linear_group(d: u32, p: u32) -> Result<PermGroup> {
    if !is_prime(p.into()) || d == 0 {
        return Err(Error::Input(format!("GL({d},{p}) needs a prime p and d >= 1")));
    }
    let space = FpSpace::new(p, d);
    PermGroup::new(space.size, space.gl_generators())
}

fn is_irreducible(space: &FpSpace, g: &EnumeratedGroup, h: &Subgroup) -> bool {
    if space.d == 1 {
        return true;
    }
    let maps: Vec<&Permutation> = h.generators().iter().map(|&x| g.element(x)).collect();
    (1..space.size).all(|v| space.spin(v, &maps) == space.size)
}

fn affine_ct_set(space: &FpSpace, g: &EnumeratedGroup, h: &Subgroup) -> Result<CycleTypeSet> {
    let mut set = CycleTypeSet::empty(space.size as u32, Provenance::Primitive)?;
    let table = set.table();
    let translations: Vec<Permutation> = (0..space.size).map(|v| space.translation(v)).collect();
    for &x in h.elements() {
        let lin = g.element(x);
        for t in &translations {
            let ct = lin.then(t).cycle_type();
            set.insert_index(table.index_of(&ct).expect("same degree"));
        }
    }
    Ok(set)
}

/// Inclusion-maximal cycle-type sets of primitive solvable groups of degree `q`, default caps.
pub fn primitive_solvable_ct_sets(q: u32) -> Result<Vec<CycleTypeSet>> {
    primitive_solvable_ct_sets_with(q, &AffineCaps::DEFAULT)
}

/// As [`primitive_solvable_ct_sets`] with explicit caps. Non-prime-powers give an empty list.
pub fn primitive_solvable_ct_sets_with(q: u32, caps: &AffineCaps) -> Result<Vec<CycleTypeSet>> {
    if q < 2 {
        return Err(Error::Input(format!("primitive degree must be at least 2, got {q}")));
    }
    let Some((p, d)) = prime_power(q.into()) else {
        return Ok(Vec::new());
    };
    let order = gl_order(d, p);
    if order > caps.max_gl_order as u128 {
        return Err(Error::Capability(format!(
            "primitive solvable groups of degree {q} need subgroups of GL({d},{p}) \
             (order {order}, cap {}); enable the stretch caps",
            caps.max_gl_order
        )));
    }
    let space = FpSpace::new(p as u32, d);
    let gl = PermGroup::new(space.size, space.gl_generators())?;
    let eg = EnumeratedGroup::new(&gl)?;
    let mut sets = Vec::new();
    for h in eg.solvable_subgroup_classes() {
        if is_irreducible(&space, &eg, &h) {
            sets.push(affine_ct_set(&space, &eg, &h)?);
        }
    }
    thin_maximal(sets)
}
