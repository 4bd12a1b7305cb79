//! Permutations of `{0, .., n-1}`.
//!
//! Points are 0-based internally. Cycle notation used for display and for
//! [`Permutation::from_cycles`] is 1-based, matching the usual mathematical
//! convention.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::partition::CycleType;

/// A bijection of `{0, .., n-1}`; `images[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::Input(format!(
                    "images {images:?} do not form a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Self { images }
    }

    /// Builds a permutation of `n` points from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n || touched[p - 1] {
                    return Err(Error::Input(format!("bad cycle {cycle:?} on {n} points")));
                }
                touched[p - 1] = true;
                let q = cycle[(k + 1) % cycle.len()];
                images[p - 1] = (q - 1) as u32;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self { images: inv }
    }

    /// `other⁻¹ · self · other` in the `then` convention; relabels points by `other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().then(self).then(other)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// First point not fixed, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Cycles including fixed points, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType::from_sorted(parts)
    }

    /// Element order: lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .parts()
            .iter()
            .fold(1u64, |acc, &p| num_integer::lcm(acc, p as u64))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Cycle type of `sigma`.
pub fn cycle_type_of(sigma: &Permutation) -> CycleType {
    sigma.cycle_type()
}

/// Uniform permutation of `n` points via an unbiased Fisher–Yates shuffle.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation { images }
}
