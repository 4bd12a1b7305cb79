//! Every atlas set is the cycle-type set of an explicit solvable group.
//!
//! The rows are rebuilt here from actual permutation groups (iterated wreath and
//! direct products over maximal primitive solvable groups), with cycle types
//! read off by enumerating elements rather than through the set-level laws.

use std::collections::HashSet;

use invgen_core::atlas::{thin_maximal, AtlasCaps, SolvableAtlas};
use invgen_core::group::{
    affine_group, direct_product, symmetric, wreath_product, PermGroup, DEFAULT_ELEMENT_CAP,
};
use invgen_core::{CycleTypeSet, Permutation};

const MAX_N: usize = 10;

// Affine semilinear group of F_8 = F_2[t]/(t^3 + t + 1), points as bit vectors.
fn agaml_1_8() -> PermGroup {
    let mul_t = |x: usize| {
        let y = x << 1;
        if y & 8 != 0 {
            (y ^ 0b1011) & 7
        } else {
            y
        }
    };
    let mul = |a: usize, b: usize| {
        let (mut acc, mut a) = (0, a);
        for i in 0..3 {
            if b >> i & 1 == 1 {
                acc ^= a;
            }
            a = mul_t(a);
        }
        acc
    };
    let perm = |f: &dyn Fn(usize) -> usize| {
        Permutation::from_images((0..8).map(|x| f(x) as u32).collect()).unwrap()
    };
    PermGroup::new(
        8,
        vec![perm(&mul_t), perm(&|x| mul(x, x)), perm(&|x| x ^ 1)],
    )
    .unwrap()
}

fn primitive_witnesses(q: usize) -> Vec<PermGroup> {
    match q {
        2 | 3 | 4 => vec![symmetric(q)],
        5 | 7 => vec![affine_group(1, q as u32).unwrap()],
        8 => vec![agaml_1_8()],
        9 => vec![affine_group(2, 3).unwrap()],
        _ => vec![],
    }
}

fn ct(g: &PermGroup) -> CycleTypeSet {
    g.cycle_type_set(DEFAULT_ELEMENT_CAP).unwrap()
}

// Keeps one group per maximal cycle-type set.
fn keep_maximal(groups: Vec<PermGroup>) -> Vec<PermGroup> {
    let sets: Vec<CycleTypeSet> = groups.iter().map(ct).collect();
    let maximal: HashSet<CycleTypeSet> = thin_maximal(sets.clone()).unwrap().into_iter().collect();
    let mut seen = HashSet::new();
    groups
        .into_iter()
        .zip(sets)
        .filter(|(_, s)| maximal.contains(s) && seen.insert(s.clone()))
        .map(|(g, _)| g)
        .collect()
}

#[test]
fn semilinear_group_of_degree_eight() {
    let g = agaml_1_8();
    assert_eq!(g.order_u64(), Some(168));
    assert!(g.is_solvable());
}

#[test]
fn rows_are_realized_by_solvable_groups() {
    let atlas = SolvableAtlas::build(MAX_N as u32, AtlasCaps::standard()).unwrap();
    let mut transitive: Vec<Vec<PermGroup>> = vec![vec![], vec![PermGroup::trivial(1)]];
    let mut solvable: Vec<Vec<PermGroup>> = vec![vec![], vec![PermGroup::trivial(1)]];
    for n in 2..=MAX_N {
        let mut t = primitive_witnesses(n);
        for a in 2..n {
            if n % a == 0 {
                for u in &transitive[a] {
                    for v in primitive_witnesses(n / a) {
                        t.push(wreath_product(u, &v));
                    }
                }
            }
        }
        let t = keep_maximal(t);
        let mut s = t.clone();
        for a in 1..=n / 2 {
            for x in &solvable[a] {
                for y in &solvable[n - a] {
                    s.push(direct_product(x, y));
                }
            }
        }
        let s = keep_maximal(s);
        for g in &s {
            assert!(g.is_solvable(), "degree {n}");
            assert_eq!(g.degree(), n);
        }
        let realized: HashSet<CycleTypeSet> = s.iter().map(ct).collect();
        let row: HashSet<CycleTypeSet> = atlas.sets(n as u32).unwrap().iter().cloned().collect();
        assert_eq!(realized, row, "degree {n}");
        transitive.push(t);
        solvable.push(s);
    }
}
