//! Coverage answers for two classical nonsolvable groups.

use invgen_core::atlas::{wreath_ct, AtlasCaps, SolvableAtlas};
use invgen_core::group::{affine_group, symmetric, PermGroup, DEFAULT_ELEMENT_CAP};
use invgen_core::prob::{is_covered, CoverageQuery};
use invgen_core::{CycleType, Permutation};

fn ct(p: &[u32]) -> CycleType {
    CycleType::new(p.to_vec()).unwrap()
}

// PSL(2,7) on the projective line {0..6, ∞}, with ∞ as point 7.
fn psl_2_7() -> PermGroup {
    let inf = 7u32;
    let map = |f: &dyn Fn(u32) -> u32| Permutation::from_images((0..8).map(f).collect()).unwrap();
    let shift = map(&|x| if x == inf { inf } else { (x + 1) % 7 });
    let scale = map(&|x| if x == inf { inf } else { (2 * x) % 7 });
    let invert = map(&|x| match x {
        0 => inf,
        7 => 0,
        x => (7 - (1..7).find(|y| x * y % 7 == 1).unwrap()) % 7,
    });
    PermGroup::new(8, vec![shift, scale, invert]).unwrap()
}

// A_6 acting on the 15 two-element subsets of {0..5}.
fn a6_on_pairs() -> PermGroup {
    let pairs: Vec<(usize, usize)> =
        (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect();
    let index = |a: usize, b: usize| {
        let key = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == key).unwrap() as u32
    };
    let gens = (2..6)
        .map(|k| {
            let cyc = [0, 1, k];
            let img = |x: usize| cyc.iter().position(|&c| c == x).map_or(x, |i| cyc[(i + 1) % 3]);
            Permutation::from_images(pairs.iter().map(|&(a, b)| index(img(a), img(b))).collect())
                .unwrap()
        })
        .collect();
    PermGroup::new(15, gens).unwrap()
}

#[test]
fn psl_2_7_is_detected() {
    let atlas = SolvableAtlas::build(8, AtlasCaps::standard()).unwrap();
    let g = psl_2_7();
    assert_eq!(g.order_u64(), Some(168));
    assert!(!g.is_solvable());
    let set = g.cycle_type_set(DEFAULT_ELEMENT_CAP).unwrap();
    assert!(set.contains(&ct(&[7, 1])) && set.contains(&ct(&[4, 4])));
    let q = CoverageQuery::new(8, vec![ct(&[7, 1]), ct(&[4, 4])]).unwrap();
    assert!(!is_covered(&q, &atlas).unwrap());
    assert!(!atlas.sets(8).unwrap().iter().any(|s| set.is_subset(s)));
}

#[test]
fn a6_on_pairs_hides_among_solvable_types() {
    let atlas = SolvableAtlas::build(15, AtlasCaps::standard()).unwrap();
    let g = a6_on_pairs();
    assert_eq!(g.order_u64(), Some(360));
    assert!(!g.is_solvable());
    let set = g.cycle_type_set(DEFAULT_ELEMENT_CAP).unwrap();
    assert_eq!(set.len(), 6);
    assert!(set.contains(&ct(&[5, 5, 5])) && set.contains(&ct(&[4, 4, 4, 2, 1])));
    let q = CoverageQuery::new(15, set.types()).unwrap();
    assert!(is_covered(&q, &atlas).unwrap());

    let s3 = symmetric(3).cycle_type_set(DEFAULT_ELEMENT_CAP).unwrap();
    let agl = affine_group(1, 5).unwrap().cycle_type_set(DEFAULT_ELEMENT_CAP).unwrap();
    assert!(set.is_subset(&wreath_ct(&s3, &agl).unwrap()));
}
