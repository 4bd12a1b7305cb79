//! Standard groups and product constructions.

use crate::perm::Permutation;

use super::PermGroup;

fn cycle_on(n: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<u32> = (0..n as u32).collect();
    for (k, &p) in pts.iter().enumerate() {
        images[p] = pts[(k + 1) % pts.len()] as u32;
    }
    Permutation::from_images_unchecked(images)
}

pub fn symmetric(n: usize) -> PermGroup {
    let gens = if n < 2 {
        Vec::new()
    } else {
        vec![cycle_on(n, [0, 1]), cycle_on(n, 0..n)]
    };
    PermGroup::new(n, gens).expect("same degree")
}

pub fn alternating(n: usize) -> PermGroup {
    let gens = (2..n).map(|i| cycle_on(n, [0, 1, i])).collect();
    PermGroup::new(n, gens).expect("same degree")
}

pub fn cyclic(n: usize) -> PermGroup {
    let gens = if n < 2 { Vec::new() } else { vec![cycle_on(n, 0..n)] };
    PermGroup::new(n, gens).expect("same degree")
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> PermGroup {
    if n < 3 {
        return symmetric(n);
    }
    let rotation = cycle_on(n, 0..n);
    let reflection =
        Permutation::from_images_unchecked((0..n).map(|i| ((n - i) % n) as u32).collect());
    PermGroup::new(n, vec![rotation, reflection]).expect("same degree")
}

/// `U wr V` in its imprimitive action on `a·b` points, `U` on `a` points, `V` on `b`.
///
/// Block `j` is `{j·a, .., j·a + a - 1}`; `V` permutes the blocks and a copy of
/// `U` acts inside each block.
pub fn wreath_product(u: &PermGroup, v: &PermGroup) -> PermGroup {
    let (a, b) = (u.degree(), v.degree());
    let n = a * b;
    let mut gens = Vec::new();
    for j in 0..b {
        for g in u.generators() {
            let mut images: Vec<u32> = (0..n as u32).collect();
            for i in 0..a {
                images[j * a + i] = (j * a + g.apply(i)) as u32;
            }
            gens.push(Permutation::from_images_unchecked(images));
        }
    }
    for h in v.generators() {
        let images = (0..n)
            .map(|x| (h.apply(x / a) * a + x % a) as u32)
            .collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    PermGroup::new(n, gens).expect("same degree")
}

/// `U × V` acting on `a + b` points, `U` on the first `a`.
pub fn direct_product(u: &PermGroup, v: &PermGroup) -> PermGroup {
    let (a, b) = (u.degree(), v.degree());
    let n = a + b;
    let mut gens = Vec::new();
    for g in u.generators() {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for i in 0..a {
            images[i] = g.apply(i) as u32;
        }
        gens.push(Permutation::from_images_unchecked(images));
    }
    for h in v.generators() {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for i in 0..b {
            images[a + i] = (a + h.apply(i)) as u32;
        }
        gens.push(Permutation::from_images_unchecked(images));
    }
    PermGroup::new(n, gens).expect("same degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{affine_group, DEFAULT_ELEMENT_CAP};
    use crate::partition::CycleType;
    use num_bigint::BigUint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ct(p: &[u32]) -> CycleType {
        CycleType::new(p.to_vec()).unwrap()
    }

    #[test]
    fn wreath_examples() {
        let c2c2 = wreath_product(&cyclic(2), &cyclic(2));
        assert_eq!(c2c2.degree(), 4);
        assert_eq!(c2c2.order(), BigUint::from(8u32));
        let set = c2c2.cycle_type_set(DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(
            set.types(),
            vec![ct(&[4]), ct(&[2, 2]), ct(&[2, 1, 1]), ct(&[1, 1, 1, 1])]
        );
        let s3c2 = wreath_product(&symmetric(3), &cyclic(2));
        assert_eq!(s3c2.degree(), 6);
        assert_eq!(s3c2.order(), BigUint::from(72u32));
    }

    #[test]
    fn wreath_order_law() {
        let corpus = [
            cyclic(2),
            cyclic(3),
            symmetric(3),
            dihedral(4),
            affine_group(1, 5).unwrap(),
            PermGroup::trivial(2),
            cyclic(1),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let u = &corpus[rng.gen_range(0..corpus.len())];
            let v = &corpus[rng.gen_range(0..corpus.len())];
            let w = wreath_product(u, v);
            let expect = u.order().pow(v.degree() as u32) * v.order();
            assert_eq!(w.order(), expect);
            assert_eq!(w.degree(), u.degree() * v.degree());
        }
    }

    #[test]
    fn direct_product_order() {
        let g = direct_product(&symmetric(3), &cyclic(4));
        assert_eq!(g.order(), BigUint::from(24u32));
        assert!(!g.is_transitive());
    }
}
