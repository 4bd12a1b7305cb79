//! Block systems of transitive groups.

use serde::{Deserialize, Serialize};

use super::PermGroup;

/// A partition of the points into blocks of equal size, preserved by a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// Blocks sorted internally and by least element.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockStructure {
    Intransitive,
    Primitive,
    Imprimitive(BlockSystem),
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

// Finest block system in which 0 and `y` share a block (Atkinson's union-find).
fn finest_blocks_joining(g: &PermGroup, y: usize) -> BlockSystem {
    let n = g.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut queue = vec![(0, y)];
    parent[y] = 0;
    while let Some((a, b)) = queue.pop() {
        for h in g.generators() {
            let ra = find(&mut parent, h.apply(a));
            let rb = find(&mut parent, h.apply(b));
            if ra != rb {
                let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                parent[hi] = lo;
                queue.push((lo, hi));
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(x);
    }
    BlockSystem { blocks }
}

/// Block system of least block size above 1, or why there is none.
///
/// Among several systems of that size the lexicographically least (as a sorted
/// list of sorted blocks) is returned.
pub fn minimal_blocks(g: &PermGroup) -> BlockStructure {
    let n = g.degree();
    if !g.is_transitive() {
        return BlockStructure::Intransitive;
    }
    let mut best: Option<BlockSystem> = None;
    for y in 1..n {
        let sys = finest_blocks_joining(g, y);
        if sys.block_count() == 1 {
            continue;
        }
        best = match best {
            None => Some(sys),
            Some(b) => {
                let key = |s: &BlockSystem| (s.block_size(), s.blocks.clone());
                Some(if key(&sys) < key(&b) { sys } else { b })
            }
        };
    }
    best.map_or(BlockStructure::Primitive, BlockStructure::Imprimitive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric, wreath_product};
    use crate::perm::Permutation;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    // Oracle: every set partition of 4 points into equal blocks, kept if invariant.
    fn invariant_partitions_of_four(g: &PermGroup) -> Vec<Vec<Vec<usize>>> {
        let candidates = vec![
            vec![vec![0, 1], vec![2, 3]],
            vec![vec![0, 2], vec![1, 3]],
            vec![vec![0, 3], vec![1, 2]],
        ];
        candidates
            .into_iter()
            .filter(|blocks| {
                g.generators().iter().all(|h| {
                    blocks.iter().all(|b| {
                        let mut img: Vec<usize> = b.iter().map(|&x| h.apply(x)).collect();
                        img.sort();
                        blocks.contains(&img)
                    })
                })
            })
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(minimal_blocks(&symmetric(5)), BlockStructure::Primitive);
        let v4 = PermGroup::new(4, vec![p(4, &[&[1, 2], &[3, 4]]), p(4, &[&[1, 3], &[2, 4]])])
            .unwrap();
        assert_eq!(invariant_partitions_of_four(&v4).len(), 3);
        match minimal_blocks(&v4) {
            BlockStructure::Imprimitive(b) => {
                assert_eq!(b.blocks(), &[vec![0, 1], vec![2, 3]]);
                assert_eq!(b.block_size(), 2);
            }
            other => panic!("{other:?}"),
        }
        let t = PermGroup::new(3, vec![p(3, &[&[1, 2]])]).unwrap();
        assert_eq!(minimal_blocks(&t), BlockStructure::Intransitive);
    }

    #[test]
    fn wreath_products_have_their_blocks() {
        let w = wreath_product(&cyclic(3), &cyclic(2));
        match minimal_blocks(&w) {
            BlockStructure::Imprimitive(b) => {
                assert_eq!(b.block_size(), 3);
                assert_eq!(b.block_count(), 2);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(minimal_blocks(&cyclic(7)), BlockStructure::Primitive);
        match minimal_blocks(&cyclic(6)) {
            BlockStructure::Imprimitive(b) => assert_eq!(b.block_size(), 2),
            other => panic!("{other:?}"),
        }
    }
}
