//! Brute-force reference: maximal cycle-type sets over every solvable subgroup of `S_n`.

use std::sync::OnceLock;

use crate::atlas::thin_maximal;
use crate::ctset::{CycleTypeSet, Provenance};
use crate::error::{Error, Result};
use crate::partition::partition_table;

use super::finite::EnumeratedGroup;
use super::symmetric;

pub const ORACLE_MAX_DEGREE: u32 = 7;

static CACHE: [OnceLock<Vec<CycleTypeSet>>; ORACLE_MAX_DEGREE as usize + 1] =
    [const { OnceLock::new() }; ORACLE_MAX_DEGREE as usize + 1];

/// Inclusion-maximal cycle-type sets among all solvable subgroups of `S_n`, `n ≤ 7`.
///
/// Subgroups are found by closure: start from the trivial group and adjoin one
/// normalizing element at a time (prime index steps), deduplicating by element
/// set. No structural knowledge about solvable groups beyond that is used.
pub fn all_solvable_subgroup_ct_sets(n: u32) -> Result<Vec<CycleTypeSet>> {
    if n > ORACLE_MAX_DEGREE {
        return Err(Error::Size {
            what: "oracle degree",
            value: n.into(),
            cap: ORACLE_MAX_DEGREE.into(),
        });
    }
    if n == 0 {
        return Err(Error::Input("degree must be positive".into()));
    }
    if let Some(done) = CACHE[n as usize].get() {
        return Ok(done.clone());
    }
    let g = EnumeratedGroup::new(&symmetric(n as usize))?;
    let table = partition_table(n)?;
    let type_of: Vec<usize> = (0..g.order() as u32)
        .map(|e| table.index_of(&g.element(e).cycle_type()).expect("degree n"))
        .collect();
    let mut sets = Vec::new();
    for h in g.solvable_subgroups() {
        let mut s = CycleTypeSet::empty(n, Provenance::Enumerated)?;
        for &e in h.elements() {
            s.insert_index(type_of[e as usize]);
        }
        sets.push(s);
    }
    let thinned = thin_maximal(sets)?;
    Ok(CACHE[n as usize].get_or_init(|| thinned).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, CycleType};

    fn ct(p: &[u32]) -> CycleType {
        CycleType::new(p.to_vec()).unwrap()
    }

    #[test]
    fn tiny_degrees() {
        let two = all_solvable_subgroup_ct_sets(2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].types(), vec![ct(&[2]), ct(&[1, 1])]);
        let three = all_solvable_subgroup_ct_sets(3).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].types(), enumerate_partitions(3).unwrap());
    }

    #[test]
    fn degree_five() {
        let sets = all_solvable_subgroup_ct_sets(5).unwrap();
        let agl = CycleTypeSet::from_types(
            5,
            &[ct(&[5]), ct(&[4, 1]), ct(&[2, 2, 1]), ct(&[1, 1, 1, 1, 1])],
            Provenance::Enumerated,
        )
        .unwrap();
        assert!(sets.contains(&agl));
        let s4: Vec<CycleType> = enumerate_partitions(4)
            .unwrap()
            .iter()
            .map(|t| t.merge(&ct(&[1])))
            .collect();
        let s4 = CycleTypeSet::from_types(5, &s4, Provenance::Enumerated).unwrap();
        assert!(sets.contains(&s4));
        assert!(!sets
            .iter()
            .any(|s| s.contains(&ct(&[5])) && s.contains(&ct(&[3, 2]))));
    }

    #[test]
    fn too_large() {
        assert!(all_solvable_subgroup_ct_sets(8).is_err());
    }
}
