//! The solvable atlas: for each degree `n`, the inclusion-maximal cycle-type
//! sets realized by solvable subgroups of `S_n`.
//!
//! A solvable subgroup of `S_n` is either transitive or lies in a direct
//! product of two solvable groups of smaller degree. A transitive solvable
//! group is primitive (hence affine of prime-power degree) or preserves a
//! maximal block system, in which case it embeds in `T wr P` with `T`
//! transitive solvable on a block and `P` primitive solvable on the blocks.
//! Cycle types of wreath and direct products are determined by those of the
//! factors, so the rows can be computed from cycle-type sets alone.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::ctset::{CycleTypeSet, Provenance};
use crate::error::{Error, Result};
use crate::group::{primitive_solvable_ct_sets_with, AffineCaps, DEFAULT_ELEMENT_CAP};
use crate::partition::{CycleType, DEFAULT_PARTITION_CAP};
use crate::prob::Coverage;

/// Format/engine tag written to and required from atlas files.
pub const ENGINE_VERSION: &str = "invgen-atlas/1";
/// Default build ceiling; needs no `GL(4, 2)` work.
pub const DEFAULT_MAX_DEGREE: u32 = 15;
/// Ceiling reachable with stretch caps.
pub const STRETCH_MAX_DEGREE: u32 = 25;

/// Cycle types of `U wr V` from those of `U` (degree `a`) and `V` (degree `b`).
///
/// Each cycle of length `c` of the top permutation independently contributes
/// `{c·ℓ : ℓ ∈ λ}` for some `λ` in the set of `U`.
pub fn wreath_ct(u: &CycleTypeSet, v: &CycleTypeSet) -> Result<CycleTypeSet> {
    let (a, b) = (u.degree(), v.degree());
    let mut out = CycleTypeSet::empty(a * b, Provenance::Wreath)?;
    let table = out.table();
    let u_types = u.types();
    for top in v.types() {
        let mut partial: HashSet<Vec<u32>> = HashSet::from([Vec::new()]);
        for &c in top.parts() {
            let mut next = HashSet::with_capacity(partial.len() * u_types.len());
            for x in &partial {
                for lam in &u_types {
                    let mut parts = x.clone();
                    parts.extend(lam.parts().iter().map(|&l| l * c));
                    parts.sort_unstable_by(|p, q| q.cmp(p));
                    next.insert(parts);
                }
            }
            partial = next;
        }
        for parts in partial {
            out.insert_index(table.index_of_parts(&parts).expect("degree a*b"));
        }
    }
    Ok(out)
}

/// `{λ ⊎ μ}`: cycle types of the direct product acting on `a + b` points.
pub fn product_ct(s1: &CycleTypeSet, s2: &CycleTypeSet) -> Result<CycleTypeSet> {
    let mut out = CycleTypeSet::empty(s1.degree() + s2.degree(), Provenance::Product)?;
    let table = out.table();
    let t2 = s2.types();
    for x in s1.types() {
        for y in &t2 {
            out.insert_index(table.index_of(&x.merge(y)).expect("degree a+b"));
        }
    }
    Ok(out)
}

fn provenance_rank(p: Provenance) -> u8 {
    match p {
        Provenance::Primitive => 0,
        Provenance::Wreath => 1,
        Provenance::Product => 2,
        Provenance::Enumerated => 3,
    }
}

/// Inclusion-maximal members, deduplicated, larger sets first then lexicographic.
pub fn thin_maximal(mut sets: Vec<CycleTypeSet>) -> Result<Vec<CycleTypeSet>> {
    if let Some(first) = sets.first() {
        let d = first.degree();
        if let Some(bad) = sets.iter().find(|s| s.degree() != d) {
            return Err(Error::Input(format!(
                "cannot thin sets of degrees {d} and {} together",
                bad.degree()
            )));
        }
    }
    sets.sort_by(|x, y| {
        x.family_cmp(y)
            .then_with(|| provenance_rank(x.provenance()).cmp(&provenance_rank(y.provenance())))
    });
    sets.dedup();
    let mut kept: Vec<CycleTypeSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    Ok(kept)
}

/// Limits used while building an atlas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasCaps {
    pub max_gl_order: u64,
    pub element_cap: u64,
    pub partition_cap: u32,
    pub stretch: bool,
}

impl AtlasCaps {
    pub fn standard() -> Self {
        Self {
            max_gl_order: AffineCaps::DEFAULT.max_gl_order,
            element_cap: DEFAULT_ELEMENT_CAP,
            partition_cap: DEFAULT_PARTITION_CAP,
            stretch: false,
        }
    }

    pub fn stretch() -> Self {
        Self {
            max_gl_order: AffineCaps::STRETCH.max_gl_order,
            stretch: true,
            ..Self::standard()
        }
    }

    fn affine(&self) -> AffineCaps {
        AffineCaps {
            max_gl_order: self.max_gl_order,
        }
    }
}

impl Default for AtlasCaps {
    fn default() -> Self {
        Self::standard()
    }
}

/// Degree-by-degree builder with memoized primitive, transitive and solvable rows.
#[derive(Debug)]
pub struct AtlasBuilder {
    caps: AtlasCaps,
    primitive: HashMap<u32, Vec<CycleTypeSet>>,
    transitive: Vec<Vec<CycleTypeSet>>,
    solvable: Vec<Vec<CycleTypeSet>>,
}

impl AtlasBuilder {
    pub fn new(caps: AtlasCaps) -> Self {
        Self {
            caps,
            primitive: HashMap::new(),
            transitive: Vec::new(),
            solvable: Vec::new(),
        }
    }

    fn primitive(&mut self, q: u32) -> Result<&[CycleTypeSet]> {
        if !self.primitive.contains_key(&q) {
            let sets = primitive_solvable_ct_sets_with(q, &self.caps.affine())?;
            self.primitive.insert(q, sets);
        }
        Ok(&self.primitive[&q])
    }

    fn check_degree(&self, n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::Input("degree must be at least 1".into()));
        }
        if n > self.caps.partition_cap {
            return Err(Error::Size {
                what: "atlas degree",
                value: n.into(),
                cap: self.caps.partition_cap.into(),
            });
        }
        Ok(())
    }

    // Builds rows 1..=n.
    fn extend_to(&mut self, n: u32) -> Result<()> {
        self.check_degree(n)?;
        while (self.solvable.len() as u32) < n {
            let m = self.solvable.len() as u32 + 1;
            let transitive = self.compute_transitive(m)?;
            self.transitive.push(transitive);
            let solvable = self.compute_solvable(m)?;
            self.solvable.push(solvable);
        }
        Ok(())
    }

    fn compute_transitive(&mut self, n: u32) -> Result<Vec<CycleTypeSet>> {
        if n == 1 {
            return Ok(vec![CycleTypeSet::trivial(1, Provenance::Primitive)?]);
        }
        let mut candidates: Vec<CycleTypeSet> = self.primitive(n)?.to_vec();
        for a in 2..n {
            if n % a != 0 {
                continue;
            }
            let b = n / a;
            let tops = self.primitive(b)?.to_vec();
            let blocks = &self.transitive[a as usize - 1];
            let pairs: Vec<(&CycleTypeSet, &CycleTypeSet)> = blocks
                .iter()
                .flat_map(|t| tops.iter().map(move |p| (t, p)))
                .collect();
            candidates.extend(map_pairs(&pairs, |(t, p)| wreath_ct(t, p))?);
        }
        thin_maximal(candidates)
    }

    fn compute_solvable(&mut self, n: u32) -> Result<Vec<CycleTypeSet>> {
        let mut candidates = self.transitive[n as usize - 1].clone();
        for a in 1..=n / 2 {
            let b = n - a;
            let left = &self.solvable[a as usize - 1];
            let right = &self.solvable[b as usize - 1];
            let pairs: Vec<(&CycleTypeSet, &CycleTypeSet)> = left
                .iter()
                .flat_map(|x| right.iter().map(move |y| (x, y)))
                .collect();
            candidates.extend(map_pairs(&pairs, |(x, y)| fast_product(x, y))?);
        }
        thin_maximal(candidates)
    }

    pub fn transitive_ct_sets(&mut self, n: u32) -> Result<Vec<CycleTypeSet>> {
        self.extend_to(n)?;
        Ok(self.transitive[n as usize - 1].clone())
    }

    pub fn solvable_ct_sets(&mut self, n: u32) -> Result<Vec<CycleTypeSet>> {
        self.extend_to(n)?;
        Ok(self.solvable[n as usize - 1].clone())
    }

    pub fn finish(mut self, max_degree: u32) -> Result<SolvableAtlas> {
        self.extend_to(max_degree)?;
        let rows = self
            .solvable
            .into_iter()
            .take(max_degree as usize)
            .enumerate()
            .map(|(i, sets)| AtlasRow::new(i as u32 + 1, sets))
            .collect();
        Ok(SolvableAtlas {
            max_degree,
            caps: self.caps,
            rows,
        })
    }
}

// Product via index arithmetic; equal to `product_ct` but avoids re-hashing parts lists.
fn fast_product(x: &CycleTypeSet, y: &CycleTypeSet) -> Result<CycleTypeSet> {
    let mut out = CycleTypeSet::empty(x.degree() + y.degree(), Provenance::Product)?;
    let table = out.table();
    let (tx, ty) = (x.table(), y.table());
    let ys: Vec<&CycleType> = y.indices().map(|j| ty.get(j)).collect();
    let mut buf = Vec::with_capacity(out.degree() as usize);
    for i in x.indices() {
        let l = tx.get(i).parts();
        for m in &ys {
            let m = m.parts();
            buf.clear();
            let (mut p, mut q) = (0, 0);
            while p < l.len() && q < m.len() {
                if l[p] >= m[q] {
                    buf.push(l[p]);
                    p += 1;
                } else {
                    buf.push(m[q]);
                    q += 1;
                }
            }
            buf.extend_from_slice(&l[p..]);
            buf.extend_from_slice(&m[q..]);
            out.insert_index(table.index_of_parts(&buf).expect("degree a+b"));
        }
    }
    Ok(out)
}

#[cfg(feature = "parallel")]
fn map_pairs<F>(pairs: &[(&CycleTypeSet, &CycleTypeSet)], f: F) -> Result<Vec<CycleTypeSet>>
where
    F: Fn(&(&CycleTypeSet, &CycleTypeSet)) -> Result<CycleTypeSet> + Sync + Send,
{
    use rayon::prelude::*;
    pairs.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_pairs<F>(pairs: &[(&CycleTypeSet, &CycleTypeSet)], f: F) -> Result<Vec<CycleTypeSet>>
where
    F: Fn(&(&CycleTypeSet, &CycleTypeSet)) -> Result<CycleTypeSet>,
{
    pairs.iter().map(f).collect()
}

/// Maximal cycle-type sets of transitive solvable subgroups of `S_n`.
pub fn transitive_ct_sets(n: u32, caps: AtlasCaps) -> Result<Vec<CycleTypeSet>> {
    AtlasBuilder::new(caps).transitive_ct_sets(n)
}

/// Maximal cycle-type sets of solvable subgroups of `S_n`: one atlas row.
pub fn solvable_ct_sets(n: u32, caps: AtlasCaps) -> Result<Vec<CycleTypeSet>> {
    AtlasBuilder::new(caps).solvable_ct_sets(n)
}

/// One degree of the atlas.
#[derive(Debug)]
pub struct AtlasRow {
    degree: u32,
    sets: Vec<CycleTypeSet>,
    coverage: OnceLock<Coverage>,
}

impl AtlasRow {
    fn new(degree: u32, sets: Vec<CycleTypeSet>) -> Self {
        Self {
            degree,
            sets,
            coverage: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn sets(&self) -> &[CycleTypeSet] {
        &self.sets
    }

    /// Precomputed coverage tables for this degree.
    pub fn coverage(&self) -> &Coverage {
        self.coverage.get_or_init(|| Coverage::new(self.degree, &self.sets))
    }
}

impl PartialEq for AtlasRow {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.sets == other.sets
    }
}

/// Maximal solvable cycle-type sets for degrees `1..=max_degree`.
#[derive(Debug, PartialEq)]
pub struct SolvableAtlas {
    max_degree: u32,
    caps: AtlasCaps,
    rows: Vec<AtlasRow>,
}

#[derive(Serialize, Deserialize)]
struct RowFile {
    degree: u32,
    sets: Vec<Vec<CycleType>>,
    provenance: Vec<Provenance>,
}

#[derive(Serialize, Deserialize)]
struct AtlasFile {
    version: String,
    max_degree: u32,
    caps: AtlasCaps,
    rows: Vec<RowFile>,
}

impl SolvableAtlas {
    pub fn build(max_degree: u32, caps: AtlasCaps) -> Result<Self> {
        AtlasBuilder::new(caps).finish(max_degree)
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn caps(&self) -> &AtlasCaps {
        &self.caps
    }

    pub fn rows(&self) -> &[AtlasRow] {
        &self.rows
    }

    /// The row for degree `n`; degrees outside `1..=max_degree` are a capability error.
    pub fn row(&self, n: u32) -> Result<&AtlasRow> {
        if n == 0 || n > self.max_degree {
            return Err(Error::Capability(format!(
                "atlas covers degrees 1..={}, degree {n} requested",
                self.max_degree
            )));
        }
        Ok(&self.rows[n as usize - 1])
    }

    pub fn sets(&self, n: u32) -> Result<&[CycleTypeSet]> {
        Ok(self.row(n)?.sets())
    }

    /// Prime powers up to the ceiling whose primitive data entered the build.
    pub fn primitive_degrees(&self) -> Vec<u32> {
        (2..=self.max_degree)
            .filter(|&q| crate::primes::prime_power(q.into()).is_some())
            .collect()
    }

    /// Canonical JSON: byte-stable for equal atlases.
    pub fn to_json(&self) -> String {
        let file = AtlasFile {
            version: ENGINE_VERSION.to_string(),
            max_degree: self.max_degree,
            caps: self.caps,
            rows: self
                .rows
                .iter()
                .map(|r| RowFile {
                    degree: r.degree,
                    sets: r.sets.iter().map(|s| s.types()).collect(),
                    provenance: r.sets.iter().map(|s| s.provenance()).collect(),
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("atlas serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AtlasFile = serde_json::from_str(text).map_err(|e| {
            let offset = byte_offset(text, e.line(), e.column());
            Error::Atlas(format!("parse error at byte {offset}: {e}"))
        })?;
        if file.version != ENGINE_VERSION {
            return Err(Error::Atlas(format!(
                "schema mismatch: file has version {:?}, expected {ENGINE_VERSION:?}",
                file.version
            )));
        }
        if file.rows.len() != file.max_degree as usize {
            return Err(Error::Atlas(format!(
                "max_degree is {} but {} rows are present",
                file.max_degree,
                file.rows.len()
            )));
        }
        if file.max_degree >= 16 && file.caps.max_gl_order < 20_160 {
            return Err(Error::Atlas(
                "caps do not admit GL(4,2), yet rows beyond degree 15 are present".into(),
            ));
        }
        if file.max_degree > file.caps.partition_cap {
            return Err(Error::Atlas("max_degree exceeds partition cap".into()));
        }
        let mut rows = Vec::with_capacity(file.rows.len());
        for (i, row) in file.rows.into_iter().enumerate() {
            let n = i as u32 + 1;
            if row.degree != n {
                return Err(Error::Atlas(format!(
                    "row {i} has degree {}, expected {n}",
                    row.degree
                )));
            }
            if row.provenance.len() != row.sets.len() {
                return Err(Error::Atlas(format!("row {n}: provenance length mismatch")));
            }
            let mut sets = Vec::with_capacity(row.sets.len());
            for (types, prov) in row.sets.iter().zip(row.provenance) {
                let s = CycleTypeSet::from_types(n, types, prov)
                    .map_err(|e| Error::Atlas(format!("row {n}: {e}")))?;
                if s.len() != types.len() {
                    return Err(Error::Atlas(format!("row {n}: repeated cycle type")));
                }
                sets.push(s);
            }
            let row = AtlasRow::new(n, sets);
            validate_row(&row)?;
            rows.push(row);
        }
        Ok(Self {
            max_degree: file.max_degree,
            caps: file.caps,
            rows,
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path.as_ref(), self.to_json())
            .map_err(|e| Error::Atlas(format!("{}: {e}", path.as_ref().display())))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Atlas(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }
}

fn validate_row(row: &AtlasRow) -> Result<()> {
    let n = row.degree;
    for s in &row.sets {
        if !s.contains_identity() {
            return Err(Error::Atlas(format!("row {n}: a set lacks the identity type")));
        }
    }
    for (i, a) in row.sets.iter().enumerate() {
        for b in &row.sets[i + 1..] {
            if a.is_subset(b) || b.is_subset(a) {
                return Err(Error::Atlas(format!("row {n}: sets are not inclusion-incomparable")));
            }
        }
    }
    let full_at = |d: u32| CycleTypeSet::full(d, Provenance::Primitive);
    if n <= 2 && (row.sets.len() != 1 || row.sets[0] != full_at(n)?) {
        return Err(Error::Atlas(format!("row {n} must be the full set of S_{n}")));
    }
    Ok(())
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let before: usize = text
        .split_inclusive('\n')
        .take(line - 1)
        .map(str::len)
        .sum();
    (before + column.saturating_sub(1)).min(text.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        affine_group, all_solvable_subgroup_ct_sets, cyclic, direct_product, symmetric,
        wreath_product, PermGroup,
    };
    use crate::partition::enumerate_partitions;
    use proptest::prelude::*;

    fn ct(p: &[u32]) -> CycleType {
        CycleType::new(p.to_vec()).unwrap()
    }

    fn set_of(g: &PermGroup) -> CycleTypeSet {
        g.cycle_type_set(DEFAULT_ELEMENT_CAP).unwrap()
    }

    // Quadratic-scan oracle: keep A iff no other member strictly contains it.
    fn thin_oracle(sets: &[CycleTypeSet]) -> HashSet<CycleTypeSet> {
        sets.iter()
            .filter(|a| !sets.iter().any(|b| a.is_subset(b) && a != &b))
            .cloned()
            .collect()
    }

    #[test]
    fn wreath_examples() {
        let trivial = CycleTypeSet::trivial(1, Provenance::Primitive).unwrap();
        let agl5 = set_of(&affine_group(1, 5).unwrap());
        assert_eq!(wreath_ct(&trivial, &agl5).unwrap(), agl5);
        let s2 = set_of(&symmetric(2));
        let w = wreath_ct(&s2, &s2).unwrap();
        assert_eq!(w, set_of(&wreath_product(&cyclic(2), &cyclic(2))));
        assert_eq!(
            w.types(),
            vec![ct(&[4]), ct(&[2, 2]), ct(&[2, 1, 1]), ct(&[1, 1, 1, 1])]
        );
        let s3 = set_of(&symmetric(3));
        let c3 = set_of(&cyclic(3));
        assert_eq!(
            wreath_ct(&s3, &c3).unwrap(),
            set_of(&wreath_product(&symmetric(3), &cyclic(3)))
        );
    }

    #[test]
    fn product_examples() {
        let one = CycleTypeSet::trivial(1, Provenance::Primitive).unwrap();
        let s3 = set_of(&symmetric(3));
        let p = product_ct(&one, &s3).unwrap();
        let expect: Vec<CycleType> = s3.types().iter().map(|t| t.merge(&ct(&[1]))).collect();
        assert_eq!(p.types(), expect);
        let s2 = set_of(&symmetric(2));
        let p = product_ct(&s2, &s2).unwrap();
        assert_eq!(p.types(), vec![ct(&[2, 2]), ct(&[2, 1, 1]), ct(&[1, 1, 1, 1])]);
        assert!(!p.contains(&ct(&[4])));
        let p = product_ct(&s3, &s2).unwrap();
        assert_eq!(p, set_of(&direct_product(&symmetric(3), &symmetric(2))));
        assert_eq!(fast_product(&s3, &s2).unwrap(), p);
    }

    #[test]
    fn thin_examples() {
        let a = CycleTypeSet::trivial(4, Provenance::Product).unwrap();
        assert_eq!(thin_maximal(vec![a.clone(), a.clone()]).unwrap(), vec![a.clone()]);
        let b = CycleTypeSet::full(4, Provenance::Primitive).unwrap();
        assert_eq!(thin_maximal(vec![a.clone(), b.clone()]).unwrap(), vec![b]);
        let c = CycleTypeSet::trivial(5, Provenance::Product).unwrap();
        assert!(thin_maximal(vec![a, c]).is_err());
    }

    fn arb_family() -> impl Strategy<Value = Vec<CycleTypeSet>> {
        // Degree 6 has 11 partitions; random subsets of them.
        prop::collection::vec(prop::collection::vec(0usize..11, 0..6), 50).prop_map(|fam| {
            fam.into_iter()
                .map(|idx| {
                    let mut s = CycleTypeSet::trivial(6, Provenance::Enumerated).unwrap();
                    for i in idx {
                        s.insert_index(i);
                    }
                    s
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn thin_matches_quadratic_scan(fam in arb_family()) {
            let thinned = thin_maximal(fam.clone()).unwrap();
            let as_set: HashSet<CycleTypeSet> = thinned.iter().cloned().collect();
            prop_assert_eq!(as_set.len(), thinned.len());
            prop_assert_eq!(as_set, thin_oracle(&fam));
            prop_assert_eq!(thin_maximal(thinned.clone()).unwrap(), thinned);
        }
    }

    #[test]
    fn small_rows() {
        let caps = AtlasCaps::standard();
        let three = solvable_ct_sets(3, caps).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].types(), enumerate_partitions(3).unwrap());
        let four = transitive_ct_sets(4, caps).unwrap();
        assert_eq!(four.len(), 1);
        assert_eq!(four[0].types(), enumerate_partitions(4).unwrap());
        for p in [5, 7, 11, 13] {
            let t = transitive_ct_sets(p, caps).unwrap();
            assert_eq!(t, vec![set_of(&affine_group(1, p).unwrap())]);
        }
    }

    #[test]
    fn degree_six_transitive_rows_are_wreaths() {
        let caps = AtlasCaps::standard();
        let s2 = set_of(&symmetric(2));
        let s3 = set_of(&symmetric(3));
        let expect =
            thin_maximal(vec![wreath_ct(&s2, &s3).unwrap(), wreath_ct(&s3, &s2).unwrap()])
                .unwrap();
        assert_eq!(transitive_ct_sets(6, caps).unwrap(), expect);
    }

    #[test]
    fn rows_match_brute_force_up_to_six() {
        let atlas = SolvableAtlas::build(6, AtlasCaps::standard()).unwrap();
        for n in 1..=6 {
            let a: HashSet<_> = atlas.sets(n).unwrap().iter().cloned().collect();
            let b: HashSet<_> = all_solvable_subgroup_ct_sets(n).unwrap().into_iter().collect();
            assert_eq!(a, b, "degree {n}");
        }
    }

    #[test]
    fn degree_five_row() {
        let row = solvable_ct_sets(5, AtlasCaps::standard()).unwrap();
        assert!(!row.iter().any(|s| s.contains(&ct(&[5])) && s.contains(&ct(&[3, 2]))));
        assert!(row.iter().any(|s| s.contains(&ct(&[5])) && s.contains(&ct(&[4, 1]))));
    }

    #[test]
    fn json_round_trip_and_errors() {
        let atlas = SolvableAtlas::build(8, AtlasCaps::standard()).unwrap();
        let text = atlas.to_json();
        let back = SolvableAtlas::from_json(&text).unwrap();
        assert_eq!(back, atlas);
        assert_eq!(back.to_json(), text);

        let cut = &text[..text.len() / 2];
        match SolvableAtlas::from_json(cut) {
            Err(Error::Atlas(m)) => assert!(m.contains("byte"), "{m}"),
            other => panic!("{other:?}"),
        }
        let wrong = text.replace(ENGINE_VERSION, "invgen-atlas/0");
        assert!(matches!(SolvableAtlas::from_json(&wrong), Err(Error::Atlas(_))));
        assert!(matches!(atlas.row(9), Err(Error::Capability(_))));
        assert!(matches!(SolvableAtlas::load("/nonexistent/x.atlas.json"), Err(Error::Atlas(_))));
    }

    #[test]
    fn invariant_violations_are_rejected() {
        let atlas = SolvableAtlas::build(3, AtlasCaps::standard()).unwrap();
        let text = atlas.to_json();
        // Row 3 reduced to a set missing the identity.
        let broken = text.replace("[[[3],[2,1],[1,1,1]]]", "[[[3],[2,1]]]");
        assert_ne!(broken, text);
        assert!(matches!(SolvableAtlas::from_json(&broken), Err(Error::Atlas(_))));
    }

    #[test]
    fn byte_offsets() {
        assert_eq!(byte_offset("ab\ncd", 2, 2), 4);
        assert_eq!(byte_offset("abc", 1, 1), 0);
    }
}
