//! Coverage queries, the exact probability that two random elements invariably
//! generate a nonsolvable group, and Monte Carlo estimates of the waiting time.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::atlas::SolvableAtlas;
use crate::ctset::CycleTypeSet;
use crate::error::{Error, Result};
use crate::partition::{factorial, partition_table, ratio, CycleType, PartitionTable, Parity};
use crate::perm::random_permutation;

/// Draws allowed per trial before giving up.
pub const DEFAULT_DRAW_CAP: u32 = 10_000;
pub const MIN_TRIALS: u64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Symmetric,
    Alternating,
}

impl GroupKind {
    pub fn order(self, n: u32) -> BigUint {
        let f = factorial(n);
        match self {
            GroupKind::Alternating if n >= 2 => f / 2u32,
            _ => f,
        }
    }

    fn admits(self, t: &CycleType) -> bool {
        self == GroupKind::Symmetric || t.parity() == Parity::Even
    }
}

/// Conjugacy classes of `S_n`, as cycle types, observed among a tuple of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageQuery {
    degree: u32,
    observed: Vec<CycleType>,
}

impl CoverageQuery {
    pub fn new(degree: u32, observed: Vec<CycleType>) -> Result<Self> {
        if observed.is_empty() {
            return Err(Error::Input("coverage query needs at least one cycle type".into()));
        }
        if let Some(t) = observed.iter().find(|t| t.degree() != degree) {
            return Err(Error::Input(format!(
                "cycle type {t} has degree {}, expected {degree}",
                t.degree()
            )));
        }
        Ok(Self { degree, observed })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn observed(&self) -> &[CycleType] {
        &self.observed
    }
}

/// Per-degree lookup tables derived from an atlas row.
///
/// `containing[i]` is the bitset of atlas sets holding type `i`; `pairs[i]` the
/// bitset of types `j` such that some set holds both `i` and `j`.
#[derive(Clone, Debug)]
pub struct Coverage {
    degree: u32,
    table: &'static PartitionTable,
    set_words: usize,
    containing: Vec<Vec<u64>>,
    pairs: Vec<Vec<u64>>,
}

fn bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

impl Coverage {
    pub fn new(degree: u32, sets: &[CycleTypeSet]) -> Self {
        let table = partition_table(degree).expect("atlas degree has a partition table");
        let k = table.len();
        let set_words = sets.len().div_ceil(64).max(1);
        let mut containing = vec![vec![0u64; set_words]; k];
        for (s, set) in sets.iter().enumerate() {
            for i in set.indices() {
                containing[i][s / 64] |= 1 << (s % 64);
            }
        }
        let type_words = k.div_ceil(64);
        let mut pairs = vec![vec![0u64; type_words]; k];
        for set in sets {
            let w = set.words();
            for i in set.indices() {
                for (dst, src) in pairs[i].iter_mut().zip(w) {
                    *dst |= src;
                }
            }
        }
        Self {
            degree,
            table,
            set_words,
            containing,
            pairs,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn table(&self) -> &'static PartitionTable {
        self.table
    }

    pub fn covers_pair(&self, i: usize, j: usize) -> bool {
        bit(&self.pairs[i], j)
    }

    /// Whether one atlas set contains every listed type index.
    pub fn covers_indices(&self, idx: &[usize]) -> bool {
        match idx {
            [] => true,
            [i] => self.containing[*i].iter().any(|&w| w != 0),
            [i, j] => self.covers_pair(*i, *j),
            _ => {
                let mut acc = vec![u64::MAX; self.set_words];
                for &i in idx {
                    for (a, c) in acc.iter_mut().zip(&self.containing[i]) {
                        *a &= c;
                    }
                }
                acc.iter().any(|&w| w != 0)
            }
        }
    }

    fn sets_containing(&self, i: usize) -> &[u64] {
        &self.containing[i]
    }
}

/// True iff some maximal solvable set contains every observed type.
///
/// `false` means the observed classes invariably generate a nonsolvable group.
pub fn is_covered(q: &CoverageQuery, atlas: &SolvableAtlas) -> Result<bool> {
    let cov = atlas.row(q.degree)?.coverage();
    let mut idx: Vec<usize> = q
        .observed
        .iter()
        .map(|t| cov.table.index_of(t).expect("degree checked"))
        .collect();
    idx.sort_unstable();
    idx.dedup();
    Ok(cov.covers_indices(&idx))
}

/// Exact `P(N_n = 2)` for `G = S_n` or `A_n`: the proportion of pairs in `G²`
/// whose classes lie in no common solvable set.
pub fn exact_p2(n: u32, kind: GroupKind, atlas: &SolvableAtlas) -> Result<BigRational> {
    let cov = atlas.row(n)?.coverage();
    exact_p2_from(cov, kind)
}

pub(crate) fn exact_p2_from(cov: &Coverage, kind: GroupKind) -> Result<BigRational> {
    let n = cov.degree;
    let types = cov.table.types();
    let admitted: Vec<usize> = (0..types.len()).filter(|&i| kind.admits(&types[i])).collect();
    let sizes: Vec<BigUint> = types.iter().map(CycleType::class_size).collect();
    let row_sum = |i: usize| -> BigUint {
        let inner: BigUint = admitted
            .iter()
            .filter(|&&j| !cov.covers_pair(i, j))
            .map(|&j| &sizes[j])
            .sum();
        inner * &sizes[i]
    };
    #[cfg(feature = "parallel")]
    let total: BigUint = {
        use rayon::prelude::*;
        admitted.par_iter().map(|&i| row_sum(i)).sum()
    };
    #[cfg(not(feature = "parallel"))]
    let total: BigUint = admitted.iter().map(|&i| row_sum(i)).sum();
    let order = kind.order(n);
    Ok(ratio(total, &order * &order))
}

/// `x` rounded half away from zero to `digits` decimals, as text.
pub fn round_decimal(x: &BigRational, digits: u32) -> String {
    let scale = num_bigint::BigInt::from(10u32).pow(digits);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let half = BigRational::new(1.into(), 2.into());
    let r = (scaled + half).floor().to_integer();
    let (int, frac) = (&r / &scale, &r % &scale);
    let sign = if x.is_negative() && !r.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits as usize)
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Draws uniform elements of `S_n` until their classes are no longer covered.
pub fn sample_n<R: Rng + ?Sized>(n: u32, atlas: &SolvableAtlas, rng: &mut R) -> Result<u32> {
    sample_n_in(n, GroupKind::Symmetric, atlas, rng, DEFAULT_DRAW_CAP)
}

/// As [`sample_n`], drawing from `kind` (rejection sampling for `A_n`).
pub fn sample_n_in<R: Rng + ?Sized>(
    n: u32,
    kind: GroupKind,
    atlas: &SolvableAtlas,
    rng: &mut R,
    cap: u32,
) -> Result<u32> {
    if n <= 4 {
        return Err(Error::Domain(format!(
            "all subgroups solvable: every subgroup of S_{n} is solvable, so N_{n} is undefined"
        )));
    }
    let cov = atlas.row(n)?.coverage();
    let mut alive = vec![u64::MAX; cov.set_words];
    for r in 1..=cap {
        let sigma = loop {
            let s = random_permutation(n as usize, rng);
            if kind.admits(&s.cycle_type()) {
                break s;
            }
        };
        let i = cov.table.index_of(&sigma.cycle_type()).expect("degree n");
        for (a, c) in alive.iter_mut().zip(cov.sets_containing(i)) {
            *a &= c;
        }
        if alive.iter().all(|&w| w == 0) {
            return Ok(r);
        }
    }
    Err(Error::Cap(cap.into()))
}

/// Summary of repeated draws of `N_n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialStats {
    pub n: u32,
    pub group: GroupKind,
    pub trials: u64,
    pub mean: f64,
    pub std_error: f64,
    pub seed: u64,
    pub histogram: BTreeMap<u32, u64>,
}

impl TrialStats {
    fn from_histogram(n: u32, group: GroupKind, seed: u64, histogram: BTreeMap<u32, u64>) -> Self {
        let trials: u64 = histogram.values().sum();
        let t = trials as f64;
        let sum: f64 = histogram.iter().map(|(&k, &c)| k as f64 * c as f64).sum();
        let mean = sum / t;
        let ss: f64 = histogram
            .iter()
            .map(|(&k, &c)| c as f64 * (k as f64 - mean).powi(2))
            .sum();
        let var = if trials > 1 { ss / (t - 1.0) } else { 0.0 };
        Self {
            n,
            group,
            trials,
            mean,
            std_error: (var / t).sqrt(),
            seed,
            histogram,
        }
    }

    /// Empirical `P(N = 2)` and its standard error.
    pub fn p2(&self) -> (f64, f64) {
        let t = self.trials as f64;
        let p = *self.histogram.get(&2).unwrap_or(&0) as f64 / t;
        (p, (p * (1.0 - p) / t).sqrt())
    }
}

/// Generator for trial `i`: its own ChaCha stream under the common seed, so the
/// outcome does not depend on how trials are spread over threads.
pub fn trial_rng(seed: u64, i: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    rng
}

pub fn estimate_mean_n(n: u32, trials: u64, seed: u64, atlas: &SolvableAtlas) -> Result<TrialStats> {
    estimate_mean_n_in(n, GroupKind::Symmetric, trials, seed, atlas)
}

pub fn estimate_mean_n_in(
    n: u32,
    kind: GroupKind,
    trials: u64,
    seed: u64,
    atlas: &SolvableAtlas,
) -> Result<TrialStats> {
    if trials < MIN_TRIALS {
        return Err(Error::Input(format!("trials must be at least {MIN_TRIALS}, got {trials}")));
    }
    let one = |i: u64| sample_n_in(n, kind, atlas, &mut trial_rng(seed, i), DEFAULT_DRAW_CAP);
    // Fail fast on domain errors before fanning out.
    one(0)?;
    #[cfg(feature = "parallel")]
    let draws: Vec<u32> = {
        use rayon::prelude::*;
        (0..trials).into_par_iter().map(one).collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let draws: Vec<u32> = (0..trials).map(one).collect::<Result<_>>()?;
    let mut histogram = BTreeMap::new();
    for r in draws {
        *histogram.entry(r).or_insert(0) += 1;
    }
    Ok(TrialStats::from_histogram(n, kind, seed, histogram))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::AtlasCaps;
    use crate::group::all_solvable_subgroup_ct_sets;
    use std::sync::OnceLock;

    fn atlas() -> &'static SolvableAtlas {
        static A: OnceLock<SolvableAtlas> = OnceLock::new();
        A.get_or_init(|| SolvableAtlas::build(10, AtlasCaps::standard()).unwrap())
    }

    fn ct(p: &[u32]) -> CycleType {
        CycleType::new(p.to_vec()).unwrap()
    }

    fn q(n: u32, types: &[&[u32]]) -> CoverageQuery {
        CoverageQuery::new(n, types.iter().map(|p| ct(p)).collect()).unwrap()
    }

    // Direct pair summation with an independent per-pair set scan.
    fn p2_oracle(n: u32, sets: &[CycleTypeSet], kind: GroupKind) -> BigRational {
        let types = partition_table(n).unwrap().types();
        let mut total = BigUint::zero();
        for a in types.iter().filter(|t| kind.admits(t)) {
            for b in types.iter().filter(|t| kind.admits(t)) {
                if !sets.iter().any(|s| s.contains(a) && s.contains(b)) {
                    total += a.class_size() * b.class_size();
                }
            }
        }
        let order = kind.order(n);
        ratio(total, &order * &order)
    }

    #[test]
    fn coverage_examples() {
        let a = atlas();
        assert!(is_covered(&q(5, &[&[5]]), a).unwrap());
        assert!(!is_covered(&q(5, &[&[5], &[3, 2]]), a).unwrap());
        assert!(is_covered(&q(5, &[&[5], &[4, 1]]), a).unwrap());
        assert!(!is_covered(&q(8, &[&[7, 1], &[4, 4]]), a).unwrap());
        assert!(matches!(is_covered(&q(11, &[&[11]]), a), Err(Error::Capability(_))));
        assert!(CoverageQuery::new(5, vec![]).is_err());
        assert!(CoverageQuery::new(5, vec![ct(&[3])]).is_err());
    }

    #[test]
    fn single_types_always_covered() {
        let a = atlas();
        for n in 1..=10 {
            for t in partition_table(n).unwrap().types() {
                assert!(is_covered(&CoverageQuery::new(n, vec![t.clone()]).unwrap(), a).unwrap());
            }
        }
    }

    #[test]
    fn adding_types_never_uncovers() {
        let a = atlas();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(5..=10);
            let types = partition_table(n).unwrap().types();
            let mut obs = vec![types[rng.gen_range(0..types.len())].clone()];
            let mut was = true;
            for _ in 0..4 {
                obs.push(types[rng.gen_range(0..types.len())].clone());
                let now = is_covered(&CoverageQuery::new(n, obs.clone()).unwrap(), a).unwrap();
                assert!(was || !now);
                was = now;
            }
        }
    }

    #[test]
    fn exact_values_small() {
        let a = atlas();
        let quarter = BigRational::new(1.into(), 4.into());
        assert_eq!(exact_p2(5, GroupKind::Symmetric, a).unwrap(), quarter);
        for n in 1..=4 {
            assert!(exact_p2(n, GroupKind::Symmetric, a).unwrap().is_zero());
            assert!(exact_p2(n, GroupKind::Alternating, a).unwrap().is_zero());
        }
    }

    #[test]
    fn exact_matches_oracle_up_to_seven() {
        let a = SolvableAtlas::build(7, AtlasCaps::standard()).unwrap();
        for n in 5..=7 {
            let brute = all_solvable_subgroup_ct_sets(n).unwrap();
            for kind in [GroupKind::Symmetric, GroupKind::Alternating] {
                assert_eq!(exact_p2(n, kind, &a).unwrap(), p2_oracle(n, &brute, kind), "{n} {kind:?}");
            }
        }
    }

    #[test]
    fn alternating_five() {
        // Even classes of S_5: [5] (24), [3,1,1] (20), [2,2,1] (15), identity.
        // Uncovered even pairs are exactly ([5],[3,1,1]) in either order.
        let p = exact_p2(5, GroupKind::Alternating, atlas()).unwrap();
        assert_eq!(p, BigRational::new((2 * 24 * 20).into(), (60 * 60).into()));
    }

    #[test]
    fn rounding() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(round_decimal(&r(1, 4), 3), "0.250");
        assert_eq!(round_decimal(&r(2445, 10000), 3), "0.245");
        assert_eq!(round_decimal(&r(-2445, 10000), 3), "-0.245");
        assert_eq!(round_decimal(&r(4, 3), 6), "1.333333");
        assert_eq!(round_decimal(&r(0, 1), 3), "0.000");
        assert_eq!(round_decimal(&r(19999, 10000), 3), "2.000");
    }

    #[test]
    fn sampling_basics() {
        let a = atlas();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert!(sample_n(6, a, &mut rng).unwrap() >= 2);
        }
        assert!(matches!(sample_n(4, a, &mut rng), Err(Error::Domain(m)) if m.contains("all subgroups solvable")));
        assert!(matches!(
            sample_n_in(9, GroupKind::Symmetric, a, &mut rng, 1),
            Err(Error::Cap(1))
        ));
    }

    #[test]
    fn estimates_are_reproducible() {
        let a = atlas();
        let x = estimate_mean_n(7, 500, 9, a).unwrap();
        let y = estimate_mean_n(7, 500, 9, a).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.histogram.values().sum::<u64>(), 500);
        assert!(x.mean >= 2.0);
        assert!(estimate_mean_n(7, 99, 9, a).is_err());
        assert!(estimate_mean_n(4, 100, 9, a).is_err());
    }

    #[test]
    fn sampled_p2_near_exact_at_five() {
        let a = atlas();
        let s = estimate_mean_n(5, 100_000, 3, a).unwrap();
        let (p, se) = s.p2();
        assert!((p - 0.25).abs() <= 5.0 * se, "{p} ± {se}");
    }
}
