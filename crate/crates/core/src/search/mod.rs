//! Exhaustive search for small universal sets inside a box.
//!
//! Candidates are enumerated as index combinations over the box points in
//! row-major order, translated so that they touch both axes. Partial sets
//! are abandoned once their class counts modulo a prune modulus can no
//! longer be completed: for `m = n + 1` the final counts must be almost
//! equal; for `m > n + 1` the set must still be able to contain an
//! `(n + 1)`-subset with almost-equal counts.

mod symmetrize;

pub use symmetrize::{centered_segment, compress_columns, compress_rows, count_close_pairs};

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gauss::GaussInt;
use crate::point_set::PointSet;
use crate::primes::{enumerate_primes, PrimePower};
use crate::residue::Modulus;
use crate::universality::{check_universal_exact, check_universal_superset, Verdict};

/// Comparison key of a normal form: points read row by row.
fn row_major_key(set: &PointSet) -> Vec<(BigInt, BigInt)> {
    let mut key: Vec<_> = set.iter().map(|z| (z.im.clone(), z.re.clone())).collect();
    key.sort();
    key
}

fn translate_to_corner(set: &PointSet) -> PointSet {
    let re_min = set.iter().map(|z| z.re.clone()).min().unwrap_or_default();
    let im_min = set.iter().map(|z| z.im.clone()).min().unwrap_or_default();
    let shift = GaussInt { re: re_min, im: im_min };
    set.map(|z| z - &shift)
}

/// Canonical representative of `set` under translations, multiplication by
/// units and conjugation: the image translated to touch both axes in the
/// first quadrant whose points, read row by row, are lexicographically
/// smallest. These maps permute residue classes modulo every prime power,
/// so they preserve universality.
pub fn normalize(set: &PointSet) -> PointSet {
    let mut best: Option<(Vec<(BigInt, BigInt)>, PointSet)> = None;
    for conjugate in [false, true] {
        for unit in GaussInt::units() {
            let image = set.map(|z| {
                let z = if conjugate { z.conj() } else { z.clone() };
                &unit * &z
            });
            let image = translate_to_corner(&image);
            let key = row_major_key(&image);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, image));
            }
        }
    }
    best.map(|(_, s)| s).unwrap_or_default()
}

/// Order used to pick among normalized sets.
pub fn normal_form_cmp(a: &PointSet, b: &PointSet) -> std::cmp::Ordering {
    row_major_key(a).cmp(&row_major_key(b))
}

/// The lattice box `{a + bi : 0 <= a <= width, 0 <= b <= height}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchBox {
    pub width: u32,
    pub height: u32,
}

impl SearchBox {
    pub fn square(side: u32) -> Self {
        SearchBox { width: side, height: side }
    }

    /// `[0, B]²` with `B = ⌈3√(n+1)⌉`.
    pub fn default_for(degree: usize) -> Self {
        let target = 9 * (degree as u64 + 1);
        let mut b = 0u64;
        while b * b < target {
            b += 1;
        }
        SearchBox::square(b as u32)
    }

    /// Points in row-major order.
    pub fn points(&self) -> Vec<GaussInt> {
        let mut out = Vec::new();
        for im in 0..=self.height as i64 {
            for re in 0..=self.width as i64 {
                out.push(GaussInt::new(re, im));
            }
        }
        out
    }

    fn diameter_norm(&self) -> u64 {
        (self.width as u64).pow(2) + (self.height as u64).pow(2)
    }
}

impl fmt::Display for SearchBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

impl std::str::FromStr for SearchBox {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("box must look like B1xB2, got {s:?}"));
        let (w, h) = s.split_once(['x', 'X']).ok_or_else(bad)?;
        Ok(SearchBox { width: w.trim().parse().map_err(|_| bad())?, height: h.trim().parse().map_err(|_| bad())? })
    }
}

/// Prime powers of norm at most `limit`, sorted.
pub fn prime_powers_up_to(limit: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    for p in enumerate_primes(limit) {
        let mut k = 1;
        while p.pow(k).norm() <= BigInt::from(limit) {
            out.push(p.pow(k));
            k += 1;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub degree: usize,
    pub search_box: SearchBox,
    pub max_cardinality: usize,
    pub prune_moduli: Vec<PrimePower>,
    /// Node limit per top-level branch; `None` sweeps to completion.
    pub node_budget: Option<u64>,
}

impl SearchConfig {
    /// Default box and prune moduli (all prime powers of norm at most
    /// `n + 1`), searching up to `2(n + 1)` points.
    pub fn new(degree: usize) -> Self {
        SearchConfig {
            degree,
            search_box: SearchBox::default_for(degree),
            max_cardinality: 2 * (degree + 1),
            prune_moduli: prime_powers_up_to(degree as u64 + 1),
            node_budget: None,
        }
    }

    pub fn with_box(mut self, search_box: SearchBox) -> Self {
        self.search_box = search_box;
        self
    }

    pub fn with_max_cardinality(mut self, max_cardinality: usize) -> Self {
        self.max_cardinality = max_cardinality;
        self
    }

    pub fn with_node_budget(mut self, budget: Option<u64>) -> Self {
        self.node_budget = budget;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_cardinality < self.degree + 1 {
            return Err(Error::Precondition(format!(
                "max cardinality {} is below {}",
                self.max_cardinality,
                self.degree + 1
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub degree: usize,
    pub minimal_cardinality_found: Option<usize>,
    pub search_box: SearchBox,
    /// Every sweep up to the reported cardinality ran to completion.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub found: Option<PointSet>,
    pub row: GrowthRow,
}

/// Class indices of every box point modulo each filter modulus.
struct ClassTable {
    norms: Vec<u32>,
    classes: Vec<Vec<u32>>,
}

impl ClassTable {
    fn new(points: &[GaussInt], moduli: &[PrimePower]) -> Self {
        let mods: Vec<Modulus> = moduli.iter().map(|pp| Modulus::new(&pp.modulus()).expect("nonzero")).collect();
        let norms = mods.iter().map(|m| m.norm().to_u32().expect("small modulus")).collect();
        let classes = points
            .iter()
            .map(|z| mods.iter().map(|m| m.index_usize(z).expect("small modulus") as u32).collect())
            .collect();
        ClassTable { norms, classes }
    }
}

/// Incremental feasibility of the class counts modulo one modulus.
#[derive(Clone)]
struct Tally {
    counts: Vec<u32>,
    floor: u32,
    spare: u32,
    floor_deficit: u32,
    above: u32,
    over: u32,
}

impl Tally {
    fn new(norm: u32, target: u32) -> Self {
        let floor = target / norm;
        Tally {
            counts: vec![0; norm as usize],
            floor,
            spare: target % norm,
            floor_deficit: floor * norm,
            above: 0,
            over: 0,
        }
    }

    fn add(&mut self, class: u32) {
        let c = &mut self.counts[class as usize];
        if *c < self.floor {
            self.floor_deficit -= 1;
        }
        *c += 1;
        if *c == self.floor + 1 {
            self.above += 1;
        } else if *c == self.floor + 2 {
            self.over += 1;
        }
    }

    fn remove(&mut self, class: u32) {
        let c = &mut self.counts[class as usize];
        if *c == self.floor + 1 {
            self.above -= 1;
        } else if *c == self.floor + 2 {
            self.over -= 1;
        }
        *c -= 1;
        if *c < self.floor {
            self.floor_deficit += 1;
        }
    }

    /// Points still needed for an almost-equal `target`-subset.
    fn needed(&self) -> u32 {
        self.floor_deficit + self.spare.saturating_sub(self.above)
    }

    fn feasible(&self, remaining: u32, exact: bool) -> bool {
        (!exact || self.over == 0) && self.needed() <= remaining
    }
}

struct Sweep<'a> {
    points: &'a [GaussInt],
    prune: &'a ClassTable,
    filter: &'a ClassTable,
    size: usize,
    degree: usize,
    budget: Option<u64>,
}

#[derive(Default)]
struct BranchResult {
    best: Option<PointSet>,
    truncated: bool,
}

impl Sweep<'_> {
    fn exact(&self) -> bool {
        self.size == self.degree + 1
    }

    fn target(&self) -> u32 {
        (self.degree + 1) as u32
    }

    fn branch(&self, first: usize) -> BranchResult {
        let mut tallies: Vec<Tally> = self.prune.norms.iter().map(|&n| Tally::new(n, self.target())).collect();
        let mut chosen = vec![first];
        for (t, &c) in tallies.iter_mut().zip(&self.prune.classes[first]) {
            t.add(c);
        }
        let mut state = DfsState { nodes: 0, result: BranchResult::default() };
        if self.prefix_ok(&tallies, 1) {
            self.dfs(&mut chosen, &mut tallies, &mut state);
        }
        state.result
    }

    fn prefix_ok(&self, tallies: &[Tally], len: usize) -> bool {
        let remaining = (self.size - len) as u32;
        let exact = self.exact();
        tallies.iter().all(|t| t.feasible(remaining, exact))
    }

    fn dfs(&self, chosen: &mut Vec<usize>, tallies: &mut [Tally], state: &mut DfsState) {
        if state.result.truncated {
            return;
        }
        state.nodes += 1;
        if self.budget.is_some_and(|b| state.nodes > b) {
            state.result.truncated = true;
            return;
        }
        if chosen.len() == self.size {
            self.leaf(chosen, state);
            return;
        }
        let last = *chosen.last().expect("nonempty");
        let needed_after = self.size - chosen.len() - 1;
        for next in last + 1..self.points.len() - needed_after {
            for (t, &c) in tallies.iter_mut().zip(&self.prune.classes[next]) {
                t.add(c);
            }
            chosen.push(next);
            if self.prefix_ok(tallies, chosen.len()) {
                self.dfs(chosen, tallies, state);
            }
            chosen.pop();
            for (t, &c) in tallies.iter_mut().zip(&self.prune.classes[next]) {
                t.remove(c);
            }
            if state.result.truncated {
                return;
            }
        }
    }

    fn leaf(&self, chosen: &[usize], state: &mut DfsState) {
        if !chosen.iter().any(|&i| self.points[i].re == BigInt::from(0)) {
            return;
        }
        let exact = self.exact();
        for (j, &norm) in self.filter.norms.iter().enumerate() {
            let mut t = Tally::new(norm, self.target());
            for &i in chosen {
                t.add(self.filter.classes[i][j]);
            }
            if !t.feasible(0, exact) {
                return;
            }
        }
        let set = PointSet::new(chosen.iter().map(|&i| self.points[i].clone()).collect()).expect("distinct");
        let verdict = if exact {
            check_universal_exact(&set).map(|c| c.verdict)
        } else {
            check_universal_superset(&set, self.degree).map(|c| c.verdict)
        };
        if !matches!(verdict, Ok(Verdict::Universal | Verdict::CertifiedUniversalSufficient)) {
            return;
        }
        let normal = normalize(&set);
        let better = match &state.result.best {
            None => true,
            Some(b) => normal_form_cmp(&normal, b).is_lt(),
        };
        if better {
            state.result.best = Some(normal);
        }
    }
}

struct DfsState {
    nodes: u64,
    result: BranchResult,
}

/// Smallest `m` in `n+1 ..= max_cardinality` for which the box holds a set
/// certified `n`-universal, with the first such normalized set.
pub fn search_minimal(config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let points = config.search_box.points();
    let prune = ClassTable::new(&points, &config.prune_moduli);
    let filter_moduli = prime_powers_up_to(config.search_box.diameter_norm());
    let filter = ClassTable::new(&points, &filter_moduli);
    let first_row = config.search_box.width as usize + 1;

    let mut exhaustive = true;
    for size in config.degree + 1..=config.max_cardinality.min(points.len()) {
        let sweep = Sweep {
            points: &points,
            prune: &prune,
            filter: &filter,
            size,
            degree: config.degree,
            budget: config.node_budget,
        };
        // the translated set meets the real axis, so its first point lies in row 0
        let branches: Vec<BranchResult> =
            (0..first_row.min(points.len() + 1 - size)).into_par_iter().map(|first| sweep.branch(first)).collect();
        exhaustive &= branches.iter().all(|b| !b.truncated);
        let best = branches.into_iter().filter_map(|b| b.best).min_by(normal_form_cmp);
        if let Some(found) = best {
            return Ok(SearchOutcome {
                row: GrowthRow {
                    degree: config.degree,
                    minimal_cardinality_found: Some(size),
                    search_box: config.search_box,
                    exhaustive,
                },
                found: Some(found),
            });
        }
    }
    Ok(SearchOutcome {
        found: None,
        row: GrowthRow {
            degree: config.degree,
            minimal_cardinality_found: None,
            search_box: config.search_box,
            exhaustive,
        },
    })
}

/// One search per degree.
pub fn growth_table(configs: &[SearchConfig]) -> Result<Vec<GrowthRow>> {
    if configs.windows(2).any(|w| w[0].degree >= w[1].degree) {
        return Err(Error::Precondition("degrees must ascend".into()));
    }
    configs.iter().map(|c| search_minimal(c).map(|o| o.row)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pairs: &[(i64, i64)]) -> PointSet {
        PointSet::from_pairs(pairs).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&set(&[(1, 0), (2, 0)])), set(&[(0, 0), (1, 0)]));
        assert_eq!(normalize(&set(&[(0, 0), (0, 1)])), set(&[(0, 0), (1, 0)]));
        assert_eq!(normalize(&set(&[(0, 0), (1, 0)])), set(&[(0, 0), (1, 0)]));
        let rect = set(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]);
        assert_eq!(normalize(&rect), rect);
        let rotated = rect.map(|z| z.mul_i());
        assert_eq!(normalize(&rotated), rect);
    }

    #[test]
    fn box_parsing() {
        assert_eq!("6x4".parse::<SearchBox>().unwrap(), SearchBox { width: 6, height: 4 });
        assert!("6".parse::<SearchBox>().is_err());
        assert_eq!(SearchBox::default_for(1), SearchBox::square(5));
        assert_eq!(SearchBox::default_for(3), SearchBox::square(6));
        assert_eq!(SearchBox::square(2).points().len(), 9);
    }

    #[test]
    fn tally_tracks_feasibility() {
        // target 3 over 2 classes: floor 1, one spare
        let mut t = Tally::new(2, 3);
        assert_eq!(t.needed(), 3);
        t.add(0);
        t.add(0);
        assert_eq!(t.needed(), 1);
        assert!(t.feasible(1, true));
        t.add(0);
        assert!(!t.feasible(0, true));
        assert!(!t.feasible(5, true));
        assert!(t.feasible(1, false));
        t.remove(0);
        assert_eq!(t.needed(), 1);
    }

    #[test]
    fn degree_one_in_small_box() {
        let config = SearchConfig::new(1).with_box(SearchBox::square(2));
        let out = search_minimal(&config).unwrap();
        assert_eq!(out.found, Some(set(&[(0, 0), (1, 0)])));
        assert_eq!(out.row.minimal_cardinality_found, Some(2));
        assert!(out.row.exhaustive);
    }

    #[test]
    fn config_validation() {
        let config = SearchConfig::new(3).with_max_cardinality(3);
        assert!(search_minimal(&config).is_err());
        let configs = [SearchConfig::new(2), SearchConfig::new(1)];
        assert!(growth_table(&configs).is_err());
    }
}
