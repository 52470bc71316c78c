//! Resolving, strong resolving and doubly resolving sets: definitional
//! checkers, the pair-coverage constraint systems, and exact minimum
//! solvers.
//!
//! Both exact solvers (`β` and `ψ`) run the same iterative-deepening
//! branch-and-bound. The state is the partition of `V` into classes of
//! vertices the current set does not yet tell apart. Each node picks the
//! unresolved pair with the fewest admissible resolvers and branches on
//! them in ascending id order, excluding earlier siblings. A class of size
//! `c` needs at least `⌈log_b c⌉` more vertices, where `b` bounds how many
//! parts one vertex can split a class into.

use std::collections::HashSet;
use std::time::Instant;

use crate::bits::{word_count, BitSet};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::solve::{SolveResult, Status};
use crate::symmetry::root_branches;

fn check_vertices(dm: &DistanceMatrix, set: &[usize]) -> Result<()> {
    match set.iter().find(|&&v| v >= dm.n()) {
        Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n: dm.n() }),
        None => Ok(()),
    }
}

/// True iff every pair of distinct vertices has different distances to
/// some member of `set`.
pub fn is_resolving_set(dm: &DistanceMatrix, set: &[usize]) -> Result<bool> {
    dm.require_connected()?;
    check_vertices(dm, set)?;
    let mut seen = HashSet::with_capacity(dm.n());
    Ok((0..dm.n()).all(|u| seen.insert(set.iter().map(|&w| dm.get(u, w)).collect::<Vec<_>>())))
}

/// `w` strongly resolves `u, v`: `v` lies on a shortest `u–w` path or `u`
/// lies on a shortest `v–w` path.
#[inline]
pub fn strongly_resolves(dm: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    let (duw, dvw, duv) = (dm.get(u, w) as u64, dm.get(v, w) as u64, dm.get(u, v) as u64);
    duw == duv + dvw || dvw == duv + duw
}

/// True iff every pair of distinct vertices is strongly resolved by some
/// member of `set`.
pub fn is_strong_resolving_set(dm: &DistanceMatrix, set: &[usize]) -> Result<bool> {
    dm.require_connected()?;
    check_vertices(dm, set)?;
    let n = dm.n();
    let members = BitSet::from_iter_with_len(n, set.iter().copied());
    // a member strongly resolves every pair it belongs to
    let outside: Vec<usize> = (0..n).filter(|&v| !members.contains(v)).collect();
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i + 1..] {
            if !set.iter().any(|&w| strongly_resolves(dm, w, u, v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `x, y` doubly resolve `u, v`: `d(u,x) − d(u,y) ≠ d(v,x) − d(v,y)`.
#[inline]
pub fn doubly_resolves(dm: &DistanceMatrix, x: usize, y: usize, u: usize, v: usize) -> bool {
    let d = |a, b| dm.get(a, b) as i64;
    d(u, x) - d(u, y) != d(v, x) - d(v, y)
}

/// True iff every pair of distinct vertices is doubly resolved by two
/// members of `set`. Sets with fewer than two vertices are rejected.
pub fn is_doubly_resolving_set(dm: &DistanceMatrix, set: &[usize]) -> Result<bool> {
    dm.require_connected()?;
    check_vertices(dm, set)?;
    if set.len() < 2 {
        return Err(Error::SetTooSmall {
            needed: 2,
            actual: set.len(),
        });
    }
    // u, v are not doubly resolved iff d(u,x) − d(v,x) is the same for all
    // x in the set, i.e. their distance vectors agree up to a constant.
    let anchor = set[0];
    let mut seen = HashSet::with_capacity(dm.n());
    Ok((0..dm.n()).all(|u| {
        let base = dm.get(u, anchor) as i64;
        seen.insert(
            set[1..]
                .iter()
                .map(|&x| dm.get(u, x) as i64 - base)
                .collect::<Vec<_>>(),
        )
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverMode {
    Strong,
    Doubly,
}

/// Colex rank of the vertex pair `{i, j}`.
#[inline]
pub fn pair_rank(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

/// Inverse of [`pair_rank`].
pub fn pair_unrank(rank: usize) -> (usize, usize) {
    let mut b = 1;
    while (b + 1) * b / 2 <= rank {
        b += 1;
    }
    (rank - b * (b - 1) / 2, b)
}

/// All pairs `u < v` in colex order.
pub fn colex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v)))
}

/// Pair-coverage constraint system: one item per unordered vertex pair,
/// covered by the vertices (strong mode) or vertex pairs (doubly mode,
/// indexed by [`pair_rank`]) whose coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub mode: CoverMode,
    pub n: usize,
    pub items: Vec<(usize, usize)>,
    pub coverers: Vec<BitSet>,
}

impl ConstraintSystem {
    /// True iff `set` meets every item: in doubly mode some pair of `set`
    /// must be a coverer.
    pub fn is_satisfied_by(&self, set: &[usize]) -> bool {
        match self.mode {
            CoverMode::Strong => self
                .coverers
                .iter()
                .all(|c| set.iter().any(|&v| c.contains(v))),
            CoverMode::Doubly => self.coverers.iter().all(|c| {
                set.iter().enumerate().any(|(a, &x)| {
                    set[a + 1..]
                        .iter()
                        .any(|&y| x != y && c.contains(pair_rank(x, y)))
                })
            }),
        }
    }

    pub fn empty_items(&self) -> Vec<(usize, usize)> {
        self.items
            .iter()
            .zip(&self.coverers)
            .filter(|(_, c)| c.is_empty())
            .map(|(&p, _)| p)
            .collect()
    }
}

/// Strong mode: `A[(u,v), i] = 1` iff `d(u,i) = d(u,v) + d(v,i)` or
/// `d(v,i) = d(v,u) + d(u,i)`. Doubly mode: `A[(u,v), (i,j)] = 1` iff
/// `d(u,i) − d(v,i) ≠ d(u,j) − d(v,j)`. Items are the pairs in colex order.
pub fn build_constraint_system(dm: &DistanceMatrix, mode: CoverMode) -> Result<ConstraintSystem> {
    dm.require_connected()?;
    let n = dm.n();
    let items: Vec<(usize, usize)> = colex_pairs(n).collect();
    let coverers = items
        .iter()
        .map(|&(u, v)| match mode {
            CoverMode::Strong => {
                BitSet::from_iter_with_len(n, (0..n).filter(|&i| strongly_resolves(dm, i, u, v)))
            }
            CoverMode::Doubly => {
                let delta: Vec<i64> = (0..n)
                    .map(|i| dm.get(u, i) as i64 - dm.get(v, i) as i64)
                    .collect();
                BitSet::from_iter_with_len(
                    n * n.saturating_sub(1) / 2,
                    colex_pairs(n)
                        .filter(|&(i, j)| delta[i] != delta[j])
                        .map(|(i, j)| pair_rank(i, j)),
                )
            }
        })
        .collect();
    Ok(ConstraintSystem {
        mode,
        n,
        items,
        coverers,
    })
}

/// Minimum set of vertices meeting every coverer set of a strong-mode
/// system (a set-cover instance), by depth-first branch-and-bound.
///
/// Branches on the uncovered item with fewest admissible coverers; the
/// bound is a greedy packing of uncovered items with pairwise disjoint
/// admissible coverers.
pub fn min_set_cover(cs: &ConstraintSystem, budget: u64) -> Result<SolveResult> {
    if cs.mode != CoverMode::Strong {
        return Err(Error::InvalidParameters(
            "set-cover search needs vertex coverers (strong mode)".into(),
        ));
    }
    min_cover_sets(cs.n, &cs.coverers, budget)
}

/// Minimum hitting set: smallest subset of `0..universe` meeting every set.
pub fn min_cover_sets(universe: usize, sets: &[BitSet], budget: u64) -> Result<SolveResult> {
    let start = Instant::now();
    if let Some(i) = sets.iter().position(|s| s.is_empty()) {
        return Err(Error::InvalidModel(format!("item {i} has no coverer")));
    }
    let greedy = greedy_cover(universe, sets);
    let mut search = CoverSearch {
        sets,
        budget,
        nodes: 0,
        best: greedy,
        exhausted: false,
    };
    let mut chosen = Vec::new();
    let mut excluded = BitSet::new(universe);
    let all: Vec<usize> = (0..sets.len()).collect();
    search.dfs(&all, &mut chosen, &mut excluded);
    let mut certificate = search.best.clone();
    certificate.sort_unstable();
    let value = certificate.len();
    let (status, bound) = if search.exhausted {
        (Status::UpperBoundOnly, packing_bound(sets))
    } else {
        (Status::Optimal, value)
    };
    Ok(SolveResult {
        value,
        certificate,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
        status,
        bound,
    })
}

fn greedy_cover(universe: usize, sets: &[BitSet]) -> Vec<usize> {
    let mut uncovered: Vec<usize> = (0..sets.len()).collect();
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let best = (0..universe)
            .max_by_key(|&v| {
                (
                    uncovered.iter().filter(|&&i| sets[i].contains(v)).count(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("nonempty universe");
        chosen.push(best);
        uncovered.retain(|&i| !sets[i].contains(best));
    }
    chosen
}

/// Number of sets in a greedy packing of pairwise disjoint sets.
fn packing_bound(sets: &[BitSet]) -> usize {
    let Some(first) = sets.first() else { return 0 };
    let mut used = BitSet::new(first.len());
    let mut count = 0;
    for s in sets {
        if s.is_disjoint(&used) {
            used.union_with(s);
            count += 1;
        }
    }
    count
}

struct CoverSearch<'a> {
    sets: &'a [BitSet],
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
    exhausted: bool,
}

impl CoverSearch<'_> {
    fn dfs(&mut self, uncovered: &[usize], chosen: &mut Vec<usize>, excluded: &mut BitSet) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + 1 >= self.best.len() {
            return;
        }
        // disjoint admissible coverer sets each need their own vertex
        let mut used = BitSet::new(excluded.len());
        let mut lb = 0;
        let mut pivot = None;
        let mut pivot_count = usize::MAX;
        for &i in uncovered {
            let count = self.sets[i].difference_count(excluded);
            if count == 0 {
                return;
            }
            if count < pivot_count {
                pivot_count = count;
                pivot = Some(i);
            }
            let mut avail = self.sets[i].clone();
            avail.difference_with(excluded);
            if avail.is_disjoint(&used) {
                used.union_with(&avail);
                lb += 1;
            }
        }
        if chosen.len() + lb >= self.best.len() {
            return;
        }
        let pivot = pivot.expect("uncovered is nonempty");
        let mut candidates = self.sets[pivot].clone();
        candidates.difference_with(excluded);
        let candidates = candidates.to_vec();
        for &v in &candidates {
            let rest: Vec<usize> = uncovered
                .iter()
                .copied()
                .filter(|&i| !self.sets[i].contains(v))
                .collect();
            chosen.push(v);
            self.dfs(&rest, chosen, excluded);
            chosen.pop();
            excluded.insert(v);
            if self.exhausted {
                break;
            }
        }
        for &v in &candidates {
            excluded.remove(v);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SearchMode {
    Metric,
    Doubly,
}

/// Per-pair table of `E[(u,v)][t] = { w : d(u,w) − d(v,w) = t }` for
/// `t ∈ [−D, D]`. Resolvers of `(u,v)` relative to a reference difference
/// `t₀` are the complement of `E[(u,v)][t₀]`.
struct PairTable {
    n: usize,
    diam: usize,
    words: usize,
    dist: Vec<u16>,
    cached: Option<Vec<u64>>,
}

/// Caches larger than this many words are computed on demand instead.
const PAIR_TABLE_WORD_CAP: usize = 1 << 26;

impl PairTable {
    fn new(dm: &DistanceMatrix) -> Self {
        let n = dm.n();
        let diam = dm.max_finite() as usize;
        let words = word_count(n);
        let dist: Vec<u16> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .map(|(u, v)| dm.get(u, v).min(u16::MAX as u32) as u16)
            .collect();
        let width = 2 * diam + 1;
        let pairs = n * n.saturating_sub(1) / 2;
        let mut table = PairTable {
            n,
            diam,
            words,
            dist,
            cached: None,
        };
        let total = pairs.saturating_mul(width).saturating_mul(words);
        if total <= PAIR_TABLE_WORD_CAP {
            let mut flat = vec![0u64; total];
            for (u, v) in colex_pairs(n) {
                let base = pair_rank(u, v) * width * words;
                for w in 0..n {
                    let t = table.delta(u, v, w) + diam as i32;
                    flat[base + t as usize * words + w / 64] |= 1 << (w % 64);
                }
            }
            table.cached = Some(flat);
        }
        table
    }

    #[inline]
    fn d(&self, u: usize, v: usize) -> i32 {
        self.dist[u * self.n + v] as i32
    }

    #[inline]
    fn delta(&self, u: usize, v: usize, w: usize) -> i32 {
        self.d(u, w) - self.d(v, w)
    }

    /// Writes `{ w : d(u,w) − d(v,w) ≠ t } ∖ excluded` into `out`.
    fn resolvers_into(&self, u: usize, v: usize, t: i32, excluded: &BitSet, out: &mut [u64]) {
        match &self.cached {
            Some(flat) => {
                let width = 2 * self.diam + 1;
                let base = (pair_rank(u, v) * width + (t + self.diam as i32) as usize) * self.words;
                let row = &flat[base..base + self.words];
                for ((o, r), x) in out.iter_mut().zip(row).zip(excluded.words()) {
                    *o = !r & !x;
                }
                let rem = self.n % 64;
                if rem != 0 {
                    out[self.words - 1] &= (1u64 << rem) - 1;
                }
            }
            None => {
                out.iter_mut().for_each(|o| *o = 0);
                for w in 0..self.n {
                    if !excluded.contains(w) && self.delta(u, v, w) != t {
                        out[w / 64] |= 1 << (w % 64);
                    }
                }
            }
        }
    }
}

enum Outcome {
    Found,
    Fail,
    Budget,
}

struct ResolveSearch<'a> {
    mode: SearchMode,
    table: &'a PairTable,
    base: usize,
    budget: u64,
    nodes: u64,
}

impl ResolveSearch<'_> {
    fn n(&self) -> usize {
        self.table.n
    }

    /// Splits classes by the value vertex `w` assigns each vertex.
    fn refine(&self, class: &[u32], w: usize, anchor: Option<usize>) -> (Vec<u32>, usize) {
        let n = self.n();
        let diam = self.table.diam as i32;
        let width = self.base;
        let mut map: Vec<u32> = vec![u32::MAX; class.iter().map(|&c| c as usize + 1).max().unwrap_or(0) * width];
        let mut next = 0u32;
        let out = (0..n)
            .map(|u| {
                let value = match anchor {
                    None => self.table.d(u, w),
                    Some(a) => self.table.d(u, w) - self.table.d(u, a) + diam,
                } as usize;
                let slot = &mut map[class[u] as usize * width + value];
                if *slot == u32::MAX {
                    *slot = next;
                    next += 1;
                }
                *slot
            })
            .collect();
        (out, next as usize)
    }

    /// Vertices grouped by class, classes of size ≥ 2 only.
    fn unresolved_groups(&self, class: &[u32], nclasses: usize) -> Vec<Vec<usize>> {
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); nclasses];
        for (u, &c) in class.iter().enumerate() {
            groups[c as usize].push(u);
        }
        groups.retain(|g| g.len() >= 2);
        groups
    }

    /// Reference difference for pair `(u,v)`: 0 for resolving sets,
    /// `d(u,a) − d(v,a)` for doubly resolving sets anchored at `a`.
    fn reference(&self, u: usize, v: usize, anchor: Option<usize>) -> i32 {
        match anchor {
            None => 0,
            Some(a) => self.table.delta(u, v, a),
        }
    }

    fn parts_needed(&self, largest: usize) -> usize {
        let mut need = 0;
        let mut reach = 1usize;
        while reach < largest {
            reach = reach.saturating_mul(self.base);
            need += 1;
        }
        need
    }

    fn dfs(
        &mut self,
        chosen: &mut Vec<usize>,
        class: &[u32],
        nclasses: usize,
        excluded: &mut BitSet,
        target: usize,
    ) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::Budget;
        }
        let groups = self.unresolved_groups(class, nclasses);
        if groups.is_empty() {
            return Outcome::Found;
        }
        let remaining = target.saturating_sub(chosen.len());
        let largest = groups.iter().map(Vec::len).max().unwrap_or(0);
        let anchor = match self.mode {
            SearchMode::Metric => None,
            SearchMode::Doubly => chosen.first().copied(),
        };
        let anchor_cost = usize::from(self.mode == SearchMode::Doubly && anchor.is_none());
        if self.parts_needed(largest) + anchor_cost > remaining {
            return Outcome::Fail;
        }

        let words = self.table.words;
        let mut scratch = vec![0u64; words];
        if remaining == 1 {
            // one more vertex must resolve every open pair at once
            let mut acc = excluded.complement();
            for g in &groups {
                for (i, &u) in g.iter().enumerate() {
                    for &v in &g[i + 1..] {
                        let t = self.reference(u, v, anchor);
                        self.table.resolvers_into(u, v, t, excluded, &mut scratch);
                        let mut any = 0;
                        for (a, s) in acc.words_mut().iter_mut().zip(&scratch) {
                            *a &= s;
                            any |= *a;
                        }
                        if any == 0 {
                            return Outcome::Fail;
                        }
                    }
                }
            }
            let w = acc.first().expect("nonempty intersection");
            chosen.push(w);
            return Outcome::Found;
        }

        // pivot: open pair with the fewest admissible resolvers
        let mut pivot = None;
        let mut pivot_count = usize::MAX;
        'scan: for g in &groups {
            for (i, &u) in g.iter().enumerate() {
                for &v in &g[i + 1..] {
                    let t = self.reference(u, v, anchor);
                    self.table.resolvers_into(u, v, t, excluded, &mut scratch);
                    let count: usize = scratch.iter().map(|w| w.count_ones() as usize).sum();
                    if count < pivot_count {
                        pivot_count = count;
                        pivot = Some((u, v, t));
                        if count == 0 {
                            break 'scan;
                        }
                    }
                }
            }
        }
        if pivot_count == 0 {
            return Outcome::Fail;
        }
        let (u, v, t) = pivot.expect("groups are nonempty");
        self.table.resolvers_into(u, v, t, excluded, &mut scratch);
        let candidates: Vec<usize> = BitSet::from_words(self.n(), scratch).to_vec();

        for &w in &candidates {
            chosen.push(w);
            excluded.insert(w);
            let (next, count) = match (self.mode, anchor) {
                (SearchMode::Doubly, None) => (class.to_vec(), nclasses),
                (_, a) => self.refine(class, w, a),
            };
            match self.dfs(chosen, &next, count, excluded, target) {
                Outcome::Fail => {
                    chosen.pop();
                }
                // the caller abandons `excluded` on success or exhaustion
                other => return other,
            }
        }
        for &w in &candidates {
            excluded.remove(w);
        }
        Outcome::Fail
    }
}

/// Greedy upper bound: repeatedly add the vertex producing the most classes.
fn greedy_resolving(search: &ResolveSearch<'_>) -> Vec<usize> {
    let n = search.n();
    let mut class = vec![0u32; n];
    let mut nclasses = 1;
    let mut chosen = Vec::new();
    if search.mode == SearchMode::Doubly {
        chosen.push(0);
    }
    while nclasses < n {
        let anchor = match search.mode {
            SearchMode::Metric => None,
            SearchMode::Doubly => chosen.first().copied(),
        };
        let (w, (next, count)) = (0..n)
            .filter(|w| !chosen.contains(w))
            .map(|w| (w, search.refine(&class, w, anchor)))
            .max_by_key(|(w, (_, c))| (*c, std::cmp::Reverse(*w)))
            .expect("an unchosen vertex exists while classes are not discrete");
        chosen.push(w);
        class = next;
        nclasses = count;
    }
    chosen
}

fn solve_resolving(g: &Graph, mode: SearchMode, budget: u64, lower: usize) -> Result<SolveResult> {
    let start = Instant::now();
    let dm = all_pairs_distances(g);
    dm.require_connected()?;
    let n = g.n_vertices();
    let table = PairTable::new(&dm);
    let base = match mode {
        SearchMode::Metric => table.diam + 1,
        SearchMode::Doubly => 2 * table.diam + 1,
    };
    let mut search = ResolveSearch {
        mode,
        table: &table,
        base,
        budget,
        nodes: 0,
    };
    let mut best = greedy_resolving(&search);
    best.sort_unstable();
    let plan = root_branches(g);

    let mut target = lower;
    let mut status = Status::Optimal;
    'deepen: while target < best.len() {
        for branch in plan.for_target(target) {
            if branch.chosen.len() > target {
                continue;
            }
            let mut chosen = branch.chosen.clone();
            let mut excluded = branch.excluded.clone();
            let mut class = vec![0u32; n];
            let mut nclasses = 1;
            let mut anchor = None;
            for &w in &branch.chosen {
                excluded.insert(w);
                match (mode, anchor) {
                    (SearchMode::Doubly, None) => anchor = Some(w),
                    (_, a) => (class, nclasses) = search.refine(&class, w, a),
                }
            }
            match search.dfs(&mut chosen, &class, nclasses, &mut excluded, target) {
                Outcome::Found => {
                    chosen.sort_unstable();
                    best = chosen;
                    break 'deepen;
                }
                Outcome::Fail => {}
                Outcome::Budget => {
                    status = Status::UpperBoundOnly;
                    break 'deepen;
                }
            }
        }
        target += 1;
    }
    let bound = match status {
        Status::Optimal => best.len(),
        Status::UpperBoundOnly => target,
    };
    Ok(SolveResult {
        value: best.len(),
        certificate: best,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
        status,
        bound,
    })
}

/// Exact metric dimension `β(G)` with a metric basis as certificate.
///
/// A single vertex has `β = 0`. On budget exhaustion the result carries
/// the best resolving set found and `bound` is the largest size proven
/// infeasible plus one.
pub fn metric_dimension_exact(g: &Graph, budget: u64) -> Result<SolveResult> {
    if g.n_vertices() <= 1 {
        return Ok(SolveResult {
            value: 0,
            certificate: Vec::new(),
            nodes_explored: 0,
            elapsed: Default::default(),
            status: Status::Optimal,
            bound: 0,
        });
    }
    solve_resolving(g, SearchMode::Metric, budget, 1)
}

/// Exact doubly metric dimension `ψ(G)` for graphs with at least two
/// vertices. Starts deepening at `max(2, β(G))`, since every doubly
/// resolving set is resolving.
pub fn doubly_metric_dimension_exact(g: &Graph, budget: u64) -> Result<SolveResult> {
    if g.n_vertices() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            actual: g.n_vertices(),
        });
    }
    let start = Instant::now();
    let beta = metric_dimension_exact(g, budget)?;
    let mut res = solve_resolving(g, SearchMode::Doubly, budget, beta.bound.max(2))?;
    res.nodes_explored += beta.nodes_explored;
    res.elapsed = start.elapsed();
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{doubly_basis_j2_construction, johnson, kneser, subsets_to_vertices};
    use crate::solve::DEFAULT_BUDGET;
    use crate::subset::KSubset;

    fn dm(g: &Graph) -> DistanceMatrix {
        all_pairs_distances(g)
    }

    fn triangle() -> Graph {
        Graph::complete(3)
    }

    #[test]
    fn resolving_checker_examples() {
        let p = dm(&Graph::path(3));
        assert_eq!(is_resolving_set(&p, &[0]), Ok(true));
        assert_eq!(is_resolving_set(&p, &[1]), Ok(false));
        let g = johnson(6, 2).unwrap();
        let all: Vec<usize> = (0..g.n_vertices()).collect();
        assert_eq!(is_resolving_set(&dm(&g), &all), Ok(true));
        let s = subsets_to_vertices(&g, &doubly_basis_j2_construction(6).unwrap()).unwrap();
        assert_eq!(is_resolving_set(&dm(&g), &s), Ok(true));
    }

    #[test]
    fn checkers_reject_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = dm(&g);
        assert_eq!(is_resolving_set(&d, &[0]), Err(Error::Disconnected));
        assert_eq!(is_strong_resolving_set(&d, &[0]), Err(Error::Disconnected));
        assert_eq!(is_doubly_resolving_set(&d, &[0, 1]), Err(Error::Disconnected));
        assert_eq!(
            metric_dimension_exact(&g, DEFAULT_BUDGET).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn strongly_resolves_examples() {
        let p = dm(&Graph::path(3));
        assert!(strongly_resolves(&p, 0, 1, 2));
        let t = dm(&triangle());
        for (w, u, v) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
            assert!(!strongly_resolves(&t, w, u, v));
        }
        assert!(strongly_resolves(&t, 1, 1, 2));
        assert!(strongly_resolves(&t, 2, 1, 2));
    }

    #[test]
    fn strong_checker_examples() {
        let k4 = dm(&Graph::complete(4));
        assert_eq!(is_strong_resolving_set(&k4, &[0, 1, 2]), Ok(true));
        assert_eq!(is_strong_resolving_set(&k4, &[0, 1]), Ok(false));
        let p = dm(&Graph::path(3));
        assert_eq!(is_strong_resolving_set(&p, &[0]), Ok(true));
        assert_eq!(is_strong_resolving_set(&p, &[1]), Ok(false));
    }

    #[test]
    fn doubly_resolves_examples() {
        let p = dm(&Graph::path(4));
        assert!(doubly_resolves(&p, 0, 3, 0, 3));
        assert!(!doubly_resolves(&p, 2, 2, 0, 3));

        // Petersen: x={1,2}, y={1,3}, u={4,5}, v={2,5}. Kneser distances
        // from intersections: disjoint → 1, overlapping distinct → 2.
        let g = kneser(5, 2).unwrap();
        let id = |e: &[usize]| g.vertex_of(&KSubset::new(5, e).unwrap()).unwrap();
        let kd = |a: &[usize], b: &[usize]| -> i64 {
            let (a, b) = (KSubset::new(5, a).unwrap(), KSubset::new(5, b).unwrap());
            if a == b {
                0
            } else if a.is_disjoint(&b) {
                1
            } else {
                2
            }
        };
        let (x, y, u, v) = (&[1, 2][..], &[1, 3][..], &[4, 5][..], &[2, 5][..]);
        let expected = kd(u, x) - kd(u, y) != kd(v, x) - kd(v, y);
        assert!(expected);
        assert_eq!(doubly_resolves(&dm(&g), id(x), id(y), id(u), id(v)), expected);
    }

    #[test]
    fn doubly_checker_examples() {
        let g = kneser(5, 2).unwrap();
        let d = subsets_to_vertices(
            &g,
            &[
                KSubset::new(5, &[1, 2]).unwrap(),
                KSubset::new(5, &[1, 3]).unwrap(),
                KSubset::new(5, &[1, 4]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(is_doubly_resolving_set(&dm(&g), &d), Ok(true));

        let j = johnson(6, 2).unwrap();
        let s = subsets_to_vertices(&j, &doubly_basis_j2_construction(6).unwrap()).unwrap();
        assert_eq!(is_doubly_resolving_set(&dm(&j), &s), Ok(true));

        // path a–b–c: d(·,a) − d(·,b) is −1, 1, 1, so {a,b} leaves (b,c)
        // unresolved; d(·,a) − d(·,c) is −2, 0, 2
        let p = dm(&Graph::path(3));
        assert_eq!(is_doubly_resolving_set(&p, &[0, 1]), Ok(false));
        assert_eq!(is_doubly_resolving_set(&p, &[0, 2]), Ok(true));
        assert_eq!(
            is_doubly_resolving_set(&p, &[0]),
            Err(Error::SetTooSmall { needed: 2, actual: 1 })
        );
    }

    #[test]
    fn pair_rank_round_trip() {
        for (r, (u, v)) in colex_pairs(12).enumerate() {
            assert_eq!(pair_rank(u, v), r);
            assert_eq!(pair_rank(v, u), r);
            assert_eq!(pair_unrank(r), (u, v));
        }
    }

    #[test]
    fn constraint_system_examples() {
        let cs = build_constraint_system(&dm(&Graph::path(3)), CoverMode::Strong).unwrap();
        assert_eq!(cs.items, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(cs.coverers[2].to_vec(), vec![0, 1, 2]);

        let cs = build_constraint_system(&dm(&triangle()), CoverMode::Strong).unwrap();
        for (&(u, v), c) in cs.items.iter().zip(&cs.coverers) {
            assert_eq!(c.to_vec(), vec![u, v]);
        }

        let g = kneser(5, 2).unwrap();
        let cs = build_constraint_system(&dm(&g), CoverMode::Doubly).unwrap();
        let basis: Vec<usize> = [[1, 2], [1, 3], [1, 4]]
            .iter()
            .map(|e| g.vertex_of(&KSubset::new(5, e).unwrap()).unwrap())
            .collect();
        assert!(cs.empty_items().is_empty());
        assert!(cs.is_satisfied_by(&basis));
    }

    #[test]
    fn set_cover_small() {
        let sets = vec![
            BitSet::from_iter_with_len(4, [0, 1]),
            BitSet::from_iter_with_len(4, [1, 2]),
            BitSet::from_iter_with_len(4, [2, 3]),
        ];
        let r = min_cover_sets(4, &sets, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.is_optimal());
        assert!(min_cover_sets(4, &[BitSet::new(4)], DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn metric_dimension_small() {
        let r = metric_dimension_exact(&Graph::complete(5), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 4);
        let r = metric_dimension_exact(&Graph::path(5), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.value, r.certificate.clone()), (1, vec![0]));
        let r = metric_dimension_exact(&Graph::empty(1), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 0);
        let r = metric_dimension_exact(&johnson(6, 2).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 4);
        let r = metric_dimension_exact(&kneser(7, 2).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 5);
    }

    #[test]
    fn doubly_dimension_small() {
        let r = doubly_metric_dimension_exact(&Graph::path(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 2);
        let r = doubly_metric_dimension_exact(&kneser(5, 2).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 3);
        let r = doubly_metric_dimension_exact(&johnson(6, 2).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 4);
        assert!(doubly_metric_dimension_exact(&Graph::empty(1), DEFAULT_BUDGET).is_err());
        let r = doubly_metric_dimension_exact(&Graph::path(2), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 2);
    }

    #[test]
    fn budget_exhaustion_downgrades_status() {
        let g = johnson(8, 2).unwrap();
        let r = metric_dimension_exact(&g, 5).unwrap();
        assert_eq!(r.status, Status::UpperBoundOnly);
        assert!(r.bound <= r.value);
        assert_eq!(is_resolving_set(&dm(&g), &r.certificate), Ok(true));
    }
}
