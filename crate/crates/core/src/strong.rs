//! Strong metric dimension through the strong resolving graph:
//! `β_S(G) = vc(G_SR)`, where `G_SR` joins mutually maximally distant
//! pairs and the vertex cover number comes from a maximum independent set.

use std::time::Instant;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::resolving::{build_constraint_system, is_strong_resolving_set, min_set_cover, CoverMode};
use crate::solve::{SolveResult, Status};
use crate::symmetry::intersection_types;

/// Largest graph [`cross_check_strong`] accepts.
pub const CROSS_CHECK_MAX_VERTICES: usize = 12;

/// `u MMD v`: no neighbor of `u` is farther from `v` than `u` is, and no
/// neighbor of `v` is farther from `u` than `v` is.
pub fn mutually_maximally_distant(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> bool {
    let duv = dm.get(u, v);
    g.neighbors(u).iter().all(|w| dm.get(v, w) <= duv)
        && g.neighbors(v).iter().all(|w| dm.get(u, w) <= duv)
}

/// All MMD pairs `(u, v)` with `u < v`, in lexicographic order.
pub fn mmd_pairs(g: &Graph, dm: &DistanceMatrix) -> Result<Vec<(usize, usize)>> {
    dm.require_connected()?;
    let n = g.n_vertices();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mutually_maximally_distant(g, dm, u, v) {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

/// A graph together with its strong resolving graph.
#[derive(Clone, Debug)]
pub struct MmdGraph<'a> {
    pub base: &'a Graph,
    /// Same vertices and labels as `base`; edges are the MMD pairs.
    pub sr: Graph,
}

pub fn strong_resolving_graph(g: &Graph) -> Result<MmdGraph<'_>> {
    let dm = all_pairs_distances(g);
    strong_resolving_graph_with(g, &dm)
}

pub fn strong_resolving_graph_with<'a>(g: &'a Graph, dm: &DistanceMatrix) -> Result<MmdGraph<'a>> {
    let pairs = mmd_pairs(g, dm)?;
    let mut sr = Graph::new(g.n_vertices(), pairs)?;
    if let Some(labels) = g.labels() {
        sr = sr.with_labels(labels.to_vec())?;
    }
    Ok(MmdGraph { base: g, sr })
}

/// Maximum independent set by branch-and-bound over bit sets.
///
/// Runs a maximum-clique search on the complement: vertices are renumbered
/// by non-increasing complement degree, each node colors its candidate set
/// greedily (every color class is a clique of `g`, so it holds at most one
/// vertex of an independent set) and branches from the highest color down.
///
/// On budget exhaustion `value` is the best independent set found (a lower
/// bound on `ind(G)`) and `bound` is the root coloring bound.
pub fn max_independent_set(g: &Graph, budget: u64) -> SolveResult {
    let start = Instant::now();
    let n = g.n_vertices();
    if n == 0 {
        return SolveResult {
            value: 0,
            certificate: Vec::new(),
            nodes_explored: 0,
            elapsed: start.elapsed(),
            status: Status::Optimal,
            bound: 0,
        };
    }
    // order[i] is the original id of search vertex i
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // non-neighbors in g, i.e. neighbors in the complement
    let compat: Vec<BitSet> = order
        .iter()
        .map(|&v| {
            let mut row = BitSet::full(n);
            for w in g.neighbors(v).iter() {
                row.remove(position[w]);
            }
            row.remove(position[v]);
            row
        })
        .collect();

    let mut search = MisSearch {
        compat: &compat,
        best: greedy_independent(&compat),
        budget,
        nodes: 0,
        exhausted: false,
    };
    let all = BitSet::full(n);
    let root_bound = search.color(&all).last().map_or(0, |&(_, c)| c);
    let mut current = Vec::new();
    if intersection_types(g).is_some() {
        // vertex-transitive: some maximum set contains any given vertex
        let v = position[0];
        current.push(v);
        let rest = compat[v].clone();
        if rest.is_empty() {
            if search.best.is_empty() {
                search.best = vec![v];
            }
        } else {
            search.expand(&mut current, rest);
        }
    } else {
        search.expand(&mut current, all);
    }

    let mut certificate: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    certificate.sort_unstable();
    let value = certificate.len();
    let (status, bound) = if search.exhausted {
        (Status::UpperBoundOnly, root_bound)
    } else {
        (Status::Optimal, value)
    };
    SolveResult {
        value,
        certificate,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
        status,
        bound,
    }
}

fn greedy_independent(compat: &[BitSet]) -> Vec<usize> {
    let n = compat.len();
    let mut cand = BitSet::full(n);
    let mut out = Vec::new();
    // search order starts at the lowest degree in g
    while let Some(v) = cand.first() {
        out.push(v);
        cand.intersect_with(&compat[v]);
    }
    out
}

struct MisSearch<'a> {
    compat: &'a [BitSet],
    best: Vec<usize>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
}

impl MisSearch<'_> {
    /// Greedy sequential coloring of `cand` into classes with no complement
    /// edges; returns `(vertex, color)` with colors non-decreasing.
    fn color(&self, cand: &BitSet) -> Vec<(usize, usize)> {
        let mut uncolored = cand.clone();
        let mut out = Vec::with_capacity(cand.count());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut class = uncolored.clone();
            while let Some(v) = class.first() {
                uncolored.remove(v);
                class.remove(v);
                class.difference_with(&self.compat[v]);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cand: BitSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let colored = self.color(&cand);
        for &(v, c) in colored.iter().rev() {
            if current.len() + c <= self.best.len() {
                return;
            }
            current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.compat[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            cand.remove(v);
            if self.exhausted {
                return;
            }
        }
    }
}

/// Minimum vertex cover as the complement of a maximum independent set on
/// the graph with isolated vertices removed (`vc = |V'| − ind(G')`).
/// Isolated vertices never enter the cover.
pub fn min_vertex_cover(g: &Graph, budget: u64) -> SolveResult {
    let start = Instant::now();
    let core: Vec<usize> = (0..g.n_vertices()).filter(|&v| g.degree(v) > 0).collect();
    let sub = g.induced_subgraph(&core);
    let mis = max_independent_set(&sub, budget);
    let in_mis = BitSet::from_iter_with_len(core.len(), mis.certificate.iter().copied());
    let certificate: Vec<usize> = (0..core.len())
        .filter(|&i| !in_mis.contains(i))
        .map(|i| core[i])
        .collect();
    SolveResult {
        value: certificate.len(),
        certificate,
        nodes_explored: mis.nodes_explored,
        elapsed: start.elapsed(),
        status: mis.status,
        bound: core.len() - mis.bound,
    }
}

/// `β_S(G) = vc(G_SR)`. The cover is re-checked against the strong
/// resolving definition on `g` before it is returned.
pub fn strong_metric_dimension_exact(g: &Graph, budget: u64) -> Result<SolveResult> {
    let start = Instant::now();
    let dm = all_pairs_distances(g);
    let mmd = strong_resolving_graph_with(g, &dm)?;
    let mut res = min_vertex_cover(&mmd.sr, budget);
    if !is_strong_resolving_set(&dm, &res.certificate)? {
        return Err(Error::CertificateRejected(format!(
            "vertex cover of size {} of the strong resolving graph is not a strong resolving set",
            res.value
        )));
    }
    res.elapsed = start.elapsed();
    Ok(res)
}

/// Compares `β_S` from the strong-resolving-graph pipeline with a direct
/// set-cover search over the pair constraint system. Budget-limited runs
/// return `None`.
pub fn cross_check_strong_with_budget(g: &Graph, budget: u64) -> Result<Option<bool>> {
    let via_cover = strong_metric_dimension_exact(g, budget)?;
    if g.n_vertices() <= 1 {
        return Ok(Some(via_cover.value == 0));
    }
    let dm = all_pairs_distances(g);
    let cs = build_constraint_system(&dm, CoverMode::Strong)?;
    let direct = min_set_cover(&cs, budget)?;
    if !via_cover.is_optimal() || !direct.is_optimal() {
        return Ok(None);
    }
    Ok(Some(via_cover.value == direct.value))
}

/// [`cross_check_strong_with_budget`] for graphs with at most
/// [`CROSS_CHECK_MAX_VERTICES`] vertices, where both searches always finish.
pub fn cross_check_strong(g: &Graph) -> Result<bool> {
    if g.n_vertices() > CROSS_CHECK_MAX_VERTICES {
        return Err(Error::InvalidParameters(format!(
            "cross check is limited to {CROSS_CHECK_MAX_VERTICES} vertices, graph has {}",
            g.n_vertices()
        )));
    }
    Ok(cross_check_strong_with_budget(g, u64::MAX)?.expect("unbounded budget"))
}
