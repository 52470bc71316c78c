//! Root-level symmetry breaking for the resolving-set searches.
//!
//! When a graph is labeled by all k-subsets of `[n]` and adjacency depends
//! only on the intersection size of the labels (Johnson, Kneser and their
//! generalizations), every permutation of `[n]` is an automorphism. Any
//! resolving set of size ≥ 2 can then be mapped to one that contains the
//! vertex `v₀` and, for the least intersection size `t` with `v₀`'s label
//! among its other members, a fixed representative of that type while
//! avoiding all types below `t`.

use crate::bits::BitSet;
use crate::graph::Graph;
use crate::subset::binomial;

/// Vertices forced into the set and vertices forbidden from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBranch {
    pub chosen: Vec<usize>,
    pub excluded: BitSet,
}

/// Root branches for searches whose target size is `target`. Without
/// detected symmetry this is the single unconstrained branch.
pub fn root_branches_for(g: &Graph, target: usize) -> Vec<RootBranch> {
    let n = g.n_vertices();
    let free = vec![RootBranch {
        chosen: Vec::new(),
        excluded: BitSet::new(n),
    }];
    let Some(types) = intersection_types(g) else {
        return free;
    };
    if target < 2 {
        return vec![RootBranch {
            chosen: vec![0],
            excluded: BitSet::new(n),
        }];
    }
    let max_type = types.iter().copied().max().unwrap_or(0);
    let mut branches = Vec::new();
    for t in 0..max_type {
        let Some(rep) = (1..n).find(|&v| types[v] == t) else {
            continue;
        };
        let excluded = BitSet::from_iter_with_len(n, (1..n).filter(|&v| types[v] < t));
        branches.push(RootBranch {
            chosen: vec![0, rep],
            excluded,
        });
    }
    branches
}

/// Branches for both target regimes, computed once per solve.
pub(crate) fn root_branches(g: &Graph) -> RootPlan {
    RootPlan {
        small: root_branches_for(g, 1),
        large: root_branches_for(g, 2),
    }
}

pub(crate) struct RootPlan {
    small: Vec<RootBranch>,
    large: Vec<RootBranch>,
}

impl RootPlan {
    pub(crate) fn for_target(&self, target: usize) -> &[RootBranch] {
        if target < 2 {
            &self.small
        } else {
            &self.large
        }
    }
}

/// `|label(v) ∩ label(0)|` for every vertex, when the graph is labeled by
/// all k-subsets of `[n]` and adjacency is a function of intersection size.
pub fn intersection_types(g: &Graph) -> Option<Vec<usize>> {
    let labels = g.labels()?;
    let first = labels.first()?;
    let (n, k) = (first.universe(), first.k());
    if labels.iter().any(|l| l.universe() != n || l.k() != k)
        || binomial(n, k) != labels.len() as u64
    {
        return None;
    }
    // adjacency must be all-or-nothing per intersection size
    let mut rule: Vec<Option<bool>> = vec![None; k + 1];
    for u in 0..labels.len() {
        for v in u + 1..labels.len() {
            let s = labels[u].intersection_size(&labels[v]);
            let adjacent = g.has_edge(u, v);
            match rule[s] {
                None => rule[s] = Some(adjacent),
                Some(r) if r != adjacent => return None,
                _ => {}
            }
        }
    }
    Some(labels.iter().map(|l| l.intersection_size(first)).collect())
}
