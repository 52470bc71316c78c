//! Brute-force oracles and graph corpora shared by the integration tests.
//! Nothing here calls the library's distance, checker or solver code.

#![allow(dead_code)]

use std::collections::VecDeque;

use mdl_core::families::kneser;
use mdl_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INF: u32 = u32::MAX;

/// `C(n, k)` by the multiplicative formula, saturating at `u64::MAX`.
pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

pub fn adjacency_lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// All-pairs distances by breadth-first search over adjacency lists.
pub fn bfs_distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let adj = adjacency_lists(n, edges);
    (0..n)
        .map(|s| {
            let mut d = vec![INF; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &adj[u] {
                    if d[w] == INF {
                        d[w] = d[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// All-pairs distances by Floyd–Warshall.
pub fn floyd_distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][m] != INF && d[m][j] != INF && d[i][m] + d[m][j] < d[i][j] {
                    d[i][j] = d[i][m] + d[m][j];
                }
            }
        }
    }
    d
}

pub fn connected(d: &[Vec<u32>]) -> bool {
    d.iter().all(|row| row.iter().all(|&x| x != INF))
}

pub fn resolves(d: &[Vec<u32>], set: &[usize]) -> bool {
    let n = d.len();
    (0..n).all(|u| (u + 1..n).all(|v| set.iter().any(|&w| d[u][w] != d[v][w])))
}

/// Some member has `u` on a shortest `v`–`w` path or `v` on a shortest
/// `u`–`w` path; pairs inside the set are covered by their own members.
pub fn strongly_resolves(d: &[Vec<u32>], set: &[usize]) -> bool {
    let n = d.len();
    (0..n).all(|u| {
        (u + 1..n).all(|v| {
            set.iter().any(|&w| {
                d[v][w] == d[v][u] + d[u][w] || d[u][w] == d[u][v] + d[v][w]
            })
        })
    })
}

pub fn doubly_resolves(d: &[Vec<u32>], set: &[usize]) -> bool {
    let n = d.len();
    (0..n).all(|u| {
        (u + 1..n).all(|v| {
            set.iter().any(|&x| {
                set.iter().any(|&y| {
                    d[u][x] as i64 - d[u][y] as i64 != d[v][x] as i64 - d[v][y] as i64
                })
            })
        })
    })
}

/// Smallest `r` such that some `r`-subset of `0..n` satisfies `pred`, by
/// enumerating subsets in order of size.
pub fn min_subset(n: usize, pred: impl Fn(&[usize]) -> bool) -> usize {
    for r in 0..=n {
        let mut found = false;
        for_each_subset(n, r, |s| {
            if !found && pred(s) {
                found = true;
            }
        });
        if found {
            return r;
        }
    }
    panic!("no subset satisfies the predicate");
}

pub fn for_each_subset(n: usize, r: usize, mut f: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for v in start..n {
            if n - v < r - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, r, cur, f);
            cur.pop();
        }
    }
    rec(0, n, r, &mut Vec::with_capacity(r), &mut f);
}

pub fn brute_beta(d: &[Vec<u32>]) -> usize {
    min_subset(d.len(), |s| resolves(d, s))
}

pub fn brute_beta_s(d: &[Vec<u32>]) -> usize {
    min_subset(d.len(), |s| strongly_resolves(d, s))
}

pub fn brute_psi(d: &[Vec<u32>]) -> usize {
    min_subset(d.len(), |s| doubly_resolves(d, s))
}

/// Largest independent set by bitmask enumeration (`n ≤ 20`).
pub fn brute_independence(n: usize, edges: &[(usize, usize)]) -> usize {
    assert!(n <= 20);
    let masks: Vec<u32> = (0..n)
        .map(|v| {
            edges
                .iter()
                .filter_map(|&(a, b)| match (a == v, b == v) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .fold(0u32, |m, w| m | 1 << w)
        })
        .collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || masks[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest vertex cover by bitmask enumeration (`n ≤ 20`).
pub fn brute_vertex_cover(n: usize, edges: &[(usize, usize)]) -> usize {
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&s| edges.iter().all(|&(a, b)| s >> a & 1 == 1 || s >> b & 1 == 1))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

pub fn is_independent(edges: &[(usize, usize)], set: &[usize]) -> bool {
    edges.iter().all(|(a, b)| !(set.contains(a) && set.contains(b)))
}

pub fn is_vertex_cover(edges: &[(usize, usize)], set: &[usize]) -> bool {
    edges.iter().all(|(a, b)| set.contains(a) || set.contains(b))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph on `n` vertices: a random tree plus each remaining pair
/// with probability `p`, under a random relabeling.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        edges.push((perm[parent], perm[v]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Erdős–Rényi graph; may be disconnected.
pub fn random_gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// 500 random graphs on at most 8 vertices; about a third are G(n, p) and
/// may be disconnected.
pub fn random_corpus() -> Vec<Graph> {
    let mut r = rng(0x5eed_c0de);
    (0..500)
        .map(|i| {
            let n = r.gen_range(1..=8);
            let p = r.gen_range(0.1..0.9);
            if i % 3 == 0 {
                random_gnp(&mut r, n, p)
            } else {
                random_connected(&mut r, n, p)
            }
        })
        .collect()
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

pub fn cube() -> Graph {
    let edges = (0..8usize).flat_map(|u| {
        (0..3)
            .map(move |b| (u, u ^ (1 << b)))
            .filter(|&(u, v)| u < v)
    });
    Graph::new(8, edges).unwrap()
}

pub fn wheel(rim: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=rim).map(|v| (0, v)).collect();
    edges.extend((1..=rim).map(|v| (v, v % rim + 1)));
    Graph::new(rim + 1, edges).unwrap()
}

/// Paths, cycles, complete graphs, stars, complete bipartite graphs, the
/// cube, a wheel and the Petersen graph.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("P{n}"), Graph::path(n)));
        out.push((format!("K{n}"), Graph::complete(n)));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), Graph::cycle(n)));
    }
    for leaves in 2..=6 {
        out.push((format!("star{leaves}"), star(leaves)));
    }
    out.push(("K2,3".into(), complete_bipartite(2, 3)));
    out.push(("K3,3".into(), complete_bipartite(3, 3)));
    out.push(("Q3".into(), cube()));
    out.push(("W5".into(), wheel(5)));
    out.push(("Petersen".into(), kneser(5, 2).unwrap()));
    out
}
