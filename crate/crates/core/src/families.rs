//! Johnson and Kneser graphs: generators, closed-form distances and
//! diameters, known dimension values, and explicit certificate sets.
//!
//! Vertices of both families are the k-subsets of `[n]` ordered by
//! colexicographic rank, so vertex `i` of `johnson(n, k)` and of
//! `kneser(n, k)` carry the same label.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subset::{all_subsets, binomial, KSubset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Johnson,
    Kneser,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Johnson => "J",
            Family::Kneser => "K",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "J" | "j" | "johnson" | "Johnson" => Ok(Family::Johnson),
            "K" | "k" | "kneser" | "Kneser" => Ok(Family::Kneser),
            other => Err(Error::InvalidParameters(format!(
                "unknown family `{other}`, expected J or K"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A validated `(family, n, k)` triple.
///
/// Johnson specs with `n < 2k` are normalized to `J(n, n − k)`, which is
/// isomorphic. Kneser specs need `n ≥ 2k`; operations that depend on
/// connectivity additionally need `n ≥ 2k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, k: usize) -> Result<Self> {
        match family {
            Family::Johnson => {
                check_johnson(n, k)?;
                if n < 2 * k {
                    log::info!("normalizing J({n},{k}) to the isomorphic J({n},{})", n - k);
                    return Ok(FamilySpec { family, n, k: n - k });
                }
            }
            Family::Kneser => check_kneser(n, k)?,
        }
        Ok(FamilySpec { family, n, k })
    }

    pub fn build(&self) -> Result<Graph> {
        match self.family {
            Family::Johnson => johnson(self.n, self.k),
            Family::Kneser => kneser(self.n, self.k),
        }
    }

    pub fn vertex_count(&self) -> u64 {
        binomial(self.n, self.k)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Grammar: `(J|K):<n>,<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("bad family spec `{s}`, expected J:n,k or K:n,k"));
        let (fam, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let (n, k) = rest.split_once(',').ok_or_else(bad)?;
        let n = n.trim().parse().map_err(|_| bad())?;
        let k = k.trim().parse().map_err(|_| bad())?;
        FamilySpec::new(fam.parse()?, n, k)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}", self.family, self.n, self.k)
    }
}

fn check_johnson(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!(
            "J({n},{k}) needs 1 <= k < n"
        )));
    }
    Ok(())
}

fn check_kneser(n: usize, k: usize) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(format!(
            "K({n},{k}) needs k >= 1 and n >= 2k"
        )));
    }
    Ok(())
}

fn check_connected_kneser(n: usize, k: usize) -> Result<()> {
    if k == 0 || n <= 2 * k {
        return Err(Error::InvalidParameters(format!(
            "K({n},{k}) needs n >= 2k + 1"
        )));
    }
    Ok(())
}

fn subset_graph(n: usize, k: usize, adjacent: impl Fn(&KSubset, &KSubset) -> bool) -> Result<Graph> {
    let vertices = all_subsets(n, k)?;
    let count = vertices.len();
    let mut adj = vec![BitSet::new(count); count];
    for i in 0..count {
        for j in i + 1..count {
            if adjacent(&vertices[i], &vertices[j]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    Ok(Graph::from_adjacency(adj, Some(vertices)))
}

/// `J(n, k)`: k-subsets of `[n]`, adjacent when they share `k − 1` elements.
pub fn johnson(n: usize, k: usize) -> Result<Graph> {
    check_johnson(n, k)?;
    subset_graph(n, k, |a, b| a.intersection_size(b) == k - 1)
}

/// `K(n, k)`: k-subsets of `[n]`, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    check_kneser(n, k)?;
    subset_graph(n, k, |a, b| a.is_disjoint(b))
}

fn same_shape(a: &KSubset, b: &KSubset, k: usize) -> Result<()> {
    if a.universe() != b.universe() || a.k() != k || b.k() != k {
        return Err(Error::InvalidParameters(format!(
            "{a} and {b} are not both {k}-subsets of the same universe"
        )));
    }
    Ok(())
}

/// Distance in `J(n, k)`: `k − |A ∩ B|`.
pub fn johnson_distance(a: &KSubset, b: &KSubset, k: usize) -> Result<u32> {
    same_shape(a, b, k)?;
    Ok((k - a.intersection_size(b)) as u32)
}

/// Distance from `[n] ∖ A` to `B` in `J(2k, k)`, which is `|A ∩ B|`.
pub fn johnson_complement_distance(a: &KSubset, b: &KSubset, k: usize) -> Result<u32> {
    same_shape(a, b, k)?;
    if a.universe() != 2 * k {
        return Err(Error::InvalidParameters(format!(
            "complement distance needs n = 2k, got n = {} and k = {k}",
            a.universe()
        )));
    }
    Ok(a.intersection_size(b) as u32)
}

/// Closed-form distance in `K(n, k)` for `n ≥ 2k + 1`:
/// `min(2⌈(k − s)/(n − 2k)⌉, 2⌈s/(n − 2k)⌉ + 1)` with `s = |A ∩ B|`.
pub fn kneser_distance(a: &KSubset, b: &KSubset, n: usize, k: usize) -> Result<u32> {
    check_connected_kneser(n, k)?;
    same_shape(a, b, k)?;
    if a.universe() != n {
        return Err(Error::InvalidParameters(format!(
            "subsets live in [{}], expected [{n}]",
            a.universe()
        )));
    }
    let s = a.intersection_size(b);
    let gap = n - 2 * k;
    let even = 2 * (k - s).div_ceil(gap);
    let odd = 2 * s.div_ceil(gap) + 1;
    Ok(even.min(odd) as u32)
}

/// `Diam(K(n, k)) = ⌈(k − 1)/(n − 2k)⌉ + 1` for `n ≥ 2k + 1`.
pub fn kneser_diameter(n: usize, k: usize) -> Result<u32> {
    check_connected_kneser(n, k)?;
    Ok(((k - 1).div_ceil(n - 2 * k) + 1) as u32)
}

/// Stahl's parity bounds for a Kneser pair at distance `dist` sharing `s`
/// elements: even `2p` needs `s ≥ k(2p + 1) − pn`, odd `2p + 1` needs
/// `s ≤ p(n − 2k)`.
pub fn stahl_bounds_hold(s: usize, dist: u32, n: usize, k: usize) -> bool {
    let (s, n, k) = (s as i64, n as i64, k as i64);
    let p = (dist / 2) as i64;
    if dist.is_multiple_of(2) {
        s >= k * (2 * p + 1) - p * n
    } else {
        s <= p * (n - 2 * k)
    }
}

/// `β_S(J(n, k)) = C(n − 1, k)` for `n ≥ 2k ≥ 2`.
pub fn johnson_beta_s_formula(n: usize, k: usize) -> Result<u64> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(format!(
            "strong dimension formula for J({n},{k}) needs n >= 2k >= 2"
        )));
    }
    Ok(binomial(n - 1, k))
}

fn check_kneser_strong(n: usize, k: usize) -> Result<()> {
    if k < 2 || n + 1 < 3 * k {
        return Err(Error::InvalidParameters(format!(
            "K({n},{k}) is outside k >= 2, n >= 3k - 1"
        )));
    }
    Ok(())
}

/// `β_S(K(n, k)) = C(n, k) − ⌊n/k⌋` for `k ≥ 2`, `n ≥ 3k − 1`. Rejected
/// below that range, where the value is different (`β_S(K(7,3)) = 30`).
pub fn kneser_beta_s_formula(n: usize, k: usize) -> Result<u64> {
    check_kneser_strong(n, k)?;
    Ok(binomial(n, k) - (n / k) as u64)
}

/// All k-subsets except the `⌊n/k⌋` consecutive blocks
/// `{ik + 1, …, (i + 1)k}`; a strong resolving set of `K(n, k)` of size
/// `C(n, k) − ⌊n/k⌋`. Returned in colex order.
pub fn kneser_strong_resolving_construction(n: usize, k: usize) -> Result<Vec<KSubset>> {
    check_kneser_strong(n, k)?;
    let blocks: Vec<KSubset> = (0..n / k)
        .map(|i| KSubset::new(n, &((i * k + 1)..=((i + 1) * k)).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    Ok(all_subsets(n, k)?
        .into_iter()
        .filter(|s| !blocks.contains(s))
        .collect())
}

/// Doubly resolving set of `J(n, 2)` and `K(n, 2)` with `⌈2n/3⌉` pairs:
/// `{3i−2, 3i−1}, {3i−1, 3i}` for `i ≤ t = ⌊n/3⌋`, plus `{3t−1, 3t+1}`
/// when `n ≡ 1 (mod 3)` and additionally `{3t−1, 3t+2}` when `n ≡ 2`.
pub fn doubly_basis_j2_construction(n: usize) -> Result<Vec<KSubset>> {
    doubly_basis_j2_pairs(n)?
        .iter()
        .map(|p| KSubset::new(n, p))
        .collect()
}

/// Element pairs of [`doubly_basis_j2_construction`], for any `n ≥ 4`.
pub fn doubly_basis_j2_pairs(n: usize) -> Result<Vec<[usize; 2]>> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!(
            "construction needs n >= 4, got {n}"
        )));
    }
    let t = n / 3;
    let mut pairs = Vec::with_capacity(2 * t + 2);
    for i in 1..=t {
        pairs.push([3 * i - 2, 3 * i - 1]);
        pairs.push([3 * i - 1, 3 * i]);
    }
    match n % 3 {
        1 => pairs.push([3 * t - 1, 3 * t + 1]),
        2 => {
            pairs.push([3 * t - 1, 3 * t + 1]);
            pairs.push([3 * t - 1, 3 * t + 2]);
        }
        _ => {}
    }
    Ok(pairs)
}

/// `⌈2n/3⌉`
pub fn two_thirds_ceil(n: usize) -> usize {
    (2 * n).div_ceil(3)
}

/// `β(J(n, 2)) = β(K(n, 2)) = ⌈2n/3⌉` for `n ≥ 6`.
pub fn metric_dim_formula_nk2(n: usize) -> Result<usize> {
    if n < 6 {
        return Err(Error::InvalidParameters(format!(
            "metric dimension formula needs n >= 6, got {n}"
        )));
    }
    Ok(two_thirds_ceil(n))
}

/// Upper bound `β(J(n, k)) ≤ ⌊k(n + 1)/(k + 1)⌋` for `k ≥ 3`, `n ≥ 2k`.
pub fn metric_dim_upper_bound_jnk(n: usize, k: usize) -> Result<usize> {
    if k < 3 || n < 2 * k {
        return Err(Error::InvalidParameters(format!(
            "bound needs k >= 3 and n >= 2k, got J({n},{k})"
        )));
    }
    Ok(k * (n + 1) / (k + 1))
}

/// `ψ(J(n, 2))` for `n ≥ 4` and `ψ(K(n, 2))` for `n ≥ 5`: `⌈2n/3⌉`,
/// except `ψ(K(5, 2)) = 3`.
pub fn psi_formula_nk2(n: usize, family: Family) -> Result<usize> {
    match family {
        Family::Johnson if n >= 4 => Ok(two_thirds_ceil(n)),
        Family::Kneser if n == 5 => Ok(3),
        Family::Kneser if n >= 6 => Ok(two_thirds_ceil(n)),
        _ => Err(Error::InvalidParameters(format!(
            "no doubly dimension value for {family}:{n},2"
        ))),
    }
}

/// Erdős–Ko–Rado: `ind(K(n, k)) = C(n − 1, k − 1)` for `n ≥ 2k`.
pub fn ekr_independence_number(n: usize, k: usize) -> Result<u64> {
    check_kneser(n, k)?;
    Ok(binomial(n - 1, k - 1))
}

/// Maps subsets to vertex ids of a family graph on the same `(n, k)`.
pub fn subsets_to_vertices(g: &Graph, subsets: &[KSubset]) -> Result<Vec<usize>> {
    subsets
        .iter()
        .map(|s| {
            g.vertex_of(s)
                .ok_or_else(|| Error::InvalidParameters(format!("{s} is not a vertex label")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, degree_profile, diameter};

    fn ks(n: usize, e: &[usize]) -> KSubset {
        KSubset::new(n, e).unwrap()
    }

    fn render(v: &[KSubset]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// Brute-force edge count: all pairs of k-subsets tested directly.
    fn brute_edge_count(n: usize, k: usize, rule: impl Fn(usize) -> bool) -> usize {
        let subs: Vec<u64> = (0u64..1 << n).filter(|m| m.count_ones() as usize == k).collect();
        let mut count = 0;
        for i in 0..subs.len() {
            for j in i + 1..subs.len() {
                if rule((subs[i] & subs[j]).count_ones() as usize) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn johnson_4_2() {
        let g = johnson(4, 2).unwrap();
        assert_eq!(g.n_vertices(), 6);
        assert_eq!(brute_edge_count(4, 2, |s| s == 1), 12);
        assert_eq!(g.n_edges(), 12);
        assert_eq!(degree_profile(&g).max_degree, 4);
        assert!(degree_profile(&g).is_regular);
    }

    #[test]
    fn johnson_small_cases() {
        assert_eq!(diameter(&johnson(6, 2).unwrap()), Some(2));
        assert_eq!(johnson(3, 1).unwrap().edges(), Graph::complete(3).edges());
        assert!(johnson(3, 0).is_err());
        assert!(johnson(3, 3).is_err());
        let p = degree_profile(&johnson(6, 2).unwrap());
        assert_eq!((p.min_degree, p.max_degree, p.is_regular), (8, 8, true));
    }

    #[test]
    fn kneser_small_cases() {
        let petersen = kneser(5, 2).unwrap();
        assert_eq!(brute_edge_count(5, 2, |s| s == 0), 15);
        assert_eq!((petersen.n_vertices(), petersen.n_edges()), (10, 15));
        let p = degree_profile(&petersen);
        assert_eq!((p.min_degree, p.max_degree, p.is_regular), (3, 3, true));
        assert_eq!(all_pairs_distances(&petersen).max_finite(), 2);

        let k73 = kneser(7, 3).unwrap();
        assert_eq!((k73.n_vertices(), k73.n_edges()), (35, 70));
        assert_eq!(diameter(&k73), Some(3));

        let k42 = kneser(4, 2).unwrap();
        assert_eq!(k42.n_edges(), 3);
        assert!(k42.isolated_vertices().is_empty());
        assert!(!k42.is_connected());
        assert!(kneser(3, 2).is_err());
    }

    #[test]
    fn complement_of_j62_is_k62() {
        assert_eq!(johnson(6, 2).unwrap().complement(), kneser(6, 2).unwrap());
    }

    #[test]
    fn spec_parsing_and_normalization() {
        let s: FamilySpec = "J:4,2".parse().unwrap();
        assert_eq!((s.family, s.n, s.k), (Family::Johnson, 4, 2));
        let s: FamilySpec = "J:5,4".parse().unwrap();
        assert_eq!((s.n, s.k), (5, 1));
        assert_eq!(s.to_string(), "J:5,1");
        assert!("K:3,2".parse::<FamilySpec>().is_err());
        assert!("Q:3,2".parse::<FamilySpec>().is_err());
        assert!("J:3".parse::<FamilySpec>().is_err());
        assert!("K:4,2".parse::<FamilySpec>().is_ok());
    }

    #[test]
    fn johnson_distances() {
        assert_eq!(johnson_distance(&ks(4, &[1, 2]), &ks(4, &[1, 3]), 2), Ok(1));
        assert_eq!(johnson_distance(&ks(4, &[1, 2]), &ks(4, &[1, 2]), 2), Ok(0));
        assert_eq!(
            johnson_distance(&ks(6, &[1, 2, 3]), &ks(6, &[4, 5, 6]), 3),
            Ok(3)
        );
        assert!(johnson_distance(&ks(6, &[1, 2]), &ks(6, &[4, 5, 6]), 3).is_err());
    }

    #[test]
    fn johnson_complement_distances() {
        assert_eq!(
            johnson_complement_distance(&ks(4, &[1, 2]), &ks(4, &[1, 3]), 2),
            Ok(1)
        );
        assert_eq!(
            johnson_complement_distance(&ks(4, &[1, 2]), &ks(4, &[3, 4]), 2),
            Ok(0)
        );
        assert_eq!(
            johnson_complement_distance(&ks(6, &[1, 2, 3]), &ks(6, &[1, 2, 3]), 3),
            Ok(3)
        );
        assert!(johnson_complement_distance(&ks(5, &[1, 2]), &ks(5, &[1, 3]), 2).is_err());
    }

    #[test]
    fn kneser_distances() {
        assert_eq!(kneser_distance(&ks(5, &[1, 2]), &ks(5, &[3, 4]), 5, 2), Ok(1));
        assert_eq!(kneser_distance(&ks(5, &[1, 2]), &ks(5, &[1, 3]), 5, 2), Ok(2));
        assert_eq!(
            kneser_distance(&ks(7, &[1, 2, 3]), &ks(7, &[3, 4, 5]), 7, 3),
            Ok(3)
        );
        assert!(kneser_distance(&ks(4, &[1, 2]), &ks(4, &[3, 4]), 4, 2).is_err());
    }

    #[test]
    fn kneser_diameters() {
        assert_eq!(kneser_diameter(5, 2), Ok(2));
        assert_eq!(kneser_diameter(7, 3), Ok(3));
        assert_eq!(kneser_diameter(12, 5), Ok(3));
        assert!(kneser_diameter(6, 3).is_err());
    }

    #[test]
    fn stahl_examples() {
        assert!(stahl_bounds_hold(0, 1, 5, 2));
        assert!(stahl_bounds_hold(1, 2, 5, 2));
        assert!(!stahl_bounds_hold(2, 1, 7, 3));
    }

    #[test]
    fn strong_dimension_formulas() {
        assert_eq!(johnson_beta_s_formula(5, 2), Ok(6));
        assert_eq!(johnson_beta_s_formula(6, 3), Ok(10));
        assert_eq!(johnson_beta_s_formula(2, 1), Ok(1));
        assert!(johnson_beta_s_formula(5, 3).is_err());
        assert_eq!(kneser_beta_s_formula(5, 2), Ok(8));
        assert_eq!(kneser_beta_s_formula(6, 2), Ok(12));
        assert_eq!(kneser_beta_s_formula(8, 3), Ok(54));
        assert!(kneser_beta_s_formula(7, 3).is_err());
        assert!(kneser_beta_s_formula(5, 1).is_err());
    }

    #[test]
    fn kneser_construction_excludes_blocks() {
        let s = kneser_strong_resolving_construction(5, 2).unwrap();
        assert_eq!(s.len(), 8);
        assert!(!s.contains(&ks(5, &[1, 2])) && !s.contains(&ks(5, &[3, 4])));
        let s = kneser_strong_resolving_construction(6, 2).unwrap();
        assert_eq!(s.len(), 12);
        for b in [[1, 2], [3, 4], [5, 6]] {
            assert!(!s.contains(&ks(6, &b)));
        }
        let s = kneser_strong_resolving_construction(8, 3).unwrap();
        assert_eq!(s.len(), 54);
        assert!(!s.contains(&ks(8, &[1, 2, 3])) && !s.contains(&ks(8, &[4, 5, 6])));
        assert!(kneser_strong_resolving_construction(7, 3).is_err());
    }

    #[test]
    fn doubly_construction_cases() {
        assert_eq!(
            render(&doubly_basis_j2_construction(6).unwrap()),
            ["{1,2}", "{2,3}", "{4,5}", "{5,6}"]
        );
        assert_eq!(
            render(&doubly_basis_j2_construction(7).unwrap()),
            ["{1,2}", "{2,3}", "{4,5}", "{5,6}", "{5,7}"]
        );
        assert_eq!(
            render(&doubly_basis_j2_construction(8).unwrap()),
            ["{1,2}", "{2,3}", "{4,5}", "{5,6}", "{5,7}", "{5,8}"]
        );
        assert_eq!(
            render(&doubly_basis_j2_construction(4).unwrap()),
            ["{1,2}", "{2,3}", "{2,4}"]
        );
        assert!(doubly_basis_j2_construction(3).is_err());
    }

    #[test]
    fn doubly_construction_sizes() {
        for n in 4..=200 {
            let s = doubly_basis_j2_pairs(n).unwrap();
            assert_eq!(s.len(), two_thirds_ceil(n), "n = {n}");
            let distinct: std::collections::HashSet<_> = s.iter().collect();
            assert_eq!(distinct.len(), s.len());
            assert!(s.iter().all(|[a, b]| 1 <= *a && a < b && *b <= n));
        }
    }

    #[test]
    fn metric_dimension_values() {
        assert_eq!(metric_dim_formula_nk2(6), Ok(4));
        assert_eq!(metric_dim_formula_nk2(7), Ok(5));
        assert_eq!(metric_dim_formula_nk2(9), Ok(6));
        assert!(metric_dim_formula_nk2(5).is_err());
        assert_eq!(metric_dim_upper_bound_jnk(6, 3), Ok(5));
        assert_eq!(metric_dim_upper_bound_jnk(8, 3), Ok(6));
        assert_eq!(metric_dim_upper_bound_jnk(8, 4), Ok(7));
        assert!(metric_dim_upper_bound_jnk(8, 2).is_err());
    }

    #[test]
    fn floor_bound_at_k2_matches_two_thirds_ceil() {
        for n in 4..=300 {
            assert_eq!(2 * (n + 1) / 3, two_thirds_ceil(n), "n = {n}");
        }
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi_formula_nk2(6, Family::Johnson), Ok(4));
        assert_eq!(psi_formula_nk2(5, Family::Kneser), Ok(3));
        assert_eq!(psi_formula_nk2(14, Family::Kneser), Ok(10));
        assert!(psi_formula_nk2(3, Family::Johnson).is_err());
        assert!(psi_formula_nk2(4, Family::Kneser).is_err());
    }
}
