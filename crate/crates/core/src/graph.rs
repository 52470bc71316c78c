//! Immutable simple undirected graphs, BFS distances and the edge-list
//! text format.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use crate::bits::BitSet;
use crate::error::{parse_err, Error, Result};
use crate::subset::KSubset;

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are kept as a sorted list of `(low, high)` pairs and as one
/// neighbor bit set per vertex. Optional k-subset labels are attached by
/// the family generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<BitSet>,
    labels: Option<Vec<KSubset>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.edges.len())
            .field("labeled", &self.labels.is_some())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from vertex-id pairs. Duplicate pairs collapse into
    /// one edge; self-loops and out-of-range ids are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![BitSet::new(n); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("self-loop at vertex {u}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if !adj[a].contains(b) {
                adj[a].insert(b);
                adj[b].insert(a);
                list.push((a, b));
            }
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adj,
            labels: None,
        })
    }

    pub(crate) fn from_adjacency(adj: Vec<BitSet>, labels: Option<Vec<KSubset>>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            edges.extend(row.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        Graph {
            n,
            edges,
            adj,
            labels,
        }
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_adjacency(vec![BitSet::new(n); n], None)
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| {
                let mut row = BitSet::full(n);
                row.remove(u);
                row
            })
            .collect();
        Graph::from_adjacency(adj, None)
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Attaches k-subset labels, one per vertex, pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<KSubset>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let distinct: HashSet<_> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidParameters("labels are not distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(low, high)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn labels(&self) -> Option<&[KSubset]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&KSubset> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// Vertex id carrying `label`, if the graph is labeled.
    pub fn vertex_of(&self, label: &KSubset) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Same vertices and labels; `uv` is an edge iff `u ≠ v` and `uv` is not
    /// an edge here.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|u| {
                let mut row = self.adj[u].complement();
                row.remove(u);
                row
            })
            .collect();
        Graph::from_adjacency(adj, self.labels.clone())
    }

    /// Subgraph induced by `vertices` (ascending), relabelled `0..len`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let k = vertices.len();
        let adj = vertices
            .iter()
            .map(|&v| {
                BitSet::from_iter_with_len(
                    k,
                    self.adj[v].iter().filter_map(|w| match index[w] {
                        usize::MAX => None,
                        i => Some(i),
                    }),
                )
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| vertices.iter().map(|&v| l[v]).collect());
        Graph::from_adjacency(adj, labels)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = BitSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.adj[u].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Renders vertex `v` as its subset label when present, else its
    /// 1-indexed id.
    pub fn display_vertex(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => (v + 1).to_string(),
        }
    }
}

/// Minimum and maximum degree plus the regularity flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degrees = (0..g.n_vertices()).map(|v| g.degree(v));
    let min_degree = degrees.clone().min().unwrap_or(0);
    let max_degree = degrees.max().unwrap_or(0);
    DegreeProfile {
        min_degree,
        max_degree,
        is_regular: min_degree == max_degree,
    }
}

/// All-pairs hop distances; unreachable pairs hold [`DistanceMatrix::INFINITY`].
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    connected: bool,
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DistanceMatrix")
            .field("n", &self.n)
            .field("connected", &self.connected)
            .finish()
    }
}

impl DistanceMatrix {
    pub const INFINITY: u32 = u32::MAX;

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Largest finite entry (0 for graphs with at most one vertex).
    pub fn max_finite(&self) -> u32 {
        self.d
            .iter()
            .copied()
            .filter(|&x| x != Self::INFINITY)
            .max()
            .unwrap_or(0)
    }

    /// `Some(diameter)` when connected, `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        self.connected.then(|| self.max_finite())
    }
}

/// BFS from every source.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n_vertices();
    let mut d = vec![DistanceMatrix::INFINITY; n * n];
    let mut queue = VecDeque::with_capacity(n);
    let mut connected = true;
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for w in g.neighbors(u).iter() {
                if row[w] == DistanceMatrix::INFINITY {
                    row[w] = du + 1;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != n {
            connected = false;
        }
    }
    DistanceMatrix { n, d, connected }
}

/// `Some(Diam(G))` for connected graphs, `None` otherwise.
pub fn diameter(g: &Graph) -> Option<u32> {
    all_pairs_distances(g).diameter()
}

/// Parses the edge-list format: optional `c …` comments, a `p <n> <m>`
/// header (a DIMACS `p edge <n> <m>` header is also accepted), then `m`
/// lines `<u> <v>` (optionally prefixed `e`) with 1-indexed ids.
///
/// Comments of the form `c universe <n>` followed by `c label <v> {…}` for
/// every vertex restore k-subset labels.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut universe: Option<usize> = None;
    let mut labels: Vec<(usize, usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let first = toks.next().unwrap_or_default();
        match first {
            "c" => match toks.next() {
                Some("universe") => {
                    let n = toks
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse_err(line_no, "malformed universe comment"))?;
                    universe = Some(n);
                }
                Some("label") => {
                    let v: usize = toks
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse_err(line_no, "malformed label comment"))?;
                    let rest: String = toks.collect();
                    labels.push((line_no, v, rest));
                }
                _ => {}
            },
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate header line"));
                }
                let nums: Vec<&str> = toks.filter(|t| *t != "edge").collect();
                let parsed: Option<Vec<usize>> = nums.iter().map(|t| t.parse().ok()).collect();
                match parsed.as_deref() {
                    Some([n, m]) => header = Some((*n, *m)),
                    _ => return Err(parse_err(line_no, "expected `p <n_vertices> <n_edges>`")),
                }
            }
            _ => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line_no, "edge before `p` header"));
                };
                let mut nums: Vec<&str> = line.split_whitespace().collect();
                if nums.first() == Some(&"e") {
                    nums.remove(0);
                }
                let parsed: Option<Vec<usize>> = nums.iter().map(|t| t.parse().ok()).collect();
                let (u, v) = match parsed.as_deref() {
                    Some([u, v]) => (*u, *v),
                    _ => return Err(parse_err(line_no, format!("expected `<u> <v>`, got `{line}`"))),
                };
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(line_no, format!("vertex {x} outside [1, {n}]")));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                pairs.push((u - 1, v - 1));
            }
        }
    }

    let Some((n, m)) = header else {
        return Err(parse_err(text.lines().count().max(1), "missing `p` header"));
    };
    if pairs.len() != m {
        return Err(parse_err(
            text.lines().count(),
            format!("header declares {m} edges, found {}", pairs.len()),
        ));
    }
    let g = Graph::new(n, pairs)?;
    if g.n_edges() != m {
        return Err(parse_err(text.lines().count(), "duplicate edges in input"));
    }
    if labels.is_empty() {
        return Ok(g);
    }
    let Some(u) = universe else {
        return Err(parse_err(labels[0].0, "label comments without `c universe <n>`"));
    };
    if labels.len() != n {
        return Err(parse_err(
            labels[0].0,
            format!("{} label comments for {n} vertices", labels.len()),
        ));
    }
    let mut slots: Vec<Option<KSubset>> = vec![None; n];
    for (line_no, v, s) in labels {
        if v == 0 || v > n {
            return Err(parse_err(line_no, format!("label for vertex {v} outside [1, {n}]")));
        }
        let subset = KSubset::parse(u, &s).map_err(|e| parse_err(line_no, e.to_string()))?;
        if slots[v - 1].replace(subset).is_some() {
            return Err(parse_err(line_no, format!("vertex {v} labelled twice")));
        }
    }
    let labels = slots.into_iter().map(|s| s.expect("all slots filled")).collect();
    g.with_labels(labels)
}

/// Writes the edge-list format with edges in lexicographic order. Each
/// entry of `comments` becomes a leading `c` line; labels, if any, are
/// emitted as `c universe` / `c label` comments.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p {} {}", g.n_vertices(), g.n_edges());
    if let Some(labels) = g.labels() {
        if let Some(first) = labels.first() {
            let _ = writeln!(out, "c universe {}", first.universe());
        }
        for (v, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "c label {} {}", v + 1, l);
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}
