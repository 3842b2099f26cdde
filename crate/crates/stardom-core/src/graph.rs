//! Simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is stored as one 64-bit neighbor mask per vertex, which keeps
//! induced subgraphs, domination predicates, and connectivity checks down to
//! a handful of word operations. Everything this crate sweeps is far below
//! the cap: exhaustive enumeration stops at 7 vertices and the graph6 reader
//! at 62.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::{bits, Error, Result};

/// Undirected simple graph. Vertices are `0..n`. `adj[v]` has bit `u` set
/// exactly when `u` and `v` are adjacent; the diagonal is always clear and
/// the relation is kept symmetric by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices, `1 <= n <= 64`.
    pub fn new(n: usize) -> Result<Graph> {
        if n == 0 || n > 64 {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument("vertex index out of range"));
        }
        if u == v {
            return Err(Error::InvalidArgument("self-loops are not allowed"));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap()
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.adj[u] & !((1u64 << u) | (u64::MAX >> (63 - u)))).map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(self.vertex_mask())
    }

    /// Whether the subgraph induced by the nonempty `mask` is connected.
    pub fn is_connected_subset(&self, mask: u64) -> bool {
        debug_assert!(mask != 0 && mask & !self.vertex_mask() == 0);
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == mask
    }

    /// Subgraph induced by the nonempty vertex set `mask`, plus the map from
    /// new vertex indices back to the originals (ascending).
    pub fn induced(&self, mask: u64) -> Result<(Graph, Vec<usize>)> {
        if mask == 0 {
            return Err(Error::InvalidArgument("induced subgraph needs a nonempty vertex set"));
        }
        if mask & !self.vertex_mask() != 0 {
            return Err(Error::InvalidArgument("vertex set contains out-of-range vertices"));
        }
        let old: Vec<usize> = bits(mask).collect();
        let mut g = Graph::new(old.len())?;
        for (new_u, &u) in old.iter().enumerate() {
            for (new_v, &v) in old.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(new_u, new_v)?;
                }
            }
        }
        Ok((g, old))
    }

    /// Plain text form: first line is the order, then one `u v` line per edge.
    pub fn to_edge_list_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Parse the edge-list text form produced by [`Graph::to_edge_list_text`].
    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate();
        let (_, first) = lines
            .next()
            .ok_or(Error::EdgeList { line: 1, reason: "empty input" })?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| Error::EdgeList { line: 1, reason: "first line must be the vertex count" })?;
        if n == 0 || n > 64 {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut g = Graph::new(n)?;
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.and_then(|t| t.parse().ok())
                    .ok_or(Error::EdgeList { line: idx + 1, reason: "expected two vertex indices" })
            };
            let u = parse(parts.next())?;
            let v = parse(parts.next())?;
            if parts.next().is_some() {
                return Err(Error::EdgeList { line: idx + 1, reason: "expected two vertex indices" });
            }
            g.add_edge(u, v)
                .map_err(|_| Error::EdgeList { line: idx + 1, reason: "invalid edge" })?;
        }
        Ok(g)
    }
}

/// Built-in graph families.
///
/// `Star(n)` is the star on `n` vertices with center 0, i.e. the same graph
/// as `CompleteBipartite(1, n - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
}

impl GraphFamily {
    pub fn generate(self) -> Result<Graph> {
        match self {
            GraphFamily::Complete(n) => {
                let mut g = Graph::new(n)?;
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v)?;
                    }
                }
                Ok(g)
            }
            GraphFamily::CompleteBipartite(r, s) => {
                if r == 0 || s == 0 {
                    return Err(Error::InvalidArgument("both parts must be nonempty"));
                }
                let mut g = Graph::new(r + s)?;
                for u in 0..r {
                    for v in r..r + s {
                        g.add_edge(u, v)?;
                    }
                }
                Ok(g)
            }
            GraphFamily::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidArgument("cycles need at least 3 vertices"));
                }
                let mut g = Graph::new(n)?;
                for v in 0..n {
                    g.add_edge(v, (v + 1) % n)?;
                }
                Ok(g)
            }
            GraphFamily::Path(n) => {
                let mut g = Graph::new(n)?;
                for v in 1..n {
                    g.add_edge(v - 1, v)?;
                }
                Ok(g)
            }
            GraphFamily::Star(n) => {
                if n == 1 {
                    return Graph::new(1);
                }
                GraphFamily::CompleteBipartite(1, n - 1).generate()
            }
        }
    }
}

/// Upper-triangle vertex pairs in graph6 (column-major) order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
pub(crate) fn triangle_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

/// All connected labeled graphs on `n` vertices, `1 <= n <= 7`.
///
/// No isomorphism reduction is applied: every labeling appears once. The
/// order is lexicographic over the upper-triangle edge bit vector (in
/// [`triangle_pairs`] order, first pair most significant), which makes runs
/// reproducible and lets callers shard deterministically by yield ordinal.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if n == 0 || n > 7 {
        return Err(Error::InvalidArgument("exhaustive enumeration supports 1..=7 vertices"));
    }
    Ok(ConnectedGraphs { n, pairs: triangle_pairs(n), next: 0 })
}

pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let m = self.pairs.len();
        let total = 1u64 << m;
        while self.next < total {
            let w = self.next;
            self.next += 1;
            let mut g = Graph { n: self.n, adj: vec![0; self.n] };
            for (k, &(i, j)) in self.pairs.iter().enumerate() {
                if w >> (m - 1 - k) & 1 == 1 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}
