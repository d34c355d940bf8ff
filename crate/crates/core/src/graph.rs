//! Undirected simple graphs on vertices `0..n`, with bitmask vertex sets.

use crate::error::{Error, Result};
use std::fmt;

/// Hard ceiling imposed by the `u64` bitmask representation.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn single(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An undirected simple graph.  Edges are kept sorted with `u < v`, so an
/// edge's position in [`Graph::edges`] is a stable index used by covers and
/// twist assignments.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "at most {MAX_VERTICES} vertices supported, got {n}"
            )));
        }
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &norm {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, edges: norm, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] >> v & 1 == 1
    }

    /// Index of edge `(u, v)` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        VertexSet(self.adj[v]).iter()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges).expect("complement of a valid graph is valid")
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in s.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::single(start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for w in VertexSet(self.adj[v] & s.bits()).iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        frontier.push(w);
                    }
                }
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn edges_within(&self, s: VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .count()
    }

    /// Dimension of the cycle space: `m - n + c`.  Zero iff the graph is a
    /// forest; one iff it contains exactly one cycle.
    pub fn cycle_space_dim(&self) -> usize {
        self.edge_count() + self.component_count() - self.n
    }

    pub fn cycle_space_dim_within(&self, s: VertexSet) -> usize {
        self.edges_within(s) + self.components_within(s).len() - s.len()
    }

    pub fn is_acyclic_within(&self, s: VertexSet) -> bool {
        let comps = self.components_within(s);
        self.edges_within(s) + comps.len() == s.len()
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_within(self.vertices())
    }

    /// Induced subgraph on `s` plus the map from new indices to old ones.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::InvalidArg("induced subgraph on empty set".into()));
        }
        if !s.is_subset_of(self.vertices()) {
            return Err(Error::InvalidArg(format!(
                "vertex set {s} not within 0..{}",
                self.n
            )));
        }
        let old: Vec<usize> = s.to_vec();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .map(|&(u, v)| (new_of[u], new_of[v]))
            .collect();
        Ok((Graph::new(old.len(), edges)?, old))
    }

    /// Peeling order by repeated minimum degree (ties to the smallest index),
    /// plus the degeneracy: the largest degree seen at removal time.
    pub fn degeneracy(&self) -> (Vec<usize>, usize) {
        let mut remaining = self.vertices();
        let mut order = Vec::with_capacity(self.n);
        let mut degeneracy = 0;
        while !remaining.is_empty() {
            let v = remaining
                .iter()
                .min_by_key(|&v| ((self.adj[v] & remaining.bits()).count_ones(), v))
                .unwrap();
            degeneracy = degeneracy.max((self.adj[v] & remaining.bits()).count_ones() as usize);
            order.push(v);
            remaining.remove(v);
        }
        (order, degeneracy)
    }

    /// Parses the plain edge-list format: first line `n m`, then `m` lines
    /// `u v`.  Duplicate edges and loops are rejected.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidGraph("empty edge list".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::InvalidGraph("header must be `n m`".into()))?;
        let m: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::InvalidGraph("header must be `n m`".into()))?;
        if it.next().is_some() {
            return Err(Error::InvalidGraph("header must be exactly `n m`".into()));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::InvalidGraph(format!("bad edge line: {line}")))?;
            let v: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::InvalidGraph(format!("bad edge line: {line}")))?;
            if it.next().is_some() {
                return Err(Error::InvalidGraph(format!("bad edge line: {line}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::InvalidGraph(format!(
                "header promised {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.edges.len(), self.edges)
    }
}
