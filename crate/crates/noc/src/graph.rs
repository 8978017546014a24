//! Immutable simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Adjacency is stored as one 128-bit row per vertex, so neighbourhood
//! intersections used by the solvers and the containment search are a couple
//! of word operations. Graphs are never mutated after construction; every
//! operator returns a fresh graph.

use std::fmt;
use thiserror::Error;

/// Hard cap on the number of vertices: rows fit in two machine words.
pub const MAX_ORDER: usize = 128;

/// A set of vertices of a host graph, stored as a 128-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet([u64; 2]);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet([0, 0]);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_ORDER);
        VertexSet([low_mask(n.min(64)), low_mask(n.saturating_sub(64))])
    }

    pub fn singleton(v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_ORDER);
        self.0[v >> 6] |= 1 << (v & 63);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < MAX_ORDER);
        self.0[v >> 6] &= !(1 << (v & 63));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_ORDER && (self.0[v >> 6] >> (v & 63)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        (self.0[0].count_ones() + self.0[1].count_ones()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0, 0]
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0[0] & !other.0[0] == 0 && self.0[1] & !other.0[1] == 0
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.0[0] & other.0[0] != 0 || self.0[1] & other.0[1] != 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet([self.0[0] | other.0[0], self.0[1] | other.0[1]])
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet([self.0[0] & other.0[0], self.0[1] & other.0[1]])
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet([self.0[0] & !other.0[0], self.0[1] & !other.0[1]])
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> VertexSetIter {
        VertexSetIter { words: self.0, base: 0 }
    }
}

fn low_mask(bits: usize) -> u64 {
    debug_assert!(bits <= 64);
    if bits == 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
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

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;
    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter {
    words: [u64; 2],
    base: usize,
}

impl Iterator for VertexSetIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        while self.base < 2 {
            let w = self.words[self.base];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.base] &= w - 1;
                return Some(self.base * 64 + bit);
            }
            self.base += 1;
        }
        None
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum {MAX_ORDER}")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
}

/// An immutable simple graph.
///
/// Vertices are the dense integers `0..n`. Equality and hashing are *labelled*;
/// isomorphism-invariant comparison goes through [`crate::iso`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges collapse.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::build(n, &[])
    }

    pub(crate) fn from_adj(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_ORDER);
        #[cfg(debug_assertions)]
        {
            for (v, row) in adj.iter().enumerate() {
                debug_assert!(!row.contains(v), "self-loop at {v}");
                debug_assert!(row.is_subset_of(&VertexSet::full(n)));
                for u in row.iter() {
                    debug_assert!(adj[u].contains(v), "asymmetric edge ({u},{v})");
                }
            }
        }
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Neighbours of `v` restricted to `s`.
    pub fn neighbours_in(&self, v: usize, s: &VertexSet) -> VertexSet {
        self.adj[v].intersection(s)
    }

    /// Non-neighbours of `v` restricted to `s` (never includes `v`).
    pub fn non_neighbours_in(&self, v: usize, s: &VertexSet) -> VertexSet {
        let mut out = s.difference(&self.adj[v]);
        out.remove(v);
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Edge-complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph::from_adj(adj)
    }

    /// Disjoint union; vertices of `other` are re-indexed after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::build(n, &edges)
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..g.n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        Ok(g)
    }

    /// Replaces vertex `v` by a copy of `h` that is complete to the old
    /// neighbourhood of `v` and anticomplete to everything else.
    ///
    /// Surviving vertices keep their relative order; the copy of `h` is
    /// appended at the end.
    pub fn blow_up(&self, v: usize, h: &Graph) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let n = self.n - 1 + h.n;
        if n > MAX_ORDER {
            return Err(GraphError::TooManyVertices { n });
        }
        // old index -> new index, skipping v
        let relabel: Vec<Option<usize>> = (0..self.n)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let base = self.n - 1;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (a, b) in self.edges() {
            if let (Some(a2), Some(b2)) = (relabel[a], relabel[b]) {
                edges.push((a2, b2));
            }
        }
        for (a, b) in h.edges() {
            edges.push((base + a, base + b));
        }
        for u in self.adj[v].iter() {
            let u2 = relabel[u].expect("neighbour of v is not v");
            for b in 0..h.n {
                edges.push((u2, base + b));
            }
        }
        Graph::build(n, &edges)
    }

    /// Subgraph induced by `s`, index-compressed preserving vertex order.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut edges = Vec::new();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::build(keep.len(), &edges).expect("induced subgraph is valid")
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = VertexSet::EMPTY;
        let mut count = 0;
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for u in self.adj[v].iter() {
                    if !seen.contains(u) {
                        seen.insert(u);
                        stack.push(u);
                    }
                }
            }
        }
        count
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}
