//! Immutable simple graphs stored as per-vertex adjacency bit rows.
//!
//! Every constructor returns a fresh value; nothing mutates a `Graph` after
//! it is built. Vertices are `0..order()`.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER} vertices")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("permutation is not a bijection on 0..{0}")]
    BadPermutation(usize),
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    edges: usize,
}

impl Graph {
    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let words = n.div_ceil(64).max(1);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
            edges: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// `K_n`: every pair of distinct vertices adjacent.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// `M_t`: edges `(0,1), (2,3), …`, plus one isolated vertex when `t` is odd.
    pub fn matching(t: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(t)?;
        for u in (0..t.saturating_sub(1)).step_by(2) {
            g.set_edge(u, u + 1);
        }
        Ok(g)
    }

    /// The path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + shift, v + shift);
        }
        Ok(g)
    }

    /// Join: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        Ok(g)
    }

    /// The subgraph induced by `vertices`, relabelled `0..len` in ascending
    /// order of the original ids. Duplicates are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut keep: Vec<usize> = vertices.to_vec();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        keep.sort_unstable();
        keep.dedup();
        let mut g = Graph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `G - S`: removes `vertices` and relabels the survivors in order.
    pub fn remove_vertices(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !vertices.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation(self.n));
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::BadPermutation(self.n));
            }
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + (v >> 6)] >> (v & 63) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Pairs `(u, v)` with `u < v` that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    /// Raw adjacency row of `v`, `ceil(n / 64)` words (at least one).
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if !self.has_edge(u, v) {
            self.bits[u * self.words + (v >> 6)] |= 1 << (v & 63);
            self.bits[v * self.words + (u >> 6)] |= 1 << (u & 63);
            self.edges += 1;
        }
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.bits[u * self.words + (v >> 6)] &= !(1 << (v & 63));
            self.bits[v * self.words + (u >> 6)] &= !(1 << (u & 63));
            self.edges -= 1;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
