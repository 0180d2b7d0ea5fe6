//! Dense bit-matrix graphs and vertex subsets.
//!
//! Every operation in the crate runs over [`Graph`]: a simple undirected
//! graph stored as a symmetric bit-matrix with zero diagonal. Rows are
//! `u64` words, so neighbourhood intersections and degree counts are
//! word-parallel popcounts. Graphs are immutable once built and safe to
//! share across worker threads.

use crate::error::{Error, Result};

/// Default cap on the vertex count for resource-bounded operations.
/// The CLI can override it per run (flag or `SEIDEL_VERTEX_CAP`).
pub const DEFAULT_VERTEX_CAP: usize = 512;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A subset of the vertices of an `n`-vertex graph, stored as a bitmask.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Builds a set from vertex indices, rejecting out-of-range entries.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(n);
        for &v in indices {
            if v >= n {
                return Err(Error::Parameter(format!(
                    "vertex {v} out of range for a graph on {n} vertices"
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set directly from mask words (low bits beyond `n` must be 0).
    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        if !n.is_multiple_of(64) {
            debug_assert_eq!(words[n / 64] >> (n % 64), 0);
        }
        VertexSet { n, words }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Complement within the universe `{0, .., n-1}`.
    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        if !self.n.is_multiple_of(64) {
            let last = words.len() - 1;
            words[last] &= (1u64 << (self.n % 64)) - 1;
        }
        VertexSet { n: self.n, words }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Applies a vertex permutation: vertex `v` maps to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut s = Self::empty(self.n);
        for v in self.iter() {
            s.insert(perm[v]);
        }
        s
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for v in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph on `n >= 1` vertices as a dense bit-matrix.
///
/// Invariants: the matrix is symmetric with zero diagonal, and no bits are
/// set at column indices `>= n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    w: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter(
                "graph must have at least one vertex".into(),
            ));
        }
        let w = words_for(n);
        Ok(Graph {
            n,
            w,
            bits: vec![0; n * w],
        })
    }

    /// Builds a graph from an edge list; endpoints are range-checked and
    /// self-loops rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Parameter(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate over vertex pairs.
    pub fn from_fn(n: usize, adj: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                if adj(u, v) {
                    debug_assert!(adj(v, u), "adjacency predicate must be symmetric");
                    g.set_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.w + v / 64] |= 1u64 << (v % 64);
        self.bits[v * self.w + u / 64] |= 1u64 << (u % 64);
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.bits[u * self.w + v / 64] ^= 1u64 << (v % 64);
        self.bits[v * self.w + u / 64] ^= 1u64 << (u % 64);
    }

    /// XORs mask words into row `v`. Callers must preserve symmetry and the
    /// zero diagonal across the whole update.
    pub(crate) fn xor_row(&mut self, v: usize, mask: &[u64]) {
        debug_assert_eq!(mask.len(), self.w);
        for (dst, m) in self.bits[v * self.w..(v + 1) * self.w].iter_mut().zip(mask) {
            *dst ^= m;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn word_width(&self) -> usize {
        self.w
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.w + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbourhood of `v` as mask words.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.w..(v + 1) * self.w]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Degree of `v` into the subset given by `mask` words.
    pub(crate) fn degree_into(&self, v: usize, mask: &[u64]) -> usize {
        self.row(v)
            .iter()
            .zip(mask)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The complement graph (edges and non-edges exchanged, diagonal stays 0).
    pub fn complement(&self) -> Self {
        let mut g = Self::edgeless(self.n).expect("n >= 1");
        let tail = self.n % 64;
        for v in 0..self.n {
            let src = self.row(v);
            let dst = &mut g.bits[v * self.w..(v + 1) * self.w];
            for i in 0..self.w {
                dst[i] = !src[i];
            }
            if tail != 0 {
                dst[self.w - 1] &= (1u64 << tail) - 1;
            }
            dst[v / 64] &= !(1u64 << (v % 64));
        }
        g
    }

    /// Subgraph induced on a nonempty vertex set, relabelled by ascending
    /// original index.
    pub fn induced(&self, set: &VertexSet) -> Result<Self> {
        if set.universe() != self.n {
            return Err(Error::Parameter(format!(
                "vertex set over {} vertices used with a graph on {}",
                set.universe(),
                self.n
            )));
        }
        let verts = set.indices();
        if verts.is_empty() {
            return Err(Error::Parameter("induced subgraph of the empty set".into()));
        }
        Graph::from_fn(verts.len(), |i, j| self.has_edge(verts[i], verts[j]))
    }

    /// `Some(k)` iff every vertex has degree `k`.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        for v in 1..self.n {
            if self.degree(v) != d {
                return None;
            }
        }
        Some(d)
    }

    /// True iff the subgraph induced on `mask` is regular of degree exactly
    /// `target` (vacuously true for the empty mask). Avoids materialising
    /// the induced graph.
    pub(crate) fn induced_is_regular_of(&self, mask: &[u64], target: usize) -> bool {
        for (wi, &w) in mask.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let v = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.degree_into(v, mask) != target {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![0u64; self.w];
        let mut frontier = vec![0u64; self.w];
        seen[0] = 1;
        frontier[0] = 1;
        loop {
            let mut next = vec![0u64; self.w];
            let mut any = false;
            for (wi, &w) in frontier.iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let v = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    for i in 0..self.w {
                        next[i] |= self.row(v)[i] & !seen[i];
                    }
                    any = true;
                }
            }
            if !any {
                break;
            }
            let mut grew = false;
            for i in 0..self.w {
                if next[i] & !seen[i] != 0 {
                    grew = true;
                }
                seen[i] |= next[i];
            }
            if !grew {
                break;
            }
            frontier = next;
        }
        seen.iter().map(|w| w.count_ones() as usize).sum::<usize>() == self.n
    }

    /// Relabels vertices: new vertex `i` is old vertex `perm[i]`
    /// (`perm` must be a permutation of `0..n`).
    pub fn relabelled(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        Graph::from_fn(self.n, |i, j| self.has_edge(perm[i], perm[j])).expect("n >= 1")
    }
}
