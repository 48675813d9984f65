//! Simple graphs on at most 64 vertices with bitset adjacency.
//!
//! Vertices are never physically removed. Deleting a vertex clears its bit in
//! the active mask and strips it from every neighbor row, so the deletion
//! recursion can work on masks alone without reallocating.

use std::fmt;

use crate::error::GraphError;

/// Largest supported vertex count; adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A vertex-labelled simple graph over the universe `0..n`.
///
/// Invariants: rows are symmetric, no vertex is its own neighbor and bits of
/// inactive vertices are clear in every row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    active: u64,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` active vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            active: low_mask(n),
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Rebuilds a graph from raw adjacency rows, checking every invariant.
    pub fn from_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Self::empty(n)?;
        for (u, &row) in rows.iter().enumerate() {
            for v in Bits(row) {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
                if rows[v] & bit(u) == 0 {
                    return Err(GraphError::Asymmetric { u, v });
                }
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            g.adj[u] = low_mask(n) & !bit(u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, &edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { v: w, n: self.n });
            }
            if !self.is_active(w) {
                return Err(GraphError::InactiveVertex(w));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Size of the vertex universe, including deleted vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn active_mask(&self) -> u64 {
        self.active
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.active.count_ones() as usize
    }

    #[inline]
    pub fn is_active(&self, v: usize) -> bool {
        v < self.n && self.active & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> Bits {
        Bits(self.active)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.delete_set(self.checked_bit(v)?)
    }

    /// `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph, GraphError> {
        let closed = self.checked_bit(v)? | self.adj[v];
        self.delete_set(closed)
    }

    /// `G - S` for an arbitrary vertex mask; inactive members of `S` are ignored.
    pub fn delete_set(&self, set: u64) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        let gone = set & self.active;
        g.active &= !gone;
        for v in 0..g.n {
            if gone & bit(v) != 0 {
                g.adj[v] = 0;
            } else {
                g.adj[v] &= !gone;
            }
        }
        Ok(g)
    }

    fn checked_bit(&self, v: usize) -> Result<u64, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if !self.is_active(v) {
            return Err(GraphError::InactiveVertex(v));
        }
        Ok(bit(v))
    }

    /// Subgraph induced by the active vertices in `mask`, relabelled to `0..k`
    /// preserving order.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.active;
        let verts: Vec<usize> = Bits(mask).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| Bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | bit(index[w])))
            .collect();
        Graph {
            n: verts.len(),
            active: low_mask(verts.len()),
            adj,
        }
    }

    /// Drops deleted vertices and relabels the rest to `0..order()`.
    pub fn compact(&self) -> Graph {
        self.induced(self.active)
    }

    /// Applies `perm` (old label -> new label) to a compact graph.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = Bits(self.adj[u]).fold(0u64, |acc, w| acc | bit(perm[w]));
        }
        let active = Bits(self.active).fold(0u64, |acc, v| acc | bit(perm[v]));
        Graph {
            n: self.n,
            active,
            adj,
        }
    }

    /// `G ∪ H`: vertices of `other` are shifted past the active vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let a = self.compact();
        let b = other.compact();
        let n = a.n + b.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = a.adj;
        adj.extend(b.adj.iter().map(|r| r << a.n));
        Ok(Graph {
            n,
            active: low_mask(n),
            adj,
        })
    }

    /// `G*`: every vertex gains one new pendant leaf. Vertex `v` of the
    /// compacted input keeps label `v`; its leaf is `v + order()`.
    pub fn star_operation(&self) -> Result<Graph, GraphError> {
        let base = self.compact();
        let m = base.n;
        if 2 * m > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(2 * m));
        }
        let mut adj = vec![0u64; 2 * m];
        for v in 0..m {
            adj[v] = base.adj[v] | bit(v + m);
            adj[v + m] = bit(v);
        }
        Ok(Graph {
            n: 2 * m,
            active: low_mask(2 * m),
            adj,
        })
    }

    /// Connected components of the subgraph induced by `mask`, ordered by
    /// lowest vertex.
    pub fn components_of(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask & self.active;
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.component_containing(rest.trailing_zeros() as usize, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn components(&self) -> Vec<u64> {
        self.components_of(self.active)
    }

    /// Vertices of `mask` reachable from `v` inside `mask`.
    pub fn component_containing(&self, v: usize, mask: u64) -> u64 {
        let mut seen = bit(v);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            next &= mask & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Acyclic: every component with `c` vertices has `c - 1` edges.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.is_forest()
    }

    /// Checks symmetry, irreflexivity and that deleted vertices are clean.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        if self.n > MAX_VERTICES || self.adj.len() != self.n || self.active & !low_mask(self.n) != 0 {
            return Err(GraphError::TooManyVertices(self.n));
        }
        for u in 0..self.n {
            let row = self.adj[u];
            if row & bit(u) != 0 {
                return Err(GraphError::SelfLoop(u));
            }
            if row & !self.active != 0 || (!self.is_active(u) && row != 0) {
                return Err(GraphError::InactiveVertex(u));
            }
            for v in Bits(row) {
                if self.adj[v] & bit(u) == 0 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("active", &format_args!("{:#x}", self.active))
            .field("edges", &edges)
            .finish()
    }
}
