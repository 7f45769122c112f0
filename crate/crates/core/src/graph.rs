//! Simple undirected graphs on at most 64 vertices, one neighbor word per vertex.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Iterates over the indices of the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple graph. `adj[v]` has bit `u` set iff `uv` is an edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs are ignored.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_rows_unchecked(n, adj))
    }

    /// Builds a graph from neighbor rows, validating symmetry and irreflexivity.
    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Graph> {
        check_order(n)?;
        if rows.len() != n {
            return Err(Error::Domain(format!("expected {n} rows, got {}", rows.len())));
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let u = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange(v, u, n));
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Domain(format!("asymmetric adjacency at ({v}, {u})")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(n: usize, adj: Vec<u64>) -> Graph {
        let g = Graph { n, adj };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let mask = low_mask(n);
        let adj = (0..n).map(|v| mask & !(1u64 << v)).collect();
        Ok(Graph::from_rows_unchecked(n, adj))
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Domain(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a == 0 || b == 0 {
            return Err(Error::Domain(format!("part sizes must be positive, got ({a}, {b})")));
        }
        let n = a + b;
        check_order(n)?;
        let left = low_mask(a);
        let right = low_mask(n) & !left;
        let adj = (0..n).map(|v| if v < a { right } else { left }).collect();
        Ok(Graph::from_rows_unchecked(n, adj))
    }

    /// `K_{⌊n/2⌋,⌈n/2⌉}`.
    pub fn balanced_complete_bipartite(n: usize) -> Result<Graph> {
        Graph::complete_bipartite(n / 2, n - n / 2)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// True iff no edge `uv` has a common neighbor.
    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// A proper 2-coloring (`false`/`true` per vertex) if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color = vec![false; self.n];
        let mut seen = 0u64;
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            seen |= 1 << start;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in bits(self.adj[v]) {
                    if seen >> u & 1 == 0 {
                        seen |= 1 << u;
                        color[u] = !color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut reached = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !reached;
            reached |= next;
        }
        reached == self.vertex_mask()
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = bits(row).fold(0u64, |acc, u| acc | 1 << perm[u]);
        }
        Graph::from_rows_unchecked(self.n, adj)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange(u, v, self.n));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph::from_rows_unchecked(self.n, adj))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph::from_rows_unchecked(self.n, adj))
    }

    /// Removes vertex `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n && self.n > 1);
        let low = low_mask(v);
        let squeeze = |row: u64| (row & low) | ((row >> 1) & !low);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &row)| squeeze(row & !(1u64 << v)))
            .collect();
        Graph::from_rows_unchecked(self.n - 1, adj)
    }

    /// Appends a new vertex `n` adjacent to the vertices in `neighbors`.
    pub fn add_vertex(&self, neighbors: u64) -> Result<Graph> {
        check_order(self.n + 1)?;
        if neighbors & !self.vertex_mask() != 0 {
            return Err(Error::Domain("new vertex neighbor out of range".into()));
        }
        let v = self.n;
        let mut adj: Vec<u64> = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, &row)| row | ((neighbors >> u & 1) << v))
            .collect();
        adj.push(neighbors);
        Ok(Graph::from_rows_unchecked(self.n + 1, adj))
    }

    /// The graph induced on the vertices of `keep`, renumbered in increasing order.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let index: Vec<usize> = bits(keep).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in index.iter().enumerate() {
            pos[v] = i;
        }
        let adj = index
            .iter()
            .map(|&v| bits(self.adj[v] & keep).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        Graph::from_rows_unchecked(index.len(), adj)
    }

    fn is_well_formed(&self) -> bool {
        let mask = low_mask(self.n);
        self.adj.len() == self.n
            && self.adj.iter().enumerate().all(|(v, &row)| {
                row & !mask == 0 && row >> v & 1 == 0 && bits(row).all(|u| self.adj[u] >> v & 1 == 1)
            })
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::VertexCount(n))
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        write!(f, "Graph(n={}, edges={:?})", self.n, edges)
    }
}
