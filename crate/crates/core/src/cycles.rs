//! Exact simple-cycle and simple-path counting by depth-first extension.
//!
//! A cycle is counted once: rooted at its smallest vertex `r`, restricted to
//! vertices above `r`, and oriented so that the vertex after `r` is smaller
//! than the vertex before `r`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, Graph};
use crate::ExactCount;

/// Number of simple cycles of each length `k >= 3`. Zero counts are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleSpectrum {
    counts: BTreeMap<usize, ExactCount>,
}

impl CycleSpectrum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I: IntoIterator<Item = (usize, ExactCount)>>(items: I) -> Self {
        let mut s = Self::new();
        for (k, c) in items {
            s.add(k, c);
        }
        s
    }

    fn from_tally(tally: &[u64; 65]) -> Self {
        Self::from_counts(
            tally
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c > 0)
                .map(|(k, &c)| (k, BigUint::from(c))),
        )
    }

    pub fn add(&mut self, k: usize, count: ExactCount) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry(k).or_default() += count;
    }

    pub fn get(&self, k: usize) -> ExactCount {
        self.counts.get(&k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> ExactCount {
        self.counts.values().sum()
    }

    pub fn counts(&self) -> &BTreeMap<usize, ExactCount> {
        &self.counts
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts.keys().copied()
    }
}

impl Serialize for CycleSpectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.counts.len()))?;
        for (k, v) in &self.counts {
            map.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

pub fn count_cycles(g: &Graph) -> CycleSpectrum {
    let mut tally = [0u64; 65];
    let n = g.order();
    for root in 0..n {
        let above = g.vertex_mask() & !low_mask(root + 1);
        let closing = g.neighbors(root);
        for second in bits(g.neighbors(root) & above) {
            let mut walker = CycleWalker {
                g,
                allowed: above,
                closing,
                second,
                tally: &mut tally,
                target_len: None,
            };
            walker.extend(second, (1 << root) | (1 << second), 2);
        }
    }
    CycleSpectrum::from_tally(&tally)
}

/// Spanning cycles only. Zero for graphs with fewer than three vertices.
pub fn count_hamiltonian_cycles(g: &Graph) -> ExactCount {
    let n = g.order();
    if n < 3 {
        return BigUint::zero();
    }
    let mut tally = [0u64; 65];
    let above = g.vertex_mask() & !1;
    for second in bits(g.neighbors(0)) {
        let mut walker = CycleWalker {
            g,
            allowed: above,
            closing: g.neighbors(0),
            second,
            tally: &mut tally,
            target_len: Some(n),
        };
        walker.extend(second, 1 | (1 << second), 2);
    }
    BigUint::from(tally[n])
}

struct CycleWalker<'a> {
    g: &'a Graph,
    allowed: u64,
    closing: u64,
    second: usize,
    tally: &'a mut [u64; 65],
    target_len: Option<usize>,
}

impl CycleWalker<'_> {
    fn extend(&mut self, v: usize, visited: u64, len: usize) {
        let at_target = self.target_len.is_none_or(|t| len == t);
        if len >= 3 && at_target && v > self.second && self.closing >> v & 1 == 1 {
            self.tally[len] += 1;
        }
        if self.target_len == Some(len) {
            return;
        }
        for w in bits(self.g.neighbors(v) & self.allowed & !visited) {
            self.extend(w, visited | 1 << w, len + 1);
        }
    }
}

/// Cycles containing the edge `uv`, by length.
pub fn count_cycles_through_edge(g: &Graph, u: usize, v: usize) -> Result<CycleSpectrum> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let mut tally = [0u64; 65];
    // Each such cycle is a u-v path with at least two edges, closed by uv.
    walk_paths(g, u, v, 1 << u, 1, &mut |vertices| {
        if vertices >= 3 {
            tally[vertices] += 1;
        }
    });
    Ok(CycleSpectrum::from_tally(&tally))
}

/// Simple paths with endpoints `x` and `y` and at least one edge.
pub fn count_paths_between(g: &Graph, x: usize, y: usize) -> Result<ExactCount> {
    if x == y {
        return Err(Error::SameEndpoints(x));
    }
    if x >= g.order() || y >= g.order() {
        return Err(Error::VertexOutOfRange(x, y, g.order()));
    }
    let mut count = 0u64;
    walk_paths(g, x, y, 1 << x, 1, &mut |_| count += 1);
    Ok(BigUint::from(count))
}

/// Calls `found(vertex_count)` for every simple path from `at` to `target`
/// extending the current path.
fn walk_paths(g: &Graph, at: usize, target: usize, visited: u64, len: usize, found: &mut dyn FnMut(usize)) {
    for w in bits(g.neighbors(at) & !visited) {
        if w == target {
            found(len + 1);
        } else {
            walk_paths(g, w, target, visited | 1 << w, len + 1, found);
        }
    }
}

/// Cycles through vertex `x`: each uses exactly two edges at `x`, so this is
/// half the sum of the edge counts over the neighbors of `x`.
pub fn count_cycles_through_vertex(g: &Graph, x: usize) -> ExactCount {
    let twice: BigUint = bits(g.neighbors(x))
        .map(|y| count_cycles_through_edge(g, x, y).expect("neighbor edge").total())
        .sum();
    twice / 2u32
}

/// Cycles of `g` that do not use vertex `x`.
pub fn count_cycles_avoiding(g: &Graph, x: usize) -> ExactCount {
    if g.order() <= 1 {
        return BigUint::zero();
    }
    count_cycles(&g.delete_vertex(x)).total()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spectrum(items: &[(usize, u64)]) -> CycleSpectrum {
        CycleSpectrum::from_counts(items.iter().map(|&(k, c)| (k, BigUint::from(c))))
    }

    #[test]
    fn count_cycles_examples() {
        let c5 = count_cycles(&Graph::cycle(5).unwrap());
        assert_eq!(c5, spectrum(&[(5, 1)]));
        assert_eq!(c5.total(), BigUint::from(1u32));
        let k33 = count_cycles(&Graph::complete_bipartite(3, 3).unwrap());
        assert_eq!(k33, spectrum(&[(4, 9), (6, 6)]));
        assert_eq!(k33.total(), BigUint::from(15u32));
        let k4 = count_cycles(&Graph::complete(4).unwrap());
        assert_eq!(k4, spectrum(&[(3, 4), (4, 3)]));
    }

    #[test]
    fn trees_and_tiny_graphs_have_no_cycles() {
        assert!(count_cycles(&Graph::path(6).unwrap()).is_empty());
        assert!(count_cycles(&Graph::new(1, &[]).unwrap()).is_empty());
        assert!(count_cycles(&Graph::complete_bipartite(1, 7).unwrap()).is_empty());
    }

    #[test]
    fn through_edge_examples() {
        let c5 = Graph::cycle(5).unwrap();
        for (u, v) in c5.edges() {
            assert_eq!(count_cycles_through_edge(&c5, u, v).unwrap(), spectrum(&[(5, 1)]));
        }
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        for (u, v) in k33.edges() {
            let s = count_cycles_through_edge(&k33, u, v).unwrap();
            assert_eq!(s, spectrum(&[(4, 4), (6, 4)]));
            assert_eq!(s.total(), BigUint::from(8u32));
        }
        let p4 = Graph::complete_bipartite(2, 2).unwrap().without_edge(0, 2).unwrap();
        assert!(count_cycles_through_edge(&p4, 1, 3).unwrap().is_empty());
        assert_eq!(count_cycles_through_edge(&p4, 0, 1), Err(Error::NotAnEdge(0, 1)));
    }

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(count_hamiltonian_cycles(&Graph::cycle(6).unwrap()), BigUint::from(1u32));
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(count_hamiltonian_cycles(&k33), BigUint::from(6u32));
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(count_hamiltonian_cycles(&k23), BigUint::zero());
        assert_eq!(count_hamiltonian_cycles(&Graph::complete(2).unwrap()), BigUint::zero());
        assert_eq!(count_hamiltonian_cycles(&Graph::complete(3).unwrap()), BigUint::from(1u32));
    }

    #[test]
    fn path_examples() {
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(count_paths_between(&edge, 0, 1).unwrap(), BigUint::from(1u32));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(count_paths_between(&c5, 1, 2).unwrap(), BigUint::from(2u32));
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(count_paths_between(&k33, 0, 3).unwrap(), BigUint::from(9u32));
        assert_eq!(count_paths_between(&k33, 2, 2), Err(Error::SameEndpoints(2)));
        assert_eq!(count_paths_between(&Graph::empty(3).unwrap(), 0, 1).unwrap(), BigUint::zero());
    }

    #[test]
    fn vertex_and_avoiding_counts_partition_all_cycles() {
        let g = Graph::complete_bipartite(3, 4).unwrap();
        let total = count_cycles(&g).total();
        for x in 0..g.order() {
            assert_eq!(count_cycles_through_vertex(&g, x) + count_cycles_avoiding(&g, x), total);
        }
    }
}
