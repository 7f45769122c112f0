//! Canonical labeling by individualization and equitable refinement.
//!
//! The search tree is explored depth first. Leaves are compared by their
//! relabeled adjacency rows and the largest one is the canonical form.
//! Automorphisms discovered at leaves prune the tree in two ways: children of
//! a node that lie in one orbit of the pointwise stabilizer of the node's
//! prefix are explored once, and a leaf equivalent to the first or best leaf
//! unwinds the search to the common ancestor.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};
use crate::graph6;

/// Isomorphism-class identifier: the graph6 string of the canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative graph.
    pub fn graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical keys are valid graph6")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Result of canonical labeling: `labeling[v]` is the canonical label of `v`.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub labeling: Vec<usize>,
    pub graph: Graph,
}

impl Canonical {
    pub fn key(&self) -> CanonicalKey {
        CanonicalKey(graph6::encode(&self.graph))
    }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_form(g).key()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_key(g) == canonical_key(h)
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.order();
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    let mut prefix = Vec::with_capacity(n);
    search.descend(&mut cells, &mut prefix);
    let best = search.best.expect("search visits at least one leaf");
    let mut labeling = vec![0; n];
    for (label, &v) in best.order.iter().enumerate() {
        labeling[v] = label;
    }
    Canonical {
        labeling,
        graph: Graph::from_rows_unchecked(n, best.rows),
    }
}

struct Leaf {
    prefix: Vec<usize>,
    /// Vertices in canonical order.
    order: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as vertex maps.
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree at `cells`. Returns `Some(depth)` when the search
    /// must unwind to the ancestor at `depth`.
    fn descend(&mut self, cells: &mut Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(cells, prefix);
        };
        let depth = prefix.len();
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if !explored.is_empty() && self.equivalent_to_explored(prefix, v, &explored) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            child[target] = cell & !(1 << v);
            child.insert(target, 1 << v);
            refine(self.g, &mut child);
            prefix.push(v);
            let jump = self.descend(&mut child, prefix);
            prefix.pop();
            if let Some(to) = jump {
                if to < depth {
                    return Some(to);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut uf: Vec<usize> = (0..n).collect();
        let mut merged = false;
        for gen in &self.generators {
            if prefix.iter().all(|&p| gen[p] == p) {
                for (a, &b) in gen.iter().enumerate() {
                    union(&mut uf, a, b);
                }
                merged = true;
            }
        }
        if !merged {
            return false;
        }
        let root = find(&mut uf, v);
        explored.iter().any(|&u| find(&mut uf, u) == root)
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut label = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| bits(self.g.neighbors(v)).fold(0u64, |acc, u| acc | 1 << label[u]))
            .collect();
        let leaf = Leaf {
            prefix: prefix.to_vec(),
            order,
            rows,
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                prefix: leaf.prefix.clone(),
                order: leaf.order.clone(),
                rows: leaf.rows.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            let back = common_prefix(&first.prefix, &leaf.prefix);
            let first_order = first.order.clone();
            self.record_automorphism(&first_order, &leaf.order, n);
            return Some(back);
        }
        let best = self.best.as_ref().expect("best set with first");
        match compare_rows(&leaf.rows, &best.rows) {
            Ordering::Equal => {
                let back = common_prefix(&best.prefix, &leaf.prefix);
                let best_order = best.order.clone();
                self.record_automorphism(&best_order, &leaf.order, n);
                Some(back)
            }
            Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            Ordering::Less => None,
        }
    }

    /// Two leaves with identical relabeled rows differ by the automorphism
    /// sending `a[i]` to `b[i]`.
    fn record_automorphism(&mut self, a: &[usize], b: &[usize], n: usize) {
        let mut gen = vec![0; n];
        for (&x, &y) in a.iter().zip(b) {
            gen[x] = y;
        }
        if gen.iter().enumerate().any(|(i, &j)| i != j) {
            self.generators.push(gen);
        }
    }
}

fn compare_rows(a: &[u64], b: &[u64]) -> Ordering {
    a.cmp(b)
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        uf[hi] = lo;
    }
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Cells split by neighbor count into each splitter cell, fragments ordered
/// by increasing count. Only cell positions and counts drive the process, so
/// the result commutes with relabeling.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut next = Vec::with_capacity(cells.len() + 4);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut by_count = [0u64; 65];
                let mut lo = 64usize;
                let mut hi = 0usize;
                for v in bits(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones() as usize;
                    by_count[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    next.push(cell);
                } else {
                    changed = true;
                    next.extend(by_count[lo..=hi].iter().copied().filter(|&m| m != 0));
                }
            }
            *cells = next;
            w += 1;
        }
        if !changed {
            break;
        }
    }
}
