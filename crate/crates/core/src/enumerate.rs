//! Isomorph-free generation of triangle-free graphs.
//!
//! Graphs on `n` vertices are grown from the graphs on `n - 1` vertices by
//! adding one vertex whose neighborhood is an independent set. A child `H`
//! built by adding `v` is kept only if `H - v` is isomorphic to `H - m(H)`,
//! where `m(H)` is the minimum-degree vertex with the largest canonical
//! label. Each class therefore comes from exactly one parent class, and
//! duplicates can only arise under a single parent, where they are removed
//! locally. Parents expand independently in parallel; the output is sorted
//! by canonical key.
//!
//! Edge-maximal graphs on `n` vertices are grown the same way, keeping only
//! neighborhoods that leave every non-adjacent pair with a common neighbor.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::graph6;

pub const MAX_ALL_ORDER: usize = 12;
pub const MAX_MAXIMAL_ORDER: usize = 13;

/// Number of isomorphism classes of triangle-free graphs on `n` vertices,
/// indexed by `n`.
pub const TRIANGLE_FREE_COUNTS: [usize; 13] = [0, 1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172, 105071, 1262180];
/// Number of isomorphism classes of edge-maximal triangle-free graphs.
pub const MAXIMAL_COUNTS: [usize; 14] = [0, 1, 1, 1, 2, 3, 4, 6, 10, 16, 31, 61, 147, 392];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    AllTriangleFree,
    MaximalTriangleFree,
}

impl Mode {
    fn file_tag(self) -> &'static str {
        match self {
            Mode::AllTriangleFree => "all",
            Mode::MaximalTriangleFree => "maximal",
        }
    }

    pub fn max_order(self) -> usize {
        match self {
            Mode::AllTriangleFree => MAX_ALL_ORDER,
            Mode::MaximalTriangleFree => MAX_MAXIMAL_ORDER,
        }
    }

    pub fn expected_count(self, n: usize) -> Option<usize> {
        match self {
            Mode::AllTriangleFree => TRIANGLE_FREE_COUNTS.get(n).copied(),
            Mode::MaximalTriangleFree => MAXIMAL_COUNTS.get(n).copied(),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::AllTriangleFree => "all-triangle-free",
            Mode::MaximalTriangleFree => "maximal-triangle-free",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "all" | "all-triangle-free" => Ok(Mode::AllTriangleFree),
            "maximal" | "maximal-triangle-free" => Ok(Mode::MaximalTriangleFree),
            other => Err(Error::Domain(format!("unknown enumeration mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClassSpec {
    pub n: usize,
    pub mode: Mode,
    /// Keep only graphs with minimum degree at least this value.
    pub min_degree: Option<usize>,
    pub connected_only: bool,
}

impl GraphClassSpec {
    pub fn new(n: usize, mode: Mode) -> Self {
        GraphClassSpec {
            n,
            mode,
            min_degree: None,
            connected_only: false,
        }
    }

    pub fn all(n: usize) -> Self {
        Self::new(n, Mode::AllTriangleFree)
    }

    pub fn maximal(n: usize) -> Self {
        Self::new(n, Mode::MaximalTriangleFree)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Domain("vertex count must be at least 1".into()));
        }
        if let Some(d) = self.min_degree {
            if d >= self.n {
                return Err(Error::Domain(format!("min degree {d} impossible on {} vertices", self.n)));
            }
        }
        if self.n > self.mode.max_order() {
            return Err(Error::Budget(format!(
                "{} enumeration is limited to n <= {}, requested n = {}",
                self.mode,
                self.mode.max_order(),
                self.n
            )));
        }
        Ok(())
    }

    fn admits(&self, g: &Graph) -> bool {
        self.min_degree.is_none_or(|d| g.min_degree() >= d) && (!self.connected_only || g.is_connected())
    }

    fn is_unfiltered(&self) -> bool {
        self.min_degree.is_none() && !self.connected_only
    }
}

/// One representative per isomorphism class, in canonical-key order.
/// Each returned graph is the canonical representative of its class.
pub fn enumerate(spec: &GraphClassSpec) -> Result<Vec<Graph>> {
    Ok(enumerate_keyed(spec)?.into_iter().map(|(_, g)| g).collect())
}

pub fn enumerate_keyed(spec: &GraphClassSpec) -> Result<Vec<(CanonicalKey, Graph)>> {
    spec.validate()?;
    let keys = layer(spec.n, spec.mode);
    Ok(keys
        .iter()
        .map(|k| (k.clone(), k.graph()))
        .filter(|(_, g)| spec.admits(g))
        .collect())
}

type Layer = Arc<Vec<CanonicalKey>>;

fn memo() -> &'static Mutex<BTreeMap<(usize, Mode), Layer>> {
    static MEMO: OnceLock<Mutex<BTreeMap<(usize, Mode), Layer>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(BTreeMap::new()))
}

fn layer(n: usize, mode: Mode) -> Layer {
    if let Some(hit) = memo().lock().expect("memo lock").get(&(n, mode)) {
        return Arc::clone(hit);
    }
    let built = Arc::new(build_layer(n, mode));
    memo()
        .lock()
        .expect("memo lock")
        .entry((n, mode))
        .or_insert(built)
        .clone()
}

fn build_layer(n: usize, mode: Mode) -> Vec<CanonicalKey> {
    if n == 1 {
        return vec![canonical_key(&Graph::empty(1).expect("K1"))];
    }
    let parents = layer(n - 1, Mode::AllTriangleFree);
    let mut children: Vec<CanonicalKey> = parents
        .par_iter()
        .flat_map_iter(|parent| expand(parent, mode))
        .collect();
    children.sort_unstable();
    debug_assert!(children.windows(2).all(|w| w[0] != w[1]));
    children
}

/// Accepted children of one parent, deduplicated.
fn expand(parent_key: &CanonicalKey, mode: Mode) -> Vec<CanonicalKey> {
    let parent = parent_key.graph();
    let m = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    // Non-adjacent pairs of the parent with no common neighbor: a maximal
    // child must join both ends to the new vertex.
    let uncovered: Vec<u64> = if mode == Mode::MaximalTriangleFree {
        (0..m)
            .flat_map(|u| ((u + 1)..m).map(move |v| (u, v)))
            .filter(|&(u, v)| !parent.has_edge(u, v) && parent.neighbors(u) & parent.neighbors(v) == 0)
            .map(|(u, v)| 1u64 << u | 1u64 << v)
            .collect()
    } else {
        Vec::new()
    };
    for set in independent_sets(&parent) {
        if mode == Mode::MaximalTriangleFree {
            let dominating = (0..m).all(|u| set >> u & 1 == 1 || parent.neighbors(u) & set != 0);
            if !dominating || !uncovered.iter().all(|&pair| pair & set == pair) {
                continue;
            }
        }
        let child = parent.add_vertex(set).expect("order within limit");
        if let Some(key) = accept(&child, m, parent_key) {
            if seen.insert(key.clone()) {
                out.push(key);
            }
        }
    }
    out
}

/// Canonical-parent test for the child whose newest vertex is `added`.
fn accept(child: &Graph, added: usize, parent_key: &CanonicalKey) -> Option<CanonicalKey> {
    let min_deg = child.min_degree();
    if child.degree(added) != min_deg {
        return None;
    }
    let canon = canonical_form(child);
    let key = canon.key();
    let chosen = (0..child.order())
        .filter(|&v| child.degree(v) == min_deg)
        .max_by_key(|&v| canon.labeling[v])
        .expect("nonempty graph");
    if chosen == added || canonical_key(&child.delete_vertex(chosen)) == *parent_key {
        Some(key)
    } else {
        None
    }
}

/// All independent vertex sets of `g`, including the empty set.
fn independent_sets(g: &Graph) -> Vec<u64> {
    fn rec(g: &Graph, v: usize, set: u64, blocked: u64, out: &mut Vec<u64>) {
        if v == g.order() {
            out.push(set);
            return;
        }
        rec(g, v + 1, set, blocked, out);
        if blocked >> v & 1 == 0 {
            rec(g, v + 1, set | 1 << v, blocked | g.neighbors(v), out);
        }
    }
    let mut out = Vec::new();
    rec(g, 0, 0, 0, &mut out);
    out
}

/// True iff every non-adjacent pair has a common neighbor.
pub fn is_maximal_triangle_free(g: &Graph) -> Result<bool> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let n = g.order();
    Ok((0..n).all(|u| {
        bits(g.vertex_mask() & !g.neighbors(u) & !(1u64 << u))
            .all(|v| g.neighbors(u) & g.neighbors(v) != 0)
    }))
}

/// Order in which candidate non-edges are offered to [`complete_to_maximal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Pairs `(u, v)`, `u < v`, in lexicographic order.
    Lexicographic,
    /// A seeded shuffle of the pairs.
    Shuffled(u64),
}

/// Adds non-edges in the tie-break order whenever they close no triangle.
/// One pass suffices: a pair that is blocked stays blocked once more edges
/// are present.
pub fn complete_to_maximal(g: &Graph, tie_break: TieBreak) -> Result<Graph> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let n = g.order();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    if let TieBreak::Shuffled(seed) = tie_break {
        pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut rows = g.rows().to_vec();
    for (u, v) in pairs {
        if rows[u] >> v & 1 == 0 && rows[u] & rows[v] == 0 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    Ok(Graph::from_rows_unchecked(n, rows))
}

pub fn cache_file(dir: &Path, n: usize, mode: Mode) -> PathBuf {
    dir.join(format!("tf_{}_{}.g6", mode.file_tag(), n))
}

/// Reads a cache file, returning `None` when it is missing or fails
/// re-validation (unparseable line, wrong class, non-canonical or repeated
/// entry, wrong count).
pub fn load_cache(dir: &Path, n: usize, mode: Mode) -> Result<Option<Vec<CanonicalKey>>> {
    let path = cache_file(dir, n, mode);
    let file = match fs::File::open(&path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut keys = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        let Ok(g) = graph6::decode(&line) else {
            return Ok(None);
        };
        let valid = g.order() == n
            && match mode {
                Mode::AllTriangleFree => g.is_triangle_free(),
                Mode::MaximalTriangleFree => is_maximal_triangle_free(&g).unwrap_or(false),
            };
        let key = canonical_key(&g);
        if !valid || key.as_str() != line || keys.last().is_some_and(|prev: &CanonicalKey| *prev >= key) {
            return Ok(None);
        }
        keys.push(key);
    }
    if mode.expected_count(n).is_some_and(|c| c != keys.len()) {
        return Ok(None);
    }
    Ok(Some(keys))
}

pub fn write_cache(dir: &Path, n: usize, mode: Mode, keys: &[CanonicalKey]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = cache_file(dir, n, mode);
    let tmp = path.with_extension("g6.tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        for k in keys {
            writeln!(f, "{k}")?;
        }
        f.sync_all()?;
    }
    fs::rename(tmp, path)?;
    Ok(())
}

/// Outcome of a cached enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Regenerated,
}

/// Like [`enumerate_keyed`], reusing `tf_{mode}_{n}.g6` under `dir` when it
/// re-validates and rewriting it otherwise.
pub fn enumerate_cached(spec: &GraphClassSpec, dir: Option<&Path>) -> Result<(Vec<(CanonicalKey, Graph)>, CacheStatus)> {
    spec.validate()?;
    let Some(dir) = dir else {
        return Ok((enumerate_keyed(spec)?, CacheStatus::Disabled));
    };
    let (keys, status) = match load_cache(dir, spec.n, spec.mode)? {
        Some(keys) => {
            let keys = Arc::new(keys);
            memo()
                .lock()
                .expect("memo lock")
                .entry((spec.n, spec.mode))
                .or_insert_with(|| Arc::clone(&keys));
            (keys, CacheStatus::Hit)
        }
        None => {
            let keys = layer(spec.n, spec.mode);
            write_cache(dir, spec.n, spec.mode, &keys)?;
            (keys, CacheStatus::Regenerated)
        }
    };
    let out = keys
        .iter()
        .map(|k| (k.clone(), k.graph()))
        .filter(|(_, g)| spec.is_unfiltered() || spec.admits(g))
        .collect();
    Ok((out, status))
}
