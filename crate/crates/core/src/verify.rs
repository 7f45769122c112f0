//! Desk-scale checks over enumerated graphs and the analytic ingredients.
//!
//! Each check fans out over graphs in parallel, collects per-graph results in
//! enumeration order and folds them sequentially, so reports do not depend
//! on the worker count. Only `runtime_ms` varies between identical runs.

use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::bessel::{bessel_partial, BesselOrder};
use crate::analytic::bounds::{
    edge_cycle_bound_even, edge_cycle_bound_odd, factorial, ham_bound, non_x_cycles_bound, robbins_bounds,
};
use crate::analytic::constants::{published_i0_of_2, published_i1_of_2};
use crate::analytic::sequences::{a_even, a_odd};
use crate::canon::{are_isomorphic, canonical_key, CanonicalKey};
use crate::cycles::{
    count_cycles, count_cycles_avoiding, count_cycles_through_edge, count_hamiltonian_cycles, count_paths_between,
};
use crate::enumerate::{complete_to_maximal, enumerate_keyed, GraphClassSpec, TieBreak};
use crate::error::{Error, Result};
use crate::formula::{balanced_lower_bound, balanced_total, balanced_upper_bound_141};
use crate::graph::Graph;
use crate::report::{Expected, VerificationReport};
use crate::scalar::{decimal, format_decimal, rational_from_biguint};
use crate::ExactCount;

pub const CONJECTURE: &str = "balanced-bipartite-maximizes-cycles";
pub const PATHS6: &str = "paths-between-two-vertices-n6";
pub const HAMILTONIAN: &str = "hamiltonian-cycle-bound";
pub const EDGE_BOUND: &str = "cycles-through-edge-bound";
pub const ANDRASFAI: &str = "min-degree-forces-bipartite";
pub const ANALYTIC: &str = "analytic-suite";
pub const AVOIDING: &str = "cycles-avoiding-vertex-bound";

/// Largest order for the exhaustive checks over all triangle-free graphs.
pub const EXHAUSTIVE_MAX: usize = 9;
pub const CONJECTURE_MAX: usize = 13;
pub const SAMPLED_MAX: usize = 13;
pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_SEED: u64 = 0x5eed;

const THRESHOLD_NOTE: &str = "validity threshold unspecified";

fn timed(mut f: impl FnMut() -> Result<VerificationReport>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = f()?;
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn all_graphs(n: usize) -> Result<Vec<(CanonicalKey, Graph)>> {
    enumerate_keyed(&GraphClassSpec::all(n))
}

fn balanced(n: usize) -> Graph {
    Graph::balanced_complete_bipartite(n).expect("order within limit")
}

fn ratio_string(q: &BigRational) -> String {
    format_decimal(q, 6)
}

/// Unique cycle maximum among edge-maximal triangle-free graphs on `n`
/// vertices, compared with the balanced complete bipartite graph. Also
/// checks that removing any edge of that graph loses cycles, which together
/// with edge-addition monotonicity extends uniqueness to all triangle-free
/// graphs.
pub fn verify_conjecture(n: usize) -> Result<VerificationReport> {
    if n < 4 {
        return Err(Error::Domain(format!("conjecture check needs n >= 4, got {n}")));
    }
    if n > CONJECTURE_MAX {
        return Err(Error::Budget(format!("conjecture check is limited to n <= {CONJECTURE_MAX}, got {n}")));
    }
    timed(|| {
        let graphs = enumerate_keyed(&GraphClassSpec::maximal(n))?;
        let totals: Vec<ExactCount> = graphs.par_iter().map(|(_, g)| count_cycles(g).total()).collect();
        let mut order: Vec<usize> = (0..graphs.len()).collect();
        // largest total first, ties by key
        order.sort_by(|&i, &j| totals[j].cmp(&totals[i]).then_with(|| graphs[i].0.cmp(&graphs[j].0)));
        let best = order[0];
        let max = &totals[best];
        let ties = totals.iter().filter(|t| *t == max).count();
        let runner_up = order.get(1).map(|&i| totals[i].clone());

        let k = balanced(n);
        let expected = balanced_total(n as u64)?;
        let witness_is_balanced = are_isomorphic(&graphs[best].1, &k);
        let k_total = count_cycles(&k).total();
        let deletions: Vec<bool> = k
            .edges()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(u, v)| count_cycles(&k.without_edge(u, v).expect("edge of K")).total() < k_total)
            .collect();
        let deletion_drops = deletions.iter().all(|&b| b);

        let mut r = VerificationReport::new(&format!("{CONJECTURE}-n{n}"), format!("n={n}"));
        r.graphs_examined = graphs.len() as u64;
        r.extremal_value = Some(max.to_string());
        r.witness = Some(graphs[best].0.to_string());
        r.expected = Some(Expected::new(&expected, "closed form for the balanced complete bipartite graph"));
        r.detail("maximum_is_unique", ties == 1);
        r.detail("witness_is_balanced_bipartite", witness_is_balanced);
        r.detail("runner_up", runner_up.map_or("none".to_string(), |v| v.to_string()));
        r.detail("edge_deletion_decreases_count", deletion_drops);
        r.detail("class", "maximal-triangle-free");
        r.passed = ties == 1 && *max == expected && witness_is_balanced && deletion_drops;
        Ok(r)
    })
}

/// Maximum number of paths between two distinct vertices over all
/// triangle-free graphs on six vertices.
pub fn verify_lemma_paths6() -> Result<VerificationReport> {
    timed(|| {
        let graphs = all_graphs(6)?;
        let per_graph: Vec<(ExactCount, usize, usize)> = graphs
            .par_iter()
            .map(|(_, g)| {
                let mut best = (BigUint::zero(), 0, 0);
                for x in 0..6 {
                    for y in 0..6 {
                        if x == y {
                            continue;
                        }
                        let p = count_paths_between(g, x, y).expect("valid pair");
                        if p > best.0 {
                            best = (p, x, y);
                        }
                    }
                }
                best
            })
            .collect();
        let mut best = 0;
        for (i, entry) in per_graph.iter().enumerate() {
            if entry.0 > per_graph[best].0 {
                best = i;
            }
        }
        let (max, x, y) = per_graph[best].clone();
        let k33 = Graph::complete_bipartite(3, 3)?;
        let k33_pair = count_paths_between(&k33, 0, 3)?;
        let nine = BigUint::from(9u32);

        let mut r = VerificationReport::new(PATHS6, "n=6");
        r.graphs_examined = graphs.len() as u64;
        r.extremal_value = Some(max.to_string());
        r.witness = Some(format!("{} x={x} y={y}", graphs[best].0));
        r.expected = Some(Expected::new(&nine, "stated maximum"));
        r.detail("k33_opposite_pair_paths", &k33_pair);
        r.detail("witness_is_k33", are_isomorphic(&graphs[best].1, &k33));
        r.passed = max == nine && k33_pair == nine;
        Ok(r)
    })
}

/// Hamiltonian cycle counts of all triangle-free graphs on `3..=n_max`
/// vertices against the certified upper end of `e^2 (k/2e)^k`.
pub fn verify_ham_bound(n_max: usize) -> Result<VerificationReport> {
    if !(3..=EXHAUSTIVE_MAX).contains(&n_max) {
        return Err(Error::Budget(format!("Hamiltonian check needs 3 <= n_max <= {EXHAUSTIVE_MAX}, got {n_max}")));
    }
    timed(|| {
        let mut r = VerificationReport::new(HAMILTONIAN, format!("3<=k<={n_max}"));
        let mut violations = 0u64;
        let mut tightest: Option<(BigRational, String)> = None;
        for k in 3..=n_max {
            let bound = ham_bound(k as u64)?;
            let graphs = all_graphs(k)?;
            let counts: Vec<ExactCount> = graphs.par_iter().map(|(_, g)| count_hamiltonian_cycles(g)).collect();
            r.graphs_examined += graphs.len() as u64;
            let mut max_k = BigUint::zero();
            for ((key, _), count) in graphs.iter().zip(&counts) {
                let c = rational_from_biguint(count);
                if c > bound.hi {
                    violations += 1;
                    r.findings.push(format!("violation: k={k} graph {key} has {count} Hamiltonian cycles"));
                } else if c > bound.lo {
                    r.findings.push(format!("inconclusive: k={k} graph {key} count {count} inside bound bracket"));
                }
                let ratio = &c / &bound.hi;
                if tightest.as_ref().is_none_or(|(best, _)| ratio > *best) {
                    tightest = Some((ratio, format!("{key} k={k}")));
                }
                max_k = max_k.max(count.clone());
            }
            r.detail(&format!("max_count_k{k}"), &max_k);
            r.detail(&format!("bound_upper_k{k}"), ratio_string(&bound.hi));
        }
        let (ratio, witness) = tightest.expect("at least one graph");
        r.extremal_value = Some(ratio_string(&ratio));
        r.witness = Some(witness);
        r.expected = Some(Expected::new("1", "count over bound stays at most 1"));
        r.detail("violations", violations);
        r.passed = violations == 0;
        Ok(r)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeCheckMode {
    /// Every triangle-free graph on `n` vertices.
    Exhaustive,
    /// Seeded random edge-maximal triangle-free graphs plus the balanced
    /// complete bipartite graph.
    Sampled { samples: usize, seed: u64 },
}

impl EdgeCheckMode {
    pub fn sampled_default() -> Self {
        EdgeCheckMode::Sampled {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

/// Distinct edge-maximal triangle-free graphs obtained by completing the
/// empty graph in `samples` seeded random orders, together with the
/// balanced complete bipartite graph, in canonical-key order.
pub fn sample_maximal(n: usize, samples: usize, seed: u64) -> Result<Vec<(CanonicalKey, Graph)>> {
    let empty = Graph::empty(n)?;
    let mut graphs: Vec<(CanonicalKey, Graph)> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let g = complete_to_maximal(&empty, TieBreak::Shuffled(seed.wrapping_add(i)))?;
            let key = canonical_key(&g);
            Ok((key.clone(), key.graph()))
        })
        .collect::<Result<_>>()?;
    let k = balanced(n);
    let key = canonical_key(&k);
    graphs.push((key.clone(), key.graph()));
    graphs.sort_by(|a, b| a.0.cmp(&b.0));
    graphs.dedup_by(|a, b| a.0 == b.0);
    Ok(graphs)
}

/// Cycles through each edge against `2.44 (((n-2)/2)!)^2` (even `n`) or,
/// for edges `x1 x2` with `deg(x2) <= 2n/5`, against
/// `n^2 + 0.976 n (((n-3)/2)!)^2` (odd `n`). Exceedances are findings: the
/// bounds carry no stated minimum order, so `passed` only records that the
/// check ran to completion.
pub fn verify_edge_cycle_bounds(n: usize, mode: EdgeCheckMode) -> Result<VerificationReport> {
    let limit = match mode {
        EdgeCheckMode::Exhaustive => EXHAUSTIVE_MAX,
        EdgeCheckMode::Sampled { .. } => SAMPLED_MAX,
    };
    if n > limit {
        return Err(Error::Budget(format!("edge bound check in {mode:?} mode is limited to n <= {limit}, got {n}")));
    }
    let bound = if n % 2 == 0 { edge_cycle_bound_even(n as u64)? } else { edge_cycle_bound_odd(n as u64)? };
    timed(|| {
        let graphs = match mode {
            EdgeCheckMode::Exhaustive => all_graphs(n)?,
            EdgeCheckMode::Sampled { samples, seed } => sample_maximal(n, samples, seed)?,
        };
        // per graph: (edges checked, orientations excluded, largest checked count with its edge)
        let per_graph: Vec<(u64, u64, Option<(ExactCount, usize, usize)>)> = graphs
            .par_iter()
            .map(|(_, g)| {
                let (mut checked, mut excluded, mut best) = (0u64, 0u64, None::<(ExactCount, usize, usize)>);
                for (u, v) in g.edges() {
                    let through = count_cycles_through_edge(g, u, v).expect("edge").total();
                    // orientation (x1, x2): the odd-order hypothesis restricts deg(x2)
                    let orientations = if n % 2 == 0 { vec![(u, v)] } else { vec![(u, v), (v, u)] };
                    for (x1, x2) in orientations {
                        if n % 2 == 1 && 5 * g.degree(x2) > 2 * n {
                            excluded += 1;
                            continue;
                        }
                        checked += 1;
                        if best.as_ref().is_none_or(|(c, _, _)| through > *c) {
                            best = Some((through.clone(), x1, x2));
                        }
                    }
                }
                (checked, excluded, best)
            })
            .collect();

        let mut r = VerificationReport::new(EDGE_BOUND, format!("n={n}"));
        r.graphs_examined = graphs.len() as u64;
        let mut checked = 0u64;
        let mut excluded = 0u64;
        let mut exceed = 0u64;
        let mut overall: Option<(ExactCount, String)> = None;
        for ((key, _), (c, e, best)) in graphs.iter().zip(&per_graph) {
            checked += c;
            excluded += e;
            let Some((count, x1, x2)) = best else { continue };
            if rational_from_biguint(count) > bound {
                exceed += 1;
                r.findings.push(format!("exceeds bound ({THRESHOLD_NOTE}): graph {key} edge {x1}-{x2} has {count} cycles"));
            }
            if overall.as_ref().is_none_or(|(m, _)| count > m) {
                overall = Some((count.clone(), format!("{key} x1={x1} x2={x2}")));
            }
        }
        r.expected = Some(Expected::new(ratio_string(&bound), "closed-form bound"));
        if let Some((max, witness)) = overall {
            r.extremal_value = Some(max.to_string());
            r.witness = Some(witness);
        } else {
            r.witness = Some("no edge meets the hypothesis".into());
        }
        r.detail("mode", match mode {
            EdgeCheckMode::Exhaustive => "exhaustive".to_string(),
            EdgeCheckMode::Sampled { samples, seed } => format!("sampled samples={samples} seed={seed}"),
        });
        r.detail("edges_checked", checked);
        r.detail("orientations_excluded_by_degree", excluded);
        r.detail("graphs_exceeding", exceed);
        r.detail("threshold", THRESHOLD_NOTE);
        r.passed = true;
        Ok(r)
    })
}

/// Every triangle-free graph on at most `n_max` vertices with minimum degree
/// above `2n/5` is bipartite; `C_5` sits on the boundary.
pub fn verify_andrasfai(n_max: usize) -> Result<VerificationReport> {
    if !(1..=EXHAUSTIVE_MAX).contains(&n_max) {
        return Err(Error::Budget(format!("min-degree check needs 1 <= n_max <= {EXHAUSTIVE_MAX}, got {n_max}")));
    }
    timed(|| {
        let mut r = VerificationReport::new(ANDRASFAI, format!("1<=n<={n_max}"));
        let mut hypothesis = 0u64;
        let mut violations = 0u64;
        for n in 1..=n_max {
            let graphs = all_graphs(n)?;
            r.graphs_examined += graphs.len() as u64;
            for (key, g) in &graphs {
                if 5 * g.min_degree() > 2 * n {
                    hypothesis += 1;
                    if !g.is_bipartite() {
                        violations += 1;
                        r.findings.push(format!("violation: n={n} graph {key} is not bipartite"));
                    }
                }
            }
        }
        let c5 = Graph::cycle(5)?;
        let boundary = 5 * c5.min_degree() == 2 * 5 && !c5.is_bipartite();
        r.witness = Some(canonical_key(&c5).to_string());
        r.extremal_value = Some(violations.to_string());
        r.expected = Some(Expected::new(0, "no non-bipartite graph above the degree threshold"));
        r.detail("graphs_meeting_hypothesis", hypothesis);
        r.detail("c5_boundary_non_bipartite", boundary);
        r.passed = violations == 0 && boundary;
        Ok(r)
    })
}

/// Cycles avoiding each vertex against the certified upper end of
/// `(2 e^(2e+2) / n)(n/2e)^n`, over all triangle-free graphs on `n`
/// vertices.
pub fn verify_non_x_bound(n: usize) -> Result<VerificationReport> {
    if !(5..=EXHAUSTIVE_MAX).contains(&n) {
        return Err(Error::Budget(format!("avoiding-vertex check needs 5 <= n <= {EXHAUSTIVE_MAX}, got {n}")));
    }
    timed(|| {
        let bound = non_x_cycles_bound(n as u64)?;
        let graphs = all_graphs(n)?;
        let per_graph: Vec<(ExactCount, usize)> = graphs
            .par_iter()
            .map(|(_, g)| {
                (0..n)
                    .map(|x| (count_cycles_avoiding(g, x), x))
                    .fold((BigUint::zero(), 0), |acc, c| if c.0 > acc.0 { c } else { acc })
            })
            .collect();
        let mut best = 0;
        for (i, entry) in per_graph.iter().enumerate() {
            if entry.0 > per_graph[best].0 {
                best = i;
            }
        }
        let (max, x) = per_graph[best].clone();
        let mut r = VerificationReport::new(AVOIDING, format!("n={n}"));
        r.graphs_examined = graphs.len() as u64;
        r.extremal_value = Some(max.to_string());
        r.witness = Some(format!("{} x={x}", graphs[best].0));
        r.expected = Some(Expected::new(ratio_string(&bound.hi), "certified upper end of the bound"));
        r.passed = rational_from_biguint(&max) <= bound.hi;
        Ok(r)
    })
}

/// Bessel brackets, the normalized sequences, factorial bounds and the
/// lower/upper sandwich of the balanced count.
pub fn verify_analytic_suite() -> Result<VerificationReport> {
    timed(|| {
        let mut r = VerificationReport::new(ANALYTIC, "l<=200, n<=151");
        let mut all = true;
        let mut record = |r: &mut VerificationReport, key: &str, ok: bool| {
            r.detail(key, ok);
            if !ok {
                r.findings.push(format!("failed: {key}"));
            }
            all &= ok;
        };

        let two = BigRational::from_integer(2.into());
        let i0 = published_i0_of_2();
        let i1 = published_i1_of_2();
        for (name, order, bracket) in [("i0", BesselOrder::Zero, &i0), ("i1", BesselOrder::One, &i1)] {
            let partial = bessel_partial(order, &two, 25)?;
            let rem = partial.remainder_bound.clone().expect("x = 2 converges geometrically");
            r.detail(&format!("bessel_{name}_partial_sum_25"), format_decimal(&partial.sum, 12));
            record(&mut r, &format!("bessel_{name}_in_bracket"), bracket.contains(&partial.sum));
            record(&mut r, &format!("bessel_{name}_remainder_below_width"), rem < bracket.width());
        }

        let even: Vec<BigRational> = (6..=201).map(a_even).collect::<Result<_>>()?;
        let odd: Vec<BigRational> = (4..=201).map(a_odd).collect::<Result<_>>()?;
        record(&mut r, "a_even_nonincreasing_6_to_200", even.windows(2).all(|w| w[1] <= w[0]));
        record(&mut r, "a_odd_nonincreasing_4_to_200", odd.windows(2).all(|w| w[1] <= w[0]));
        let a71 = &even[71 - 6];
        let a70_odd = &odd[70 - 4];
        r.detail("a_even_71", format_decimal(a71, 10));
        r.detail("a_odd_70", format_decimal(a70_odd, 10));
        record(&mut r, "a_even_71_at_most_2.302786", *a71 <= decimal("2.302786"));
        record(&mut r, "a_odd_70_at_most_1.60067", *a70_odd <= decimal("1.60067"));
        record(&mut r, "a_even_71_above_i0_lower", *a71 > i0.lo);
        record(&mut r, "a_odd_70_above_i1_lower", *a70_odd > i1.lo);

        let robbins = (1..=100u64).all(|n| {
            robbins_bounds(n).expect("n >= 1").contains(&rational_from_biguint(&factorial(n)))
        });
        record(&mut r, "factorial_bounds_hold_n_1_to_100", robbins);

        for n in [140u64, 141, 150, 151] {
            let total = rational_from_biguint(&balanced_total(n)?);
            let ok = balanced_lower_bound(n)? <= total && total <= balanced_upper_bound_141(n)?;
            record(&mut r, &format!("sandwich_n{n}"), ok);
        }

        r.witness = Some("a_even(71), a_odd(70)".into());
        r.extremal_value = Some(format_decimal(a71, 10));
        r.expected = Some(Expected::new("2.302786", "stated computed constant"));
        r.passed = all;
        Ok(r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjecture_small_orders() {
        let r = verify_conjecture(4).unwrap();
        assert!(r.passed);
        assert_eq!(r.extremal_value.as_deref(), Some("1"));
        let r = verify_conjecture(6).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.extremal_value.as_deref(), Some("15"));
        assert!(r.is_well_formed());
        assert!(matches!(verify_conjecture(14), Err(Error::Budget(_))));
        assert!(verify_conjecture(3).is_err());
    }

    #[test]
    fn paths_between_two_vertices() {
        let r = verify_lemma_paths6().unwrap();
        assert!(r.passed);
        assert_eq!(r.extremal_value.as_deref(), Some("9"));
        let mut c5_plus = Graph::cycle(5).unwrap();
        c5_plus = c5_plus.add_vertex(0).unwrap();
        assert_eq!(count_paths_between(&c5_plus, 0, 1).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn hamiltonian_small() {
        let r = verify_ham_bound(4).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["max_count_k4"], "1");
        let r = verify_ham_bound(6).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["max_count_k6"], "6");
        assert!(verify_ham_bound(10).is_err());
    }

    #[test]
    fn edge_bounds() {
        let r = verify_edge_cycle_bounds(8, EdgeCheckMode::Exhaustive).unwrap();
        assert!(r.passed);
        // K_{4,4}: 9 + 36 + 36 cycles through any edge
        let k44 = Graph::complete_bipartite(4, 4).unwrap();
        assert_eq!(count_cycles_through_edge(&k44, 0, 4).unwrap().total(), BigUint::from(81u32));
        let r7 = verify_edge_cycle_bounds(7, EdgeCheckMode::Exhaustive).unwrap();
        assert!(r7.details["orientations_excluded_by_degree"] != "0");
        assert!(verify_edge_cycle_bounds(10, EdgeCheckMode::Exhaustive).is_err());
        assert!(verify_edge_cycle_bounds(14, EdgeCheckMode::sampled_default()).is_err());
        let s = verify_edge_cycle_bounds(10, EdgeCheckMode::Sampled { samples: 20, seed: 1 }).unwrap();
        assert_eq!(s, verify_edge_cycle_bounds(10, EdgeCheckMode::Sampled { samples: 20, seed: 1 }).unwrap().clone_with_runtime(s.runtime_ms));
    }

    impl VerificationReport {
        fn clone_with_runtime(&self, ms: u64) -> Self {
            VerificationReport { runtime_ms: ms, ..self.clone() }
        }
    }

    #[test]
    fn sample_includes_balanced() {
        let s = sample_maximal(9, 10, 7).unwrap();
        let k = canonical_key(&balanced(9));
        assert!(s.iter().any(|(key, _)| *key == k));
        assert!(s.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn andrasfai_small() {
        let r = verify_andrasfai(7).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["c5_boundary_non_bipartite"], "true");
    }
}
