use std::collections::HashSet;

use cyclemax::enumerate::{MAXIMAL_COUNTS, TRIANGLE_FREE_COUNTS};
use cyclemax::formula::{balanced_total, formula_spectrum};
use cyclemax::verify::verify_non_x_bound;
use cyclemax::{canonical_key, count_cycles, enumerate, Graph, GraphClassSpec};

#[test]
fn formula_matches_direct_count() {
    for a in 1..=5 {
        for b in a..=5 {
            let direct = count_cycles(&Graph::complete_bipartite(a, b).unwrap());
            assert_eq!(formula_spectrum(a, b).unwrap().spectrum, direct, "K_{a},{b}");
        }
    }
}

#[test]
fn balanced_graph_dominates_all_triangle_free_graphs() {
    for n in 4..=10 {
        let best = balanced_total(n as u64).unwrap();
        let k = canonical_key(&Graph::balanced_complete_bipartite(n).unwrap());
        for g in enumerate(&GraphClassSpec::all(n)).unwrap() {
            let total = count_cycles(&g).total();
            if canonical_key(&g) == k {
                assert_eq!(total, best);
            } else {
                assert!(total < best, "n = {n}");
            }
        }
    }
}

#[test]
fn counts_match_reference_tables() {
    for n in 1..=10 {
        let all = enumerate(&GraphClassSpec::all(n)).unwrap();
        assert_eq!(all.len(), TRIANGLE_FREE_COUNTS[n], "all, n = {n}");
        let keys: HashSet<_> = all.iter().map(canonical_key).collect();
        assert_eq!(keys.len(), all.len());
        assert_eq!(enumerate(&GraphClassSpec::maximal(n)).unwrap().len(), MAXIMAL_COUNTS[n], "maximal, n = {n}");
    }
    assert_eq!(enumerate(&GraphClassSpec::maximal(11)).unwrap().len(), MAXIMAL_COUNTS[11]);
}

#[test]
fn avoiding_vertex_bound_at_nine() {
    let r = verify_non_x_bound(9).unwrap();
    assert!(r.passed, "{r:?}");
}
