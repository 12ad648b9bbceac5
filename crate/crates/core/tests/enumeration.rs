use std::collections::{BTreeSet, HashSet};

use interval_edge::enumerator::{
    canonical_code, corollary2_builtin_inputs, enumerate, tally, Check,
};
use interval_edge::multigraph::families::*;
use interval_edge::{EnumerationBounds, Harness};

#[test]
fn connected_simple_census_by_vertex_count() {
    // Connected simple graphs with at least one edge: 1, 2, 6 on 2, 3, 4 vertices.
    let b = EnumerationBounds::new(4, 6, 1).connected().simple();
    let mut per_n = [0usize; 5];
    for g in enumerate(&b).unwrap() {
        per_n[g.vertex_count()] += 1;
    }
    assert_eq!(per_n, [0, 0, 1, 2, 6]);
}

// Counts cross-checked against an independent networkx isomorphism census.
#[test]
fn multigraph_census_sizes() {
    let count = |b: EnumerationBounds| enumerate(&b).unwrap().count();
    assert_eq!(count(EnumerationBounds::new(4, 7, 2).connected()), 44);
    assert_eq!(count(EnumerationBounds::new(4, 7, 2).eulerian()), 10);
    assert_eq!(count(EnumerationBounds::new(5, 8, 1).connected()), 28);
    assert_eq!(count(EnumerationBounds::new(5, 8, 1).eulerian()), 5);
    assert_eq!(count(EnumerationBounds::new(4, 5, 2).connected()), 23);
    assert_eq!(count(EnumerationBounds::new(7, 6, 2).connected()), 123);
}

#[test]
fn dedup_codes_are_distinct_and_match_labeled_collapse() {
    let b = EnumerationBounds::new(4, 5, 2).connected();
    let dedup: Vec<Vec<u8>> = enumerate(&b)
        .unwrap()
        .map(|g| canonical_code(&g).unwrap())
        .collect();
    let distinct: HashSet<_> = dedup.iter().cloned().collect();
    assert_eq!(distinct.len(), dedup.len());

    let labeled: BTreeSet<Vec<u8>> = enumerate(&b.clone().labeled())
        .unwrap()
        .map(|g| canonical_code(&g).unwrap())
        .collect();
    assert_eq!(labeled, dedup.into_iter().collect::<BTreeSet<_>>());
}

#[test]
fn filters_hold_on_every_yielded_graph() {
    let b = EnumerationBounds::new(5, 6, 2).eulerian().labeled();
    for g in enumerate(&b).unwrap() {
        assert!(g.is_eulerian());
        assert!(g.max_multiplicity() <= 2 && g.edge_count() <= 6);
    }
    let b = EnumerationBounds::new(5, 8, 2).connected().regular();
    for g in enumerate(&b).unwrap() {
        assert!(g.is_regular() && g.is_connected());
    }
}

#[test]
fn theorem2_tallies_agree_with_and_without_precheck() {
    let b = EnumerationBounds::new(4, 7, 2);
    let searched = Harness::default().verify_theorem2(&b).unwrap();
    let prechecked = Harness {
        bypass_precheck: false,
        ..Default::default()
    }
    .verify_theorem2(&b)
    .unwrap();
    assert_eq!(
        searched.tally(tally::THEOREM2),
        prechecked.tally(tally::THEOREM2)
    );
    assert!(searched.tally(tally::THEOREM2).checked > 0);
    assert!(searched.is_clean() && prechecked.is_clean());
}

#[test]
fn theorem2_single_graphs() {
    let h = Harness::default();
    for g in [cycle(3), cycle(5)] {
        let r = h.check_graph(&g, &[Check::Theorem2]);
        let t = r.tally(tally::THEOREM2);
        assert_eq!((t.checked, t.passed), (1, 1));
    }
}

#[test]
fn corollary_examples() {
    let h = Harness::default();
    for g in [cycle(4), cycle(6), dipole(2)] {
        let r = h.check_graph(&g, &[Check::Corollary1, Check::Corollary3]);
        assert!(r.is_clean(), "{g:?}");
        assert_eq!(r.tally(tally::COROLLARY1).passed, 1);
        assert_eq!(r.tally(tally::COROLLARY3).passed, g.edge_count() as u64);
    }
    for g in [path(2), path(4), star(3)] {
        let r = h.check_graph(&g, &[Check::Corollary4]);
        let t = r.tally(tally::COROLLARY4);
        assert_eq!((t.checked, t.passed), (1, 1), "{g:?}");
    }
}

#[test]
fn corollary2_builtins() {
    let r = Harness::default().verify_corollary2(&corollary2_builtin_inputs());
    assert!(r.is_clean());
    assert_eq!(r.tally(tally::COROLLARY2).passed, 3);
    assert_eq!(r.tally(tally::THEOREM3).passed, 3);
    let indices: Vec<&str> = r
        .notes
        .iter()
        .map(|n| n.rsplit(' ').next().unwrap())
        .collect();
    assert_eq!(indices, ["2", "4", "2"]);
}

#[test]
fn corollary2_skips_inputs_outside_its_hypotheses() {
    // odd edge count, not simple, not regular, not colorable
    let r = Harness::default().verify_corollary2(&[cycle(5), dipole(2), path(3), complete(5)]);
    assert_eq!(r.tally(tally::COROLLARY2).skipped, 4);
    assert_eq!(r.tally(tally::COROLLARY2).checked, 0);
}

#[test]
fn report_is_independent_of_worker_count() {
    let b = EnumerationBounds::new(4, 6, 2);
    let one = Harness::default().verify(&b, &Check::ALL).unwrap();
    let four = Harness {
        jobs: 4,
        ..Default::default()
    }
    .verify(&b, &Check::ALL)
    .unwrap();
    assert_eq!(one, four);
}

#[test]
fn report_invariants() {
    let r = Harness::default()
        .verify(&EnumerationBounds::new(4, 6, 2), &Check::ALL)
        .unwrap();
    let short = r.tallies.values().any(|t| t.passed < t.checked);
    assert_eq!(short, !r.counterexamples.is_empty());
    assert!(r.tallies.values().all(|t| t.passed <= t.checked));
}
