//! Exhaustive sweeps over every isomorphism class of small graphs. Slower
//! than the regular suite, so they are ignored by default:
//!
//! ```sh
//! cargo test -p mdcanon --test exhaustive -- --ignored
//! ```

mod common;

use common::{all_graphs_on, all_permutations};
use mdcanon::canon::{canonize, CanonError};
use mdcanon::realizer::find_realizers;
use mdcanon::{is_cograph, oracle, Graph};

#[test]
#[ignore = "minutes-scale exhaustive sweep"]
fn recognition_matches_oracle_on_all_classes_up_to_7() {
    for n in 1..=7 {
        for g in all_graphs_on(n) {
            assert_eq!(is_cograph(&g), oracle::brute_cograph(&g), "{g:?}");
        }
    }
}

#[test]
#[ignore = "minutes-scale exhaustive sweep"]
fn decomposition_matches_recursive_route_on_all_classes_up_to_7() {
    for n in 1..=7 {
        for g in all_graphs_on(n) {
            for v in g.vertices() {
                let chain = oracle::brute_decomposition_chain(&g, v);
                for (i, expected) in chain.iter().enumerate() {
                    assert_eq!(&mdcanon::decomposition_set(&g, i, v), expected, "{g:?}");
                }
            }
        }
    }
}

#[test]
#[ignore = "minutes-scale exhaustive sweep"]
fn realizer_sets_match_exhaustive_search_on_all_classes_up_to_6() {
    for n in 1..=6 {
        for g in all_graphs_on(n) {
            let size = g.vertex_count();
            let prime = oracle::brute_modules(&g)
                .iter()
                .all(|m| m.len() == 1 || m.len() == size);
            if !prime {
                continue;
            }
            let mut found = find_realizers(&g);
            let mut expected = oracle::brute_realizer_search(&g);
            found.sort_by(|a, b| (&a.order1, &a.order2).cmp(&(&b.order1, &b.order2)));
            expected.sort_by(|a, b| (&a.order1, &a.order2).cmp(&(&b.order1, &b.order2)));
            assert_eq!(found, expected, "{g:?}");
        }
    }
}

/// For every pair of supported 6-vertex classes, canon equality must decide
/// isomorphism; different classes (by construction) must never collide.
#[test]
#[ignore = "minutes-scale exhaustive sweep"]
fn canons_separate_all_supported_classes_on_6_vertices() {
    let mut canons = Vec::new();
    for g in all_graphs_on(6) {
        match canonize(&g) {
            Ok(canon) => canons.push((g, canon)),
            Err(CanonError::UnsupportedClass(_)) => continue,
            Err(other) => panic!("unexpected error {other}"),
        }
    }
    assert!(canons.len() > 100, "most 6-vertex classes are supported");
    for (i, (g1, c1)) in canons.iter().enumerate() {
        for (g2, c2) in &canons[i + 1..] {
            assert_ne!(
                c1.representation(),
                c2.representation(),
                "distinct classes collided: {g1:?} vs {g2:?}"
            );
        }
    }
    // and within a class, every relabeling maps to the same canon
    for (g, canon) in canons.iter().take(40) {
        for perm in all_permutations(6).into_iter().step_by(7) {
            let relabeled = g.relabel(&perm);
            assert_eq!(
                canonize(&relabeled).unwrap().representation(),
                canon.representation()
            );
        }
    }
}

/// The canonizer and the cotree canonizer each stay within their own
/// encoding, but both must decide the same isomorphism relation.
#[test]
#[ignore = "minutes-scale exhaustive sweep"]
fn cograph_pipelines_decide_the_same_relation_on_6_vertices() {
    let cographs: Vec<Graph> = all_graphs_on(6).into_iter().filter(is_cograph).collect();
    let via_tree: Vec<_> = cographs
        .iter()
        .map(|g| {
            mdcanon::canonize_cograph(g)
                .unwrap()
                .representation()
                .clone()
        })
        .collect();
    let via_decomposition: Vec<_> = cographs
        .iter()
        .map(|g| canonize(g).unwrap().representation().clone())
        .collect();
    for i in 0..cographs.len() {
        for j in 0..cographs.len() {
            assert_eq!(
                via_tree[i] == via_tree[j],
                via_decomposition[i] == via_decomposition[j],
                "pipelines disagree on classes {i}, {j}"
            );
        }
    }
}
