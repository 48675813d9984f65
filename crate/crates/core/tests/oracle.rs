//! Engine results against independent slow computations.

mod common;

use common::{brute_force_mu, brute_force_poly, random_graph, random_permutation, random_tree, rng};
use indroot::enumerate::{enumerate_forests, enumerate_graphs, enumerate_trees};
use indroot::mis::count_maximal_independent_sets;
use indroot::{
    canonical_form, from_graph6, independence_polynomial, independence_polynomial_tree, mu, to_graph6, Graph,
};
use rand::Rng;

#[test]
fn every_graph_up_to_six_matches_subset_enumeration() {
    let mut total = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(independence_polynomial(&g), brute_force_poly(&g), "{}", to_graph6(&g));
            total += 1;
        }
    }
    assert_eq!(total, 1 + 2 + 4 + 11 + 34 + 156);
}

#[test]
fn random_graphs_up_to_sixteen_match_subset_enumeration() {
    let mut r = rng(0x1d_9017);
    for _ in 0..1000 {
        let n = r.gen_range(1..=16);
        let p = r.gen_range(0.05..0.95);
        let g = random_graph(&mut r, n, p);
        assert_eq!(independence_polynomial(&g), brute_force_poly(&g), "{}", to_graph6(&g));
    }
}

#[test]
fn tree_dp_matches_engine_on_all_trees_to_fourteen() {
    for n in 1..=14 {
        for t in enumerate_trees(n).unwrap() {
            assert_eq!(independence_polynomial_tree(&t).unwrap(), independence_polynomial(&t), "{}", to_graph6(&t));
        }
    }
}

#[test]
fn tree_dp_matches_engine_on_forests_and_random_trees() {
    for n in 1..=10 {
        for f in enumerate_forests(n).unwrap() {
            assert_eq!(independence_polynomial_tree(&f).unwrap(), independence_polynomial(&f));
        }
    }
    let mut r = rng(7);
    for _ in 0..200 {
        let n = r.gen_range(1..=40);
        let t = random_tree(&mut r, n);
        assert!(t.is_tree());
        assert_eq!(independence_polynomial_tree(&t).unwrap(), independence_polynomial(&t));
    }
}

#[test]
fn maximal_set_counts_match_subset_enumeration() {
    let mut r = rng(11);
    for _ in 0..300 {
        let n = r.gen_range(1..=12);
        let p = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        let want = brute_force_mu(&g);
        assert_eq!(count_maximal_independent_sets(&g), want);
        assert_eq!(mu(&g), want);
    }
}

#[test]
fn class_counts_match_known_sequences() {
    let graphs = [1, 2, 4, 11, 34, 156, 1044, 12346];
    for (i, &c) in graphs.iter().enumerate() {
        assert_eq!(enumerate_graphs(i + 1).unwrap().len(), c, "graphs n={}", i + 1);
    }
    let trees = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629];
    for (i, &c) in trees.iter().enumerate() {
        assert_eq!(enumerate_trees(i + 1).unwrap().len(), c, "trees n={}", i + 1);
    }
    let forests = [1, 2, 3, 6, 10, 20, 37, 76, 153, 329, 710, 1601, 3658, 8599];
    for (i, &c) in forests.iter().enumerate() {
        assert_eq!(enumerate_forests(i + 1).unwrap().len(), c, "forests n={}", i + 1);
    }
}

#[test]
fn enumerated_classes_are_pairwise_non_isomorphic() {
    for n in 1..=7 {
        let mut forms: Vec<_> = enumerate_graphs(n).unwrap().iter().map(canonical_form).collect();
        let before = forms.len();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), before, "graphs n={n}");
    }
    for n in 1..=12 {
        let trees = enumerate_trees(n).unwrap();
        assert!(trees.iter().all(|t| t.is_tree() && t.edge_count() == n - 1));
        let mut forms: Vec<_> = trees.iter().map(canonical_form).collect();
        let before = forms.len();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), before, "trees n={n}");
    }
}

#[test]
fn canonical_form_ignores_labels() {
    let mut r = rng(3);
    for _ in 0..300 {
        let n = r.gen_range(1..=12);
        let p = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        let perm = random_permutation(&mut r, n);
        let h = g.relabel(&perm);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_eq!(independence_polynomial(&g), independence_polynomial(&h));
    }
}

#[test]
fn graph6_round_trip() {
    let mut r = rng(5);
    for _ in 0..300 {
        let n = r.gen_range(0..=64);
        let g = random_graph(&mut r, n, 0.3);
        let s = to_graph6(&g);
        assert_eq!(from_graph6(&s).unwrap(), g, "{s}");
    }
    assert_eq!(from_graph6("BW").unwrap(), Graph::path(3).unwrap().relabel(&[0, 2, 1]));
}
