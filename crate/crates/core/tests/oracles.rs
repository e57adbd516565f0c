mod common;

use std::collections::HashMap;

use common::*;
use kp3::enumerate::{count_graphs, enumerate_free_graphs};
use kp3::lemmas::{best_leftover_decomposition, check_lemma_edgeless, check_lemma_one_edge};
use kp3::packing::{contains_k_p3, greedy_packing, max_p3_packing, verify_packing};
use kp3::{canonical_form, Graph};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn counts_match_labelled_scan() {
    for n in 1..=6 {
        assert_eq!(count_graphs(n).unwrap(), labelled_class_count(n), "n = {n}");
    }
}

#[test]
fn canonical_form_separates_exactly_the_labelled_classes() {
    for n in 1..=5 {
        let keys = LabelledKeys::new(n);
        let mut by_key: HashMap<u32, kp3::CanonicalForm> = HashMap::new();
        let mut by_form: HashMap<kp3::CanonicalForm, u32> = HashMap::new();
        for mask in 0..1u32 << keys.pair_count() {
            let key = keys.key(mask);
            let form = canonical_form(&keys.graph(mask));
            assert_eq!(*by_key.entry(key).or_insert_with(|| form.clone()), form);
            assert_eq!(*by_form.entry(form).or_insert(key), key);
        }
    }
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic_by_brute_force() {
    for n in 1..=6 {
        let keys = LabelledKeys::new(n);
        let graphs = all_graphs(n);
        let mut seen = std::collections::HashSet::new();
        for g in &graphs {
            assert!(seen.insert(keys.key(keys.mask(g))), "duplicate class at n = {n}");
        }
    }
}

#[test]
fn solver_matches_exhaustion_on_small_orders() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let best = max_p3_packing(&g);
            assert_eq!(best.size, brute_max_packing(&g), "{g:?}");
            assert!(verify_packing(&g, &best.witness).unwrap());
        }
    }
}

#[test]
fn solver_matches_exhaustion_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(7);
    for i in 0..400 {
        let n = 6 + i % 13;
        let p = [0.1, 0.2, 0.35, 0.6][i % 4];
        let g = random_graph(&mut rng, n, p);
        let best = max_p3_packing(&g);
        assert_eq!(best.size, brute_max_packing(&g), "{g:?}");
        assert!(verify_packing(&g, &best.witness).unwrap());
        assert!(greedy_packing(&g).len() <= best.size);
        for k in 0..=best.size + 1 {
            let c = contains_k_p3(&g, k);
            assert_eq!(c.found, k <= best.size);
            if let Some(w) = c.witness {
                assert_eq!(w.len(), k);
                assert!(verify_packing(&g, &w).unwrap());
            }
        }
    }
}

#[test]
fn hub_and_clique_constructions_pack_exactly_k_minus_one() {
    for k in 1..=5usize {
        for m in 0..=12usize {
            let hub = Graph::complete(k - 1)
                .unwrap()
                .join(&Graph::matching(m).unwrap())
                .unwrap();
            let clique = Graph::complete(3 * k - 1)
                .unwrap()
                .disjoint_union(&Graph::matching(m).unwrap())
                .unwrap();
            let hub_max = max_p3_packing(&hub).size;
            assert_eq!(hub_max, brute_max_packing(&hub), "hub k={k} m={m}");
            if m >= 2 * (k - 1) {
                assert_eq!(hub_max, k - 1, "hub k={k} m={m}");
            }
            let clique_max = max_p3_packing(&clique).size;
            assert_eq!(clique_max, brute_max_packing(&clique), "clique k={k} m={m}");
            assert_eq!(clique_max, k - 1, "clique k={k} m={m}");
        }
    }
}

#[test]
fn best_decomposition_keeps_the_most_edges() {
    for (n, k) in [(5, 2), (6, 2), (7, 2), (6, 3), (7, 3), (8, 3)] {
        for e in enumerate_free_graphs(n, k).unwrap() {
            let g = e.graph;
            let expected = brute_best_leftover_edges(&g, k);
            let found = best_leftover_decomposition(&g, k).unwrap();
            assert_eq!(found.as_ref().map(|w| w.leftover_edge_count), expected, "{g:?}");
            if let Some(w) = found {
                assert_eq!(w.paths.len(), k - 1);
                let mut all: Vec<usize> = w.paths.iter().flat_map(|t| t.vertices()).collect();
                all.extend(w.leftover_edges.iter().flat_map(|&(u, v)| [u, v]));
                all.extend(&w.isolated);
                all.sort_unstable();
                assert_eq!(all, (0..n).collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn checkers_agree_with_literal_statements() {
    let mut edgeless = 0;
    let mut one_edge = 0;
    for (n, k) in [(6, 2), (7, 2), (8, 2), (9, 3)] {
        for e in enumerate_free_graphs(n, k).unwrap() {
            let g = e.graph;
            let Some(w) = best_leftover_decomposition(&g, k).unwrap() else {
                continue;
            };
            match (w.leftover_edge_count, w.isolated.len()) {
                (0, t) if t >= 3 => {
                    let report = check_lemma_edgeless(&g, k, &w).unwrap();
                    assert_eq!(report.holds, edgeless_statement(&g, &w), "{g:?}");
                    edgeless += 1;
                }
                (1, t) if t >= 2 => {
                    let report = check_lemma_one_edge(&g, k, &w).unwrap();
                    assert_eq!(report.holds, one_edge_statement(&g, &w), "{g:?}");
                    one_edge += 1;
                }
                _ => {}
            }
        }
    }
    assert!(edgeless > 0 && one_edge > 0);
}
