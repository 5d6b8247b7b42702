use hyperacyclic::bachman::build_bachman;
use hyperacyclic::generators::{generate, GenClass, GenSpec};
use hyperacyclic::hgfile::{parse_hg, write_hg};
use hyperacyclic::oracle::{
    acyclic_gyo, beta_by_definition, distance_hereditary_naive, incidence_graph, interval_by_permutations,
    subset_graph_naive, union_join_oracle,
};
use hyperacyclic::orderings::{doubly_lexical_order, interval_order, is_doubly_lexical, pruning_sequences};
use hyperacyclic::recognition::classify;
use hyperacyclic::sperner::{reduce_family_to_hypertree, SetFamily};
use hyperacyclic::subset::subset_graph_baseline;
use hyperacyclic::unionjoin::union_join_via_subset;
use hyperacyclic::{build_join_tree, canonical_join_tree, verify_join_tree, Hypergraph};
use proptest::prelude::*;

/// Arbitrary small hypergraph: `m` non-empty subsets of `0..n`, with
/// uncovered vertices dropped.
fn small(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1 << n), 1..=max_m).prop_map(move |masks| {
            let covered = masks.iter().fold(0, |a, &b| a | b);
            let ids: Vec<usize> = (0..n).filter(|&v| covered >> v & 1 == 1).collect();
            let edges = masks
                .iter()
                .map(|&s| ids.iter().enumerate().filter(|&(_, &v)| s >> v & 1 == 1).map(|(i, _)| i).collect())
                .collect();
            Hypergraph::new(ids.len(), edges).unwrap()
        })
    })
}

fn generated() -> impl Strategy<Value = Hypergraph> {
    (prop::sample::select(GenClass::ALL.to_vec()), 1..30usize, 1..30usize, any::<u64>(), 0.0..1.0f64)
        .prop_map(|(class, n, m, seed, density)| generate(&GenSpec::new(class, n, m, seed, density)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classification_matches_definitions(h in small(6, 5)) {
        let c = classify(&h);
        prop_assert!(c.is_consistent());
        prop_assert_eq!(c.is_alpha, acyclic_gyo(&h));
        prop_assert_eq!(c.is_hypertree, acyclic_gyo(&h.dual()));
        prop_assert_eq!(c.is_beta, beta_by_definition(&h).unwrap());
        prop_assert_eq!(c.is_gamma, distance_hereditary_naive(&incidence_graph(&h)).unwrap());
        prop_assert_eq!(c.is_interval, interval_by_permutations(&h).unwrap());
    }

    #[test]
    fn hierarchy_holds_on_generated(h in generated()) {
        prop_assert!(classify(&h).is_consistent());
    }

    #[test]
    fn join_trees_are_valid(h in generated()) {
        if let Some(t) = build_join_tree(&h) {
            prop_assert!(verify_join_tree(&h, &t));
            let (ct, seps) = canonical_join_tree(&h).unwrap();
            prop_assert!(verify_join_tree(&h, &ct.tree));
            prop_assert_eq!(seps.len() + h.components().count, h.m());
        } else {
            prop_assert!(!acyclic_gyo(&h));
        }
    }

    #[test]
    fn doubly_lexical_order_is_valid(h in generated()) {
        prop_assert!(is_doubly_lexical(&h, &doubly_lexical_order(&h)));
    }

    #[test]
    fn pruning_sequences_replay(h in generated()) {
        if let Some(seqs) = pruning_sequences(&h) {
            prop_assert_eq!(seqs.len(), h.components().count);
            if seqs.len() == 1 {
                prop_assert!(seqs[0].replays_to(&h));
            }
        }
    }

    #[test]
    fn interval_orders_are_paths(h in generated()) {
        if let Some(ord) = interval_order(&h) {
            let pos: Vec<usize> = {
                let mut p = vec![0; h.m()];
                for (i, &e) in ord.edge_order.iter().enumerate() {
                    p[e] = i;
                }
                p
            };
            for v in 0..h.n() {
                let mut at: Vec<usize> = h.incidence(v).iter().map(|&e| pos[e]).collect();
                at.sort_unstable();
                prop_assert_eq!(at[at.len() - 1] - at[0] + 1, at.len());
            }
        }
    }

    #[test]
    fn baseline_subset_graph_is_exact(h in small(8, 10)) {
        prop_assert_eq!(subset_graph_baseline(&h), subset_graph_naive(&h));
    }

    #[test]
    fn union_join_generic_on_small_acyclic(h in small(7, 7)) {
        if acyclic_gyo(&h) {
            let got = union_join_via_subset(&h, |s| Ok(subset_graph_naive(s))).unwrap();
            prop_assert_eq!(got, union_join_oracle(&h).unwrap());
        }
    }

    #[test]
    fn bachman_reach_recovers_hyperedges(h in generated()) {
        if let Ok(d) = build_bachman(&h) {
            for e in 0..h.m() {
                prop_assert_eq!(d.reach(d.phi[e]), h.edge(e).to_vec());
            }
        }
    }

    #[test]
    fn hypertree_reduction_is_hypertree(h in small(6, 6)) {
        let g = reduce_family_to_hypertree(&SetFamily::from_hypergraph(&h)).unwrap();
        prop_assert!(classify(&g).is_hypertree);
    }

    #[test]
    fn text_round_trip(h in generated()) {
        let back = parse_hg(&write_hg(&h)).unwrap();
        let named = |g: &Hypergraph| {
            (0..g.m()).map(|e| {
                let mut names = g.edge_names(e);
                names.sort_unstable();
                names.join(" ")
            }).collect::<Vec<_>>()
        };
        prop_assert_eq!(named(&back), named(&h));
    }

    #[test]
    fn dual_is_an_involution(h in generated()) {
        let dd = h.dual().dual();
        prop_assert_eq!(dd.edges(), h.edges());
        prop_assert_eq!(h.two_section(), h.dual().line_graph());
    }
}
