//! Automorphism machinery cross-checked against full-permutation filters,
//! colour-renaming invariance, refinement monotonicity, and canonical-form
//! properties.

mod common;

use distchrom::graph::{petersen, write_graph6_string, Graph};
use distchrom::symmetry::{
    automorphisms, canonical_form, fixed_vertices, is_distinguishing, is_proper, Colouring,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn group_orders_match_naive_filter_exhaustively() {
    for g in common::connected_upto(6) {
        assert_eq!(
            automorphisms(&g, None).unwrap().order,
            common::naive_aut_count(&g, None),
            "uncoloured {}",
            write_graph6_string(&g).unwrap()
        );
    }
}

#[test]
fn group_orders_match_naive_filter_on_seven_vertex_graphs() {
    for g in distchrom::corpus::enumerate_connected(7).unwrap() {
        assert_eq!(
            automorphisms(&g, None).unwrap().order,
            common::naive_aut_count(&g, None)
        );
    }
}

#[test]
fn coloured_group_orders_match_naive_filter() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in common::connected_upto(5) {
        let c = common::random_colouring(&mut rng, g.n(), 3);
        assert_eq!(
            automorphisms(&g, Some(&c)).unwrap().order,
            common::naive_aut_count(&g, Some(&c))
        );
    }
}

/// Renaming colours by any bijection leaves the group untouched.
#[test]
fn colour_renaming_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for g in [petersen(), distchrom::graph::cycle(6), distchrom::graph::star(4)] {
        for _ in 0..10 {
            let c = common::random_colouring(&mut rng, g.n(), 4);
            // A random bijection on 1..=8.
            let mut image: Vec<u32> = (1..=8).collect();
            image.shuffle(&mut rng);
            let renamed = c.renamed(|col| image[(col - 1) as usize]).unwrap();
            let a = automorphisms(&g, Some(&c)).unwrap();
            let b = automorphisms(&g, Some(&renamed)).unwrap();
            assert_eq!(a.order, b.order);
            assert_eq!(a.fixed, b.fixed);
            assert_eq!(
                is_distinguishing(&g, &c).unwrap(),
                is_distinguishing(&g, &renamed).unwrap()
            );
        }
    }
}

/// Splitting a colour class never shrinks the fixed set.
#[test]
fn fixed_set_is_monotone_under_refinement() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for g in common::connected_upto(5) {
        let c = common::random_colouring(&mut rng, g.n(), 2);
        let fixed_before = fixed_vertices(&g, &c).unwrap();
        // Refine: pick one vertex and give it a brand new colour.
        for v in 0..g.n() {
            let mut colours = c.as_slice().to_vec();
            colours[v] = 99;
            let refined = Colouring::new(colours).unwrap();
            let fixed_after = fixed_vertices(&g, &refined).unwrap();
            assert!(
                fixed_before.is_subset_of(fixed_after),
                "refinement shrank the fixed set on {}",
                write_graph6_string(&g).unwrap()
            );
        }
    }
}

#[test]
fn distinguishing_implies_proper_on_random_colourings() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for g in common::connected_upto(5) {
        for _ in 0..5 {
            let c = common::random_colouring(&mut rng, g.n(), 3);
            if is_distinguishing(&g, &c).unwrap() {
                assert!(is_proper(&g, &c).unwrap());
            }
        }
    }
}

#[test]
fn canonical_form_invariant_under_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for g in [
        petersen(),
        distchrom::graph::cocktail_party(3),
        distchrom::graph::symmetric_tree(3, 2),
        distchrom::graph::fig_lk13(),
    ] {
        let base = canonical_form(&g).unwrap();
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabelled(&perm)).unwrap(), base);
        }
    }
}

/// Distinct canonical forms over all 2^15 labelled graphs on 6 vertices,
/// restricted to connected ones, reproduce the known count of isomorphism
/// classes.
#[test]
fn canonical_forms_count_connected_six_vertex_classes() {
    let mut forms = std::collections::HashSet::new();
    let pairs: Vec<(usize, usize)> = (0..6)
        .flat_map(|u| ((u + 1)..6).map(move |v| (u, v)))
        .collect();
    assert_eq!(pairs.len(), 15);
    for mask in 0u32..(1 << 15) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        if g.is_connected() {
            forms.insert(canonical_form(&g).unwrap());
        }
    }
    assert_eq!(forms.len(), 112);
}

/// The optimized canonical form agrees with the all-permutations minimum.
#[test]
fn canonical_form_matches_naive_minimum() {
    for g in common::connected_upto(5) {
        assert_eq!(
            String::from_utf8(canonical_form(&g).unwrap()).unwrap(),
            common::naive_canonical(&g)
        );
    }
}

#[test]
fn report_lists_identity_and_fixed_set() {
    let g = distchrom::graph::path(3);
    let c = Colouring::new(vec![1, 2, 1]).unwrap();
    let report = automorphisms(&g, Some(&c)).unwrap();
    assert_eq!(report.order, 2);
    assert!(report.all.iter().any(|p| p.is_identity()));
    assert_eq!(report.fixed.to_vec(), vec![1]);
}

/// Stress the canonical search against the all-permutations minimum at the
/// sizes the enumerator actually relies on.
#[test]
fn canonical_form_matches_naive_minimum_stress() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..60 {
        let g = common::random_graph(&mut rng, 7, 0.4);
        assert_eq!(
            String::from_utf8(canonical_form(&g).unwrap()).unwrap(),
            common::naive_canonical(&g)
        );
    }
    for _ in 0..10 {
        let p = rand::Rng::random_range(&mut rng, 0.2..0.8);
        let g = common::random_graph(&mut rng, 8, p);
        assert_eq!(
            String::from_utf8(canonical_form(&g).unwrap()).unwrap(),
            common::naive_canonical(&g)
        );
    }
}

/// Canonical forms separate non-isomorphic graphs: across one enumerated
/// order, all pairwise distinct (the enumerator already relies on this; the
/// check here goes through relabelled copies).
#[test]
fn canonical_forms_separate_and_identify() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let graphs = distchrom::corpus::enumerate_connected(6).unwrap();
    let forms: Vec<Vec<u8>> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
    for (i, g) in graphs.iter().enumerate() {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let relabelled = g.relabelled(&perm);
        let f = canonical_form(&relabelled).unwrap();
        for (j, other) in forms.iter().enumerate() {
            assert_eq!(i == j, f == *other);
        }
    }
}
