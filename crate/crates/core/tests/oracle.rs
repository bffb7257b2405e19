//! Library results against the independent brute-force oracle.

mod common;

use common::{mask_of, Oracle};
use mutvis_core::catalog::{medium_graphs, small_graphs};
use mutvis_core::enumeration::{
    dual_spectrum, dual_spectrum_auto, lemma_assisted_dual_search, maximal_visibility_sets,
    total_number_via_bypass, visibility_number, visibility_polynomial, visibility_sets,
};
use mutvis_core::visibility::{is_general_position_set, is_total_visibility_set_fast, is_visibility_set};
use mutvis_core::{construct, EnumerationLimits, Family, Graph, Provenance, Variant, VertexSet};

fn graph(f: Family) -> Graph {
    construct(&f).unwrap().graph
}

fn coeffs(g: &Graph, v: Variant) -> Vec<u64> {
    visibility_polynomial(g, v, &EnumerationLimits::default())
        .unwrap()
        .to_u64s()
        .unwrap()
}

#[test]
fn distances_and_path_counts() {
    for named in small_graphs().into_iter().chain(medium_graphs()) {
        let g = &named.graph;
        let o = Oracle::new(g);
        for x in 0..g.n() {
            for y in 0..g.n() {
                assert_eq!(g.dist(x, y) as usize, o.dist[x][y], "{} d({x},{y})", named.label);
                assert_eq!(
                    *g.spcount(x, y),
                    o.path_count(x, y).into(),
                    "{} sigma({x},{y})",
                    named.label
                );
            }
        }
    }
}

#[test]
fn predicates_agree_on_every_subset() {
    for named in small_graphs().into_iter().filter(|g| g.graph.n() <= 9) {
        let g = &named.graph;
        let o = Oracle::new(g);
        for mask in 0u64..1 << g.n() {
            let x = VertexSet::from_mask(g.n(), mask);
            for v in Variant::ALL {
                assert_eq!(is_visibility_set(g, &x, v), o.is_set(mask, v), "{} {v} {x}", named.label);
            }
            assert_eq!(is_total_visibility_set_fast(g, &x), o.is_set(mask, Variant::Total));
            assert_eq!(is_general_position_set(g, &x), o.is_general_position(mask));
        }
    }
}

#[test]
fn polynomials_agree_on_catalog() {
    for named in small_graphs() {
        let o = Oracle::new(&named.graph);
        for v in Variant::ALL {
            assert_eq!(coeffs(&named.graph, v), o.polynomial(v), "{} {v}", named.label);
        }
    }
}

#[test]
fn sets_and_maximal_sets_agree() {
    let limits = EnumerationLimits::default();
    for named in small_graphs().into_iter().filter(|g| g.graph.n() <= 8) {
        let g = &named.graph;
        let o = Oracle::new(g);
        for v in Variant::ALL {
            let mut got: Vec<u64> = visibility_sets(g, v, &limits).unwrap().iter().map(mask_of).collect();
            got.sort();
            assert_eq!(got, o.sets(v), "{} {v}", named.label);
            if v.is_subset_closed() {
                let mut got: Vec<u64> = maximal_visibility_sets(g, v, &limits)
                    .unwrap()
                    .iter()
                    .map(mask_of)
                    .collect();
                got.sort();
                assert_eq!(got, o.maximal_sets(v), "{} {v} maximal", named.label);
            }
            assert_eq!(visibility_number(g, v, &limits).unwrap(), o.number(v));
        }
    }
}

#[test]
fn known_polynomials_reproduced_by_oracle() {
    let o = Oracle::new(&graph(Family::Petersen));
    assert_eq!(o.polynomial(Variant::Mv), vec![1, 10, 45, 90, 80, 30, 5]);
    assert_eq!(o.polynomial(Variant::Outer), vec![1, 10, 30, 30, 5]);
    assert_eq!(o.polynomial(Variant::Dual), vec![1]);
    assert_eq!(o.polynomial(Variant::Total), vec![1]);

    let o = Oracle::new(&graph(Family::Cycle(4)));
    assert_eq!(o.polynomial(Variant::Dual), vec![1, 4, 4, 4]);
    let o = Oracle::new(&graph(Family::Cycle(6)));
    assert_eq!(o.polynomial(Variant::Dual), vec![1, 0, 6]);
}

#[test]
fn derived_values_reproduced_by_oracle() {
    let k33 = Oracle::new(&graph(Family::CompleteBipartite(3, 3)));
    assert_eq!(k33.polynomial(Variant::Total), vec![1, 6, 15, 18, 9]);
    assert_eq!(k33.polynomial(Variant::Mv), vec![1, 6, 15, 20, 15]);
    assert_eq!(k33.polynomial(Variant::Outer), vec![1, 6, 15, 20, 9]);

    let k44 = Oracle::new(&graph(Family::CompleteBipartite(4, 4)));
    assert_eq!(coeffs(&graph(Family::CompleteBipartite(4, 4)), Variant::Dual), k44.polynomial(Variant::Dual));

    assert_eq!(Oracle::new(&graph(Family::Cycle(4))).number(Variant::Total), 2);
    assert_eq!(Oracle::new(&graph(Family::FOneEll(1))).polynomial(Variant::Dual), vec![1, 1]);
    for n in 2..=4 {
        let g = graph(Family::GN(n));
        let o = Oracle::new(&g);
        assert_eq!(o.polynomial(Variant::Dual), vec![1, 0, 2 * n as u64], "G_{n}");
        assert_eq!(coeffs(&g, Variant::Dual), o.polynomial(Variant::Dual));
    }
}

#[test]
fn sixteen_vertex_spectrum_reproduced_by_oracle() {
    let c = construct(&Family::FOneEll(2)).unwrap();
    assert_eq!(c.graph.n(), 16);
    let o = Oracle::new(&c.graph);
    let dual = o.sets(Variant::Dual);
    let want: Vec<u64> = vec![0, mask_of(&c.set_of_names(&["v1"])), mask_of(&c.set_of_names(&["v2"]))];
    let mut want_sorted = want.clone();
    want_sorted.sort();
    assert_eq!(dual, want_sorted);
    assert_eq!(o.number(Variant::Total), 1);
    assert_eq!(total_number_via_bypass(&c.graph), Some(1));
}

#[test]
fn lemma_assisted_matches_exhaustive() {
    let assisted = EnumerationLimits {
        allow_lemma_assisted: true,
        ..EnumerationLimits::default()
    };
    for f in [
        Family::FOneEll(1),
        Family::FOneEll(2),
        Family::GN(2),
        Family::GN(3),
        Family::FT { t: 2, omit_v5: true },
    ] {
        let c = construct(&f).unwrap();
        let found = lemma_assisted_dual_search(&c.graph, &c.convex_cover, &assisted).unwrap();
        assert_eq!(found.provenance, Provenance::LemmaAssisted);
        if c.graph.n() <= 16 {
            let o = Oracle::new(&c.graph);
            assert_eq!(found.spectrum.to_u64s().unwrap(), o.polynomial(Variant::Dual), "{f}");
        }
    }
    // blocks are convex, so they always form a valid cover
    for named in small_graphs().into_iter().filter(|g| g.graph.n() <= 8) {
        let g = &named.graph;
        let found = lemma_assisted_dual_search(g, &g.blocks(), &assisted).unwrap();
        assert_eq!(found.spectrum, dual_spectrum(g, &assisted).unwrap(), "{}", named.label);
    }
    let f12 = graph(Family::FOneEll(2));
    let small = EnumerationLimits {
        max_exhaustive_n: 7,
        ..assisted.clone()
    };
    let (p, prov) = dual_spectrum_auto(&f12, &small).unwrap();
    assert_eq!(prov, Provenance::LemmaAssisted);
    assert_eq!(p.to_u64s().unwrap(), vec![1, 2]);
    assert!(dual_spectrum_auto(&f12, &EnumerationLimits { max_exhaustive_n: 7, ..EnumerationLimits::default() }).is_err());
}
