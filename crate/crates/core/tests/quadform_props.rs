mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use quadloc::constructions::{
    build_g0, build_g0_prime, build_g1, build_g1_prime, build_high_genus_family, build_k4_projective, klein_grid,
    torus_grid, add_main_diagonals,
};
use quadloc::localcolor::{face_colors, is_local_coloring, Coloring};
use quadloc::quadform::{
    admissible_crosscap_edges, classify_phi_type, crosscap_hexagon, cycle_parity_profile, cycle_parity_profile_from,
    cyclically_increasing_faces, excess_report, identify_face_diagonal, odd_faces_parity, phi3_certificate,
    quad_parity, refine_3x3, Parity, PhiType,
};
use quadloc::surface::{
    classify_surface, orientation_double_cover, parse_embedding, write_embedding, DoubleCover, EmbeddedGraph,
};
use quadloc::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<(&'static str, EmbeddedGraph)> {
    let g0p = build_g0_prime().unwrap();
    let g1p = build_g1_prime().unwrap();
    let fam = build_high_genus_family(&g1p, 2).unwrap().0;
    vec![
        ("g0p", g0p.graph),
        ("g1p", g1p.graph),
        ("k4p", build_k4_projective().unwrap().0),
        ("g1p+2", fam),
        ("klein 3x3", klein_grid(3, 3).unwrap()),
        ("klein 4x4", klein_grid(4, 4).unwrap()),
        ("torus 3x3", torus_grid(3, 3).unwrap()),
    ]
}

fn switched(g: &EmbeddedGraph, seed: u64) -> EmbeddedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = g.clone();
    for v in 0..g.vertex_count() {
        if rng.gen_bool(0.5) {
            out = out.switch_vertex(v);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn odd_face_count_matches_parity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, g) in corpus() {
            let heads = common::random_heads(&mut rng, &g);
            let (p, _) = odd_faces_parity(&g, &heads).unwrap();
            prop_assert_eq!(p, quad_parity(&g).unwrap(), "{}", name);
        }
    }

    #[test]
    fn switching_keeps_every_invariant(seed in any::<u64>()) {
        for (name, g) in corpus() {
            let s = switched(&g, seed);
            prop_assert_eq!(classify_surface(&s), classify_surface(&g), "{}", name);
            prop_assert_eq!(quad_parity(&s).unwrap(), quad_parity(&g).unwrap(), "{}", name);
            let mut a = g.face_lengths();
            let mut b = s.face_lengths();
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
            let parity = quad_parity(&g).unwrap();
            let t0 = classify_phi_type(&cycle_parity_profile(&g).unwrap(), parity);
            let t1 = classify_phi_type(&cycle_parity_profile(&s).unwrap(), parity);
            prop_assert_eq!(t0, t1, "{}", name);
        }
    }
}

#[test]
fn phi_type_independent_of_root() {
    for (name, g) in corpus() {
        let parity = quad_parity(&g).unwrap();
        let want = classify_phi_type(&cycle_parity_profile(&g).unwrap(), parity);
        for root in 0..g.vertex_count() {
            let got = classify_phi_type(&cycle_parity_profile_from(&g, root).unwrap(), parity);
            assert_eq!(got, want, "{name} root {root}");
        }
    }
}

#[test]
fn phi_types_of_named_maps() {
    let parity_and_type = |g: &EmbeddedGraph| {
        let p = quad_parity(g).unwrap();
        (p, classify_phi_type(&cycle_parity_profile(g).unwrap(), p).unwrap())
    };
    assert_eq!(parity_and_type(&build_g1_prime().unwrap().graph), (Parity::Odd, PhiType::Phi3));
    assert_eq!(parity_and_type(&build_k4_projective().unwrap().0), (Parity::Odd, PhiType::Phi3));
    assert_eq!(parity_and_type(&klein_grid(4, 4).unwrap()), (Parity::Even, PhiType::Phi0));
    assert_eq!(parity_and_type(&klein_grid(4, 6).unwrap()).1, PhiType::Phi0);
    let torus = cycle_parity_profile(&torus_grid(3, 3).unwrap()).unwrap();
    assert!(matches!(classify_phi_type(&torus, Parity::Even), Err(Error::Unsupported(_))));
}

/// Hexagons of `G1` whose two colors are `pair`, and their diagonals in `G1'`.
fn forced_diagonals(pairs: &[[usize; 2]]) -> Vec<(usize, usize)> {
    let g1 = build_g1().unwrap();
    let g1p = build_g1_prime().unwrap();
    g1.hexagons
        .iter()
        .zip(&g1p.diagonals)
        .filter(|(hex, _)| {
            let cols: BTreeSet<usize> = hex.iter().map(|&v| g1.coloring.get(v)).collect();
            pairs.iter().any(|p| cols == p.iter().copied().collect())
        })
        .map(|(_, &d)| d)
        .collect()
}

#[test]
fn negative_edge_list_on_the_hexagonal_map() {
    let g1 = build_g1().unwrap();
    let neg = common::edges_from_pairs(&g1.graph, common::G1_NEGATIVE_EDGES);
    assert_eq!(neg.len(), 12);
    assert_eq!(phi3_certificate(&g1.graph, &neg), Ok(true));
}

#[test]
fn negative_edge_list_needs_two_diagonals_after_completion() {
    let g1p = build_g1_prime().unwrap();
    let mut neg = common::edges_from_pairs(&g1p.graph, common::G1_NEGATIVE_EDGES);
    assert!(matches!(phi3_certificate(&g1p.graph, &neg), Err(Error::CertificateMismatch(_))));
    let diags = forced_diagonals(&[[2, 3], [5, 6]]);
    assert_eq!(diags.len(), 2);
    for (a, b) in diags {
        let e = g1p.graph.edges_between(a, b);
        assert_eq!(e.len(), 1);
        neg.push(e[0]);
    }
    assert_eq!(phi3_certificate(&g1p.graph, &neg), Ok(true));
}

#[test]
fn completed_certificate_holds_for_every_diagonal_choice() {
    let g1 = build_g1().unwrap();
    let mut choice = vec![0usize; g1.hexagons.len()];
    for code in 0..3usize.pow(choice.len() as u32) {
        let mut x = code;
        for c in choice.iter_mut() {
            *c = x % 3;
            x /= 3;
        }
        let q = add_main_diagonals(&g1, &choice).unwrap();
        let mut neg = common::edges_from_pairs(&q.graph, common::G1_NEGATIVE_EDGES);
        assert!(phi3_certificate(&q.graph, &neg).is_err(), "choice {choice:?}");
        for (h, hex) in g1.hexagons.iter().enumerate() {
            let cols: BTreeSet<usize> = hex.iter().map(|&v| g1.coloring.get(v)).collect();
            if cols == BTreeSet::from([2, 3]) || cols == BTreeSet::from([5, 6]) {
                let (a, b) = q.diagonals[h];
                neg.push(q.graph.edges_between(a, b)[0]);
            }
        }
        assert_eq!(phi3_certificate(&q.graph, &neg), Ok(true), "choice {choice:?}");
    }
}

fn assert_odd_local3(g: &EmbeddedGraph, c: &Coloring) {
    assert_eq!(quad_parity(g).unwrap(), Parity::Odd);
    assert!(is_local_coloring(&g.underlying(), c, 3));
}

#[test]
fn crosscaps_add_one_genus_each() {
    for (base, k) in [(build_g0_prime().unwrap(), 10), (build_g1_prime().unwrap(), 6)] {
        let c = base.coloring.clone();
        let mut g = base.graph.clone();
        let mut genus = classify_surface(&g).genus;
        for _ in 0..k {
            let e = admissible_crosscap_edges(&g, &c)[0];
            g = crosscap_hexagon(&g, &c, e).unwrap().0;
            let s = classify_surface(&g);
            assert_eq!(s.genus, genus + 1);
            assert!(!s.orientable);
            assert_odd_local3(&g, &c);
            genus += 1;
        }
    }
    let (g17, c17) = build_high_genus_family(&build_g0_prime().unwrap(), 10).unwrap();
    assert_eq!(classify_surface(&g17).genus, 17);
    assert_odd_local3(&g17, &c17);
    let (g11, c11) = build_high_genus_family(&build_g1_prime().unwrap(), 6).unwrap();
    assert_eq!(classify_surface(&g11).genus, 11);
    assert_odd_local3(&g11, &c11);
}

#[test]
fn crosscap_rejects_many_colored_faces() {
    let q = build_g1_prime().unwrap();
    let bad = (0..q.graph.edge_count()).find(|e| !admissible_crosscap_edges(&q.graph, &q.coloring).contains(e));
    let e = bad.expect("some edge borders a face with more than two colors");
    assert!(matches!(crosscap_hexagon(&q.graph, &q.coloring, e), Err(Error::SurgeryRejected(_))));
}

#[test]
fn refinement_keeps_parity_and_coloring() {
    for (name, g) in corpus() {
        let c = quadloc::localcolor::greedy_coloring(&g.underlying()).unwrap();
        let (r, rc) = refine_3x3(&g, &c).unwrap();
        assert_eq!(quad_parity(&r).unwrap(), quad_parity(&g).unwrap(), "{name}");
        assert_eq!(classify_surface(&r), classify_surface(&g), "{name}");
        assert_eq!(r.vertex_count(), g.vertex_count() + 2 * g.edge_count() + 4 * g.face_count());
        let k = quadloc::localcolor::local_number(&g.underlying(), &c).unwrap();
        assert!(is_local_coloring(&r.underlying(), &rc, k), "{name}");
    }
}

#[test]
fn identification_keeps_parity() {
    let mut done = 0;
    for (name, g) in corpus() {
        let sg = g.underlying();
        let c = quadloc::localcolor::greedy_coloring(&sg).unwrap();
        let (r, rc) = refine_3x3(&g, &c).unwrap();
        for f in 0..r.face_count() {
            match identify_face_diagonal(&r, &rc, f) {
                Ok((out, oc)) => {
                    assert_eq!(quad_parity(&out).unwrap(), quad_parity(&r).unwrap(), "{name} face {f}");
                    assert_eq!(classify_surface(&out), classify_surface(&r));
                    assert_eq!(out.vertex_count() + 1, r.vertex_count());
                    assert!(quadloc::localcolor::is_proper(&out.underlying(), &oc));
                    done += 1;
                }
                Err(Error::SurgeryRejected(_) | Error::Unsupported(_)) => {}
                Err(e) => panic!("{name} face {f}: {e}"),
            }
        }
    }
    assert!(done > 100);
}

#[test]
fn excess_identity_everywhere() {
    for (name, g) in corpus() {
        let s = classify_surface(&g);
        match excess_report(&g) {
            Ok(r) => {
                assert!(!s.orientable);
                assert_eq!(r.total, 4 * (i64::from(s.genus) - 2), "{name}");
            }
            Err(Error::Unsupported(_)) => assert!(s.orientable, "{name}"),
            Err(e) => panic!("{name}: {e}"),
        }
    }
    assert_eq!(excess_report(&build_k4_projective().unwrap().0).unwrap().total, -4);
}

#[test]
fn increasing_faces_of_g0() {
    let g0 = build_g0().unwrap();
    let quads: Vec<usize> = (0..g0.graph.face_count()).filter(|&f| g0.graph.faces()[f].len() == 4).collect();
    assert_eq!(quads.len(), 15);
    let inc = cyclically_increasing_faces(&g0.graph, &g0.coloring);
    assert_eq!(inc.len(), 5);
    assert!(inc.iter().all(|&f| face_colors(&g0.graph, &g0.coloring, f).len() == 4));
}

#[test]
fn double_cover_of_g1_prime() {
    let g = build_g1_prime().unwrap().graph;
    let DoubleCover::Connected(cover) = orientation_double_cover(&g) else { panic!("G1' is not orientable") };
    let s = classify_surface(&cover);
    assert!(s.orientable);
    assert_eq!((s.euler_characteristic, s.genus), (-6, 4));
    let mut want: Vec<usize> = g.face_lengths().into_iter().flat_map(|l| [l, l]).collect();
    let mut got = cover.face_lengths();
    want.sort();
    got.sort();
    assert_eq!(got, want);
    assert!(matches!(orientation_double_cover(&torus_grid(3, 3).unwrap()), DoubleCover::AlreadyOrientable));
}

#[test]
fn surgery_outputs_round_trip() {
    let q = build_g1_prime().unwrap();
    let e = admissible_crosscap_edges(&q.graph, &q.coloring)[0];
    let (g, c) = crosscap_hexagon(&q.graph, &q.coloring, e).unwrap();
    let text = write_embedding(&g, Some(&c));
    let (back, bc) = parse_embedding(&text).unwrap();
    assert_eq!(bc, Some(c));
    assert_eq!(classify_surface(&back), classify_surface(&g));
    assert_eq!(quad_parity(&back).unwrap(), quad_parity(&g).unwrap());
    assert_eq!(write_embedding(&back, bc.as_ref()), text);
}

/// All 3^6 choices on G1; 2000 seeded choices out of 3^10 on G0.
#[test]
fn every_diagonal_choice_is_odd_and_local_three() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let g0 = build_g0().unwrap();
    let g1 = build_g1().unwrap();
    let mut choices: Vec<(&_, Vec<usize>)> = Vec::new();
    for code in 0..729usize {
        choices.push((&g1, (0..6).map(|i| code / 3usize.pow(i) % 3).collect()));
    }
    for _ in 0..2000 {
        choices.push((&g0, (0..10).map(|_| rng.gen_range(0..3)).collect()));
    }
    for (base, choice) in choices {
        let q = add_main_diagonals(base, &choice).unwrap();
        assert_eq!(quad_parity(&q.graph).unwrap(), Parity::Odd, "{choice:?}");
        assert!(is_local_coloring(&q.graph.underlying(), &q.coloring, 3), "{choice:?}");
    }
}
