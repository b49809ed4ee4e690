mod common;

use common::*;
use foldcheck_core::fold::{enumerate_foldings_with, RefutationWitness};
use foldcheck_core::generate::{coloured_gluing, random_gluing};
use foldcheck_core::{
    builtin, enumerate_foldings, find_folding, find_folding_with, find_orientation,
    find_vertex_colourings, parse_surface, verify_folding, FoldOptions, FoldVerdict, SearchMode,
    Surface, UnfoldReason,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_closed_connected(seed: u64, count: usize, max_faces: usize) -> Vec<Surface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempt = 0usize;
    while out.len() < count {
        attempt += 1;
        let faces = 2 * (1 + attempt % (max_faces / 2));
        let s = if attempt.is_multiple_of(3) {
            random_gluing(&mut rng, faces)
        } else {
            coloured_gluing(&mut rng, faces)
        };
        if let Some(s) = s.filter(Surface::is_connected) {
            out.push(s);
        }
    }
    out
}

fn no_checks() -> FoldOptions {
    FoldOptions {
        necessary_checks: false,
        mode: SearchMode::Pruned,
    }
}

#[test]
fn verdicts_match_definitional_brute_force() {
    let mut surfaces: Vec<Surface> = ["tetrahedron", "octahedron", "torus8"]
        .iter()
        .map(|n| builtin(n).unwrap())
        .collect();
    surfaces.push(parse_surface(DOUBLE_TRIANGLE).unwrap());
    surfaces.extend(small_closed_connected(17, 40, 8));

    for s in &surfaces {
        let brute = brute_force_foldings(s);
        let any = brute.values().any(|orders| !orders.is_empty());
        for options in [FoldOptions::default(), no_checks()] {
            let verdict = find_folding_with(s, &options).unwrap();
            assert_eq!(verdict.is_foldable(), any, "{}", verdict.to_json());
            if let FoldVerdict::Foldable(f) = &verdict {
                assert!(brute[&f.colouring.class_partition()].contains(&f.order));
            }
        }
        for cv in find_vertex_colourings(s) {
            let pruned = enumerate_foldings(s, &cv, usize::MAX).unwrap();
            let plain = enumerate_foldings_with(s, &cv, usize::MAX, SearchMode::Exhaustive).unwrap();
            assert_eq!(pruned, plain);
            assert_eq!(&pruned, &brute[&cv.class_partition()]);
            for order in &pruned {
                assert!(verify_folding(s, &cv, order).unwrap().all());
            }
        }
    }
}

#[test]
fn foldable_implies_orientable() {
    let mut surfaces: Vec<Surface> = ["tetrahedron", "octahedron", "torus8"]
        .iter()
        .map(|n| builtin(n).unwrap())
        .collect();
    surfaces.extend(small_closed_connected(99, 60, 12));
    let mut non_orientable_colourable = 0;
    for s in &surfaces {
        let orientable = find_orientation(s).unwrap().orientation().is_some();
        let colourable = !find_vertex_colourings(s).is_empty();
        if !orientable && colourable {
            non_orientable_colourable += 1;
        }
        let unchecked = find_folding_with(s, &no_checks()).unwrap();
        let checked = find_folding(s).unwrap();
        assert_eq!(checked.is_foldable(), unchecked.is_foldable());
        if unchecked.is_foldable() {
            assert!(orientable);
        }
        if !orientable && colourable {
            assert_eq!(checked.reason(), Some(UnfoldReason::NotOrientable));
            assert_eq!(unchecked.reason(), Some(UnfoldReason::ExhaustedSearch));
        }
    }
    assert!(non_orientable_colourable > 0, "sample never exercised the non-orientable branch");
}

#[test]
fn frozen_fixture_results() {
    let torus = builtin("torus8").unwrap();
    let verdict = find_folding(&torus).unwrap();
    assert_eq!(
        serde_json::to_string(&verdict.to_json()).unwrap(),
        r#"{"colouring":{"A":1,"B":2,"C":2,"D":3},"oracles":{"cycle_count":true,"definition":true,"linear_if":true},"outcome":"foldable","witness":["1","2","3","6","7","8","5","4"]}"#
    );
    let cv = &find_vertex_colourings(&torus)[0];
    assert_eq!(enumerate_foldings(&torus, cv, usize::MAX).unwrap().len(), 16);

    let oct = builtin("octahedron").unwrap();
    let cvs = find_vertex_colourings(&oct);
    assert_eq!(cvs.len(), 1);
    assert_eq!(enumerate_foldings(&oct, &cvs[0], usize::MAX).unwrap().len(), 12);

    let tet = find_folding(&builtin("tetrahedron").unwrap()).unwrap();
    assert_eq!(tet.reason(), Some(UnfoldReason::NoVertexColouring));
}

#[test]
fn exhausted_search_reports_statistics() {
    // orientable colourable samples at this size all fold, so refute with the checks off
    for s in small_closed_connected(5, 80, 12) {
        if let FoldVerdict::Unfoldable(r) = find_folding_with(&s, &no_checks()).unwrap() {
            if r.reason == UnfoldReason::ExhaustedSearch {
                match &r.witness {
                    RefutationWitness::Search { nodes_per_colouring } => {
                        assert_eq!(nodes_per_colouring.iter().sum::<u64>(), r.search_nodes);
                        assert!(!nodes_per_colouring.is_empty());
                    }
                    other => panic!("unexpected witness {other:?}"),
                }
                return;
            }
        }
    }
    panic!("sample produced no exhausted search");
}

#[test]
fn verdict_bytes_are_stable() {
    for s in small_closed_connected(8, 20, 10) {
        let a = serde_json::to_string(&find_folding(&s).unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&find_folding(&s).unwrap().to_json()).unwrap();
        assert_eq!(a, b);
    }
}
