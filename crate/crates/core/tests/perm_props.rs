mod common;

use common::*;
use foldcheck_core::perm::{
    cycle_count_criterion, is_intersection_free_cyclic, is_intersection_free_cyclic_by_cut,
    is_intersection_free_linear, is_intersection_free_linear_by_pairs, reduct,
};
use foldcheck_core::{CyclicOrder, LinearOrder, PairPartition, Permutation};
use proptest::prelude::*;

fn shuffled(m: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=m).collect::<Vec<_>>()).prop_shuffle()
}

/// A 2n-cycle (as a sequence starting anywhere) and a perfect matching.
fn instance(max_n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        (shuffled(2 * n), shuffled(2 * n)).prop_map(|(seq, m)| {
            let pairs = m.chunks(2).map(|c| (c[0], c[1])).collect();
            (seq, pairs)
        })
    })
}

fn build(seq: &[usize], pairs: &[(usize, usize)]) -> (CyclicOrder, Permutation, PairPartition) {
    let m = seq.len();
    let sigma = CyclicOrder::new(Permutation::from_images(&cycle_images(seq)).unwrap()).unwrap();
    let rho = Permutation::from_images(&matching_images(pairs, m)).unwrap();
    let p = PairPartition::new(pairs, m).unwrap();
    (sigma, rho, p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn cycle_count_matches_literal_definition_up_to_ten_points((seq, pairs) in instance(5)) {
        let (sigma, rho, p) = build(&seq, &pairs);
        let n = pairs.len();
        let crossings = crossing_count(&seq, &pairs);
        prop_assert_eq!(is_intersection_free_cyclic(&p, &sigma), crossings == 0);
        prop_assert_eq!(cycle_count_criterion(&sigma, &rho).unwrap(), crossings == 0);
        let count = product_cycle_count(&matching_images(&pairs, seq.len()), &cycle_images(&seq));
        prop_assert_eq!(rho.compose(sigma.as_permutation()).unwrap().cycle_count(), count);
        prop_assert!(count <= n + 1);
    }

    #[test]
    fn linear_checks_agree((seq, pairs) in instance(6)) {
        let (_, _, p) = build(&seq, &pairs);
        let l = LinearOrder::new(seq.clone()).unwrap();
        let expected = crossing_count(&seq, &pairs) == 0;
        prop_assert_eq!(is_intersection_free_linear(&p, &l), expected);
        prop_assert_eq!(is_intersection_free_linear_by_pairs(&p, &l), expected);
    }

    #[test]
    fn cyclic_checks_agree((seq, pairs) in instance(5)) {
        let (sigma, _, p) = build(&seq, &pairs);
        prop_assert_eq!(
            is_intersection_free_cyclic(&p, &sigma),
            is_intersection_free_cyclic_by_cut(&p, &sigma)
        );
    }

    #[test]
    fn conversion_between_linear_and_cyclic((seq, pairs) in instance(5)) {
        let (_, _, p) = build(&seq, &pairs);
        let l = LinearOrder::new(seq.clone()).unwrap();
        let c = l.induced_cyclic();
        prop_assert_eq!(c.induced_linear(seq[0]).unwrap(), l.clone());
        if is_intersection_free_linear(&p, &l) {
            prop_assert!(is_intersection_free_cyclic(&p, &c));
        }
        if is_intersection_free_cyclic(&p, &c) {
            for b in 1..=seq.len() {
                prop_assert!(is_intersection_free_linear(&p, &c.induced_linear(b).unwrap()));
            }
        }
    }

    #[test]
    fn both_products_are_conjugate((seq, pairs) in instance(6)) {
        let (sigma, rho, _) = build(&seq, &pairs);
        let s = sigma.as_permutation();
        let rho_sigma = rho.compose(s).unwrap();
        let sigma_rho = s.compose(&rho).unwrap();
        prop_assert_eq!(&sigma_rho, &s.compose(&rho_sigma).unwrap().compose(&s.inverse()).unwrap());
        let mut a: Vec<usize> = rho_sigma.cycles().iter().map(Vec::len).collect();
        let mut b: Vec<usize> = sigma_rho.cycles().iter().map(Vec::len).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reduct_drops_one_cycle((seq, pairs) in instance(5)) {
        let (sigma, rho, _) = build(&seq, &pairs);
        let m = seq.len();
        let rho_sigma = rho.compose(sigma.as_permutation()).unwrap();
        for f in rho_sigma.fixed_points() {
            if m <= 2 {
                prop_assert!(reduct(&sigma, &rho, f).is_err());
                continue;
            }
            let r = reduct(&sigma, &rho, f).unwrap();
            prop_assert_eq!(r.sigma.degree(), m - 2);
            prop_assert!(r.rho.is_fixed_point_free_involution());
            prop_assert!(!r.kept.contains(&f) && !r.kept.contains(&sigma.next(f)));
            let reduced = r.rho.compose(r.sigma.as_permutation()).unwrap().cycle_count();
            prop_assert_eq!(reduced + 1, rho_sigma.cycle_count());
        }
    }

    #[test]
    fn cycle_notation_round_trips(seq in (1usize..=9).prop_flat_map(shuffled)) {
        let p = Permutation::from_images(&seq).unwrap();
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, seq.len()).unwrap(), p.clone());
        let spaced = text.replace(',', " , ").replace('(', " ( ");
        prop_assert_eq!(Permutation::parse_cycles(&spaced, seq.len()).unwrap(), p.clone());
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(seq.len()));
    }
}

#[test]
fn exhaustive_equivalence_up_to_eight_points() {
    for n in 1..=4 {
        let m = 2 * n;
        let points: Vec<usize> = (1..=m).collect();
        let all_matchings = matchings(&points);
        for tail in permutations(&points[1..]) {
            let mut seq = vec![1];
            seq.extend(tail);
            let sigma_images = cycle_images(&seq);
            let sigma = CyclicOrder::new(Permutation::from_images(&sigma_images).unwrap()).unwrap();
            for pairs in &all_matchings {
                let rho_images = matching_images(pairs, m);
                let free = crossing_count(&seq, pairs) == 0;
                let rho = Permutation::from_images(&rho_images).unwrap();
                let p = PairPartition::new(pairs, m).unwrap();
                assert_eq!(is_intersection_free_cyclic(&p, &sigma), free, "{seq:?} {pairs:?}");
                assert_eq!(
                    product_cycle_count(&rho_images, &sigma_images) == n + 1,
                    free,
                    "{seq:?} {pairs:?}"
                );
                assert_eq!(cycle_count_criterion(&sigma, &rho).unwrap(), free);
            }
        }
    }
}

#[test]
fn worked_reduct() {
    let sigma = CyclicOrder::parse("(1,4,3,8,5,2,7,6)", 8).unwrap();
    let rho = Permutation::parse_cycles("(1,4)(2,7)(3,6)(5,8)", 8).unwrap();
    let r = reduct(&sigma, &rho, 1).unwrap();
    assert_eq!(r.sigma_in_original_labels(), "(2,7,6,3,8,5)");
    assert_eq!(r.rho_in_original_labels(), "(2,7)(3,6)(5,8)");
    let r2 = reduct(&r.sigma, &r.rho, 1).unwrap();
    assert_eq!(r2.sigma.degree(), 4);
}
