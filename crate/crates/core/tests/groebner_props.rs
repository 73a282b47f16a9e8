mod common;

use proptest::prelude::*;
use rand::Rng;

use sympow_core::groebner::{is_reduced, verify_buchberger_criterion};
use sympow_core::{groebner, MonomialOrder};

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_matches_macaulay_matrix(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let ideal = random_homogeneous_ideal(&mut rng, 3);
        let t = rng.gen_range(1..=5);
        let p = membership_candidate(&mut rng, &ideal, t);
        prop_assert_eq!(ideal.contains(&p).unwrap(), macaulay_member(&ideal, &p), "{} in {}", p, ideal);
    }

    #[test]
    fn bases_are_certified_and_reduced(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let ideal = random_homogeneous_ideal(&mut rng, 3);
        for order in [MonomialOrder::Lex, MonomialOrder::GradedLex, MonomialOrder::GradedReverseLex] {
            let gb = groebner(ideal.ring(), ideal.gens(), order).unwrap();
            prop_assert!(verify_buchberger_criterion(&gb));
            prop_assert!(is_reduced(&gb));
            for g in ideal.gens() {
                prop_assert!(gb.contains(g).unwrap());
            }
        }
    }

    #[test]
    fn membership_is_order_independent(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let ideal = random_homogeneous_ideal(&mut rng, 3);
        let t = rng.gen_range(1..=4);
        let p = membership_candidate(&mut rng, &ideal, t);
        let lex = groebner(ideal.ring(), ideal.gens(), MonomialOrder::Lex).unwrap();
        let grevlex = groebner(ideal.ring(), ideal.gens(), MonomialOrder::GradedReverseLex).unwrap();
        prop_assert_eq!(lex.contains(&p).unwrap(), grevlex.contains(&p).unwrap());
    }

    #[test]
    fn inhomogeneous_bases_are_certified(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let ring = qq_ring(3);
        let gens: Vec<_> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let (d, e) = (rng.gen_range(1..=3), rng.gen_range(0..=1));
                let top = random_form(&mut rng, &ring, d, 2);
                &top + &random_form(&mut rng, &ring, e, 1)
            })
            .collect();
        let gb = groebner(&ring, &gens, MonomialOrder::GradedReverseLex).unwrap();
        prop_assert!(verify_buchberger_criterion(&gb) && is_reduced(&gb));
    }
}
