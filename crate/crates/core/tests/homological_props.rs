mod common;

use proptest::prelude::*;
use rand::Rng;

use sympow_core::homological::hilbert_function;
use sympow_core::{fixtures, resolve, Ideal, Resolution};

use common::*;

fn check(ideal: &Ideal, res: &Resolution, seed: u64) -> Result<(), TestCaseError> {
    let nvars = ideal.ring().nvars();
    let oracle = depth_by_linear_forms(ideal, seed);
    prop_assert_eq!(res.pd() + oracle, nvars, "Auslander-Buchsbaum for {}", ideal);
    prop_assert!(oracle <= ideal.dimension().unwrap());
    for map in res.maps() {
        prop_assert!(map.is_minimal());
    }
    prop_assert_eq!(res.betti(), res.tor_betti());
    for t in 0..=10 {
        prop_assert_eq!(res.betti().hilbert_function(nvars, t), hilbert_function(ideal, t).unwrap() as i64, "t = {}", t);
    }
    let saturated = ideal.saturate_irrelevant().unwrap().1 == 0;
    prop_assert_eq!(saturated, res.depth() > 0);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_homogeneous_resolutions(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let ideal = random_homogeneous_ideal(&mut rng, 3);
        prop_assume!(!ideal.is_unit().unwrap());
        let res = resolve(&ideal).unwrap();
        check(&ideal, &res, seed)?;
    }

    #[test]
    fn random_monomial_resolutions(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(2..=5);
        let mono = random_squarefree(&mut rng, n, 5, 3);
        let ideal = mono.to_ideal(&qq_ring(n)).unwrap();
        let power = ideal.power(rng.gen_range(1..=2)).unwrap();
        let res = resolve(&power).unwrap();
        check(&power, &res, seed)?;
    }
}

#[test]
fn named_ideals_satisfy_the_identities() {
    let cases = [
        fixtures::tetrahedron(),
        fixtures::tetrahedron().power(2).unwrap(),
        fixtures::pentagon(),
        fixtures::pentagon().power(2).unwrap(),
        fixtures::hankel(),
        fixtures::hankel().power(2).unwrap(),
        fixtures::macaulay_curve(),
        fixtures::three_points().power(2).unwrap(),
        fixtures::dolgachev(),
        fixtures::dolgachev().power(2).unwrap(),
        fixtures::binomial_family(3),
        fixtures::quadric_chain(),
    ];
    for (k, ideal) in cases.iter().enumerate() {
        let res = resolve(ideal).unwrap();
        check(ideal, &res, k as u64).unwrap();
    }
}
