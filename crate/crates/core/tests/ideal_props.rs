mod common;

use proptest::prelude::*;
use rand::Rng;

use sympow_core::{Ideal, Monomial, Poly};

use common::*;

fn small_pair(seed: u64) -> (Ideal, Ideal) {
    let mut rng = rng(seed);
    let i = random_homogeneous_ideal(&mut rng, 2);
    let ring = i.ring().clone();
    let k = rng.gen_range(1..=2);
    let gens: Vec<Poly> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=2);
            random_form(&mut rng, &ring, d, 2)
        })
        .collect();
    (i, Ideal::new(&ring, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn product_inside_intersection(seed in any::<u64>()) {
        let (i, j) = small_pair(seed);
        let prod = i.product(&j).unwrap();
        let cap = i.intersect(&j).unwrap();
        prop_assert!(cap.contains_ideal(&prod).unwrap());
        prop_assert!(i.contains_ideal(&cap).unwrap() && j.contains_ideal(&cap).unwrap());
    }

    #[test]
    fn saturation_is_idempotent(seed in any::<u64>()) {
        let (i, j) = small_pair(seed);
        let (once, _) = i.saturate(&j).unwrap();
        let (twice, s) = once.saturate(&j).unwrap();
        prop_assert!(once.equal(&twice).unwrap());
        prop_assert_eq!(s, 0);
        let (m_sat, _) = i.saturate_irrelevant().unwrap();
        prop_assert!(m_sat.saturate_irrelevant().unwrap().0.equal(&m_sat).unwrap());
    }

    #[test]
    fn powers_multiply(seed in any::<u64>(), a in 1u32..3, b in 1u32..3) {
        let (i, _) = small_pair(seed);
        let lhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
        prop_assert!(lhs.equal(&i.power(a + b).unwrap()).unwrap());
    }

    #[test]
    fn colon_adjunction(seed in any::<u64>()) {
        let (i, j) = small_pair(seed);
        let c = i.colon(&j).unwrap();
        prop_assert!(i.contains_ideal(&j.product(&c).unwrap()).unwrap());
        prop_assert!(c.contains_ideal(&i).unwrap());
    }

    #[test]
    fn variable_colon_routes_agree(seed in any::<u64>(), v in 0usize..4) {
        let (i, _) = small_pair(seed);
        let x = Poly::var(i.ring(), v % i.ring().nvars());
        let fast = i.colon_poly(&x).unwrap();
        let slow = i.colon_by_division(&x).unwrap();
        prop_assert!(fast.equal(&slow).unwrap(), "{} : {}", i, x);
    }

    #[test]
    fn coordinate_subspaces_have_expected_dimension(n in 1usize..6, mask in 1u32..64) {
        let ring = qq_ring(n);
        let vars: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        prop_assume!(!vars.is_empty());
        let i = Ideal::new(&ring, vars.iter().map(|&v| Poly::var(&ring, v))).unwrap();
        prop_assert_eq!(i.dimension().unwrap(), n - vars.len());
    }

    #[test]
    fn minimal_generators_generate_minimally(seed in any::<u64>()) {
        let (i, j) = small_pair(seed);
        let padded = Ideal::new(i.ring(), i.gens().iter().chain(i.product(&j).unwrap().gens()).cloned()).unwrap();
        let (mu, gens) = padded.min_gens().unwrap();
        prop_assert_eq!(mu, gens.len());
        let back = Ideal::new(i.ring(), gens.clone()).unwrap();
        prop_assert!(back.equal(&padded).unwrap());
        for k in 0..gens.len() {
            let fewer: Vec<Poly> = gens.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, g)| g.clone()).collect();
            let smaller = Ideal::new(i.ring(), fewer).unwrap();
            prop_assert!(!smaller.equal(&padded).unwrap());
        }
    }
}

#[test]
fn monomial_colon_by_variable() {
    let ring = qq_ring(3);
    let i = Ideal::new(&ring, [Poly::monomial(&ring, Monomial::new(&[2, 1, 0]))]).unwrap();
    let c = i.colon_poly(&Poly::var(&ring, 0)).unwrap();
    assert!(c.equal(&Ideal::new(&ring, [Poly::monomial(&ring, Monomial::new(&[1, 1, 0]))]).unwrap()).unwrap());
}
