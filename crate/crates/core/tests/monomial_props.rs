mod common;

use itertools::Itertools;
use proptest::prelude::*;
use rand::Rng;

use sympow_core::monomial::graph_ideal;
use sympow_core::{classify_graph, minimal_primes, monomial_symbolic_power, GraphClass, Ideal, MonomialIdeal, Poly};

use common::*;

/// `∩ P^n` through the general engine: elimination-based intersections of
/// Gröbner-basis powers.
fn general_symbolic(mono: &MonomialIdeal, n: u32) -> Ideal {
    let ring = qq_ring(mono.nvars());
    let mut acc = Ideal::unit(&ring);
    for p in minimal_primes(mono).unwrap() {
        let prime = Ideal::new(&ring, p.vars().into_iter().map(|v| Poly::var(&ring, v))).unwrap();
        acc = acc.intersect(&prime.power(n).unwrap()).unwrap();
    }
    acc
}

fn same_generators(general: &Ideal, fast: &MonomialIdeal) -> bool {
    MonomialIdeal::from_ideal(&Ideal::new(general.ring(), general.gb().unwrap().gens().to_vec()).unwrap())
        .map(|m| m == *fast)
        .unwrap_or(false)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fast_symbolic_powers_match_general_engine(seed in any::<u64>(), n in 1u32..=3) {
        let mut rng = rng(seed);
        let nvars = rng.gen_range(2..=5);
        let mono = random_squarefree(&mut rng, nvars, 5, 3);
        prop_assume!(!mono.is_unit());
        let fast = monomial_symbolic_power(&mono, n).unwrap();
        let general = general_symbolic(&mono, n);
        prop_assert!(same_generators(&general, &fast), "{} n={}", mono, n);
    }

    #[test]
    fn lcm_intersection_matches_elimination(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let nvars = rng.gen_range(2..=4);
        let ring = qq_ring(nvars);
        let (a, b) = (random_squarefree(&mut rng, nvars, 4, 3), random_squarefree(&mut rng, nvars, 4, 3));
        let fast = a.intersect(&b);
        let general = a.to_ideal(&ring).unwrap().intersect(&b.to_ideal(&ring).unwrap()).unwrap();
        prop_assert!(same_generators(&general, &fast));
    }

    #[test]
    fn minimal_primes_are_incomparable_and_cut_out_the_ideal(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let nvars = rng.gen_range(2..=6);
        let mono = random_squarefree(&mut rng, nvars, 6, 3);
        prop_assume!(!mono.is_unit());
        let primes = minimal_primes(&mono).unwrap();
        for (p, q) in primes.iter().tuple_combinations() {
            let (pv, qv) = (p.vars(), q.vars());
            prop_assert!(!pv.iter().all(|v| qv.contains(v)) && !qv.iter().all(|v| pv.contains(v)));
        }
        let mut acc = MonomialIdeal::new(nvars, [sympow_core::Monomial::ONE]);
        for p in &primes {
            acc = acc.intersect(&p.to_ideal(nvars));
        }
        prop_assert_eq!(acc, mono);
    }
}

/// 200 seeded instances of the lcm intersection against elimination.
#[test]
fn lcm_intersection_two_hundred_instances() {
    let mut rng = rng(200);
    for _ in 0..200 {
        let nvars = rng.gen_range(2..=4);
        let ring = qq_ring(nvars);
        let (a, b) = (random_squarefree(&mut rng, nvars, 4, 3), random_squarefree(&mut rng, nvars, 4, 3));
        let general = a.to_ideal(&ring).unwrap().intersect(&b.to_ideal(&ring).unwrap()).unwrap();
        assert!(same_generators(&general, &a.intersect(&b)), "{a} cap {b}");
    }
}

#[test]
fn graph_classes_survive_relabeling() {
    for class in GraphClass::ALL {
        let edges = class.representative();
        let base = classify_graph(&graph_ideal(&edges)).unwrap();
        for perm in (0..4usize).permutations(4) {
            let moved: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
            let report = classify_graph(&graph_ideal(&moved)).unwrap();
            assert_eq!(report.class, class);
            assert_eq!(report.verdict, base.verdict, "{class} under {perm:?}");
            assert_eq!(report.corresponding_height, base.corresponding_height);
            assert_eq!(report.square_is_symbolic, base.square_is_symbolic);
        }
    }
}
