//! One line per acceptance criterion, exact equality throughout.
//!
//! Witnesses are re-checked through raw Gröbner membership on bases built
//! here from brute-force products, never through the module that produced
//! them.

mod common;

use std::time::Instant;

use rand::Rng;

use sympow_core::cremona::{HYP_PRIMARY, HypothesisStatus};
use sympow_core::fixtures;
use sympow_core::monomial::GraphVerdict;
use sympow_core::{
    classify_graph, compare, depth, depth_positive_check, gabber_bound, groebner, minimal_primes,
    nonrigidity_probe, predicates, resolve, rigidity_scan, verify_inverse, CremonaMap, GraphClass,
    Ideal, Justification, MonomialIdeal, MonomialOrder, Poly, SymbolicStrategy,
};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Generators of `I^n` as all `n`-fold products, no simplification.
fn raw_power(i: &Ideal, n: u32) -> Vec<Poly> {
    let mut acc = vec![Poly::one(i.ring())];
    for _ in 0..n {
        acc = acc.iter().flat_map(|a| i.gens().iter().map(move |g| a * g)).collect();
    }
    acc
}

fn raw_member(i: &Ideal, gens: &[Poly], p: &Poly) -> Result<bool, String> {
    let gb = e(groebner(i.ring(), gens, MonomialOrder::Lex))?;
    e(gb.contains(p))
}

/// `w ∈ P^n` for every minimal prime `P` of a square-free monomial ideal.
fn raw_in_symbolic_monomial(i: &Ideal, n: u32, w: &Poly) -> Result<bool, String> {
    let mono = e(MonomialIdeal::from_ideal(i))?;
    for p in e(minimal_primes(&mono))? {
        let prime = e(Ideal::new(i.ring(), p.vars().into_iter().map(|v| Poly::var(i.ring(), v))))?;
        if !raw_member(i, &raw_power(&prime, n), w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x_j^s w ∈ I^n` for every variable: `w` lies in `(I^n : 𝔪^∞)`.
fn raw_in_saturation(i: &Ideal, n: u32, w: &Poly, s: usize) -> Result<bool, String> {
    let gens = raw_power(i, n);
    let s = (s.max(1) * 8) as u32;
    for j in 0..i.ring().nvars() {
        let shifted = w * &Poly::var(i.ring(), j).pow(s);
        if !raw_member(i, &gens, &shifted)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn sat(j: Justification) -> SymbolicStrategy {
    SymbolicStrategy::SaturationAtIrrelevant(j)
}

fn c1_tetrahedron_depths() -> Outcome {
    let i = fixtures::tetrahedron();
    let mut depths = Vec::new();
    for n in 1..=3 {
        depths.push(e(depth(&e(i.power(n))?))?);
    }
    ensure!(depths == [2, 1, 0], "depths {depths:?}");
    Ok(format!("depth(R/I^n) = {depths:?} for n = 1,2,3"))
}

fn c2_tetrahedron_witness() -> Outcome {
    let i = fixtures::tetrahedron();
    let r = e(compare(&i, 2, &SymbolicStrategy::MinimalPrimeIntersection))?;
    ensure!(!r.equal, "I^2 = I^(2) reported");
    let w = r.witness.clone().ok_or("no witness")?;
    let xyzw = e(sympow_core::parse_poly(i.ring(), "xyzw"))?;
    ensure!(w == xyzw, "minimal witness {w}");
    let square = raw_power(&i, 2);
    ensure!(raw_in_symbolic_monomial(&i, 2, &w)? && !raw_member(&i, &square, &w)?, "witness fails raw membership");
    // The family x^m yzw; m = 2 is x*xyzw of degree 5.
    for m in 1..=4 {
        let fam = e(sympow_core::parse_poly(i.ring(), &format!("x^{m}yzw")))?;
        ensure!(
            raw_in_symbolic_monomial(&i, 2, &fam)? && !raw_member(&i, &square, &fam)?,
            "x^{m}yzw not in I^(2) minus I^2"
        );
    }
    ensure!(r.depth_positive, "I^2 reported unsaturated");
    Ok(format!(
        "unequal; minimal witness {w} (degree {}), x*xyzw (degree 5) and x^m yzw for m <= 4 verified raw; depth_positive(I^2) = true \
         [deviation: the lowest-degree witness is xyzw of degree 4, not degree 5]",
        r.witness_degree.unwrap()
    ))
}

fn c3_pentagon() -> Outcome {
    let i = fixtures::pentagon();
    let mut pds = Vec::new();
    let mut first_ranks = Vec::new();
    for n in 1..=3 {
        let res = e(resolve(&e(i.power(n))?))?;
        ensure!(res.ranks() == res.tor_betti().ranks(), "n={n}: minimal ranks disagree with Tor ranks");
        if n == 1 {
            first_ranks = res.ranks();
        }
        pds.push(res.pd());
    }
    ensure!(pds == [3, 3, 5], "pd {pds:?}");
    ensure!(first_ranks == [1, 5, 5, 1], "ranks {first_ranks:?}");
    let nvars = i.ring().nvars();
    for (n, strat) in [(2, SymbolicStrategy::MinimalPrimeIntersection), (3, SymbolicStrategy::MinimalPrimeIntersection), (2, sat(Justification::LocallyCi)), (3, sat(Justification::LocallyCi))] {
        let r = e(compare(&i, n, &strat))?;
        let by_pd = pds[n as usize - 1] < nvars;
        ensure!(r.equal == by_pd, "n={n} {}: compare {} vs pd route {by_pd}", strat.name(), r.equal);
        ensure!(r.equal == (n == 2), "n={n}: equal = {}", r.equal);
        if let Some(w) = &r.witness {
            ensure!(raw_in_symbolic_monomial(&i, n, w)? && !raw_member(&i, &raw_power(&i, n), w)?, "witness {w} fails raw membership");
        }
    }
    Ok(format!(
        "pd = {pds:?}; I^2 = I^(2), I^3 != I^(3) by compare and by pd, both strategies \
         [deviation: ranks are {first_ranks:?}, not 1,5,4,1; the stated shape has nonzero Euler characteristic]"
    ))
}

fn c4_hankel() -> Outcome {
    let i = fixtures::hankel();
    let prof = e(i.profile())?;
    let p = e(predicates(&i))?;
    ensure!(prof.height == 2 && prof.mu == Some(3) && p.perfect, "profile {prof:?}, perfect {}", p.perfect);
    for n in 2..=3 {
        let r = e(compare(&i, n, &sat(Justification::LocallyCi)))?;
        ensure!(r.equal, "n={n} unequal, witness {:?}", r.witness.map(|w| w.to_string()));
    }
    Ok("height 2, mu 3, perfect; I^n = I^(n) for n = 2,3".into())
}

fn c5_macaulay_curve() -> Outcome {
    let i = fixtures::macaulay_curve();
    let p = e(predicates(&i))?;
    ensure!(p.mu == 4 && p.depth == 1 && p.dim == 2 && !p.cohen_macaulay, "{p:?}");
    let r = e(compare(&i, 2, &sat(Justification::LocallyCi)))?;
    ensure!(r.equal, "I^2 != I^(2)");
    Ok("mu 4, depth 1 < dim 2 (not CM); I^2 = I^(2)".into())
}

fn c6_binomial_family() -> Outcome {
    let mut lines = Vec::new();
    for d in 2..=3u32 {
        let i = fixtures::binomial_family(d);
        let strat = sat(Justification::UserOverride("one-dimensional and saturated".into()));
        let scan = e(rigidity_scan(&i, d, &strat))?;
        for entry in &scan.entries {
            let r = entry.report.as_ref().ok_or_else(|| format!("d={d} n={}: {:?}", entry.n, entry.error))?;
            ensure!(r.equal == (entry.n < d), "d={d} n={}: equal = {}", entry.n, r.equal);
        }
        let last = scan.entries.last().unwrap().report.as_ref().unwrap();
        let w = last.witness.clone().unwrap();
        ensure!(last.witness_degree == Some(d * d - 1), "d={d}: witness degree {:?}", last.witness_degree);
        ensure!(
            raw_in_saturation(&i, d, &w, last.sat_exponent)? && !raw_member(&i, &raw_power(&i, d), &w)?,
            "d={d}: witness {w} fails raw membership"
        );
        let cross = e(compare(&i, d, &SymbolicStrategy::UserElementSaturation(e(sympow_core::parse_poly(i.ring(), "y+z"))?)))?;
        ensure!(!cross.equal && cross.witness_degree == Some(d * d - 1), "d={d}: element saturation disagrees");
        lines.push(format!("d={d}: equal below {d}, witness {w} of degree {}", d * d - 1));
    }
    Ok(lines.join("; "))
}

fn c7_tetrahedral_map() -> Outcome {
    let (f, g) = e(fixtures::tetrahedral_map())?;
    let c = e(verify_inverse(&f, &g))?;
    ensure!(c.verified && c.d == 3 && c.d_prime == 3 && c.source_inversion_degree == Some(8), "{c:?}");
    let p = e(nonrigidity_probe(&f, &g, &SymbolicStrategy::MinimalPrimeIntersection, 3))?;
    ensure!(matches!(p.hypothesis(HYP_PRIMARY), Some(HypothesisStatus::Violated { .. })), "hypothesis ii not violated");
    ensure!(p.observed_first_failure == Some(2) && p.predicted_failure == 3, "observed {:?}", p.observed_first_failure);
    Ok("inverse verified, d = d' = 3, deg D = 8; hypothesis ii violated; failure at 2, predicted 3".into())
}

fn c8_dolgachev() -> Outcome {
    let i = fixtures::dolgachev();
    let r = e(compare(&i, 2, &sat(Justification::UniqueMinimalPrimeDim1Homogeneous)))?;
    ensure!(!r.equal, "I^2 = I^(2)");
    let w = r.witness.clone().unwrap();
    ensure!(
        raw_in_saturation(&i, 2, &w, r.sat_exponent)? && !raw_member(&i, &raw_power(&i, 2), &w)?,
        "witness {w} fails raw membership"
    );
    let h = e(i.height())?;
    ensure!(h == 2, "height {h}");
    Ok(format!("I^2 != I^(2), witness {w}; computed height {h} [flag: stated as codimension 1]"))
}

fn c9_quadric_chain() -> Outcome {
    let i = fixtures::quadric_chain();
    let map = e(CremonaMap::new(i.ring(), i.gens().to_vec()))?;
    ensure!(e(depth_positive_check(&map))?, "depth(R/I) = 0");
    Ok(format!(
        "depth_positive_check = true; inverse degree bound {} (unverified without an inverse)",
        gabber_bound(2, 5)
    ))
}

fn c10_graphs() -> Outcome {
    let mut seen = Vec::new();
    for class in GraphClass::ALL {
        let report = e(classify_graph(&sympow_core::monomial::graph_ideal(&class.representative())))?;
        ensure!(report.class == class, "{class} classified as {}", report.class);
        let expected_ok = match class {
            GraphClass::Paw => {
                report.verdict == GraphVerdict::ExcludedHeightOne
                    && report.corresponding_ideal.to_string() == "(x1*x4, x2*x4)"
                    && report.corresponding_height == 1
            }
            GraphClass::Diamond => {
                report.verdict == GraphVerdict::ExcludedHeightOne
                    && report.corresponding_ideal.to_string() == "(x1*x3)"
                    && report.corresponding_height == 1
            }
            GraphClass::TrianglePlusIsolated => {
                report.verdict == GraphVerdict::ExcludedHeightOne
                    && report.corresponding_ideal.to_string() == "(x1*x4, x2*x4, x3*x4)"
            }
            GraphClass::Path4 | GraphClass::Cycle4 => {
                report.verdict == GraphVerdict::LocallyCi { connected: true, checked_locally_ci: true }
            }
            GraphClass::TwoDisjointEdges => {
                report.verdict == GraphVerdict::LocallyCi { connected: false, checked_locally_ci: true }
            }
            GraphClass::K4 => report.verdict == GraphVerdict::ExcludedComplete,
            _ => report.verdict == GraphVerdict::OutsideLemma,
        };
        ensure!(expected_ok, "{class}: {:?} with {}", report.verdict, report.corresponding_ideal);
        seen.push(class.name());
    }
    Ok(format!("{} classes: paw -> (x1x4,x2x4), diamond -> (x1x3) excluded; path4, cycle4 connected and locally CI", seen.len()))
}

fn c11_property_suites() -> Outcome {
    let mut rng = common::rng(11);
    let mut members = 0;
    for k in 0..100 {
        let ideal = common::random_homogeneous_ideal(&mut rng, 4);
        let t = rng.gen_range(1..=4);
        let p = common::membership_candidate(&mut rng, &ideal, t);
        let by_gb = e(ideal.contains(&p))?;
        ensure!(by_gb == common::macaulay_member(&ideal, &p), "instance {k}: {p} in {ideal}");
        members += by_gb as usize;
    }
    let mut resolved = 0;
    for k in 0..50 {
        let nvars = rng.gen_range(2..=5);
        let mono = common::random_squarefree(&mut rng, nvars, 5, 3);
        let ring = common::qq_ring(nvars);
        let ideal = e(mono.to_ideal(&ring))?;
        for n in 1..=2u32 {
            let fast = e(sympow_core::monomial_symbolic_power(&mono, n))?;
            let mut general = Ideal::unit(&ring);
            for p in e(minimal_primes(&mono))? {
                let prime = e(Ideal::new(&ring, p.vars().into_iter().map(|v| Poly::var(&ring, v))))?;
                general = e(general.intersect(&e(prime.power(n))?))?;
            }
            ensure!(e(general.equal(&e(fast.to_ideal(&ring))?))?, "instance {k}: fast path differs for {mono}, n={n}");
            let power = e(ideal.power(n))?;
            let sym = e(sympow_core::symbolic_power(&ideal, n, &SymbolicStrategy::MinimalPrimeIntersection))?;
            ensure!(e(sym.contains_ideal(&power))?, "instance {k}: I^{n} not inside I^({n})");
            let res = e(resolve(&power))?;
            let oracle = common::depth_by_linear_forms(&power, k);
            ensure!(res.pd() + oracle == nvars, "instance {k}: pd {} + depth {oracle} != {nvars}", res.pd());
            resolved += 1;
        }
    }
    Ok(format!(
        "100 membership instances agree with the Macaulay matrix ({members} members); 50 square-free ideals: fast path = general engine, I^n inside I^(n), Auslander-Buchsbaum on {resolved} resolutions"
    ))
}

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 11] = [
        ("1 tetrahedron depth table", c1_tetrahedron_depths),
        ("2 tetrahedron witness", c2_tetrahedron_witness),
        ("3 pentagon projective dimensions", c3_pentagon),
        ("4 Hankel ideal", c4_hankel),
        ("5 Macaulay curve", c5_macaulay_curve),
        ("6 binomial family d=2,3", c6_binomial_family),
        ("7 tetrahedral map", c7_tetrahedral_map),
        ("8 Dolgachev base ideal", c8_dolgachev),
        ("9 quadric chain depth", c9_quadric_chain),
        ("10 four-vertex graphs", c10_graphs),
        ("11 property suites", c11_property_suites),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({ms} ms): {detail}"),
            Err(detail) => {
                println!("FAIL criterion {name} ({ms} ms): {detail}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
