use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sympow_core::{
    compare, fixtures, groebner, monomial_symbolic_power, resolve, Justification, MonomialIdeal, MonomialOrder,
    SymbolicStrategy,
};

fn bases(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner");
    for (name, ideal) in [("macaulay-curve", fixtures::macaulay_curve()), ("hankel-cubed", fixtures::hankel().power(3).unwrap())] {
        for order in [MonomialOrder::GradedReverseLex, MonomialOrder::Lex] {
            g.bench_function(BenchmarkId::new(name, format!("{order:?}")), |b| {
                b.iter(|| groebner(ideal.ring(), black_box(ideal.gens()), order).unwrap())
            });
        }
    }
    g.finish();
}

fn resolutions(c: &mut Criterion) {
    let mut g = c.benchmark_group("resolve-pentagon-power");
    g.sample_size(10);
    let p = fixtures::pentagon();
    for n in 1..=3 {
        let pw = p.power(n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &pw, |b, i| b.iter(|| resolve(black_box(i)).unwrap()));
    }
    g.finish();
}

fn comparisons(c: &mut Criterion) {
    let mut g = c.benchmark_group("compare");
    g.sample_size(10);
    let t = fixtures::tetrahedron();
    for n in 2..=3 {
        g.bench_with_input(BenchmarkId::new("tetrahedron/prime-intersection", n), &n, |b, &n| {
            b.iter(|| compare(&t, n, &SymbolicStrategy::MinimalPrimeIntersection).unwrap())
        });
    }
    let fam = fixtures::binomial_family(3);
    let sat = SymbolicStrategy::SaturationAtIrrelevant(Justification::UserOverride("one-dimensional and saturated".into()));
    g.bench_function("binomial-family-3/saturation", |b| b.iter(|| compare(&fam, 3, &sat).unwrap()));
    g.finish();
}

fn monomial(c: &mut Criterion) {
    let mut g = c.benchmark_group("monomial-symbolic-power");
    let p = MonomialIdeal::from_ideal(&fixtures::pentagon()).unwrap();
    for n in [2, 4, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| monomial_symbolic_power(black_box(&p), n).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bases, resolutions, comparisons, monomial);
criterion_main!(benches);
