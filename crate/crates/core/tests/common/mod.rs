//! Random instances and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sympow_core::polyring::Coeff;
use sympow_core::{Ideal, Monomial, MonomialIdeal, Poly, Rational, Ring, RingSpec};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn qq_ring(nvars: usize) -> Ring {
    let names = ["x", "y", "z", "w", "u", "v"];
    RingSpec::new(sympow_core::Field::Rational, names[..nvars].iter().map(|s| s.to_string()).collect()).unwrap()
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u16, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d as u16, &mut Vec::new(), &mut out);
    out
}

pub fn random_form(rng: &mut ChaCha8Rng, ring: &Ring, degree: u32, max_terms: usize) -> Poly {
    let monos = monomials_of_degree(ring.nvars(), degree);
    let k = rng.gen_range(1..=max_terms);
    let terms = (0..k).map(|_| {
        let m = monos[rng.gen_range(0..monos.len())];
        let c = rng.gen_range(-3i64..=3);
        (m, ring.field().from_int(if c == 0 { 1 } else { c }))
    });
    Poly::from_terms(ring, terms)
}

/// Homogeneous ideal in at most 4 variables with generators of degree at
/// most `max_deg`.
pub fn random_homogeneous_ideal(rng: &mut ChaCha8Rng, max_deg: u32) -> Ideal {
    let n = rng.gen_range(2..=4);
    let ring = qq_ring(n);
    let k = rng.gen_range(1..=3);
    let gens: Vec<Poly> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_form(rng, &ring, d, 3)
        })
        .filter(|p| !p.is_zero())
        .collect();
    Ideal::new(&ring, gens).unwrap()
}

/// A form of degree `t` that lies in `I` about half the time.
pub fn membership_candidate(rng: &mut ChaCha8Rng, ideal: &Ideal, t: u32) -> Poly {
    let ring = ideal.ring();
    let mut p = Poly::zero(ring);
    for g in ideal.gens() {
        let dg = g.degree().unwrap();
        if dg <= t && rng.gen_bool(0.7) {
            p = &p + &(&random_form(rng, ring, t - dg, 2) * g);
        }
    }
    if rng.gen_bool(0.5) {
        p = &p + &random_form(rng, ring, t, 1);
    }
    p
}

fn to_big(c: &Coeff) -> BigRational {
    match c {
        Coeff::Q(q) => BigRational::new(q.numer(), q.denom()),
        Coeff::P(v) => BigRational::from_integer(BigInt::from(*v)),
    }
}

/// Membership of a form in a homogeneous ideal by row-reducing the degree
/// slice spanned by all monomial multiples of the generators.
pub fn macaulay_member(ideal: &Ideal, p: &Poly) -> bool {
    if p.is_zero() {
        return true;
    }
    let t = p.degree().unwrap();
    assert!(p.is_homogeneous());
    let n = ideal.ring().nvars();
    let cols: HashMap<Monomial, usize> =
        monomials_of_degree(n, t).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    let row_of = |q: &Poly| -> Vec<BigRational> {
        let mut row = vec![BigRational::zero(); cols.len()];
        for (m, c) in q.terms() {
            row[cols[m]] = to_big(c);
        }
        row
    };
    let mut rows = Vec::new();
    for g in ideal.gens() {
        let dg = g.degree().unwrap();
        if dg > t {
            continue;
        }
        for m in monomials_of_degree(n, t - dg) {
            rows.push(row_of(&g.mul_monomial(&m)));
        }
    }
    // Echelon basis: pivot column -> row with a one at that pivot.
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let reduce = |v: &mut Vec<BigRational>, basis: &[(usize, Vec<BigRational>)]| {
        for (piv, b) in basis {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
    };
    for mut r in rows {
        reduce(&mut r, &basis);
        if let Some(piv) = r.iter().position(|x| !x.is_zero()) {
            let inv = BigRational::one() / r[piv].clone();
            for x in r.iter_mut() {
                *x *= &inv;
            }
            for (_, b) in basis.iter_mut() {
                if !b[piv].is_zero() {
                    let f = b[piv].clone();
                    for (x, y) in b.iter_mut().zip(&r) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
            basis.push((piv, r));
        }
    }
    let mut v = row_of(p);
    reduce(&mut v, &basis);
    v.iter().all(|x| x.is_zero())
}

/// `depth R/I` as the length of a regular sequence of random linear forms,
/// each tested by `(J : l) = J`.
pub fn depth_by_linear_forms(ideal: &Ideal, seed: u64) -> usize {
    let mut rng = rng(seed);
    let ring = ideal.ring();
    let mut current = ideal.clone();
    let mut depth = 0;
    loop {
        if current.is_unit().unwrap() {
            return depth;
        }
        let l = Poly::from_terms(
            ring,
            (0..ring.nvars()).map(|i| (Monomial::var(i), ring.field().from_int(rng.gen_range(1..=97)))),
        );
        let colon = current.colon_by_division(&l).unwrap();
        if !colon.contains_ideal(&current).unwrap() || !current.contains_ideal(&colon).unwrap() {
            return depth;
        }
        depth += 1;
        current = current.sum(&Ideal::new(ring, [l]).unwrap()).unwrap();
    }
}

/// Square-free monomial ideal on `nvars` variables with generators of
/// degree 1..=`max_deg`.
pub fn random_squarefree(rng: &mut ChaCha8Rng, nvars: usize, max_gens: usize, max_deg: usize) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| {
        let deg = rng.gen_range(1..=max_deg.min(nvars));
        let mut vars: Vec<usize> = (0..nvars).collect();
        for i in 0..deg {
            let j = rng.gen_range(i..nvars);
            vars.swap(i, j);
        }
        let mut e = vec![0u16; nvars];
        for &v in &vars[..deg] {
            e[v] = 1;
        }
        Monomial::new(&e)
    });
    MonomialIdeal::new(nvars, gens)
}

/// Ideal of a nonempty set of coordinate points of `P^{n-1}`.
pub fn coordinate_points(rng: &mut ChaCha8Rng, nvars: usize) -> MonomialIdeal {
    let mut acc = MonomialIdeal::new(nvars, [Monomial::ONE]);
    let mut any = false;
    for i in 0..nvars {
        if rng.gen_bool(0.6) || (!any && i + 1 == nvars) {
            any = true;
            let prime = MonomialIdeal::new(nvars, (0..nvars).filter(|&j| j != i).map(Monomial::var));
            acc = acc.intersect(&prime);
        }
    }
    acc
}

pub fn rational(n: i64, d: i64) -> Coeff {
    Coeff::Q(Rational::new(n, d))
}
