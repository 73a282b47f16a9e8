//! Membership re-checks that bypass the symbolic and cremona modules: fresh
//! lex bases of brute-force products.

use sympow_core::{groebner, minimal_primes, Ideal, MonomialIdeal, MonomialOrder, Poly, Result};

/// All `n`-fold products of the generators.
pub fn power_gens(i: &Ideal, n: u32) -> Vec<Poly> {
    let mut acc = vec![Poly::one(i.ring())];
    for _ in 0..n {
        acc = acc.iter().flat_map(|a| i.gens().iter().map(move |g| a * g)).collect();
    }
    acc
}

pub fn member(i: &Ideal, gens: &[Poly], p: &Poly) -> Result<bool> {
    groebner(i.ring(), gens, MonomialOrder::Lex)?.contains(p)
}

pub fn in_power(i: &Ideal, n: u32, p: &Poly) -> Result<bool> {
    member(i, &power_gens(i, n), p)
}

/// `p ∈ P^n` for each minimal prime of a square-free monomial ideal.
pub fn in_prime_powers(i: &Ideal, n: u32, p: &Poly) -> Result<bool> {
    let mono = MonomialIdeal::from_ideal(i)?;
    for prime in minimal_primes(&mono)? {
        let q = Ideal::new(i.ring(), prime.vars().into_iter().map(|v| Poly::var(i.ring(), v)))?;
        if !member(i, &power_gens(&q, n), p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x_j^k p ∈ I^n` for every variable with `k` generous: `p` lies in the
/// saturation of `I^n` by the maximal ideal.
pub fn in_saturated_power(i: &Ideal, n: u32, p: &Poly, exponent: usize) -> Result<bool> {
    let gens = power_gens(i, n);
    let k = (exponent.max(1) * 8) as u32;
    for j in 0..i.ring().nvars() {
        if !member(i, &gens, &(p * &Poly::var(i.ring(), j).pow(k)))? {
            return Ok(false);
        }
    }
    Ok(true)
}
