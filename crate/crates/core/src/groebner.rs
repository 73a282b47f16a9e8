//! Buchberger's algorithm with the sugar selection strategy and
//! Gebauer–Möller pair elimination, producing reduced Gröbner bases.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, GuardKind, Result};
use crate::polyring::poly::add_mul_terms;
use crate::polyring::{Coeff, Monomial, MonomialOrder, Poly, Ring};

/// Resource limits for a single Gröbner basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest total degree allowed for a critical pair or input.
    pub max_degree: u32,
    /// Soft wall-clock budget, checked between pair reductions.
    pub time_budget: Option<Duration>,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { max_degree: 80, time_budget: Some(Duration::from_secs(60)) }
    }
}

impl Guards {
    pub fn unlimited() -> Self {
        Guards { max_degree: u32::MAX, time_budget: None }
    }

    pub(crate) fn check_degree(&self, deg: u32, what: &str) -> Result<()> {
        if deg > self.max_degree {
            return Err(Error::GuardAbort {
                guard: GuardKind::Degree,
                detail: format!("{what} of degree {deg} exceeds bound {}", self.max_degree),
            });
        }
        Ok(())
    }

    pub(crate) fn check_time(&self, start: Instant, what: &str) -> Result<()> {
        if let Some(budget) = self.time_budget {
            if start.elapsed() > budget {
                return Err(Error::GuardAbort {
                    guard: GuardKind::Time,
                    detail: format!("{what} exceeded {:.1}s", budget.as_secs_f64()),
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub pairs_created: usize,
    pub pairs_eliminated: usize,
    pub reductions: usize,
    pub zero_reductions: usize,
}

/// Reduced Gröbner basis: monic, interreduced, sorted by descending leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    gens: Vec<Poly>,
    stats: GbStats,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.gens.iter().filter_map(|g| g.leading_monomial())
    }

    /// The basis of the whole ring is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Remainder of `p` on division by the basis. `p` may use any order of
    /// the same ring; the result uses the basis' order.
    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        let p = p.to_ring(&self.ring)?;
        let refs: Vec<&Poly> = self.gens.iter().collect();
        Ok(reduce_full(&p, &refs))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

/// Free-function form of [`GroebnerBasis::normal_form`].
pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Result<Poly> {
    gb.normal_form(p)
}

fn find_reducer<'a>(m: &Monomial, basis: &[&'a Poly]) -> Option<&'a Poly> {
    basis.iter().copied().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Full reduction of `p` modulo `basis` (every term is reduced).
pub(crate) fn reduce_full(p: &Poly, basis: &[&Poly]) -> Poly {
    let ring = p.ring().clone();
    let field = ring.field();
    let order = ring.order();
    let mut rest: Vec<(Monomial, Coeff)> = p.terms().to_vec();
    let mut start = 0;
    let mut remainder = Vec::new();
    while start < rest.len() {
        let (m, c) = &rest[start];
        match find_reducer(m, basis) {
            Some(g) => {
                let (gm, gc) = &g.terms()[0];
                let q = m.div(gm).unwrap();
                let factor = field.neg(&field.div(c, gc));
                rest = add_mul_terms(field, order, &rest[start..], &factor, &q, g.terms());
                start = 0;
            }
            None => {
                remainder.push(rest[start].clone());
                start += 1;
            }
        }
    }
    Poly::from_sorted_terms(&ring, remainder)
}

/// Only the leading term is reduced until it is irreducible.
fn reduce_top(p: &Poly, basis: &[&Poly]) -> Poly {
    let field = p.ring().field();
    let mut h = p.clone();
    while let Some((m, c)) = h.terms().first() {
        let Some(g) = find_reducer(m, basis) else { break };
        let (gm, gc) = &g.terms()[0];
        let q = m.div(gm).unwrap();
        h = h.sub_mul_term(&field.div(c, gc), &q, g);
    }
    h
}

pub fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let field = f.ring().field();
    let (fm, fc) = &f.terms()[0];
    let (gm, gc) = &g.terms()[0];
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &field.inv(fc));
    a.sub_mul_term(&field.inv(gc), &l.div(gm).unwrap(), g)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Buchberger<'g> {
    ring: Ring,
    guards: &'g Guards,
    polys: Vec<Poly>,
    sugars: Vec<u32>,
    /// Indices currently in the basis.
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    stats: GbStats,
}

impl Buchberger<'_> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let si = self.sugars[i] + lcm.degree() - self.lm(i).degree();
        let sj = self.sugars[j] + lcm.degree() - self.lm(j).degree();
        si.max(sj)
    }

    /// Gebauer–Möller update for a new basis element `h`.
    fn update(&mut self, h: usize) {
        let hm = *self.lm(h);
        let candidates: Vec<Pair> = self
            .basis
            .iter()
            .map(|&g| {
                let lcm = hm.lcm(self.lm(g));
                Pair { i: g, j: h, sugar: self.pair_sugar(g, h, &lcm), lcm }
            })
            .collect();
        self.stats.pairs_created += candidates.len();

        // New pairs: keep (g, h) if its leading monomials are coprime or no
        // other new pair has an lcm dividing its lcm; coprime ones are then
        // dropped by the product criterion.
        let mut pending: std::collections::VecDeque<Pair> = candidates.into();
        let mut accepted: Vec<Pair> = Vec::new();
        while let Some(p) = pending.pop_front() {
            let coprime = self.lm(p.i).is_coprime(&hm);
            let divides_p = |q: &Pair| q.lcm.divides(&p.lcm);
            if coprime || (!pending.iter().any(divides_p) && !accepted.iter().any(divides_p)) {
                accepted.push(p);
            } else {
                self.stats.pairs_eliminated += 1;
            }
        }
        let mut kept = Vec::with_capacity(accepted.len());
        for p in accepted {
            if self.lm(p.i).is_coprime(&hm) {
                self.stats.pairs_eliminated += 1;
            } else {
                kept.push(p);
            }
        }

        // Old pairs made redundant by h.
        let before = self.pairs.len();
        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            !(hm.divides(&p.lcm)
                && lm(p.i).lcm(&hm) != p.lcm
                && lm(p.j).lcm(&hm) != p.lcm)
        });
        self.stats.pairs_eliminated += before - self.pairs.len();
        self.pairs.extend(kept);

        let polys = &self.polys;
        self.basis.retain(|&g| !hm.divides(polys[g].leading_monomial().unwrap()));
        self.basis.push(h);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn basis_refs(&self) -> Vec<&Poly> {
        self.basis.iter().map(|&i| &self.polys[i]).collect()
    }

    fn add(&mut self, p: Poly, sugar: u32) -> Result<()> {
        self.guards.check_degree(p.degree().unwrap().max(sugar), "basis element")?;
        let p = p.monic();
        self.polys.push(p);
        self.sugars.push(sugar);
        self.update(self.polys.len() - 1);
        Ok(())
    }

    fn run(&mut self, start: Instant) -> Result<()> {
        while let Some(pair) = self.select() {
            self.guards.check_time(start, "Gröbner basis")?;
            self.guards.check_degree(pair.sugar, "critical pair")?;
            let s = s_polynomial(&self.polys[pair.i], &self.polys[pair.j]);
            self.stats.reductions += 1;
            let h = {
                let refs = self.basis_refs();
                let top = reduce_top(&s, &refs);
                if top.is_zero() {
                    top
                } else {
                    reduce_full(&top, &refs)
                }
            };
            if h.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if h.is_constant() {
                self.basis.clear();
                self.pairs.clear();
                self.polys.push(Poly::one(&self.ring));
                self.sugars.push(0);
                self.basis.push(self.polys.len() - 1);
                return Ok(());
            }
            self.add(h, pair.sugar)?;
        }
        Ok(())
    }
}

/// Turns a Gröbner basis into the reduced one.
fn interreduce(ring: &Ring, gens: Vec<Poly>) -> Vec<Poly> {
    let order = ring.order();
    let mut minimal: Vec<Poly> = Vec::new();
    let mut sorted = gens;
    sorted.sort_by(|a, b| crate::polyring::poly::cmp_leading(order, a, b));
    for g in sorted {
        let lm = *g.leading_monomial().unwrap();
        if minimal.iter().any(|h| h.leading_monomial().unwrap().divides(&lm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Poly> =
            minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| p).collect();
        reduced.push(reduce_full(&minimal[k], &others).monic());
    }
    reduced.sort_by(|a, b| crate::polyring::poly::cmp_leading(order, b, a));
    reduced
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`,
/// with default guards.
pub fn groebner(ring: &Ring, gens: &[Poly], order: MonomialOrder) -> Result<GroebnerBasis> {
    groebner_with(ring, gens, order, &Guards::default())
}

pub fn groebner_with(
    ring: &Ring,
    gens: &[Poly],
    order: MonomialOrder,
    guards: &Guards,
) -> Result<GroebnerBasis> {
    let start = Instant::now();
    let target = if ring.order() == order { ring.clone() } else { ring.reordered(order) };
    let mut inputs = Vec::with_capacity(gens.len());
    for g in gens {
        let g = g.to_ring(&target)?;
        if !g.is_zero() {
            guards.check_degree(g.degree().unwrap(), "input polynomial")?;
            inputs.push(g);
        }
    }
    // Deterministic insertion: by increasing leading monomial.
    inputs.sort_by(|a, b| crate::polyring::poly::cmp_leading(order, a, b));
    inputs.dedup();

    let mut bb = Buchberger {
        ring: target.clone(),
        guards,
        polys: Vec::new(),
        sugars: Vec::new(),
        basis: Vec::new(),
        pairs: Vec::new(),
        stats: GbStats::default(),
    };
    for g in inputs {
        let h = {
            let refs = bb.basis_refs();
            reduce_full(&g, &refs)
        };
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(GroebnerBasis { gens: vec![Poly::one(&target)], ring: target, stats: bb.stats });
        }
        let sugar = g.degree().unwrap();
        bb.add(h, sugar)?;
    }
    bb.run(start)?;
    let gens: Vec<Poly> = bb.basis.iter().map(|&i| bb.polys[i].clone()).collect();
    let gens = interreduce(&target, gens);
    Ok(GroebnerBasis { ring: target, gens, stats: bb.stats })
}

/// Checks Buchberger's criterion directly: every S-polynomial of `gb`
/// reduces to zero. Independent of the pair bookkeeping used to build it.
pub fn verify_buchberger_criterion(gb: &GroebnerBasis) -> bool {
    let refs: Vec<&Poly> = gb.gens.iter().collect();
    for i in 0..gb.gens.len() {
        for j in i + 1..gb.gens.len() {
            let s = s_polynomial(&gb.gens[i], &gb.gens[j]);
            if !reduce_full(&s, &refs).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Reduced-basis shape: monic, no term divisible by another leading term.
pub fn is_reduced(gb: &GroebnerBasis) -> bool {
    gb.gens.iter().enumerate().all(|(i, g)| {
        g.leading_coeff().is_some_and(|c| c.is_one())
            && gb.gens.iter().enumerate().all(|(j, h)| {
                i == j
                    || !g
                        .terms()
                        .iter()
                        .any(|(m, _)| h.leading_monomial().unwrap().divides(m))
            })
    })
}
