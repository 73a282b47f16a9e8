//! Ideals of a polynomial ring and the arithmetic built on Gröbner bases:
//! powers, sums, products, intersection, colon, saturation, elimination,
//! minimal generators and dimension.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, GuardKind, Result};
use crate::groebner::{groebner_with, GroebnerBasis, Guards};
use crate::polyring::{parse_poly_list, Monomial, MonomialOrder, Poly, Ring, RingSpec};

/// Largest number of colon steps a saturation may take.
pub const SATURATION_ITERATION_LIMIT: usize = 64;

type GbCache = Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>;

/// An ideal given by generators, with Gröbner bases cached per order.
///
/// Clones share the cache. Ideals derived from this one inherit its guards.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    guards: Guards,
    cache: GbCache,
}

/// Dimension data of `R/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealProfile {
    pub nvars: usize,
    pub dim: usize,
    pub height: usize,
    /// Minimal number of generators; only defined for homogeneous ideals.
    pub mu: Option<usize>,
}

impl Ideal {
    /// Builds the ideal generated by `gens`, dropping zeros. Every generator
    /// must live over the same field and variables as `ring`.
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Poly>) -> Result<Ideal> {
        let mut out = Vec::new();
        for g in gens {
            if !g.is_zero() {
                out.push(g.to_ring(ring)?);
            }
        }
        Ok(Ideal::from_parts(ring, out, Guards::default()))
    }

    fn from_parts(ring: &Ring, gens: Vec<Poly>, guards: Guards) -> Ideal {
        Ideal { ring: ring.clone(), gens, guards, cache: Arc::default() }
    }

    fn derived(&self, gens: Vec<Poly>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal::from_parts(&self.ring, gens, self.guards)
    }

    /// Parses a comma separated generator list.
    pub fn parse(ring: &Ring, text: &str) -> Result<Ideal> {
        Ideal::new(ring, parse_poly_list(ring, text)?)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::from_parts(ring, Vec::new(), Guards::default())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::from_parts(ring, vec![Poly::one(ring)], Guards::default())
    }

    /// The ideal of all variables.
    pub fn irrelevant(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect();
        Ideal::from_parts(ring, gens, Guards::default())
    }

    pub fn with_guards(mut self, guards: Guards) -> Ideal {
        self.guards = guards;
        self.cache = Arc::default();
        self
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn guards(&self) -> &Guards {
        &self.guards
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// All generators are monomials (terms).
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring.same_base(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Reduced Gröbner basis under `order`, computed once per order.
    pub fn gb_in(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner_with(&self.ring, &self.gens, order, &self.guards)?);
        self.cache.lock().unwrap().entry(order).or_insert_with(|| gb.clone());
        Ok(gb)
    }

    /// Reduced Gröbner basis under graded reverse lex.
    pub fn gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.gb_in(MonomialOrder::GradedReverseLex)
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        self.gb()?.contains(p)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        let gb = self.gb()?;
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of reduced graded reverse lex bases.
    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.gb()?.gens() == other.gb()?.gens())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        for g in &other.gens {
            gens.push(g.to_ring(&self.ring)?);
        }
        Ok(self.derived(gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.checked_mul(&g.to_ring(&self.ring)?)?.monic());
            }
        }
        Ok(self.derived(dedup(gens)))
    }

    /// `I^n`, generated by all products of `n` generators.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Err(Error::Precondition("power exponent must be at least 1".into()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut gens = Vec::new();
        for combo in (0..self.gens.len()).combinations_with_replacement(n as usize) {
            let mut p = self.gens[combo[0]].clone();
            for &i in &combo[1..] {
                p = &p * &self.gens[i];
            }
            if let Some(d) = p.degree() {
                self.guards.check_degree(d, "power generator")?;
            }
            gens.push(p.monic());
        }
        Ok(self.derived(dedup(gens)))
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::from_parts(&self.ring, Vec::new(), self.guards));
        }
        if self.contains_ideal(other)? {
            return Ok(self.derived(other.gens.iter().map(|g| g.to_ring(&self.ring)).collect::<Result<_>>()?));
        }
        if other.contains_ideal(self)? {
            return Ok(self.clone());
        }
        let big = self.ring.with_elimination_vars(1)?;
        let t = Poly::var(&big, 0);
        let one_minus_t = &Poly::one(&big) - &t;
        let lift = |p: &Poly| p.map_monomials(&big, |m| m.shift_up(1));
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&t * &lift(f));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &lift(g));
        }
        let gb = groebner_with(&big, &gens, big.order(), &self.guards)?;
        Ok(self.derived(project_out(&gb, 1, &self.ring)))
    }

    /// `I ∩ k[x_k, ..., x_{d-1}]`, the generators returned in the ring on the
    /// remaining variables.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        let d = self.ring.nvars();
        if k == 0 || k >= d {
            return Err(Error::Precondition(format!("eliminate needs 0 < k < {d}, got {k}")));
        }
        let gb = self.gb_in(MonomialOrder::BlockElimination(k))?;
        let small = self.ring.drop_front(k)?;
        Ok(Ideal::from_parts(&small, project_out(&gb, k, &small), self.guards))
    }

    /// `(I : g)`.
    pub fn colon_poly(&self, g: &Poly) -> Result<Ideal> {
        let g = g.to_ring(&self.ring)?;
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring).with_guards(self.guards));
        }
        if g.is_constant() || self.is_zero() {
            return Ok(self.clone());
        }
        if let Some(i) = single_variable(&g) {
            if self.is_homogeneous() {
                return self.colon_variable(i);
            }
        }
        self.colon_by_division(&g)
    }

    /// `(I : g) = (I ∩ (g)) / g`, valid for every `g`.
    pub fn colon_by_division(&self, g: &Poly) -> Result<Ideal> {
        let principal = self.derived(vec![g.clone()]);
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for h in &meet.gens {
            let q = h.div_exact(g).ok_or_else(|| {
                Error::Precondition(format!("intersection element {h} is not a multiple of {g}"))
            })?;
            gens.push(q);
        }
        Ok(self.derived(gens))
    }

    /// `(I : x_i)` for homogeneous `I`: with `x_i` the smallest variable in
    /// graded reverse lex, dividing each basis element by `x_i` once where
    /// possible gives a basis of the colon.
    fn colon_variable(&self, i: usize) -> Result<Ideal> {
        let n = self.ring.nvars();
        let perm: Vec<usize> = (0..n).filter(|&j| j != i).chain([i]).collect();
        let vars = perm.iter().map(|&j| self.ring.vars()[j].clone()).collect();
        let moved = RingSpec::new(self.ring.field(), vars)?;
        let to_moved = |m: &Monomial| permute(m, &perm, n);
        let gens: Vec<Poly> = self.gens.iter().map(|g| g.map_monomials(&moved, to_moved)).collect();
        let gb = groebner_with(&moved, &gens, MonomialOrder::GradedReverseLex, &self.guards)?;
        let last = Monomial::var(n - 1);
        let mut inverse = vec![0; n];
        for (pos, &j) in perm.iter().enumerate() {
            inverse[j] = pos;
        }
        let out = gb
            .gens()
            .iter()
            .map(|g| {
                let divided = if last.divides(g.leading_monomial().unwrap()) {
                    g.map_monomials(&moved, |m| m.div(&last).unwrap())
                } else {
                    g.clone()
                };
                divided.map_monomials(&self.ring, |m| permute(m, &inverse, n))
            })
            .collect();
        Ok(self.derived(out))
    }

    /// `(I : J) = ∩_{g ∈ J} (I : g)`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        if other.is_zero() {
            return Ok(Ideal::unit(&self.ring).with_guards(self.guards));
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_poly(g)?;
            if c.contains_ideal(self)? && self.contains_ideal(&c)? {
                // (I : g) = I for one generator forces (I : J) = I.
                return Ok(self.clone());
            }
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `(I : J^∞)` together with the least `s` with `(I : J^s) = (I : J^{s+1})`.
    pub fn saturate(&self, other: &Ideal) -> Result<(Ideal, usize)> {
        let start = Instant::now();
        let mut current = self.clone();
        for s in 0..SATURATION_ITERATION_LIMIT {
            self.guards.check_time(start, "saturation")?;
            let next = current.colon(other)?;
            // current ⊆ next always holds, so one containment decides equality.
            if current.contains_ideal(&next)? {
                return Ok((current, s));
            }
            current = next;
        }
        Err(Error::GuardAbort {
            guard: GuardKind::Iterations,
            detail: format!("saturation did not stabilize within {SATURATION_ITERATION_LIMIT} colon steps"),
        })
    }

    /// `(I : 𝔪^∞)` with 𝔪 the ideal of all variables.
    pub fn saturate_irrelevant(&self) -> Result<(Ideal, usize)> {
        self.saturate(&Ideal::irrelevant(&self.ring))
    }

    /// A minimal homogeneous generating set: generators in order of degree
    /// (input order among equal degrees), each kept only if it is not in the
    /// ideal of those already kept.
    pub fn min_gens(&self) -> Result<(usize, Vec<Poly>)> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let mut sorted: Vec<&Poly> = self.gens.iter().collect();
        sorted.sort_by_key(|g| g.degree().unwrap());
        let mut kept: Vec<Poly> = Vec::new();
        for g in sorted {
            let inside = !kept.is_empty()
                && groebner_with(&self.ring, &kept, MonomialOrder::GradedReverseLex, &self.guards)?
                    .contains(g)?;
            if !inside {
                kept.push(g.clone());
            }
        }
        Ok((kept.len(), kept))
    }

    /// Krull dimension of `R/I` from the leading monomials: the size of a
    /// largest variable set containing the support of no leading monomial.
    pub fn dimension(&self) -> Result<usize> {
        let gb = self.gb()?;
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let supports: Vec<u16> = gb.leading_monomials().map(|m| m.support()).collect();
        Ok(max_independent_set(self.ring.nvars(), &supports))
    }

    pub fn height(&self) -> Result<usize> {
        Ok(self.ring.nvars() - self.dimension()?)
    }

    pub fn profile(&self) -> Result<IdealProfile> {
        let dim = self.dimension()?;
        let mu = if self.is_homogeneous() { Some(self.min_gens()?.0) } else { None };
        let nvars = self.ring.nvars();
        Ok(IdealProfile { nvars, dim, height: nvars - dim, mu })
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.gens.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self} in {}", self.ring)
    }
}

fn dedup(gens: Vec<Poly>) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_zero() && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// Basis elements free of the first `k` variables, shifted into `target`.
fn project_out(gb: &GroebnerBasis, k: usize, target: &Ring) -> Vec<Poly> {
    let mask: u16 = ((1u32 << k) - 1) as u16;
    gb.gens()
        .iter()
        .filter(|g| g.support() & mask == 0)
        .map(|g| g.map_monomials(target, |m| m.shift_down(k)))
        .collect()
}

fn single_variable(g: &Poly) -> Option<usize> {
    if g.len() != 1 {
        return None;
    }
    let m = g.leading_monomial()?;
    if m.degree() == 1 {
        Some(m.support().trailing_zeros() as usize)
    } else {
        None
    }
}

/// Monomial whose exponent at position `p` is the old exponent at `perm[p]`.
fn permute(m: &Monomial, perm: &[usize], n: usize) -> Monomial {
    let exps: Vec<u16> = (0..n).map(|p| m.exp(perm[p])).collect();
    Monomial::new(&exps)
}

/// Largest `|S|` over variable subsets `S` that contain no support in
/// `supports`.
pub(crate) fn max_independent_set(nvars: usize, supports: &[u16]) -> usize {
    let mut best = 0;
    for s in 0u32..(1u32 << nvars) {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        let s = s as u16;
        if supports.iter().all(|&m| m & !s != 0) {
            best = size;
        }
    }
    best
}
