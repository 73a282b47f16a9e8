//! Exact combinatorics of monomial ideals: minimal primes of square-free
//! ideals via vertex covers, symbolic powers as intersections of prime
//! powers, localization at monomial primes, and the four-vertex graph
//! classifier.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::polyring::{Monomial, Poly, Ring, MAX_VARS};

/// Monomial ideal stored as its minimal generators, sorted by degree and
/// then by exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`. Panics if `nvars` exceeds [`MAX_VARS`].
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| b.exponents(nvars).cmp(a.exponents(nvars)))
        });
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        MonomialIdeal { nvars, gens }
    }

    /// Reads an ideal whose generators are all single terms.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let mut gens = Vec::with_capacity(ideal.gens().len());
        for g in ideal.gens() {
            if g.len() != 1 {
                return Err(Error::Precondition(format!("{g} is not a monomial")));
            }
            gens.push(*g.leading_monomial().unwrap());
        }
        Ok(MonomialIdeal::new(ideal.ring().nvars(), gens))
    }

    pub fn to_ideal(&self, ring: &Ring) -> Result<Ideal> {
        if ring.nvars() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, found: ring.nvars() });
        }
        Ideal::new(ring, self.gens.iter().map(|m| Poly::monomial(ring, *m)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|m| m.is_squarefree())
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|m| self.contains(m))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let lcms = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        MonomialIdeal::new(self.nvars, lcms)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let prods = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b)));
        MonomialIdeal::new(self.nvars, prods)
    }

    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::new(self.nvars, [Monomial::ONE]);
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    /// Height from the minimal vertex covers of the generator supports.
    pub fn height(&self) -> usize {
        if self.is_unit() {
            return self.nvars;
        }
        min_covers(self.nvars, &self.supports()).iter().map(|c| c.count_ones() as usize).min().unwrap_or(0)
    }

    fn supports(&self) -> Vec<u16> {
        self.gens.iter().map(|m| m.support()).collect()
    }

    fn require_squarefree(&self) -> Result<()> {
        if self.is_squarefree() {
            Ok(())
        } else {
            Err(Error::NotSquareFreeMonomial)
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_monomial(m, self.nvars, None))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formats a monomial with variable names, or `x1, x2, ...` when `names`
/// is absent.
pub fn fmt_monomial(m: &Monomial, nvars: usize, names: Option<&[String]>) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for i in 0..nvars {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        let name = names.map(|n| n[i].clone()).unwrap_or_else(|| format!("x{}", i + 1));
        parts.push(if e == 1 { name } else { format!("{name}^{e}") });
    }
    parts.join("*")
}

/// Prime generated by a set of variables, stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VarPrime {
    pub mask: u16,
}

impl VarPrime {
    pub fn from_vars(vars: &[usize]) -> Self {
        VarPrime { mask: vars.iter().fold(0, |acc, &v| acc | (1 << v)) }
    }

    pub fn vars(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&i| self.mask & (1 << i) != 0).collect()
    }

    pub fn height(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// `P^n`: all monomials of degree `n` in the variables of `P`.
    pub fn power(&self, nvars: usize, n: u32) -> MonomialIdeal {
        let vars = self.vars();
        let mut out = Vec::new();
        let mut exps = vec![0u16; nvars];
        fill_degree(&vars, 0, n, &mut exps, &mut out);
        MonomialIdeal::new(nvars, out)
    }

    pub fn to_ideal(&self, nvars: usize) -> MonomialIdeal {
        self.power(nvars, 1)
    }

    pub fn display(&self, names: &[String]) -> String {
        let vs: Vec<&str> = self.vars().iter().map(|&i| names[i].as_str()).collect();
        format!("({})", vs.join(","))
    }
}

fn fill_degree(vars: &[usize], k: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
    if k + 1 == vars.len() {
        exps[vars[k]] = left as u16;
        out.push(Monomial::new(exps));
        exps[vars[k]] = 0;
        return;
    }
    for e in 0..=left {
        exps[vars[k]] = e as u16;
        fill_degree(vars, k + 1, left - e, exps, out);
    }
    exps[vars[k]] = 0;
}

/// Inclusion-minimal variable sets meeting every support, in order of size
/// then mask.
fn min_covers(nvars: usize, supports: &[u16]) -> Vec<u16> {
    let mut masks: Vec<u16> = (0u32..(1u32 << nvars)).map(|m| m as u16).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut out: Vec<u16> = Vec::new();
    for s in masks {
        if supports.iter().all(|&g| g & s != 0) && out.iter().all(|&c| c & !s != 0) {
            out.push(s);
        }
    }
    out
}

/// Minimal primes of a square-free monomial ideal: the minimal vertex covers
/// of the generator hypergraph.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VarPrime>> {
    ideal.require_squarefree()?;
    if ideal.is_zero() {
        return Err(Error::Precondition("the zero ideal has no proper monomial prime cover".into()));
    }
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    Ok(min_covers(ideal.nvars, &ideal.supports()).into_iter().map(|mask| VarPrime { mask }).collect())
}

/// `I^(n) = ∩ P^n` over the minimal primes of a square-free `I`.
pub fn monomial_symbolic_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::Precondition("symbolic power exponent must be at least 1".into()));
    }
    let primes = minimal_primes(ideal)?;
    let mut acc: Option<MonomialIdeal> = None;
    for p in primes {
        let pn = p.power(ideal.nvars, n);
        acc = Some(match acc {
            None => pn,
            Some(a) => a.intersect(&pn),
        });
    }
    Ok(acc.unwrap_or_else(|| ideal.clone()))
}

/// Image of `I` after sending every variable outside `P` to 1.
pub fn localize_at_monomial_prime(ideal: &MonomialIdeal, prime: VarPrime) -> Result<MonomialIdeal> {
    if !ideal.gens.iter().all(|g| g.support() & prime.mask != 0) {
        return Err(Error::Precondition("prime does not contain the ideal".into()));
    }
    Ok(MonomialIdeal::new(ideal.nvars, ideal.gens.iter().map(|g| g.restrict(prime.mask))))
}

/// Monomial primes containing `I`, in order of size then mask.
pub fn monomial_primes_over(ideal: &MonomialIdeal) -> Vec<VarPrime> {
    let supports = ideal.supports();
    let mut masks: Vec<u16> = (1u32..(1u32 << ideal.nvars))
        .map(|m| m as u16)
        .filter(|&s| supports.iter().all(|&g| g & s != 0))
        .collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.into_iter().map(|mask| VarPrime { mask }).collect()
}

fn full_mask(nvars: usize) -> u16 {
    ((1u32 << nvars) - 1) as u16
}

/// Outcome of the locally-complete-intersection check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCiCheck {
    pub locally_ci: bool,
    /// First monomial prime where the localization is not a complete
    /// intersection, with its local generator count and height.
    pub witness: Option<(VarPrime, usize, usize)>,
    pub primes_checked: usize,
}

/// Checks `μ(I_P) = ht(I_P)` at every monomial prime `P ⊇ I`, `P ≠ 𝔪`.
pub fn is_locally_ci(ideal: &MonomialIdeal) -> Result<LocalCiCheck> {
    ideal.require_squarefree()?;
    let full = full_mask(ideal.nvars);
    let mut checked = 0;
    for p in monomial_primes_over(ideal) {
        if p.mask == full {
            continue;
        }
        checked += 1;
        let local = localize_at_monomial_prime(ideal, p)?;
        let (mu, ht) = (local.mu(), local.height());
        if mu != ht {
            return Ok(LocalCiCheck { locally_ci: false, witness: Some((p, mu, ht)), primes_checked: checked });
        }
    }
    Ok(LocalCiCheck { locally_ci: true, witness: None, primes_checked: checked })
}

/// Checks `μ(I_P) ≤ ht(P)` at every monomial prime `P ⊇ I`, including `𝔪`.
pub fn is_g_infinity(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_squarefree()?;
    for p in monomial_primes_over(ideal) {
        if localize_at_monomial_prime(ideal, p)?.mu() > p.height() {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Graphs on four vertices

/// Isomorphism classes of graphs on four vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    Empty,
    SingleEdge,
    TwoDisjointEdges,
    PathThree,
    Path4,
    TrianglePlusIsolated,
    Claw,
    Cycle4,
    Paw,
    Diamond,
    K4,
}

impl GraphClass {
    pub const ALL: [GraphClass; 11] = [
        GraphClass::Empty,
        GraphClass::SingleEdge,
        GraphClass::TwoDisjointEdges,
        GraphClass::PathThree,
        GraphClass::Path4,
        GraphClass::TrianglePlusIsolated,
        GraphClass::Claw,
        GraphClass::Cycle4,
        GraphClass::Paw,
        GraphClass::Diamond,
        GraphClass::K4,
    ];

    /// Sorted degree sequences separate all eleven classes.
    fn from_degrees(mut degs: [usize; 4]) -> GraphClass {
        degs.sort_unstable();
        match degs {
            [0, 0, 0, 0] => GraphClass::Empty,
            [0, 0, 1, 1] => GraphClass::SingleEdge,
            [1, 1, 1, 1] => GraphClass::TwoDisjointEdges,
            [0, 1, 1, 2] => GraphClass::PathThree,
            [1, 1, 2, 2] => GraphClass::Path4,
            [0, 2, 2, 2] => GraphClass::TrianglePlusIsolated,
            [1, 1, 1, 3] => GraphClass::Claw,
            [2, 2, 2, 2] => GraphClass::Cycle4,
            [1, 2, 2, 3] => GraphClass::Paw,
            [2, 2, 3, 3] => GraphClass::Diamond,
            [3, 3, 3, 3] => GraphClass::K4,
            _ => unreachable!("not a degree sequence of a simple graph on 4 vertices"),
        }
    }

    /// A representative edge set on vertices `0..4`, drawn as in the
    /// observation for the paw, diamond and triangle.
    pub fn representative(&self) -> Vec<(usize, usize)> {
        match self {
            GraphClass::Empty => vec![],
            GraphClass::SingleEdge => vec![(0, 1)],
            GraphClass::TwoDisjointEdges => vec![(0, 1), (2, 3)],
            GraphClass::PathThree => vec![(0, 1), (1, 2)],
            GraphClass::Path4 => vec![(0, 1), (1, 2), (2, 3)],
            GraphClass::TrianglePlusIsolated => vec![(0, 1), (0, 2), (1, 2)],
            GraphClass::Claw => vec![(0, 3), (1, 3), (2, 3)],
            GraphClass::Cycle4 => vec![(0, 1), (1, 2), (2, 3), (0, 3)],
            GraphClass::Paw => vec![(0, 1), (0, 2), (1, 2), (2, 3)],
            GraphClass::Diamond => vec![(0, 1), (0, 3), (1, 2), (2, 3), (1, 3)],
            GraphClass::K4 => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::Empty => "empty",
            GraphClass::SingleEdge => "single-edge",
            GraphClass::TwoDisjointEdges => "two-disjoint-edges",
            GraphClass::PathThree => "path3-plus-isolated",
            GraphClass::Path4 => "path4",
            GraphClass::TrianglePlusIsolated => "triangle-plus-isolated",
            GraphClass::Claw => "claw",
            GraphClass::Cycle4 => "cycle4",
            GraphClass::Paw => "paw",
            GraphClass::Diamond => "diamond",
            GraphClass::K4 => "K4",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What the four-vertex argument concludes for a graph class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GraphVerdict {
    /// Path, cycle or two disjoint edges: the ideal is locally a complete
    /// intersection (checked by localization), so the conjectured embedded
    /// component rules out the equality.
    LocallyCi { connected: bool, checked_locally_ci: bool },
    /// The complement edge ideal has height one.
    ExcludedHeightOne,
    /// Complete graph: no components at all.
    ExcludedComplete,
    /// Not one of the shapes the edge-ideal lemma allows.
    OutsideLemma,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub class: GraphClass,
    /// Edges on vertices numbered from 1.
    pub edges: Vec<(usize, usize)>,
    /// `I_G = ∩ (x_i, x_j)` over the non-edges.
    #[serde(serialize_with = "ser_display")]
    pub ideal: MonomialIdeal,
    /// Edge ideal of the complement graph.
    #[serde(serialize_with = "ser_display")]
    pub corresponding_ideal: MonomialIdeal,
    pub corresponding_height: usize,
    pub verdict: GraphVerdict,
    /// `I_G^2 = I_G^(2)`, computed on the monomial fast path; `None` for the
    /// unit ideal.
    pub square_is_symbolic: Option<bool>,
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `∩ (x_i, x_j)` over pairs that are not edges of `edges`.
pub fn graph_ideal(edges: &[(usize, usize)]) -> MonomialIdeal {
    let mut acc = MonomialIdeal::new(4, [Monomial::ONE]);
    for i in 0..4 {
        for j in i + 1..4 {
            if !has_edge(edges, i, j) {
                acc = acc.intersect(&VarPrime::from_vars(&[i, j]).to_ideal(4));
            }
        }
    }
    acc
}

fn has_edge(edges: &[(usize, usize)], i: usize, j: usize) -> bool {
    edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
}

fn connected(edges: &[(usize, usize)]) -> bool {
    let mut seen = 1u8;
    loop {
        let before = seen;
        for &(a, b) in edges {
            if seen & (1 << a) != 0 || seen & (1 << b) != 0 {
                seen |= (1 << a) | (1 << b);
            }
        }
        if seen == before {
            return seen == 0b1111;
        }
    }
}

/// Builds the graph of a radical unmixed height-two monomial ideal in four
/// variables (edge `{i,j}` iff `(x_i, x_j)` is not a component) and reports
/// its class. The unit ideal is read as the empty intersection, i.e. `K4`.
pub fn classify_graph(ideal: &MonomialIdeal) -> Result<GraphReport> {
    if ideal.nvars != 4 {
        return Err(Error::Precondition(format!("graph classifier needs 4 variables, got {}", ideal.nvars)));
    }
    let components = if ideal.is_unit() { Vec::new() } else { minimal_primes(ideal)? };
    if let Some(p) = components.iter().find(|p| p.height() != 2) {
        return Err(Error::Precondition(format!(
            "ideal is not unmixed of height 2: component on variables {:?}",
            p.vars().iter().map(|v| v + 1).collect::<Vec<_>>()
        )));
    }
    let mut edges = Vec::new();
    let mut complement = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            if components.contains(&VarPrime::from_vars(&[i, j])) {
                complement.push(Monomial::var(i).mul(&Monomial::var(j)));
            } else {
                edges.push((i, j));
            }
        }
    }
    let mut degs = [0usize; 4];
    for &(a, b) in &edges {
        degs[a] += 1;
        degs[b] += 1;
    }
    let class = GraphClass::from_degrees(degs);
    let corresponding = MonomialIdeal::new(4, complement);
    let corresponding_height = if corresponding.is_zero() { 0 } else { corresponding.height() };
    let verdict = match class {
        GraphClass::Path4 | GraphClass::Cycle4 | GraphClass::TwoDisjointEdges => GraphVerdict::LocallyCi {
            connected: connected(&edges),
            checked_locally_ci: is_locally_ci(ideal)?.locally_ci,
        },
        GraphClass::Paw | GraphClass::Diamond | GraphClass::TrianglePlusIsolated => GraphVerdict::ExcludedHeightOne,
        GraphClass::K4 => GraphVerdict::ExcludedComplete,
        _ => GraphVerdict::OutsideLemma,
    };
    let square_is_symbolic = if ideal.is_unit() {
        None
    } else {
        Some(monomial_symbolic_power(ideal, 2)? == ideal.power(2))
    };
    Ok(GraphReport {
        class,
        edges: edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        ideal: ideal.clone(),
        corresponding_ideal: corresponding,
        corresponding_height,
        verdict,
        square_is_symbolic,
    })
}
