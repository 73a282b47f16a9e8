//! Graded free resolutions of `R/I` by Schreyer's algorithm, their
//! minimalization, Betti tables, and the depth-based predicates.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Guards;
use crate::ideal::Ideal;
use crate::polyring::{Coeff, Field, Monomial, MonomialOrder, Poly, Ring};

/// Graded Betti numbers `b_{i,j}`: rank of the `i`-th free module of a
/// minimal resolution in internal degree `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    fn from_degrees(degrees: &[Vec<u32>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, level) in degrees.iter().enumerate() {
            for &d in level {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j), b_{i,j})`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, u32), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Total rank of each free module, from `F_0` to `F_pd`.
    pub fn ranks(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut ranks = vec![0; len];
        for (&(i, _), &b) in &self.entries {
            ranks[i] += b;
        }
        ranks
    }

    pub fn pd(&self) -> usize {
        self.ranks().len().saturating_sub(1)
    }

    /// Range of internal degrees that occur.
    pub fn degree_range(&self) -> (u32, u32) {
        let lo = self.entries.keys().map(|k| k.1).min().unwrap_or(0);
        let hi = self.entries.keys().map(|k| k.1).max().unwrap_or(0);
        (lo, hi)
    }

    /// Dense rows indexed by homological degree, columns by internal degree
    /// from `degree_range().0` up.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let (lo, hi) = self.degree_range();
        (0..self.ranks().len())
            .map(|i| (lo..=hi).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// `sum_i (-1)^i sum_j b_{i,j} C(t - j + n - 1, n - 1)`, the Hilbert
    /// function of `R/I` in degree `t` read off the resolution.
    pub fn hilbert_function(&self, nvars: usize, t: u32) -> i64 {
        let mut total = 0i64;
        for (&(i, j), &b) in &self.entries {
            if j > t {
                continue;
            }
            let term = b as i64 * binomial((t - j) as u64 + nvars as u64 - 1, nvars as u64 - 1);
            total += if i % 2 == 0 { term } else { -term };
        }
        total
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("min_degree", &self.degree_range().0)?;
        st.serialize_field("rows", &self.rows())?;
        st.serialize_field("ranks", &self.ranks())?;
        st.end()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.degree_range();
        write!(f, "{:>6}", "i\\j")?;
        for j in lo..=hi {
            write!(f, "{j:>5}")?;
        }
        writeln!(f)?;
        for (i, row) in self.rows().iter().enumerate() {
            write!(f, "{i:>6}")?;
            for &b in row {
                if b == 0 {
                    write!(f, "{:>5}", ".")?;
                } else {
                    write!(f, "{b:>5}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn binomial(n: u64, k: u64) -> i64 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as i64
}

/// A homogeneous map `F_i -> F_{i-1}` of graded free modules, stored by
/// columns: column `c` lists `(row, entry)` pairs.
#[derive(Clone, Debug)]
pub struct GradedMap {
    pub source_degrees: Vec<u32>,
    pub target_degrees: Vec<u32>,
    pub columns: Vec<Vec<(usize, Poly)>>,
}

impl GradedMap {
    /// True when no entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.columns.iter().flatten().all(|(_, p)| !p.is_constant())
    }

    /// Entry at `(row, col)`, zero when absent.
    pub fn entry(&self, ring: &Ring, row: usize, col: usize) -> Poly {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| Poly::zero(ring))
    }
}

/// Minimal graded free resolution of `R/I`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    betti: BettiTable,
    /// Ranks of the Schreyer frame before minimalization.
    frame_ranks: Vec<usize>,
    /// Betti numbers read off the frame as `dim Tor_i(k, R/I)_j`, computed
    /// from constant parts of the frame differentials without minimalizing.
    tor_betti: BettiTable,
    maps: Vec<GradedMap>,
}

impl Resolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn betti(&self) -> &BettiTable {
        &self.betti
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.betti.ranks()
    }

    /// Projective dimension of `R/I`.
    pub fn pd(&self) -> usize {
        self.betti.pd()
    }

    pub fn frame_ranks(&self) -> &[usize] {
        &self.frame_ranks
    }

    pub fn tor_betti(&self) -> &BettiTable {
        &self.tor_betti
    }

    /// Differentials `d_1, ..., d_pd` of the minimal resolution.
    pub fn maps(&self) -> &[GradedMap] {
        &self.maps
    }

    pub fn depth(&self) -> usize {
        self.ring.nvars() - self.pd()
    }
}

// ---------------------------------------------------------------------------
// Schreyer frame

/// Term `c · m · e_comp` stored with its total monomial `m · M_comp`, where
/// `M_comp` is the total monomial of the basis element `e_comp`.
#[derive(Clone, Debug)]
struct Term {
    total: Monomial,
    comp: u32,
    coeff: Coeff,
}

type Vector = Vec<Term>;

/// Basis data of one free module in the frame. The Schreyer order compares
/// `m e_k` and `n e_l` by total monomial, then by `rank`.
struct Basis {
    total: Vec<Monomial>,
    comp: Vec<u32>,
    rank: Vec<u32>,
}

struct ModuleOrder<'a> {
    order: MonomialOrder,
    rank: &'a [u32],
}

impl ModuleOrder<'_> {
    #[inline]
    fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order
            .cmp(&a.total, &b.total)
            .then_with(|| self.rank[a.comp as usize].cmp(&self.rank[b.comp as usize]))
    }
}

/// `a + c·q·b` for sorted vectors; `q` multiplies total monomials.
fn axpy(field: Field, ord: &ModuleOrder, a: &[Term], c: &Coeff, q: &Monomial, b: &[Term]) -> Vector {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let scaled = |t: &Term| Term { total: t.total.mul(q), comp: t.comp, coeff: field.mul(&t.coeff, c) };
        if j == b.len() {
            out.push(a[i].clone());
            i += 1;
            continue;
        }
        let bt = scaled(&b[j]);
        if i == a.len() {
            out.push(bt);
            j += 1;
            continue;
        }
        match ord.cmp(&a[i], &bt) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(bt);
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(&a[i].coeff, &bt.coeff);
                if !s.is_zero() {
                    out.push(Term { total: a[i].total, comp: a[i].comp, coeff: s });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn sort_vector(field: Field, ord: &ModuleOrder, mut v: Vector) -> Vector {
    v.sort_by(|a, b| ord.cmp(b, a));
    let mut out: Vector = Vec::with_capacity(v.len());
    for t in v {
        match out.last_mut() {
            Some(last) if last.total == t.total && last.comp == t.comp => {
                last.coeff = field.add(&last.coeff, &t.coeff);
                if last.coeff.is_zero() {
                    out.pop();
                }
            }
            _ => out.push(t),
        }
    }
    out
}

/// One level of the frame: generators of a submodule of `F_{i-1}` forming a
/// Gröbner basis for the Schreyer order there.
struct Level {
    elems: Vec<Vector>,
    basis: Basis,
}

struct Frame<'a> {
    field: Field,
    order: MonomialOrder,
    nvars: usize,
    guards: &'a Guards,
    start: Instant,
}

impl Frame<'_> {
    /// Builds the basis of `F_i` from the level elements, after reordering
    /// them so that within each component the exponent of variable `sort_var`
    /// in the monomial part of the leading term never increases.
    fn make_level(&self, mut elems: Vec<Vector>, below: &Basis, sort_var: usize) -> Level {
        if sort_var < self.nvars {
            elems.sort_by_key(|v| {
                let lead = &v[0];
                let part = lead.total.exp(sort_var) - below.total[lead.comp as usize].exp(sort_var);
                std::cmp::Reverse(part)
            });
        }
        let total: Vec<Monomial> = elems.iter().map(|v| v[0].total).collect();
        let comp: Vec<u32> = elems.iter().map(|v| v[0].comp).collect();
        let mut idx: Vec<usize> = (0..elems.len()).collect();
        // Larger rank is larger in the order: higher-ranked component first,
        // then lower index.
        idx.sort_by(|&a, &b| {
            below.rank[comp[a] as usize]
                .cmp(&below.rank[comp[b] as usize])
                .then(b.cmp(&a))
        });
        let mut rank = vec![0u32; elems.len()];
        for (pos, &k) in idx.iter().enumerate() {
            rank[k] = pos as u32;
        }
        Level { elems, basis: Basis { total, comp, rank } }
    }

    /// Syzygies of `level.elems`: a Gröbner basis of the syzygy module in the
    /// Schreyer order of `F_i`, pruned to minimal leading terms.
    fn syzygies(&self, level: &Level, below: &Basis) -> Result<Vec<Vector>> {
        let n = level.elems.len();
        let basis = &level.basis;
        let mut by_comp: HashMap<u32, Vec<usize>> = HashMap::new();
        for k in 0..n {
            by_comp.entry(basis.comp[k]).or_default().push(k);
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for k in 0..n {
            let mut cands: Vec<(Monomial, usize)> = by_comp[&basis.comp[k]]
                .iter()
                .filter(|&&l| l > k)
                .map(|&l| (basis.total[k].lcm(&basis.total[l]).div(&basis.total[k]).unwrap(), l))
                .collect();
            cands.sort_by_key(|(m, l)| (m.degree(), *l));
            let mut kept: Vec<Monomial> = Vec::new();
            for (m, l) in cands {
                if kept.iter().all(|q| !q.divides(&m)) {
                    kept.push(m);
                    pairs.push((k, l));
                }
            }
        }
        for &(k, l) in &pairs {
            let lcm = basis.total[k].lcm(&basis.total[l]);
            self.guards.check_degree(lcm.degree(), "syzygy")?;
        }
        self.guards.check_time(self.start, "resolution")?;
        pairs.par_iter().map(|&(k, l)| self.syzygy(level, below, &by_comp, k, l)).collect()
    }

    fn syzygy(
        &self,
        level: &Level,
        below: &Basis,
        by_comp: &HashMap<u32, Vec<usize>>,
        k: usize,
        l: usize,
    ) -> Result<Vector> {
        let field = self.field;
        let basis = &level.basis;
        let ord_below = ModuleOrder { order: self.order, rank: &below.rank };
        let ord_here = ModuleOrder { order: self.order, rank: &basis.rank };
        let (gk, gl) = (&level.elems[k], &level.elems[l]);
        let lcm = basis.total[k].lcm(&basis.total[l]);
        let qk = lcm.div(&basis.total[k]).unwrap();
        let ql = lcm.div(&basis.total[l]).unwrap();
        let ck = field.inv(&gk[0].coeff);
        let cl = field.neg(&field.inv(&gl[0].coeff));
        let mut syz = vec![
            Term { total: lcm, comp: k as u32, coeff: ck.clone() },
            Term { total: lcm, comp: l as u32, coeff: cl.clone() },
        ];
        let mut rem = axpy(field, &ord_below, &[], &ck, &qk, gk);
        rem = axpy(field, &ord_below, &rem, &cl, &ql, gl);
        let mut steps = 0usize;
        while let Some(lead) = rem.first().cloned() {
            let j = by_comp
                .get(&lead.comp)
                .and_then(|c| c.iter().copied().find(|&j| basis.total[j].divides(&lead.total)))
                .ok_or_else(|| Error::Precondition("frame element failed to reduce".into()))?;
            let q = lead.total.div(&basis.total[j]).unwrap();
            let c = field.neg(&field.div(&lead.coeff, &level.elems[j][0].coeff));
            rem = axpy(field, &ord_below, &rem, &c, &q, &level.elems[j]);
            syz.push(Term { total: lead.total, comp: j as u32, coeff: c });
            steps += 1;
            if steps.is_multiple_of(256) {
                self.guards.check_time(self.start, "resolution")?;
            }
        }
        Ok(sort_vector(field, &ord_here, syz))
    }
}

/// Frame differentials as polynomial matrices plus basis degrees.
struct RawFrame {
    degrees: Vec<Vec<u32>>,
    maps: Vec<Vec<BTreeMap<usize, Poly>>>,
}

fn schreyer_frame(ideal: &Ideal, guards: &Guards) -> Result<RawFrame> {
    let order = MonomialOrder::GradedReverseLex;
    let gb = ideal.gb()?;
    let ring = gb.ring().clone();
    let frame = Frame {
        field: ring.field(),
        order,
        nvars: ring.nvars(),
        guards,
        start: Instant::now(),
    };
    let f0 = Basis { total: vec![Monomial::ONE], comp: vec![0], rank: vec![0] };
    let first: Vec<Vector> = gb
        .gens()
        .iter()
        .map(|g| g.terms().iter().map(|(m, c)| Term { total: *m, comp: 0, coeff: c.clone() }).collect())
        .collect();
    let mut bases = vec![f0];
    let mut levels: Vec<Vec<Vector>> = Vec::new();
    let mut elems = first;
    let mut i = 1;
    while !elems.is_empty() {
        if i > frame.nvars + 1 {
            return Err(Error::Precondition("Schreyer frame longer than the syzygy bound".into()));
        }
        let level = frame.make_level(elems, &bases[i - 1], i - 1);
        let next = frame.syzygies(&level, &bases[i - 1])?;
        levels.push(level.elems);
        bases.push(level.basis);
        elems = next;
        i += 1;
    }
    let degrees: Vec<Vec<u32>> = bases.iter().map(|b| b.total.iter().map(|m| m.degree()).collect()).collect();
    let mut maps = Vec::with_capacity(levels.len());
    for (li, elems) in levels.iter().enumerate() {
        let target = &bases[li];
        let cols = elems
            .iter()
            .map(|v| {
                let mut rows: BTreeMap<usize, Vec<(Monomial, Coeff)>> = BTreeMap::new();
                for t in v {
                    let m = t.total.div(&target.total[t.comp as usize]).unwrap();
                    rows.entry(t.comp as usize).or_default().push((m, t.coeff.clone()));
                }
                rows.into_iter().map(|(r, terms)| (r, Poly::from_terms(&ring, terms))).collect()
            })
            .collect();
        maps.push(cols);
    }
    Ok(RawFrame { degrees, maps })
}

/// `dim Tor_i(k, R/I)_j` from a possibly non-minimal resolution: rank of the
/// degree-`j` slice minus the ranks of the constant parts of the adjacent
/// differentials.
fn tor_betti(field: Field, raw: &RawFrame) -> BettiTable {
    let levels = raw.degrees.len();
    // rank_of[i][j]: rank of the constant part of d_i restricted to degree j.
    let mut rank_of: Vec<HashMap<u32, usize>> = vec![HashMap::new(); levels + 1];
    for (mi, cols) in raw.maps.iter().enumerate() {
        let i = mi + 1;
        let mut by_degree: HashMap<u32, Vec<usize>> = HashMap::new();
        for (c, &d) in raw.degrees[i].iter().enumerate() {
            by_degree.entry(d).or_default().push(c);
        }
        for (d, cs) in by_degree {
            let rows: Vec<Vec<(usize, Coeff)>> = cs
                .iter()
                .map(|&c| {
                    cols[c]
                        .iter()
                        .filter(|(_, p)| p.is_constant())
                        .map(|(r, p)| (*r, p.leading_coeff().unwrap().clone()))
                        .collect()
                })
                .collect();
            rank_of[i].insert(d, sparse_rank(field, rows));
        }
    }
    let mut entries = BTreeMap::new();
    for i in 0..levels {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &d in &raw.degrees[i] {
            *counts.entry(d).or_insert(0) += 1;
        }
        for (d, f) in counts {
            let r_out = rank_of[i].get(&d).copied().unwrap_or(0);
            let r_in = rank_of[i + 1].get(&d).copied().unwrap_or(0);
            let b = f - r_out - r_in;
            if b > 0 {
                entries.insert((i, d), b);
            }
        }
    }
    BettiTable { entries }
}

/// Rank of a sparse matrix given by rows, via Gaussian elimination.
fn sparse_rank(field: Field, rows: Vec<Vec<(usize, Coeff)>>) -> usize {
    let mut pivots: BTreeMap<usize, Vec<(usize, Coeff)>> = BTreeMap::new();
    for mut row in rows {
        row.sort_by_key(|e| e.0);
        while let Some((lead, c)) = row.first().cloned() {
            match pivots.get(&lead) {
                None => {
                    let inv = field.inv(&c);
                    let normalized = row.iter().map(|(k, v)| (*k, field.mul(v, &inv))).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
                Some(p) => {
                    let mut acc: BTreeMap<usize, Coeff> = row.into_iter().collect();
                    for (k, v) in p {
                        let e = acc.remove(k).unwrap_or_else(|| field.zero());
                        let s = field.sub(&e, &field.mul(&c, v));
                        if !s.is_zero() {
                            acc.insert(*k, s);
                        }
                    }
                    row = acc.into_iter().collect();
                }
            }
        }
    }
    pivots.len()
}

/// Splits off every unit entry of the frame, leaving a minimal resolution.
fn minimalize(ring: &Ring, raw: RawFrame) -> (Vec<Vec<u32>>, Vec<GradedMap>) {
    let field = ring.field();
    let levels = raw.degrees.len();
    let mut alive: Vec<Vec<bool>> = raw.degrees.iter().map(|d| vec![true; d.len()]).collect();
    let mut maps: Vec<Vec<BTreeMap<usize, Poly>>> = raw.maps;
    for mi in 0..maps.len() {
        let i = mi + 1;
        loop {
            let mut pivot = None;
            'search: for (c, col) in maps[mi].iter().enumerate() {
                if !alive[i][c] {
                    continue;
                }
                for (&r, p) in col {
                    if alive[i - 1][r] && p.is_constant() {
                        pivot = Some((c, r));
                        break 'search;
                    }
                }
            }
            let Some((c, r)) = pivot else { break };
            let u = maps[mi][c][&r].leading_coeff().unwrap().clone();
            let u_inv = field.inv(&u);
            let pivot_col = maps[mi][c].clone();
            for c2 in 0..maps[mi].len() {
                if c2 == c || !alive[i][c2] {
                    continue;
                }
                let Some(a) = maps[mi][c2].get(&r).cloned() else { continue };
                let factor = a.scale(&u_inv);
                let col = &mut maps[mi][c2];
                for (row, entry) in &pivot_col {
                    let updated = &col.get(row).cloned().unwrap_or_else(|| Poly::zero(ring)) - &(&factor * entry);
                    if updated.is_zero() {
                        col.remove(row);
                    } else {
                        col.insert(*row, updated);
                    }
                }
            }
            alive[i][c] = false;
            alive[i - 1][r] = false;
            maps[mi][c].clear();
            if mi + 1 < maps.len() {
                for col in maps[mi + 1].iter_mut() {
                    col.remove(&c);
                }
            }
            if mi > 0 {
                maps[mi - 1][r].clear();
            }
        }
    }
    // Reindex the surviving basis elements.
    let index: Vec<Vec<Option<usize>>> = alive
        .iter()
        .map(|a| {
            let mut next = 0;
            a.iter()
                .map(|&live| {
                    live.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let degrees: Vec<Vec<u32>> = (0..levels)
        .map(|i| raw.degrees[i].iter().zip(&alive[i]).filter(|(_, &a)| a).map(|(&d, _)| d).collect())
        .collect();
    let mut out = Vec::new();
    for (mi, cols) in maps.into_iter().enumerate() {
        let i = mi + 1;
        let columns: Vec<Vec<(usize, Poly)>> = cols
            .into_iter()
            .enumerate()
            .filter(|(c, _)| alive[i][*c])
            .map(|(_, col)| {
                col.into_iter()
                    .filter_map(|(r, p)| index[i - 1][r].map(|nr| (nr, p)))
                    .collect()
            })
            .collect();
        if columns.is_empty() {
            break;
        }
        out.push(GradedMap {
            source_degrees: degrees[i].clone(),
            target_degrees: degrees[i - 1].clone(),
            columns,
        });
    }
    let degrees = degrees.into_iter().take_while(|d| !d.is_empty()).collect();
    (degrees, out)
}

/// Minimal graded free resolution of `R/I` for homogeneous proper `I`.
pub fn resolve(ideal: &Ideal) -> Result<Resolution> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = ideal.gb()?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let ring = gb.ring().clone();
    let raw = schreyer_frame(ideal, ideal.guards())?;
    let frame_ranks = raw.degrees.iter().map(|d| d.len()).collect();
    let tor = tor_betti(ring.field(), &raw);
    let (degrees, maps) = minimalize(&ring, raw);
    let betti = BettiTable::from_degrees(&degrees);
    Ok(Resolution { ring, betti, frame_ranks, tor_betti: tor, maps })
}

/// `depth(R/I) = d - pd(R/I)`.
pub fn depth(ideal: &Ideal) -> Result<usize> {
    Ok(resolve(ideal)?.depth())
}

/// Number of monomials of degree `t` outside the leading-term ideal, i.e.
/// `dim_k (R/I)_t` computed from the staircase.
pub fn hilbert_function(ideal: &Ideal, t: u32) -> Result<u64> {
    let gb = ideal.gb()?;
    let leads: Vec<Monomial> = gb.leading_monomials().copied().collect();
    let n = ideal.ring().nvars();
    let mut count = 0;
    let mut exps = vec![0u16; n];
    count_standard(&leads, &mut exps, 0, t, &mut count);
    Ok(count)
}

fn count_standard(leads: &[Monomial], exps: &mut Vec<u16>, i: usize, left: u32, count: &mut u64) {
    if i + 1 == exps.len() {
        exps[i] = left as u16;
        let m = Monomial::new(exps);
        if !leads.iter().any(|l| l.divides(&m)) {
            *count += 1;
        }
        return;
    }
    for e in 0..=left {
        exps[i] = e as u16;
        count_standard(leads, exps, i + 1, left - e, count);
    }
}

/// Sufficient criteria for strong Cohen–Macaulayness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StronglyCm {
    /// Perfect of height two.
    PerfectHeightTwo,
    /// Cohen–Macaulay with at most `height + 2` generators.
    CmFewGenerators,
    Unknown,
}

impl fmt::Display for StronglyCm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StronglyCm::PerfectHeightTwo => "yes (perfect of height 2)",
            StronglyCm::CmFewGenerators => "yes (Cohen-Macaulay, mu <= height + 2)",
            StronglyCm::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateSet {
    pub nvars: usize,
    pub dim: usize,
    pub height: usize,
    pub mu: usize,
    pub pd: usize,
    pub depth: usize,
    pub perfect: bool,
    pub cohen_macaulay: bool,
    pub complete_intersection: bool,
    pub almost_complete_intersection: bool,
    pub strongly_cm: StronglyCm,
}

/// Fills every predicate from one resolution and one profile.
pub fn predicates(ideal: &Ideal) -> Result<PredicateSet> {
    let res = resolve(ideal)?;
    predicates_from(ideal, &res)
}

pub fn predicates_from(ideal: &Ideal, res: &Resolution) -> Result<PredicateSet> {
    let profile = ideal.profile()?;
    let mu = profile.mu.ok_or(Error::NotHomogeneous)?;
    let pd = res.pd();
    let depth = res.depth();
    let perfect = pd == profile.height;
    let cohen_macaulay = depth == profile.dim;
    let strongly_cm = if perfect && profile.height == 2 {
        StronglyCm::PerfectHeightTwo
    } else if cohen_macaulay && mu <= profile.height + 2 {
        StronglyCm::CmFewGenerators
    } else {
        StronglyCm::Unknown
    };
    Ok(PredicateSet {
        nvars: profile.nvars,
        dim: profile.dim,
        height: profile.height,
        mu,
        pd,
        depth,
        perfect,
        cohen_macaulay,
        complete_intersection: mu == profile.height,
        almost_complete_intersection: mu == profile.height + 1,
        strongly_cm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_ring;

    fn ideal(ring: &str, gens: &str) -> Ideal {
        Ideal::parse(&parse_ring(ring).unwrap(), gens).unwrap()
    }

    fn check_complex(res: &Resolution) {
        let ring = res.ring();
        for w in res.maps().windows(2) {
            let (d1, d2) = (&w[0], &w[1]);
            for c in 0..d2.columns.len() {
                for r in 0..d1.target_degrees.len() {
                    let mut s = Poly::zero(ring);
                    for (mid, p) in &d2.columns[c] {
                        s = &s + &(&d1.entry(ring, r, *mid) * p);
                    }
                    assert!(s.is_zero(), "d∘d != 0");
                }
            }
        }
        for m in res.maps() {
            assert!(m.is_minimal());
        }
        assert_eq!(res.betti(), res.tor_betti());
    }

    #[test]
    fn principal_ideal() {
        let res = resolve(&ideal("QQ[x,y]", "x")).unwrap();
        assert_eq!(res.ranks(), vec![1, 1]);
        assert_eq!(res.betti().get(1, 1), 1);
        assert_eq!(res.pd(), 1);
        check_complex(&res);
    }

    #[test]
    fn koszul_complex() {
        let res = resolve(&ideal("QQ[x,y,z]", "x,y,z")).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 3, 1]);
        assert_eq!(res.betti().get(3, 3), 1);
        check_complex(&res);
    }

    #[test]
    fn pentagon() {
        let i = ideal("QQ[x1,x2,x3,x4,x5]", "x1x3,x1x4,x2x4,x2x5,x3x5");
        let res = resolve(&i).unwrap();
        assert_eq!(res.ranks(), vec![1, 5, 5, 1]);
        assert_eq!(res.pd(), 3);
        check_complex(&res);
    }

    #[test]
    fn twisted_cubic_and_curve() {
        let hankel = ideal("QQ[x0,x1,x2,x3]", "x0x2-x1^2, x0x3-x1x2, x1x3-x2^2");
        let res = resolve(&hankel).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 2]);
        check_complex(&res);
        let curve = ideal("QQ[x,y,z,w]", "yz-xw, z^3-yw^2, y^3-x^2z, xz^2-y^2w");
        let res = resolve(&curve).unwrap();
        assert_eq!(res.pd(), 3);
        check_complex(&res);
    }

    #[test]
    fn hilbert_function_matches_betti() {
        let i = ideal("QQ[x,y,z,w]", "yzw,xzw,xyw,xyz").power(2).unwrap();
        let res = resolve(&i).unwrap();
        for t in 0..=10 {
            assert_eq!(res.betti().hilbert_function(4, t), hilbert_function(&i, t).unwrap() as i64);
        }
    }

    #[test]
    fn tetrahedron_depths() {
        let i = ideal("QQ[x,y,z,w]", "yzw,xzw,xyw,xyz");
        assert_eq!(depth(&i).unwrap(), 2);
        let sq = resolve(&i.power(2).unwrap()).unwrap();
        check_complex(&sq);
        assert_eq!(sq.depth(), 1);
    }

    #[test]
    fn predicate_examples() {
        let hankel = ideal("QQ[x0,x1,x2,x3]", "x0x2-x1^2, x0x3-x1x2, x1x3-x2^2");
        let p = predicates(&hankel).unwrap();
        assert!(p.perfect && p.cohen_macaulay && p.almost_complete_intersection);
        assert_eq!((p.height, p.mu), (2, 3));
        assert_eq!(p.strongly_cm, StronglyCm::PerfectHeightTwo);
        let ci = predicates(&ideal("QQ[x,y,z]", "x,y")).unwrap();
        assert!(ci.complete_intersection);
        let curve = ideal("QQ[x,y,z,w]", "yz-xw, z^3-yw^2, y^3-x^2z, xz^2-y^2w");
        let p = predicates(&curve).unwrap();
        assert!(!p.cohen_macaulay);
        assert_eq!((p.depth, p.dim), (1, 2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(resolve(&ideal("QQ[x,y]", "x+1")), Err(Error::NotHomogeneous)));
        assert!(matches!(resolve(&ideal("QQ[x,y]", "1")), Err(Error::UnitIdeal)));
    }
}
