use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{Coeff, Field};
use super::monomial::{Monomial, MonomialOrder};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Sparse polynomial: nonzero terms in strictly descending order under the
/// ring's monomial order. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Poly {
    pub fn zero(ring: &Ring) -> Self {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::term(ring, Monomial::ONE, c)
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, ring.field().from_int(n))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::term(ring, Monomial::var(i), ring.field().one())
    }

    pub fn term(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Poly { ring: ring.clone(), terms: vec![(m, c)] }
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Self {
        Self::term(ring, m, ring.field().one())
    }

    /// Normalizes an arbitrary term list: sorts, merges equal monomials and
    /// drops zero coefficients.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let order = ring.order();
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { ring: ring.clone(), terms }
    }

    /// Trusts the caller that `terms` are sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// All terms share one total degree. Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    /// Bitmask of variables that occur.
    pub fn support(&self) -> u16 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support())
    }

    pub fn same_ring(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, &self.ring.field().one(), &Monomial::ONE, false))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, &self.ring.field().one(), &Monomial::ONE, true))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(m, c);
        }
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = field.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let order = self.ring.order();
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { ring: self.ring.clone(), terms }
    }

    /// `self ± c·m·other` in one merge pass (`subtract` selects the sign).
    fn merge(&self, other: &Poly, c: &Coeff, m: &Monomial, subtract: bool) -> Poly {
        let field = self.ring.field();
        let factor = if subtract { field.neg(c) } else { c.clone() };
        let terms = add_mul_terms(field, self.ring.order(), &self.terms, &factor, m, &other.terms);
        Poly { ring: self.ring.clone(), terms }
    }

    /// `self - c·m·other`, the reduction step of division.
    pub fn sub_mul_term(&self, c: &Coeff, m: &Monomial, other: &Poly) -> Poly {
        self.merge(other, c, m, true)
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(n, d)| (n.mul(m), field.mul(d, c))).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        let terms = self.terms.iter().map(|(n, d)| (n.mul(m), d.clone())).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        self.mul_term(&Monomial::ONE, c)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&self.ring.field().inv(lc)),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (dm, dc) = divisor.terms.first()?;
        if !self.same_ring(divisor) {
            return None;
        }
        let field = self.ring.field();
        let dc_inv = field.inv(dc);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            let qm = m.div(dm)?;
            let qc = field.mul(c, &dc_inv);
            rest = rest.sub_mul_term(&qc, &qm, divisor);
            quotient.push((qm, qc));
        }
        // Quotient terms come out in descending order already.
        Some(Poly { ring: self.ring.clone(), terms: quotient })
    }

    /// Same polynomial with its terms re-sorted for `ring`, which must share
    /// field and variables with the current ring.
    pub fn to_ring(&self, ring: &Ring) -> Result<Poly> {
        if !self.ring.same_base(ring) {
            return Err(Error::RingMismatch);
        }
        if self.ring.order() == ring.order() {
            return Ok(Poly { ring: ring.clone(), terms: self.terms.clone() });
        }
        let order = ring.order();
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Poly { ring: ring.clone(), terms })
    }

    /// Rewrites monomials through `f` into `ring`; the result is normalized.
    pub fn map_monomials(&self, ring: &Ring, f: impl Fn(&Monomial) -> Monomial) -> Poly {
        Poly::from_terms(ring, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Replaces variable `i` by `images[i]` and expands. The result lives in
    /// the images' ring.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        let nvars = self.ring.nvars();
        if images.len() != nvars {
            return Err(Error::LengthMismatch { expected: nvars, found: images.len() });
        }
        let target = images[0].ring().clone();
        if images.iter().any(|p| !Arc::ptr_eq(p.ring(), &target) && **p.ring() != *target) {
            return Err(Error::RingMismatch);
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&target), p.clone()]).collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().mul_unchecked(&images[i]);
                    pw.push(next);
                }
                if e > 0 {
                    t = t.mul_unchecked(&pw[e]);
                }
            }
            out = out.merge(&t, &target.field().one(), &Monomial::ONE, false);
        }
        Ok(out)
    }

    /// Terms of total degree `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> Poly {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == deg).cloned().collect();
        Poly { ring: self.ring.clone(), terms }
    }
}

fn op_panic() -> ! {
    panic!("arithmetic between polynomials of different rings")
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).unwrap_or_else(|_| op_panic())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).unwrap_or_else(|_| op_panic())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).unwrap_or_else(|_| op_panic())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&self.ring.field().from_int(-1))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = matches!(c, Coeff::Q(q) if q.is_negative());
            let abs = if negative { field.neg(c) } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, name) in self.ring.vars().iter().enumerate() {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Leading-monomial comparison of two nonzero polynomials of one ring.
pub fn cmp_leading(order: MonomialOrder, a: &Poly, b: &Poly) -> Ordering {
    match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => order.cmp(x, y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    }
}

/// `a + c·m·b` on sorted term slices.
pub(crate) fn add_mul_terms(
    field: Field,
    order: MonomialOrder,
    a: &[(Monomial, Coeff)],
    c: &Coeff,
    m: &Monomial,
    b: &[(Monomial, Coeff)],
) -> Vec<(Monomial, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let mb = b[j].0.mul(m);
        match order.cmp(&a[i].0, &mb) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((mb, field.mul(&b[j].1, c)));
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(&a[i].1, &field.mul(&b[j].1, c));
                if !s.is_zero() {
                    out.push((mb, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(mb, cb)| (mb.mul(m), field.mul(cb, c))));
    out
}
