use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest number of ring variables supported by the packed representation.
pub const MAX_VARS: usize = 16;

/// Power product `x_0^{e_0} ... x_{n-1}^{e_{n-1}}` with packed `u16` exponents.
///
/// Exponents past the ring's variable count are always zero, so monomials of
/// one ring compare and hash correctly without knowing the count.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    /// Bit `i` set iff `exps[i] > 0`; a cheap divisibility pre-filter.
    support: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS], deg: 0, support: 0 };

    /// Panics if more than [`MAX_VARS`] exponents are given.
    pub fn new(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m.refresh();
        m
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u16) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = e;
        m.refresh();
        m
    }

    fn refresh(&mut self) {
        self.deg = self.exps.iter().map(|&e| e as u32).sum();
        self.support = self
            .exps
            .iter()
            .enumerate()
            .fold(0u16, |acc, (i, &e)| if e > 0 { acc | (1 << i) } else { acc });
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    /// Bitmask of variables with positive exponent.
    #[inline]
    pub fn support(&self) -> u16 {
        self.support
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Panics on exponent overflow.
    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        out.deg = self.deg + other.deg;
        out.support = self.support | other.support;
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = *self;
        for e in out.exps.iter_mut() {
            *e = u16::try_from(*e as u32 * n).expect("exponent overflow");
        }
        out.refresh();
        out
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        if self.support & !other.support != 0 || self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] -= other.exps[i];
        }
        out.refresh();
        Some(out)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
        }
        out.refresh();
        out
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
        }
        out.refresh();
        out
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.support & other.support == 0
    }

    /// Sets the exponent of each variable not in `keep` to zero.
    pub fn restrict(&self, keep: u16) -> Self {
        let mut out = *self;
        for (i, e) in out.exps.iter_mut().enumerate() {
            if keep & (1 << i) == 0 {
                *e = 0;
            }
        }
        out.refresh();
        out
    }

    /// Drops the first `k` variables, shifting the rest down.
    pub fn shift_down(&self, k: usize) -> Self {
        let mut out = Monomial::ONE;
        out.exps[..MAX_VARS - k].copy_from_slice(&self.exps[k..]);
        out.refresh();
        out
    }

    /// Inserts `k` zero exponents in front.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut out = Monomial::ONE;
        assert!(self.exps[MAX_VARS - k..].iter().all(|&e| e == 0), "too many variables");
        out.exps[k..].copy_from_slice(&self.exps[..MAX_VARS - k]);
        out.refresh();
        out
    }

    pub(crate) fn grevlex_cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| revlex_range(self, other, 0, MAX_VARS))
    }
}

/// Reverse lexicographic tie-break on variables `lo..hi`: scanning from the
/// last variable, the smaller exponent wins.
#[inline]
fn revlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    for i in (lo..hi).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

/// Monomial orders used in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GradedLex,
    GradedReverseLex,
    /// Product order (grevlex on the first `k` variables, then grevlex on the
    /// rest). Eliminates the first `k` variables.
    BlockElimination(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GradedLex => a.deg.cmp(&b.deg).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::GradedReverseLex => a.grevlex_cmp(b),
            MonomialOrder::BlockElimination(k) => {
                let k = *k;
                let da: u32 = a.exps[..k].iter().map(|&e| e as u32).sum();
                let db: u32 = b.exps[..k].iter().map(|&e| e as u32).sum();
                da.cmp(&db)
                    .then_with(|| revlex_range(a, b, 0, k))
                    .then_with(|| (a.deg - da).cmp(&(b.deg - db)))
                    .then_with(|| revlex_range(a, b, k, MAX_VARS))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GradedLex => write!(f, "grlex"),
            MonomialOrder::GradedReverseLex => write!(f, "grevlex"),
            MonomialOrder::BlockElimination(k) => write!(f, "elim({k})"),
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}
