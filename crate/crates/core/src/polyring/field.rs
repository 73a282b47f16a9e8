//! Coefficient fields: the rationals and prime fields `Z/p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::rational::Rational;

/// Coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    /// `Z/p` for an odd prime `p < 2^31`.
    Prime(u32),
}

/// A field element. The variant always matches the [`Field`] it came from.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(Rational),
    P(u32),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_zero(),
            Coeff::P(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_one(),
            Coeff::P(v) => *v == 1,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => write!(f, "{q}"),
            Coeff::P(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i64) as u32
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(Rational::ZERO),
            Field::Prime(_) => Coeff::P(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(Rational::ONE),
            Field::Prime(_) => Coeff::P(1),
        }
    }

    pub fn from_int(&self, n: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(Rational::from_int(n)),
            Field::Prime(p) => Coeff::P(n.rem_euclid(*p as i64) as u32),
        }
    }

    /// Maps a rational into this field; `None` if its denominator is zero mod p.
    pub fn from_rational(&self, q: &Rational) -> Option<Coeff> {
        match self {
            Field::Rational => Some(Coeff::Q(q.clone())),
            Field::Prime(p) => q.reduce_mod(*p).map(Coeff::P),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x.add(y)),
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => {
                Coeff::P(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => unreachable!("coefficient from a different field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rational, Coeff::Q(x)) => Coeff::Q(x.neg()),
            (Field::Prime(p), Coeff::P(x)) => Coeff::P(if *x == 0 { 0 } else { p - x }),
            _ => unreachable!("coefficient from a different field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x.mul(y)),
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => {
                Coeff::P(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => unreachable!("coefficient from a different field"),
        }
    }

    /// Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rational, Coeff::Q(x)) => Coeff::Q(x.inv()),
            (Field::Prime(p), Coeff::P(x)) => {
                assert!(*x != 0, "inverse of zero");
                Coeff::P(inv_mod(*x, *p))
            }
            _ => unreachable!("coefficient from a different field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "Fp({p})"),
        }
    }
}
