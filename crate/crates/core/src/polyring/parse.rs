//! Text grammar for rings and polynomials.
//!
//! ```text
//! ring  := FIELD '[' ident (',' ident)* ']'      FIELD := 'QQ' | 'Fp(' prime ')'
//! poly  := sign? term (('+' | '-') term)*
//! term  := factor ('*'? factor)*
//! factor:= int ('/' int)? | ident ('^' int)?
//! ```
//!
//! An identifier that is not a variable name is split into a product of
//! variable names when possible, so `2xz` reads as `2*x*z` in `QQ[x,y,z]`.

use num_bigint::BigInt;

use super::field::{Coeff, Field};
use super::monomial::Monomial;
use super::poly::Poly;
use super::rational::Rational;
use super::ring::{Ring, RingSpec};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    /// Offset added to reported positions when parsing a slice.
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, base: usize) -> Self {
        Cursor { src: src.as_bytes(), pos: 0, base }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::syntax(self.at(), msg)
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", b as char)))
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => self.pos += 1,
            _ => return None,
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn done(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Parses `QQ[x,y,z]` or `Fp(32003)[x,y]`. The ring gets the graded reverse
/// lexicographic order.
pub fn parse_ring(text: &str) -> Result<Ring> {
    let mut cur = Cursor::new(text, 0);
    let field_pos = {
        cur.skip_ws();
        cur.at()
    };
    let field = match cur.ident() {
        Some("QQ") => Field::Rational,
        Some("Fp") => {
            cur.expect(b'(')?;
            let digits_at = cur.at();
            let p = cur
                .digits()
                .ok_or_else(|| cur.err("expected a modulus"))?
                .parse::<u64>()
                .map_err(|_| Error::syntax(digits_at, "modulus too large"))?;
            cur.expect(b')')?;
            if p > u32::MAX as u64 {
                return Err(Error::BadModulus(p));
            }
            Field::Prime(p as u32)
        }
        _ => return Err(Error::syntax(field_pos, "expected `QQ` or `Fp(<prime>)`")),
    };
    cur.expect(b'[')?;
    let mut vars = Vec::new();
    loop {
        let name = cur.ident().ok_or_else(|| cur.err("expected a variable name"))?;
        vars.push(name.to_string());
        match cur.peek() {
            Some(b',') => cur.pos += 1,
            Some(b']') => {
                cur.pos += 1;
                break;
            }
            _ => return Err(cur.err("expected `,` or `]`")),
        }
    }
    if !cur.done() {
        return Err(cur.err("trailing input after ring"));
    }
    RingSpec::new(field, vars)
}

/// Splits an identifier into ring variables, preferring longer names.
fn split_ident(ring: &RingSpec, ident: &str) -> Option<Vec<usize>> {
    if ident.is_empty() {
        return Some(Vec::new());
    }
    if let Some(i) = ring.var_index(ident) {
        return Some(vec![i]);
    }
    let mut candidates: Vec<(usize, &String)> =
        ring.vars().iter().enumerate().filter(|(_, v)| ident.starts_with(v.as_str())).collect();
    candidates.sort_by_key(|(_, v)| std::cmp::Reverse(v.len()));
    for (i, v) in candidates {
        if let Some(mut rest) = split_ident(ring, &ident[v.len()..]) {
            rest.insert(0, i);
            return Some(rest);
        }
    }
    None
}

fn parse_coeff(ring: &Ring, num: &str, den: Option<&str>, at: usize) -> Result<Coeff> {
    let n: BigInt = num.parse().map_err(|_| Error::syntax(at, "bad integer"))?;
    let q = match den {
        None => Rational::from_bigint(n),
        Some(d) => {
            let d: BigInt = d.parse().map_err(|_| Error::syntax(at, "bad integer"))?;
            if d == BigInt::from(0) {
                return Err(Error::CoefficientNotInField(format!("{num}/0")));
            }
            Rational::from_bigint(n).div(&Rational::from_bigint(d))
        }
    };
    ring.field().from_rational(&q).ok_or_else(|| Error::CoefficientNotInField(q.to_string()))
}

fn parse_term(ring: &Ring, cur: &mut Cursor) -> Result<(Monomial, Coeff)> {
    let field = ring.field();
    let mut coeff = field.one();
    let mut exps = vec![0u16; ring.nvars()];
    let mut factors = 0;
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let at = cur.at();
                let num = cur.digits().unwrap();
                let den = if cur.peek() == Some(b'/') {
                    cur.pos += 1;
                    Some(cur.digits().ok_or_else(|| cur.err("expected a denominator"))?)
                } else {
                    None
                };
                coeff = field.mul(&coeff, &parse_coeff(ring, num, den, at)?);
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let at = cur.at();
                let name = cur.ident().unwrap();
                let vars = split_ident(ring, name).ok_or_else(|| Error::UnknownVariable {
                    name: name.to_string(),
                    position: at,
                })?;
                let power = if cur.peek() == Some(b'^') {
                    cur.pos += 1;
                    let exp_at = cur.at();
                    cur.digits()
                        .ok_or_else(|| cur.err("malformed exponent"))?
                        .parse::<u16>()
                        .map_err(|_| Error::syntax(exp_at, "malformed exponent"))?
                } else {
                    1
                };
                // `^` binds to the last variable of a split identifier.
                let (last, init) = vars.split_last().unwrap();
                for &i in init {
                    exps[i] = exps[i].checked_add(1).ok_or_else(|| cur.err("exponent overflow"))?;
                }
                exps[*last] =
                    exps[*last].checked_add(power).ok_or_else(|| cur.err("exponent overflow"))?;
            }
            _ => {
                return Err(cur.err(if factors == 0 {
                    "expected a coefficient or variable"
                } else {
                    "dangling `*`"
                }))
            }
        }
        factors += 1;
        match cur.peek() {
            Some(b'*') => cur.pos += 1,
            Some(c) if c.is_ascii_alphanumeric() || c == b'_' => {}
            Some(b'^') => return Err(cur.err("malformed exponent")),
            _ => break,
        }
    }
    Ok((Monomial::new(&exps), coeff))
}

fn parse_poly_at(ring: &Ring, text: &str, base: usize) -> Result<Poly> {
    let mut cur = Cursor::new(text, base);
    if cur.done() {
        return Err(cur.err("empty polynomial"));
    }
    let field = ring.field();
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            _ if first => false,
            None => break,
            _ => return Err(cur.err("expected `+` or `-`")),
        };
        first = false;
        let (m, c) = parse_term(ring, &mut cur)?;
        terms.push((m, if negative { field.neg(&c) } else { c }));
        if cur.done() {
            break;
        }
    }
    Ok(Poly::from_terms(ring, terms))
}

/// Parses one polynomial of `ring`.
pub fn parse_poly(ring: &Ring, text: &str) -> Result<Poly> {
    parse_poly_at(ring, text, 0)
}

/// Parses a comma separated list of polynomials. An all-blank input is the
/// empty list.
pub fn parse_poly_list(ring: &Ring, text: &str) -> Result<Vec<Poly>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_poly_at(ring, piece, offset)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}
