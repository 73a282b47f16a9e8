//! Exact coefficient arithmetic, monomials and their orders, sparse
//! polynomials and the ring/polynomial text format.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod ring;

pub use field::{Coeff, Field};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_poly, parse_poly_list, parse_ring};
pub use poly::Poly;
pub use rational::Rational;
pub use ring::{Ring, RingSpec};
