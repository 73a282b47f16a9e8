pub mod cremona;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod homological;
pub mod ideal;
pub mod monomial;
pub mod polyring;
pub mod symbolic;

pub use error::{Error, GuardKind, Result};
pub use groebner::{groebner, groebner_with, normal_form, GroebnerBasis, Guards};
pub use polyring::{
    parse_poly, parse_poly_list, parse_ring, Coeff, Field, Monomial, MonomialOrder, Poly,
    Rational, Ring, RingSpec,
};
pub use ideal::{Ideal, IdealProfile};
pub use homological::{depth, predicates, resolve, BettiTable, PredicateSet, Resolution, StronglyCm};
pub use monomial::{
    classify_graph, is_g_infinity, is_locally_ci, localize_at_monomial_prime, minimal_primes,
    monomial_symbolic_power, GraphClass, GraphReport, GraphVerdict, MonomialIdeal, VarPrime,
};
pub use symbolic::{
    compare, rigidity_scan, symbolic_power, Justification, Provenance, ScanEntry, ScanReport,
    ScanSummary, SymbolicReport, SymbolicStrategy,
};
pub use cremona::{
    depth_positive, depth_positive_check, gabber_bound, nonrigidity_probe, verify_inverse,
    CremonaCheck, CremonaMap, Hypothesis, HypothesisStatus, ProbeReport,
};
