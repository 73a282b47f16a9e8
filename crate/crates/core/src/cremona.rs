//! Birational self-maps of projective space given by forms: verification of
//! inverse pairs, the source inversion factor and the symbolic-power failure
//! it forces on the base ideal.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Guards;
use crate::ideal::Ideal;
use crate::monomial::{localize_at_monomial_prime, monomial_primes_over, monomial_symbolic_power, MonomialIdeal};
use crate::polyring::{parse_poly_list, Poly, Ring};
use crate::symbolic::{compare, symbolic_power, ScanEntry, SymbolicStrategy};

/// `n + 1` forms of one degree `d >= 2` in `n + 1` variables.
#[derive(Clone, Debug)]
pub struct CremonaMap {
    ring: Ring,
    forms: Vec<Poly>,
    degree: u32,
    guards: Guards,
}

impl CremonaMap {
    pub fn new(ring: &Ring, forms: Vec<Poly>) -> Result<CremonaMap> {
        if forms.len() < 2 {
            return Err(Error::Precondition("a map needs at least two forms".into()));
        }
        if forms.len() != ring.nvars() {
            return Err(Error::LengthMismatch { expected: ring.nvars(), found: forms.len() });
        }
        let forms: Vec<Poly> = forms.into_iter().map(|f| f.to_ring(ring)).collect::<Result<_>>()?;
        if forms.iter().any(|f| f.is_zero()) {
            return Err(Error::Precondition("forms must be nonzero".into()));
        }
        if !forms.iter().all(|f| f.is_homogeneous()) {
            return Err(Error::NotHomogeneous);
        }
        let degree = forms[0].degree().unwrap_or(0);
        if forms.iter().any(|f| f.degree() != Some(degree)) {
            return Err(Error::Precondition("forms have different degrees".into()));
        }
        if degree < 2 {
            return Err(Error::Precondition(format!("forms have degree {degree}, need at least 2")));
        }
        Ok(CremonaMap { ring: ring.clone(), forms, degree, guards: Guards::default() })
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<CremonaMap> {
        CremonaMap::new(ring, parse_poly_list(ring, text)?)
    }

    /// Guards applied to the base ideal and everything derived from it.
    pub fn with_guards(mut self, guards: Guards) -> CremonaMap {
        self.guards = guards;
        self
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn forms(&self) -> &[Poly] {
        &self.forms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn base_ideal(&self) -> Result<Ideal> {
        Ok(Ideal::new(&self.ring, self.forms.iter().cloned())?.with_guards(self.guards))
    }

    /// `G ∘ F`, i.e. `g_i(f_0, …, f_n)` for each `i`.
    pub fn compose_after(&self, first: &CremonaMap) -> Result<Vec<Poly>> {
        self.forms.iter().map(|g| g.substitute(&first.forms)).collect()
    }
}

/// Largest possible inverse degree, `d^(n-1)` for a map of `P^n`.
pub fn gabber_bound(d: u32, nvars: usize) -> u64 {
    (d as u64).pow(nvars.saturating_sub(2) as u32)
}

#[derive(Clone, Debug, Serialize)]
pub struct CremonaCheck {
    pub verified: bool,
    /// `D` with `g_i(f) = D x_i` for all `i`.
    #[serde(serialize_with = "ser_opt_poly")]
    pub source_inversion: Option<Poly>,
    pub source_inversion_degree: Option<u32>,
    pub d: u32,
    pub d_prime: u32,
    pub gabber_ok: bool,
    /// First exponent where the base ideal's powers are predicted to lose
    /// symbolic equality.
    pub predicted_failure: u32,
    pub diagnostic: Option<String>,
}

fn ser_opt_poly<S: serde::Serializer>(p: &Option<Poly>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.collect_str(p),
        None => s.serialize_none(),
    }
}

/// Checks that `G` inverts `F`: `g_i(f) = D x_i` for one form `D`.
pub fn verify_inverse(f: &CremonaMap, g: &CremonaMap) -> Result<CremonaCheck> {
    if !f.ring.same_base(&g.ring) {
        return Err(Error::RingMismatch);
    }
    let (d, d_prime) = (f.degree, g.degree);
    let mut check = CremonaCheck {
        verified: false,
        source_inversion: None,
        source_inversion_degree: None,
        d,
        d_prime,
        gabber_ok: (d_prime as u64) <= gabber_bound(d, f.ring.nvars()),
        predicted_failure: d_prime,
        diagnostic: None,
    };
    let g = CremonaMap {
        ring: f.ring.clone(),
        forms: g.forms.iter().map(|p| p.to_ring(&f.ring)).collect::<Result<_>>()?,
        degree: d_prime,
        guards: g.guards,
    };
    let images = g.compose_after(f)?;
    let x0 = Poly::var(&f.ring, 0);
    let Some(dform) = images[0].div_exact(&x0) else {
        check.diagnostic = Some("g_0(f) is not divisible by the first variable".into());
        return Ok(check);
    };
    if dform.is_zero() {
        check.diagnostic = Some("g_0(f) vanishes".into());
        return Ok(check);
    }
    for (i, image) in images.iter().enumerate() {
        if image.degree() != Some(d * d_prime) {
            check.diagnostic = Some(format!("g_{i}(f) does not have degree {}", d * d_prime));
            return Ok(check);
        }
        if *image != &dform * &Poly::var(&f.ring, i) {
            check.diagnostic = Some(format!("g_{i}(f) is not D times variable {i}"));
            return Ok(check);
        }
    }
    check.verified = true;
    check.source_inversion_degree = dform.degree();
    check.source_inversion = Some(dform);
    Ok(check)
}

/// `depth R/I > 0` for an ideal, tested as `I = I^sat`.
pub fn depth_positive(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(ideal.saturate_irrelevant()?.1 == 0)
}

/// Depth positivity of the base ideal.
pub fn depth_positive_check(map: &CremonaMap) -> Result<bool> {
    depth_positive(&map.base_ideal()?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum HypothesisStatus {
    /// Verified by computation.
    Holds,
    /// Shown false by computation.
    Violated { detail: String },
    /// Taken on the caller's word.
    Asserted,
}

#[derive(Clone, Debug, Serialize)]
pub struct Hypothesis {
    pub name: &'static str,
    #[serde(flatten)]
    pub status: HypothesisStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub check: CremonaCheck,
    pub hypotheses: Vec<Hypothesis>,
    pub predicted_failure: u32,
    pub entries: Vec<ScanEntry>,
    pub observed_first_failure: Option<u32>,
    /// Prediction confirmed: equality below `d'` and failure at `d'`.
    pub confirms_prediction: Option<bool>,
    pub inversion_in_symbolic: Option<bool>,
    pub inversion_in_ordinary: Option<bool>,
    /// Degree of the `d'` witness after reduction modulo `I^{d'}`.
    pub witness_reduced_degree: Option<u32>,
}

impl ProbeReport {
    pub fn hypothesis(&self, name: &str) -> Option<&HypothesisStatus> {
        self.hypotheses.iter().find(|h| h.name == name).map(|h| &h.status)
    }
}

pub const HYP_DEPTH: &str = "depth-positive";
pub const HYP_PRIMARY: &str = "quotient-zero-or-primary";
pub const HYP_REES_S2: &str = "rees-algebra-s2";

/// For a square-free monomial ideal, the first `l <= up_to` and monomial
/// prime `P != 𝔪` where `I^(l)` and `I^l` differ after localizing at `P`.
fn primary_quotient_violation(mono: &MonomialIdeal, up_to: u32) -> Result<Option<String>> {
    let full = (1u32 << mono.nvars()) - 1;
    let primes: Vec<_> = monomial_primes_over(mono).into_iter().filter(|p| p.vars().len() as u32 != full.count_ones()).collect();
    for l in 2..=up_to {
        for p in &primes {
            let local = localize_at_monomial_prime(mono, *p)?;
            if local.power(l) != monomial_symbolic_power(&local, l)? {
                let vars: Vec<String> = p.vars().iter().map(|v| format!("x{}", v + 1)).collect();
                return Ok(Some(format!(
                    "I^({l})/I^{l} is supported at the non-maximal prime ({})",
                    vars.join(",")
                )));
            }
        }
    }
    Ok(None)
}

/// Runs the comparison for `l = 1..=min(check_up_to, d')` and tests the
/// prediction that equality holds below `d'` and fails at `d'`.
pub fn nonrigidity_probe(
    f: &CremonaMap,
    g: &CremonaMap,
    strategy: &SymbolicStrategy,
    check_up_to: u32,
) -> Result<ProbeReport> {
    let check = verify_inverse(f, g)?;
    if !check.verified {
        return Err(Error::Precondition(format!(
            "inverse not verified: {}",
            check.diagnostic.clone().unwrap_or_default()
        )));
    }
    let ideal = f.base_ideal()?;
    let d_prime = check.d_prime;
    let top = check_up_to.min(d_prime).max(1);

    let mut hypotheses = Vec::new();
    let depth_ok = depth_positive(&ideal)?;
    hypotheses.push(Hypothesis {
        name: HYP_DEPTH,
        status: if depth_ok {
            HypothesisStatus::Holds
        } else {
            HypothesisStatus::Violated { detail: "the base ideal is not saturated".into() }
        },
    });
    let primary = match MonomialIdeal::from_ideal(&ideal) {
        Ok(mono) if mono.is_squarefree() => match primary_quotient_violation(&mono, d_prime)? {
            Some(detail) => HypothesisStatus::Violated { detail },
            None => HypothesisStatus::Holds,
        },
        _ => HypothesisStatus::Asserted,
    };
    hypotheses.push(Hypothesis { name: HYP_PRIMARY, status: primary });
    hypotheses.push(Hypothesis { name: HYP_REES_S2, status: HypothesisStatus::Asserted });

    let entries: Vec<ScanEntry> = (1..=top)
        .into_par_iter()
        .map(|l| match compare(&ideal, l, strategy) {
            Ok(r) => ScanEntry { n: l, report: Some(r), error: None, guard_abort: false },
            Err(e) => ScanEntry { n: l, report: None, guard_abort: e.is_guard_abort(), error: Some(e.to_string()) },
        })
        .collect();
    if let Some(e) = entries.iter().find(|e| e.report.is_none() && !e.guard_abort) {
        return Err(Error::InvalidStrategy(e.error.clone().unwrap_or_default()));
    }
    let observed_first_failure = entries
        .iter()
        .find(|e| e.report.as_ref().is_some_and(|r| !r.equal))
        .map(|e| e.n);

    let mut report = ProbeReport {
        predicted_failure: d_prime,
        check,
        hypotheses,
        observed_first_failure,
        confirms_prediction: None,
        inversion_in_symbolic: None,
        inversion_in_ordinary: None,
        witness_reduced_degree: None,
        entries,
    };
    if check_up_to >= d_prime {
        let decided = report.entries.iter().all(|e| e.report.is_some());
        if decided {
            let ok = report.entries.iter().all(|e| {
                let r = e.report.as_ref().unwrap();
                r.equal == (e.n < d_prime)
            });
            report.confirms_prediction = Some(ok);
        }
        let dform = report.check.source_inversion.clone().unwrap();
        let power = ideal.power(d_prime)?;
        report.inversion_in_symbolic = Some(symbolic_power(&ideal, d_prime, strategy)?.contains(&dform)?);
        report.inversion_in_ordinary = Some(power.contains(&dform)?);
        let last = report.entries.last().and_then(|e| e.report.as_ref());
        if let Some(w) = last.and_then(|r| r.witness.as_ref()) {
            let reduced = power.gb()?.normal_form(w)?;
            report.witness_reduced_degree = reduced.degree();
        }
    }
    Ok(report)
}
