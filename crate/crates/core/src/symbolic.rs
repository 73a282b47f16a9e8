//! Symbolic powers under explicit strategies, the comparison of `I^n` with
//! `I^(n)`, witness extraction and exponent scans.
//!
//! Every strategy carries the reason it computes the symbolic power. What can
//! be verified is verified before any power is formed; the rest is recorded
//! as asserted in the [`Provenance`] attached to each report.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{is_locally_ci, monomial_symbolic_power, MonomialIdeal};
use crate::polyring::{parse_poly, Poly, Ring};

/// Why saturating at the irrelevant ideal yields the symbolic power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    /// Radical of dimension one.
    Dim1Radical,
    /// Locally a complete intersection off the maximal ideal.
    LocallyCi,
    /// Homogeneous, one-dimensional, with a single minimal prime.
    UniqueMinimalPrimeDim1Homogeneous,
    /// Caller-supplied reason; nothing is required to hold.
    UserOverride(String),
}

impl Justification {
    pub fn parse(text: &str) -> Result<Justification> {
        let text = text.trim();
        Ok(match text {
            "dim1-radical" => Justification::Dim1Radical,
            "locally-ci" => Justification::LocallyCi,
            "unique-minimal-prime-dim1-homogeneous" => Justification::UniqueMinimalPrimeDim1Homogeneous,
            _ => match text.strip_prefix("user-override") {
                Some(rest) => {
                    let reason = rest.trim_start_matches(':').trim();
                    Justification::UserOverride(if reason.is_empty() { "unspecified".into() } else { reason.into() })
                }
                None => return Err(Error::InvalidStrategy(format!("unknown justification `{text}`"))),
            },
        })
    }

    pub fn name(&self) -> String {
        match self {
            Justification::Dim1Radical => "dim1-radical".into(),
            Justification::LocallyCi => "locally-ci".into(),
            Justification::UniqueMinimalPrimeDim1Homogeneous => "unique-minimal-prime-dim1-homogeneous".into(),
            Justification::UserOverride(r) => format!("user-override: {r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicStrategy {
    /// `I^(n) = (I^n : 𝔪^∞)`.
    SaturationAtIrrelevant(Justification),
    /// `I^(n) = ∩ P^n` over minimal primes; square-free monomial ideals only.
    MinimalPrimeIntersection,
    /// `I^(n) = (I^n : f^∞)` for a caller-chosen `f`.
    UserElementSaturation(Poly),
}

impl SymbolicStrategy {
    /// Reads `saturation-at-irrelevant`, `minimal-prime-intersection` or
    /// `user-element-saturation:<poly>`; the justification is only used by
    /// the first.
    pub fn parse(ring: &Ring, text: &str, justification: Option<&str>) -> Result<SymbolicStrategy> {
        let text = text.trim();
        if text == "saturation-at-irrelevant" {
            let j = justification.ok_or_else(|| {
                Error::InvalidStrategy("saturation-at-irrelevant needs a justification".into())
            })?;
            return Ok(SymbolicStrategy::SaturationAtIrrelevant(Justification::parse(j)?));
        }
        if text == "minimal-prime-intersection" {
            return Ok(SymbolicStrategy::MinimalPrimeIntersection);
        }
        if let Some(f) = text.strip_prefix("user-element-saturation") {
            let f = f.trim_start_matches(':').trim();
            return Ok(SymbolicStrategy::UserElementSaturation(parse_poly(ring, f)?));
        }
        Err(Error::InvalidStrategy(format!("unknown strategy `{text}`")))
    }

    pub fn name(&self) -> &'static str {
        match self {
            SymbolicStrategy::SaturationAtIrrelevant(_) => "saturation-at-irrelevant",
            SymbolicStrategy::MinimalPrimeIntersection => "minimal-prime-intersection",
            SymbolicStrategy::UserElementSaturation(_) => "user-element-saturation",
        }
    }

    pub fn justification(&self) -> Option<String> {
        match self {
            SymbolicStrategy::SaturationAtIrrelevant(j) => Some(j.name()),
            SymbolicStrategy::MinimalPrimeIntersection => Some("square-free monomial".into()),
            SymbolicStrategy::UserElementSaturation(f) => Some(format!("saturation by {f}")),
        }
    }
}

impl fmt::Display for SymbolicStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.justification() {
            Some(j) => write!(f, "{} ({j})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// Which hypotheses of a strategy were verified and which were taken on
/// trust.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub checked: Vec<String>,
    pub asserted: Vec<String>,
}

/// Verifies what can be verified about `strategy` for `ideal`.
pub fn validate(ideal: &Ideal, strategy: &SymbolicStrategy) -> Result<Provenance> {
    let mut prov = Provenance::default();
    match strategy {
        SymbolicStrategy::MinimalPrimeIntersection => {
            let mono = MonomialIdeal::from_ideal(ideal)
                .map_err(|_| Error::InvalidStrategy("minimal-prime-intersection needs a monomial ideal".into()))?;
            if !mono.is_squarefree() {
                return Err(Error::InvalidStrategy("minimal-prime-intersection needs a square-free ideal".into()));
            }
            prov.checked.push("square-free monomial ideal".into());
        }
        SymbolicStrategy::UserElementSaturation(f) => {
            if f.is_zero() {
                return Err(Error::InvalidStrategy("saturating by zero".into()));
            }
            prov.asserted.push(format!(
                "{f} lies in every embedded prime of each power and in no minimal prime"
            ));
        }
        SymbolicStrategy::SaturationAtIrrelevant(j) => {
            if !ideal.is_homogeneous() {
                return Err(Error::InvalidStrategy("saturation-at-irrelevant needs a homogeneous ideal".into()));
            }
            prov.checked.push("homogeneous".into());
            let dim = ideal.dimension()?;
            let saturated = ideal.saturate_irrelevant()?.1 == 0;
            let dim1 = |prov: &mut Provenance| -> Result<()> {
                if dim != 1 {
                    return Err(Error::InvalidStrategy(format!("dim R/I = {dim}, not 1")));
                }
                prov.checked.push("dim R/I = 1".into());
                if !saturated {
                    return Err(Error::InvalidStrategy(
                        "the maximal ideal is associated to R/I, so saturating overshoots".into(),
                    ));
                }
                prov.checked.push("I is saturated (maximal ideal not associated)".into());
                Ok(())
            };
            match j {
                Justification::Dim1Radical => {
                    dim1(&mut prov)?;
                    prov.asserted.push("I is radical".into());
                }
                Justification::UniqueMinimalPrimeDim1Homogeneous => {
                    dim1(&mut prov)?;
                    prov.asserted.push("I has a unique minimal prime".into());
                }
                Justification::LocallyCi => match MonomialIdeal::from_ideal(ideal) {
                    Ok(mono) if mono.is_squarefree() => {
                        let check = is_locally_ci(&mono)?;
                        if !check.locally_ci {
                            return Err(Error::InvalidStrategy(
                                "ideal is not locally a complete intersection".into(),
                            ));
                        }
                        prov.checked.push(format!(
                            "locally complete intersection at all {} proper monomial primes",
                            check.primes_checked
                        ));
                    }
                    _ => prov.asserted.push("I is locally a complete intersection".into()),
                },
                Justification::UserOverride(reason) => {
                    prov.asserted.push(reason.clone());
                    prov.checked.push(format!(
                        "dim R/I = {dim}; I {} saturated (informational)",
                        if saturated { "is" } else { "is not" }
                    ));
                }
            }
        }
    }
    Ok(prov)
}

/// `I^(n)` under `strategy`, with `I^n` supplied by the caller. Returns the
/// symbolic power and, for the irrelevant-ideal saturation, the stabilization
/// exponent it produced.
fn symbolic_from_power(
    ideal: &Ideal,
    power: &Ideal,
    n: u32,
    strategy: &SymbolicStrategy,
) -> Result<(Ideal, Option<usize>)> {
    match strategy {
        SymbolicStrategy::SaturationAtIrrelevant(_) => {
            let (sat, s) = power.saturate_irrelevant()?;
            Ok((sat, Some(s)))
        }
        SymbolicStrategy::MinimalPrimeIntersection => {
            let mono = MonomialIdeal::from_ideal(ideal)?;
            let sym = monomial_symbolic_power(&mono, n)?;
            Ok((sym.to_ideal(ideal.ring())?.with_guards(*ideal.guards()), None))
        }
        SymbolicStrategy::UserElementSaturation(f) => {
            let principal = Ideal::new(ideal.ring(), [f.clone()])?.with_guards(*ideal.guards());
            Ok((power.saturate(&principal)?.0, None))
        }
    }
}

/// `I^(n)` under a validated strategy; always contains `I^n`.
pub fn symbolic_power(ideal: &Ideal, n: u32, strategy: &SymbolicStrategy) -> Result<Ideal> {
    validate(ideal, strategy)?;
    let power = ideal.power(n)?;
    Ok(symbolic_from_power(ideal, &power, n, strategy)?.0)
}

/// Outcome of comparing `I^n` with `I^(n)`.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicReport {
    pub n: u32,
    pub equal: bool,
    /// Lowest-degree basis element of `I^(n)` outside `I^n`; among equal
    /// degrees the largest in graded reverse lex.
    #[serde(serialize_with = "ser_opt_poly")]
    pub witness: Option<Poly>,
    pub witness_degree: Option<u32>,
    /// Least `s` with `(I^n : 𝔪^s) = (I^n : 𝔪^{s+1})`.
    pub sat_exponent: usize,
    /// `I^n` is saturated, i.e. `depth R/I^n > 0`.
    pub depth_positive: bool,
    pub strategy: String,
    pub justification: Option<String>,
    pub provenance: Provenance,
}

fn ser_opt_poly<S: serde::Serializer>(p: &Option<Poly>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.collect_str(p),
        None => s.serialize_none(),
    }
}

fn compare_validated(ideal: &Ideal, n: u32, strategy: &SymbolicStrategy, prov: &Provenance) -> Result<SymbolicReport> {
    let power = ideal.power(n)?;
    let (sym, sat_from_strategy) = symbolic_from_power(ideal, &power, n, strategy)?;
    let sat_exponent = match sat_from_strategy {
        Some(s) => s,
        None => power.saturate_irrelevant()?.1,
    };
    if !sym.contains_ideal(&power)? {
        return Err(Error::InvalidStrategy(format!(
            "strategy produced an ideal not containing I^{n}; its hypotheses do not hold"
        )));
    }
    let power_gb = power.gb()?;
    let mut witness: Option<Poly> = None;
    for g in sym.gb()?.gens() {
        if power_gb.contains(g)? {
            continue;
        }
        let better = match &witness {
            None => true,
            Some(w) => g.degree() < w.degree(),
        };
        if better {
            witness = Some(g.clone());
        }
    }
    if let Some(w) = &witness {
        // Soundness re-check through fresh membership calls.
        debug_assert!(sym.contains(w)? && !power.contains(w)?);
    }
    Ok(SymbolicReport {
        n,
        equal: witness.is_none(),
        witness_degree: witness.as_ref().and_then(|w| w.degree()),
        witness,
        sat_exponent,
        depth_positive: sat_exponent == 0,
        strategy: strategy.name().into(),
        justification: strategy.justification(),
        provenance: prov.clone(),
    })
}

/// Compares `I^n` with `I^(n)`.
pub fn compare(ideal: &Ideal, n: u32, strategy: &SymbolicStrategy) -> Result<SymbolicReport> {
    let prov = validate(ideal, strategy)?;
    compare_validated(ideal, n, strategy, &prov)
}

/// One exponent of a scan: a report, or the error that stopped it.
#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub n: u32,
    pub report: Option<SymbolicReport>,
    pub error: Option<String>,
    pub guard_abort: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ScanSummary {
    FirstFailure { n: u32 },
    RigidUpTo { n: u32 },
    /// Some exponent could not be decided and no failure precedes it.
    Incomplete { first_undecided: u32 },
}

impl fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanSummary::FirstFailure { n } => write!(f, "first failure n={n}"),
            ScanSummary::RigidUpTo { n } => write!(f, "rigid up to n={n}"),
            ScanSummary::Incomplete { first_undecided } => write!(f, "undecided from n={first_undecided}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub entries: Vec<ScanEntry>,
    pub summary: ScanSummary,
}

/// Compares `I^n` with `I^(n)` for `n = 1..=n_max`, each exponent computed
/// on its own. Errors for one exponent are recorded and the scan continues.
pub fn rigidity_scan(ideal: &Ideal, n_max: u32, strategy: &SymbolicStrategy) -> Result<ScanReport> {
    if n_max < 2 {
        return Err(Error::Precondition("a scan needs n_max >= 2".into()));
    }
    let prov = validate(ideal, strategy)?;
    let entries: Vec<ScanEntry> = (1..=n_max)
        .into_par_iter()
        .map(|n| match compare_validated(ideal, n, strategy, &prov) {
            Ok(r) => ScanEntry { n, report: Some(r), error: None, guard_abort: false },
            Err(e) => ScanEntry { n, report: None, guard_abort: e.is_guard_abort(), error: Some(e.to_string()) },
        })
        .collect();
    let summary = summarize(&entries, n_max);
    Ok(ScanReport { entries, summary })
}

fn summarize(entries: &[ScanEntry], n_max: u32) -> ScanSummary {
    for e in entries {
        match &e.report {
            None => return ScanSummary::Incomplete { first_undecided: e.n },
            Some(r) if !r.equal => return ScanSummary::FirstFailure { n: e.n },
            _ => {}
        }
    }
    ScanSummary::RigidUpTo { n: n_max }
}
