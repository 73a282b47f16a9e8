//! Tasks shared by the subcommands and scenario files, and their execution
//! into a console table plus a JSON document.

use std::fmt::Write as _;

use serde_json::{json, Value};
use sympow_core::cremona::{HypothesisStatus, ProbeReport};
use sympow_core::homological::predicates_from;
use sympow_core::{
    classify_graph, compare, nonrigidity_probe, resolve, rigidity_scan, verify_inverse, CremonaMap, Error,
    Ideal, MonomialIdeal, ScanEntry, SymbolicReport, SymbolicStrategy,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub enum Task {
    Profile { ideal: Ideal },
    Resolve { ideal: Ideal },
    Compare { ideal: Ideal, n: u32, strategy: SymbolicStrategy },
    Scan { ideal: Ideal, n_max: u32, strategy: SymbolicStrategy },
    Classify { ideal: Ideal },
    CremonaVerify { forms: CremonaMap, inverse: CremonaMap },
    CremonaProbe { forms: CremonaMap, inverse: CremonaMap, strategy: SymbolicStrategy, check_up_to: Option<u32> },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Profile { .. } => "profile",
            Task::Resolve { .. } => "resolve",
            Task::Compare { .. } => "compare",
            Task::Scan { .. } => "scan",
            Task::Classify { .. } => "classify",
            Task::CremonaVerify { .. } => "cremona-verify",
            Task::CremonaProbe { .. } => "cremona-probe",
        }
    }
}

/// Result of a task: text for the console, a JSON payload, and whether a
/// resource guard cut part of it short.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub guard_abort: bool,
}

/// Wraps a payload with the schema version and the command name.
pub fn envelope(command: &str, status: &str, result: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "status": status,
        "result": result,
    })
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn report_line(r: &SymbolicReport) -> String {
    let mut s = format!("n={:<3} {}", r.n, if r.equal { "equal  " } else { "UNEQUAL" });
    let _ = write!(s, "  sat_exponent={}  depth_positive={}", r.sat_exponent, r.depth_positive);
    if let Some(w) = &r.witness {
        let _ = write!(s, "  witness={} (degree {})", w, r.witness_degree.unwrap_or(0));
    }
    s
}

fn provenance_text(r: &SymbolicReport) -> String {
    let mut s = format!("strategy: {}", r.strategy);
    if let Some(j) = &r.justification {
        let _ = write!(s, " [{j}]");
    }
    s.push('\n');
    for c in &r.provenance.checked {
        let _ = writeln!(s, "  checked:  {c}");
    }
    for a in &r.provenance.asserted {
        let _ = writeln!(s, "  asserted: {a}");
    }
    s
}

fn entries_text(entries: &[ScanEntry]) -> String {
    let mut s = String::new();
    for e in entries {
        match (&e.report, &e.error) {
            (Some(r), _) => {
                let _ = writeln!(s, "{}", report_line(r));
            }
            (None, Some(err)) => {
                let _ = writeln!(s, "n={:<3} {}: {err}", e.n, if e.guard_abort { "GUARD" } else { "ERROR" });
            }
            _ => {}
        }
    }
    s
}

fn profile(ideal: &Ideal) -> Result<Outcome, Error> {
    let prof = ideal.profile()?;
    let mut text = format!("ideal: {ideal}\nvariables {}  dim R/I {}  height {}", prof.nvars, prof.dim, prof.height);
    let mut result = json!({ "ideal": ideal.to_string(), "profile": to_value(&prof) });
    if ideal.is_homogeneous() {
        let res = resolve(ideal)?;
        let p = predicates_from(ideal, &res)?;
        let _ = write!(
            text,
            "  mu {}\npd R/I {}  depth R/I {}\nperfect {}  Cohen-Macaulay {}  complete intersection {}  almost complete intersection {}\nstrongly Cohen-Macaulay: {}\n",
            p.mu, p.pd, p.depth, p.perfect, p.cohen_macaulay, p.complete_intersection, p.almost_complete_intersection, p.strongly_cm
        );
        let _ = write!(text, "betti table:\n{}", res.betti());
        result["predicates"] = to_value(&p);
        result["betti"] = to_value(res.betti());
    } else {
        text.push('\n');
    }
    Ok(Outcome { text, json: result, guard_abort: false })
}

fn resolution(ideal: &Ideal) -> Result<Outcome, Error> {
    let res = resolve(ideal)?;
    let text = format!(
        "ideal: {ideal}\nranks {:?}  pd {}  depth {}\nbetti table:\n{}",
        res.ranks(),
        res.pd(),
        res.depth(),
        res.betti()
    );
    let json = json!({
        "ideal": ideal.to_string(),
        "ranks": res.ranks(),
        "pd": res.pd(),
        "depth": res.depth(),
        "betti": to_value(res.betti()),
        "tor_betti_agree": res.betti() == res.tor_betti(),
    });
    Ok(Outcome { text, json, guard_abort: false })
}

fn comparison(ideal: &Ideal, n: u32, strategy: &SymbolicStrategy) -> Result<Outcome, Error> {
    let r = compare(ideal, n, strategy)?;
    let text = format!("ideal: {ideal}\n{}{}\n", provenance_text(&r), report_line(&r));
    Ok(Outcome { text, json: to_value(&r), guard_abort: false })
}

fn scan(ideal: &Ideal, n_max: u32, strategy: &SymbolicStrategy) -> Result<Outcome, Error> {
    let s = rigidity_scan(ideal, n_max, strategy)?;
    let mut text = format!("ideal: {ideal}\n");
    if let Some(r) = s.entries.iter().find_map(|e| e.report.as_ref()) {
        text.push_str(&provenance_text(r));
    }
    text.push_str(&entries_text(&s.entries));
    let _ = writeln!(text, "summary: {}", s.summary);
    let guard_abort = s.entries.iter().any(|e| e.guard_abort);
    Ok(Outcome { text, json: to_value(&s), guard_abort })
}

fn classify(ideal: &Ideal) -> Result<Outcome, Error> {
    let mono = MonomialIdeal::from_ideal(ideal)?;
    let r = classify_graph(&mono)?;
    let text = format!(
        "ideal: {}\ngraph class: {}  edges {:?}\ncorresponding ideal {} of height {}\nverdict: {:?}\nsquare equals symbolic square: {}\n",
        r.ideal,
        r.class,
        r.edges,
        r.corresponding_ideal,
        r.corresponding_height,
        r.verdict,
        r.square_is_symbolic.map_or("n/a".to_string(), |b| b.to_string())
    );
    Ok(Outcome { text, json: to_value(&r), guard_abort: false })
}

fn cremona_verify(f: &CremonaMap, g: &CremonaMap) -> Result<Outcome, Error> {
    let c = verify_inverse(f, g)?;
    let mut text = format!("verified {}  d {}  d' {}  gabber_ok {}\n", c.verified, c.d, c.d_prime, c.gabber_ok);
    if let Some(d) = &c.source_inversion {
        let _ = writeln!(text, "source inversion D = {d} (degree {})", c.source_inversion_degree.unwrap_or(0));
        let _ = writeln!(text, "predicted first failure of I^l = I^(l): l = {}", c.predicted_failure);
    }
    if let Some(diag) = &c.diagnostic {
        let _ = writeln!(text, "diagnostic: {diag}");
    }
    Ok(Outcome { text, json: to_value(&c), guard_abort: false })
}

pub fn probe_text(p: &ProbeReport) -> String {
    let mut text = String::new();
    let _ = writeln!(
        text,
        "inverse verified: d {}  d' {}  D = {}",
        p.check.d,
        p.check.d_prime,
        p.check.source_inversion.as_ref().map(|d| d.to_string()).unwrap_or_default()
    );
    for h in &p.hypotheses {
        let status = match &h.status {
            HypothesisStatus::Holds => "holds".to_string(),
            HypothesisStatus::Asserted => "asserted".to_string(),
            HypothesisStatus::Violated { detail } => format!("VIOLATED ({detail})"),
        };
        let _ = writeln!(text, "hypothesis {}: {status}", h.name);
    }
    text.push_str(&entries_text(&p.entries));
    let _ = writeln!(
        text,
        "predicted failure l = {}; observed first failure {}",
        p.predicted_failure,
        p.observed_first_failure.map_or("none".into(), |l| l.to_string())
    );
    if let Some(c) = p.confirms_prediction {
        let _ = writeln!(text, "prediction confirmed: {c}");
    }
    if let (Some(a), Some(b)) = (p.inversion_in_symbolic, p.inversion_in_ordinary) {
        let _ = writeln!(text, "D in I^(d'): {a}   D in I^d': {b}");
    }
    text
}

pub fn execute(task: &Task) -> Result<Outcome, Error> {
    match task {
        Task::Profile { ideal } => profile(ideal),
        Task::Resolve { ideal } => resolution(ideal),
        Task::Compare { ideal, n, strategy } => comparison(ideal, *n, strategy),
        Task::Scan { ideal, n_max, strategy } => scan(ideal, *n_max, strategy),
        Task::Classify { ideal } => classify(ideal),
        Task::CremonaVerify { forms, inverse } => cremona_verify(forms, inverse),
        Task::CremonaProbe { forms, inverse, strategy, check_up_to } => {
            let up_to = check_up_to.unwrap_or(inverse.degree());
            let p = nonrigidity_probe(forms, inverse, strategy, up_to)?;
            let guard_abort = p.entries.iter().any(|e| e.guard_abort);
            Ok(Outcome { text: probe_text(&p), json: to_value(&p), guard_abort })
        }
    }
}
