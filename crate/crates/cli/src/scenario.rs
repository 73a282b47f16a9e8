//! Flat `key = value` scenario files and the field-to-task builder shared
//! with the subcommands.
//!
//! ```text
//! # tetrahedron scan
//! ring = QQ[x,y,z,w]
//! ideal = yzw, xzw, xyw, xyz
//! task = scan
//! n_max = 3
//! strategy = minimal-prime-intersection
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use sympow_core::{parse_ring, CremonaMap, Error, Guards, Ideal, Ring, SymbolicStrategy};

use crate::task::Task;

pub const KEYS: &[&str] = &[
    "task",
    "ring",
    "ideal",
    "forms",
    "inverse",
    "n",
    "n_max",
    "check_up_to",
    "strategy",
    "justification",
    "guard_degree",
    "guard_seconds",
];

/// An input problem, located in a scenario file when it came from one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl InputError {
    pub fn plain(message: impl Into<String>) -> Self {
        InputError { line: None, column: None, message: message.into() }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (Some(l), None) => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for InputError {}

/// One value and where it sits: 1-based line and column of its first
/// character, or neither for values given on the command line.
#[derive(Clone, Debug)]
pub struct Field {
    pub value: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl Field {
    pub fn cli(value: impl Into<String>) -> Field {
        Field { value: value.into(), line: None, column: None }
    }

    fn err(&self, key: &str, message: impl fmt::Display) -> InputError {
        let message = if self.line.is_some() { message.to_string() } else { format!("{key}: {message}") };
        InputError { line: self.line, column: self.column, message }
    }

    /// Maps a core error, moving offsets inside the value to file columns.
    fn core_err(&self, key: &str, e: Error) -> InputError {
        let offset = match &e {
            Error::Syntax { position, .. } | Error::UnknownVariable { position, .. } => Some(*position),
            _ => None,
        };
        let mut out = self.err(key, &e);
        if let (Some(col), Some(off)) = (self.column, offset) {
            out.column = Some(col + off);
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct Fields(pub BTreeMap<String, Field>);

impl Fields {
    pub fn insert(&mut self, key: &str, field: Field) {
        self.0.insert(key.to_string(), field);
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.0.get(key)
    }

    fn require(&self, key: &str) -> Result<&Field, InputError> {
        self.get(key).ok_or_else(|| InputError::plain(format!("missing `{key}`")))
    }

    fn number<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, InputError> {
        match self.get(key) {
            None => Ok(None),
            Some(f) => f.value.trim().parse().map(Some).map_err(|_| f.err(key, format!("`{}` is not a valid number", f.value))),
        }
    }

    fn ring(&self) -> Result<Ring, InputError> {
        let f = self.require("ring")?;
        parse_ring(&f.value).map_err(|e| f.core_err("ring", e))
    }

    fn ideal(&self, ring: &Ring, guards: Guards) -> Result<Ideal, InputError> {
        let f = self.require("ideal")?;
        Ok(Ideal::parse(ring, &f.value).map_err(|e| f.core_err("ideal", e))?.with_guards(guards))
    }

    fn map(&self, key: &str, ring: &Ring, guards: Guards) -> Result<CremonaMap, InputError> {
        let f = self.require(key)?;
        Ok(CremonaMap::parse(ring, &f.value).map_err(|e| f.core_err(key, e))?.with_guards(guards))
    }

    fn strategy(&self, ring: &Ring) -> Result<SymbolicStrategy, InputError> {
        let f = self.require("strategy")?;
        let j = self.get("justification");
        SymbolicStrategy::parse(ring, &f.value, j.map(|j| j.value.as_str())).map_err(|e| match (&e, j) {
            (Error::InvalidStrategy(m), Some(j)) if m.contains("justification") => j.err("justification", &e),
            _ => f.err("strategy", &e),
        })
    }

    pub fn guards(&self) -> Result<Guards, InputError> {
        let mut g = Guards::default();
        if let Some(d) = self.number::<u32>("guard_degree")? {
            if d == 0 {
                return Err(self.get("guard_degree").unwrap().err("guard_degree", "guards must be positive"));
            }
            g.max_degree = d;
        }
        if let Some(s) = self.number::<f64>("guard_seconds")? {
            if !(s > 0.0 && s.is_finite()) {
                return Err(self.get("guard_seconds").unwrap().err("guard_seconds", "guards must be positive"));
            }
            g.time_budget = Some(Duration::from_secs_f64(s));
        }
        Ok(g)
    }

    fn positive(&self, key: &str) -> Result<u32, InputError> {
        let v = self.number::<u32>(key)?.ok_or_else(|| InputError::plain(format!("missing `{key}`")))?;
        if v == 0 {
            return Err(self.get(key).unwrap().err(key, "must be at least 1"));
        }
        Ok(v)
    }

    /// Builds the task named by `task`.
    pub fn task(&self) -> Result<Task, InputError> {
        let t = self.require("task")?;
        let guards = self.guards()?;
        let ring = || self.ring();
        Ok(match t.value.trim() {
            "profile" => Task::Profile { ideal: self.ideal(&ring()?, guards)? },
            "resolve" => Task::Resolve { ideal: self.ideal(&ring()?, guards)? },
            "classify" => Task::Classify { ideal: self.ideal(&ring()?, guards)? },
            "compare" => {
                let r = ring()?;
                Task::Compare { ideal: self.ideal(&r, guards)?, n: self.positive("n")?, strategy: self.strategy(&r)? }
            }
            "scan" => {
                let r = ring()?;
                let n_max = self.positive("n_max")?;
                if n_max < 2 {
                    return Err(self.get("n_max").unwrap().err("n_max", "a scan needs n_max >= 2"));
                }
                Task::Scan { ideal: self.ideal(&r, guards)?, n_max, strategy: self.strategy(&r)? }
            }
            "cremona-verify" => {
                let r = ring()?;
                Task::CremonaVerify { forms: self.map("forms", &r, guards)?, inverse: self.map("inverse", &r, guards)? }
            }
            "cremona-probe" => {
                let r = ring()?;
                Task::CremonaProbe {
                    forms: self.map("forms", &r, guards)?,
                    inverse: self.map("inverse", &r, guards)?,
                    strategy: self.strategy(&r)?,
                    check_up_to: self.number("check_up_to")?,
                }
            }
            other => return Err(t.err("task", format!("unknown task `{other}`"))),
        })
    }
}

/// Reads a scenario file into fields. Blank lines and lines starting with
/// `#` are skipped.
pub fn parse_scenario(text: &str) -> Result<Fields, InputError> {
    let mut fields = Fields::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let key_col = raw.len() - trimmed.len() + 1;
        let Some(eq) = raw.find('=') else {
            return Err(InputError { line: Some(line), column: Some(key_col), message: "expected `key = value`".into() });
        };
        let key = raw[..eq].trim();
        if !KEYS.contains(&key) {
            return Err(InputError { line: Some(line), column: Some(key_col), message: format!("unknown key `{key}`") });
        }
        if fields.get(key).is_some() {
            return Err(InputError { line: Some(line), column: Some(key_col), message: format!("duplicate key `{key}`") });
        }
        let after = &raw[eq + 1..];
        let value = after.trim();
        if value.is_empty() {
            return Err(InputError { line: Some(line), column: Some(eq + 2), message: format!("empty value for `{key}`") });
        }
        let column = eq + 2 + (after.len() - after.trim_start().len());
        fields.insert(key, Field { value: value.to_string(), line: Some(line), column: Some(column) });
    }
    Ok(fields)
}
