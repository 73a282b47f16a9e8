use std::fmt;
use std::sync::Arc;

use super::field::{is_prime, Field};
use super::monomial::{MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// Shared handle to a ring description.
pub type Ring = Arc<RingSpec>;

/// `k[x_1, ..., x_d]` together with the monomial order its polynomials use.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl RingSpec {
    /// Validates and builds a ring with the default graded reverse
    /// lexicographic order.
    pub fn new(field: Field, vars: Vec<String>) -> Result<Ring> {
        Self::with_order(field, vars, MonomialOrder::GradedReverseLex)
    }

    pub fn with_order(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        if let Field::Prime(p) = field {
            if p <= 2 || !is_prime(p as u64) || p >= 1 << 31 {
                return Err(Error::BadModulus(p as u64));
            }
        }
        if vars.is_empty() {
            return Err(Error::Precondition("a ring needs at least one variable".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::Precondition(format!("at most {MAX_VARS} variables supported")));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::Precondition("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::BlockElimination(k) = order {
            if k == 0 || k >= vars.len() {
                return Err(Error::Precondition(format!(
                    "elimination block {k} must be inside 1..{}",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(RingSpec { field, vars, order }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same field and variables, ignoring the order.
    pub fn same_base(&self, other: &RingSpec) -> bool {
        self.field == other.field && self.vars == other.vars
    }

    pub fn reordered(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingSpec { field: self.field, vars: self.vars.clone(), order })
    }

    /// Prepends `k` fresh variables and switches to the order eliminating
    /// them.
    pub fn with_elimination_vars(&self, k: usize) -> Result<Ring> {
        let mut vars = Vec::with_capacity(self.nvars() + k);
        let mut n = 0;
        while vars.len() < k {
            let name = format!("_t{n}");
            n += 1;
            if !self.vars.contains(&name) {
                vars.push(name);
            }
        }
        vars.extend(self.vars.iter().cloned());
        Self::with_order(self.field, vars, MonomialOrder::BlockElimination(k))
    }

    /// Ring on the last `nvars - k` variables with the default order.
    pub fn drop_front(&self, k: usize) -> Result<Ring> {
        Self::new(self.field, self.vars[k..].to_vec())
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}
