//! Verification of identities (exact) and congruences (modular).
//!
//! Every check returns a [`CheckResult`] carrying both sides of each
//! comparison it made, whether or not they agree. A false statement is a
//! failed result, never an `Err`; errors are reserved for inputs outside a
//! statement's hypotheses.

mod congruence;
mod identity;
mod registry;

use std::fmt;

use thiserror::Error;

use crate::error::ArithError;
use crate::exact::{Integer, Rational};
use crate::modular::Residue;

pub use congruence::*;
pub use identity::*;
pub use registry::{find_check, registry, Args, CheckDef, ParamKind};

/// Largest sequence index a check will compute.
pub const MAX_INDEX: u64 = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("bad argument: {0}")]
    BadArgument(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub(crate) fn require(cond: bool, what: impl FnOnce() -> String) -> Result<(), CheckError> {
    if cond {
        Ok(())
    } else {
        Err(CheckError::Precondition(what()))
    }
}

pub(crate) fn require_index(n: u64) -> Result<usize, CheckError> {
    require(n <= MAX_INDEX, || {
        format!("index {n} exceeds the supported maximum {MAX_INDEX}")
    })?;
    Ok(n as usize)
}

/// One side of a comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Exact(Rational),
    Residue(Residue),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => q.fmt(f),
            Value::Residue(r) => r.value().fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub label: Option<String>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Comparison {
    pub fn exact(lhs: Rational, rhs: Rational) -> Self {
        Comparison {
            label: None,
            lhs: Value::Exact(lhs),
            rhs: Value::Exact(rhs),
        }
    }

    pub fn modular(lhs: Residue, rhs: Residue) -> Self {
        Comparison {
            label: None,
            lhs: Value::Residue(lhs),
            rhs: Value::Residue(rhs),
        }
    }

    pub fn labeled(mut self, label: &str) -> Self {
        self.label = Some(label.to_owned());
        self
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn modulus(&self) -> Option<&Integer> {
        match &self.lhs {
            Value::Residue(r) => Some(r.modulus().value()),
            Value::Exact(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Param {
    pub name: String,
    pub value: Rational,
}

/// Evidence for one evaluated statement: its parameters and every
/// comparison made. It passes iff every comparison holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: String,
    pub params: Vec<Param>,
    pub parts: Vec<Comparison>,
}

impl CheckResult {
    pub fn new(check: &str) -> Self {
        CheckResult {
            check: check.to_owned(),
            params: Vec::new(),
            parts: Vec::new(),
        }
    }

    pub fn param(mut self, name: &str, value: impl Into<Integer>) -> Self {
        self.params.push(Param {
            name: name.to_owned(),
            value: Rational::from_integer(value.into()),
        });
        self
    }

    pub fn rational_param(mut self, name: &str, value: &Rational) -> Self {
        self.params.push(Param {
            name: name.to_owned(),
            value: value.clone(),
        });
        self
    }

    pub fn part(mut self, cmp: Comparison) -> Self {
        self.parts.push(cmp);
        self
    }

    pub fn passed(&self) -> bool {
        self.parts.iter().all(Comparison::holds)
    }

    fn joined(&self, side: impl Fn(&Comparison) -> String) -> String {
        if let [only] = self.parts.as_slice() {
            return side(only);
        }
        self.parts
            .iter()
            .map(|c| match &c.label {
                Some(l) => format!("{l}: {}", side(c)),
                None => side(c),
            })
            .collect::<Vec<_>>()
            .join("; ")
    }

    pub fn lhs_text(&self) -> String {
        self.joined(|c| c.lhs.to_string())
    }

    pub fn rhs_text(&self) -> String {
        self.joined(|c| c.rhs.to_string())
    }

    /// `None` when every comparison is exact.
    pub fn modulus_text(&self) -> Option<String> {
        if self.parts.iter().all(|c| c.modulus().is_none()) {
            return None;
        }
        Some(self.joined(|c| {
            c.modulus()
                .map_or_else(|| "exact".to_owned(), Integer::to_string)
        }))
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|p| format!("{}={}", p.name, p.value))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `check_name n=7 alpha=0: PASS 11442 ≡ 11442 (mod 16384)`
impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{} {}: {verdict} ", self.check, self.params_text())?;
        match self.modulus_text() {
            Some(m) => write!(f, "{} ≡ {} (mod {m})", self.lhs_text(), self.rhs_text()),
            None => write!(f, "{} = {}", self.lhs_text(), self.rhs_text()),
        }
    }
}
