use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::checks::{find_check, CheckDef};
use crate::exact::{Integer, Rational};
use crate::modular::primes_between;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("specs[{index}]: {message}")]
    Invalid { index: usize, message: String },
}

/// Top-level sweep file: `{"specs": [...]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub specs: Vec<SweepSpec>,
}

/// One check evaluated over the cartesian product of its parameter ranges.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub check: String,
    #[serde(default)]
    pub params: BTreeMap<String, ParamRange>,
    #[serde(default)]
    pub parallelism: Option<usize>,
}

/// `{"range": [lo, hi]}`, `{"range": [lo, hi, step]}`, `{"list": [..]}`
/// or `{"primes": [lo, hi]}` (all primes in the inclusive interval).
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ParamRange {
    Range(Vec<i64>),
    List(Vec<Literal>),
    Primes([u64; 2]),
}

/// A list entry: a JSON integer or a string holding an integer or `num/den`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn to_rational(&self) -> Option<Rational> {
        match self {
            Literal::Int(v) => Some(Rational::from_integer(Integer::from(*v))),
            Literal::Text(s) => parse_rational(s),
        }
    }
}

/// Parses `7`, `-3`, or `5/3` (nonzero denominator).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: Integer = n.trim().parse().ok()?;
            let d: Integer = d.trim().parse().ok()?;
            if d == Integer::from(0) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => text.parse::<Integer>().ok().map(Rational::from_integer),
    }
}

impl ParamRange {
    pub fn values(&self) -> Result<Vec<Rational>, String> {
        let values = match self {
            ParamRange::Range(bounds) => {
                let (lo, hi, step) = match bounds.as_slice() {
                    [lo, hi] => (*lo, *hi, 1),
                    [lo, hi, step] => (*lo, *hi, *step),
                    _ => return Err("range must be [lo, hi] or [lo, hi, step]".into()),
                };
                if step < 1 {
                    return Err(format!("range step {step} must be positive"));
                }
                if lo > hi {
                    return Err(format!("empty range [{lo}, {hi}]"));
                }
                (lo..=hi)
                    .step_by(step as usize)
                    .map(|v| Rational::from_integer(Integer::from(v)))
                    .collect()
            }
            ParamRange::List(items) => items
                .iter()
                .map(|l| {
                    l.to_rational()
                        .ok_or_else(|| format!("cannot parse list entry {l:?}"))
                })
                .collect::<Result<Vec<_>, _>>()?,
            ParamRange::Primes([lo, hi]) => primes_between(*lo, *hi)
                .into_iter()
                .map(|p| Rational::from_integer(Integer::from(p)))
                .collect(),
        };
        if values.is_empty() {
            return Err("parameter range is empty".into());
        }
        Ok(values)
    }
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let cfg: SweepConfig = serde_json::from_str(text).map_err(|e| ConfigError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    /// Every spec names a registered check, matches its signature, has
    /// non-empty ranges and a positive parallelism.
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (index, spec) in self.specs.iter().enumerate() {
            let invalid = |message: String| ConfigError::Invalid { index, message };
            let def = spec.definition().map_err(invalid)?;
            def.validate_names(spec.params.keys().map(String::as_str))
                .map_err(|e| invalid(e.to_string()))?;
            for (name, range) in &spec.params {
                range
                    .values()
                    .map_err(|e| invalid(format!("parameter `{name}`: {e}")))?;
            }
            if spec.parallelism == Some(0) {
                return Err(invalid("parallelism must be positive".into()));
            }
        }
        Ok(())
    }
}

impl SweepSpec {
    pub fn definition(&self) -> Result<&'static CheckDef, String> {
        find_check(&self.check).ok_or_else(|| format!("unknown check `{}`", self.check))
    }
}
