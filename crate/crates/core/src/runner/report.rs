use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::checks::{CheckError, CheckResult, Param};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One grid point. Sequence values, residues and moduli are decimal
/// strings so nothing is truncated to a machine integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub modulus: Option<String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn param_map(params: &[Param]) -> BTreeMap<String, String> {
    params
        .iter()
        .map(|p| (p.name.clone(), p.value.to_string()))
        .collect()
}

impl ResultRecord {
    pub fn from_result(result: &CheckResult) -> Self {
        ResultRecord {
            check: result.check.clone(),
            params: param_map(&result.params),
            modulus: result.modulus_text(),
            lhs: Some(result.lhs_text()),
            rhs: Some(result.rhs_text()),
            status: if result.passed() {
                Status::Pass
            } else {
                Status::Fail
            },
            reason: None,
        }
    }

    /// Precondition violations become skips; any other error means the
    /// statement applied but could not be evaluated, which is a failure.
    pub fn from_error(check: &str, params: &[Param], err: &CheckError) -> Self {
        let status = match err {
            CheckError::Precondition(_) | CheckError::BadArgument(_) => Status::Skip,
            CheckError::Arith(_) => Status::Fail,
        };
        ResultRecord {
            check: check.to_owned(),
            params: param_map(params),
            modulus: None,
            lhs: None,
            rhs: None,
            status,
            reason: Some(err.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn tally(records: &[ResultRecord]) -> Self {
        let count = |s: Status| records.iter().filter(|r| r.status == s).count();
        Summary {
            total: records.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skip),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub generated_at: String,
    pub results: Vec<ResultRecord>,
    pub summary: Summary,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(results: Vec<ResultRecord>, elapsed_ms: u64) -> Self {
        Report {
            version: env!("CARGO_PKG_VERSION").to_owned(),
            generated_at: humantime::format_rfc3339_seconds(std::time::SystemTime::now())
                .to_string(),
            summary: Summary::tally(&results),
            results,
            elapsed_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn is_consistent(&self) -> bool {
        self.summary == Summary::tally(&self.results)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without its run-dependent fields (`generated_at`,
    /// `elapsed_ms`); identical configs give identical bodies.
    pub fn body_json(&self) -> String {
        #[derive(Serialize)]
        struct Body<'a> {
            version: &'a str,
            results: &'a [ResultRecord],
            summary: &'a Summary,
        }
        serde_json::to_string_pretty(&Body {
            version: &self.version,
            results: &self.results,
            summary: &self.summary,
        })
        .expect("report serializes")
    }

    /// Records of one check whose parameters include every given pair.
    pub fn find<'a>(
        &'a self,
        check: &'a str,
        params: &'a [(&'a str, &'a str)],
    ) -> impl Iterator<Item = &'a ResultRecord> + 'a {
        self.results.iter().filter(move |r| {
            r.check == check
                && params
                    .iter()
                    .all(|(k, v)| r.params.get(*k).map(String::as_str) == Some(*v))
        })
    }
}
