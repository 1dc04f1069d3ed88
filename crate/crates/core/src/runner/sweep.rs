use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;

use super::config::{SweepConfig, SweepSpec};
use super::report::{Report, ResultRecord};
use crate::checks::{Args, CheckDef, Param};
use crate::exact::{Rational, SequenceCache};

#[derive(Debug, Clone, Copy, Default)]
pub struct SweepOptions {
    /// Force single-threaded evaluation regardless of each spec's parallelism.
    pub serial: bool,
}

/// Cartesian product of a spec's parameter values, in the check's declared
/// parameter order. Assumes the config has been validated.
pub fn expand_spec(def: &CheckDef, spec: &SweepSpec) -> Vec<Args> {
    let mut points = vec![Args::new()];
    for (name, _) in def.params {
        let Some(range) = spec.params.get(*name) else {
            continue;
        };
        let values = range.values().expect("validated config");
        points = points
            .into_iter()
            .flat_map(|args| {
                values.iter().map(move |v| {
                    let mut next = args.clone();
                    next.insert(name, v.clone());
                    next
                })
            })
            .collect();
    }
    points
}

fn declared_params(def: &CheckDef, args: &Args) -> Vec<Param> {
    def.params
        .iter()
        .filter_map(|(name, _)| {
            args.get(name).map(|v| Param {
                name: (*name).to_owned(),
                value: v.clone(),
            })
        })
        .collect()
}

pub fn evaluate_point(cache: &SequenceCache, def: &CheckDef, args: &Args) -> ResultRecord {
    match def.run(cache, args) {
        Ok(result) => ResultRecord::from_result(&result),
        Err(err) => ResultRecord::from_error(def.name, &declared_params(def, args), &err),
    }
}

struct Keyed {
    check: &'static str,
    key: Vec<Option<Rational>>,
    record: ResultRecord,
}

fn compare(a: &Keyed, b: &Keyed) -> Ordering {
    a.check.cmp(b.check).then_with(|| a.key.cmp(&b.key))
}

fn default_parallelism() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Evaluates every grid point of every spec. Records are sorted by check
/// name, then by parameter tuple in declared order, so the result does not
/// depend on scheduling.
pub fn run_sweep(cache: &SequenceCache, config: &SweepConfig, options: SweepOptions) -> Report {
    let started = Instant::now();
    let mut keyed = Vec::new();
    for spec in &config.specs {
        let def = spec.definition().expect("validated config");
        let points = expand_spec(def, spec);
        let eval = |args: &Args| Keyed {
            check: def.name,
            key: def
                .params
                .iter()
                .map(|(n, _)| args.get(n).cloned())
                .collect(),
            record: evaluate_point(cache, def, args),
        };
        let threads = if options.serial {
            1
        } else {
            spec.parallelism.unwrap_or_else(default_parallelism)
        };
        if threads <= 1 {
            keyed.extend(points.iter().map(eval));
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool");
            let out: Vec<Keyed> = pool.install(|| points.par_iter().map(eval).collect());
            keyed.extend(out);
        }
    }
    keyed.sort_by(compare);
    let records = keyed.into_iter().map(|k| k.record).collect();
    Report::new(records, started.elapsed().as_millis() as u64)
}
