//! Grid sweeps over registered checks and the JSON report they produce.

mod config;
mod report;
mod sweep;

pub use config::{parse_rational, ConfigError, Literal, ParamRange, SweepConfig, SweepSpec};
pub use report::{Report, ResultRecord, Status, Summary};
pub use sweep::{evaluate_point, expand_spec, run_sweep, SweepOptions};
