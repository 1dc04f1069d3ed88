//! Exact computation of the sequence `U_n` (`U_0 = 1`,
//! `U_n = -2 * sum_{k>=1} C(n,2k) U_{n-2k}`), its polynomials `U_n(x)`,
//! the Euler and Bernoulli families, and a harness that verifies the
//! identities and congruences those sequences satisfy.
//!
//! - [`exact`]: big-integer/rational sequences, polynomials and the shared
//!   [`SequenceCache`](exact::SequenceCache).
//! - [`modular`]: residues, inverses, Legendre symbols and the
//!   `4p = L^2 + 27M^2` representation.
//! - [`checks`]: every identity and congruence as a function returning a
//!   [`CheckResult`](checks::CheckResult), plus a name-keyed registry.
//! - [`runner`]: grid sweeps from JSON configs and JSON reports.

pub mod checks;
pub mod error;
pub mod exact;
pub mod modular;
pub mod runner;

pub use error::ArithError;
pub use exact::{Integer, Polynomial, Rational, SequenceCache};
