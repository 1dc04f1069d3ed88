//! Exact sequences, polynomials and combinatorial helpers.

mod cache_file;
mod combinatorics;
mod polynomial;
mod sequences;

pub use cache_file::{
    load_cache, parse_cache, save_cache, write_cache, CacheFileError, CacheRecords, LoadStats,
};
pub use combinatorics::{binomial, binomial_row, factorial_valuation};
pub use polynomial::{poly_eval, poly_integral, Polynomial};
pub use sequences::{
    bernoulli_number, bernoulli_polynomial, euler_number, euler_polynomial, u_number, u_polynomial,
    Sequence, SequenceCache,
};

/// Signed arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Normalized fraction of [`Integer`]s; every construction reduces.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub(crate) fn int_rat(n: Integer) -> Rational {
    Rational::from_integer(n)
}
