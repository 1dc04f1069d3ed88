use num_traits::{One, Zero};

use super::Integer;
use crate::error::ArithError;
use crate::modular::is_prime;

/// `C(n, k)`, zero outside `0 <= k <= n`.
///
/// Multiplicative formula with a running exact division, so no factorials
/// are ever formed.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The full row `C(n, 0), ..., C(n, n)`.
pub fn binomial_row(n: u64) -> Vec<Integer> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut acc = Integer::one();
    row.push(acc.clone());
    for i in 0..n {
        acc *= n - i;
        acc /= i + 1;
        row.push(acc.clone());
    }
    row
}

/// `ord_p(n!)` by Legendre's formula `sum_i [n / p^i]`.
pub fn factorial_valuation(n: u64, p: u64) -> Result<u64, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    Ok(total)
}
