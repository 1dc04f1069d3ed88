use num_traits::{One, Zero};

use super::{require, require_index, CheckError, CheckResult, Comparison};
use crate::exact::{binomial, binomial_row, int_rat, rat, Integer, Rational, SequenceCache};

fn pow(x: &Rational, n: usize) -> Rational {
    x.pow(n as i32)
}

fn shifted(x: &Rational, by: i64) -> Rational {
    x + rat(by, 1)
}

fn sign(exp: u64) -> Integer {
    if exp.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// `U_n(x-1) - U_n(x) + U_n(x+1) = x^n`.
pub fn check_translation(cache: &SequenceCache, n: usize, x: &Rational) -> CheckResult {
    let p = cache.u_polynomial(n);
    let lhs = p.eval(&shifted(x, -1)) - p.eval(x) + p.eval(&shifted(x, 1));
    CheckResult::new("check_translation")
        .param("n", n)
        .rational_param("x", x)
        .part(Comparison::exact(lhs, pow(x, n)))
}

/// `U_n(x) + U_n(x+3) = (x+1)^n + (x+2)^n`.
pub fn check_shift3_sum(cache: &SequenceCache, n: usize, x: &Rational) -> CheckResult {
    let p = cache.u_polynomial(n);
    let lhs = p.eval(x) + p.eval(&shifted(x, 3));
    let rhs = pow(&shifted(x, 1), n) + pow(&shifted(x, 2), n);
    CheckResult::new("check_shift3_sum")
        .param("n", n)
        .rational_param("x", x)
        .part(Comparison::exact(lhs, rhs))
}

/// `U_n(x+3) - U_n(x-3) = (x+2)^n + (x+1)^n - (x-1)^n - (x-2)^n`.
pub fn check_shift3_diff(cache: &SequenceCache, n: usize, x: &Rational) -> CheckResult {
    let p = cache.u_polynomial(n);
    let lhs = p.eval(&shifted(x, 3)) - p.eval(&shifted(x, -3));
    let rhs = pow(&shifted(x, 2), n) + pow(&shifted(x, 1), n)
        - pow(&shifted(x, -1), n)
        - pow(&shifted(x, -2), n);
    CheckResult::new("check_shift3_diff")
        .param("n", n)
        .rational_param("x", x)
        .part(Comparison::exact(lhs, rhs))
}

/// `U_n(x) = x^n - 2 sum_{k=1}^{[n/2]} C(n,2k) U_{n-2k}(x)`.
pub fn check_poly_recurrence(
    cache: &SequenceCache,
    n: usize,
    x: &Rational,
) -> Result<CheckResult, CheckError> {
    require(n >= 1, || "n >= 1".into())?;
    let row = binomial_row(n as u64);
    let mut sum = Rational::zero();
    for k in 1..=n / 2 {
        sum += cache.u_polynomial(n - 2 * k).eval(x) * &row[2 * k];
    }
    let rhs = pow(x, n) - sum * Integer::from(2);
    Ok(CheckResult::new("check_poly_recurrence")
        .param("n", n)
        .rational_param("x", x)
        .part(Comparison::exact(cache.u_polynomial(n).eval(x), rhs)))
}

/// `∫_{a-3}^{a+3} U_n = ((a+2)^{n+1} + (a+1)^{n+1} - (a-1)^{n+1} - (a-2)^{n+1}) / (n+1)`.
pub fn check_integral_shift(cache: &SequenceCache, n: usize, a: &Rational) -> CheckResult {
    let lhs = cache
        .u_polynomial(n)
        .integral(&shifted(a, -3), &shifted(a, 3));
    let e = n + 1;
    let rhs = (pow(&shifted(a, 2), e) + pow(&shifted(a, 1), e)
        - pow(&shifted(a, -1), e)
        - pow(&shifted(a, -2), e))
        / Integer::from(e);
    CheckResult::new("check_integral_shift")
        .param("n", n)
        .rational_param("a", a)
        .part(Comparison::exact(lhs, rhs))
}

/// `U_n(x) = U_n + n ∫_0^x U_{n-1}(t) dt`.
pub fn check_antiderivative(
    cache: &SequenceCache,
    n: usize,
    x: &Rational,
) -> Result<CheckResult, CheckError> {
    require(n >= 1, || "n >= 1".into())?;
    let integral = cache.u_polynomial(n - 1).integral(&Rational::zero(), x);
    let rhs = int_rat(cache.u(n)) + integral * Integer::from(n);
    Ok(CheckResult::new("check_antiderivative")
        .param("n", n)
        .rational_param("x", x)
        .part(Comparison::exact(cache.u_polynomial(n).eval(x), rhs)))
}

/// `sum_{k<m} k^n = (B_{n+1}(m) - B_{n+1})/(n+1)` and
/// `sum_{k<m} (-1)^k k^n = (E_n(0) - (-1)^m E_n(m))/2`.
pub fn check_classical_sums(
    cache: &SequenceCache,
    n: usize,
    m: u64,
) -> Result<CheckResult, CheckError> {
    require(n >= 1 && m >= 1, || "n, m >= 1".into())?;
    let n = require_index(n as u64)?;
    let mut plain = Integer::zero();
    let mut alternating = Integer::zero();
    for k in 0..m {
        let term = Integer::from(k).pow(n as u32);
        if k % 2 == 0 {
            alternating += &term;
        } else {
            alternating -= &term;
        }
        plain += term;
    }
    let mr = rat(m as i64, 1);
    let b = cache.bernoulli_polynomial(n + 1);
    let power_rhs = (b.eval(&mr) - cache.bernoulli(n + 1)) / Integer::from(n + 1);
    let e = cache.euler_polynomial(n);
    let alt_rhs = (e.eval(&Rational::zero()) - e.eval(&mr) * sign(m)) / Integer::from(2);
    Ok(CheckResult::new("check_classical_sums")
        .param("n", n)
        .param("m", m)
        .part(Comparison::exact(int_rat(plain), power_rhs).labeled("powers"))
        .part(Comparison::exact(int_rat(alternating), alt_rhs).labeled("alternating")))
}

/// Direct evaluation of `S_n(m) = (m-1)^n + (m-2)^n - (m-4)^n - (m-5)^n + ...`,
/// stopping at the first base `<= 0` (bases strictly decrease).
pub fn brute_s(n: u32, m: u64) -> Integer {
    let mut total = Integer::zero();
    let mut group = 0u64;
    loop {
        let top = m as i128 - 3 * group as i128 - 1;
        if top <= 0 {
            break;
        }
        let mut pair = Integer::from(top as u64).pow(n);
        if top > 1 {
            pair += Integer::from(top as u64 - 1).pow(n);
        }
        if group.is_multiple_of(2) {
            total += pair;
        } else {
            total -= pair;
        }
        if top <= 2 {
            break;
        }
        group += 1;
    }
    total
}

/// Closed form for `S_n(m)` in terms of `U_n(m)`, `U_n` and `U_n(1)`.
pub fn check_theorem_2_1(
    cache: &SequenceCache,
    n: usize,
    m: u64,
) -> Result<CheckResult, CheckError> {
    require(n >= 1 && m >= 1, || "n, m >= 1".into())?;
    let n = require_index(n as u64)?;
    let p = cache.u_polynomial(n);
    let at_m = p.eval(&rat(m as i64, 1));
    let u = int_rat(cache.u(n));
    let rhs = if m.is_multiple_of(3) {
        at_m - u * sign(m / 3)
    } else if n % 2 == 0 {
        at_m - u * sign((m + 1) / 3) / Integer::from(2)
    } else {
        at_m - p.eval(&Rational::one()) * sign(m / 3)
    };
    Ok(CheckResult::new("check_theorem_2_1")
        .param("n", n)
        .param("m", m)
        .part(Comparison::exact(int_rat(brute_s(n as u32, m)), rhs)))
}

/// Printed closed forms of `S_2(m)`, `S_3(m)`, `S_4(m)`.
pub fn check_corollary_2_1(m: u64) -> Result<CheckResult, CheckError> {
    require(m >= 1, || "m >= 1".into())?;
    let mi = Integer::from(m);
    let m2 = &mi * &mi;
    let divisible = m.is_multiple_of(3);
    let s2 = if divisible {
        &m2 - 2 + sign(m / 3) * 2
    } else {
        &m2 - 2 + sign((m + 1) / 3)
    };
    let s3 = if divisible {
        &m2 * &mi - &mi * 6
    } else {
        &m2 * &mi - &mi * 6 + sign(m / 3) * 5
    };
    let s4 = if divisible {
        &m2 * &m2 - &m2 * 12 + (Integer::one() - sign(m / 3)) * 22
    } else {
        &m2 * &m2 - &m2 * 12 + (Integer::from(2) - sign((m + 1) / 3)) * 11
    };
    let mut result = CheckResult::new("check_corollary_2_1").param("m", m);
    for (n, closed) in [(2u32, s2), (3, s3), (4, s4)] {
        result = result.part(
            Comparison::exact(int_rat(brute_s(n, m)), int_rat(closed)).labeled(&format!("S{n}")),
        );
    }
    Ok(result)
}

// (2/3) * (lead - sum_{k=1}^n C(2n,2k) base^{2k} U_{2n-2k})
fn corollary_2_2_form(cache: &SequenceCache, n: usize, lead: Integer, base: u32) -> Rational {
    let row = binomial_row(2 * n as u64);
    let base_sq = Integer::from(base * base);
    let mut power = Integer::one();
    let mut sum = Integer::zero();
    for k in 1..=n {
        power *= &base_sq;
        sum += &row[2 * k] * &power * cache.u(2 * n - 2 * k);
    }
    rat(2, 3) * (lead - sum)
}

/// Both expressions for `U_{2n}` obtained from `S_{2n}(4)` and `S_{2n}(8)`.
pub fn check_corollary_2_2(cache: &SequenceCache, n: usize) -> Result<CheckResult, CheckError> {
    require(n >= 1, || "n >= 1".into())?;
    let n = require_index(2 * n as u64)? / 2;
    let e = 2 * n as u32;
    let p = |b: u32| Integer::from(b).pow(e);
    let u = int_rat(cache.u(2 * n));
    let first = corollary_2_2_form(cache, n, p(2) + p(3), 4);
    let second = corollary_2_2_form(cache, n, p(7) + p(6) - p(4) - p(3) + 1, 8);
    Ok(CheckResult::new("check_corollary_2_2")
        .param("n", n)
        .part(Comparison::exact(u.clone(), first).labeled("m=4"))
        .part(Comparison::exact(u, second).labeled("m=8")))
}

/// `U_n(1) = U_n/2` and `U_n(2) = 1 - U_n/2` for even `n >= 2`. At `n = 0`
/// the first identity reads `1 = 1/2`, so zero is outside the domain.
pub fn check_special_values(cache: &SequenceCache, n: usize) -> Result<CheckResult, CheckError> {
    require(n.is_multiple_of(2) && n >= 2, || {
        "n even and n >= 2 (n = 0 gives U_0(1) = 1 != U_0/2)".into()
    })?;
    let p = cache.u_polynomial(n);
    let half = int_rat(cache.u(n)) / Integer::from(2);
    Ok(CheckResult::new("check_special_values")
        .param("n", n)
        .part(Comparison::exact(p.eval(&rat(1, 1)), half.clone()).labeled("x=1"))
        .part(Comparison::exact(p.eval(&rat(2, 1)), Rational::one() - half).labeled("x=2")))
}

/// `2^{2n} U_{2n} = sum_{k=0}^n C(2n,2k) 3^{2k} E_{2k}`.
pub fn check_lemma_4_1(cache: &SequenceCache, n: usize) -> Result<CheckResult, CheckError> {
    require(n >= 1, || "n >= 1".into())?;
    let n = require_index(2 * n as u64)? / 2;
    let row = binomial_row(2 * n as u64);
    let mut nine_pow = Integer::one();
    let mut rhs = Integer::zero();
    for k in 0..=n {
        rhs += &row[2 * k] * &nine_pow * cache.euler(2 * k);
        nine_pow *= 9;
    }
    let lhs = cache.u(2 * n) << (2 * n);
    Ok(CheckResult::new("check_lemma_4_1")
        .param("n", n)
        .part(Comparison::exact(int_rat(lhs), int_rat(rhs))))
}

/// `(3^{2n}+1) E_{2n} = sum_{r=0}^n C(2n,2r) 2^{2n-2r+1} 3^{2r} E_{2r}`.
pub fn check_lemma_5_1(cache: &SequenceCache, n: usize) -> Result<CheckResult, CheckError> {
    require(n >= 1, || "n >= 1".into())?;
    let n = require_index(2 * n as u64)? / 2;
    let row = binomial_row(2 * n as u64);
    let mut nine_pow = Integer::one();
    let mut rhs = Integer::zero();
    for r in 0..=n {
        rhs += (&row[2 * r] * &nine_pow * cache.euler(2 * r)) << (2 * n - 2 * r + 1);
        nine_pow *= 9;
    }
    let lhs = (Integer::from(3).pow(2 * n as u32) + 1) * cache.euler(2 * n);
    Ok(CheckResult::new("check_lemma_5_1")
        .param("n", n)
        .part(Comparison::exact(int_rat(lhs), int_rat(rhs))))
}

/// `C(2k, k)` partial sums are used by the prime congruences; kept here
/// with the other direct-summation helpers.
pub(crate) fn central_binomial_sum(p: u64) -> Integer {
    (0..p).map(|k| binomial(2 * k, k as i64)).sum()
}
