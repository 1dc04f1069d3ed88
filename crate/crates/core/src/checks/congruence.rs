use num_traits::{One, Zero};

use super::identity::central_binomial_sum;
use super::{require, require_index, CheckError, CheckResult, Comparison};
use crate::exact::{binomial, binomial_row, rat, Integer, Rational, SequenceCache};
use crate::modular::{
    cornacchia_4p, is_prime, legendre_symbol, mod_inverse, ord_p, reduce_int, reduce_rational,
    totient_pow3, Modulus, Residue,
};

fn prime_above_3(p: u64) -> Result<(), CheckError> {
    require(p > 3 && is_prime(p), || {
        format!("p = {p} must be a prime > 3")
    })
}

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn big(v: u64) -> Integer {
    Integer::from(v)
}

/// `(p | 3)` as an integer.
fn legendre_p_3(p: u64) -> Integer {
    int(legendre_symbol(&big(p), 3).expect("3 is an odd prime") as i64)
}

fn residue_of(q: &Rational, m: &Modulus) -> Result<Residue, CheckError> {
    Ok(reduce_rational(q, m)?)
}

/// Resolves the 2-adic exponent: `ord_2(n)` unless a weaker `alpha` with
/// `2^alpha | n` is requested.
fn two_adic_alpha(n: u64, alpha: Option<u64>) -> Result<u64, CheckError> {
    let exact = ord_p(&big(n), 2)?;
    match alpha {
        None => Ok(exact),
        Some(a) => {
            require(a <= exact, || format!("2^{a} does not divide n = {n}"))?;
            Ok(a)
        }
    }
}

/// `sum_{k=1}^{[2p/3]} (-1)^{k-1}/k ≡ 3p (p|3) U_{p-3} (mod p^2)`.
pub fn check_1_2(cache: &SequenceCache, p: u64) -> Result<CheckResult, CheckError> {
    prime_above_3(p)?;
    let index = require_index(p - 3)?;
    let m = Modulus::power(p, 2);
    let mut lhs = Integer::zero();
    for k in 1..=2 * p / 3 {
        let inv = mod_inverse(&big(k), &m)?;
        if k % 2 == 1 {
            lhs += inv.value();
        } else {
            lhs -= inv.value();
        }
    }
    let rhs = big(3 * p) * legendre_p_3(p) * cache.u(index);
    Ok(CheckResult::new("check_1_2")
        .param("p", p)
        .part(Comparison::modular(
            reduce_int(&lhs, &m),
            reduce_int(&rhs, &m),
        )))
}

/// `B_{p-2}(1/3) ≡ 6 U_{p-3} (mod p)`.
pub fn check_1_3(cache: &SequenceCache, p: u64) -> Result<CheckResult, CheckError> {
    prime_above_3(p)?;
    let index = require_index(p - 3)?;
    let m = Modulus::try_from(p)?;
    let b = cache.bernoulli_polynomial(index + 1).eval(&rat(1, 3));
    Ok(CheckResult::new("check_1_3")
        .param("p", p)
        .part(Comparison::modular(
            residue_of(&b, &m)?,
            reduce_int(&(cache.u(index) * 6), &m),
        )))
}

/// `sum_{k=0}^{p-1} C(2k,k) ≡ (p|3) - 2p^2 U_{p-3} (mod p^3)`.
pub fn check_1_4(cache: &SequenceCache, p: u64) -> Result<CheckResult, CheckError> {
    prime_above_3(p)?;
    let index = require_index(p - 3)?;
    let m = Modulus::power(p, 3);
    let rhs = legendre_p_3(p) - big(2 * p * p) * cache.u(index);
    Ok(CheckResult::new("check_1_4")
        .param("p", p)
        .part(Comparison::modular(
            reduce_int(&central_binomial_sum(p), &m),
            reduce_int(&rhs, &m),
        )))
}

/// With `4p = L^2 + 27M^2`, `L ≡ 1 (mod 3)`:
/// `C(2(p-1)/3, (p-1)/3) ≡ -L + p/L + p^2 (1/L^3 - L U_{p-3}) (mod p^3)`.
pub fn check_1_5(cache: &SequenceCache, p: u64) -> Result<CheckResult, CheckError> {
    require(p % 3 == 1 && is_prime(p), || {
        format!("p = {p} must be a prime ≡ 1 (mod 3)")
    })?;
    let index = require_index(p - 3)?;
    let rep = cornacchia_4p(p)?;
    let m = Modulus::power(p, 3);
    let l = int(rep.l);
    let l_inv = mod_inverse(&l, &m)?.value().clone();
    let l_inv3 = l_inv.pow(3);
    let pb = big(p);
    let rhs = -&l + &pb * &l_inv + &pb * &pb * (l_inv3 - &l * cache.u(index));
    let third = (p - 1) / 3;
    Ok(CheckResult::new("check_1_5")
        .param("p", p)
        .param("L", rep.l)
        .param("M", rep.m)
        .part(Comparison::modular(
            reduce_int(&binomial(2 * third, third as i64), &m),
            reduce_int(&rhs, &m),
        )))
}

/// `U_{2n} ≡ -16n - 42 (mod 2^7)` for `n >= 3`.
pub fn check_3_1(cache: &SequenceCache, n: u64) -> Result<CheckResult, CheckError> {
    require(n >= 3, || "n >= 3".into())?;
    let index = require_index(2 * n)?;
    let m = Modulus::pow2(7);
    let rhs = int(-16) * big(n) - 42;
    Ok(CheckResult::new("check_3_1")
        .param("n", n)
        .part(Comparison::modular(
            reduce_int(&cache.u(index), &m),
            reduce_int(&rhs, &m),
        )))
}

/// `U_{2n} ≡ 48n + 2/3 (mod 2^{alpha+7})` for even `n >= 4`, `2^alpha | n`.
pub fn check_3_2(
    cache: &SequenceCache,
    n: u64,
    alpha: Option<u64>,
) -> Result<CheckResult, CheckError> {
    require(n >= 4 && n.is_multiple_of(2), || "n even and n >= 4".into())?;
    let index = require_index(2 * n)?;
    let alpha = two_adic_alpha(n, alpha)?;
    let m = Modulus::pow2(alpha as u32 + 7);
    let rhs = Rational::from_integer(big(48 * n)) + rat(2, 3);
    Ok(CheckResult::new("check_3_2")
        .param("n", n)
        .param("alpha", alpha)
        .part(Comparison::modular(
            reduce_int(&cache.u(index), &m),
            residue_of(&rhs, &m)?,
        )))
}

/// `3U_{2n} + 2^7 n(2n-1) U_{2n-2} ≡ 2(7^{2n}+6^{2n}-4^{2n}-3^{2n}+1)
///   + 2^{16+2alpha}(n-1) - 23·2^13 n(n-1) + 7·2^15 n(n-1)^3 (mod 2^{alpha+19})`.
pub fn check_lemma_3_1(
    cache: &SequenceCache,
    n: u64,
    alpha: Option<u64>,
) -> Result<CheckResult, CheckError> {
    require(n >= 5, || "n >= 5".into())?;
    let index = require_index(2 * n)?;
    let alpha = two_adic_alpha(n, alpha)?;
    let m = Modulus::pow2(alpha as u32 + 19);
    let nb = big(n);
    let e = 2 * n as u32;
    let lhs = cache.u(index) * 3u32 + ((&nb * (&nb * 2u32 - 1u32) * cache.u(index - 2)) << 7usize);
    let powers = Integer::from(7).pow(e) + Integer::from(6).pow(e)
        - Integer::from(4).pow(e)
        - Integer::from(3).pow(e)
        + 1u32;
    let n1: Integer = &nb - 1u32;
    let rhs = powers * 2u32 + (&n1 << (16 + 2 * alpha as usize)) - ((&nb * &n1 * 23u32) << 13usize)
        + ((&nb * n1.pow(3) * 7u32) << 15usize);
    Ok(CheckResult::new("check_lemma_3_1")
        .param("n", n)
        .param("alpha", alpha)
        .part(Comparison::modular(
            reduce_int(&lhs, &m),
            reduce_int(&rhs, &m),
        )))
}

/// `3U_{2n} ≡ -3072n^4 + 4608n^3 + 2240n^2 + 1680n + 2 (mod 2^{alpha+14})`, `n >= 7`.
pub fn check_theorem_3_1(
    cache: &SequenceCache,
    n: u64,
    alpha: Option<u64>,
) -> Result<CheckResult, CheckError> {
    require(n >= 7, || "n >= 7".into())?;
    let index = require_index(2 * n)?;
    let alpha = two_adic_alpha(n, alpha)?;
    let m = Modulus::pow2(alpha as u32 + 14);
    let nb = big(n);
    let rhs = ((((int(-3072) * &nb + 4608) * &nb + 2240) * &nb + 1680) * &nb) + 2;
    Ok(CheckResult::new("check_theorem_3_1")
        .param("n", n)
        .param("alpha", alpha)
        .part(Comparison::modular(
            reduce_int(&(cache.u(index) * 3), &m),
            reduce_int(&rhs, &m),
        )))
}

struct PowerTwoShift {
    k: u64,
    m: u32,
    b: u64,
    index: usize,
}

fn power_two_shift(k: u64, m: u64, b: u64) -> Result<PowerTwoShift, CheckError> {
    require(k >= 1 && m >= 1, || "k, m >= 1".into())?;
    require(b >= 2 && b.is_multiple_of(2), || {
        format!("b = {b} must be even and >= 2")
    })?;
    require(m < 32, || format!("m = {m} too large"))?;
    let index = require_index(k.saturating_mul(1 << m).saturating_add(b))?;
    Ok(PowerTwoShift {
        k,
        m: m as u32,
        b,
        index,
    })
}

/// `U_{2^m k+b} - U_b ≡ 2^{b+1}/9 - (2/3) sum_{r=1}^{b/2-1} C(b,2r) 2^{2r}
///   (U_{2^m k+b-2r} - U_{b-2r}) (mod 2^{m+3})`.
pub fn check_lemma_3_2(
    cache: &SequenceCache,
    k: u64,
    m: u64,
    b: u64,
) -> Result<CheckResult, CheckError> {
    let s = power_two_shift(k, m, b)?;
    let modulus = Modulus::pow2(s.m + 3);
    let b = s.b as usize;
    let row = binomial_row(s.b);
    let mut sum = Integer::zero();
    for r in 1..b / 2 {
        sum += (&row[2 * r] * (cache.u(s.index - 2 * r) - cache.u(b - 2 * r))) << (2 * r);
    }
    let rhs =
        Rational::new(Integer::one() << (b + 1), int(9)) - rat(2, 3) * Rational::from_integer(sum);
    let lhs = cache.u(s.index) - cache.u(b);
    Ok(CheckResult::new("check_lemma_3_2")
        .param("k", s.k)
        .param("m", s.m)
        .param("b", s.b)
        .part(Comparison::modular(
            reduce_int(&lhs, &modulus),
            residue_of(&rhs, &modulus)?,
        )))
}

/// Parts (i)-(iii) of the `U_{2^m k+b}` congruences; only the parts whose
/// hypotheses hold are evaluated.
pub fn check_theorem_3_2(
    cache: &SequenceCache,
    k: u64,
    m: u64,
    b: u64,
) -> Result<CheckResult, CheckError> {
    let s = power_two_shift(k, m, b)?;
    let u_n = cache.u(s.index);
    let u_b = cache.u(s.b as usize);
    let b = s.b as u32;
    let mut result = CheckResult::new("check_theorem_3_2")
        .param("k", s.k)
        .param("m", s.m)
        .param("b", s.b);

    let mod_i = Modulus::pow2(b.min(s.m) + 3);
    let rhs_i = &u_b + (Integer::one() << (b + 1));
    result = result.part(
        Comparison::modular(reduce_int(&u_n, &mod_i), reduce_int(&rhs_i, &mod_i)).labeled("i"),
    );

    let constant = match b {
        2 => Some(rat(-10, 9)),
        4 => Some(rat(34, 3)),
        _ => None,
    };
    if let Some(c) = constant {
        let mod_ii = Modulus::pow2(s.m + 3);
        result = result.part(
            Comparison::modular(reduce_int(&u_n, &mod_ii), residue_of(&c, &mod_ii)?).labeled("ii"),
        );
    }

    if b >= 4 && b + 2 <= s.m {
        let mod_iii = Modulus::pow2(b + 5);
        let rhs_iii = &u_b + (Integer::from(4 * b + 5) << (b + 1));
        result = result.part(
            Comparison::modular(reduce_int(&u_n, &mod_iii), reduce_int(&rhs_iii, &mod_iii))
                .labeled("iii"),
        );
    }
    Ok(result)
}

/// `U_{2^m k+b} ≡ U_b (mod 2^{min(b,m)+1})`.
pub fn check_corollary_3_1(
    cache: &SequenceCache,
    k: u64,
    m: u64,
    b: u64,
) -> Result<CheckResult, CheckError> {
    let s = power_two_shift(k, m, b)?;
    let modulus = Modulus::pow2((s.b as u32).min(s.m) + 1);
    Ok(CheckResult::new("check_corollary_3_1")
        .param("k", s.k)
        .param("m", s.m)
        .param("b", s.b)
        .part(Comparison::modular(
            reduce_int(&cache.u(s.index), &modulus),
            reduce_int(&cache.u(s.b as usize), &modulus),
        )))
}

struct ThreeAdicShift {
    k: u64,
    m: u32,
    b: u64,
    index: usize,
    /// `3^m k`
    scale: Integer,
}

fn three_adic_shift(k: u64, m: u64, b: u64, min_m: u64) -> Result<ThreeAdicShift, CheckError> {
    require(k >= 1, || "k >= 1".into())?;
    require(m >= min_m, || format!("m = {m} must be >= {min_m}"))?;
    require(b.is_multiple_of(2), || format!("b = {b} must be even"))?;
    require(m < 20, || format!("m = {m} too large"))?;
    let m = m as u32;
    let n = totient_pow3(m) * k + b;
    let index = require_index(u64::try_from(&n).unwrap_or(u64::MAX))?;
    Ok(ThreeAdicShift {
        k,
        m,
        b,
        index,
        scale: Integer::from(3).pow(m) * k,
    })
}

/// `U_{k phi(3^m)+b} - U_b` modulo `3^{m+4}`, one linear form per class of `b mod 3`.
pub fn check_theorem_4_1(
    cache: &SequenceCache,
    k: u64,
    m: u64,
    b: u64,
) -> Result<CheckResult, CheckError> {
    let s = three_adic_shift(k, m, b, 3)?;
    let modulus = Modulus::power(3, s.m + 4);
    let bi = big(s.b);
    let rhs = match s.b % 3 {
        0 => &s.scale * (&bi * 9 - 40),
        1 => &s.scale * -22,
        _ => -&s.scale * (&bi * 9 - 32),
    };
    let lhs = cache.u(s.index) - cache.u(s.b as usize);
    Ok(CheckResult::new("check_theorem_4_1")
        .param("k", s.k)
        .param("m", s.m)
        .param("b", s.b)
        .part(Comparison::modular(
            reduce_int(&lhs, &modulus),
            reduce_int(&rhs, &modulus),
        )))
}

/// `E_{2^m k+b} - E_b ≡ 5·2^m k` (b ≡ 0, 6 mod 8) or `-3·2^m k` (b ≡ 2, 4 mod 8), mod `2^{m+4}`.
pub fn check_euler_mod_pow2(
    cache: &SequenceCache,
    k: u64,
    m: u64,
    b: u64,
) -> Result<CheckResult, CheckError> {
    require(k >= 1, || "k >= 1".into())?;
    require(m >= 4, || format!("m = {m} must be >= 4"))?;
    require(b.is_multiple_of(2), || format!("b = {b} must be even"))?;
    require(m < 32, || format!("m = {m} too large"))?;
    let m = m as u32;
    let index = require_index(k.saturating_mul(1 << m).saturating_add(b))?;
    let modulus = Modulus::pow2(m + 4);
    let scale = big(k) << m;
    let rhs = if matches!(b % 8, 0 | 6) {
        scale * 5
    } else {
        scale * -3
    };
    let lhs = cache.euler(index) - cache.euler(b as usize);
    Ok(CheckResult::new("check_euler_mod_pow2")
        .param("k", k)
        .param("m", m)
        .param("b", b)
        .part(Comparison::modular(
            reduce_int(&lhs, &modulus),
            reduce_int(&rhs, &modulus),
        )))
}

/// `E_{k phi(3^m)+b} ≡ (3^b + 1) E_b (mod 3^m)`.
pub fn check_euler_mod_pow3(
    cache: &SequenceCache,
    k: u64,
    m: u64,
    b: u64,
) -> Result<CheckResult, CheckError> {
    let s = three_adic_shift(k, m, b, 1)?;
    let modulus = Modulus::power(3, s.m);
    let rhs = (Integer::from(3).pow(s.b as u32) + 1) * cache.euler(s.b as usize);
    Ok(CheckResult::new("check_euler_mod_pow3")
        .param("k", s.k)
        .param("m", s.m)
        .param("b", s.b)
        .part(Comparison::modular(
            reduce_int(&cache.euler(s.index), &modulus),
            reduce_int(&rhs, &modulus),
        )))
}

/// `E_{k phi(3^m)+b} - (3^b+1) E_b` modulo `3^{m+4}`, one linear form per class of `b mod 3`.
pub fn check_theorem_5_1(
    cache: &SequenceCache,
    k: u64,
    m: u64,
    b: u64,
) -> Result<CheckResult, CheckError> {
    let s = three_adic_shift(k, m, b, 3)?;
    let modulus = Modulus::power(3, s.m + 4);
    let bi = big(s.b);
    let rhs = match s.b % 3 {
        0 => &s.scale * (&bi * 9 + 20),
        1 => &s.scale * -16,
        _ => &s.scale * (11 - &bi * 9),
    };
    let lhs =
        cache.euler(s.index) - (Integer::from(3).pow(s.b as u32) + 1) * cache.euler(s.b as usize);
    Ok(CheckResult::new("check_theorem_5_1")
        .param("k", s.k)
        .param("m", s.m)
        .param("b", s.b)
        .part(Comparison::modular(
            reduce_int(&lhs, &modulus),
            reduce_int(&rhs, &modulus),
        )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::Value;

    fn cache() -> &'static SequenceCache {
        SequenceCache::global()
    }

    fn residues(r: &CheckResult) -> Vec<(String, String, String)> {
        r.parts
            .iter()
            .map(|c| match (&c.lhs, &c.rhs) {
                (Value::Residue(a), Value::Residue(b)) => {
                    assert_eq!(a.modulus(), b.modulus());
                    (
                        a.value().to_string(),
                        b.value().to_string(),
                        a.modulus().to_string(),
                    )
                }
                _ => panic!("expected residues"),
            })
            .collect()
    }

    fn single(r: &CheckResult) -> (String, String, String) {
        residues(r).remove(0)
    }

    fn triple(l: &str, r: &str, m: &str) -> (String, String, String) {
        (l.into(), r.into(), m.into())
    }

    #[test]
    fn congruence_1_2() {
        assert_eq!(
            single(&check_1_2(cache(), 5).unwrap()),
            triple("5", "5", "25")
        );
        assert_eq!(
            single(&check_1_2(cache(), 7).unwrap()),
            triple("21", "21", "49")
        );
        assert!(check_1_2(cache(), 199).unwrap().passed());
        assert!(check_1_2(cache(), 3).is_err());
        assert!(check_1_2(cache(), 9).is_err());
    }

    #[test]
    fn congruence_1_3() {
        assert_eq!(
            single(&check_1_3(cache(), 5).unwrap()),
            triple("3", "3", "5")
        );
        assert!(check_1_3(cache(), 7).unwrap().passed());
        assert!(check_1_3(cache(), 97).unwrap().passed());
    }

    #[test]
    fn congruence_1_4() {
        assert_eq!(
            single(&check_1_4(cache(), 5).unwrap()),
            triple("99", "99", "125")
        );
        assert_eq!(
            single(&check_1_4(cache(), 7).unwrap()),
            triple("246", "246", "343")
        );
        assert!(check_1_4(cache(), 101).unwrap().passed());
    }

    #[test]
    fn congruence_1_5() {
        let r = check_1_5(cache(), 7).unwrap();
        assert_eq!(single(&r), triple("6", "6", "343"));
        assert_eq!(r.params_text(), "p=7 L=1 M=1");
        let r = check_1_5(cache(), 13).unwrap();
        assert!(r.passed());
        assert_eq!(r.params_text(), "p=13 L=-5 M=1");
        // C(8,4) = 70 ≡ 5 = -L (mod 13)
        assert_eq!(70 % 13, 5);
        assert!(check_1_5(cache(), 103).unwrap().passed());
        assert!(check_1_5(cache(), 11).is_err());
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(
            single(&check_3_1(cache(), 3).unwrap()),
            triple("38", "38", "128")
        );
        assert_eq!(
            single(&check_3_1(cache(), 4).unwrap()),
            triple("22", "22", "128")
        );
        assert!(check_3_1(cache(), 50).unwrap().passed());
        assert!(check_3_1(cache(), 2).is_err());

        let r = check_3_2(cache(), 4, None).unwrap();
        assert_eq!(r.params_text(), "n=4 alpha=2");
        // 30742 mod 512 = 22; 192 + 2·171 = 534 ≡ 22
        assert_eq!(single(&r), triple("22", "22", "512"));
        assert!(check_3_2(cache(), 6, None).unwrap().passed());
        assert!(check_3_2(cache(), 8, None).unwrap().passed());
        assert!(check_3_2(cache(), 5, None).is_err());

        assert!(check_lemma_3_1(cache(), 5, None).unwrap().passed());
        let r = check_lemma_3_1(cache(), 8, None).unwrap();
        assert_eq!(single(&r).2, (1u64 << 22).to_string());
        assert!(r.passed());
        assert!(check_lemma_3_1(cache(), 12, None).unwrap().passed());

        let r = check_theorem_3_1(cache(), 7, None).unwrap();
        assert_eq!(single(&r), triple("11442", "11442", "16384"));
        let r = check_theorem_3_1(cache(), 8, None).unwrap();
        assert_eq!(single(&r).2, "131072");
        assert!(r.passed());
        let r = check_theorem_3_1(cache(), 64, None).unwrap();
        assert_eq!(single(&r).2, (1u64 << 20).to_string());
        assert!(r.passed());
    }

    #[test]
    fn weaker_alpha_readings() {
        // check_3_2 and check_theorem_3_1 still hold with a smaller alpha.
        for n in [8u64, 16, 24, 32, 48, 64] {
            for a in 0..=ord_p(&big(n), 2).unwrap() {
                assert!(
                    check_theorem_3_1(cache(), n, Some(a)).unwrap().passed(),
                    "n={n} alpha={a}"
                );
                if a >= 1 {
                    assert!(
                        check_3_2(cache(), n, Some(a)).unwrap().passed(),
                        "n={n} alpha={a}"
                    );
                }
            }
        }
        // check_lemma_3_1's right side depends on alpha, so it only holds at the exact order.
        assert!(check_lemma_3_1(cache(), 8, Some(3)).unwrap().passed());
        assert!(!check_lemma_3_1(cache(), 8, Some(2)).unwrap().passed());
        assert!(!check_lemma_3_1(cache(), 6, Some(0)).unwrap().passed());
        assert!(check_3_2(cache(), 12, Some(3)).is_err());
    }

    #[test]
    fn power_two_shift_examples() {
        // U_10 - U_2 = -2523000 ≡ 8 ≡ 2^3/9 (mod 64)
        let r = check_lemma_3_2(cache(), 1, 3, 2).unwrap();
        assert_eq!(single(&r), triple("8", "8", "64"));
        assert!(check_lemma_3_2(cache(), 1, 4, 4).unwrap().passed());
        assert!(check_lemma_3_2(cache(), 2, 5, 6).unwrap().passed());
        assert!(check_lemma_3_2(cache(), 1, 3, 3).is_err());
        assert!(check_lemma_3_2(cache(), 1, 3, 0).is_err());

        let r = check_theorem_3_2(cache(), 1, 3, 2).unwrap();
        assert_eq!(
            residues(&r),
            vec![triple("6", "6", "32"), triple("6", "6", "64")]
        );
        let r = check_theorem_3_2(cache(), 1, 6, 4).unwrap();
        assert_eq!(r.parts.len(), 3);
        assert_eq!(r.parts[2].label.as_deref(), Some("iii"));
        assert_eq!(residues(&r)[2].2, "512");
        assert!(r.passed());
        let r = check_theorem_3_2(cache(), 3, 2, 8).unwrap();
        assert_eq!(r.parts.len(), 1);
        assert_eq!(residues(&r)[0].2, "32");
        assert!(r.passed());

        // 2^{min(2,1)+1} = 4
        assert_eq!(
            single(&check_corollary_3_1(cache(), 1, 1, 2).unwrap()).2,
            "4"
        );
        let r = check_corollary_3_1(cache(), 1, 5, 2).unwrap();
        assert_eq!(single(&r), triple("6", "6", "8"));
        assert!(check_corollary_3_1(cache(), 2, 3, 6).unwrap().passed());
    }

    #[test]
    fn three_adic_examples() {
        let r = check_theorem_4_1(cache(), 1, 3, 0).unwrap();
        assert!(r.passed());
        assert_eq!(single(&r).1, (2187 - 27 * 40).to_string());
        let r = check_theorem_4_1(cache(), 1, 3, 4).unwrap();
        assert_eq!(single(&r).1, (2187 - 22 * 27).to_string());
        assert!(r.passed());
        assert!(check_theorem_4_1(cache(), 2, 4, 8).unwrap().passed());
        assert!(check_theorem_4_1(cache(), 1, 2, 0).is_err());

        let r = check_theorem_5_1(cache(), 1, 3, 0).unwrap();
        assert_eq!(single(&r), triple("540", "540", "2187"));
        let r = check_theorem_5_1(cache(), 1, 3, 2).unwrap();
        assert_eq!(single(&r).1, (2187 - 7 * 27).to_string());
        assert!(r.passed());
        let r = check_theorem_5_1(cache(), 1, 4, 6).unwrap();
        assert_eq!(
            single(&r),
            triple(&(74 * 81).to_string(), &(74 * 81).to_string(), "6561")
        );
    }

    #[test]
    fn euler_period_examples() {
        assert_eq!(
            single(&check_euler_mod_pow2(cache(), 1, 4, 0).unwrap()),
            triple("80", "80", "256")
        );
        assert_eq!(
            single(&check_euler_mod_pow2(cache(), 1, 4, 2).unwrap()),
            triple("208", "208", "256")
        );
        assert_eq!(
            single(&check_euler_mod_pow2(cache(), 2, 5, 6).unwrap()),
            triple("320", "320", "512")
        );
        assert!(check_euler_mod_pow2(cache(), 1, 3, 0).is_err());

        assert_eq!(
            single(&check_euler_mod_pow3(cache(), 1, 1, 0).unwrap()),
            triple("2", "2", "3")
        );
        assert_eq!(
            single(&check_euler_mod_pow3(cache(), 1, 2, 2).unwrap()),
            triple("8", "8", "9")
        );
        assert!(check_euler_mod_pow3(cache(), 1, 3, 4).unwrap().passed());
        assert!(check_euler_mod_pow3(cache(), 1, 3, 3).is_err());
    }
}
