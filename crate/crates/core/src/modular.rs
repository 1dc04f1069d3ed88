//! Residues modulo an integer `m >= 2`, inverses, rational reduction,
//! Legendre symbols, and the representation `4p = L^2 + 27M^2`.

use std::fmt;

use num_integer::{Integer as _, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::ArithError;
use crate::exact::{Integer, Rational};

/// A modulus `m >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Modulus(Integer);

impl Modulus {
    pub fn new(value: Integer) -> Result<Self, ArithError> {
        if value < Integer::from(2) {
            return Err(ArithError::InvalidModulus(value.to_string()));
        }
        Ok(Modulus(value))
    }

    /// `2^e`, `e >= 1`.
    pub fn pow2(e: u32) -> Self {
        assert!(e >= 1, "2^0 is not a modulus");
        Modulus(Integer::one() << e)
    }

    /// `base^e` for `base >= 2`, `e >= 1`.
    pub fn power(base: u64, e: u32) -> Self {
        assert!(base >= 2 && e >= 1, "{base}^{e} is not a modulus");
        Modulus(Integer::from(base).pow(e))
    }

    pub fn value(&self) -> &Integer {
        &self.0
    }
}

impl TryFrom<u64> for Modulus {
    type Error = ArithError;

    fn try_from(value: u64) -> Result<Self, ArithError> {
        Modulus::new(Integer::from(value))
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Canonical representative in `[0, m)`. Two residues are congruent iff
/// they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    value: Integer,
    modulus: Modulus,
}

impl Residue {
    pub fn value(&self) -> &Integer {
        &self.value
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn add(&self, other: &Residue) -> Residue {
        assert_eq!(
            self.modulus, other.modulus,
            "residues modulo different moduli"
        );
        reduce_int(&(&self.value + &other.value), &self.modulus)
    }

    pub fn mul(&self, other: &Residue) -> Residue {
        assert_eq!(
            self.modulus, other.modulus,
            "residues modulo different moduli"
        );
        reduce_int(&(&self.value * &other.value), &self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

pub fn reduce_int(a: &Integer, m: &Modulus) -> Residue {
    Residue {
        value: a.mod_floor(&m.0),
        modulus: m.clone(),
    }
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
pub fn mod_inverse(a: &Integer, m: &Modulus) -> Result<Residue, ArithError> {
    let r = a.mod_floor(&m.0);
    let ext = r.extended_gcd(&m.0);
    if !ext.gcd.is_one() {
        return Err(ArithError::NotInvertible {
            value: a.to_string(),
            modulus: m.to_string(),
        });
    }
    Ok(reduce_int(&ext.x, m))
}

/// `numerator * denominator^{-1} mod m`.
pub fn reduce_rational(q: &Rational, m: &Modulus) -> Result<Residue, ArithError> {
    let inv = mod_inverse(q.denom(), m).map_err(|_| ArithError::NotInvertible {
        value: q.to_string(),
        modulus: m.to_string(),
    })?;
    Ok(reduce_int(&(q.numer() * inv.value), m))
}

/// Deterministic trial division; the harness only needs primes below ~10^4.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Primes in `lo..=hi`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// Legendre symbol `(a | p)` by Euler's criterion.
pub fn legendre_symbol(a: &Integer, p: u64) -> Result<i8, ArithError> {
    if p == 2 || !is_prime(p) {
        return Err(ArithError::NotOddPrime(p));
    }
    let pm = Integer::from(p);
    let a = a.mod_floor(&pm);
    if a.is_zero() {
        return Ok(0);
    }
    let t = a.modpow(&Integer::from((p - 1) / 2), &pm);
    Ok(if t.is_one() { 1 } else { -1 })
}

/// `phi(3^m) = 2 * 3^{m-1}`, `m >= 1`.
pub fn totient_pow3(m: u32) -> Integer {
    assert!(m >= 1, "phi(3^m) requires m >= 1");
    Integer::from(2) * Integer::from(3).pow(m - 1)
}

/// `ord_p(a)`: the largest `e` with `p^e | a`.
pub fn ord_p(a: &Integer, p: u64) -> Result<u64, ArithError> {
    if a.is_zero() {
        return Err(ArithError::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    let p = Integer::from(p);
    let mut a = a.abs();
    let mut e = 0;
    loop {
        let (q, r) = a.div_rem(&p);
        if !r.is_zero() {
            return Ok(e);
        }
        a = q;
        e += 1;
    }
}

/// `4p = L^2 + 27M^2` with `L ≡ 1 (mod 3)` and `M > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadFormRep {
    pub p: u64,
    pub l: i64,
    pub m: i64,
}

/// Finds the representation of a prime `p ≡ 1 (mod 3)` by searching
/// `1 <= M <= sqrt(4p/27)`. The sign of `L` is the one with `L ≡ 1 (mod 3)`.
pub fn cornacchia_4p(p: u64) -> Result<QuadFormRep, ArithError> {
    if p % 3 != 1 || !is_prime(p) {
        return Err(ArithError::NoRepresentation(p));
    }
    let four_p = 4 * p;
    let mut m = 1u64;
    while 27 * m * m <= four_p {
        let rest = four_p - 27 * m * m;
        let root = rest.sqrt();
        if root * root == rest {
            let root = root as i64;
            let l = if root.rem_euclid(3) == 1 { root } else { -root };
            if l.rem_euclid(3) == 1 {
                return Ok(QuadFormRep { p, l, m: m as i64 });
            }
        }
        m += 1;
    }
    Err(ArithError::NoRepresentation(p))
}
