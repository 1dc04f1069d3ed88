use std::sync::{OnceLock, PoisonError, RwLock};

use num_traits::{One, Zero};

use super::combinatorics::binomial_row;
use super::polynomial::Polynomial;
use super::{int_rat, rat, Integer, Rational};

/// Which memoized sequence a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sequence {
    U,
    Euler,
    Bernoulli,
}

impl Sequence {
    pub fn tag(self) -> &'static str {
        match self {
            Sequence::U => "U",
            Sequence::Euler => "E",
            Sequence::Bernoulli => "B",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "U" => Some(Sequence::U),
            "E" => Some(Sequence::Euler),
            "B" => Some(Sequence::Bernoulli),
            _ => None,
        }
    }
}

/// Memo tables for `U_n`, `E_n` and `B_n`.
///
/// Each table holds every index below its high-water mark. Lookups take a
/// read lock; growing a table takes the write lock, so appends are
/// serialized. Stored values are never modified.
#[derive(Debug, Default)]
pub struct SequenceCache {
    u: RwLock<Vec<Integer>>,
    euler: RwLock<Vec<Integer>>,
    bernoulli: RwLock<Vec<Rational>>,
}

fn lookup<T: Clone>(table: &RwLock<Vec<T>>, n: usize, grow: impl FnOnce(&mut Vec<T>, usize)) -> T {
    {
        let values = table.read().unwrap_or_else(PoisonError::into_inner);
        if let Some(v) = values.get(n) {
            return v.clone();
        }
    }
    let mut values = table.write().unwrap_or_else(PoisonError::into_inner);
    if values.len() <= n {
        grow(&mut values, n);
    }
    values[n].clone()
}

// Shared shape of the U and E recurrences:
// X_n = -scale * sum_{k=1}^{[n/2]} C(n,2k) X_{n-2k}, X_0 = 1.
fn grow_even_recurrence(values: &mut Vec<Integer>, target: usize, scale: u32) {
    if values.is_empty() {
        values.push(Integer::one());
    }
    while values.len() <= target {
        let n = values.len();
        if n % 2 == 1 {
            values.push(Integer::zero());
            continue;
        }
        let row = binomial_row(n as u64);
        let mut acc = Integer::zero();
        for k in 1..=n / 2 {
            acc += &row[2 * k] * &values[n - 2 * k];
        }
        values.push(-(acc * scale));
    }
}

fn grow_bernoulli(values: &mut Vec<Rational>, target: usize) {
    if values.is_empty() {
        values.push(Rational::one());
    }
    // B_{n-1} = -(1/n) * sum_{k=0}^{n-2} C(n,k) B_k
    while values.len() <= target {
        let n = values.len() + 1;
        let row = binomial_row(n as u64);
        let mut acc = Rational::zero();
        for (k, b) in values.iter().enumerate() {
            if !b.is_zero() {
                acc += b * &row[k];
            }
        }
        values.push(-acc / Integer::from(n));
    }
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by the free functions [`u_number`] and friends.
    pub fn global() -> &'static SequenceCache {
        static GLOBAL: OnceLock<SequenceCache> = OnceLock::new();
        GLOBAL.get_or_init(SequenceCache::new)
    }

    pub fn u(&self, n: usize) -> Integer {
        lookup(&self.u, n, |v, t| grow_even_recurrence(v, t, 2))
    }

    pub fn euler(&self, n: usize) -> Integer {
        lookup(&self.euler, n, |v, t| grow_even_recurrence(v, t, 1))
    }

    pub fn bernoulli(&self, n: usize) -> Rational {
        lookup(&self.bernoulli, n, grow_bernoulli)
    }

    /// `U_n(x) = sum_k C(n,2k) U_{2k} x^{n-2k}`.
    pub fn u_polynomial(&self, n: usize) -> Polynomial {
        self.u(n);
        let values = self.u.read().unwrap_or_else(PoisonError::into_inner);
        let row = binomial_row(n as u64);
        let mut coeffs = vec![Rational::zero(); n + 1];
        for r in (0..=n).step_by(2) {
            coeffs[n - r] = int_rat(&row[r] * &values[r]);
        }
        Polynomial::new(coeffs)
    }

    /// `E_n(x) = 2^{-n} sum_k C(n,2k) (2x-1)^{n-2k} E_{2k}`, expanded in powers of `x`.
    pub fn euler_polynomial(&self, n: usize) -> Polynomial {
        let row = binomial_row(n as u64);
        let two_x_minus_one = Polynomial::linear(rat(2, 1), rat(-1, 1));
        let mut acc = Polynomial::zero();
        for k in 0..=n / 2 {
            let c = int_rat(&row[2 * k] * self.euler(2 * k));
            acc = &acc + &two_x_minus_one.pow((n - 2 * k) as u32).scale(&c);
        }
        let denom = Rational::from_integer(Integer::one() << n);
        acc.scale(&denom.recip())
    }

    /// `B_n(x) = sum_k C(n,k) B_k x^{n-k}`.
    pub fn bernoulli_polynomial(&self, n: usize) -> Polynomial {
        let row = binomial_row(n as u64);
        let mut coeffs = vec![Rational::zero(); n + 1];
        for k in 0..=n {
            coeffs[n - k] = self.bernoulli(k) * &row[k];
        }
        Polynomial::new(coeffs)
    }

    /// Number of stored values (the next index to be computed).
    pub fn high_water(&self, seq: Sequence) -> usize {
        match seq {
            Sequence::U => self.u.read().unwrap_or_else(PoisonError::into_inner).len(),
            Sequence::Euler => self
                .euler
                .read()
                .unwrap_or_else(PoisonError::into_inner)
                .len(),
            Sequence::Bernoulli => self
                .bernoulli
                .read()
                .unwrap_or_else(PoisonError::into_inner)
                .len(),
        }
    }

    /// Drops every memoized value.
    pub fn clear(&self) {
        self.u
            .write()
            .unwrap_or_else(PoisonError::into_inner)
            .clear();
        self.euler
            .write()
            .unwrap_or_else(PoisonError::into_inner)
            .clear();
        self.bernoulli
            .write()
            .unwrap_or_else(PoisonError::into_inner)
            .clear();
    }

    /// Snapshot of the stored integer values of `U` or `E`.
    pub fn integer_values(&self, seq: Sequence) -> Vec<Integer> {
        match seq {
            Sequence::U => self
                .u
                .read()
                .unwrap_or_else(PoisonError::into_inner)
                .clone(),
            Sequence::Euler => self
                .euler
                .read()
                .unwrap_or_else(PoisonError::into_inner)
                .clone(),
            Sequence::Bernoulli => Vec::new(),
        }
    }

    pub fn bernoulli_values(&self) -> Vec<Rational> {
        self.bernoulli
            .read()
            .unwrap_or_else(PoisonError::into_inner)
            .clone()
    }

    /// Appends values past the current high-water mark. `values[i]` is the
    /// value at index `i`; entries already stored must agree and are left
    /// untouched. Returns the index of the first disagreeing entry, if any,
    /// without modifying the table.
    pub(crate) fn extend_integers(&self, seq: Sequence, values: &[Integer]) -> Result<(), usize> {
        let table = match seq {
            Sequence::U => &self.u,
            Sequence::Euler => &self.euler,
            Sequence::Bernoulli => unreachable!("bernoulli values are rational"),
        };
        extend_table(table, values)
    }

    pub(crate) fn extend_bernoulli(&self, values: &[Rational]) -> Result<(), usize> {
        extend_table(&self.bernoulli, values)
    }
}

fn extend_table<T: Clone + PartialEq>(table: &RwLock<Vec<T>>, values: &[T]) -> Result<(), usize> {
    let mut stored = table.write().unwrap_or_else(PoisonError::into_inner);
    if let Some(i) = stored.iter().zip(values).position(|(a, b)| a != b) {
        return Err(i);
    }
    if values.len() > stored.len() {
        let start = stored.len();
        stored.extend_from_slice(&values[start..]);
    }
    Ok(())
}

/// `U_n` from the shared cache. Odd `n` gives 0.
pub fn u_number(n: usize) -> Integer {
    SequenceCache::global().u(n)
}

/// Euler number `E_n` from the shared cache.
pub fn euler_number(n: usize) -> Integer {
    SequenceCache::global().euler(n)
}

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    SequenceCache::global().bernoulli(n)
}

pub fn u_polynomial(n: usize) -> Polynomial {
    SequenceCache::global().u_polynomial(n)
}

pub fn euler_polynomial(n: usize) -> Polynomial {
    SequenceCache::global().euler_polynomial(n)
}

pub fn bernoulli_polynomial(n: usize) -> Polynomial {
    SequenceCache::global().bernoulli_polynomial(n)
}
