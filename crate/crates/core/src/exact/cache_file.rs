//! Line-oriented persistence for [`SequenceCache`]: one record per line,
//! `<tag> <n> <value>` with tags `U`, `E`, `B` (Bernoulli values as `num/den`).

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::Rng;
use thiserror::Error;

use super::sequences::{Sequence, SequenceCache};
use super::{Integer, Rational};

#[derive(Debug, Error)]
pub enum CacheFileError {
    #[error("cache file: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {reason}")]
    Invalid { line: usize, reason: String },
    #[error("line {line}: {tag} {n} does not match the recomputed value")]
    Mismatch {
        line: usize,
        tag: &'static str,
        n: usize,
    },
}

/// Structurally validated contents of a cache file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CacheRecords {
    pub u: Vec<Integer>,
    pub euler: Vec<Integer>,
    pub bernoulli: Vec<Rational>,
    u_lines: Vec<usize>,
    euler_lines: Vec<usize>,
    bernoulli_lines: Vec<usize>,
}

impl CacheRecords {
    pub fn len(&self) -> usize {
        self.u.len() + self.euler.len() + self.bernoulli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    // Flat index over all records -> (sequence, n, line).
    fn locate(&self, i: usize) -> (Sequence, usize, usize) {
        if i < self.u.len() {
            (Sequence::U, i, self.u_lines[i])
        } else if i < self.u.len() + self.euler.len() {
            let n = i - self.u.len();
            (Sequence::Euler, n, self.euler_lines[n])
        } else {
            let n = i - self.u.len() - self.euler.len();
            (Sequence::Bernoulli, n, self.bernoulli_lines[n])
        }
    }

    fn line_of(&self, seq: Sequence, n: usize) -> usize {
        match seq {
            Sequence::U => self.u_lines[n],
            Sequence::Euler => self.euler_lines[n],
            Sequence::Bernoulli => self.bernoulli_lines[n],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoadStats {
    pub u: usize,
    pub euler: usize,
    pub bernoulli: usize,
    pub sampled: usize,
}

pub fn write_cache<W: Write>(cache: &SequenceCache, mut out: W) -> io::Result<()> {
    let mut buf = String::new();
    for seq in [Sequence::U, Sequence::Euler] {
        for (n, v) in cache.integer_values(seq).iter().enumerate() {
            let _ = writeln!(buf, "{} {n} {v}", seq.tag());
        }
    }
    for (n, v) in cache.bernoulli_values().iter().enumerate() {
        let _ = writeln!(buf, "B {n} {}/{}", v.numer(), v.denom());
    }
    out.write_all(buf.as_bytes())
}

pub fn save_cache(cache: &SequenceCache, path: &Path) -> io::Result<()> {
    let file = std::fs::File::create(path)?;
    let mut w = io::BufWriter::new(file);
    write_cache(cache, &mut w)?;
    w.flush()
}

fn invalid(line: usize, reason: impl Into<String>) -> CacheFileError {
    CacheFileError::Invalid {
        line,
        reason: reason.into(),
    }
}

fn parse_integer(line: usize, text: &str) -> Result<Integer, CacheFileError> {
    let v: Integer = text
        .parse()
        .map_err(|_| invalid(line, format!("`{text}` is not a decimal integer")))?;
    if v.to_string() != text {
        return Err(invalid(
            line,
            format!("`{text}` is not in canonical decimal form"),
        ));
    }
    Ok(v)
}

fn parse_fraction(line: usize, text: &str) -> Result<Rational, CacheFileError> {
    let (num, den) = text
        .split_once('/')
        .ok_or_else(|| invalid(line, format!("`{text}` is not of the form num/den")))?;
    let num = parse_integer(line, num)?;
    let den = parse_integer(line, den)?;
    if den <= Integer::zero() {
        return Err(invalid(line, "denominator must be positive"));
    }
    let q = Rational::new(num.clone(), den.clone());
    if q.numer() != &num || q.denom() != &den {
        return Err(invalid(line, format!("`{text}` is not in lowest terms")));
    }
    Ok(q)
}

/// Parses and checks every record against the structural invariants:
/// known tag, contiguous indices from 0 per sequence, canonical values,
/// `X_0 = 1`, and vanishing odd terms (`U`, `E` at odd n; `B` at odd n >= 3).
pub fn parse_cache(text: &str) -> Result<CacheRecords, CacheFileError> {
    let mut rec = CacheRecords::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split_ascii_whitespace().collect();
        if fields.len() != 3 {
            return Err(invalid(
                line,
                format!(
                    "expected `<tag> <n> <value>`, found {} field(s)",
                    fields.len()
                ),
            ));
        }
        let seq = Sequence::from_tag(fields[0])
            .ok_or_else(|| invalid(line, format!("unknown tag `{}`", fields[0])))?;
        let n: usize = fields[1]
            .parse()
            .map_err(|_| invalid(line, format!("`{}` is not a nonnegative index", fields[1])))?;
        let expected = match seq {
            Sequence::U => rec.u.len(),
            Sequence::Euler => rec.euler.len(),
            Sequence::Bernoulli => rec.bernoulli.len(),
        };
        if n != expected {
            return Err(invalid(
                line,
                format!("{} index {n} out of order, expected {expected}", seq.tag()),
            ));
        }
        match seq {
            Sequence::U | Sequence::Euler => {
                let v = parse_integer(line, fields[2])?;
                if n == 0 && !v.is_one() {
                    return Err(invalid(line, format!("{}_0 must be 1", seq.tag())));
                }
                if n % 2 == 1 && !v.is_zero() {
                    return Err(invalid(
                        line,
                        format!("{}_{n} must vanish at odd index", seq.tag()),
                    ));
                }
                if seq == Sequence::U {
                    rec.u.push(v);
                    rec.u_lines.push(line);
                } else {
                    rec.euler.push(v);
                    rec.euler_lines.push(line);
                }
            }
            Sequence::Bernoulli => {
                let v = parse_fraction(line, fields[2])?;
                if n == 0 && !v.is_one() {
                    return Err(invalid(line, "B_0 must be 1"));
                }
                if n >= 3 && n % 2 == 1 && !v.is_zero() {
                    return Err(invalid(line, format!("B_{n} must vanish at odd index")));
                }
                rec.bernoulli.push(v);
                rec.bernoulli_lines.push(line);
            }
        }
    }
    Ok(rec)
}

/// Recomputes `fraction` of the records (at least one, when any exist) from
/// scratch, then appends everything to `cache`. Nothing is installed unless
/// every check passes.
pub(crate) fn install_records<R: Rng + ?Sized>(
    cache: &SequenceCache,
    records: &CacheRecords,
    rng: &mut R,
    fraction: f64,
) -> Result<LoadStats, CacheFileError> {
    let total = records.len();
    let want = if total == 0 {
        0
    } else {
        ((total as f64 * fraction).ceil() as usize).clamp(1, total)
    };
    let fresh = SequenceCache::new();
    let mut picks: Vec<usize> = sample(rng, total, want).into_vec();
    // Largest index first so each table grows once.
    picks.sort_unstable_by(|a, b| b.cmp(a));
    for i in picks {
        let (seq, n, line) = records.locate(i);
        let ok = match seq {
            Sequence::U => fresh.u(n) == records.u[n],
            Sequence::Euler => fresh.euler(n) == records.euler[n],
            Sequence::Bernoulli => fresh.bernoulli(n) == records.bernoulli[n],
        };
        if !ok {
            return Err(CacheFileError::Mismatch {
                line,
                tag: seq.tag(),
                n,
            });
        }
    }

    // Values already held by the cache must agree with the file.
    let conflict = |seq: Sequence, n: usize| CacheFileError::Mismatch {
        line: records.line_of(seq, n),
        tag: seq.tag(),
        n,
    };
    let held_u = cache.integer_values(Sequence::U);
    if let Some(n) = held_u.iter().zip(&records.u).position(|(a, b)| a != b) {
        return Err(conflict(Sequence::U, n));
    }
    let held_e = cache.integer_values(Sequence::Euler);
    if let Some(n) = held_e.iter().zip(&records.euler).position(|(a, b)| a != b) {
        return Err(conflict(Sequence::Euler, n));
    }
    let held_b = cache.bernoulli_values();
    if let Some(n) = held_b
        .iter()
        .zip(&records.bernoulli)
        .position(|(a, b)| a != b)
    {
        return Err(conflict(Sequence::Bernoulli, n));
    }

    cache
        .extend_integers(Sequence::U, &records.u)
        .map_err(|n| conflict(Sequence::U, n))?;
    cache
        .extend_integers(Sequence::Euler, &records.euler)
        .map_err(|n| conflict(Sequence::Euler, n))?;
    cache
        .extend_bernoulli(&records.bernoulli)
        .map_err(|n| conflict(Sequence::Bernoulli, n))?;
    Ok(LoadStats {
        u: records.u.len(),
        euler: records.euler.len(),
        bernoulli: records.bernoulli.len(),
        sampled: want,
    })
}

/// Reads, validates and installs a cache file, recomputing a random 1% of
/// its records.
pub fn load_cache(cache: &SequenceCache, path: &Path) -> Result<LoadStats, CacheFileError> {
    let text = std::fs::read_to_string(path)?;
    let records = parse_cache(&text)?;
    install_records(cache, &records, &mut rand::thread_rng(), 0.01)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn warmed(n: usize) -> SequenceCache {
        let c = SequenceCache::new();
        c.u(n);
        c.euler(n);
        c.bernoulli(n);
        c
    }

    fn dump(cache: &SequenceCache) -> String {
        let mut out = Vec::new();
        write_cache(cache, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn format_lines() {
        let text = dump(&warmed(4));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(&lines[..5], ["U 0 1", "U 1 0", "U 2 -2", "U 3 0", "U 4 22"]);
        assert!(lines.contains(&"B 1 -1/2"));
        assert!(lines.contains(&"B 0 1/1"));
        assert!(lines.contains(&"E 4 5"));
    }

    #[test]
    fn round_trip_is_bit_identical() {
        let text = dump(&warmed(40));
        let loaded = SequenceCache::new();
        let records = parse_cache(&text).unwrap();
        let stats =
            install_records(&loaded, &records, &mut StdRng::seed_from_u64(7), 0.01).unwrap();
        assert_eq!(stats.u, 41);
        assert_eq!(stats.sampled, 2);
        assert_eq!(dump(&loaded), text);
    }

    #[test]
    fn truncated_line_is_cited() {
        let text = dump(&warmed(10));
        let cut = &text[..text.len() - 4];
        let last = cut.lines().count();
        match parse_cache(cut) {
            Err(CacheFileError::Invalid { line, .. }) => assert_eq!(line, last),
            other => panic!("expected invalid record, got {other:?}"),
        }
    }

    #[test]
    fn structural_rejections() {
        let cases = [
            ("U 0 1\nU 2 -2\n", 2),
            ("U 0 1\nU 1 3\n", 2),
            ("U 0 2\n", 1),
            ("X 0 1\n", 1),
            ("B 0 1/1\nB 1 -2/4\n", 2),
            ("B 0 1/1\nB 1 1/-2\n", 2),
            ("B 0 1/1\nB 1 -1/2\nB 2 1/6\nB 3 1/5\n", 4),
            ("U 0 1\nU 1 00\n", 2),
            ("E 0 1 extra\n", 1),
        ];
        for (text, bad_line) in cases {
            match parse_cache(text) {
                Err(CacheFileError::Invalid { line, .. }) => assert_eq!(line, bad_line, "{text:?}"),
                other => panic!("{text:?}: expected invalid, got {other:?}"),
            }
        }
    }

    #[test]
    fn corrupted_value_found_by_full_sample() {
        let text = dump(&warmed(12)).replace("U 6 -602", "U 6 -604");
        let records = parse_cache(&text).unwrap();
        let err = install_records(
            &SequenceCache::new(),
            &records,
            &mut StdRng::seed_from_u64(1),
            1.0,
        )
        .unwrap_err();
        match err {
            CacheFileError::Mismatch { line, tag, n } => assert_eq!((line, tag, n), (7, "U", 6)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn conflict_with_warm_cache() {
        let text = dump(&warmed(12)).replace("E 8 1385", "E 8 1387");
        let records = parse_cache(&text).unwrap();
        let target = warmed(10);
        let err =
            install_records(&target, &records, &mut StdRng::seed_from_u64(3), 0.0).unwrap_err();
        assert!(matches!(
            err,
            CacheFileError::Mismatch { tag: "E", n: 8, .. }
        ));
        // nothing was appended
        assert_eq!(target.high_water(Sequence::U), 11);
    }

    #[test]
    fn empty_file_loads_nothing() {
        let records = parse_cache("").unwrap();
        let stats = install_records(
            &SequenceCache::new(),
            &records,
            &mut StdRng::seed_from_u64(0),
            0.01,
        )
        .unwrap();
        assert_eq!(
            stats,
            LoadStats {
                u: 0,
                euler: 0,
                bernoulli: 0,
                sampled: 0
            }
        );
    }
}
