//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use num_integer::Integer as _;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use useq::checks::{
    check_corollary_2_1, check_corollary_2_2, check_lemma_4_1, check_lemma_5_1, check_theorem_2_1,
};
use useq::modular::{cornacchia_4p, mod_inverse, reduce_int, reduce_rational, Modulus};
use useq::runner::{run_sweep, Report, Status, SweepConfig, SweepOptions};
use useq::{Integer, Rational, SequenceCache};

const AC1_LIMIT: Duration = Duration::from_secs(1);
const AC2_LIMIT: Duration = Duration::from_secs(60);
const AC4_LIMIT: Duration = Duration::from_secs(300);
const AC6_LIMIT: Duration = Duration::from_secs(300);
const AC8_SAMPLES: usize = 10_000;
const AC8_SEED: u64 = 0x5eed_0008;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_useq")
}

fn grid_config() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs/full-grid.json")
}

fn within(limit: Duration, started: Instant) -> Outcome {
    let t = started.elapsed();
    if t < limit {
        Ok(format!("{:.2}s < {}s", t.as_secs_f64(), limit.as_secs()))
    } else {
        Err(format!(
            "took {:.2}s, limit {}s",
            t.as_secs_f64(),
            limit.as_secs()
        ))
    }
}

fn sweep(json: &str) -> Report {
    let cfg = SweepConfig::from_json(json).expect("inline config");
    run_sweep(&SequenceCache::new(), &cfg, SweepOptions::default())
}

fn no_failures(report: &Report) -> Result<(), String> {
    if !report.is_consistent() {
        return Err("summary does not match records".into());
    }
    match report.results.iter().find(|r| r.status == Status::Fail) {
        Some(r) => Err(format!(
            "{} {:?} failed: {:?} vs {:?}",
            r.check, r.params, r.lhs, r.rhs
        )),
        None => Ok(()),
    }
}

fn anchor(
    report: &Report,
    check: &str,
    param: (&str, &str),
    lhs: &str,
    modulus: &str,
) -> Result<(), String> {
    let params = [param];
    let hit = report.find(check, &params).any(|r| {
        r.status == Status::Pass
            && r.lhs.as_deref() == Some(lhs)
            && r.rhs.as_deref() == Some(lhs)
            && r.modulus.as_deref() == Some(modulus)
    });
    if hit {
        Ok(())
    } else {
        Err(format!(
            "{check} {}={}: expected {lhs} ≡ {lhs} (mod {modulus})",
            param.0, param.1
        ))
    }
}

fn ac1_golden_values() -> Outcome {
    let numbers = [
        (2, "-2"),
        (4, "22"),
        (6, "-602"),
        (8, "30742"),
        (10, "-2523002"),
        (12, "303692662"),
        (14, "-50402079002"),
        (16, "11030684333782"),
    ];
    let polys = [
        (0, "1"),
        (1, "x"),
        (2, "x^2 - 2"),
        (3, "x^3 - 6x"),
        (4, "x^4 - 12x^2 + 22"),
        (5, "x^5 - 20x^3 + 110x"),
        (6, "x^6 - 30x^4 + 330x^2 - 602"),
    ];
    let started = Instant::now();
    let cases = numbers
        .iter()
        .map(|(n, v)| ("U", n, v))
        .chain(polys.iter().map(|(n, v)| ("Upoly", n, v)));
    for (seq, n, want) in cases {
        let out = Command::new(bin())
            .args(["compute", seq, &n.to_string()])
            .output()
            .map_err(|e| e.to_string())?;
        let got = String::from_utf8_lossy(&out.stdout);
        if !out.status.success() || got.trim() != *want {
            return Err(format!(
                "compute {seq} {n}: got `{}`, want `{want}`",
                got.trim()
            ));
        }
    }
    within(AC1_LIMIT, started).map(|t| format!("8 values, 7 polynomials; {t}"))
}

fn ac2_oracle_equivalence() -> Outcome {
    let cache = SequenceCache::new();
    let started = Instant::now();
    for n in 1..=200 {
        for r in [check_lemma_4_1(&cache, n), check_lemma_5_1(&cache, n)] {
            let r = r.map_err(|e| format!("n={n}: {e}"))?;
            if !r.passed() {
                return Err(format!("{r}"));
            }
        }
    }
    within(AC2_LIMIT, started).map(|t| format!("n = 1..200, both identities; {t}"))
}

fn ac3_summation() -> Outcome {
    let cache = SequenceCache::new();
    let mut count = 0;
    let mut results = Vec::new();
    for n in 1..=12 {
        for m in 1..=60 {
            results.push(check_theorem_2_1(&cache, n, m));
        }
    }
    results.extend((1..=60).map(check_corollary_2_1));
    results.extend((1..=40).map(|n| check_corollary_2_2(&cache, n)));
    for r in results {
        let r = r.map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("{r}"));
        }
        count += 1;
    }
    Ok(format!("{count} points"))
}

fn ac4_prime_congruences() -> Outcome {
    let started = Instant::now();
    let report = sweep(
        r#"{"specs": [
            {"check": "1_2", "params": {"p": {"primes": [5, 200]}}},
            {"check": "1_3", "params": {"p": {"primes": [5, 200]}}},
            {"check": "1_4", "params": {"p": {"primes": [5, 200]}}},
            {"check": "1_5", "params": {"p": {"primes": [7, 500]}}}
        ]}"#,
    );
    no_failures(&report)?;
    let passes = |c: &str| {
        report
            .results
            .iter()
            .filter(|r| r.check == c && r.status == Status::Pass)
            .count()
    };
    // 44 primes in [5, 200]; 45 primes ≡ 1 (mod 3) below 500.
    for (c, want) in [
        ("check_1_2", 44),
        ("check_1_3", 44),
        ("check_1_4", 44),
        ("check_1_5", 45),
    ] {
        if passes(c) != want {
            return Err(format!("{c}: {} passes, expected {want}", passes(c)));
        }
    }
    anchor(&report, "check_1_2", ("p", "5"), "5", "25")?;
    anchor(&report, "check_1_4", ("p", "5"), "99", "125")?;
    anchor(&report, "check_1_5", ("p", "7"), "6", "343")?;
    within(AC4_LIMIT, started)
        .map(|t| format!("{} passed, anchors present; {t}", report.summary.passed))
}

fn ac5_two_adic() -> Outcome {
    let report = sweep(
        r#"{"specs": [
            {"check": "3_1", "params": {"n": {"range": [3, 100]}}},
            {"check": "3_2", "params": {"n": {"range": [2, 100, 2]}}},
            {"check": "lemma_3_1", "params": {"n": {"range": [5, 64]}}},
            {"check": "theorem_3_1", "params": {"n": {"range": [7, 64]}}},
            {"check": "lemma_3_2", "params": {"k": {"range": [1, 3]}, "m": {"range": [1, 10]}, "b": {"range": [0, 12, 2]}}},
            {"check": "theorem_3_2", "params": {"k": {"range": [1, 3]}, "m": {"range": [1, 10]}, "b": {"range": [0, 12, 2]}}},
            {"check": "corollary_3_1", "params": {"k": {"range": [1, 3]}, "m": {"range": [1, 10]}, "b": {"range": [0, 12, 2]}}}
        ]}"#,
    );
    no_failures(&report)?;
    anchor(&report, "check_theorem_3_1", ("n", "7"), "11442", "16384")?;
    let s = report.summary;
    Ok(format!(
        "{} passed, {} skipped, 0 failed",
        s.passed, s.skipped
    ))
}

fn ac6_three_adic() -> Outcome {
    let started = Instant::now();
    let report = sweep(
        r#"{"specs": [
            {"check": "theorem_4_1", "params": {"k": {"range": [1, 3]}, "m": {"range": [3, 5]}, "b": {"range": [0, 10, 2]}}},
            {"check": "theorem_5_1", "params": {"k": {"range": [1, 3]}, "m": {"range": [3, 5]}, "b": {"range": [0, 10, 2]}}},
            {"check": "euler_mod_pow3", "params": {"k": {"range": [1, 3]}, "m": {"range": [1, 5]}, "b": {"range": [0, 10, 2]}}},
            {"check": "euler_mod_pow2", "params": {"k": {"range": [1, 3]}, "m": {"range": [4, 6]}, "b": {"range": [0, 10, 2]}}}
        ]}"#,
    );
    no_failures(&report)?;
    if report.summary.skipped != 0 {
        return Err(format!("{} points skipped", report.summary.skipped));
    }
    within(AC6_LIMIT, started).map(|t| format!("{} passed; {t}", report.summary.passed))
}

fn run_cli_sweep(out: &Path, serial: bool) -> Result<Report, String> {
    let mut cmd = Command::new(bin());
    cmd.arg("sweep")
        .arg("--config")
        .arg(grid_config())
        .arg("--out")
        .arg(out);
    if serial {
        cmd.arg("--serial");
    }
    let run = cmd.output().map_err(|e| e.to_string())?;
    if !run.status.success() {
        return Err(format!(
            "sweep exited with {}: {}",
            run.status,
            String::from_utf8_lossy(&run.stderr).trim()
        ));
    }
    let text = std::fs::read_to_string(out).map_err(|e| e.to_string())?;
    serde_json::from_str(&text).map_err(|e| e.to_string())
}

fn ac7_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let parallel = run_cli_sweep(&dir.path().join("parallel.json"), false)?;
    let serial = run_cli_sweep(&dir.path().join("serial.json"), true)?;
    if parallel.body_json() != serial.body_json() {
        return Err("report bodies differ".into());
    }
    if parallel.summary.failed != 0 {
        return Err(format!("{} failures in full grid", parallel.summary.failed));
    }
    Ok(format!(
        "{} records, identical bodies",
        parallel.summary.total
    ))
}

fn random_integer(rng: &mut StdRng) -> Integer {
    let hi: i64 = rng.gen();
    let lo: u64 = rng.gen();
    let v = (Integer::from(hi) << 64usize) + Integer::from(lo);
    v >> rng.gen_range(0..120usize)
}

fn naive_is_prime(n: u64) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn ac8_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(AC8_SEED);
    let mut inverses = 0;
    for i in 0..AC8_SAMPLES {
        let shift = rng.gen_range(0..62);
        let m_val = Integer::from(rng.gen_range(2u64..=u64::MAX >> shift));
        let m = Modulus::new(m_val.clone()).map_err(|e| e.to_string())?;
        let (a, b) = (random_integer(&mut rng), random_integer(&mut rng));
        let (ra, rb) = (reduce_int(&a, &m), reduce_int(&b, &m));
        if reduce_int(&(&a + &b), &m) != ra.add(&rb) || reduce_int(&(&a * &b), &m) != ra.mul(&rb) {
            return Err(format!(
                "sample {i}: homomorphism fails for a={a} b={b} m={m_val}"
            ));
        }
        match mod_inverse(&a, &m) {
            Ok(inv) => {
                if !a.gcd(&m_val).is_one() || !ra.mul(&inv).value().is_one() {
                    return Err(format!("sample {i}: bad inverse of {a} mod {m_val}"));
                }
                inverses += 1;
                if !b.is_zero() {
                    let q = Rational::new(b.clone(), a.clone());
                    let rq = reduce_rational(&q, &m).map_err(|e| e.to_string())?;
                    if rq.mul(&reduce_int(q.denom(), &m)) != reduce_int(q.numer(), &m) {
                        return Err(format!("sample {i}: rational reduction of {q} mod {m_val}"));
                    }
                }
            }
            Err(_) if !a.gcd(&m_val).is_one() => {}
            Err(e) => return Err(format!("sample {i}: {e} though gcd = 1")),
        }
    }
    let mut primes = 0;
    for p in (7..1000u64).filter(|p| p % 3 == 1 && naive_is_prime(*p)) {
        let four_p = 4 * p as i64;
        let bound = (2.0 * (p as f64).sqrt()) as i64 + 1;
        let mut found = Vec::new();
        for m in 1..=bound {
            for l in -bound..=bound {
                if l * l + 27 * m * m == four_p && l.rem_euclid(3) == 1 {
                    found.push((l, m));
                }
            }
        }
        let rep = cornacchia_4p(p).map_err(|e| e.to_string())?;
        if found != [(rep.l, rep.m)] {
            return Err(format!(
                "p={p}: search found {found:?}, cornacchia gave ({}, {})",
                rep.l, rep.m
            ));
        }
        primes += 1;
    }
    Ok(format!(
        "{AC8_SAMPLES} samples ({inverses} invertible), {primes} primes unique"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 golden values", ac1_golden_values),
        ("AC2 oracle equivalence", ac2_oracle_equivalence),
        ("AC3 summation formula", ac3_summation),
        ("AC4 prime congruences", ac4_prime_congruences),
        ("AC5 2-adic suite", ac5_two_adic),
        ("AC6 3-adic suite", ac6_three_adic),
        ("AC7 sweep determinism", ac7_determinism),
        ("AC8 property suite", ac8_properties),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("{name}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("{name}: FAIL ({detail})");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
