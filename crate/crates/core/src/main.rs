use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use useq::checks::{find_check, registry, Args, CheckError};
use useq::exact::{load_cache, save_cache, SequenceCache};
use useq::runner::{parse_rational, run_sweep, SweepConfig, SweepOptions};

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "useq",
    version,
    about = "Exact computation and verification for the U_n sequence"
)]
struct Cli {
    /// Load (and spot-check) a cache file before running the command.
    #[arg(long, global = true, value_name = "PATH")]
    cache_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a sequence value or polynomial.
    Compute {
        #[arg(value_enum, ignore_case = true)]
        seq: SeqArg,
        n: usize,
    },
    /// Run one check.
    Check {
        name: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
    /// Run a parameter grid and write a JSON report.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        serial: bool,
    },
    /// Save or load the sequence cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
    /// List registered checks and their parameters.
    List,
}

#[derive(Subcommand)]
enum CacheAction {
    Save {
        path: PathBuf,
        /// Compute every sequence up to this index before saving.
        #[arg(long, default_value_t = 100)]
        upto: usize,
    },
    Load {
        path: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqArg {
    #[value(name = "U")]
    U,
    #[value(name = "E")]
    E,
    #[value(name = "B")]
    B,
    #[value(name = "Upoly")]
    Upoly,
    #[value(name = "Epoly")]
    Epoly,
    #[value(name = "Bpoly")]
    Bpoly,
}

fn compute(cache: &SequenceCache, seq: SeqArg, n: usize) -> String {
    match seq {
        SeqArg::U => cache.u(n).to_string(),
        SeqArg::E => cache.euler(n).to_string(),
        SeqArg::B => cache.bernoulli(n).to_string(),
        SeqArg::Upoly => cache.u_polynomial(n).to_string(),
        SeqArg::Epoly => cache.euler_polynomial(n).to_string(),
        SeqArg::Bpoly => cache.bernoulli_polynomial(n).to_string(),
    }
}

fn parse_params(raw: &[String]) -> Result<Args, String> {
    let mut args = Args::new();
    for item in raw {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("expected k=v, got `{item}`"))?;
        let value = parse_rational(v.trim())
            .ok_or_else(|| format!("`{v}` is not an integer or fraction"))?;
        args.insert(k.trim(), value);
    }
    Ok(args)
}

fn check(cache: &SequenceCache, name: &str, params: &[String]) -> u8 {
    let Some(def) = find_check(name) else {
        eprintln!("error: unknown check `{name}` (see `useq list`)");
        return USAGE;
    };
    let args = match parse_params(params) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    match def.run(cache, &args) {
        Ok(result) => {
            println!("{result}");
            if result.passed() {
                PASS
            } else {
                FAIL
            }
        }
        Err(e @ (CheckError::Precondition(_) | CheckError::BadArgument(_))) => {
            eprintln!("error: {}: {e}", def.name);
            eprintln!("usage: useq check {} {}", def.name, def.signature());
            USAGE
        }
        Err(e) => {
            println!(
                "{} {}: FAIL {e}",
                def.name,
                args.names().collect::<Vec<_>>().join(",")
            );
            FAIL
        }
    }
}

fn sweep(cache: &SequenceCache, config: &Path, out: &Path, serial: bool) -> u8 {
    let cfg = match SweepConfig::from_path(config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    let report = run_sweep(cache, &cfg, SweepOptions { serial });
    if let Err(e) = std::fs::write(out, report.to_json() + "\n") {
        eprintln!("error: writing {}: {e}", out.display());
        return USAGE;
    }
    let s = report.summary;
    eprintln!(
        "{} points: {} passed, {} failed, {} skipped ({} ms)",
        s.total, s.passed, s.failed, s.skipped, report.elapsed_ms
    );
    if report.all_passed() {
        PASS
    } else {
        FAIL
    }
}

fn cache_cmd(cache: &SequenceCache, action: &CacheAction) -> u8 {
    match action {
        CacheAction::Save { path, upto } => {
            cache.u(*upto);
            cache.euler(*upto);
            cache.bernoulli(*upto);
            if let Err(e) = save_cache(cache, path) {
                eprintln!("error: {}: {e}", path.display());
                return FAIL;
            }
            PASS
        }
        CacheAction::Load { path } => match load_cache(cache, path) {
            Ok(stats) => {
                println!(
                    "loaded {} U, {} E, {} B records ({} recomputed)",
                    stats.u, stats.euler, stats.bernoulli, stats.sampled
                );
                PASS
            }
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                FAIL
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { PASS });
        }
    };
    let cache = SequenceCache::global();
    if let Some(path) = &cli.cache_file {
        if let Err(e) = load_cache(cache, path) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(FAIL);
        }
    }
    let code = match &cli.command {
        Command::Compute { seq, n } => {
            println!("{}", compute(cache, *seq, *n));
            PASS
        }
        Command::Check { name, params } => check(cache, name, params),
        Command::Sweep {
            config,
            out,
            serial,
        } => sweep(cache, config, out, *serial),
        Command::Cache { action } => cache_cmd(cache, action),
        Command::List => {
            for def in registry() {
                println!("{} {}", def.name, def.signature());
            }
            PASS
        }
    };
    ExitCode::from(code)
}
