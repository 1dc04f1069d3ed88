use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};

use super::*;
use crate::exact::{Rational, SequenceCache};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    /// Nonnegative integer, required.
    Int,
    /// Rational, required.
    Rational,
    /// Nonnegative integer, may be omitted.
    OptionalInt,
}

/// Named arguments for a registered check.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Args(BTreeMap<String, Rational>);

impl Args {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: Rational) -> Self {
        self.insert(name, value);
        self
    }

    pub fn insert(&mut self, name: &str, value: Rational) {
        self.0.insert(name.to_owned(), value);
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.0.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    fn nonnegative(name: &str, q: &Rational) -> Result<u64, CheckError> {
        if !q.is_integer() || q.is_negative() {
            return Err(CheckError::Precondition(format!(
                "{name} = {q} must be a nonnegative integer"
            )));
        }
        q.to_integer()
            .to_u64()
            .ok_or_else(|| CheckError::Precondition(format!("{name} = {q} is too large")))
    }

    fn int(&self, name: &str) -> Result<u64, CheckError> {
        let q = self
            .get(name)
            .ok_or_else(|| CheckError::BadArgument(format!("missing parameter `{name}`")))?;
        Self::nonnegative(name, q)
    }

    fn index(&self, name: &str) -> Result<usize, CheckError> {
        let v = self.int(name)?;
        require_index(v)
    }

    fn opt_int(&self, name: &str) -> Result<Option<u64>, CheckError> {
        self.get(name)
            .map(|q| Self::nonnegative(name, q))
            .transpose()
    }

    fn rat(&self, name: &str) -> Result<&Rational, CheckError> {
        self.get(name)
            .ok_or_else(|| CheckError::BadArgument(format!("missing parameter `{name}`")))
    }
}

type Runner = fn(&SequenceCache, &Args) -> Result<CheckResult, CheckError>;

/// A check addressable by name from the CLI and sweep configs.
pub struct CheckDef {
    pub name: &'static str,
    pub params: &'static [(&'static str, ParamKind)],
    run: Runner,
}

impl CheckDef {
    pub fn param_kind(&self, name: &str) -> Option<ParamKind> {
        self.params
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, k)| k)
    }

    /// Rejects unknown or missing parameter names.
    pub fn validate_names<'a>(
        &self,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Result<(), CheckError> {
        let given: Vec<&str> = names.into_iter().collect();
        if let Some(unknown) = given.iter().find(|n| self.param_kind(n).is_none()) {
            return Err(CheckError::BadArgument(format!(
                "`{}` takes no parameter `{unknown}` (expected {})",
                self.name,
                self.signature()
            )));
        }
        for (name, kind) in self.params {
            if *kind != ParamKind::OptionalInt && !given.contains(name) {
                return Err(CheckError::BadArgument(format!(
                    "`{}` requires parameter `{name}`",
                    self.name
                )));
            }
        }
        Ok(())
    }

    pub fn signature(&self) -> String {
        self.params
            .iter()
            .map(|(n, k)| match k {
                ParamKind::Int => format!("{n}=<int>"),
                ParamKind::Rational => format!("{n}=<rational>"),
                ParamKind::OptionalInt => format!("[{n}=<int>]"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn run(&self, cache: &SequenceCache, args: &Args) -> Result<CheckResult, CheckError> {
        self.validate_names(args.names())?;
        (self.run)(cache, args)
    }
}

use ParamKind::{Int, OptionalInt, Rational as Rat};

const N: &[(&str, ParamKind)] = &[("n", Int)];
const NX: &[(&str, ParamKind)] = &[("n", Int), ("x", Rat)];
const NM: &[(&str, ParamKind)] = &[("n", Int), ("m", Int)];
const P: &[(&str, ParamKind)] = &[("p", Int)];
const KMB: &[(&str, ParamKind)] = &[("k", Int), ("m", Int), ("b", Int)];
const N_ALPHA: &[(&str, ParamKind)] = &[("n", Int), ("alpha", OptionalInt)];

static REGISTRY: &[CheckDef] = &[
    CheckDef {
        name: "check_translation",
        params: NX,
        run: |c, a| Ok(check_translation(c, a.index("n")?, a.rat("x")?)),
    },
    CheckDef {
        name: "check_shift3_sum",
        params: NX,
        run: |c, a| Ok(check_shift3_sum(c, a.index("n")?, a.rat("x")?)),
    },
    CheckDef {
        name: "check_shift3_diff",
        params: NX,
        run: |c, a| Ok(check_shift3_diff(c, a.index("n")?, a.rat("x")?)),
    },
    CheckDef {
        name: "check_poly_recurrence",
        params: NX,
        run: |c, a| check_poly_recurrence(c, a.index("n")?, a.rat("x")?),
    },
    CheckDef {
        name: "check_integral_shift",
        params: &[("n", Int), ("a", Rat)],
        run: |c, a| Ok(check_integral_shift(c, a.index("n")?, a.rat("a")?)),
    },
    CheckDef {
        name: "check_antiderivative",
        params: NX,
        run: |c, a| check_antiderivative(c, a.index("n")?, a.rat("x")?),
    },
    CheckDef {
        name: "check_classical_sums",
        params: NM,
        run: |c, a| check_classical_sums(c, a.index("n")?, a.int("m")?),
    },
    CheckDef {
        name: "check_theorem_2_1",
        params: NM,
        run: |c, a| check_theorem_2_1(c, a.index("n")?, a.int("m")?),
    },
    CheckDef {
        name: "check_corollary_2_1",
        params: &[("m", Int)],
        run: |_, a| check_corollary_2_1(a.int("m")?),
    },
    CheckDef {
        name: "check_corollary_2_2",
        params: N,
        run: |c, a| check_corollary_2_2(c, a.index("n")?),
    },
    CheckDef {
        name: "check_special_values",
        params: N,
        run: |c, a| check_special_values(c, a.index("n")?),
    },
    CheckDef {
        name: "check_lemma_4_1",
        params: N,
        run: |c, a| check_lemma_4_1(c, a.index("n")?),
    },
    CheckDef {
        name: "check_lemma_5_1",
        params: N,
        run: |c, a| check_lemma_5_1(c, a.index("n")?),
    },
    CheckDef {
        name: "check_1_2",
        params: P,
        run: |c, a| check_1_2(c, a.int("p")?),
    },
    CheckDef {
        name: "check_1_3",
        params: P,
        run: |c, a| check_1_3(c, a.int("p")?),
    },
    CheckDef {
        name: "check_1_4",
        params: P,
        run: |c, a| check_1_4(c, a.int("p")?),
    },
    CheckDef {
        name: "check_1_5",
        params: P,
        run: |c, a| check_1_5(c, a.int("p")?),
    },
    CheckDef {
        name: "check_3_1",
        params: N,
        run: |c, a| check_3_1(c, a.int("n")?),
    },
    CheckDef {
        name: "check_3_2",
        params: N_ALPHA,
        run: |c, a| check_3_2(c, a.int("n")?, a.opt_int("alpha")?),
    },
    CheckDef {
        name: "check_lemma_3_1",
        params: N_ALPHA,
        run: |c, a| check_lemma_3_1(c, a.int("n")?, a.opt_int("alpha")?),
    },
    CheckDef {
        name: "check_theorem_3_1",
        params: N_ALPHA,
        run: |c, a| check_theorem_3_1(c, a.int("n")?, a.opt_int("alpha")?),
    },
    CheckDef {
        name: "check_lemma_3_2",
        params: KMB,
        run: |c, a| check_lemma_3_2(c, a.int("k")?, a.int("m")?, a.int("b")?),
    },
    CheckDef {
        name: "check_theorem_3_2",
        params: KMB,
        run: |c, a| check_theorem_3_2(c, a.int("k")?, a.int("m")?, a.int("b")?),
    },
    CheckDef {
        name: "check_corollary_3_1",
        params: KMB,
        run: |c, a| check_corollary_3_1(c, a.int("k")?, a.int("m")?, a.int("b")?),
    },
    CheckDef {
        name: "check_theorem_4_1",
        params: KMB,
        run: |c, a| check_theorem_4_1(c, a.int("k")?, a.int("m")?, a.int("b")?),
    },
    CheckDef {
        name: "check_euler_mod_pow2",
        params: KMB,
        run: |c, a| check_euler_mod_pow2(c, a.int("k")?, a.int("m")?, a.int("b")?),
    },
    CheckDef {
        name: "check_euler_mod_pow3",
        params: KMB,
        run: |c, a| check_euler_mod_pow3(c, a.int("k")?, a.int("m")?, a.int("b")?),
    },
    CheckDef {
        name: "check_theorem_5_1",
        params: KMB,
        run: |c, a| check_theorem_5_1(c, a.int("k")?, a.int("m")?, a.int("b")?),
    },
];

pub fn registry() -> &'static [CheckDef] {
    REGISTRY
}

/// Looks a check up by its full name (`check_theorem_3_1`) or without the
/// `check_` prefix (`theorem_3_1`).
pub fn find_check(name: &str) -> Option<&'static CheckDef> {
    REGISTRY
        .iter()
        .find(|d| d.name == name || d.name.strip_prefix("check_") == Some(name))
}
