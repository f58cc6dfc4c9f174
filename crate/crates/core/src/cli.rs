//! Command-line front end.
//!
//! Exit codes: 0 success, 1 some check failed, 2 usage error, 3 evaluation error.

use std::fmt;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::contfrac::{parse_cf, surd_cf, CfError, CfTerms};
use crate::identities::{self, CaseParams, IdentityError, IdentityId, Status};
use crate::report::{self, OutputMode};
use crate::sequences::SequenceKind;
use crate::tiling::{self, HeightVector};
use crate::{BigCfTerms, BigRational, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EVAL: i32 = 3;

const CF_GRAMMAR: &str = "'[' item (',' item)* ']' with item := INT | INT 'x' COUNT; \
                          the first separator may be ';'";

#[derive(Parser, Debug)]
#[command(
    name = "cfib",
    version,
    about = "Exact continued fractions and Fibonacci/Lucas identity checks"
)]
pub struct Cli {
    /// Emit machine-readable JSON (one object per line)
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a continued fraction exactly
    Eval {
        /// Term list such as "[2; 3, 7]" or "[4x5, 3]"
        cf: String,
        /// Also print a decimal rendering truncated to D digits
        #[arg(long, value_name = "D")]
        digits: Option<usize>,
    },
    /// Canonical continued fraction of NUM/DEN
    Expand {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Full table of convergents p_i/q_i
    Convergents { cf: String },
    /// Print sequence values for indices A..=B
    Seq {
        kind: SeqName,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        t: Option<i64>,
    },
    /// Brute-force tiling counts
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
    /// Check one case of an identity
    Check {
        /// Identity tag such as ID117 or THM1_GIBONACCI (THM1 also accepted)
        identity: IdentityId,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Check an identity over a parameter range
    Sweep {
        identity: IdentityId,
        #[arg(long, value_name = "LO..HI")]
        m: Span<u32>,
        #[arg(long, value_name = "LO..HI", allow_hyphen_values = true)]
        k: Option<Span<i64>>,
        /// Worker threads; output order does not depend on it
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Fit [C, C, ..., C] to a scaled Fibonacci ratio
    Fit {
        c: BigInt,
        #[arg(long = "n-max")]
        n_max: u32,
    },
    /// Periodic continued fraction of the square root of D
    Surd {
        d: BigInt,
        #[arg(long = "max-terms", default_value_t = 10_000)]
        max_terms: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    /// Square/domino tilings of an N-board
    Board { n: usize },
    /// Square/domino tilings of an N-bracelet
    Bracelet { n: usize },
    /// Stacked-square tilings with the given heights, e.g. 2,3,7
    Stacked {
        #[arg(value_delimiter = ',')]
        heights: Vec<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    Fib,
    Fibc,
    Lucas,
    LucasSwapped,
    Gib,
    Scaled,
}

/// Inclusive integer range written `LO..HI`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Copy> Span<T> {
    pub fn range(&self) -> RangeInclusive<T> {
        self.lo..=self.hi
    }
}

impl<T: FromStr + PartialOrd> FromStr for Span<T> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected LO..HI, got '{s}'"))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<T>()
                .map_err(|_| format!("bad bound '{v}' in '{s}'"))
        };
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(format!("empty range '{s}'"));
        }
        Ok(Self { lo, hi })
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Eval(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) | Self::Eval(m) => f.write_str(m),
        }
    }
}

impl From<IdentityError> for Failure {
    fn from(e: IdentityError) -> Self {
        Self::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Eval(format!("output error: {e}"))
    }
}

fn cf_failure(e: CfError, input: &str) -> Failure {
    match e {
        CfError::Parse { position, message } => {
            let token: String = input.chars().skip(position).take(8).collect();
            Failure::Usage(format!(
                "cannot parse '{input}' at position {position} (near '{token}'): {message}; expected {CF_GRAMMAR}"
            ))
        }
        CfError::EmptyCf => Failure::Usage(format!("'{input}' expands to no terms")),
        other => Failure::Eval(other.to_string()),
    }
}

fn parse_terms(input: &str) -> Result<BigCfTerms, Failure> {
    parse_cf(input).map_err(|e| cf_failure(e, input))
}

fn parse_fraction(input: &str) -> Result<BigRational, Failure> {
    let usage = || Failure::Usage(format!("expected NUM/DEN, got '{input}'"));
    let (n, d) = match input.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (input.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| usage())?;
    let d: BigInt = d.parse().map_err(|_| usage())?;
    Rational::new(n, d).map_err(|e| Failure::Usage(format!("{input}: {e}")))
}

fn terms_json(cf: &CfTerms<BigInt>) -> Vec<String> {
    cf.terms().iter().map(ToString::to_string).collect()
}

struct Session<'a> {
    mode: OutputMode,
    out: &'a mut dyn Write,
}

impl Session<'_> {
    fn line(&mut self, s: impl fmt::Display) -> io::Result<()> {
        writeln!(self.out, "{s}")
    }

    fn execute(&mut self, command: Command) -> Result<i32, Failure> {
        let json = self.mode == OutputMode::Json;
        match command {
            Command::Eval { cf, digits } => {
                let terms = parse_terms(&cf)?;
                let value = terms.eval().map_err(|e| cf_failure(e, &cf))?;
                let decimal = digits.map(|d| value.to_decimal(d));
                if json {
                    let mut v =
                        json!({ "cf": terms.to_string(), "value": report::rational_json(&value) });
                    if let Some((text, exact)) = decimal {
                        v["decimal"] = json!(text);
                        v["exact"] = json!(exact);
                    }
                    self.line(v)?;
                } else {
                    self.line(&value)?;
                    if let Some((text, exact)) = decimal {
                        self.line(if exact { text } else { text + "…" })?;
                    }
                }
            }
            Command::Expand { fraction } => {
                let r = parse_fraction(&fraction)?;
                let cf = CfTerms::expand(&r);
                if json {
                    self.line(
                        json!({ "value": report::rational_json(&r), "terms": terms_json(&cf) }),
                    )?;
                } else {
                    self.line(&cf)?;
                }
            }
            Command::Convergents { cf } => {
                let terms = parse_terms(&cf)?;
                let table = terms.convergents();
                if json {
                    let strs = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
                    self.line(json!({
                        "terms": terms_json(&terms),
                        "p": strs(&table.p),
                        "q": strs(&table.q),
                    }))?;
                } else {
                    self.line("i a p q")?;
                    for i in 0..table.len() {
                        self.line(format!("{i} {} {} {}", terms[i], table.p[i], table.q[i]))?;
                    }
                }
            }
            Command::Seq {
                kind,
                from,
                to,
                k,
                t,
            } => {
                let kind = match (kind, k, t) {
                    (SeqName::Gib, Some(k), _) => SequenceKind::Gibonacci { k },
                    (SeqName::Gib, None, _) => {
                        return Err(Failure::Usage("gib requires --k".into()))
                    }
                    (SeqName::Scaled, _, Some(t)) => SequenceKind::ScaledFib { t },
                    (SeqName::Scaled, _, None) => {
                        return Err(Failure::Usage("scaled requires --t".into()))
                    }
                    (SeqName::Fib, ..) => SequenceKind::FibClassical,
                    (SeqName::Fibc, ..) => SequenceKind::FibCombinatorial,
                    (SeqName::Lucas, ..) => SequenceKind::Lucas,
                    (SeqName::LucasSwapped, ..) => SequenceKind::LucasSwapped,
                };
                if from > to {
                    return Err(Failure::Usage(format!("empty index range {from}..{to}")));
                }
                for n in from..=to {
                    let v: BigInt = kind.term(n).map_err(|e| Failure::Eval(e.to_string()))?;
                    if json {
                        self.line(
                            json!({ "sequence": kind.to_string(), "n": n, "value": v.to_string() }),
                        )?;
                    } else {
                        self.line(format!("{n} {v}"))?;
                    }
                }
            }
            Command::Oracle { which } => {
                let (name, input, count) = match which {
                    OracleCmd::Board { n } => ("board", json!(n), tiling::count_board(n)),
                    OracleCmd::Bracelet { n } => ("bracelet", json!(n), tiling::count_bracelet(n)),
                    OracleCmd::Stacked { heights } => {
                        let h = HeightVector::new(heights.clone())
                            .map_err(|e| Failure::Usage(e.to_string()))?;
                        ("stacked", json!(heights), tiling::count_stacked(&h))
                    }
                };
                let count = count.map_err(|e| Failure::Eval(e.to_string()))?;
                if json {
                    self.line(
                        json!({ "oracle": name, "input": input, "count": count.to_string() }),
                    )?;
                } else {
                    self.line(count)?;
                }
            }
            Command::Check { identity, m, k } => {
                let p = CaseParams { m, k };
                let outcome = if identity.is_lemma() {
                    identities::check_lemma(identity, &p)?
                } else {
                    identities::check(identity, &p)?
                };
                self.line(report::case_line(self.mode, identity, &p, &outcome))?;
                if outcome.status == Status::Fail {
                    return Ok(EXIT_FAIL);
                }
            }
            Command::Sweep {
                identity,
                m,
                k,
                jobs,
            } => {
                let report =
                    identities::sweep_jobs(identity, m.range(), k.map(|k| k.range()), jobs)?;
                write!(self.out, "{}", report::render_sweep(self.mode, &report))?;
                if !report.all_passed() {
                    return Ok(EXIT_FAIL);
                }
            }
            Command::Fit { c, n_max } => {
                if c < BigInt::from(1) || n_max < 3 {
                    return Err(Failure::Usage("fit needs C >= 1 and --n-max >= 3".into()));
                }
                let t = identities::fit_uniform(&c, n_max);
                if json {
                    self.line(json!({ "c": c.to_string(), "n_max": n_max, "t": t }))?;
                } else {
                    self.line(t.map_or_else(|| "NONE".to_string(), |t| t.to_string()))?;
                }
            }
            Command::Surd { d, max_terms } => {
                let e = surd_cf(&d, max_terms).map_err(|e| match e {
                    CfError::SurdDomain(_) => Failure::Usage(e.to_string()),
                    other => Failure::Eval(other.to_string()),
                })?;
                if json {
                    let period: Vec<String> = e.period.iter().map(ToString::to_string).collect();
                    self.line(json!({
                        "d": d.to_string(),
                        "a0": e.a0.to_string(),
                        "period": period,
                        "period_length": e.period.len(),
                    }))?;
                } else {
                    self.line(format!("{e} period={}", e.period.len()))?;
                }
            }
        }
        Ok(EXIT_OK)
    }
}

/// Runs the CLI on `argv` (program name first), writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let mode = if cli.json {
        OutputMode::Json
    } else {
        OutputMode::Text
    };
    let mut session = Session { mode, out };
    match session.execute(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            let code = match failure {
                Failure::Usage(_) => EXIT_USAGE,
                Failure::Eval(_) => EXIT_EVAL,
            };
            if mode == OutputMode::Json {
                let _ = writeln!(
                    session.out,
                    "{}",
                    json!({ "error": failure.to_string(), "exit": code })
                );
            }
            let _ = writeln!(err, "error: {failure}");
            code
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
