//! Command-line front end. Every verb writes one JSON document to stdout;
//! failures go to stderr as JSON with the exit code of the underlying error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::demazure::{demazure_module, LIFT_PRIMES};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, PrimeField, Rationals};
use crate::geomrep::{chevalley_compare, finite_points};
use crate::grassmann::{count_polynomial, expected_dimension, DEFAULT_CAP};
use crate::hull::{projective, q_w};
use crate::palg::{default_truncation, hilbert, PreprojectiveAlgebra};
use crate::quiver::{parse_dim_vector, Kind, Quiver};
use crate::verify;
use crate::weyl::{format_word, parse_word, Weyl};

/// Primes used by the point-counting verbs when none are given.
const DEFAULT_PRIMES: [u64; 3] = [2, 3, 5];

/// Exit code for a check battery with at least one failing criterion.
const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "ppalg", version, about = "Exact computations with preprojective algebras and their modules")]
pub struct Cli {
    /// JSON file with default values for --trunc, --primes, --cap, --max-len and --field
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Accepted for scripting; JSON is the only output format
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite, affine or wild, with the Dynkin label when there is one
    Classify {
        /// Quiver JSON file
        quiver: PathBuf,
    },
    /// Dimensions of the preprojective algebra by path length
    PpalgDims {
        /// Quiver JSON file
        quiver: PathBuf,
        /// Highest path length (default: vanishing degree, else the default truncation)
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// The injective module q^w with its socle and projection
    Injective {
        /// Quiver JSON file
        quiver: PathBuf,
        /// Socle dimensions: 1,1 or vertex:count pairs such as 1:1,2:1
        #[arg(long)]
        socle: String,
        /// Path-length truncation for non-finite quivers
        #[arg(long)]
        trunc: Option<usize>,
        /// "rational" or "GF(p)"
        #[arg(long)]
        field: Option<String>,
    },
    /// The projective module p^i
    Projective {
        /// Quiver JSON file
        quiver: PathBuf,
        /// Vertex name
        #[arg(long)]
        vertex: String,
        /// Path-length truncation for non-finite quivers
        #[arg(long)]
        trunc: Option<usize>,
        /// "rational" or "GF(p)"
        #[arg(long)]
        field: Option<String>,
    },
    /// Demazure chain of q^w along a reduced word
    Demazure {
        /// Quiver JSON file
        quiver: PathBuf,
        /// Socle dimension vector, e.g. 1,0 or 1:1
        #[arg(long)]
        w: String,
        /// Reduced word: vertex names separated by spaces or commas
        #[arg(long)]
        word: String,
        /// Path-length truncation for non-finite quivers
        #[arg(long)]
        trunc: Option<usize>,
    },
    /// Point counts of Gr(v, q^w) and their interpolating polynomial
    Count {
        /// Quiver JSON file
        quiver: PathBuf,
        /// Socle dimension vector, e.g. 1,0 or 1:1
        #[arg(long)]
        w: String,
        /// Dimension vector of the submodules
        #[arg(long)]
        v: String,
        /// Comma-separated primes
        #[arg(long)]
        primes: Option<String>,
        /// Path-length truncation for non-finite quivers
        #[arg(long)]
        trunc: Option<usize>,
        /// Bound on the number of subspaces enumerated per count
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Weight multiplicity of omega_w - alpha_v
    Weightmult {
        /// Quiver JSON file
        quiver: PathBuf,
        /// Socle dimension vector, e.g. 1,0 or 1:1
        #[arg(long)]
        w: String,
        /// Dimension vector of the submodules
        #[arg(long)]
        v: String,
    },
    /// E, F, H matrices on the point basis of a finite realization
    RepMatrices {
        /// Quiver JSON file
        quiver: PathBuf,
        /// Socle dimension vector, e.g. 1,0 or 1:1
        #[arg(long)]
        w: String,
        /// Comma-separated primes
        #[arg(long)]
        primes: Option<String>,
        /// Bound on the number of subspaces enumerated per count
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Compare the realizations for w and theta(w)
    Chevalley {
        /// Quiver JSON file
        quiver: PathBuf,
        /// Socle dimension vector, e.g. 1,0 or 1:1
        #[arg(long)]
        w: String,
        /// Comma-separated primes
        #[arg(long)]
        primes: Option<String>,
        /// Bound on the number of subspaces enumerated per count
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Run a check battery: "core", or a single criterion number 1-12
    Verify { suite: String },
}

/// Defaults read from `--config`; explicit flags take precedence.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct Config {
    trunc: Option<usize>,
    primes: Option<Vec<u64>>,
    cap: Option<u128>,
    max_len: Option<usize>,
    field: Option<String>,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(v: &Value) -> Self {
        Outcome { code: 0, stdout: render(v), stderr: String::new() }
    }
    fn err(e: &Error) -> Self {
        let body = json!({ "error": e.to_string(), "exit_code": e.exit_code() });
        Outcome { code: e.exit_code(), stdout: String::new(), stderr: render(&body) }
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let config = match cli.config.as_deref().map(load_config).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => return Outcome::err(&e),
    };
    if let Command::Verify { suite } = &cli.command {
        return run_verify(suite);
    }
    match execute(&cli.command, &config) {
        Ok(v) => Outcome::ok(&v),
        Err(e) => Outcome::err(&e),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))
}

fn load_config(path: &Path) -> Result<Config> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("config {}: {e}", path.display())))
}

fn load_quiver(path: &Path) -> Result<Quiver> {
    Quiver::from_json(&read(path)?)
}

fn parse_primes(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad prime {p:?}"))))
        .map(|p| p.and_then(|p| PrimeField::new(p).map(|_| p)))
        .collect()
}

fn primes_or(flag: &Option<String>, config: &Config, default: impl FnOnce() -> Vec<u64>) -> Result<Vec<u64>> {
    match (flag, &config.primes) {
        (Some(s), _) => parse_primes(s),
        (None, Some(ps)) => {
            for &p in ps {
                PrimeField::new(p)?;
            }
            Ok(ps.clone())
        }
        (None, None) => Ok(default()),
    }
}

fn field_spec(flag: &Option<String>, config: &Config) -> Result<FieldSpec> {
    flag.as_deref().or(config.field.as_deref()).map_or(Ok(FieldSpec::Rationals), FieldSpec::parse_tag)
}

fn dims(q: &Quiver, s: &str) -> Result<Vec<usize>> {
    parse_dim_vector(q, s)
}

fn as_i64(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

fn execute(command: &Command, config: &Config) -> Result<Value> {
    let cap = |flag: &Option<u128>| flag.or(config.cap).unwrap_or(DEFAULT_CAP);
    let trunc = |flag: &Option<usize>| flag.or(config.trunc);
    match command {
        Command::Classify { quiver } => {
            let q = load_quiver(quiver)?;
            Ok(serde_json::to_value(q.classify()).expect("classification serializes"))
        }
        Command::PpalgDims { quiver, max_len } => {
            let q = load_quiver(quiver)?;
            let n = match max_len.or(config.max_len) {
                Some(n) => n,
                None if q.cartan_matrix().kind == Kind::Finite => {
                    PreprojectiveAlgebra::vanishing_degree(&q, 64).unwrap_or_else(|| default_truncation(&q))
                }
                None => default_truncation(&q),
            };
            Ok(json!(hilbert(&q, n)))
        }
        Command::Injective { quiver, socle, trunc: t, field } => {
            let q = load_quiver(quiver)?;
            let w = dims(&q, socle)?;
            let t = trunc(t);
            match field_spec(field, config)? {
                FieldSpec::Rationals => Ok(q_w(&Rationals, &q, &w, t)?.to_json()),
                FieldSpec::PrimeField(p) => Ok(q_w(&PrimeField::new(p)?, &q, &w, t)?.to_json()),
            }
        }
        Command::Projective { quiver, vertex, trunc: t, field } => {
            let q = load_quiver(quiver)?;
            let i = q.vertex_index(vertex)?;
            let t = trunc(t);
            match field_spec(field, config)? {
                FieldSpec::Rationals => Ok(projective(&Rationals, &q, i, t)?.to_json()),
                FieldSpec::PrimeField(p) => Ok(projective(&PrimeField::new(p)?, &q, i, t)?.to_json()),
            }
        }
        Command::Demazure { quiver, w, word, trunc: t } => {
            let q = load_quiver(quiver)?;
            let w = dims(&q, w)?;
            let word = parse_word(&q, word)?;
            let chain = demazure_module(&Rationals, &q, &w, &word, trunc(t))?;
            let rep = chain.model.rep();
            let stages: Vec<Value> = chain.stages.iter().map(|s| s.to_json(rep)).collect();
            Ok(json!({
                "w": w,
                "word": format_word(&q, &word),
                "bound": chain.model.bound(),
                "exact": chain.model.is_exact(),
                "stage_dims": chain.stage_dims(),
                "stages": stages,
                "fallback_stages": chain.fallback_stages,
            }))
        }
        Command::Count { quiver, w, v, primes, trunc: t, cap: c } => {
            let q = load_quiver(quiver)?;
            let w = dims(&q, w)?;
            let v = dims(&q, v)?;
            let primes = primes_or(primes, config, || {
                let needed = expected_dimension(&q, &w, &v).max(0) as usize + 2;
                LIFT_PRIMES.iter().copied().take(needed.max(2)).collect()
            })?;
            let poly = count_polynomial(&q, &w, &v, &primes, trunc(t), cap(c))?;
            let mut out = poly.to_json();
            out["w"] = json!(w);
            out["v"] = json!(v);
            Ok(out)
        }
        Command::Weightmult { quiver, w, v } => {
            let q = load_quiver(quiver)?;
            let w = dims(&q, w)?;
            let v = dims(&q, v)?;
            Ok(json!(Weyl::new(&q).weight_multiplicity(&as_i64(&w), &as_i64(&v))?))
        }
        Command::RepMatrices { quiver, w, primes, cap: c } => {
            let q = load_quiver(quiver)?;
            let w = dims(&q, w)?;
            let primes = primes_or(primes, config, || DEFAULT_PRIMES.to_vec())?;
            Ok(finite_points(&q, &w, &primes, cap(c))?.realize()?.to_json())
        }
        Command::Chevalley { quiver, w, primes, cap: c } => {
            let q = load_quiver(quiver)?;
            let w = dims(&q, w)?;
            let primes = primes_or(primes, config, || DEFAULT_PRIMES.to_vec())?;
            let r = chevalley_compare(&q, &w, &primes, cap(c))?;
            Ok(json!({
                "w": w,
                "bijection": r.bijection,
                "e_to_f": r.e_to_f,
                "f_to_e": r.f_to_e,
                "h_negated": r.h_negated,
                "passed": r.passed(),
            }))
        }
        Command::Verify { .. } => unreachable!("handled by run_verify"),
    }
}

fn run_verify(suite: &str) -> Outcome {
    let results = match suite {
        "core" => verify::run_core(),
        other => match other.parse::<usize>().map_err(|_| Error::Validation(format!("unknown suite {other:?}"))).and_then(verify::run_criterion) {
            Ok(r) => vec![r],
            Err(e) => return Outcome::err(&e),
        },
    };
    let passed = results.iter().all(|r| r.passed);
    let report = json!({
        "suite": suite,
        "passed": passed,
        "criteria": results.iter().map(verify::CriterionResult::to_json).collect::<Vec<_>>(),
    });
    let mut out = Outcome::ok(&report);
    if !passed {
        out.code = EXIT_CHECK_FAILED;
        let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
        out.stderr = render(&json!({ "error": "check battery failed", "failed": failed }));
    }
    out
}
