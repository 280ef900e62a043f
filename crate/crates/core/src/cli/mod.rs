//! Batch command-line front end. Exit codes: `0` all checks passed, `1` a
//! verification failed, `2` usage or configuration error.

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::forms::catalog::FormLabel;
use crate::identities::{self, DEFAULT_ORDER};
use crate::lambert::{self, certify_lemma, LEMMAS, NON_EXAMPLES};
use crate::numeric::{
    self, eval_label, limit_t0, monotonicity_scan, plot_tables, small_t_positivity_check, EvalConfig, GridSpec,
};
use crate::positivity;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "qmf",
    version,
    about = "Quasimodular form expansions, identities, positivity and monotonicity checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Working precision for numerics.
    #[arg(long, global = true, env = "QMF_BITS", default_value_t = 128)]
    pub bits: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a q-expansion.
    Expand {
        form: String,
        #[arg(long, env = "QMF_ORDER", default_value_t = 10)]
        order: usize,
    },
    /// Verify registry identities.
    Identity {
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
        #[arg(long, env = "QMF_ORDER", default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Exact complete-positivity scan.
    Positivity {
        form: String,
        #[arg(long, env = "QMF_ORDER", default_value_t = 500)]
        order: usize,
    },
    /// Density of positive coefficients.
    Density {
        form: String,
        #[arg(long, default_value_t = 2000)]
        n: usize,
    },
    /// Minimum of a_{Nn}/a_n.
    RatioInf {
        form: String,
        #[arg(long, default_value_t = 2)]
        dilate: u32,
        #[arg(long, default_value_t = 1024)]
        bound: usize,
    },
    /// Sign scan of d/dt (t^m F(it)) on a geometric grid.
    Scan {
        form: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 0.05)]
        tmin: f64,
        #[arg(long, default_value_t = 20.0)]
        tmax: f64,
        #[arg(long, default_value_t = 60)]
        points: usize,
    },
    /// Certify Lambert-series monotonicity lemmas.
    LambertCertify {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
        /// Write the certificate JSON here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Limit of t^(w-1) X_{w,1}(it) at 0 and the small-t positivity check.
    Limits { form: String },
    /// TSV tables behind the figures.
    Plotdata {
        #[arg(long, default_value_t = 200)]
        points: usize,
        /// Only this table.
        #[arg(long)]
        figure: Option<String>,
    },
    /// Run every acceptance criterion.
    Report {
        /// Only this criterion.
        #[arg(long)]
        criterion: Option<u32>,
    },
    /// Value of a form at z = it.
    Eval {
        form: String,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
}

/// A finished command: what to print and whether its checks passed.
struct Outcome {
    text: String,
    json: Value,
    passed: bool,
}

impl Outcome {
    fn new(text: String, json: Value, passed: bool) -> Self {
        Outcome { text, json, passed }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Serialization with sorted keys, stable under parse and re-emit.
pub fn canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialize");
    s.push('\n');
    s
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NonIntegerGrain => "NonIntegerGrain",
        Error::OrderExceeded { .. } => "OrderExceeded",
        Error::BadWeight(_) => "BadWeight",
        Error::ParameterRange(_) => "ParameterRange",
        Error::UnknownIdentity(_) => "UnknownIdentity",
        Error::UnknownLabel(_) => "UnknownLabel",
        Error::UnsupportedShape(_) => "UnsupportedShape",
        Error::InvalidInput(_) => "InvalidInput",
        Error::NonPositiveT => "NonPositiveT",
        Error::Parse(_) => "Parse",
    }
}

fn weight_of_depth1(form: &str) -> Result<u32> {
    form.strip_prefix('X')
        .and_then(|s| s.strip_suffix("_1"))
        .and_then(|s| s.parse().ok())
        .filter(|_| FormLabel::parse(form).is_ok())
        .ok_or_else(|| Error::InvalidInput(format!("limits needs a label Xw_1, got `{form}`")))
}

fn execute(cmd: &Command, g: &Global) -> Result<Outcome> {
    let cfg = EvalConfig::with_bits(g.bits);
    cfg.validate()?;
    Ok(match cmd {
        Command::Expand { form, order } => {
            let label = FormLabel::parse(form)?;
            let f = label.build(*order)?;
            let j =
                json!({"label": form, "descriptor": to_value(&label.descriptor()), "series": to_value(&f.to_json())});
            Outcome::new(f.to_string(), j, true)
        }
        Command::Identity { id, all, order } => {
            let results = match (id, all) {
                (Some(id), _) => vec![identities::verify(id, *order)?],
                (None, true) => identities::verify_all(*order),
                (None, false) => return Err(Error::InvalidInput("give an identity id or --all".into())),
            };
            let failed: Vec<&str> = results.iter().filter(|r| !r.passed()).map(|r| r.id.as_str()).collect();
            let mut text = String::new();
            for r in &results {
                let st = match &r.status {
                    identities::Status::Pass => "PASS".to_string(),
                    identities::Status::Fail { exponent, residual } => format!("FAIL at q^{exponent}: {residual}"),
                };
                text.push_str(&format!(
                    "{:<14} {st:<10} order {:<4} {:>9.1} ms  {}\n",
                    r.id, r.order, r.elapsed_ms, r.anchor
                ));
            }
            text.push_str(&format!("{}/{} passed", results.len() - failed.len(), results.len()));
            let j = json!({"results": to_value(&results), "failures": failed});
            Outcome::new(text, j, failed.is_empty())
        }
        Command::Positivity { form, order } => {
            let r = positivity::check_label(form, *order)?;
            let text = match &r.first_negative {
                None => format!("{form}: completely positive up to order {order}"),
                Some(n) => format!("{form}: first negative coefficient {} at q^{}", n.value, n.exponent),
            };
            Outcome::new(text, to_value(&r), r.completely_positive_up_to_order)
        }
        Command::Density { form, n } => {
            let r = positivity::density_label(form, *n)?;
            let passed = match &r.predicted {
                Some(p) => {
                    (p.parse::<rug::Rational>().map_err(|e| Error::Parse(e.to_string()))?.to_f64() - r.density).abs()
                        < 0.01
                }
                None => true,
            };
            let text = format!(
                "{form}: {}/{} positive, density {:.6}{}",
                r.count_positive,
                r.n,
                r.density,
                r.predicted.as_ref().map(|p| format!(" (stated {p})")).unwrap_or_default()
            );
            Outcome::new(text, to_value(&r), passed)
        }
        Command::RatioInf { form, dilate, bound } => {
            let r = positivity::ratio_label(form, *dilate, *bound)?;
            let text = format!(
                "{form}: min a_({dilate}n)/a_n over n <= {bound} = {} ~ {} at n = {}; nonpositive a_n at {:?}",
                r.min_ratio.as_deref().unwrap_or("-"),
                r.min_ratio_approx.as_deref().unwrap_or("-"),
                r.argmin.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
                r.violations
            );
            let passed = r.violations.is_empty();
            Outcome::new(text, to_value(&r), passed)
        }
        Command::Scan { form, m, tmin, tmax, points } => {
            let spec = GridSpec { t_min: *tmin, t_max: *tmax, points: *points };
            let r = monotonicity_scan(form, *m, &spec, &cfg)?;
            let mut text = String::new();
            for (t, s) in r.grid.iter().zip(&r.s_values) {
                text.push_str(&format!("{t:>12.6}  {s}\n"));
            }
            text.push_str(&format!("t^{m} {form}: {:?}, sign changes {:?}", r.verdict, r.sign_changes));
            Outcome::new(text, to_value(&r), true)
        }
        Command::LambertCertify { name, all, emit } => {
            let names: Vec<&str> = match (name, all) {
                (Some(n), _) => vec![n.as_str()],
                (None, true) => LEMMAS.iter().chain(NON_EXAMPLES).copied().collect(),
                (None, false) => return Err(Error::InvalidInput("give a shape name or --all".into())),
            };
            let mut text = String::new();
            let mut certs = serde_json::Map::new();
            let mut passed = true;
            for n in names {
                let c = certify_lemma(n)?;
                let expected = LEMMAS.contains(&n);
                passed &= c.is_valid() == expected;
                let how = match (&c.n_star, c.method) {
                    (Some(ns), lambert::Method::Taylor) => format!("taylor, n* = {ns}"),
                    _ => format!("{:?}", c.method).to_lowercase(),
                };
                text.push_str(&format!("{n:<6} {:<8} {how}\n", if c.is_valid() { "valid" } else { "invalid" }));
                certs.insert(n.to_string(), to_value(&c.to_json()));
            }
            let j = Value::Object(certs);
            if let Some(path) = emit {
                std::fs::write(path, canonical_json(&j))
                    .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            }
            Outcome::new(text.trim_end().to_string(), j, passed)
        }
        Command::Limits { form } => {
            let w = weight_of_depth1(form)?;
            let l = limit_t0(w, &cfg)?;
            let small = if w >= 12 { Some(small_t_positivity_check(w, &cfg)?) } else { None };
            let passed = l.relative_error < report::LIMIT_REL_TOL && small.as_ref().is_none_or(|s| s.ok);
            let mut text = String::new();
            for (t, v) in &l.samples {
                text.push_str(&format!("t = {t:<5} t^{} {form}(it) = {v}\n", w - 1));
            }
            text.push_str(&format!(
                "predicted {} (beta0 = {}), relative error {:.2e}",
                l.predicted, l.beta0, l.relative_error
            ));
            if let Some(s) = &small {
                text.push_str(&format!(
                    "\nsmall-t condition: beta1 = {}, sign ok {}, numeric ok {}",
                    s.beta1, s.sign_condition, s.ok
                ));
            }
            Outcome::new(text, json!({"limit": to_value(&l), "small_t": small.map(|s| to_value(&s))}), passed)
        }
        Command::Plotdata { points, figure } => {
            let tables = plot_tables(*points, &cfg)?;
            let chosen: Vec<_> = tables.into_iter().filter(|t| figure.as_ref().is_none_or(|f| *f == t.name)).collect();
            if chosen.is_empty() {
                return Err(Error::InvalidInput(format!("no figure named {:?}", figure)));
            }
            let text = chosen.iter().map(|t| t.to_tsv()).collect::<Vec<_>>().join("\n");
            let j = json!(chosen
                .iter()
                .map(|t| json!({"name": t.name, "figure": t.figure, "columns": t.columns, "rows": t.rows}))
                .collect::<Vec<_>>());
            Outcome::new(text.trim_end().to_string(), j, true)
        }
        Command::Report { criterion } => {
            let crits = match criterion {
                Some(id) => {
                    vec![report::criterion(*id).ok_or_else(|| Error::InvalidInput(format!("no criterion {id}")))?]
                }
                None => report::all_criteria(),
            };
            let mut text = String::new();
            for c in &crits {
                text.push_str(&format!(
                    "[{}] criterion {:>2}: {} ({:.1} s)\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.id,
                    c.title,
                    c.elapsed_ms / 1e3
                ));
                for d in &c.details {
                    text.push_str(&format!("      {d}\n"));
                }
            }
            let passed = crits.iter().all(|c| c.passed);
            Outcome::new(text.trim_end().to_string(), to_value(&crits), passed)
        }
        Command::Eval { form, t } => {
            let e = eval_label(form, *t, &cfg)?;
            let j = json!({"label": form, "t": t, "value": numeric::fmt_float(&e.value), "tail_estimate": numeric::fmt_float(&e.tail_estimate)});
            Outcome::new(format!("{form}(i*{t}) = {e}"), j, true)
        }
    })
}

fn emit(g: &Global, body: &str) -> std::io::Result<()> {
    match &g.output {
        Some(p) => std::fs::write(p, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

/// Runs the tool on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let g = &cli.global;
    match execute(&cli.command, g) {
        Ok(out) => {
            let body = match g.format {
                Format::Text => format!("{}\n", out.text),
                Format::Json => canonical_json(&out.json),
            };
            if let Err(e) = emit(g, &body) {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
            if out.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if g.format == Format::Json {
                let _ = emit(g, &canonical_json(&json!({"error": {"kind": error_kind(&e), "message": e.to_string()}})));
            }
            EXIT_USAGE
        }
    }
}
