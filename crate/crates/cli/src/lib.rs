//! Front end for `heis-deform`: argument parsing, command dispatch, and
//! report formatting. The binary is a thin shell around [`run`].

mod family;
mod text;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use heis_deform::json::{self, JsonScalar, Mode};
use heis_deform::oracle::{freeness_probe, properness_probe};
use heis_deform::parametrize::{alpha, canonicalize, coords};
use heis_deform::scalar::parse_rational;
use heis_deform::{Contact, DeformError, HomPair, ProbeConfig, Rational, Tolerance};
use serde_json::{json, Value};

pub use family::{FamilyRow, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Decide proper discontinuity of a pair
    Check,
    /// Parameter point to pair
    Param,
    /// Proper pair to parameter point
    Coords,
    /// Canonical conjugacy representative and deformation-space coordinates
    Canon,
    /// Brute-force orbit probe plus freeness search
    Probe,
    /// Evaluate a one-parameter family of pairs
    Family,
    /// Torus matrix, fiber length and orientations
    Geom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "heis-deform",
    version,
    about = "Proper deformations of the discrete Heisenberg group"
)]
pub struct Cli {
    pub command: Command,
    /// Input JSON file, or `-` for standard input
    pub input: String,
    /// Read every number as an exact rational
    #[arg(long)]
    pub exact: bool,
    /// Zero threshold on the float path
    #[arg(long, default_value_t = Tolerance::DEFAULT.0)]
    pub tol: f64,
    /// Probe box radius
    #[arg(long = "R", default_value = "2")]
    pub radius: String,
    /// Probe word-box sizes
    #[arg(long = "N", value_delimiter = ',', default_values_t = [8i64, 12, 16, 20])]
    pub n_list: Vec<i64>,
    /// Count translates that merely touch the probe box as well
    #[arg(long)]
    pub closed_box: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write `parameter,fiber_length` rows of a family as CSV
    #[arg(long)]
    pub emit_plot: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(DeformError),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl From<DeformError> for CliError {
    fn from(e: DeformError) -> Self {
        match e {
            DeformError::Input(msg) => CliError::Parse(msg),
            other => CliError::Domain(other),
        }
    }
}

/// Exit codes: `check` returns 0 proper, 1 not proper, 2 undecided; every
/// command returns 2 on any error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_PROPER: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub exit: i32,
    pub plot: Option<Vec<(f64, f64)>>,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            exit: EXIT_OK,
            plot: None,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("values serialize"),
            Format::Text => self.text.clone(),
        }
    }
}

/// Runs one command on an already-read input document.
pub fn run(cli: &Cli, input: &str) -> Result<Outcome, CliError> {
    let doc: Value = serde_json::from_str(input).map_err(|e| CliError::Parse(e.to_string()))?;
    let tol = Tolerance(cli.tol);
    if !(tol.0.is_finite() && tol.0 >= 0.0) {
        return Err(CliError::Parse(format!(
            "tolerance must be a finite nonnegative number, got {}",
            cli.tol
        )));
    }
    match cli.command {
        Command::Family => return family::run(cli, &doc, tol),
        Command::Param => {
            return match json::param_mode(&doc, cli.exact)? {
                Mode::Exact => param::<Rational>(cli, &doc, tol),
                Mode::Float => param::<f64>(cli, &doc, tol),
            }
        }
        _ => {}
    }
    match json::pair_mode(&doc, cli.exact)? {
        Mode::Exact => on_pair::<Rational>(cli, &doc, tol),
        Mode::Float => on_pair::<f64>(cli, &doc, tol),
    }
}

fn param<S: JsonScalar>(cli: &Cli, doc: &Value, tol: Tolerance) -> Result<Outcome, CliError> {
    let point = json::parse_param::<S>(doc, cli.exact)?;
    let pair = alpha(&point, tol)?;
    Ok(Outcome::ok(json::pair_json(&pair), text::pair(&pair)))
}

fn on_pair<S: JsonScalar + Radius>(
    cli: &Cli,
    doc: &Value,
    tol: Tolerance,
) -> Result<Outcome, CliError> {
    let pair = json::parse_pair::<S>(doc, cli.exact)?;
    Ok(match cli.command {
        Command::Check => {
            let verdict = pair.is_proper(tol);
            let exit = if verdict.proper {
                EXIT_OK
            } else if verdict.undecided {
                EXIT_ERROR
            } else {
                EXIT_NOT_PROPER
            };
            Outcome {
                exit,
                ..Outcome::ok(json::verdict_json(&verdict), text::verdict(&verdict))
            }
        }
        Command::Coords => {
            let point = coords(&pair, tol)?;
            Outcome::ok(json::param_json(&point), text::param(&point))
        }
        Command::Canon => {
            let canon = canonicalize(&pair, tol)?;
            Outcome::ok(json::canonical_json(&canon), text::canonical(&canon))
        }
        Command::Geom => {
            let geometry = pair.geometry(tol)?;
            Outcome::ok(json::geometry_json(&geometry), text::geometry(&geometry))
        }
        Command::Probe => probe(cli, &pair, tol)?,
        Command::Param | Command::Family => unreachable!("dispatched before pair parsing"),
    })
}

fn probe<S: JsonScalar + Radius>(
    cli: &Cli,
    pair: &HomPair<S>,
    tol: Tolerance,
) -> Result<Outcome, CliError> {
    let radius = S::parse_radius(&cli.radius)?;
    if cli.n_list.is_empty() || cli.n_list.iter().any(|&n| n < 0) {
        return Err(CliError::Parse(
            "--N needs nonnegative word-box sizes".into(),
        ));
    }
    let config = ProbeConfig {
        radius,
        n_list: cli.n_list.clone(),
        contact: if cli.closed_box {
            Contact::Closed
        } else {
            Contact::Interior
        },
        ..ProbeConfig::default()
    };
    let report = properness_probe(pair, &config);
    let bound = report.n_list.iter().copied().max().unwrap_or(0);
    let fixed = freeness_probe(pair, bound, tol);
    let mut out = json::probe_json(&report);
    let shown: Vec<Value> = fixed
        .iter()
        .take(config.witness_cap)
        .map(json::word_json)
        .collect();
    out["freeness"] = json!({
        "N": bound,
        "count": fixed.len(),
        "witnesses": shown,
    });
    Ok(Outcome::ok(out, text::probe(&report, bound, &fixed)))
}

/// Reading the `--R` flag in the active scalar mode.
pub trait Radius: Sized {
    fn parse_radius(s: &str) -> Result<Self, CliError>;
}

impl Radius for Rational {
    fn parse_radius(s: &str) -> Result<Self, CliError> {
        parse_rational(s)
            .filter(|r| *r > Rational::from_integer(0.into()))
            .ok_or_else(|| CliError::Parse(format!("--R must be a positive rational, got {s:?}")))
    }
}

impl Radius for f64 {
    fn parse_radius(s: &str) -> Result<Self, CliError> {
        s.parse::<f64>()
            .ok()
            .filter(|r| r.is_finite() && *r > 0.0)
            .ok_or_else(|| CliError::Parse(format!("--R must be a positive number, got {s:?}")))
    }
}

/// Writes the plot rows of a family as CSV.
pub fn write_plot(path: &std::path::Path, rows: &[(f64, f64)]) -> Result<(), CliError> {
    let io = |e: csv::Error| CliError::Io(e.to_string());
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(["parameter", "fiber_length"]).map_err(io)?;
    for (x, y) in rows {
        w.write_record([x.to_string(), y.to_string()]).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}
