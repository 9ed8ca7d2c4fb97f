//! JSON-emitting command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error (stdout carries
//! `{"error": code, "detail": text}`), 2 on a usage error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Value};

use crate::bigjson::number_from_bigint;
use crate::catalog::{classify, dual_of, Dual, SpaceSpec};
use crate::charclass::{
    bounds_orientably, pontrjagin_numbers, stiefel_whitney_numbers, total_pontrjagin, CharNumberTable, DualSpace,
    NumberIndex, CAYLEY_SIGN_CONVENTION,
};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::transfer::{
    check_cover_degree, deligne_sullivan_check, gl_order, mu, pullback_numbers, solve_manifold_numbers,
    TransferDegrees,
};

#[derive(Debug, Parser)]
#[command(name = "charnum", version, about = "Characteristic numbers of symmetric-space duals")]
pub struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Write the JSON to this file instead of standard output.
    #[arg(long, short, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dual, ranks, toral rank and verdict for a space spec such as `SU_pq(2,3)`.
    Classify { spec: String },
    /// The compact dual `G_U/K` of a space spec.
    Dual { spec: String },
    /// Total Pontrjagin class of a rank-one dual (`CP^2`, `HP^3`, ... or a spec like `CHn(2)`).
    PClass { space: String },
    /// Pontrjagin numbers of a rank-one dual.
    PNumbers {
        space: String,
        /// Only report these partitions (e.g. `2,2`); repeatable.
        #[arg(long = "partition", value_name = "PARTITION")]
        partitions: Vec<String>,
    },
    /// Stiefel-Whitney numbers of a sphere or complex projective space.
    SwNumbers { space: String },
    /// Pull a table back along a degree, or solve for the numbers of `M`.
    #[command(allow_negative_numbers = true)]
    Transfer {
        /// Table as inline JSON or `@path`.
        #[arg(long)]
        table: String,
        /// Pull back along a tangential map of this degree.
        #[arg(long, conflicts_with_all = ["deg_t", "deg_f"])]
        deg: Option<BigInt>,
        /// Degree of the tangential map `M̄ → M_U`.
        #[arg(long, requires = "deg_f")]
        deg_t: Option<BigInt>,
        /// Degree of the cover `M̄ → M`.
        #[arg(long, requires = "deg_t")]
        deg_f: Option<BigInt>,
    },
    /// The cover-degree invariant μ from the tables of `M` and its dual.
    Mu {
        /// Pontrjagin numbers of `M`, inline JSON or `@path`.
        #[arg(long = "m")]
        m: String,
        /// Pontrjagin numbers of the dual, inline JSON or `@path`.
        #[arg(long = "mu-dual")]
        mu_dual: String,
        /// Also report whether μ divides this cover degree.
        #[arg(long)]
        degree: Option<BigUint>,
    },
    /// Orientable bounding verdict, from a dual space or from explicit tables.
    Wall {
        #[arg(conflicts_with_all = ["p", "sw"], required_unless_present = "p")]
        space: Option<String>,
        /// Pontrjagin table, inline JSON or `@path`.
        #[arg(long)]
        p: Option<String>,
        /// Stiefel-Whitney table, inline JSON or `@path`.
        #[arg(long)]
        sw: Option<String>,
    },
    /// Order of `GL(n, F_q)`.
    GlOrder {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
    },
    /// Whether μ divides `|GL(2k+1, F_q1) × GL(2k+1, F_q2)|`.
    DsCheck {
        #[arg(long)]
        mu: BigUint,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        q1: u64,
        #[arg(long)]
        q2: u64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let (code, value) = match execute(&cli.command) {
        Ok(v) => (0, v),
        Err(e) => (1, json!({ "error": e.code(), "detail": e.to_string() })),
    };
    let mut text = if cli.pretty {
        serde_json::to_string_pretty(&value).expect("JSON values serialize")
    } else {
        serde_json::to_string(&value).expect("JSON values serialize")
    };
    text.push('\n');
    match &cli.output {
        Some(path) if code == 0 => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("cannot write {}: {e}\n", path.display()) },
        },
        _ => Outcome { code, stdout: text, stderr: String::new() },
    }
}

pub fn execute(command: &Command) -> Result<Value> {
    match command {
        Command::Classify { spec } => {
            let spec: SpaceSpec = spec.parse()?;
            to_json(&classify(&spec)?)
        }
        Command::Dual { spec } => {
            let spec: SpaceSpec = spec.parse()?;
            let dual = dual_of(&spec)?;
            let pair = dual.pair();
            Ok(json!({
                "spec": spec.to_string(),
                "dual": dual.to_string(),
                "compact": pair.map(|p| p.compact.to_string()),
                "isotropy": pair.map(|p| p.isotropy.to_string()),
            }))
        }
        Command::PClass { space } => {
            let space = resolve_dual(space)?;
            let class = total_pontrjagin(space);
            let ring = class.ring();
            let coefficients: Vec<Value> =
                class.coefficients().iter().map(|c| Value::Number(number_from_bigint(c))).collect();
            let mut out = json!({
                "space": space.to_string(),
                "generator_degree": ring.generator_degree(),
                "truncation_top": ring.truncation_top(),
                "coefficients": coefficients,
                "class": class.to_string(),
            });
            if space == DualSpace::CayleyPlane {
                out["sign_convention"] = Value::from(CAYLEY_SIGN_CONVENTION);
            }
            Ok(out)
        }
        Command::PNumbers { space, partitions } => {
            let table = pontrjagin_numbers(resolve_dual(space)?);
            if partitions.is_empty() {
                return Ok(table.to_json());
            }
            let wanted = partitions.iter().map(|p| p.parse::<Partition>()).collect::<Result<Vec<_>>>()?;
            let mut out = table.to_json();
            let mut entries = Map::new();
            for p in wanted {
                if 4 * p.weight() != table.dimension() {
                    return Err(Error::InvalidTable(format!("partition ({p}) does not index dimension {}", table.dimension())));
                }
                let value = table.get(&NumberIndex::Partition(p.clone()));
                entries.insert(p.to_string(), Value::Number(number_from_bigint(&value)));
            }
            out["entries"] = Value::Object(entries);
            Ok(out)
        }
        Command::SwNumbers { space } => Ok(stiefel_whitney_numbers(resolve_dual(space)?)?.to_json()),
        Command::Transfer { table, deg, deg_t, deg_f } => {
            let table = read_table(table)?;
            let result = match (deg, deg_t, deg_f) {
                (Some(d), _, _) => pullback_numbers(&table, d),
                (None, Some(t), Some(f)) => solve_manifold_numbers(&table, &TransferDegrees::new(f.clone(), t.clone())?)?,
                _ => return Err(Error::InvalidParameters("give --deg, or both --deg-t and --deg-f".into())),
            };
            Ok(result.to_json())
        }
        Command::Mu { m, mu_dual, degree } => {
            let report = mu(&read_table(m)?, &read_table(mu_dual)?)?;
            let mut out = to_json(&report)?;
            if let Some(d) = degree {
                out["degree"] = big_number(d);
                out["divides_degree"] = Value::Bool(check_cover_degree(&report.mu, d));
            }
            Ok(out)
        }
        Command::Wall { space, p, sw } => {
            let (label, p_table, sw_table) = match (space, p) {
                (Some(space), _) => {
                    let space = resolve_dual(space)?;
                    let sw = match stiefel_whitney_numbers(space) {
                        Ok(t) => Some(t),
                        Err(Error::Unsupported(_)) => None,
                        Err(e) => return Err(e),
                    };
                    (Value::from(space.to_string()), pontrjagin_numbers(space), sw)
                }
                (None, Some(p)) => (Value::Null, read_table(p)?, sw.as_deref().map(read_table).transpose()?),
                (None, None) => return Err(Error::InvalidParameters("give a space or --p".into())),
            };
            let verdict = bounds_orientably(&p_table, sw_table.as_ref())?;
            let mut out = json!({ "verdict": verdict, "dim": p_table.dimension() });
            if !label.is_null() {
                out["space"] = label;
            }
            Ok(out)
        }
        Command::GlOrder { n, q } => {
            let order = gl_order(*n, *q)?;
            Ok(json!({ "n": n, "q": q, "order": big_number(&order) }))
        }
        Command::DsCheck { mu, k, q1, q2 } => {
            let check = deligne_sullivan_check(mu, *k, *q1, *q2)?;
            let mut out = to_json(&check)?;
            out["mu"] = big_number(mu);
            out["k"] = Value::from(*k);
            out["q1"] = Value::from(*q1);
            out["q2"] = Value::from(*q2);
            Ok(out)
        }
    }
}

fn big_number(n: &BigUint) -> Value {
    Value::Number(number_from_bigint(&BigInt::from(n.clone())))
}

fn to_json<T: serde::Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::InvalidTable(e.to_string()))
}

/// A dual space written directly (`CP^2`) or reached from a spec (`CHn(2)`).
pub fn resolve_dual(text: &str) -> Result<DualSpace> {
    if let Ok(space) = text.parse::<DualSpace>() {
        return Ok(space);
    }
    let spec: SpaceSpec = text.parse()?;
    match dual_of(&spec)? {
        Dual::Symbolic { space, .. } => Ok(space),
        dual => Err(Error::Unsupported(format!(
            "characteristic classes of the higher-rank dual {dual} of {spec} are not computed"
        ))),
    }
}

/// Inline JSON, or `@path` to read it from a file.
pub fn read_table(arg: &str) -> Result<CharNumberTable> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::InvalidTable(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::InvalidTable(e.to_string()))?;
    CharNumberTable::from_json(&value)
}
