//! The `ke` command line. JSON goes to stdout, a short human summary to
//! stderr.
//!
//! Exit codes: 0 success or predicate true, 1 predicate false or stress
//! violations, 2 input error, 3 guardrail exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::explorer::{probe_omega_characterization, stress_bounded, TheoremId, TrialConfig};
use crate::graph::{is_ke_graph_bounded, realizable_in_some_omega_bounded};
use crate::io::{parse_vertex_list, read_collection, read_graph, Format};
use crate::report::{
    analyze_collection, analyze_graph, CollectionOptions, GraphOptions, MethodChoice,
};
use crate::sets::{is_ke, HkeMethod};
use crate::{is_hke_bruteforce_bounded, Error, Limits, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ke", version, about = "König–Egerváry collections and graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyse a set collection given as JSON.
    AnalyzeCollection {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        /// Include the signed partition-law table.
        #[arg(long)]
        signed: bool,
    },
    /// Analyse a graph given as JSON or an edge list.
    AnalyzeGraph {
        path: PathBuf,
        /// List all maximum independent sets.
        #[arg(long)]
        omega: bool,
        /// Search for an hke certificate.
        #[arg(long)]
        certificate: bool,
        /// Also analyse the subgraph induced by these vertices, e.g. "1,2,3".
        #[arg(long)]
        induce: Option<String>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Run a theorem stress suite and print JSON lines.
    Stress {
        theorem: String,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Exit 0 if the predicate holds, 1 otherwise.
    Assert {
        #[command(flatten)]
        predicate: Predicate,
        path: PathBuf,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Tabulate which small collections are exactly Ω of a graph.
    Probe {
        #[command(flatten)]
        config: ConfigArgs,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Predicate {
    /// Collection is hke.
    #[arg(long)]
    hke: bool,
    /// Collection is KE.
    #[arg(long)]
    ke: bool,
    /// Collection lies inside Ω of some graph.
    #[arg(long)]
    realizable: bool,
    /// Graph is KE.
    #[arg(long)]
    ke_graph: bool,
}

#[derive(Args, Debug)]
struct ConfigArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Enumerate every small instance instead of sampling.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = 6)]
    universe_max: usize,
    #[arg(long, default_value_t = 3)]
    alpha_max: usize,
    #[arg(long, default_value_t = 4)]
    collection_size_max: usize,
    #[arg(long, default_value_t = 1)]
    graph_n_min: usize,
    #[arg(long, default_value_t = 5)]
    graph_n_max: usize,
    #[arg(long, default_value_t = 0.5)]
    edge_probability: f64,
}

impl From<&ConfigArgs> for TrialConfig {
    fn from(a: &ConfigArgs) -> Self {
        TrialConfig {
            seed: a.seed,
            trials: a.trials,
            universe_max: a.universe_max,
            alpha_max: a.alpha_max,
            collection_size_max: a.collection_size_max,
            graph_n_min: a.graph_n_min,
            graph_n_max: a.graph_n_max,
            edge_probability: a.edge_probability,
            exhaustive: a.exhaustive,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Brute,
    Duality,
    Existential,
    All,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => MethodChoice::One(HkeMethod::Brute),
            MethodArg::Duality => MethodChoice::One(HkeMethod::Duality),
            MethodArg::Existential => MethodChoice::One(HkeMethod::Existential),
            MethodArg::All => MethodChoice::All,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Json,
    EdgeList,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::EdgeList => Format::EdgeList,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TooLarge { .. } => EXIT_TOO_LARGE,
        Error::Violation(_) => EXIT_FALSE,
        _ => EXIT_INPUT,
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let limits = Limits::from_env();
    match dispatch(cli.command, &limits, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = emit(
                out,
                &json!({ "error": { "code": e.code(), "message": e.to_string() } }),
            );
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn dispatch(
    cmd: Command,
    limits: &Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    match cmd {
        Command::AnalyzeCollection {
            path,
            method,
            signed,
        } => {
            let (c, bytes) = read_collection(&path)?;
            let opts = CollectionOptions {
                method: method.into(),
                signed,
            };
            let report = analyze_collection(&c, &bytes, &opts, limits)?;
            emit(out, &report).map_err(io_err)?;
            let v = &report.verdicts;
            let _ = writeln!(
                err,
                "{} sets, alpha={}, e={}, KE={}, hke={}, m={}",
                c.len(),
                v.get("alpha").map_or("-".into(), |x| x.to_string()),
                v["e"],
                v.get("is_ke").map_or("-".into(), |x| x.to_string()),
                v.get("is_hke").map_or("-".into(), |x| x.to_string()),
                v.get("m_result").map_or("-".into(), |x| x["m"].to_string()),
            );
            Ok(EXIT_OK)
        }
        Command::AnalyzeGraph {
            path,
            omega,
            certificate,
            induce,
            format,
        } => {
            let (g, bytes) = read_graph(&path, format.map(Into::into))?;
            let opts = GraphOptions {
                omega,
                certificate,
                induce: induce.as_deref().map(parse_vertex_list).transpose()?,
            };
            let report = analyze_graph(&g, &bytes, &opts, limits)?;
            emit(out, &report).map_err(io_err)?;
            let v = &report.verdicts;
            let _ = writeln!(
                err,
                "n={}, alpha={}, mu={}, KE={}",
                v["n"], v["alpha"], v["mu"], v["ke_graph"]
            );
            Ok(EXIT_OK)
        }
        Command::Stress { theorem, config } => {
            let theorem: TheoremId = theorem.parse()?;
            let report = stress_bounded(theorem, &TrialConfig::from(&config), limits)?;
            out.write_all(report.to_jsonl().as_bytes())
                .map_err(io_err)?;
            let _ = writeln!(
                err,
                "{theorem}: {} instances, {} violations, {:.2?}",
                report.instances_checked,
                report.violations.len(),
                report.elapsed
            );
            Ok(if report.passed() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Assert {
            predicate,
            path,
            format,
        } => {
            let (name, holds) = if predicate.ke_graph {
                let (g, _) = read_graph(&path, format.map(Into::into))?;
                ("ke_graph", is_ke_graph_bounded(&g, limits)?)
            } else {
                let (c, _) = read_collection(&path)?;
                if predicate.hke {
                    ("hke", is_hke_bruteforce_bounded(&c, limits)?)
                } else if predicate.ke {
                    ("ke", is_ke(&c)?)
                } else {
                    (
                        "realizable",
                        realizable_in_some_omega_bounded(&c, limits)?.realizable,
                    )
                }
            };
            emit(out, &json!({ "predicate": name, "holds": holds })).map_err(io_err)?;
            let _ = writeln!(err, "{name}: {holds}");
            Ok(if holds { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Probe { config } => {
            let report = probe_omega_characterization(&TrialConfig::from(&config), limits)?;
            emit(out, &report).map_err(io_err)?;
            let _ = writeln!(
                err,
                "{} collections: {} exactly Ω, {} properly contained, {} unrealizable",
                report.checked,
                report.exactly_omega,
                report.properly_contained,
                report.unrealizable
            );
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("ke").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn exit_codes_by_error_kind() {
        assert_eq!(exit_code(&Error::Violation("x".into())), EXIT_FALSE);
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_INPUT);
        assert_eq!(exit_code(&Error::UnknownTheorem("x".into())), EXIT_INPUT);
        assert_eq!(
            exit_code(&Error::TooLarge {
                what: "x",
                actual: 2,
                limit: 1
            }),
            EXIT_TOO_LARGE
        );
    }

    #[test]
    fn unknown_theorem_is_input_error() {
        let (code, out, _) = call(&["stress", "BOGUS"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(out.contains("UnknownTheorem"));
    }

    #[test]
    fn bad_usage() {
        assert_eq!(call(&[]).0, EXIT_INPUT);
        assert_eq!(call(&["assert", "x.json"]).0, EXIT_INPUT);
        assert_eq!(call(&["assert", "--hke", "--ke", "x.json"]).0, EXIT_INPUT);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn stress_runs() {
        let (code, out, err) = call(&["stress", "even", "--exhaustive", "--universe-max", "4"]);
        assert_eq!(code, EXIT_OK);
        let summary: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
        assert_eq!(summary["passed"], true);
        assert!(err.contains("EVEN"));
    }

    #[test]
    fn bad_config() {
        let (code, out, _) = call(&["stress", "EVEN", "--trials", "0"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(out.contains("BadConfig"));
        let (code, _, _) = call(&["stress", "EVEN", "--exhaustive", "--universe-max", "9"]);
        assert_eq!(code, EXIT_TOO_LARGE);
    }
}
