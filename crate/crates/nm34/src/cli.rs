//! Argument parsing and command dispatch for the `nm34` binary.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use nm34_core::constructions::{
    build_hat_graphs, build_nm34, build_no_plus, kneser_oracle, Nm34Representation,
};
use nm34_core::graph::{isomorphism, srg_params, Graph};
use nm34_core::veronese::compute_orbits;
use nm34_core::Field;

use crate::claims::{self, parse_field, Scope};
use crate::formats::{from_graph6, to_dot, to_graph6, to_json, FormatError};
use crate::report::OrbitReport;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CLAIM_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

#[derive(Debug, Parser)]
#[command(
    name = "nm34",
    version,
    about = "Build and verify NO+(2n,2), NM34 and related strongly regular graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph as graph6, DOT or JSON.
    Build {
        #[arg(value_enum)]
        target: Target,
        /// Half the vector dimension for no-plus (2..=4).
        #[arg(long)]
        n: Option<usize>,
        /// Representation for nm34.
        #[arg(long, value_enum)]
        rep: Option<Rep>,
        /// Which hat graph to build.
        #[arg(long, value_enum)]
        side: Option<Side>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the claims in a scope and print a report.
    Verify {
        #[arg(value_enum)]
        scope: ScopeArg,
        /// Field order for the orbit and counting claims (2, 3, 5 or 7).
        #[arg(long)]
        q: Option<u32>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the orbit partition of PG(5,q) as JSON.
    Orbits {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report SRG parameters of graph6 graphs, one per line (stdin if no file).
    Inspect { file: Option<PathBuf> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    NoPlus,
    Nm34,
    Hat,
    Kneser,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rep {
    OffSecant,
    QuadricMinusN,
    MatrixSum,
    PerpRule,
}

impl From<Rep> for Nm34Representation {
    fn from(r: Rep) -> Self {
        match r {
            Rep::OffSecant => Nm34Representation::OffSecant,
            Rep::QuadricMinusN => Nm34Representation::QuadricMinusN,
            Rep::MatrixSum => Nm34Representation::MatrixSum,
            Rep::PerpRule => Nm34Representation::PerpRule,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    NoPlus,
    Nm34,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    Srg,
    Iso,
    Aut,
    Orbits,
    Counts,
    Table,
    All,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Srg => Scope::Srg,
            ScopeArg::Iso => Scope::Iso,
            ScopeArg::Aut => Scope::Aut,
            ScopeArg::Orbits => Scope::Orbits,
            ScopeArg::Counts => Scope::Counts,
            ScopeArg::Table => Scope::Table,
            ScopeArg::All => Scope::All,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Builds the requested graph, rejecting options that do not apply to the
/// target.
pub fn build_graph(
    target: Target,
    n: Option<usize>,
    rep: Option<Rep>,
    side: Option<Side>,
) -> Result<(Graph, String), CliError> {
    let reject = |flag: &str, set: bool| {
        if set {
            Err(usage(format!("--{flag} does not apply to this target")))
        } else {
            Ok(())
        }
    };
    match target {
        Target::NoPlus => {
            reject("rep", rep.is_some())?;
            reject("side", side.is_some())?;
            let n = n.unwrap_or(3);
            let g =
                build_no_plus(n).map_err(|_| usage(format!("--n must be 2, 3 or 4, got {n}")))?;
            Ok((g, format!("NO+({},2)", 2 * n)))
        }
        Target::Nm34 => {
            reject("n", n.is_some())?;
            reject("side", side.is_some())?;
            let rep: Nm34Representation = rep.unwrap_or(Rep::OffSecant).into();
            Ok((build_nm34(rep), format!("NM34 {rep}")))
        }
        Target::Hat => {
            reject("n", n.is_some())?;
            reject("rep", rep.is_some())?;
            let (a, b) = build_hat_graphs();
            Ok(match side.unwrap_or(Side::Nm34) {
                Side::NoPlus => (a, "NO+ hat".into()),
                Side::Nm34 => (b, "NM34 hat".into()),
            })
        }
        Target::Kneser => {
            reject("n", n.is_some())?;
            reject("rep", rep.is_some())?;
            reject("side", side.is_some())?;
            Ok((kneser_oracle(), "K(8,2)".into()))
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = if text.ends_with('\n') {
        text.to_string()
    } else {
        format!("{text}\n")
    };
    match out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn field(q: u32) -> Result<Field, CliError> {
    parse_field(q).map_err(CliError::Usage)
}

fn inspect(text: &str) -> Result<String, CliError> {
    let reference = build_no_plus(3).expect("n = 3");
    let mut lines = Vec::new();
    for (i, line) in text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
    {
        let g = from_graph6(line.trim()).map_err(|e| usage(format!("line {}: {e}", i + 1)))?;
        let params = match srg_params(&g) {
            Ok(p) => format!("srg {p}"),
            Err(e) => format!("not srg ({e:?})"),
        };
        let iso = if g.n() == reference.n() {
            match isomorphism(&g, &reference) {
                Ok(o) if o.is_isomorphic() => "; isomorphic to NO+(6,2)".to_string(),
                Ok(_) => "; not isomorphic to NO+(6,2)".to_string(),
                Err(e) => format!("; isomorphism test aborted: {e}"),
            }
        } else {
            String::new()
        };
        lines.push(format!("{}: n={} {params}{iso}", i + 1, g.n()));
    }
    Ok(lines.join("\n"))
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Build {
            target,
            n,
            rep,
            side,
            format,
            out,
        } => {
            let (g, name) = build_graph(target, n, rep, side)?;
            let text = match format {
                Format::Graph6 => to_graph6(&g)?,
                Format::Dot => to_dot(&g, &name),
                Format::Json => to_json(&g, &name),
            };
            emit(out.as_ref(), &text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            scope,
            q,
            json,
            out,
        } => {
            let q = q.map(field).transpose()?;
            let report = claims::verify(scope.into(), q);
            let text = if json {
                report.to_json()
            } else {
                report.to_string()
            };
            emit(out.as_ref(), &text, stdout)?;
            Ok(if report.all_verified() {
                EXIT_OK
            } else {
                EXIT_CLAIM_FAILED
            })
        }
        Command::Orbits { q, out } => {
            let report = OrbitReport::from_partition(&compute_orbits(field(q)?));
            emit(out.as_ref(), &report.to_json(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Inspect { file } => {
            let text = match &file {
                Some(p) => fs::read_to_string(p).map_err(|source| CliError::Io {
                    path: p.display().to_string(),
                    source,
                })?,
                None => {
                    let mut s = String::new();
                    io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|source| CliError::Io {
                            path: "<stdin>".into(),
                            source,
                        })?;
                    s
                }
            };
            emit(None, &inspect(&text)?, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(stderr, "{}", e.render().ansi());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("nm34").chain(args.iter().copied()),
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
    fn build_no_plus_graph6() {
        let (code, out, _) = run_str(&["build", "no-plus", "--n", "3", "--format", "graph6"]);
        assert_eq!(code, EXIT_OK);
        let g = from_graph6(out.trim()).unwrap();
        assert_eq!(g.n(), 28);
        assert!(g.same_edges(&build_no_plus(3).unwrap()));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["build", "no-plus", "--n", "5"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["build", "nm34", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["build", "kneser", "--side", "nm34"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["build", "cube"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "counts", "--q", "4"]).0, EXIT_USAGE);
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn inspect_reports_params() {
        let g6 = to_graph6(&kneser_oracle()).unwrap();
        let text = inspect(&format!("{g6}\n{}\n", to_graph6(&Graph::cycle(5)).unwrap())).unwrap();
        assert!(
            text.contains("srg (28,15,6,10); isomorphic to NO+(6,2)"),
            "{text}"
        );
        assert!(text.contains("2: n=5 srg (5,2,0,1)"), "{text}");
        assert!(inspect("A").is_err());
    }
}
