//! `ballotlab`: run identity checks, dump tables and series, test the
//! open conjecture, and cross-check OEIS b-files.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use ballotlab::oddorder::{conjecture_wz_records, odd_order_table};
use ballotlab::perm::{stat_table, GroundSet, Statistic};
use ballotlab::series::{build, TruncationBox, BUILDERS};
use ballotlab::verify::{cmd_oeis, cmd_verify, VerificationReport, IDENTITIES};
use ballotlab::{Exec, StatTable};
use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ballotlab", version, about = "Exact checks of ballot permutation identities")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run identity checks and print one JSON report per line.
    Verify {
        /// Identities to run (repeatable or comma separated); all if omitted.
        #[arg(long, value_delimiter = ',')]
        identity: Vec<String>,
        /// Size for every selected identity instead of its default.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a distribution table computed by enumeration.
    Table {
        kind: TableKind,
        /// Largest length (same as --n-max).
        n: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump a generating function truncated to a box.
    Series {
        /// One of the builder names listed below.
        name: String,
        #[arg(long = "box-nx", visible_alias = "nx", default_value_t = 10)]
        nx: u32,
        #[arg(long = "box-ny", visible_alias = "ny", default_value_t = 10)]
        ny: u32,
        #[arg(long = "box-nt", visible_alias = "nt", default_value_t = 10)]
        nt: u32,
        #[arg(long = "box-nz", visible_alias = "nz", default_value_t = 10)]
        nz: u32,
        #[arg(long, default_value_t = 4)]
        guard: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test b_{n,d}(1,j) + b_{n,d}(j,1) = 2 p_{n,d}(1,j) for all n up to --n-max.
    Conjecture {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a local b-file with computed values (A000246, A008292, A321280).
    Oeis {
        sequence: String,
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    BallotDes,
    BallotPk,
    BallotPkDes,
    PermDepth,
    #[value(name = "odd-M")]
    OddM,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Identity,
}

impl From<ballotlab::Error> for Failure {
    fn from(e: ballotlab::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn report_lines(reports: &[VerificationReport]) -> String {
    reports.iter().map(|r| r.to_json_line() + "\n").collect()
}

fn table(kind: TableKind, n: usize) -> ballotlab::Result<StatTable> {
    let (ground, stats): (GroundSet, &[Statistic]) = match kind {
        TableKind::BallotDes => (GroundSet::Ballot, &[Statistic::Des]),
        TableKind::BallotPk => (GroundSet::Ballot, &[Statistic::Pk]),
        TableKind::BallotPkDes => (GroundSet::Ballot, &[Statistic::Pk, Statistic::Des]),
        TableKind::PermDepth => (GroundSet::All, &[Statistic::Depth]),
        TableKind::OddM => return Ok(odd_order_table(n, Exec::default())?.as_stat_table().clone()),
    };
    stat_table(n, ground, stats, Exec::default())
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Verify { identity, n_max, out } => {
            let reports = cmd_verify(&identity, n_max)?;
            emit(&out, &report_lines(&reports))?;
            if reports.iter().all(VerificationReport::passed) {
                Ok(())
            } else {
                Err(Failure::Identity)
            }
        }
        Cmd::Table { kind, n, n_max, format, out } => {
            let n = match (n, n_max) {
                (Some(a), Some(b)) if a != b => {
                    return Err(Failure::Usage(format!("conflicting sizes {a} and --n-max {b}")));
                }
                (a, b) => a.or(b).unwrap_or(6),
            };
            let t = table(kind, n)?;
            let text = match format {
                Format::Csv => t.to_csv(),
                Format::Json => t.to_json().to_string() + "\n",
            };
            emit(&out, &text)
        }
        Cmd::Series { name, nx, ny, nt, nz, guard, out } => {
            let s = build(&name, TruncationBox::new(nx, ny, nt, nz).with_guard(guard))?;
            emit(&out, &s.to_dump())
        }
        Cmd::Conjecture { n_max, out } => {
            let mut text = String::new();
            let mut consistent = true;
            for n in 0..=n_max {
                for r in conjecture_wz_records(n, Exec::default())? {
                    consistent &= r.equal;
                    text += &serde_json::to_string(&r).expect("record serializes");
                    text.push('\n');
                }
            }
            let label =
                if consistent { format!("consistent up to n = {n_max}") } else { "counterexample found".into() };
            text += &serde_json::json!({ "conjecture": "wz", "n_max": n_max, "label": label }).to_string();
            text.push('\n');
            emit(&out, &text)?;
            if consistent {
                Ok(())
            } else {
                Err(Failure::Identity)
            }
        }
        Cmd::Oeis { sequence, path, out } => {
            let text = fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let report = cmd_oeis(&sequence, &text)?;
            emit(&out, &report_lines(std::slice::from_ref(&report)))?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Identity)
            }
        }
    }
}

fn command() -> clap::Command {
    let ids: String = IDENTITIES.iter().map(|i| format!("  {:<18} {}\n", i.id, i.summary)).collect();
    let builders = BUILDERS.join(", ");
    Cli::command()
        .mut_subcommand("verify", |c| c.after_help(format!("Identities:\n{ids}")))
        .mut_subcommand("series", |c| c.after_help(format!("Builders: {builders}")))
        .after_help(format!(
            "Exit status: 0 all checks pass, 1 an identity failed, 2 usage or input error.\n\
             {} overrides the enumeration limit (default {}).",
            ballotlab::perm::ENUM_LIMIT_ENV,
            ballotlab::perm::DEFAULT_ENUM_LIMIT
        ))
}

fn main() -> ExitCode {
    let matches = command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
