//! Command-line front end: `verify-example1`, `reproduce-table`, `search`
//! and `ring-info`.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a row does not
//! match, 2 on usage or input errors.

pub mod commands;
pub mod config;
pub mod data;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::gray::GrayOrder;
use crate::par::Execution;
use commands::{RowStatus, VerifyOptions};
use config::JobConfig;

#[derive(Parser, Debug)]
#[command(name = "skewcodes", version, about = "Skew constacyclic codes over F_q + vF_q + v^2F_q and their quantum codes")]
struct Cli {
    /// Run every sweep on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Re-derive the worked F_25 example step by step.
    VerifyExample1 {
        /// Negative control: use -δ, which must break the example.
        #[arg(long)]
        negate_lambda: bool,
        #[arg(long, default_value_t = GrayOrder::Blocks)]
        gray_order: GrayOrder,
    },
    /// Reproduce rows of the reference table (all rows by default).
    ReproduceTable {
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
        /// Print the modulus attempts for every row.
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Search for dual-containing codes as described by a job file.
    Search {
        config: PathBuf,
        #[arg(long)]
        csv: bool,
        /// Echo the normalised job file before the results.
        #[arg(long)]
        print_config: bool,
    },
    /// Print the idempotent decomposition of R over F_{p^m}.
    RingInfo {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    let io = |e: std::io::Error| Error::Internal(e.to_string());
    match cli.command {
        Command::VerifyExample1 { negate_lambda, gray_order } => {
            let report = commands::verify_example1(VerifyOptions { negate_lambda, gray_order, exec })?;
            write!(out, "{}", report.render()).map_err(io)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::ReproduceTable { rows, verbose, csv } => {
            let outcomes = commands::reproduce_table(&rows, exec)?;
            if csv {
                let records: Vec<_> = outcomes.iter().filter_map(|o| o.record.clone()).collect();
                write!(out, "{}", commands::records_csv(&records)?).map_err(io)?;
            } else {
                for o in &outcomes {
                    writeln!(out, "{}", o.summary()).map_err(io)?;
                    if verbose || o.status != RowStatus::Confirmed {
                        for a in &o.attempts {
                            writeln!(out, "        {a}").map_err(io)?;
                        }
                    }
                }
                let confirmed = outcomes.iter().filter(|o| o.status == RowStatus::Confirmed).count();
                writeln!(out, "{confirmed}/{} rows confirmed", outcomes.len()).map_err(io)?;
            }
            Ok(if outcomes.iter().all(|o| o.status == RowStatus::Confirmed) { 0 } else { 1 })
        }
        Command::Search { config, csv, print_config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Error::Config { line: 0, reason: format!("{}: {e}", config.display()) })?;
            let cfg = JobConfig::parse(&text)?;
            if print_config {
                write!(out, "{cfg}").map_err(io)?;
            }
            let report = commands::run_search(&cfg, exec)?;
            if csv {
                write!(out, "{}", commands::records_csv(&report.records)?).map_err(io)?;
            } else {
                write!(out, "{}", commands::records_table(&report.records)).map_err(io)?;
                writeln!(
                    out,
                    "{} codes; dual-containing divisors per component {:?}; {} uncertified",
                    report.records.len(),
                    report.candidates,
                    report.uncertified
                )
                .map_err(io)?;
            }
            Ok(0)
        }
        Command::RingInfo { p, m } => {
            write!(out, "{}", commands::ring_info(p, m)?).map_err(io)?;
            Ok(0)
        }
    }
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
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
