use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sepchoose_core::commands::{self, Fixtures};
use sepchoose_core::discharge::Variant;
use sepchoose_core::merge::MERGE_BUDGET;
use sepchoose_core::report::{RunReport, Verdict};
use sepchoose_core::choose::DEFAULT_BUDGET;
use sepchoose_core::Error;

/// Reducibility, Alon-Tarsi and discharging checks for list colouring with
/// separation. Exit status: 0 all pass, 1 some check fails, 2 bad usage or
/// input, 3 a check ran out of budget.
#[derive(Parser)]
#[command(name = "sepchoose", version)]
struct Cli {
    /// Directory whose fixture files replace the built-in ones.
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Search-node budget per check.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Record,
}

#[derive(Subcommand)]
enum Command {
    /// Check every catalog entry (or the named ones) is reducible.
    VerifyCatalog { names: Vec<String> },
    /// Classify vertex pairs of the large entries and check every merge.
    VerifyMerges {
        names: Vec<String>,
        #[arg(long, default_value_t = 5)]
        forbidden_len: usize,
    },
    /// Audit charge sums, case ledgers, bounds and the LP.
    AuditDischarging {
        #[arg(long)]
        variant: Option<Variant>,
    },
    /// Search for an Alon-Tarsi orientation of a catalog entry or graph.
    FindAt {
        name: String,
        /// List sizes: one value, or one per vertex separated by commas.
        #[arg(long)]
        f: Option<String>,
    },
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Budget(_) => 3,
        Error::Audit(_) => 1,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<Vec<RunReport>, Error> {
    let fx = match &cli.fixtures {
        Some(dir) => Fixtures::from_dir(dir)?,
        None => Fixtures::shipped(),
    };
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    let merge_budget = cli.budget.unwrap_or(MERGE_BUDGET);
    Ok(match &cli.command {
        Some(Command::VerifyCatalog { names }) => vec![commands::cmd_verify_catalog(&fx, names, budget)?],
        Some(Command::VerifyMerges { names, forbidden_len }) => {
            vec![commands::cmd_verify_merges(&fx, names, *forbidden_len, merge_budget)?]
        }
        Some(Command::AuditDischarging { variant }) => {
            let vs: Vec<Variant> = variant.iter().copied().collect();
            vec![commands::cmd_audit_discharging(&fx, &vs)?]
        }
        Some(Command::FindAt { name, f }) => vec![commands::cmd_find_at(&fx, name, f.as_deref())?],
        None => vec![
            commands::cmd_verify_catalog(&fx, &[], budget)?,
            commands::cmd_verify_merges(&fx, &[], 5, merge_budget)?,
            commands::cmd_audit_discharging(&fx, &[])?,
        ],
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let reports = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("sepchoose: {e}");
            return ExitCode::from(exit_for(&e));
        }
    };
    for r in &reports {
        match cli.format {
            Format::Text => print!("{}", r.to_text()),
            Format::Record => print!("{}", r.to_records()),
        }
    }
    let any = |v| reports.iter().any(|r| r.has(v));
    if any(Verdict::Fail) || any(Verdict::Error) {
        ExitCode::from(1)
    } else if any(Verdict::Budget) {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}
