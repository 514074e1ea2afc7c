use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use overbid_core::alt_mech::{deferred_acceptance_with, is_stable};
use overbid_core::contracting::{DropRule, Side};
use overbid_core::game::{analyze, evaluate_full, sweep_consumers_only, sweep_with, Mechanism};
use overbid_core::matching::SupplyPriority;
use overbid_core::rapid::{run_rapid, PreferenceScenario};
use overbid_core::report::{self, render, Format, Report, ReportKind, DEFAULT_PRECISION};
use overbid_core::{Error, Scenario, StrategyProfile};

#[derive(Parser)]
#[command(name = "overbid", version, about = "Pro-rata joint purchasing simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a scenario file and list every violated invariant.
    Validate {
        #[arg(long, default_value = "builtin:scenario1")]
        scenario: String,
    },
    /// Bids, matches, contracts and utilities for one strategy profile.
    Run {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        profile: String,
    },
    /// Outcome of every strategy profile.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Pin every supplier to truthful bidding.
        #[arg(long)]
        restricted: bool,
    },
    /// Pure Nash equilibria, dominance and improving deviations.
    Equilibria {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        restricted: bool,
    },
    /// Binding contracts from deferred acceptance over a profile's matches.
    Da {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        profile: String,
        #[arg(long, value_enum, default_value_t = Proposer::Consumer)]
        proposer: Proposer,
    },
    /// Two-sided matching with optional overbidding.
    Rapid {
        /// `1`, `2` or a path to a preference scenario file.
        #[arg(long)]
        example: String,
        #[arg(long)]
        overbid: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Common {
    /// Scenario file or `builtin:scenario1|scenario2`.
    #[arg(long, default_value = "builtin:scenario1")]
    scenario: String,
    #[arg(long, value_enum, default_value_t = Priority::Largest)]
    priority: Priority,
    /// Drop negative-utility matches even when capacity remains.
    #[arg(long)]
    drop_negative: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum Priority {
    Largest,
    Price,
}

#[derive(Clone, Copy, ValueEnum)]
enum Proposer {
    Consumer,
    Supplier,
}

impl Common {
    fn mechanism(&self) -> Mechanism {
        Mechanism {
            priority: match self.priority {
                Priority::Largest => SupplyPriority::LargestBid,
                Priority::Price => SupplyPriority::LowestPrice,
            },
            drop: DropRule {
                drop_negative: self.drop_negative,
            },
        }
    }
}

impl Output {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Md => Format::Markdown,
        }
    }

    fn emit(&self, report: &Report) -> Result<(), Error> {
        match &self.out {
            Some(path) => fs::write(path, &report.body).map_err(|e| Error::Io {
                path: path.display().to_string(),
                source: e,
            }),
            None => {
                print!("{}", report.body);
                Ok(())
            }
        }
    }
}

fn load(source: &str) -> Result<Scenario, Error> {
    Scenario::load(source)?.validated()
}

fn execute(command: Command) -> Result<(), Error> {
    match command {
        Command::Validate { scenario } => {
            let sc = Scenario::load(&scenario)?;
            let violations = sc.validate();
            if !violations.is_empty() {
                return Err(Error::Invalid(violations));
            }
            println!("ok");
            Ok(())
        }
        Command::Run { common, profile } => {
            let sc = load(&common.scenario)?;
            let profile = StrategyProfile::parse_for(&profile, &sc)?;
            let eval = evaluate_full(&sc, &profile, common.mechanism());
            let p = common.output.precision;
            let tables = [
                report::bids_table(&sc, &eval, p),
                report::dp_totals_table(&sc, &eval, p),
                report::matches_table(&sc, &eval, p),
                report::contracts_table(&sc, &eval, p),
                report::utilities_table(&sc, &profile.to_string(), &eval, p),
            ];
            common.output.emit(&render(ReportKind::Utilities, common.output.format(), &tables))
        }
        Command::Sweep { common, restricted } => {
            let sc = load(&common.scenario)?;
            let table = if restricted {
                sweep_consumers_only(&sc, common.mechanism())?
            } else {
                sweep_with(&sc, common.mechanism())?
            };
            let t = report::sweep_table(&table, common.output.precision);
            common.output.emit(&render(ReportKind::Sweep, common.output.format(), &[t]))
        }
        Command::Equilibria { common, restricted } => {
            let sc = load(&common.scenario)?;
            let table = if restricted {
                sweep_consumers_only(&sc, common.mechanism())?
            } else {
                sweep_with(&sc, common.mechanism())?
            };
            let tables = report::equilibria_tables(&table, &analyze(&table), common.output.precision);
            common.output.emit(&render(ReportKind::Equilibria, common.output.format(), &tables))
        }
        Command::Da { common, profile, proposer } => {
            let sc = load(&common.scenario)?;
            let profile = StrategyProfile::parse_for(&profile, &sc)?;
            let eval = evaluate_full(&sc, &profile, common.mechanism());
            let side = match proposer {
                Proposer::Consumer => Side::Consumer,
                Proposer::Supplier => Side::Supplier,
            };
            let da = deferred_acceptance_with(&eval.matches, &sc, side);
            let blocking = is_stable(&da.contracts, &eval.matches, &sc);
            let tables = report::da_tables(&sc, &da, &blocking, &eval.matches, common.output.precision);
            common.output.emit(&render(ReportKind::Da, common.output.format(), &tables))
        }
        Command::Rapid { example, overbid, output } => {
            let sc = match example.as_str() {
                "1" => PreferenceScenario::example(1)?,
                "2" => PreferenceScenario::example(2)?,
                path => {
                    let text = fs::read_to_string(path).map_err(|e| Error::Io {
                        path: path.to_string(),
                        source: e,
                    })?;
                    PreferenceScenario::from_json(&text)?
                }
            };
            let t = report::rapid_table(&run_rapid(&sc, overbid));
            output.emit(&render(ReportKind::Rapid, output.format(), &[t]))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Invalid(violations)) => {
            eprintln!("invalid scenario:");
            for v in violations {
                eprintln!("  {v}");
            }
            ExitCode::from(2)
        }
        Err(e @ Error::Profile(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(e @ (Error::Io { .. } | Error::Json(_) | Error::UnknownBuiltin(_) | Error::Preferences(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
