use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use foldlab_cli::{parse, run, CliError, ExitKind, Options};
use foldlab_core::matrixlab::DEFAULT_COUNT_BUDGET;
use foldlab_core::presets::CATALOG;
use foldlab_core::rootdata::weyl::DEFAULT_WEYL_LIMIT;

#[derive(Parser)]
#[command(name = "foldlab", version, about = "Fixed points of pinned reductive groups under diagram automorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the analyses of a job file.
    Run {
        config: PathBuf,
        /// fold, criteria, report, chevalley, count, tangent or all; repeatable.
        #[arg(long = "analysis")]
        analysis: Vec<String>,
        /// Field size for point counts.
        #[arg(long)]
        q: Option<u64>,
        /// Characteristic for fiber reports and tangent spaces.
        #[arg(long)]
        p: Option<u64>,
        /// Write the machine-readable report here ("-" for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long = "limit-weyl", default_value_t = DEFAULT_WEYL_LIMIT)]
        limit_weyl: usize,
        /// Largest |SL_{2n+1}(F_q)| the point counter will take on.
        #[arg(long = "limit-enum", default_value_t = DEFAULT_COUNT_BUDGET)]
        limit_enum: u128,
    },
    /// List the shipped presets.
    Presets,
}

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Presets => {
            for name in CATALOG {
                println!("{name}");
            }
            Ok(())
        }
        Command::Run { config, analysis, q, p, json, limit_weyl, limit_enum } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| CliError::parse(format!("cannot read {}: {e}", config.display())))?;
            let cfg = parse(&text)?;
            let opts = Options { analyses: analysis, q, p, weyl_limit: limit_weyl, count_budget: limit_enum };
            let report = run(&cfg, &opts)?;
            match json.as_deref() {
                Some(path) if path.as_os_str() == "-" => println!("{}", report.to_json()),
                Some(path) => {
                    print!("{}", report.to_text());
                    std::fs::write(path, report.to_json() + "\n")
                        .map_err(|e| CliError::parse(format!("cannot write {}: {e}", path.display())))?;
                }
                None => print!("{}", report.to_text()),
            }
            let bad = report.mismatches();
            if bad.is_empty() {
                Ok(())
            } else {
                Err(CliError { kind: ExitKind::Mismatch, message: format!("cross-check failed: {}", bad.join("; ")) })
            }
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("foldlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
