use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use synthfid::{run_pipeline, Error, RunConfig};

const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Parser)]
#[command(name = "synthfid", version, about = "Score a synthetic CSV table against its real counterpart")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a full evaluation and write the report and plot sidecars.
    Evaluate {
        /// YAML run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Override the configured seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Skip the embedding and graph metrics.
        #[arg(long)]
        no_structural: bool,
    },
    /// Print the JSON Schema of the report document.
    Schema,
}

fn evaluate(config: PathBuf, seed: Option<u64>, no_structural: bool) -> Result<(), Error> {
    let mut cfg = RunConfig::from_file(&config)?;
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    if no_structural {
        cfg.enable_structural = false;
    }
    let outcome = run_pipeline(&cfg)?;
    println!("{}", outcome.report_path.display());
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Cli::parse().command {
        Command::Schema => {
            print!("{REPORT_SCHEMA}");
            ExitCode::SUCCESS
        }
        Command::Evaluate {
            config,
            seed,
            no_structural,
        } => match evaluate(config, seed, no_structural) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        },
    }
}
