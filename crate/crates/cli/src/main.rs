use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ncpoisson::scalar::{parse_scalar, Scalar};
use ncpoisson::suites::{Config, DEFAULT_SAMPLES, DEFAULT_SEED};
use ncpoisson_cli::commands;
use ncpoisson_cli::error::{CliError, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
use ncpoisson_cli::expr::{parse_binding, Bindings};
use ncpoisson_cli::manifest::{Manifest, Resolved};

/// Exact checks and constructions for noncommutative Poisson structures.
#[derive(Parser)]
#[command(name = "ncpoisson", version)]
struct Cli {
    /// Value for a symbolic coefficient, `name=p/q`; overrides the manifest's own.
    #[arg(long = "param", global = true, value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one law on a manifest and print a JSON report.
    Verify {
        file: PathBuf,
        #[arg(long)]
        law: String,
    },
    /// Run a construction and write the resulting manifest.
    Build {
        construction: String,
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Deformation parameter for standard-poisson.
        #[arg(long)]
        hbar: Option<String>,
    },
    /// Run a group of acceptance criteria and print a JSON summary.
    Suite {
        name: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

fn load(path: &Path, params: &Bindings) -> Result<Resolved, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Manifest::parse(&text)?.resolve(params)
}

/// A closed pipe on stdout is not an error; the exit status still reports the verdict.
fn emit(value: &serde_json::Value) {
    let _ = writeln!(std::io::stdout(), "{value:#}");
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let params = cli.params.iter().map(|p| parse_binding(p)).collect::<Result<Bindings, _>>()?;
    match cli.command {
        Command::Verify { file, law } => {
            let resolved = load(&file, &params)?;
            let report = commands::verify(&law, &resolved)?;
            emit(&report.to_json(&file.display().to_string()));
            Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Build { construction, file, output, hbar } => {
            let hbar: Option<Scalar> =
                hbar.map(|h| parse_scalar(&h).ok_or_else(|| CliError::Parse(format!("hbar {h:?}")))).transpose()?;
            let resolved = load(&file, &params)?;
            let manifest = commands::build(&construction, &resolved, hbar.as_ref())?;
            std::fs::write(&output, manifest.to_text()).map_err(|source| CliError::Io { path: output.display().to_string(), source })?;
            Ok(EXIT_PASS)
        }
        Command::Suite { name, seed, samples } => {
            let (summary, all) = commands::suite(&name, &Config { seed, samples })?;
            emit(&summary);
            Ok(if all { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT
    });
    ExitCode::from(code as u8)
}
