//! `twoqubit`: analyze two-qubit states, tabulate the noisy swap chain, and
//! fuzz the closed forms against the numerical oracle.
//!
//! Exit codes: 0 ok, 1 parse error, 2 validation error, 3 tolerance breach.

mod analyze;
mod chain;
mod fuzz;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twoqubit::sample::Family;
use twoqubit::Error;

#[derive(Parser)]
#[command(
    name = "twoqubit",
    version,
    about = "Closed-form spectra and entanglement of two-qubit states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, partial-transpose test and entanglement measures of a state
    /// read from a JSON file.
    Analyze {
        file: PathBuf,
        /// Emit JSON instead of a text table.
        #[arg(long)]
        json: bool,
    },
    /// Minimum partial-transpose eigenvalue along a noisy swap chain.
    Chain {
        /// |ad − bc| of the initial pure state, in [0, 1/2].
        #[arg(long)]
        q: f64,
        /// Depolarizing strength per step, in [0, 1].
        #[arg(long, required_unless_present = "sweep")]
        epsilon: Option<f64>,
        /// Tabulate steps 0..=n instead of 0..=n_max+2.
        #[arg(long)]
        n: Option<u32>,
        /// Tabulate n_max over epsilon = start:stop:step.
        #[arg(long, conflicts_with_all = ["epsilon", "n"])]
        sweep: Option<String>,
        #[arg(long)]
        csv: bool,
    },
    /// Compare the closed forms with the Jacobi oracle on seeded samples.
    Fuzz {
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        /// ginibre, hermitian, pure, rank2, rank3 or werner.
        #[arg(long)]
        family: Family,
    },
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Printed on stdout before exiting, e.g. a counterexample dump.
    pub stdout: Option<String>,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
            stdout: None,
        }
    }

    pub fn validation(message: impl ToString) -> Self {
        Self {
            code: 2,
            message: message.to_string(),
            stdout: None,
        }
    }

    pub fn breach(message: impl Into<String>, stdout: String) -> Self {
        Self {
            code: 3,
            message: message.into(),
            stdout: Some(stdout),
        }
    }

    /// Internal inconsistencies are tolerance breaches; everything else is a
    /// property of the input.
    pub fn numeric(e: Error) -> Self {
        match e {
            Error::InternalInconsistency(_) | Error::NoConvergence { .. } => Self {
                code: 3,
                message: e.to_string(),
                stdout: None,
            },
            _ => Self::validation(e),
        }
    }
}

fn dispatch(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Analyze { file, json } => analyze::run(&file, json),
        Command::Chain {
            q,
            epsilon,
            n,
            sweep,
            csv,
        } => chain::run(q, epsilon, n, sweep.as_deref(), csv),
        Command::Fuzz {
            samples,
            seed,
            family,
        } => fuzz::run(samples, seed, family),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let summary: Vec<&str> = text
                .lines()
                .skip_while(|l| l.trim().is_empty())
                .take_while(|l| !l.trim().is_empty())
                .collect();
            if summary.is_empty() {
                eprintln!("error: invalid arguments");
            } else {
                eprintln!("{}", summary.join("\n"));
            }
            return ExitCode::from(1);
        }
    };
    let mut out = std::io::stdout().lock();
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(text) = &f.stdout {
                let _ = out.write_all(text.as_bytes());
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_errors_map_to_exit_codes() {
        let inconsistent = Failure::numeric(Error::InternalInconsistency("x".into()));
        assert_eq!(inconsistent.code, 3);
        assert_eq!(Failure::numeric(Error::NonFinite).code, 2);
        assert_eq!(Failure::breach("b", String::new()).code, 3);
        assert_eq!(Failure::parse("p").code, 1);
        assert_eq!(Failure::validation("v").code, 2);
    }
}
