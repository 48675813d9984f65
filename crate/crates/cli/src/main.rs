//! `indroot`: command-line front end.
//!
//! Exit codes: 0 on success (conjecture refutations included), 1 when a
//! proven statement fails, 2 on usage or operational errors.

mod check;
mod config;
mod poly;
mod survey_cmd;

use std::fmt;
use std::io::Write as _;
use std::process::ExitCode;

use clap::Parser;
use indroot::{GraphError, PolyError, RootError, SurveyError};

use config::{Cli, Command, RunConfig};

#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { message: msg.into() }
    }

    pub fn operational(msg: impl Into<String>) -> Self {
        CliError { message: msg.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

macro_rules! from_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::operational(e.to_string())
            }
        }
    )*};
}
from_error!(GraphError, PolyError, RootError, SurveyError);

fn execute(cli: &Cli) -> Result<bool, CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    if let Some(w) = cfg.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| CliError::operational(format!("worker pool: {e}")))?;
    }
    let (out, violation) = match &cli.command {
        Command::Poly(a) => poly::run(a, &cfg)?,
        Command::Survey(a) => survey_cmd::run(a, &cfg)?,
        Command::Check(a) => check::run(a, &cfg)?,
        Command::Bounds(a) => check::bounds(a, &cfg)?,
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, out)
            .map_err(|e| CliError::operational(format!("writing {}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::operational(format!("writing stdout: {e}")))?;
        }
    }
    Ok(violation)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("indroot: violation detected");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("indroot: {e}");
            ExitCode::from(2)
        }
    }
}
