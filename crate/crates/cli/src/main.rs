//! `partcount`: exit status 0 when every check passes, 1 when a
//! mathematical check fails, 2 on usage or configuration errors.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{Outcome, UsageError};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn run(cli: &Cli) -> Result<(Outcome, Option<&std::path::Path>), UsageError> {
    Ok(match &cli.command {
        Command::Compute(a) => (commands::compute(a)?, a.output.out.as_deref()),
        Command::Verify(a) => (commands::verify(a)?, a.output.out.as_deref()),
        Command::Asymptotics(a) => (commands::asymptotics(a)?, a.output.out.as_deref()),
        Command::OracleDiff(a) => (commands::oracle_diff(a)?, a.output.out.as_deref()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, out) = match run(&cli) {
        Ok(v) => v,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let written = match out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => std::io::stdout().lock().write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}
