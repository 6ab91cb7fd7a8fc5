use std::io::Write;
use std::process::ExitCode;

use ainf_cli::{run, Cli, EXIT_INVALID};
use clap::Parser;

fn main() -> ExitCode {
    let config = match Cli::parse().into_config() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let outcome = run(&config);
    if outcome.status == EXIT_INVALID {
        eprint!("{}", outcome.output);
    } else {
        let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    }
    ExitCode::from(outcome.status)
}
