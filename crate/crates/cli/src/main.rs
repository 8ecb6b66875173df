use std::process::ExitCode;

use clap::Parser;
use prseq_cli::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with 2 on usage errors
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
