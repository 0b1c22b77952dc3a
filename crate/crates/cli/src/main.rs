use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use xembed::{run_cli, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => err.exit(),
    };
    let outcome = run_cli(&cli);
    let text = serde_json::to_string_pretty(&outcome.json).expect("JSON values serialize");
    // A closed pipe is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(outcome.code as u8)
}
