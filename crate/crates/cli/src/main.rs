mod args;
mod commands;
mod error;
mod matrix_file;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::{Cli, Command};
use commands::Output;
use error::CliError;

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Eval(a) => commands::eval(a, cli.log_base),
        Command::Curve(a) => commands::curve(a, cli.log_base),
        Command::Oracle(a) => commands::oracle(a, cli.log_base),
        Command::Verify(a) => commands::verify(a),
    }
}

fn emit(doc: &serde_json::Value) {
    let mut out = std::io::stdout().lock();
    let text = serde_json::to_string_pretty(doc).expect("json values serialize");
    // a closed pipe is not worth a panic
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            emit(&json!({ "error": { "kind": "usage", "message": e.kind().to_string() } }));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(Output::Json(doc)) => {
            emit(&doc);
            ExitCode::SUCCESS
        }
        Ok(Output::Csv(text)) => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("erae: {e}");
            match &e {
                CliError::VerifyFailed { report, .. } => emit(report),
                _ => emit(&json!({ "error": { "kind": e.kind(), "message": e.to_string() } })),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
