use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tca_lab_cli::config::Cli;
use tca_lab_cli::{run, INPUT_ERROR_EXIT};

fn exit(code: i32) -> ExitCode {
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR_EXIT } else { 0 };
            let _ = e.print();
            return exit(code);
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit(INPUT_ERROR_EXIT);
        }
    };
    let text = report.render();
    let written = match &cli.common.output {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return exit(INPUT_ERROR_EXIT);
    }
    exit(report.verdict().exit_code())
}
