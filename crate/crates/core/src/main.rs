use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use graph_spans::cli::{run, Cli, INPUT_ERROR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok((status, report)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(report.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(INPUT_ERROR as u8);
            }
            status.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            INPUT_ERROR
        }
    };
    ExitCode::from(code as u8)
}
