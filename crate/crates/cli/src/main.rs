use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use quintic_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli);
    let json = report.to_json();
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            // A closed pipe on stdout is not worth a panic.
            let _ = std::io::stdout().write_all(json.as_bytes());
        }
    }
    eprint!("{}", report.summary());
    ExitCode::from(report.exit_code as u8)
}
