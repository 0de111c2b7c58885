use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use winset::cli::{self, Cli};

fn main() -> ExitCode {
    let args = Cli::parse();
    match cli::run(&args) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout
                .write_all(outcome.stdout.as_bytes())
                .and_then(|_| stdout.flush())
            {
                eprintln!("winset: {e}");
                return ExitCode::from(cli::EXIT_USAGE as u8);
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            let e = anyhow::Error::new(e).context("winset failed");
            eprintln!("{e:#}");
            let code = e
                .downcast_ref::<winset::Error>()
                .map(cli::exit_code)
                .unwrap_or(cli::EXIT_USAGE);
            ExitCode::from(code as u8)
        }
    }
}
