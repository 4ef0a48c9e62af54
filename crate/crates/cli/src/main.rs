use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use triad_cli::{commands, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.ledger && cli.command.is_some() {
        match commands::ledger(cli.format) {
            Ok(text) => eprint!("{text}"),
            Err(e) => eprintln!("error: {e}"),
        }
    }
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.stdout.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
