use std::process::ExitCode;

use clap::Parser;
use feuerbach_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            match &outcome.written_to {
                Some(path) => eprintln!("wrote {}", path.display()),
                None => print!("{}", outcome.output),
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
