use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use current_km_cli::{render_error, run, Cli, CliError, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap's own exit code 2 would collide with the NotIntegrable verdict
            let _ = e.print();
            let message = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
            print!("{}", render_error(&CliError::Usage(message), 2));
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let outcome = run(&cli.command);
    print!("{}", outcome.output);
    ExitCode::from(outcome.code as u8)
}
