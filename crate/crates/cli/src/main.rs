use std::io;
use std::process::ExitCode;

use clap::Parser;
use quandle_cli::{run, Cli, ExitStatus};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(ExitStatus::Usage.code() as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let status = run(&cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(status.code() as u8)
}
