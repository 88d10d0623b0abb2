use std::process::ExitCode;

use braidist_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    run(&Cli::parse())
}
