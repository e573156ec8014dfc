use std::process::ExitCode;

use clap::Parser;

use rcop_toric_cli::{configure_threads, run, RunConfig, Status, THREADS_VAR};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    if let Err(msg) = configure_threads(std::env::var(THREADS_VAR).ok().as_deref()) {
        eprintln!("error: {msg}");
        return ExitCode::from(Status::InputError as u8);
    }
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.status as u8)
}
