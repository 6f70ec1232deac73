mod args;
mod commands;
mod config;
mod error;

use std::ffi::OsString;

use clap::{CommandFactory, FromArgMatches};

use args::Cli;
use error::CliError;

const THREADS_VAR: &str = "JULIA_LIMIT_THREADS";

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{THREADS_VAR} must be a non-negative integer, got `{raw}`")))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size the thread pool: {e}")))?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn run(args: Vec<OsString>) -> Result<(), CliError> {
    let mut root = Cli::command();
    let names: Vec<String> = root.get_subcommands().map(|c| c.get_name().to_string()).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let args = config::expand(args, &names)?;
    let matches = match root.try_get_matches_from_mut(&args) {
        Ok(m) => m,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let cli = Cli::from_arg_matches(&matches).map_err(|e| CliError::Usage(e.to_string()))?;
    if cli.dump_config {
        print!("{}", config::dump(&root, &matches));
        return Ok(());
    }
    configure_threads()?;
    commands::execute(cli.command)
}

fn main() {
    if let Err(e) = run(std::env::args_os().collect()) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
