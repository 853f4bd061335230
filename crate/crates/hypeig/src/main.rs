use clap::Parser;
use hypeig::config::TOL_ENV;
use hypeig::{run, Cli, CliError, RunConfig, EXIT_FAILURE};
use std::io::Write;
use std::process::ExitCode;

fn execute(cli: Cli) -> Result<bool, CliError> {
    let tol = std::env::var(TOL_ENV).ok();
    let cfg = RunConfig::from_cli(cli, tol.as_deref())?;
    let started = std::time::Instant::now();
    let outcome = run(&cfg)?;
    log::info!("{} finished in {:.3} s", cfg.command.as_str(), started.elapsed().as_secs_f64());
    let text = outcome.artifact.render(cfg.format)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?,
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| CliError::Output(e.to_string()))?,
    }
    if let Some(d) = outcome.diagnostic {
        eprintln!("hypeig: check failed: {d}");
    }
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    // clap exits with status 2 on bad flags.
    let cli = Cli::parse();
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILURE as u8),
        Err(e) => {
            eprintln!("hypeig: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
