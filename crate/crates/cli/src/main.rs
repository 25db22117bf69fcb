use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use essig_cli::args::{Cli, Command};
use essig_cli::commands::{exit_code, run};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // Keep 2 for the resource guard.
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let cache_dir = std::env::var_os("ESSIG_CACHE").map(PathBuf::from).unwrap_or_else(|| cli.cache.clone());

    // Everything but the sweep runs on one thread.
    let outcome = if matches!(cli.command, Command::Verify { .. }) {
        run(&cli, &cache_dir)
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(1).build() {
            Ok(pool) => pool.install(|| run(&cli, &cache_dir)),
            Err(_) => run(&cli, &cache_dir),
        }
    };

    let report = match outcome {
        Ok(r) => r,
        Err(e) => {
            eprintln!("essig: {e:#}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let rendered = match report.render(cli.format) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("essig: {e:#}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &rendered).map_err(anyhow::Error::from),
        None => std::io::stdout().lock().write_all(rendered.as_bytes()).map_err(anyhow::Error::from),
    };
    if let Err(e) = written {
        eprintln!("essig: {e:#}");
        return ExitCode::from(1);
    }
    ExitCode::from(report.status as u8)
}
