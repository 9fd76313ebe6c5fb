use std::io::{Read, Write};
use std::process::ExitCode;

use clap::Parser;
use heis_deform_cli::{run, write_plot, Cli, CliError, EXIT_ERROR};

const THREADS_VAR: &str = "HEIS_DEFORM_THREADS";

fn read_input(path: &str) -> Result<String, CliError> {
    let mut buf = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut buf).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| buf = s)
    };
    res.map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    Ok(buf)
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Parse(format!(
            "{THREADS_VAR} must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Io(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads()
        .and_then(|_| read_input(&cli.input))
        .and_then(|input| run(&cli, &input))
        .and_then(|outcome| {
            if let (Some(path), Some(rows)) = (&cli.emit_plot, &outcome.plot) {
                write_plot(path, rows)?;
            }
            Ok(outcome)
        });
    match result {
        Ok(outcome) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(
                std::io::stdout().lock(),
                "{}",
                outcome.render(cli.format).trim_end()
            );
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            eprintln!("heis-deform: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
