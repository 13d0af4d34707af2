use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;

use molien_cli::{run, Cli, CliError, OutputFormat, Report, RunConfig};

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            eprintln!("{}", e);
            return 1;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    match &cli.batch {
        Some(path) => run_batch(cli, path),
        None => run_single(cli),
    }
}

fn run_single(cli: &Cli) -> Result<i32, CliError> {
    let config = RunConfig::from_cli(cli)?;
    let report = run(&config)?;
    let rendered = match config.format {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => format!("{}\n", report.to_json()),
    };
    emit(&config.output, &rendered)?;
    finish(&[report])
}

/// Each non-empty, non-comment line of the batch file is one flag line; the
/// reports are emitted together as a JSON array.
fn run_batch(cli: &Cli, path: &PathBuf) -> Result<i32, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {}", path.display(), e)))?;
    let mut reports = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let config = RunConfig::parse_from_args(line.split_whitespace())
            .map_err(|e| CliError::Usage(format!("line {}: {}", index + 1, e)))?;
        reports.push(run(&config)?);
    }
    let json = serde_json::to_string_pretty(&reports)
        .expect("report serialization cannot fail");
    emit(&cli.output, &format!("{}\n", json))?;
    finish(&reports)
}

fn finish(reports: &[Report]) -> Result<i32, CliError> {
    let mut clean = true;
    for report in reports {
        for failure in report.consistency_failures() {
            eprintln!("consistency failure: {}", failure);
            clean = false;
        }
    }
    Ok(if clean { 0 } else { 3 })
}

fn emit(target: &Option<PathBuf>, rendered: &str) -> Result<(), CliError> {
    match target {
        Some(path) => write_file(path, rendered),
        None => {
            print!("{}", rendered);
            std::io::stdout().flush().map_err(CliError::from)
        }
    }
}

fn write_file(path: &Path, rendered: &str) -> Result<(), CliError> {
    fs::write(path, rendered)
        .map_err(|e| CliError::Io(format!("cannot write {}: {}", path.display(), e)))
}
