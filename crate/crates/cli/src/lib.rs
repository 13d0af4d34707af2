//! Library backing the `molien` binary: flag parsing, the run pipeline, and
//! report rendering. Everything the binary does is callable from tests.

pub mod config;
pub mod error;
pub mod report;

pub use config::{Cli, FamilyChoice, OutputFormat, RunConfig};
pub use error::CliError;
pub use report::{OracleReport, Report};

use molien_core::molien::{module_quotient, scaled_limit};
use molien_core::oracle;

/// Builds the group, runs the quotient analysis and the scaled limit, and
/// optionally cross-checks the truncated series against the oracle.
pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    let spec = config.family.build(config.cap)?;
    let quotient = module_quotient(&spec, config.copies, config.cap)?;
    let limit = scaled_limit(&spec, config.copies, config.cap)?;
    let oracle_report = if config.check_oracle {
        let engine = quotient.hilbert().truncate(config.depth);
        let counted = oracle::series(&spec, config.copies, config.depth, config.oracle_cap)?;
        OracleReport {
            checked: true,
            depth: config.depth,
            agrees: Some(engine == counted),
        }
    } else {
        OracleReport { checked: false, depth: config.depth, agrees: None }
    };
    Ok(Report::build(&quotient, &limit, oracle_report))
}
