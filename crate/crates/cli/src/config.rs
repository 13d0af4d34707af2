//! Argument parsing: flags to a validated run configuration.

use std::path::PathBuf;

use clap::Parser;

use molien_core::lattice::{GroupSpec, ZModVec, DEFAULT_CAP};
use molien_core::oracle::DEFAULT_ORACLE_CAP;

use crate::error::CliError;

/// Raw command line. A single run names a family; batch mode reads one
/// flag line per run from a file and emits a JSON array.
#[derive(Debug, Parser)]
#[command(
    name = "molien",
    about = "Exact Hilbert series and freeness quotients of diagonal invariant rings",
    disable_help_flag = false
)]
pub struct Cli {
    /// Family: a|symmetric, b|hyperoctahedral, d|demihyperoctahedral,
    /// i2|dihedral, g|g-de-e-n, g2|g2-example, custom
    #[arg(long)]
    pub family: Option<String>,

    /// Rank n (families a, b, d, g)
    #[arg(long)]
    pub n: Option<usize>,

    /// Parameter d of G(de, e, n)
    #[arg(long)]
    pub d: Option<u32>,

    /// Parameter e of G(de, e, n)
    #[arg(long)]
    pub e: Option<u32>,

    /// Modulus N (dihedral and custom families)
    #[arg(long)]
    pub modulus: Option<u32>,

    /// Ambient dimension n of a custom subgroup
    #[arg(long)]
    pub dim: Option<usize>,

    /// Generator of a custom subgroup as comma-separated residues; repeatable
    #[arg(long = "gen")]
    pub generators: Vec<String>,

    /// Number of diagonal copies k
    #[arg(long)]
    pub k: Option<usize>,

    /// Output format: text or json
    #[arg(long, default_value = "text")]
    pub format: String,

    /// Cross-check the truncated series against the brute-force oracle
    #[arg(long)]
    pub check_oracle: bool,

    /// Truncation depth for the oracle comparison
    #[arg(long, default_value_t = 5)]
    pub depth: u32,

    /// Cap on enumeration sizes (overrides MOLIEN_CAP and the defaults)
    #[arg(long)]
    pub cap: Option<u64>,

    /// Write the report here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// File with one spec (flag line) per run; results become a JSON array
    #[arg(long, conflicts_with = "family")]
    pub batch: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyChoice {
    Symmetric { n: usize },
    Hyperoctahedral { n: usize },
    Demihyperoctahedral { n: usize },
    Dihedral { modulus: u32 },
    GDeEn { d: u32, e: u32, n: usize },
    G2Example,
    Custom { modulus: u32, dim: usize, generators: Vec<Vec<u32>> },
}

impl FamilyChoice {
    pub fn build(&self, cap: u64) -> molien_core::Result<GroupSpec> {
        match self {
            FamilyChoice::Symmetric { n } => GroupSpec::symmetric(*n, cap),
            FamilyChoice::Hyperoctahedral { n } => GroupSpec::hyperoctahedral(*n, cap),
            FamilyChoice::Demihyperoctahedral { n } => GroupSpec::demihyperoctahedral(*n, cap),
            FamilyChoice::Dihedral { modulus } => GroupSpec::dihedral(*modulus, cap),
            FamilyChoice::GDeEn { d, e, n } => GroupSpec::g_de_e_n(*d, *e, *n, cap),
            FamilyChoice::G2Example => GroupSpec::g2_example(cap),
            FamilyChoice::Custom { modulus, dim, generators } => {
                let generators = generators
                    .iter()
                    .map(|g| ZModVec::new(*modulus, g.clone()))
                    .collect::<molien_core::Result<Vec<_>>>()?;
                GroupSpec::custom(*modulus, *dim, generators, cap)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// A validated single-run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub family: FamilyChoice,
    pub copies: usize,
    pub format: OutputFormat,
    pub check_oracle: bool,
    pub depth: u32,
    pub cap: u64,
    pub oracle_cap: u64,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    /// Parses one flag line (batch entries and tests go through the same
    /// path as the real command line).
    pub fn parse_from_args<I, S>(args: I) -> Result<RunConfig, CliError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let argv = std::iter::once("molien".to_string()).chain(args.into_iter().map(Into::into));
        let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
        RunConfig::from_cli(&cli)
    }

    pub fn from_cli(cli: &Cli) -> Result<RunConfig, CliError> {
        let family = parse_family(cli)?;
        let copies = cli
            .k
            .ok_or_else(|| CliError::Usage("missing required flag --k".into()))?;
        if copies == 0 {
            return Err(CliError::Usage("--k must be at least 1".into()));
        }
        let format = match cli.format.as_str() {
            "text" => OutputFormat::Text,
            "json" => OutputFormat::Json,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown format '{}'; expected text or json",
                    other
                )))
            }
        };
        let env_cap = std::env::var("MOLIEN_CAP")
            .ok()
            .map(|s| {
                s.parse::<u64>().map_err(|_| {
                    CliError::Usage(format!("MOLIEN_CAP='{}' is not a positive integer", s))
                })
            })
            .transpose()?;
        let override_cap = cli.cap.or(env_cap);
        if override_cap == Some(0) {
            return Err(CliError::Usage("enumeration cap must be positive".into()));
        }
        Ok(RunConfig {
            family,
            copies,
            format,
            check_oracle: cli.check_oracle,
            depth: cli.depth,
            cap: override_cap.unwrap_or(DEFAULT_CAP),
            oracle_cap: override_cap.unwrap_or(DEFAULT_ORACLE_CAP),
            output: cli.output.clone(),
        })
    }
}

fn parse_family(cli: &Cli) -> Result<FamilyChoice, CliError> {
    let tag = cli
        .family
        .as_deref()
        .ok_or_else(|| CliError::Usage("missing required flag --family".into()))?;
    let need_n = |what: &str| {
        cli.n
            .ok_or_else(|| CliError::Usage(format!("family {} requires --n", what)))
    };
    match tag.to_ascii_lowercase().as_str() {
        "a" | "s" | "symmetric" => Ok(FamilyChoice::Symmetric { n: need_n("symmetric")? }),
        "b" | "hyperoctahedral" => Ok(FamilyChoice::Hyperoctahedral { n: need_n("hyperoctahedral")? }),
        "d" | "demihyperoctahedral" => {
            Ok(FamilyChoice::Demihyperoctahedral { n: need_n("demihyperoctahedral")? })
        }
        "i2" | "dihedral" => {
            let modulus = cli
                .modulus
                .ok_or_else(|| CliError::Usage("family dihedral requires --modulus".into()))?;
            Ok(FamilyChoice::Dihedral { modulus })
        }
        "g" | "g-de-e-n" => {
            let d = cli
                .d
                .ok_or_else(|| CliError::Usage("family g-de-e-n requires --d".into()))?;
            let e = cli
                .e
                .ok_or_else(|| CliError::Usage("family g-de-e-n requires --e".into()))?;
            Ok(FamilyChoice::GDeEn { d, e, n: need_n("g-de-e-n")? })
        }
        "g2" | "g2-example" => Ok(FamilyChoice::G2Example),
        "custom" => {
            let modulus = cli
                .modulus
                .ok_or_else(|| CliError::Usage("family custom requires --modulus".into()))?;
            let dim = cli
                .dim
                .ok_or_else(|| CliError::Usage("family custom requires --dim".into()))?;
            let generators = cli
                .generators
                .iter()
                .map(|g| parse_generator(g, modulus, dim))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FamilyChoice::Custom { modulus, dim, generators })
        }
        other => Err(CliError::Usage(format!("unknown family '{}'", other))),
    }
}

fn parse_generator(text: &str, modulus: u32, dim: usize) -> Result<Vec<u32>, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != dim {
        return Err(CliError::Usage(format!(
            "generator '{}' has {} entries, expected {}",
            text,
            parts.len(),
            dim
        )));
    }
    parts
        .iter()
        .map(|p| {
            let value: u32 = p.trim().parse().map_err(|_| {
                CliError::Usage(format!("generator entry '{}' is not a residue", p))
            })?;
            if value >= modulus {
                return Err(CliError::Usage(format!(
                    "generator entry {} is out of range for modulus {}",
                    value, modulus
                )));
            }
            Ok(value)
        })
        .collect()
}
