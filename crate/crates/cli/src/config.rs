use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use defcolor::discharge::DEFAULT_T;
use defcolor::io::parse_defects;
use defcolor::DefectVector;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "defcolor",
    version,
    about = "Defective colorings and discharging audits for girth-5 graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a coloring file against a graph and defect vector.
    Check(CheckArgs),
    /// Run the exact solver.
    Solve(SolveArgs),
    /// Run the constructive (1,t)-colorer; writes the coloring and its trace.
    Color(ColorArgs),
    /// Discharging ledger, transfer log and structural audit.
    Audit(AuditArgs),
    /// Generate a planar girth-5 graph or a whole corpus.
    Gen(GenArgs),
    /// Degrees, girth, genus and face-class histogram.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorpusKind {
    Standard,
    Large,
}

#[derive(Debug, Args)]
pub struct Threshold {
    /// High vertices have degree at least t + 2.
    #[arg(long, conflicts_with = "genus_auto")]
    pub t: Option<usize>,
    /// Take t = max(10, 4γ + 3) from the embedding's Euler genus.
    #[arg(long)]
    pub genus_auto: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub coloring: PathBuf,
    /// Defaults to the vector in the coloring file's header.
    #[arg(long)]
    pub defects: Option<String>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "1,10")]
    pub defects: String,
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub threshold: Threshold,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Where to write the reduction trace; defaults to `<output>.trace`.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, required = true)]
    pub input: Vec<PathBuf>,
    #[command(flatten)]
    pub threshold: Threshold,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory receiving one report per input; stdout otherwise.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 50)]
    pub size: usize,
    /// Write a whole corpus into the `--output` directory instead.
    #[arg(long, value_enum, requires = "output")]
    pub corpus: Option<CorpusKind>,
    /// Use the generator mode that keeps 2-vertices apart.
    #[arg(long)]
    pub structured: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long, required = true)]
    pub input: Vec<PathBuf>,
    #[command(flatten)]
    pub threshold: Threshold,
}

/// How the threshold is chosen once the graph is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TChoice {
    Fixed(usize),
    FromGenus,
}

impl TChoice {
    pub fn resolve(self, genus: usize) -> usize {
        match self {
            TChoice::Fixed(t) => t,
            TChoice::FromGenus => defcolor::colorer::capacity(genus),
        }
    }
}

impl Threshold {
    pub fn choice(&self) -> Result<TChoice, CliError> {
        match (self.t, self.genus_auto) {
            (Some(0), _) => Err(CliError::Config("--t must be positive".into())),
            (Some(t), _) => Ok(TChoice::Fixed(t)),
            (None, true) => Ok(TChoice::FromGenus),
            (None, false) => Ok(TChoice::Fixed(DEFAULT_T)),
        }
    }
}

pub fn defects(text: &str) -> Result<DefectVector, CliError> {
    parse_defects(text).map_err(|e| CliError::Config(format!("--defects {text}: {e}")))
}

/// Checked settings for one invocation.
#[derive(Debug)]
pub enum RunConfig {
    Check {
        input: PathBuf,
        coloring: PathBuf,
        defects: Option<DefectVector>,
    },
    Solve {
        input: PathBuf,
        defects: DefectVector,
        budget: u64,
        output: Option<PathBuf>,
    },
    Color {
        input: PathBuf,
        t: TChoice,
        output: Option<PathBuf>,
        trace: Option<PathBuf>,
    },
    Audit {
        inputs: Vec<PathBuf>,
        t: TChoice,
        format: Format,
        output: Option<PathBuf>,
    },
    Gen {
        seed: u64,
        size: usize,
        corpus: Option<CorpusKind>,
        structured: bool,
        output: Option<PathBuf>,
    },
    Stats {
        inputs: Vec<PathBuf>,
        t: TChoice,
    },
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        Ok(match cli.command {
            Command::Check(a) => RunConfig::Check {
                input: a.input,
                coloring: a.coloring,
                defects: a.defects.as_deref().map(defects).transpose()?,
            },
            Command::Solve(a) => {
                if a.budget == 0 {
                    return Err(CliError::Config("--budget must be positive".into()));
                }
                RunConfig::Solve {
                    input: a.input,
                    defects: defects(&a.defects)?,
                    budget: a.budget,
                    output: a.output,
                }
            }
            Command::Color(a) => {
                let trace = a.trace.or_else(|| a.output.as_ref().map(|o| o.with_extension("trace")));
                RunConfig::Color {
                    input: a.input,
                    t: a.threshold.choice()?,
                    output: a.output,
                    trace,
                }
            }
            Command::Audit(a) => {
                if a.input.len() > 1 && a.output.is_none() && a.format == Format::Csv {
                    return Err(CliError::Config(
                        "several csv reports need an --output directory".into(),
                    ));
                }
                RunConfig::Audit {
                    inputs: a.input,
                    t: a.threshold.choice()?,
                    format: a.format,
                    output: a.output,
                }
            }
            Command::Gen(a) => {
                if a.corpus.is_none() && a.size < 5 {
                    return Err(CliError::Config("--size must be at least 5".into()));
                }
                RunConfig::Gen {
                    seed: a.seed,
                    size: a.size,
                    corpus: a.corpus,
                    structured: a.structured,
                    output: a.output,
                }
            }
            Command::Stats(a) => RunConfig::Stats {
                inputs: a.input,
                t: a.threshold.choice()?,
            },
        })
    }
}
