use std::path::PathBuf;
use std::process::ExitCode;

use thiserror::Error;

use defcolor::colorer::ColorerError;
use defcolor::discharge::AuditError;
use defcolor::io::FormatError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Colorer(#[from] ColorerError),
    #[error(transparent)]
    Audit(#[from] AuditError),
    #[error("no coloring with defects {0} exists")]
    Infeasible(String),
    #[error("search budget of {0} nodes exhausted")]
    Budget(u64),
    #[error("coloring is not valid: {0}")]
    InvalidColoring(String),
}

impl CliError {
    /// Stable machine-readable category printed as `error[<category>]`.
    pub fn category(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config",
            CliError::Format {
                source: FormatError::Parse { .. },
                ..
            } => "parse",
            CliError::Format {
                source: FormatError::Io(_),
                ..
            }
            | CliError::Io { .. } => "io",
            CliError::Format { .. } => "graph",
            CliError::Colorer(ColorerError::GirthTooSmall { .. }) | CliError::Audit(_) => "graph",
            CliError::Colorer(_) => "colorer",
            CliError::Infeasible(_) => "infeasible",
            CliError::Budget(_) => "budget",
            CliError::InvalidColoring(_) => "invalid-coloring",
        }
    }

    /// 2 is left to clap for usage errors.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self.category() {
            "config" => 2,
            "parse" => 3,
            "graph" => 4,
            "io" => 5,
            "infeasible" => 6,
            "budget" => 7,
            "invalid-coloring" => 8,
            _ => 1,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn categories_map_to_distinct_codes() {
        let parse = CliError::Format {
            path: "g".into(),
            source: FormatError::Parse {
                line: 1,
                column: 1,
                message: "x".into(),
            },
        };
        let girth = CliError::Format {
            path: "g".into(),
            source: FormatError::GirthBelowFive { girth: 4 },
        };
        assert_eq!(parse.category(), "parse");
        assert_eq!(girth.category(), "graph");
        assert_eq!(CliError::Budget(1).category(), "budget");
        assert_ne!(parse.exit_code(), girth.exit_code());
    }
}
