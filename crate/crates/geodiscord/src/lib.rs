//! Command-line companion to `geodiscord-core`: everything that touches the
//! filesystem or the terminal lives here.
//!
//! * [`matfile`] — the plain-text density-matrix file format.
//! * [`config`] — flat `key = value` sweep configurations.
//! * [`csvfmt`] — deterministic CSV emission and parsing (`%.12e` floats).
//! * [`svg`] — minimal hand-rolled SVG line charts.
//! * [`figures`] — frozen presets reproducing the published figures.
//! * [`verify`] — randomized cross-module property suites.
//! * [`parallel`] — bounded fork-join map for sweep evaluation.
//! * [`commands`] — the subcommand implementations behind the binary.

pub mod commands;
pub mod config;
pub mod csvfmt;
pub mod figures;
pub mod matfile;
pub mod parallel;
pub mod svg;
pub mod verify;

/// Failures surfaced to the terminal, split by exit code: usage and
/// configuration problems exit 1, violated numerical invariants exit 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numeric(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Numeric(m) => m,
        }
    }
}

impl core::fmt::Display for CliError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.message())
    }
}

impl std::error::Error for CliError {}
