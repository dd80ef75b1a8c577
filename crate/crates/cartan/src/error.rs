// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_DEGENERATE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// A spec file that cannot be read as a curve.
    #[error("{}: {message}", path.display())]
    SpecFile { path: PathBuf, message: String },
    #[error(transparent)]
    Core(#[from] cartan_core::Error),
    /// Bad flag values or combinations.
    #[error("{0}")]
    Config(String),
    /// Checks ran but did not pass.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::SpecFile { .. } => EXIT_INPUT,
            CliError::Core(e) => core_exit_code(e),
            CliError::Config(_) | CliError::Failed(_) => EXIT_FAILED,
        }
    }
}

/// 3 for input errors, 2 for degenerate curves, 1 for everything else.
pub fn core_exit_code(e: &cartan_core::Error) -> u8 {
    use cartan_core::Error::*;
    match e {
        Lex { .. } | Parse { .. } | UnboundVariable(_) => EXIT_INPUT,
        DegenerateCurve { .. } => EXIT_DEGENERATE,
        _ => EXIT_FAILED,
    }
}

pub type CliResult<T> = Result<T, CliError>;
