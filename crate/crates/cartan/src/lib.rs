// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line driver for `cartan-core`: curve spec files, frame tables,
//! Bertrand classification, mate construction and batch verification.

// `!(x < tol)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod cmd;
pub mod error;
pub mod output;
pub mod specfile;

use std::ffi::OsString;

use clap::Parser;

pub use cli::{Cli, Command, RunConfig};
pub use error::{CliError, CliResult, EXIT_DEGENERATE, EXIT_FAILED, EXIT_INPUT, EXIT_OK};

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code. Usage errors exit with 1, `--help` and `--version`
/// with 0.
pub fn run_from_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_FAILED } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

pub fn run(cli: &Cli) -> u8 {
    let result = RunConfig::from_args(&cli.common).and_then(|cfg| match cfg.jobs {
        None => cmd::dispatch(&cli.command, &cfg),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Config(format!("cannot start {n} worker threads: {e}")))?
            .install(|| cmd::dispatch(&cli.command, &cfg)),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("cartan: {e}");
            e.exit_code()
        }
    }
}
