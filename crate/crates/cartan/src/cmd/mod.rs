// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

pub mod classify;
pub mod corpus;
pub mod frame;
pub mod mate;
pub mod selftest;
pub mod verify;

use std::path::Path;

use cartan_core::bertrand::fit_constants;
use cartan_core::curve::{prepare, PreparedCurve};

use crate::cli::{Command, ConstantArgs, RunConfig};
use crate::error::{CliError, CliResult};
use crate::output::{emit, Document};
use crate::specfile::load_spec;

pub fn dispatch(command: &Command, cfg: &RunConfig) -> CliResult<u8> {
    match command {
        Command::Frame { spec } => frame::run(spec, cfg),
        Command::Classify { spec, constants } => classify::run(spec, constants, cfg),
        Command::Mate {
            spec,
            constants,
            plot,
        } => mate::run(spec, constants, plot.as_deref(), cfg),
        Command::Verify { dir } => verify::run(dir, cfg),
        Command::Corpus => corpus::run(cfg),
        Command::Selftest => selftest::run(cfg),
    }
}

/// Loads a spec file and validates or reparametrizes it.
pub(crate) fn load_curve(path: &Path, cfg: &RunConfig) -> CliResult<PreparedCurve> {
    let spec = load_spec(path)?;
    Ok(prepare(spec, cfg.samples, cfg.tol.arc)?)
}

pub(crate) fn write(doc: &Document, cfg: &RunConfig) -> CliResult<()> {
    emit(&doc.render(cfg.format), cfg.output.as_deref())
}

/// `(α, β)` from the flags, or from the least-squares fit with `--fit`.
pub(crate) fn resolve_constants(
    constants: &ConstantArgs,
    curve: &PreparedCurve,
    grid: &[f64],
    cfg: &RunConfig,
) -> CliResult<(f64, f64)> {
    if let Some(ab) = constants.given() {
        return Ok(ab);
    }
    if constants.fit {
        let fit = fit_constants(curve, grid, &cfg.bertrand_options())?;
        return Ok((fit.alpha, fit.beta));
    }
    Err(CliError::Config("give --alpha and --beta, or --fit".into()))
}
