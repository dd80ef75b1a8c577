// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::PathBuf;

use cartan_core::corpus::{default_params, example_curve};

use crate::cli::RunConfig;
use crate::error::{CliError, CliResult, EXIT_OK};
use crate::specfile::save_spec;

/// Writes one spec file per default example into `--output` (default
/// `corpus`) and lists the written paths.
pub fn run(cfg: &RunConfig) -> CliResult<u8> {
    let dir = cfg
        .output
        .clone()
        .unwrap_or_else(|| PathBuf::from("corpus"));
    fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
    for p in default_params() {
        let spec = example_curve(&p)?;
        let path = dir.join(format!("{}.json", spec.name));
        save_spec(&spec, &path)?;
        println!("{}", path.display());
    }
    Ok(EXIT_OK)
}
