// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use cartan_core::frame::frame_at;
use rayon::prelude::*;

use crate::cli::RunConfig;
use crate::error::{core_exit_code, CliResult, EXIT_FAILED, EXIT_OK};
use crate::output::{Document, Table, Value};

pub const COLUMNS: [&str; 24] = [
    "s",
    "k1",
    "k2",
    "L0",
    "L1",
    "L2",
    "L3",
    "N0",
    "N1",
    "N2",
    "N3",
    "W1_0",
    "W1_1",
    "W1_2",
    "W1_3",
    "W2_0",
    "W2_1",
    "W2_2",
    "W2_3",
    "gram_residual",
    "frenet_residual",
    "orientation_det",
    "status",
    "detail",
];

/// Writes the curvature table. Rows that fail keep their `s` and carry the
/// error; the exit code is that of the worst row.
pub fn run(path: &Path, cfg: &RunConfig) -> CliResult<u8> {
    let curve = super::load_curve(path, cfg)?;
    let grid = cfg.grid(&curve)?;
    let opts = cfg.frame_options();
    let frames: Vec<_> = grid
        .par_iter()
        .map(|&s| (s, frame_at(&curve, s, &opts)))
        .collect();

    let mut table = Table::new("frame", &COLUMNS);
    let mut code = EXIT_OK;
    let mut failed = 0usize;
    for (s, frame) in frames {
        let mut row: Vec<Value> = vec![s.into()];
        match frame {
            Ok(f) => {
                row.extend([f.k1, f.k2].map(Value::from));
                for v in [f.l, f.n, f.w1, f.w2] {
                    row.extend(v.0.map(Value::from));
                }
                row.extend([
                    f.gram_residual.into(),
                    f.frenet_residual.into(),
                    f.orientation_det.into(),
                ]);
                let mut bad = Vec::new();
                if !(f.gram_residual < cfg.tol.gram) {
                    bad.push("gram");
                }
                if !f.frenet_residual.is_some_and(|r| r < cfg.tol.frenet) {
                    bad.push("frenet");
                }
                if bad.is_empty() {
                    row.extend(["ok".into(), Value::Missing]);
                } else {
                    code = code.max(EXIT_FAILED);
                    failed += 1;
                    row.extend(["fail".into(), bad.join(";").into()]);
                }
            }
            Err(e) => {
                code = code.max(core_exit_code(&e));
                failed += 1;
                row.extend(std::iter::repeat_n(Value::Missing, COLUMNS.len() - 3));
                row.extend(["error".into(), e.to_string().into()]);
            }
        }
        table.push(row);
    }
    super::write(&Document::default().table(table), cfg)?;
    if failed > 0 {
        eprintln!("cartan: {failed} of {} rows failed", grid.len());
    }
    Ok(code)
}
