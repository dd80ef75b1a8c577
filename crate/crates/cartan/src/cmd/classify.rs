// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use cartan_core::bertrand::{
    check_condition, classical_bertrand_obstruction, fit_constants, BertrandCondition, FitSolution,
};
use cartan_core::Error;

use crate::cli::{ConstantArgs, RunConfig};
use crate::error::{CliError, CliResult, EXIT_FAILED, EXIT_OK};
use crate::output::{Document, Record, Value};

/// Reports the Bertrand case of the given or fitted constants, and always
/// the classical obstruction.
pub fn run(path: &Path, constants: &ConstantArgs, cfg: &RunConfig) -> CliResult<u8> {
    let curve = super::load_curve(path, cfg)?;
    let grid = cfg.grid(&curve)?;
    let opts = cfg.bertrand_options();
    let mut doc = Document::default();
    let mut code = EXIT_OK;

    if let Some((alpha, beta)) = constants.given() {
        doc = doc.record(condition_record(&check_condition(
            &curve, alpha, beta, &grid, &opts,
        )?));
    } else if constants.fit {
        match fit_constants(&curve, &grid, &opts) {
            Ok(fit) => {
                doc = doc.record(fit_record(&fit));
                doc = doc.record(condition_record(&check_condition(
                    &curve, fit.alpha, fit.beta, &grid, &opts,
                )?));
            }
            Err(Error::NoSolution { residual }) => {
                eprintln!(
                    "cartan: no constants fit alpha*k1 + beta*k2 = 1 (residual {residual:e})"
                );
                code = EXIT_FAILED;
                doc = doc.record(
                    Record::new("fit")
                        .field("status", "no_solution")
                        .field("residual", residual),
                );
            }
            Err(e) => return Err(e.into()),
        }
    }

    let flags_given = constants.given().is_some() || constants.fit;
    match classical_bertrand_obstruction(&curve, &grid, &opts) {
        Ok(o) => {
            doc = doc.record(
                Record::new("obstruction")
                    .field("alpha_forced", o.alpha_forced)
                    .field("obstruction", o.obstruction)
                    .field("k1_constant", o.k1_constant)
                    .field("k1_spread", o.k1_spread)
                    .field("classical_mate", "none"),
            );
        }
        Err(e) if flags_given => {
            eprintln!("cartan: obstruction not computed: {e}");
            doc = doc.record(
                Record::new("obstruction")
                    .field("status", "error")
                    .field("detail", e.to_string()),
            );
        }
        Err(e) => return Err(CliError::Core(e)),
    }
    super::write(&doc, cfg)?;
    Ok(code)
}

pub(crate) fn condition_record(c: &BertrandCondition) -> Record {
    Record::new("condition")
        .field("alpha", c.alpha)
        .field("beta", c.beta)
        .field("case", c.case.label())
        .field("condition_residual", c.condition_residual)
        .field("case_one_margin", c.case_one_margin)
        .field("ell0", c.ell0)
        .field("ell0_spread", c.ell0_spread)
        .field("cartan_mate_feasible", c.cartan_mate_feasible)
}

fn fit_record(fit: &FitSolution) -> Record {
    let (description, direction) = match fit.solution_line {
        Some(u) => (
            format!(
                "(alpha, beta) = ({:.16e}, {:.16e}) + t*({:.16e}, {:.16e}) for every real t",
                fit.alpha, fit.beta, u[0], u[1]
            ),
            [Value::Num(u[0]), Value::Num(u[1])],
        ),
        None => ("unique".to_string(), [Value::Missing, Value::Missing]),
    };
    let [d0, d1] = direction;
    Record::new("fit")
        .field("status", "ok")
        .field("alpha", fit.alpha)
        .field("beta", fit.beta)
        .field("residual", fit.residual)
        .field("rank", fit.rank)
        .field("line_direction_alpha", d0)
        .field("line_direction_beta", d1)
        .field("solution_line", description)
}
