// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use cartan_core::bertrand::{classical_bertrand_obstruction, construct_mate};
use cartan_core::corpus::{
    closed_form_frame, default_params, example_curve, ExampleParams, COMPONENT_SOURCES,
};
use cartan_core::curve::{pseudo_arc_length, Curve, Rescaled};
use cartan_core::expr::parse;
use cartan_core::frame::frame_at;

use crate::cli::RunConfig;
use crate::error::{CliResult, EXIT_FAILED, EXIT_OK};
use crate::output::{Document, Table};

const GRID: usize = 20;

/// Built-in checks against the closed forms of the example family.
pub fn run(cfg: &RunConfig) -> CliResult<u8> {
    let opts = cfg.bertrand_options();
    let mut checks: Vec<(&str, f64, f64, f64)> = Vec::new();

    let mut curvature_gap = 0.0f64;
    let mut frame_gap = 0.0f64;
    for p in default_params() {
        let curve = example_curve(&p)?;
        for s in curve.domain().grid(GRID) {
            let f = frame_at(&curve, s, &opts.frame)?;
            let c = closed_form_frame(&p, s);
            curvature_gap = curvature_gap
                .max((f.k1 - p.k1()).abs())
                .max((f.k2 - p.k2()).abs());
            for (x, y) in [(f.l, c.l), (f.n, c.n), (f.w1, c.w1), (f.w2, c.w2)] {
                frame_gap = frame_gap.max((x - y).max_abs());
            }
        }
    }
    checks.push(("curvatures_match_closed_form", curvature_gap, 0.0, 1e-8));
    checks.push(("frames_match_closed_form", frame_gap, 0.0, 1e-9));

    let p = ExampleParams::new(1.0, 2.0)?;
    let curve = example_curve(&p)?;
    let grid = curve.domain().grid(GRID);
    let o = classical_bertrand_obstruction(&curve, &grid, &opts)?;
    checks.push((
        "classical_obstruction_a1_b2",
        o.obstruction,
        4.0 / 3.0,
        1e-9,
    ));

    let (alpha, beta) = p.case_one_constants();
    let one = construct_mate(&curve, alpha, beta, &grid, &opts)?;
    checks.push(("case_one_ell0", one.report.ell0, 2f64.sqrt(), 1e-8));
    checks.push(("case_one_k1_bar", one.report.measured_k1_bar, 0.75, 1e-6));

    let (alpha, beta) = p.case_two_constants();
    let two = construct_mate(&curve, alpha, beta, &grid, &opts)?;
    checks.push((
        "case_two_ell0_squared",
        two.report.ell0.powi(2),
        5.0 / 6.0,
        1e-8,
    ));
    checks.push(("case_two_k1_bar", two.report.measured_k1_bar, 1.8, 1e-6));

    let scaled = Rescaled::new(&curve, 2.0)?;
    let d = scaled.domain();
    checks.push((
        "scaled_arc_length",
        pseudo_arc_length(&scaled, d.lo, d.hi)?,
        2.0 * d.len(),
        1e-9,
    ));

    let mut mismatches = 0usize;
    for src in COMPONENT_SOURCES {
        let e = parse(src)?;
        if parse(&e.to_string())? != e {
            mismatches += 1;
        }
    }
    checks.push(("parser_round_trip_mismatches", mismatches as f64, 0.0, 0.5));

    let mut table = Table::new(
        "selftest",
        &["check", "value", "expected", "tolerance", "status"],
    );
    let mut code = EXIT_OK;
    for (name, value, expected, tol) in checks {
        let pass = (value - expected).abs() < tol;
        if !pass {
            code = EXIT_FAILED;
        }
        table.push(vec![
            name.into(),
            value.into(),
            expected.into(),
            tol.into(),
            if pass { "PASS" } else { "FAIL" }.into(),
        ]);
    }
    super::write(&Document::default().table(table), cfg)?;
    Ok(code)
}
