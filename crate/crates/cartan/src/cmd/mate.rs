// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use cartan_core::bertrand::{construct_mate, MateReport};
use cartan_core::curve::Curve;

use crate::cli::{ConstantArgs, RunConfig};
use crate::error::{CliResult, EXIT_FAILED, EXIT_OK};
use crate::output::{emit, Document, Format, Record, Table};

/// Builds the mate, writes its report and point table, and optionally the
/// sampled mate. Exits 1 when a check exceeds its tolerance.
pub fn run(
    path: &Path,
    constants: &ConstantArgs,
    plot: Option<&Path>,
    cfg: &RunConfig,
) -> CliResult<u8> {
    let curve = super::load_curve(path, cfg)?;
    let grid = cfg.grid(&curve)?;
    let (alpha, beta) = super::resolve_constants(constants, &curve, &grid, cfg)?;
    let mate = construct_mate(&curve, alpha, beta, &grid, &cfg.bertrand_options())?;
    let r = &mate.report;

    let failures = failed_checks(r, cfg);
    let status = if failures.is_empty() {
        "ok".to_string()
    } else {
        failures.join(";")
    };
    let mut table = Table::new(
        "verification",
        &[
            "s",
            "s_bar",
            "ell0",
            "k1_bar_pred",
            "k1_bar_meas",
            "abs_k2_bar_pred",
            "k2_bar_meas",
            "rotation_angle",
            "plane_residual",
            "L_rel_residual",
            "N_rel_residual",
        ],
    );
    for p in &mate.points {
        table.push(vec![
            p.s.into(),
            p.s_bar.into(),
            p.ell0.into(),
            p.k1_bar_predicted.into(),
            p.mate.k1.into(),
            p.abs_k2_bar_predicted.into(),
            p.mate.k2.into(),
            p.rotation_angle.into(),
            p.plane_residual.into(),
            p.l_relation_residual.into(),
            p.n_relation_residual.into(),
        ]);
    }
    let doc = Document::default()
        .record(report_record(r, &status))
        .table(table);
    super::write(&doc, cfg)?;

    if let Some(plot) = plot {
        let mut samples = Table::new("plot", &["s_bar", "x0", "x1", "x2", "x3"]);
        for p in &mate.points {
            let x = mate.curve.inner().jet(p.s, 0)?.position();
            samples.push([p.s_bar, x[0], x[1], x[2], x[3]].map(Into::into).to_vec());
        }
        emit(
            &Document::default().table(samples).render(Format::Csv),
            Some(plot),
        )?;
    }

    if failures.is_empty() {
        Ok(EXIT_OK)
    } else {
        eprintln!("cartan: mate checks failed: {status}");
        Ok(EXIT_FAILED)
    }
}

/// Names of the report checks above tolerance.
pub(crate) fn failed_checks(r: &MateReport, cfg: &RunConfig) -> Vec<&'static str> {
    let mut bad = Vec::new();
    for (name, v) in prediction_residuals(r) {
        if !(v < cfg.tol.mate) {
            bad.push(name);
        }
    }
    if !(r.gram_residual < cfg.tol.gram) {
        bad.push("gram");
    }
    if !r.frenet_residual.is_some_and(|v| v < cfg.tol.frenet) {
        bad.push("frenet");
    }
    bad
}

/// Residuals of the predicted mate relations, by name.
pub(crate) fn prediction_residuals(r: &MateReport) -> [(&'static str, f64); 9] {
    [
        ("ell0", r.ell0_error),
        ("ell0_constancy", r.ell0_constancy_residual),
        ("k1_bar", r.k1_bar_error),
        ("abs_k2_bar", r.abs_k2_bar_error),
        ("rotation_angle", r.rotation_angle_error),
        ("plane", r.plane_coincidence_residual),
        ("L_relation", r.l_relation_residual),
        ("N_relation", r.n_relation_residual),
        ("curvature_norm", r.curvature_norm_residual),
    ]
}

fn report_record(r: &MateReport, status: &str) -> Record {
    Record::new("mate")
        .field("case", r.case.label())
        .field("alpha", r.alpha)
        .field("beta", r.beta)
        .field("ell0", r.ell0)
        .field("ell0_predicted", r.ell0_predicted)
        .field("ell0_error", r.ell0_error)
        .field("ell0_constancy_residual", r.ell0_constancy_residual)
        .field("k1_bar_predicted", r.predicted_k1_bar)
        .field("k1_bar_measured", r.measured_k1_bar)
        .field("k1_bar_error", r.k1_bar_error)
        .field("abs_k2_bar_predicted", r.predicted_abs_k2_bar)
        .field("k2_bar_measured", r.measured_k2_bar)
        .field("abs_k2_bar_error", r.abs_k2_bar_error)
        .field("rotation_angle", r.rotation_angle)
        .field("rotation_angle_error", r.rotation_angle_error)
        .field("plane_coincidence_residual", r.plane_coincidence_residual)
        .field("L_relation_residual", r.l_relation_residual)
        .field("N_relation_residual", r.n_relation_residual)
        .field("curvature_norm_residual", r.curvature_norm_residual)
        .field("gram_residual", r.gram_residual)
        .field("frenet_residual", r.frenet_residual)
        .field("status", status)
}
