// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Bertrand pairs of null curves.
//!
//! The candidate mate of a pseudo-arc parametrized null curve `c` is
//! `c̄ = c + α·W1 + β·W2`. It is a null curve whose `W̄1`, `W̄2` span the same
//! plane as `W1`, `W2` exactly in two situations:
//!
//! * case I: `α = 0`, `β ≠ 0` and `1 − β·k2 > 0`; then `ℓ0 = √(1 − β·k2)`;
//! * case II: `α ≠ 0` and `α·k1 + β·k2 = 1`; then `ℓ0⁴ = α²(k1² + k2²)`.
//!
//! Here `ℓ0 = dσ̄/ds` is the rate of the mate's pseudo-arc parameter. A mate
//! can be traversed by a constant multiple of `s` only when `ℓ0` is constant.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::curve::{
    pseudo_arc_integrand, pseudo_arc_length, reparametrized_jet, Curve, FrameOffsetCurve,
    PseudoArcCurve,
};
use crate::error::{Error, Result};
use crate::frame::{frame_at, frame_from_jet, CartanFrame, FrameOptions};
use crate::math;
use crate::minkowski::{mink_dot, Vec4};

pub const CONDITION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BertrandCase {
    I,
    II,
    None,
}

impl BertrandCase {
    pub fn label(self) -> &'static str {
        match self {
            BertrandCase::I => "I",
            BertrandCase::II => "II",
            BertrandCase::None => "none",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BertrandOptions {
    pub frame: FrameOptions,
    /// Tolerance on `α·k1 + β·k2 = 1` and on the case I margin.
    pub cond_tol: f64,
    /// Relative tolerance for `ℓ0` to count as constant.
    pub ell0_tol: f64,
}

impl Default for BertrandOptions {
    fn default() -> Self {
        BertrandOptions {
            frame: FrameOptions::default(),
            cond_tol: CONDITION_TOL,
            ell0_tol: CONDITION_TOL,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BertrandCondition {
    pub case: BertrandCase,
    pub alpha: f64,
    pub beta: f64,
    /// `max |α·k1 + β·k2 − 1|` over the grid.
    pub condition_residual: f64,
    /// `min (1 − β·k2)` over the grid.
    pub case_one_margin: f64,
    /// Mean of the case's `ℓ0` formula; NaN for case none.
    pub ell0: f64,
    /// `(max − min) / mean` of the `ℓ0` formula; NaN for case none.
    pub ell0_spread: f64,
    /// The case holds and `ℓ0` is constant within tolerance.
    pub cartan_mate_feasible: bool,
}

/// Frames at every grid point, stopping at the first failure.
pub fn frames_on_grid<C: Curve + ?Sized>(
    curve: &C,
    grid: &[f64],
    opts: &FrameOptions,
) -> Result<Vec<CartanFrame>> {
    grid.iter().map(|&s| frame_at(curve, s, opts)).collect()
}

fn require_grid(grid: &[f64], need: usize) -> Result<()> {
    if grid.len() < need {
        return Err(Error::Precondition(format!(
            "need at least {need} grid points, got {}",
            grid.len()
        )));
    }
    Ok(())
}

/// `ℓ0` from the curvatures for the given case; NaN when the formula does not
/// apply.
pub fn predicted_ell0(case: BertrandCase, alpha: f64, beta: f64, k1: f64, k2: f64) -> f64 {
    match case {
        BertrandCase::I => math::sqrt(1.0 - beta * k2),
        BertrandCase::II => math::sqrt(math::sqrt(alpha * alpha * (k1 * k1 + k2 * k2))),
        BertrandCase::None => f64::NAN,
    }
}

fn classify(
    frames: &[CartanFrame],
    alpha: f64,
    beta: f64,
    opts: &BertrandOptions,
) -> BertrandCondition {
    let condition_residual = frames
        .iter()
        .map(|f| (alpha * f.k1 + beta * f.k2 - 1.0).abs())
        .fold(0.0, f64::max);
    let case_one_margin = frames
        .iter()
        .map(|f| 1.0 - beta * f.k2)
        .fold(f64::INFINITY, f64::min);
    let case = if alpha == 0.0 {
        if beta != 0.0 && case_one_margin > opts.cond_tol {
            BertrandCase::I
        } else {
            BertrandCase::None
        }
    } else if condition_residual < opts.cond_tol {
        BertrandCase::II
    } else {
        BertrandCase::None
    };
    let (ell0, ell0_spread) = if case == BertrandCase::None {
        (f64::NAN, f64::NAN)
    } else {
        let values: Vec<f64> = frames
            .iter()
            .map(|f| predicted_ell0(case, alpha, beta, f.k1, f.k2))
            .collect();
        spread(&values)
    };
    BertrandCondition {
        case,
        alpha,
        beta,
        condition_residual,
        case_one_margin,
        ell0,
        ell0_spread,
        cartan_mate_feasible: case != BertrandCase::None && ell0_spread < opts.ell0_tol,
    }
}

/// Mean and relative spread `(max − min) / |mean|`.
fn spread(values: &[f64]) -> (f64, f64) {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    (mean, (hi - lo) / mean.abs())
}

/// Decides which Bertrand case, if any, `(α, β)` realizes along `grid`.
pub fn check_condition<C: Curve + ?Sized>(
    curve: &C,
    alpha: f64,
    beta: f64,
    grid: &[f64],
    opts: &BertrandOptions,
) -> Result<BertrandCondition> {
    require_grid(grid, 1)?;
    if !(alpha.is_finite() && beta.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "non-finite constants α = {alpha}, β = {beta}"
        )));
    }
    let frames = frames_on_grid(curve, grid, &opts.frame)?;
    Ok(classify(&frames, alpha, beta, opts))
}

/// Least-squares solution of `α·k1(s) + β·k2(s) = 1` over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FitSolution {
    pub alpha: f64,
    pub beta: f64,
    /// `max |α·k1 + β·k2 − 1|`.
    pub residual: f64,
    /// 2 when the curvature pairs span the plane, 1 when they are collinear.
    pub rank: usize,
    /// For rank 1, a unit direction along which `(α, β)` can move without
    /// changing the fit; the reported point is the minimum-norm one.
    pub solution_line: Option<[f64; 2]>,
}

/// Fits `(α, β)` through the normal equations. Constant curvatures give a
/// rank-one system whose solutions form a line.
pub fn fit_constants<C: Curve + ?Sized>(
    curve: &C,
    grid: &[f64],
    opts: &BertrandOptions,
) -> Result<FitSolution> {
    require_grid(grid, 2)?;
    let frames = frames_on_grid(curve, grid, &opts.frame)?;
    fit_from_frames(&frames, opts.cond_tol)
}

fn fit_from_frames(frames: &[CartanFrame], tol: f64) -> Result<FitSolution> {
    let (mut m00, mut m01, mut m11, mut r0, mut r1) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for f in frames {
        m00 += f.k1 * f.k1;
        m01 += f.k1 * f.k2;
        m11 += f.k2 * f.k2;
        r0 += f.k1;
        r1 += f.k2;
    }
    let half_trace = 0.5 * (m00 + m11);
    let root = math::sqrt(0.25 * (m00 - m11) * (m00 - m11) + m01 * m01);
    let (lmax, lmin) = (half_trace + root, half_trace - root);
    if !(lmax > 0.0) {
        return Err(Error::NoSolution { residual: 1.0 });
    }
    let (alpha, beta, rank, solution_line) = if lmin <= 1e-10 * lmax {
        let u = if m01 != 0.0 {
            normalize([lmax - m11, m01])
        } else if m00 >= m11 {
            [1.0, 0.0]
        } else {
            [0.0, 1.0]
        };
        let c = (u[0] * r0 + u[1] * r1) / lmax;
        (c * u[0], c * u[1], 1, Some([-u[1], u[0]]))
    } else {
        let det = m00 * m11 - m01 * m01;
        (
            (m11 * r0 - m01 * r1) / det,
            (m00 * r1 - m01 * r0) / det,
            2,
            None,
        )
    };
    let residual = frames
        .iter()
        .map(|f| (alpha * f.k1 + beta * f.k2 - 1.0).abs())
        .fold(0.0, f64::max);
    if !(residual <= tol) {
        return Err(Error::NoSolution { residual });
    }
    Ok(FitSolution {
        alpha,
        beta,
        residual,
        rank,
        solution_line,
    })
}

fn normalize(v: [f64; 2]) -> [f64; 2] {
    let n = math::sqrt(v[0] * v[0] + v[1] * v[1]);
    [v[0] / n, v[1] / n]
}

/// What goes wrong when one insists on a classical Bertrand mate: with
/// `β = 0` the condition forces `α = 1/k1`, and the term `α·k2·W2` that
/// remains in the mate's fourth derivative cannot vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalObstruction {
    /// `1 / mean(k1)`.
    pub alpha_forced: f64,
    /// `max |α_forced · k2|`.
    pub obstruction: f64,
    /// Whether `k1` is constant within the condition tolerance, i.e. whether
    /// `α_forced` is really a constant.
    pub k1_constant: bool,
    pub k1_spread: f64,
}

pub fn classical_bertrand_obstruction<C: Curve + ?Sized>(
    curve: &C,
    grid: &[f64],
    opts: &BertrandOptions,
) -> Result<ClassicalObstruction> {
    require_grid(grid, 1)?;
    let frames = frames_on_grid(curve, grid, &opts.frame)?;
    if let Some(f) = frames.iter().find(|f| f.k1.abs() < opts.cond_tol) {
        return Err(Error::Precondition(format!("k1 vanishes at s = {}", f.s)));
    }
    let max_k2 = frames.iter().map(|f| f.k2.abs()).fold(0.0, f64::max);
    if max_k2 < opts.frame.degeneracy_tol {
        return Err(Error::DegenerateCurve {
            s: frames[0].s,
            abs_k2: max_k2,
        });
    }
    let k1: Vec<f64> = frames.iter().map(|f| f.k1).collect();
    let (mean, k1_spread) = spread(&k1);
    let alpha_forced = 1.0 / mean;
    let obstruction = frames
        .iter()
        .map(|f| (alpha_forced * f.k2).abs())
        .fold(0.0, f64::max);
    Ok(ClassicalObstruction {
        alpha_forced,
        obstruction,
        k1_constant: k1_spread < opts.cond_tol,
        k1_spread,
    })
}

/// Euclidean size of the part of `W̄1`, `W̄2` that is Minkowski-orthogonal
/// to `span{W1, W2}`. The remainder lies in the Lorentzian plane of `L`, `N`,
/// where the Minkowski norm is not definite, hence the coordinate norm.
pub fn plane_coincidence_residual(base: &CartanFrame, mate: &CartanFrame) -> f64 {
    let off_plane = |w: Vec4| {
        let proj = mink_dot(&w, &base.w1) * base.w1 + mink_dot(&w, &base.w2) * base.w2;
        (w - proj).euclidean_norm()
    };
    off_plane(mate.w1).max(off_plane(mate.w2))
}

/// Mate data at one corresponding pair of points.
#[derive(Debug, Clone, PartialEq)]
pub struct MatePoint {
    pub s: f64,
    pub s_bar: f64,
    pub base: CartanFrame,
    pub mate: CartanFrame,
    /// `dσ̄/ds` measured on the mate.
    pub ell0: f64,
    pub ell0_predicted: f64,
    pub k1_bar_predicted: f64,
    pub abs_k2_bar_predicted: f64,
    /// Angle from `W1` to `W̄1` within the common plane.
    pub rotation_angle: f64,
    pub rotation_angle_predicted: f64,
    pub plane_residual: f64,
    pub l_relation_residual: f64,
    pub n_relation_residual: f64,
    /// Relative error of the curvature norm identity of the case.
    pub curvature_norm_residual: f64,
}

/// Worst-case summary of the mate checks over the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MateReport {
    pub case: BertrandCase,
    pub alpha: f64,
    pub beta: f64,
    /// Mean measured `dσ̄/ds`.
    pub ell0: f64,
    pub ell0_predicted: f64,
    /// `(max − min) / mean` of the measured `dσ̄/ds`.
    pub ell0_constancy_residual: f64,
    pub ell0_error: f64,
    pub predicted_k1_bar: f64,
    pub predicted_abs_k2_bar: f64,
    /// Mean of `k̄1` computed from scratch on the mate.
    pub measured_k1_bar: f64,
    /// Mean of `k̄2` computed on the mate; negative by normalization.
    pub measured_k2_bar: f64,
    pub k1_bar_error: f64,
    pub abs_k2_bar_error: f64,
    pub rotation_angle: f64,
    pub rotation_angle_error: f64,
    pub plane_coincidence_residual: f64,
    pub l_relation_residual: f64,
    pub n_relation_residual: f64,
    pub curvature_norm_residual: f64,
    pub gram_residual: f64,
    pub frenet_residual: Option<f64>,
}

/// A constructed mate: the curve in its own pseudo-arc parameter, anchored
/// so that `s̄ = ℓ0·s`, plus the checks at every grid point.
#[derive(Debug, Clone)]
pub struct Mate<C> {
    pub curve: PseudoArcCurve<FrameOffsetCurve<C>>,
    pub report: MateReport,
    pub points: Vec<MatePoint>,
}

/// Builds the mate `c + α·W1 + β·W2` and checks it at the grid points.
///
/// Fails with [`Error::ConditionFailed`] unless `(α, β)` realizes case I or
/// II with constant `ℓ0`. The mate is evaluated at jet order
/// `opts.frame.order − 5`, which must be at least 4.
pub fn construct_mate<C: Curve>(
    base: C,
    alpha: f64,
    beta: f64,
    grid: &[f64],
    opts: &BertrandOptions,
) -> Result<Mate<C>> {
    let cond = check_condition(&base, alpha, beta, grid, opts)?;
    if cond.case == BertrandCase::None {
        return Err(Error::ConditionFailed(format!(
            "(α, β) = ({alpha}, {beta}) satisfies neither case (condition residual {:e}, case I margin {:e})",
            cond.condition_residual, cond.case_one_margin
        )));
    }
    if !cond.cartan_mate_feasible {
        return Err(Error::ConditionFailed(format!(
            "case {} holds but ℓ0 varies by {:e} relative",
            cond.case.label(),
            cond.ell0_spread
        )));
    }
    let mate_order = opts.frame.order.saturating_sub(5);
    if mate_order < 4 {
        return Err(Error::OrderTooLow {
            have: opts.frame.order,
            need: 9,
        });
    }
    let mate_opts = FrameOptions {
        order: mate_order,
        ..opts.frame
    };

    let lo = base.domain().lo;
    let offset = FrameOffsetCurve::new(base, alpha, beta, grid.len().max(2))?;
    let curve = PseudoArcCurve::new(offset, lo, cond.ell0 * lo)?;

    let mut points = Vec::with_capacity(grid.len());
    // Arc length accumulates between consecutive grid points.
    let mut prev: Option<(f64, f64)> = None;
    for &s in grid {
        let s_bar = match prev {
            Some((t, sigma)) => sigma + pseudo_arc_length(curve.inner(), t, s)?,
            None => curve.sigma_of(s)?,
        };
        prev = Some((s, s_bar));
        let base_frame = frame_at(curve.inner().base(), s, &opts.frame)?;
        let mate_jet = reparametrized_jet(curve.inner(), s, s_bar, mate_order)?;
        let mate_frame = frame_from_jet(&mate_jet, &mate_opts)?;
        let ell0 = pseudo_arc_integrand(curve.inner(), s)?;
        points.push(mate_point(
            cond.case, alpha, beta, base_frame, mate_frame, ell0,
        ));
    }
    let report = summarize(&cond, &points);
    Ok(Mate {
        curve,
        report,
        points,
    })
}

fn mate_point(
    case: BertrandCase,
    alpha: f64,
    beta: f64,
    base: CartanFrame,
    mate: CartanFrame,
    ell0: f64,
) -> MatePoint {
    let (k1, k2) = (base.k1, base.k2);
    let l0 = predicted_ell0(case, alpha, beta, k1, k2);
    let l0sq = l0 * l0;
    let (l_rel, n_rel, angle_pred, norm_res) = match case {
        BertrandCase::I => {
            let l_rel = (mate.l - l0 * base.l).max_abs();
            let n_rel = (mate.n - (1.0 / l0) * base.n).max_abs();
            let lhs = (mate.k1 * mate.k1 + mate.k2 * mate.k2) * l0sq * l0sq;
            let rhs = k1 * k1 + k2 * k2;
            (l_rel, n_rel, 0.0, (lhs - rhs).abs() / rhs)
        }
        _ => {
            let l_rel = (mate.l + (alpha / l0) * base.n).max_abs();
            let n_rel = (mate.n + (l0 / alpha) * base.l).max_abs();
            let lhs = (mate.k1 * mate.k1 + mate.k2 * mate.k2) * alpha * alpha;
            let angle = math::atan2(-alpha * k2 / l0sq, -alpha * k1 / l0sq);
            (l_rel, n_rel, angle, (lhs - 1.0).abs())
        }
    };
    MatePoint {
        s: base.s,
        s_bar: mate.s,
        ell0,
        ell0_predicted: l0,
        k1_bar_predicted: k1 / l0sq,
        abs_k2_bar_predicted: k2.abs() / l0sq,
        rotation_angle: math::atan2(mink_dot(&mate.w1, &base.w2), mink_dot(&mate.w1, &base.w1)),
        rotation_angle_predicted: angle_pred,
        plane_residual: plane_coincidence_residual(&base, &mate),
        l_relation_residual: l_rel,
        n_relation_residual: n_rel,
        curvature_norm_residual: norm_res,
        base,
        mate,
    }
}

fn summarize(cond: &BertrandCondition, points: &[MatePoint]) -> MateReport {
    let max = |f: &dyn Fn(&MatePoint) -> f64| points.iter().map(f).fold(0.0, f64::max);
    let mean =
        |f: &dyn Fn(&MatePoint) -> f64| points.iter().map(f).sum::<f64>() / points.len() as f64;
    let ell0: Vec<f64> = points.iter().map(|p| p.ell0).collect();
    let (ell0_mean, ell0_constancy_residual) = spread(&ell0);
    let frenet_residual = points
        .iter()
        .map(|p| p.mate.frenet_residual)
        .try_fold(0.0, |m: f64, r| r.map(|r| m.max(r)));
    MateReport {
        case: cond.case,
        alpha: cond.alpha,
        beta: cond.beta,
        ell0: ell0_mean,
        ell0_predicted: cond.ell0,
        ell0_constancy_residual,
        ell0_error: max(&|p| (p.ell0 - p.ell0_predicted).abs() / p.ell0_predicted),
        predicted_k1_bar: mean(&|p| p.k1_bar_predicted),
        predicted_abs_k2_bar: mean(&|p| p.abs_k2_bar_predicted),
        measured_k1_bar: mean(&|p| p.mate.k1),
        measured_k2_bar: mean(&|p| p.mate.k2),
        k1_bar_error: max(&|p| (p.mate.k1 - p.k1_bar_predicted).abs()),
        abs_k2_bar_error: max(&|p| (p.mate.k2.abs() - p.abs_k2_bar_predicted).abs()),
        rotation_angle: mean(&|p| p.rotation_angle),
        rotation_angle_error: max(&|p| {
            angle_distance(p.rotation_angle, p.rotation_angle_predicted)
        }),
        plane_coincidence_residual: max(&|p| p.plane_residual),
        l_relation_residual: max(&|p| p.l_relation_residual),
        n_relation_residual: max(&|p| p.n_relation_residual),
        curvature_norm_residual: max(&|p| p.curvature_norm_residual),
        gram_residual: max(&|p| p.mate.gram_residual),
        frenet_residual,
    }
}

fn angle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % (2.0 * core::f64::consts::PI);
    d.min(2.0 * core::f64::consts::PI - d)
}

impl core::fmt::Display for BertrandCase {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

impl BertrandCondition {
    pub fn summary(&self) -> alloc::string::String {
        if self.case == BertrandCase::None {
            "none".to_string()
        } else {
            format!("case {} (ℓ0 = {})", self.case, self.ell0)
        }
    }
}
