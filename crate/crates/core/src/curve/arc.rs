// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Pseudo-arc residuals, lengths and their inverse.
//!
//! For a null curve the pseudo-arc parameter is `σ(t) = ∫ ⟨c_tt, c_tt⟩^{1/4} dt`.
//! It makes `⟨c_σσ, c_σσ⟩ = 1` because `⟨c_t, c_t⟩ = 0` kills the cross terms
//! of the chain rule.

use alloc::format;

use super::{Curve, QUADRATURE_TOL};
use crate::error::{Error, Result};
use crate::math;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoArcResidual {
    /// `|⟨c′, c′⟩|`
    pub null_residual: f64,
    /// `|⟨c″, c″⟩ − 1|`
    pub unit_residual: f64,
}

impl PseudoArcResidual {
    pub fn within(&self, tol: f64) -> bool {
        self.null_residual < tol && self.unit_residual < tol
    }
}

pub fn pseudo_arc_residual<C: Curve + ?Sized>(curve: &C, s: f64) -> Result<PseudoArcResidual> {
    let cj = curve.jet(s, 2)?;
    let v = cj.derivative(1);
    let a = cj.derivative(2);
    Ok(PseudoArcResidual {
        null_residual: v.dot(&v).abs(),
        unit_residual: (a.dot(&a) - 1.0).abs(),
    })
}

/// `⟨c_tt, c_tt⟩^{1/4}` at `t`; fails where the acceleration is not spacelike.
pub fn pseudo_arc_integrand<C: Curve + ?Sized>(curve: &C, t: f64) -> Result<f64> {
    let a = curve.jet(t, 2)?.derivative(2);
    let q = a.dot(&a);
    if q > 0.0 {
        Ok(math::sqrt(math::sqrt(q)))
    } else {
        Err(Error::Quadrature(format!(
            "pseudo-arc integrand <c'',c''> = {q:e} is not positive at t = {t}"
        )))
    }
}

/// Pseudo-arc length from `t0` to `t1` to absolute tolerance 1e-10.
pub fn pseudo_arc_length<C: Curve + ?Sized>(curve: &C, t0: f64, t1: f64) -> Result<f64> {
    pseudo_arc_length_tol(curve, t0, t1, QUADRATURE_TOL)
}

const INITIAL_PANELS: usize = 4;
const MAX_DEPTH: u32 = 40;

/// Adaptive Simpson quadrature of the pseudo-arc integrand. Returns a
/// negative length when `t1 < t0`.
pub fn pseudo_arc_length_tol<C: Curve + ?Sized>(
    curve: &C,
    t0: f64,
    t1: f64,
    tol: f64,
) -> Result<f64> {
    if t0 == t1 {
        pseudo_arc_integrand(curve, t0)?;
        return Ok(0.0);
    }
    if t1 < t0 {
        return pseudo_arc_length_tol(curve, t1, t0, tol).map(|l| -l);
    }
    let f = |t: f64| pseudo_arc_integrand(curve, t);
    let width = (t1 - t0) / INITIAL_PANELS as f64;
    let mut total = 0.0;
    let mut fa = f(t0)?;
    for i in 0..INITIAL_PANELS {
        let a = t0 + width * i as f64;
        let b = if i + 1 == INITIAL_PANELS {
            t1
        } else {
            a + width
        };
        let m = 0.5 * (a + b);
        let (fm, fb) = (f(m)?, f(b)?);
        let whole = simpson(a, b, fa, fm, fb);
        total += adapt(
            &f,
            a,
            b,
            fa,
            fm,
            fb,
            whole,
            tol / INITIAL_PANELS as f64,
            MAX_DEPTH,
        )?;
        fa = fb;
    }
    Ok(total)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt(
    f: &impl Fn(f64) -> Result<f64>,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm)?, f(rm)?);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::Quadrature(format!(
            "adaptive Simpson did not converge on [{a}, {b}]"
        )));
    }
    Ok(adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?
        + adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?)
}

const INVERT_QUADRATURE_TOL: f64 = 1e-13;
const MAX_NEWTON_STEPS: usize = 200;

/// Parameter `t ≥ t0` whose pseudo-arc length from `t0` equals `target`.
///
/// Newton iteration on the monotone length function, seeded at
/// `t0 + target`, kept inside a shrinking bracket and falling back to
/// bisection whenever a step leaves it.
pub fn invert_arc<C: Curve + ?Sized>(curve: &C, t0: f64, target: f64) -> Result<f64> {
    if !(target >= 0.0) {
        return Err(Error::Precondition(format!(
            "target pseudo-arc length must be non-negative, got {target}"
        )));
    }
    let domain = curve.domain();
    domain.check(t0)?;
    if target == 0.0 {
        return Ok(t0);
    }
    let end = domain.hi;
    let available = pseudo_arc_length_tol(curve, t0, end, INVERT_QUADRATURE_TOL)?;
    let slack = 1e-12 * (1.0 + available);
    if target > available + slack {
        return Err(Error::Range { target, available });
    }
    if target >= available {
        return Ok(end);
    }

    let (mut lo, mut hi) = (t0, end);
    let mut t = (t0 + target).clamp(lo, hi);
    // residual F(t) = length(t0, t) - target, advanced incrementally
    let mut residual = pseudo_arc_length_tol(curve, t0, t, INVERT_QUADRATURE_TOL)? - target;
    for _ in 0..MAX_NEWTON_STEPS {
        if residual < 0.0 {
            lo = t;
        } else {
            hi = t;
        }
        let slope = pseudo_arc_integrand(curve, t)?;
        let mut next = t - residual / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - t).abs() <= 4.0 * f64::EPSILON * t.abs().max(1.0) || residual == 0.0 {
            return Ok(t);
        }
        residual += pseudo_arc_length_tol(curve, t, next, INVERT_QUADRATURE_TOL)?;
        t = next;
    }
    Err(Error::Quadrature(format!(
        "pseudo-arc inversion did not converge for target {target}"
    )))
}
