// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use super::{validate_pseudo_arc, Curve, CurveJet, Interval, PSEUDO_ARC_TOL};
use crate::error::Result;
use crate::frame::{FrameJets, DEGENERACY_TOL};

/// `s ↦ c(s) + α·W1(s) + β·W2(s)` for constants α, β.
///
/// Jets are built by running the frame algebra of the base curve in jet
/// arithmetic, so a request for order `n` reads the base at order `n + 4`.
#[derive(Debug, Clone)]
pub struct FrameOffsetCurve<C> {
    base: C,
    alpha: f64,
    beta: f64,
}

impl<C: Curve> FrameOffsetCurve<C> {
    /// Builds the offset after checking the base at `samples` grid points:
    /// it must be non-degenerate and pseudo-arc parametrized.
    pub fn new(base: C, alpha: f64, beta: f64, samples: usize) -> Result<Self> {
        validate_pseudo_arc(&base, samples, PSEUDO_ARC_TOL)?;
        Ok(FrameOffsetCurve { base, alpha, beta })
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

impl<C: Curve> Curve for FrameOffsetCurve<C> {
    fn domain(&self) -> Interval {
        self.base.domain()
    }

    fn jet(&self, s: f64, order: usize) -> Result<CurveJet> {
        let cj = self.base.jet(s, order + 4)?;
        let frame = FrameJets::from_curve_jet(&cj, DEGENERACY_TOL)?;
        let shift = &frame.w1.scale(self.alpha) + &frame.w2.scale(self.beta);
        let components = (&cj.components + &shift).map(|c| c.truncate(order));
        Ok(CurveJet { s, components })
    }
}
