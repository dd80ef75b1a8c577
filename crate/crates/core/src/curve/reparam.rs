// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::format;
use alloc::vec;

use super::{invert_arc, pseudo_arc_length, Curve, CurveJet, Interval};
use crate::error::{Error, Result};
use crate::jet::Jet;

/// Jet of order `order` of `inner` re-expressed in its pseudo-arc parameter,
/// expanded around inner parameter `t` which corresponds to `sigma`.
///
/// The series of `t(σ)` solves `dt/dσ = ⟨c_tt, c_tt⟩^{-1/4}`; each Picard
/// sweep below fixes one more Taylor coefficient.
pub fn reparametrized_jet<C: Curve + ?Sized>(
    inner: &C,
    t: f64,
    sigma: f64,
    order: usize,
) -> Result<CurveJet> {
    let cj = inner.jet(t, (order + 1).max(2))?;
    let acc = cj.derivative_jet(2);
    let q = acc.dot(&acc);
    if !(q.value() > 0.0) {
        return Err(Error::Quadrature(format!(
            "acceleration is not spacelike at t = {t} (<c'',c''> = {:e})",
            q.value()
        )));
    }
    let speed = q.sqrt()?.sqrt()?;
    let rate = speed.recip()?;

    let mut coeffs = vec![0.0; order + 1];
    if order >= 1 {
        coeffs[1] = rate.value();
    }
    let mut offset = Jet::from_coeffs(sigma, coeffs);
    for _ in 1..order {
        let step = offset.truncate(order - 1);
        offset = rate.compose(&step).integrate();
    }
    let components = cj.components.map(|c| c.compose(&offset).truncate(order));
    Ok(CurveJet {
        s: sigma,
        components,
    })
}

/// A null curve traversed by pseudo-arc length, anchored so that the start
/// of the inner domain maps to `anchor_sigma`.
#[derive(Debug, Clone)]
pub struct PseudoArcCurve<C> {
    inner: C,
    anchor_sigma: f64,
    domain: Interval,
}

impl<C: Curve> PseudoArcCurve<C> {
    pub fn new(inner: C, anchor_t: f64, anchor_sigma: f64) -> Result<Self> {
        let d = inner.domain();
        if anchor_t != d.lo {
            return Err(Error::Precondition(format!(
                "pseudo-arc anchor must be the domain start {}, got {anchor_t}",
                d.lo
            )));
        }
        let total = pseudo_arc_length(&inner, d.lo, d.hi)?;
        let domain = Interval::new(anchor_sigma, anchor_sigma + total)?;
        Ok(PseudoArcCurve {
            inner,
            anchor_sigma,
            domain,
        })
    }

    pub fn inner(&self) -> &C {
        &self.inner
    }

    /// Pseudo-arc parameter of inner parameter `t`.
    pub fn sigma_of(&self, t: f64) -> Result<f64> {
        let lo = self.inner.domain().lo;
        Ok(self.anchor_sigma + pseudo_arc_length(&self.inner, lo, t)?)
    }

    /// Inner parameter at pseudo-arc parameter `sigma`.
    pub fn param_of(&self, sigma: f64) -> Result<f64> {
        let sigma = self.clamp(sigma)?;
        invert_arc(
            &self.inner,
            self.inner.domain().lo,
            sigma - self.anchor_sigma,
        )
    }

    /// Jet at the point with inner parameter `t`, skipping the inversion.
    pub fn jet_at_inner(&self, t: f64, order: usize) -> Result<CurveJet> {
        let sigma = self.sigma_of(t)?;
        reparametrized_jet(&self.inner, t, sigma, order)
    }

    fn clamp(&self, sigma: f64) -> Result<f64> {
        let d = self.domain;
        let slack = 1e-12 * (1.0 + d.len());
        if sigma < d.lo - slack || sigma > d.hi + slack {
            return Err(Error::OutOfDomain {
                s: sigma,
                lo: d.lo,
                hi: d.hi,
            });
        }
        Ok(sigma.clamp(d.lo, d.hi))
    }
}

impl<C: Curve> Curve for PseudoArcCurve<C> {
    fn domain(&self) -> Interval {
        self.domain
    }

    fn jet(&self, sigma: f64, order: usize) -> Result<CurveJet> {
        let t = self.param_of(sigma)?;
        reparametrized_jet(&self.inner, t, sigma, order)
    }
}

/// `t ↦ c(λt)` for `λ > 0`.
#[derive(Debug, Clone)]
pub struct Rescaled<C> {
    inner: C,
    lambda: f64,
}

impl<C: Curve> Rescaled<C> {
    pub fn new(inner: C, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "scale factor must be positive, got {lambda}"
            )));
        }
        Ok(Rescaled { inner, lambda })
    }
}

impl<C: Curve> Curve for Rescaled<C> {
    fn domain(&self) -> Interval {
        let d = self.inner.domain();
        Interval {
            lo: d.lo / self.lambda,
            hi: d.hi / self.lambda,
        }
    }

    fn jet(&self, t: f64, order: usize) -> Result<CurveJet> {
        self.domain().check(t)?;
        let inner_t = (self.lambda * t).clamp(self.inner.domain().lo, self.inner.domain().hi);
        let cj = self.inner.jet(inner_t, order)?;
        let components = cj.components.map(|c| {
            let mut factor = 1.0;
            let coeffs = c
                .coeffs()
                .iter()
                .map(|&x| {
                    let y = x * factor;
                    factor *= self.lambda;
                    y
                })
                .collect();
            Jet::from_coeffs(t, coeffs)
        });
        Ok(CurveJet { s: t, components })
    }
}
