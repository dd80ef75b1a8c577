// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Parametric curves in Minkowski 4-space, evaluated as jets.
//!
//! Anything implementing [`Curve`] can hand out the Taylor expansion of its
//! position at a parameter value. Derived curves (frame offsets, pseudo-arc
//! reparametrizations, rescalings) ask their inner curve for as many extra
//! orders as they consume, so a request for order `n` always yields a jet of
//! order `n`.

mod arc;
mod offset;
mod reparam;
mod spec;

pub use arc::{
    invert_arc, pseudo_arc_integrand, pseudo_arc_length, pseudo_arc_length_tol,
    pseudo_arc_residual, PseudoArcResidual,
};
pub use offset::FrameOffsetCurve;
pub use reparam::{reparametrized_jet, PseudoArcCurve, Rescaled};
pub use spec::{prepare, validate_pseudo_arc, CurveSpec, Parametrization, PreparedCurve};

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::minkowski::{JetVec4, Vec4};

/// Default jet order for base curves: four orders feed a Bertrand mate's
/// offset, one its reparametrization, four its frame and one its Frenet check.
pub const DEFAULT_ORDER: usize = 10;
/// Both pseudo-arc residuals must stay below this for a curve to count as
/// pseudo-arc parametrized.
pub const PSEUDO_ARC_TOL: f64 = 1e-8;
/// Absolute tolerance of the pseudo-arc length quadrature.
pub const QUADRATURE_TOL: f64 = 1e-10;

/// Closed parameter interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidSpec(alloc::format!(
                "domain [{lo}, {hi}] must be finite with lo < hi"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn contains(&self, s: f64) -> bool {
        self.lo <= s && s <= self.hi
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn check(&self, s: f64) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                s,
                lo: self.lo,
                hi: self.hi,
            })
        }
    }

    /// `n` evenly spaced points including both ends; the last point is
    /// exactly `hi`.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        match n {
            0 => Vec::new(),
            1 => alloc::vec![self.lo],
            _ => (0..n)
                .map(|i| {
                    if i + 1 == n {
                        self.hi
                    } else {
                        self.lo + self.len() * i as f64 / (n - 1) as f64
                    }
                })
                .collect(),
        }
    }
}

/// Taylor expansion of a curve's position at one parameter value.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveJet {
    pub s: f64,
    pub components: JetVec4,
}

impl CurveJet {
    pub fn order(&self) -> usize {
        self.components.order()
    }

    pub fn position(&self) -> Vec4 {
        self.components.value()
    }

    /// `c⁽ᵏ⁾(s)`.
    pub fn derivative(&self, k: usize) -> Vec4 {
        Vec4(core::array::from_fn(|i| self.components.0[i].derivative(k)))
    }

    /// The jet of `c⁽ᵏ⁾`, `k` orders lower.
    pub fn derivative_jet(&self, k: usize) -> JetVec4 {
        self.components.nth_derivative(k)
    }

    pub(crate) fn require_order(&self, need: usize) -> Result<()> {
        if self.order() < need {
            Err(Error::OrderTooLow {
                have: self.order(),
                need,
            })
        } else {
            Ok(())
        }
    }
}

pub trait Curve: Send + Sync {
    fn domain(&self) -> Interval;

    /// Position jet of order `order` at parameter `s`.
    fn jet(&self, s: f64, order: usize) -> Result<CurveJet>;
}

impl<C: Curve + ?Sized> Curve for &C {
    fn domain(&self) -> Interval {
        (**self).domain()
    }

    fn jet(&self, s: f64, order: usize) -> Result<CurveJet> {
        (**self).jet(s, order)
    }
}

impl<C: Curve + ?Sized> Curve for Box<C> {
    fn domain(&self) -> Interval {
        (**self).domain()
    }

    fn jet(&self, s: f64, order: usize) -> Result<CurveJet> {
        (**self).jet(s, order)
    }
}

/// Evaluates `curve` at `s` to jet order `order`.
pub fn eval_curve<C: Curve + ?Sized>(curve: &C, s: f64, order: usize) -> Result<CurveJet> {
    curve.jet(s, order)
}
