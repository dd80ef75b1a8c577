// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Cartan frames of null curves.
//!
//! For a pseudo-arc parametrized null curve the derivatives and the frame
//! are related by
//!
//! ```text
//! c′ = L
//! c″ = W1
//! c‴ = −k1·L − N
//! c⁗ = −k1′·L − 2k1·W1 − k2·W2
//! ```
//!
//! which inverts to `k1 = ⟨c‴,c‴⟩/2`, `N = −c‴ − k1·L`, `k1′ = ⟨c⁗,c‴⟩` and
//! `v = c⁗ + k1′·L + 2k1·W1 = −k2·W2`. We always take `k2 = −‖v‖ < 0` and
//! `W2 = v/‖v‖`.
//!
//! Everything is computed on jets, so differentiating the frame fields for
//! the Frenet check costs nothing beyond one more Taylor order.

use alloc::vec::Vec;

use crate::curve::{Curve, CurveJet, PSEUDO_ARC_TOL};
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::minkowski::{det4, gram_residual, JetVec4, Vec4};

/// Below this `|k2| = ‖v‖` the first four derivatives are treated as
/// linearly dependent.
pub const DEGENERACY_TOL: f64 = 1e-10;

/// Frame fields and curvatures as jets.
#[derive(Debug, Clone)]
pub struct FrameJets {
    pub l: JetVec4,
    pub n: JetVec4,
    pub w1: JetVec4,
    pub w2: JetVec4,
    pub k1: Jet,
    pub k2: Jet,
    pub k1_prime: Jet,
}

impl FrameJets {
    /// Runs the frame algebra on a position jet of order at least 4. The
    /// pseudo-arc conditions are not checked here.
    pub fn from_curve_jet(cj: &CurveJet, degeneracy_tol: f64) -> Result<Self> {
        cj.require_order(4)?;
        let l = cj.derivative_jet(1);
        let w1 = l.differentiate();
        let c3 = w1.differentiate();
        let c4 = c3.differentiate();

        let k1 = c3.dot(&c3).scale(0.5);
        let n = &(-&c3) - &l.scale_by(&k1);
        let k1_prime = c4.dot(&c3);
        let v = &(&c4 + &l.scale_by(&k1_prime)) + &w1.scale_by(&k1.scale(2.0));

        let vv = v.dot(&v);
        let norm = crate::math::sqrt(vv.value().max(0.0));
        if !(norm >= degeneracy_tol) {
            return Err(Error::DegenerateCurve {
                s: cj.s,
                abs_k2: norm,
            });
        }
        let norm_jet = vv.sqrt()?;
        let inv = norm_jet.recip()?;
        let w2 = v.scale_by(&inv);
        let k2 = -norm_jet;
        Ok(FrameJets {
            l,
            n,
            w1,
            w2,
            k1,
            k2,
            k1_prime,
        })
    }

    /// Largest component of `L′ − W1`, `N′ − (k1·W1 + k2·W2)`,
    /// `W1′ + k1·L + N` and `W2′ + k2·L`. Needs frame jets of order ≥ 1,
    /// i.e. a position jet of order ≥ 5.
    pub fn frenet_residual(&self) -> Option<f64> {
        if self.w2.order() < 1 || self.k2.order() < 1 {
            return None;
        }
        let d = |v: &JetVec4| v.differentiate().value();
        let (l, n, w1, w2) = (
            self.l.value(),
            self.n.value(),
            self.w1.value(),
            self.w2.value(),
        );
        let (k1, k2) = (self.k1.value(), self.k2.value());
        let residuals = [
            d(&self.l) - w1,
            d(&self.n) - (k1 * w1 + k2 * w2),
            d(&self.w1) - (-(k1 * l) - n),
            d(&self.w2) - (-(k2 * l)),
        ];
        Some(residuals.iter().fold(0.0, |m, r| m.max(r.max_abs())))
    }
}

/// The Cartan frame and curvatures at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanFrame {
    pub s: f64,
    pub l: Vec4,
    pub n: Vec4,
    pub w1: Vec4,
    pub w2: Vec4,
    pub k1: f64,
    /// Always ≤ 0 for frames from [`frame_at`].
    pub k2: f64,
    pub k1_prime: f64,
    /// `det(L, N, W1, W2)` in standard coordinates; reported, not enforced.
    pub orientation_det: f64,
    pub gram_residual: f64,
    /// Present when the jet order allowed differentiating the frame.
    pub frenet_residual: Option<f64>,
}

impl CartanFrame {
    pub fn from_jets(s: f64, jets: &FrameJets) -> Self {
        let (l, n, w1, w2) = (
            jets.l.value(),
            jets.n.value(),
            jets.w1.value(),
            jets.w2.value(),
        );
        CartanFrame {
            s,
            l,
            n,
            w1,
            w2,
            k1: jets.k1.value(),
            k2: jets.k2.value(),
            k1_prime: jets.k1_prime.value(),
            orientation_det: det4(&l, &n, &w1, &w2),
            gram_residual: gram_residual(&l, &n, &w1, &w2),
            frenet_residual: jets.frenet_residual(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameOptions {
    /// Jet order used to evaluate the curve; at least 4, 5 for Frenet checks.
    pub order: usize,
    pub pseudo_arc_tol: f64,
    pub degeneracy_tol: f64,
}

impl Default for FrameOptions {
    fn default() -> Self {
        FrameOptions {
            order: crate::curve::DEFAULT_ORDER,
            pseudo_arc_tol: PSEUDO_ARC_TOL,
            degeneracy_tol: DEGENERACY_TOL,
        }
    }
}

/// Frame from an already evaluated position jet; checks the pseudo-arc
/// conditions first.
pub fn frame_from_jet(cj: &CurveJet, opts: &FrameOptions) -> Result<CartanFrame> {
    cj.require_order(4)?;
    let v = cj.derivative(1);
    let a = cj.derivative(2);
    let null_residual = v.dot(&v).abs();
    let unit_residual = (a.dot(&a) - 1.0).abs();
    if !(null_residual < opts.pseudo_arc_tol && unit_residual < opts.pseudo_arc_tol) {
        return Err(Error::PseudoArcViolation {
            s: cj.s,
            null_residual,
            unit_residual,
        });
    }
    let jets = FrameJets::from_curve_jet(cj, opts.degeneracy_tol)?;
    Ok(CartanFrame::from_jets(cj.s, &jets))
}

pub fn frame_at<C: Curve + ?Sized>(curve: &C, s: f64, opts: &FrameOptions) -> Result<CartanFrame> {
    let cj = curve.jet(s, opts.order.max(4))?;
    frame_from_jet(&cj, opts)
}

/// Frenet-system residual at `s` without the pseudo-arc gate, so it also
/// measures how far a curve is from satisfying the system.
pub fn frenet_residuals<C: Curve + ?Sized>(curve: &C, s: f64, opts: &FrameOptions) -> Result<f64> {
    let order = opts.order.max(5);
    let cj = curve.jet(s, order)?;
    let jets = FrameJets::from_curve_jet(&cj, opts.degeneracy_tol)?;
    jets.frenet_residual().ok_or(Error::OrderTooLow {
        have: order,
        need: 5,
    })
}

/// One row of a curvature table; failures are kept per row.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub s: f64,
    pub frame: Result<CartanFrame>,
}

/// Frames over `grid`, in grid order.
pub fn curvature_table<C: Curve + ?Sized>(
    curve: &C,
    grid: &[f64],
    opts: &FrameOptions,
) -> Vec<TableRow> {
    grid.iter()
        .map(|&s| TableRow {
            s,
            frame: frame_at(curve, s, opts),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{closed_form_frame, example_curve, ExampleParams};
    use crate::curve::{CurveSpec, Interval, Parametrization, Rescaled};
    use alloc::collections::BTreeMap;

    fn p12() -> ExampleParams {
        ExampleParams::new(1.0, 2.0).unwrap()
    }

    #[test]
    fn frame_at_zero_matches_closed_form() {
        let curve = example_curve(&p12()).unwrap();
        let f = frame_at(&curve, 0.0, &FrameOptions::default()).unwrap();
        assert!((f.k1 - 1.5).abs() < 1e-12);
        assert!((f.k2 + 2.0).abs() < 1e-12);
        let r5 = 1.0 / libm::sqrt(5.0);
        let checks = [
            (f.l, Vec4::new(r5, 0.0, r5, 0.0)),
            (f.w1, Vec4::new(0.0, r5, 0.0, -2.0 * r5)),
            (f.n, Vec4::new(-2.5 * r5, 0.0, 2.5 * r5, 0.0)),
            (f.w2, Vec4::new(0.0, 2.0 * r5, 0.0, r5)),
        ];
        for (got, want) in checks {
            assert!((got - want).max_abs() < 1e-12, "{got:?} vs {want:?}");
        }
        assert!((f.orientation_det + 1.0).abs() < 1e-12);
        assert!(f.gram_residual < 1e-12);
        assert!(f.frenet_residual.unwrap() < 1e-12);
    }

    #[test]
    fn null_geodesic_is_rejected() {
        let geo = CurveSpec::parse(
            "geodesic",
            ["s", "s", "0", "0"],
            BTreeMap::new(),
            Interval { lo: -1.0, hi: 1.0 },
            Parametrization::PseudoArc,
        )
        .unwrap();
        assert!(matches!(
            frame_at(&geo, 0.0, &FrameOptions::default()),
            Err(Error::PseudoArcViolation { .. })
        ));
        assert!(matches!(
            frenet_residuals(&geo, 0.0, &FrameOptions::default()),
            Err(Error::DegenerateCurve { .. })
        ));
    }

    #[test]
    fn scaled_curve_is_rejected() {
        let curve = example_curve(&p12()).unwrap();
        let scaled = Rescaled::new(curve, 2.0).unwrap();
        match frame_at(&scaled, 0.1, &FrameOptions::default()) {
            Err(Error::PseudoArcViolation { unit_residual, .. }) => {
                assert!((unit_residual - 15.0).abs() < 1e-10)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn internal_consistency() {
        let p = ExampleParams::new(2.0, 5.0).unwrap();
        let curve = example_curve(&p).unwrap();
        for s in [-0.7, 0.0, 0.4, 0.9] {
            let cj = curve.jet(s, 6).unwrap();
            let f = frame_from_jet(&cj, &FrameOptions::default()).unwrap();
            let c = [
                cj.derivative(1),
                cj.derivative(2),
                cj.derivative(3),
                cj.derivative(4),
            ];
            // k1 = -⟨c‴, N⟩
            assert!((f.k1 + c[2].dot(&f.n)).abs() < 1e-10);
            // |det P| = |k2|
            let ratio = det4(&c[0], &c[1], &c[2], &c[3]).abs() / f.orientation_det.abs();
            assert!((ratio - f.k2.abs()).abs() < 1e-8 * f.k2.abs().max(1.0));
            let closed = closed_form_frame(&p, s);
            assert!((f.w2 - closed.w2).max_abs() < 1e-9);
        }
    }

    #[test]
    fn table_keeps_going_past_bad_rows() {
        let curve = example_curve(&p12()).unwrap();
        let rows = curvature_table(&curve, &[-0.5, 3.0, 0.5], &FrameOptions::default());
        assert_eq!(rows.len(), 3);
        assert!(rows[0].frame.is_ok());
        assert!(matches!(rows[1].frame, Err(Error::OutOfDomain { .. })));
        assert!(rows[2].frame.is_ok());
        assert!(curvature_table(&curve, &[], &FrameOptions::default()).is_empty());
    }

    #[test]
    fn order_requirements() {
        let curve = example_curve(&p12()).unwrap();
        let opts = FrameOptions {
            order: 4,
            ..FrameOptions::default()
        };
        let f = frame_at(&curve, 0.2, &opts).unwrap();
        assert!(f.frenet_residual.is_none());
        let cj = curve.jet(0.2, 3).unwrap();
        assert_eq!(
            FrameJets::from_curve_jet(&cj, DEGENERACY_TOL).unwrap_err(),
            Error::OrderTooLow { have: 3, need: 4 }
        );
    }
}
