// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! The null helix family
//! `c(s) = (a²+b²)^{-1/2} [sinh(as)/a, cosh(as)/a, sin(bs)/b, cos(bs)/b]`
//! with its closed-form Cartan frame, constant curvatures
//! `k1 = (b²−a²)/2`, `k2 = −ab` and both Bertrand mates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bertrand::BertrandCase;
use crate::curve::{CurveSpec, Interval, Parametrization};
use crate::error::{Error, Result};
use crate::frame::{CartanFrame, FrameJets};
use crate::jet::Jet;
use crate::math;
use crate::minkowski::JetVec4;

/// Domain used for corpus curves.
pub const CORPUS_DOMAIN: Interval = Interval { lo: -1.0, hi: 1.0 };

pub const DEFAULT_PARAMS: [(f64, f64); 3] = [(1.0, 2.0), (1.0, 3.0), (2.0, 5.0)];

pub const COMPONENT_SOURCES: [&str; 4] = [
    "(1/sqrt(a^2+b^2))*(1/a)*sinh(a*s)",
    "(1/sqrt(a^2+b^2))*(1/a)*cosh(a*s)",
    "(1/sqrt(a^2+b^2))*(1/b)*sin(b*s)",
    "(1/sqrt(a^2+b^2))*(1/b)*cos(b*s)",
];

/// Nonzero `a`, `b` with `|a| ≠ |b|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExampleParams {
    a: f64,
    b: f64,
}

impl ExampleParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a == 0.0 || b == 0.0 {
            return Err(Error::InvalidParams(format!(
                "a and b must be finite and nonzero (a = {a}, b = {b})"
            )));
        }
        if a.abs() == b.abs() {
            return Err(Error::InvalidParams(format!(
                "a must differ from ±b (a = {a}, b = {b})"
            )));
        }
        Ok(ExampleParams { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn k1(&self) -> f64 {
        0.5 * (self.b * self.b - self.a * self.a)
    }

    pub fn k2(&self) -> f64 {
        -self.a * self.b
    }

    /// `(α, β) = (0, 1/(ab))`.
    pub fn case_one_constants(&self) -> (f64, f64) {
        (0.0, 1.0 / (self.a * self.b))
    }

    /// `(α, β) = (1/(b²−a²), −1/(2ab))`.
    pub fn case_two_constants(&self) -> (f64, f64) {
        (
            1.0 / (self.b * self.b - self.a * self.a),
            -1.0 / (2.0 * self.a * self.b),
        )
    }

    pub fn name(&self) -> String {
        format!("null_helix_a{}_b{}", self.a, self.b)
    }

    fn constants(&self) -> BTreeMap<String, f64> {
        [("a".to_string(), self.a), ("b".to_string(), self.b)].into()
    }

    fn inv_radius(&self) -> f64 {
        1.0 / math::sqrt(self.a * self.a + self.b * self.b)
    }
}

pub fn default_params() -> Vec<ExampleParams> {
    DEFAULT_PARAMS
        .iter()
        .map(|&(a, b)| ExampleParams::new(a, b).expect("default corpus parameters are valid"))
        .collect()
}

pub fn example_curve(p: &ExampleParams) -> Result<CurveSpec> {
    CurveSpec::parse(
        p.name(),
        COMPONENT_SOURCES,
        p.constants(),
        CORPUS_DOMAIN,
        Parametrization::PseudoArc,
    )
}

/// Closed-form frame fields as jets of order `order` at `s`, built directly
/// from the hyperbolic and trigonometric series rather than from the curve.
pub fn closed_form_frame_jets(p: &ExampleParams, s: f64, order: usize) -> FrameJets {
    let (a, b) = (p.a, p.b);
    let r = p.inv_radius();
    let t = Jet::variable(s, order);
    let (sh, ch) = t.scale(a).sinh_cosh();
    let (sn, cs) = t.scale(b).sin_cos();
    let vec = |x: [(f64, &Jet); 4]| JetVec4(x.map(|(k, j)| j.scale(k)));
    let l = vec([(r, &ch), (r, &sh), (r, &cs), (-r, &sn)]);
    let w1 = vec([(r * a, &sh), (r * a, &ch), (-r * b, &sn), (-r * b, &cs)]);
    let h = -0.5 / r;
    let n = vec([(h, &ch), (h, &sh), (-h, &cs), (h, &sn)]);
    let w2 = vec([(r * b, &sh), (r * b, &ch), (r * a, &sn), (r * a, &cs)]);
    FrameJets {
        l,
        n,
        w1,
        w2,
        k1: Jet::constant(p.k1(), s, order),
        k2: Jet::constant(p.k2(), s, order),
        k1_prime: Jet::constant(0.0, s, order),
    }
}

/// Closed-form frame at `s`, with its Gram and Frenet residuals.
pub fn closed_form_frame(p: &ExampleParams, s: f64) -> CartanFrame {
    CartanFrame::from_jets(s, &closed_form_frame_jets(p, s, 1))
}

/// Closed-form Bertrand mate in its own pseudo-arc parameter, and the slope
/// of the linear correspondence `s̄ = slope · s`.
///
/// Case II needs `b² > a²` for the slope to be real.
pub fn expected_mate(p: &ExampleParams, case: BertrandCase) -> Result<(CurveSpec, f64)> {
    let (lo, hi) = (CORPUS_DOMAIN.lo, CORPUS_DOMAIN.hi);
    match case {
        BertrandCase::I => {
            let slope = math::sqrt(2.0);
            let spec = CurveSpec::parse(
                format!("{}_mate_case_i", p.name()),
                [
                    "(2/sqrt(a^2+b^2))*(1/a)*sinh(a*s/sqrt(2))",
                    "(2/sqrt(a^2+b^2))*(1/a)*cosh(a*s/sqrt(2))",
                    "(2/sqrt(a^2+b^2))*(1/b)*sin(b*s/sqrt(2))",
                    "(2/sqrt(a^2+b^2))*(1/b)*cos(b*s/sqrt(2))",
                ],
                p.constants(),
                Interval {
                    lo: slope * lo,
                    hi: slope * hi,
                },
                Parametrization::PseudoArc,
            )?;
            Ok((spec, slope))
        }
        BertrandCase::II => {
            let (a2, b2) = (p.a * p.a, p.b * p.b);
            if !(b2 > a2) {
                return Err(Error::InvalidParams(format!(
                    "closed-form case II mate needs b² > a² (a = {}, b = {})",
                    p.a, p.b
                )));
            }
            let slope = math::sqrt((a2 + b2) / (2.0 * (b2 - a2)));
            let mut constants = p.constants();
            constants.insert("l0".to_string(), slope);
            let spec = CurveSpec::parse(
                format!("{}_mate_case_ii", p.name()),
                [
                    "(l0^2/sqrt(a^2+b^2))*(1/a)*sinh(a/l0*s)",
                    "(l0^2/sqrt(a^2+b^2))*(1/a)*cosh(a/l0*s)",
                    "-(l0^2/sqrt(a^2+b^2))*(1/b)*sin(b/l0*s)",
                    "-(l0^2/sqrt(a^2+b^2))*(1/b)*cos(b/l0*s)",
                ],
                constants,
                Interval {
                    lo: slope * lo,
                    hi: slope * hi,
                },
                Parametrization::PseudoArc,
            )?;
            Ok((spec, slope))
        }
        BertrandCase::None => Err(Error::InvalidParams(
            "a mate needs case I or case II".to_string(),
        )),
    }
}
