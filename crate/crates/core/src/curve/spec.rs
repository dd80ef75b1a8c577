// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;

use super::{pseudo_arc_residual, Curve, CurveJet, Interval, PseudoArcCurve};
use crate::error::{Error, Result};
use crate::expr::{evaluate, parse, Expr, Func};
use crate::frame::{FrameJets, DEGENERACY_TOL};
use crate::jet::Jet;
use crate::minkowski::JetVec4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parametrization {
    /// Declared to satisfy ⟨c′,c′⟩ = 0 and ⟨c″,c″⟩ = 1; checked, never assumed.
    PseudoArc,
    /// Any regular null parametrization; reparametrized before frame work.
    General,
}

/// Four component expressions in `s` plus bound constants.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub name: String,
    pub components: [Expr; 4],
    pub constants: BTreeMap<String, f64>,
    pub domain: Interval,
    pub parametrization: Parametrization,
}

impl CurveSpec {
    pub fn new(
        name: impl Into<String>,
        components: [Expr; 4],
        constants: BTreeMap<String, f64>,
        domain: Interval,
        parametrization: Parametrization,
    ) -> Result<Self> {
        for (key, value) in &constants {
            if key == "s" || Func::from_name(key).is_some() {
                return Err(Error::InvalidSpec(format!(
                    "`{key}` cannot be used as a constant name"
                )));
            }
            if !value.is_finite() {
                return Err(Error::InvalidSpec(format!(
                    "constant `{key}` is not finite"
                )));
            }
        }
        for component in &components {
            for var in component.variables() {
                if var != "s" && !constants.contains_key(&var) {
                    return Err(Error::UnboundVariable(var));
                }
            }
        }
        Interval::new(domain.lo, domain.hi)?;
        Ok(CurveSpec {
            name: name.into(),
            components,
            constants,
            domain,
            parametrization,
        })
    }

    /// Parses the four component sources and validates the result.
    pub fn parse(
        name: impl Into<String>,
        sources: [&str; 4],
        constants: BTreeMap<String, f64>,
        domain: Interval,
        parametrization: Parametrization,
    ) -> Result<Self> {
        let [a, b, c, d] = sources;
        let components = [parse(a)?, parse(b)?, parse(c)?, parse(d)?];
        Self::new(name, components, constants, domain, parametrization)
    }
}

impl Curve for CurveSpec {
    fn domain(&self) -> Interval {
        self.domain
    }

    fn jet(&self, s: f64, order: usize) -> Result<CurveJet> {
        self.domain.check(s)?;
        let var = Jet::variable(s, order);
        let [a, b, c, d] = &self.components;
        let comps = [
            evaluate(a, &var, &self.constants)?,
            evaluate(b, &var, &self.constants)?,
            evaluate(c, &var, &self.constants)?,
            evaluate(d, &var, &self.constants)?,
        ];
        Ok(CurveJet {
            s,
            components: JetVec4(comps),
        })
    }
}

/// A spec made ready for frame work: pseudo-arc specs pass through after
/// validation, general ones are reparametrized by pseudo-arc length measured
/// from the start of their domain.
#[derive(Debug, Clone)]
pub enum PreparedCurve {
    Direct(CurveSpec),
    Reparametrized(PseudoArcCurve<CurveSpec>),
}

impl PreparedCurve {
    pub fn spec(&self) -> &CurveSpec {
        match self {
            PreparedCurve::Direct(spec) => spec,
            PreparedCurve::Reparametrized(r) => r.inner(),
        }
    }
}

impl Curve for PreparedCurve {
    fn domain(&self) -> Interval {
        match self {
            PreparedCurve::Direct(c) => c.domain(),
            PreparedCurve::Reparametrized(c) => c.domain(),
        }
    }

    fn jet(&self, s: f64, order: usize) -> Result<CurveJet> {
        match self {
            PreparedCurve::Direct(c) => c.jet(s, order),
            PreparedCurve::Reparametrized(c) => c.jet(s, order),
        }
    }
}

/// Checks `samples` evenly spaced points for degeneracy (k2 = 0) and then
/// for the pseudo-arc conditions at tolerance `tol`.
pub fn validate_pseudo_arc<C: Curve + ?Sized>(curve: &C, samples: usize, tol: f64) -> Result<()> {
    let grid = curve.domain().grid(samples.max(2));
    for &s in &grid {
        let cj = curve.jet(s, 4)?;
        FrameJets::from_curve_jet(&cj, DEGENERACY_TOL)?;
    }
    for &s in &grid {
        let r = pseudo_arc_residual(curve, s)?;
        if !r.within(tol) {
            return Err(Error::PseudoArcViolation {
                s,
                null_residual: r.null_residual,
                unit_residual: r.unit_residual,
            });
        }
    }
    Ok(())
}

/// Validates or reparametrizes `spec` according to its declared
/// parametrization, sampling `samples` points.
pub fn prepare(spec: CurveSpec, samples: usize, tol: f64) -> Result<PreparedCurve> {
    match spec.parametrization {
        Parametrization::PseudoArc => {
            validate_pseudo_arc(&spec, samples, tol)?;
            Ok(PreparedCurve::Direct(spec))
        }
        Parametrization::General => {
            let grid = spec.domain.grid(samples.max(2));
            for &t in &grid {
                let r = pseudo_arc_residual(&spec, t)?;
                if r.null_residual >= tol {
                    return Err(Error::InvalidSpec(format!(
                        "curve is not null at s = {t} (|<c',c'>| = {:e})",
                        r.null_residual
                    )));
                }
                let acc = spec.jet(t, 2)?.derivative(2);
                if !(acc.dot(&acc) > DEGENERACY_TOL) {
                    return Err(Error::DegenerateCurve { s: t, abs_k2: 0.0 });
                }
            }
            let lo = spec.domain.lo;
            let curve = PseudoArcCurve::new(spec, lo, 0.0)?;
            validate_pseudo_arc(&curve, samples, tol)?;
            Ok(PreparedCurve::Reparametrized(curve))
        }
    }
}
