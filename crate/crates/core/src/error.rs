// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Arithmetic domain violations raised while evaluating expressions or jets.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DomainError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("sqrt of non-positive value {0}")]
    SqrtOfNonPositive(f64),
    #[error("ln of non-positive value {0}")]
    LnOfNonPositive(f64),
    #[error("{base}^{exponent} is undefined (non-integer exponent needs a positive base)")]
    Power { base: f64, exponent: f64 },
    #[error("non-finite result")]
    NonFinite,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("unexpected character at position {position}")]
    Lex { position: usize },
    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("domain error: {0}")]
    Domain(#[from] DomainError),
    #[error("invalid curve spec: {0}")]
    InvalidSpec(String),
    #[error("parameter {s} outside curve domain [{lo}, {hi}]")]
    OutOfDomain { s: f64, lo: f64, hi: f64 },
    #[error("curve is not pseudo-arc parametrized at s = {s} (|<c',c'>| = {null_residual:e}, |<c'',c''> - 1| = {unit_residual:e})")]
    PseudoArcViolation {
        s: f64,
        null_residual: f64,
        unit_residual: f64,
    },
    #[error("degenerate curve at s = {s}: first four derivatives are linearly dependent (|k2| = {abs_k2:e})")]
    DegenerateCurve { s: f64, abs_k2: f64 },
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("target pseudo-arc length {target} exceeds the remaining length {available}")]
    Range { target: f64, available: f64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("Bertrand condition failed: {0}")]
    ConditionFailed(String),
    #[error("no constants fit a k1 + b k2 = 1 (residual {residual:e})")]
    NoSolution { residual: f64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("jet order {have} is too low, {need} required")]
    OrderTooLow { have: usize, need: usize },
}
