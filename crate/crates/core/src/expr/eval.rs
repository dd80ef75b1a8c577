// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::collections::BTreeMap;
use alloc::string::String;

use super::ast::{BinOp, Expr, Func};
use crate::error::{DomainError, Error, Result};
use crate::jet::Jet;
use crate::math;

/// Number types an [`Expr`] can be evaluated over.
pub trait Scalar: Clone {
    /// A constant of the same kind (same base point and order, for jets).
    fn lift(&self, value: f64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, rhs: &Self) -> Result<Self, DomainError>;
    fn pow(&self, exponent: &Self) -> Result<Self, DomainError>;
    fn apply(&self, func: Func) -> Result<Self, DomainError>;
    fn is_finite(&self) -> bool;
}

impl Scalar for f64 {
    fn lift(&self, value: f64) -> Self {
        value
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div(&self, rhs: &Self) -> Result<Self, DomainError> {
        if *rhs == 0.0 {
            Err(DomainError::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }

    fn pow(&self, exponent: &Self) -> Result<Self, DomainError> {
        let (b, e) = (*self, *exponent);
        if e == math::trunc(e) {
            if b == 0.0 && e < 0.0 {
                return Err(DomainError::DivisionByZero);
            }
            return Ok(math::pow(b, e));
        }
        if !(b > 0.0) {
            return Err(DomainError::Power {
                base: b,
                exponent: e,
            });
        }
        Ok(math::exp(e * math::ln(b)))
    }

    fn apply(&self, func: Func) -> Result<Self, DomainError> {
        let x = *self;
        Ok(match func {
            Func::Sin => math::sin(x),
            Func::Cos => math::cos(x),
            Func::Sinh => math::sinh(x),
            Func::Cosh => math::cosh(x),
            Func::Exp => math::exp(x),
            Func::Sqrt if x > 0.0 => math::sqrt(x),
            Func::Sqrt => return Err(DomainError::SqrtOfNonPositive(x)),
            Func::Ln if x > 0.0 => math::ln(x),
            Func::Ln => return Err(DomainError::LnOfNonPositive(x)),
        })
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

impl Scalar for Jet {
    fn lift(&self, value: f64) -> Self {
        Jet::lift(self, value)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div(&self, rhs: &Self) -> Result<Self, DomainError> {
        self.checked_div(rhs)
    }

    fn pow(&self, exponent: &Self) -> Result<Self, DomainError> {
        Jet::pow(self, exponent)
    }

    fn apply(&self, func: Func) -> Result<Self, DomainError> {
        match func {
            Func::Sin => Ok(self.sin()),
            Func::Cos => Ok(self.cos()),
            Func::Sinh => Ok(self.sinh()),
            Func::Cosh => Ok(self.cosh()),
            Func::Exp => Ok(self.exp()),
            Func::Sqrt => self.sqrt(),
            Func::Ln => self.ln(),
        }
    }

    fn is_finite(&self) -> bool {
        Jet::is_finite(self)
    }
}

/// Evaluates `expr` with the parameter `s` bound to `s` and every other
/// variable looked up in `constants`.
pub fn evaluate<S: Scalar>(expr: &Expr, s: &S, constants: &BTreeMap<String, f64>) -> Result<S> {
    let value = eval_node(expr, s, constants)?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(DomainError::NonFinite.into())
    }
}

fn eval_node<S: Scalar>(expr: &Expr, s: &S, constants: &BTreeMap<String, f64>) -> Result<S> {
    Ok(match expr {
        Expr::Const(c) => s.lift(*c),
        Expr::Var(name) if name == "s" => s.clone(),
        Expr::Var(name) => match constants.get(name) {
            Some(v) => s.lift(*v),
            None => return Err(Error::UnboundVariable(name.clone())),
        },
        Expr::Neg(inner) => eval_node(inner, s, constants)?.neg(),
        Expr::Call(func, arg) => eval_node(arg, s, constants)?.apply(*func)?,
        Expr::Binary(op, lhs, rhs) => {
            let a = eval_node(lhs, s, constants)?;
            let b = eval_node(rhs, s, constants)?;
            match op {
                BinOp::Add => a.add(&b),
                BinOp::Sub => a.sub(&b),
                BinOp::Mul => a.mul(&b),
                BinOp::Div => a.div(&b)?,
                BinOp::Pow => a.pow(&b)?,
            }
        }
    })
}
