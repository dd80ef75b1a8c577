// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Cartan frames and curvatures of null curves in Minkowski 4-space.
//!
//! Curves are given as four component expressions in the parameter `s`.
//! Derivatives come from truncated Taylor series ([`Jet`]), so every frame
//! vector, curvature and derived curve is computed to roundoff accuracy
//! rather than by finite differences.
//!
//! The crate is `no_std` (it needs `alloc`); file formats, the command line
//! and parallel drivers live in the companion `cartan` crate.

#![cfg_attr(not(test), no_std)]
// `!(x < tol)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod bertrand;
pub mod corpus;
pub mod curve;
mod error;
pub mod expr;
pub mod frame;
pub mod jet;
pub(crate) mod math;
pub mod minkowski;

pub use error::{DomainError, Error, Result};
pub use jet::Jet;
pub use minkowski::Vec4;
