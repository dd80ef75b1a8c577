// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Minkowski 4-space with signature (−,+,+,+); component 0 is timelike.

use core::ops::{Add, Index, Mul, Neg, Sub};

use crate::jet::Jet;
use crate::math;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec4(pub [f64; 4]);

impl Vec4 {
    pub const ZERO: Vec4 = Vec4([0.0; 4]);

    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Vec4([x0, x1, x2, x3])
    }

    /// Standard basis vector `e_i`.
    pub fn basis(i: usize) -> Self {
        let mut v = [0.0; 4];
        v[i] = 1.0;
        Vec4(v)
    }

    pub fn dot(&self, other: &Vec4) -> f64 {
        mink_dot(self, other)
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Euclidean length of the coordinate vector (not the Minkowski norm).
    pub fn euclidean_norm(&self) -> f64 {
        math::sqrt(self.0.iter().map(|c| c * c).sum())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl Index<usize> for Vec4 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for Vec4 {
    type Output = Vec4;
    fn add(self, rhs: Vec4) -> Vec4 {
        Vec4(core::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, rhs: Vec4) -> Vec4 {
        Vec4(core::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Mul<Vec4> for f64 {
    type Output = Vec4;
    fn mul(self, rhs: Vec4) -> Vec4 {
        Vec4(rhs.0.map(|c| self * c))
    }
}

impl Neg for Vec4 {
    type Output = Vec4;
    fn neg(self) -> Vec4 {
        Vec4(self.0.map(|c| -c))
    }
}

/// `−u0·v0 + u1·v1 + u2·v2 + u3·v3`.
pub fn mink_dot(u: &Vec4, v: &Vec4) -> f64 {
    -u.0[0] * v.0[0] + u.0[1] * v.0[1] + u.0[2] * v.0[2] + u.0[3] * v.0[3]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalCharacter {
    Timelike,
    Spacelike,
    Null,
}

pub fn causal_character(v: &Vec4, tol: f64) -> CausalCharacter {
    let q = mink_dot(v, v);
    if q < -tol {
        CausalCharacter::Timelike
    } else if q > tol {
        CausalCharacter::Spacelike
    } else {
        CausalCharacter::Null
    }
}

/// Determinant of the matrix whose rows are `u1..u4`.
pub fn det4(u1: &Vec4, u2: &Vec4, u3: &Vec4, u4: &Vec4) -> f64 {
    let m = [u1.0, u2.0, u3.0, u4.0];
    // Laplace expansion along the first row via 2×2 minors of rows 3 and 4.
    let minor = |a: usize, b: usize| m[2][a] * m[3][b] - m[2][b] * m[3][a];
    let m23 = minor(2, 3);
    let m13 = minor(1, 3);
    let m12 = minor(1, 2);
    let m03 = minor(0, 3);
    let m02 = minor(0, 2);
    let m01 = minor(0, 1);
    let c0 = m[1][1] * m23 - m[1][2] * m13 + m[1][3] * m12;
    let c1 = m[1][0] * m23 - m[1][2] * m03 + m[1][3] * m02;
    let c2 = m[1][0] * m13 - m[1][1] * m03 + m[1][3] * m01;
    let c3 = m[1][0] * m12 - m[1][1] * m02 + m[1][2] * m01;
    m[0][0] * c0 - m[0][1] * c1 + m[0][2] * c2 - m[0][3] * c3
}

/// Gram matrix of a Cartan frame in the order (L, N, W1, W2):
/// L and N null with ⟨L,N⟩ = 1, W1 and W2 unit spacelike, all else zero.
pub const GRAM_TARGET: [[f64; 4]; 4] = [
    [0.0, 1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
];

/// Largest entrywise deviation of the Gram matrix of `(l, n, w1, w2)` from
/// [`GRAM_TARGET`].
pub fn gram_residual(l: &Vec4, n: &Vec4, w1: &Vec4, w2: &Vec4) -> f64 {
    let frame = [l, n, w1, w2];
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in i..4 {
            let d = (mink_dot(frame[i], frame[j]) - GRAM_TARGET[i][j]).abs();
            worst = worst.max(d);
        }
    }
    worst
}

/// A 4-vector of jets sharing base point; used for curve derivatives and
/// frame fields that still need differentiating.
#[derive(Debug, Clone, PartialEq)]
pub struct JetVec4(pub [Jet; 4]);

impl JetVec4 {
    pub fn value(&self) -> Vec4 {
        Vec4(core::array::from_fn(|i| self.0[i].value()))
    }

    pub fn order(&self) -> usize {
        self.0.iter().map(Jet::order).min().unwrap_or(0)
    }

    pub fn differentiate(&self) -> JetVec4 {
        JetVec4(core::array::from_fn(|i| self.0[i].differentiate()))
    }

    /// Differentiates `k` times.
    pub fn nth_derivative(&self, k: usize) -> JetVec4 {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.differentiate();
        }
        out
    }

    pub fn dot(&self, other: &JetVec4) -> Jet {
        let mut acc = -&(&self.0[0] * &other.0[0]);
        for i in 1..4 {
            acc = &acc + &(&self.0[i] * &other.0[i]);
        }
        acc
    }

    /// Multiplies every component by the scalar jet `f`.
    pub fn scale_by(&self, f: &Jet) -> JetVec4 {
        JetVec4(core::array::from_fn(|i| &self.0[i] * f))
    }

    pub fn scale(&self, f: f64) -> JetVec4 {
        JetVec4(core::array::from_fn(|i| self.0[i].scale(f)))
    }

    pub fn map(&self, f: impl Fn(&Jet) -> Jet) -> JetVec4 {
        JetVec4(core::array::from_fn(|i| f(&self.0[i])))
    }
}

impl Add<&JetVec4> for &JetVec4 {
    type Output = JetVec4;
    fn add(self, rhs: &JetVec4) -> JetVec4 {
        JetVec4(core::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub<&JetVec4> for &JetVec4 {
    type Output = JetVec4;
    fn sub(self, rhs: &JetVec4) -> JetVec4 {
        JetVec4(core::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &JetVec4 {
    type Output = JetVec4;
    fn neg(self) -> JetVec4 {
        self.scale(-1.0)
    }
}
