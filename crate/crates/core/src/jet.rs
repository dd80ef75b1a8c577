// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Truncated Taylor series in one variable.
//!
//! A [`Jet`] stores normalized coefficients `coeffs[k] = f⁽ᵏ⁾(s0) / k!`, so
//! multiplication is a plain Cauchy product and the elementary functions use
//! the usual first-order recurrences. Raw derivatives are available through
//! [`Jet::derivative`].
//!
//! Binary operations on jets of different orders truncate to the lower order.
//! Frame algebra mixes `c′` with `c⁗` constantly and this keeps it free of
//! bookkeeping.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{DomainError, Result};
use crate::math;

#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    s0: f64,
    coeffs: Vec<f64>,
}

impl Jet {
    /// The identity function `s ↦ s` expanded at `s0`.
    pub fn variable(s0: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = s0;
        if order >= 1 {
            coeffs[1] = 1.0;
        }
        Jet { s0, coeffs }
    }

    pub fn constant(value: f64, s0: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Jet { s0, coeffs }
    }

    /// Builds a jet from normalized Taylor coefficients.
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(s0: f64, coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        Jet { s0, coeffs }
    }

    /// A constant with the same base point and order as `self`.
    pub fn lift(&self, value: f64) -> Self {
        Jet::constant(value, self.s0, self.order())
    }

    pub fn base_point(&self) -> f64 {
        self.s0
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// `f⁽ᵏ⁾(s0) = k! · coeffs[k]`.
    pub fn derivative(&self, k: usize) -> f64 {
        let mut factorial = 1.0;
        for i in 2..=k {
            factorial *= i as f64;
        }
        factorial * self.coeffs[k]
    }

    /// The jet of `f′`, one order lower.
    ///
    /// Panics on an order-0 jet.
    pub fn differentiate(&self) -> Jet {
        assert!(self.order() >= 1, "cannot differentiate an order-0 jet");
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, c)| (k + 1) as f64 * c)
            .collect();
        Jet {
            s0: self.s0,
            coeffs,
        }
    }

    /// The antiderivative vanishing at `s0`, one order higher.
    pub fn integrate(&self) -> Jet {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / (k + 1) as f64),
        );
        Jet {
            s0: self.s0,
            coeffs,
        }
    }

    pub fn truncate(&self, order: usize) -> Jet {
        let n = (order + 1).min(self.coeffs.len());
        Jet {
            s0: self.s0,
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    /// True when all coefficients past the value are exactly zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn scale(&self, factor: f64) -> Jet {
        Jet {
            s0: self.s0,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    fn zip_with(&self, other: &Jet, f: impl Fn(f64, f64) -> f64) -> Jet {
        debug_assert!(
            self.s0 == other.s0,
            "jets expanded at different points: {} vs {}",
            self.s0,
            other.s0
        );
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Jet {
            s0: self.s0,
            coeffs,
        }
    }

    fn cauchy(&self, other: &Jet) -> Jet {
        let n = self.coeffs.len().min(other.coeffs.len());
        let a = &self.coeffs;
        let b = &other.coeffs;
        let coeffs = (0..n)
            .map(|k| (0..=k).map(|j| a[j] * b[k - j]).sum())
            .collect();
        Jet {
            s0: self.s0,
            coeffs,
        }
    }

    pub fn checked_div(&self, other: &Jet) -> Result<Jet, DomainError> {
        let b = &other.coeffs;
        if b[0] == 0.0 {
            return Err(DomainError::DivisionByZero);
        }
        let n = self.coeffs.len().min(b.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= b[j] * c[k - j];
            }
            c.push(acc / b[0]);
        }
        Ok(Jet {
            s0: self.s0,
            coeffs: c,
        })
    }

    pub fn recip(&self) -> Result<Jet, DomainError> {
        self.lift(1.0).checked_div(self)
    }

    pub fn exp(&self) -> Jet {
        let a = &self.coeffs;
        let mut e = Vec::with_capacity(a.len());
        e.push(math::exp(a[0]));
        for k in 1..a.len() {
            let acc: f64 = (1..=k).map(|j| j as f64 * a[j] * e[k - j]).sum();
            e.push(acc / k as f64);
        }
        Jet {
            s0: self.s0,
            coeffs: e,
        }
    }

    pub fn ln(&self) -> Result<Jet, DomainError> {
        let a = &self.coeffs;
        if !(a[0] > 0.0) {
            return Err(DomainError::LnOfNonPositive(a[0]));
        }
        let mut l = Vec::with_capacity(a.len());
        l.push(math::ln(a[0]));
        for k in 1..a.len() {
            let acc: f64 = (1..k).map(|j| j as f64 * l[j] * a[k - j]).sum();
            l.push((a[k] - acc / k as f64) / a[0]);
        }
        Ok(Jet {
            s0: self.s0,
            coeffs: l,
        })
    }

    pub fn sqrt(&self) -> Result<Jet, DomainError> {
        let a = &self.coeffs;
        if !(a[0] > 0.0) {
            return Err(DomainError::SqrtOfNonPositive(a[0]));
        }
        let mut r = Vec::with_capacity(a.len());
        r.push(math::sqrt(a[0]));
        for k in 1..a.len() {
            let acc: f64 = (1..k).map(|j| r[j] * r[k - j]).sum();
            r.push((a[k] - acc) / (2.0 * r[0]));
        }
        Ok(Jet {
            s0: self.s0,
            coeffs: r,
        })
    }

    /// `(sin a, cos a)` from the coupled recurrence.
    pub fn sin_cos(&self) -> (Jet, Jet) {
        let a = &self.coeffs;
        let n = a.len();
        let mut s = Vec::with_capacity(n);
        let mut c = Vec::with_capacity(n);
        s.push(math::sin(a[0]));
        c.push(math::cos(a[0]));
        for k in 1..n {
            let mut ds = 0.0;
            let mut dc = 0.0;
            for j in 1..=k {
                let w = j as f64 * a[j];
                ds += w * c[k - j];
                dc += w * s[k - j];
            }
            s.push(ds / k as f64);
            c.push(-dc / k as f64);
        }
        (
            Jet {
                s0: self.s0,
                coeffs: s,
            },
            Jet {
                s0: self.s0,
                coeffs: c,
            },
        )
    }

    /// `(sinh a, cosh a)` from the coupled recurrence.
    pub fn sinh_cosh(&self) -> (Jet, Jet) {
        let a = &self.coeffs;
        let n = a.len();
        let mut s = Vec::with_capacity(n);
        let mut c = Vec::with_capacity(n);
        s.push(math::sinh(a[0]));
        c.push(math::cosh(a[0]));
        for k in 1..n {
            let mut ds = 0.0;
            let mut dc = 0.0;
            for j in 1..=k {
                let w = j as f64 * a[j];
                ds += w * c[k - j];
                dc += w * s[k - j];
            }
            s.push(ds / k as f64);
            c.push(dc / k as f64);
        }
        (
            Jet {
                s0: self.s0,
                coeffs: s,
            },
            Jet {
                s0: self.s0,
                coeffs: c,
            },
        )
    }

    pub fn sin(&self) -> Jet {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Jet {
        self.sin_cos().1
    }

    pub fn sinh(&self) -> Jet {
        self.sinh_cosh().0
    }

    pub fn cosh(&self) -> Jet {
        self.sinh_cosh().1
    }

    /// Integer power by repeated squaring; negative exponents divide.
    pub fn powi(&self, n: i64) -> Result<Jet, DomainError> {
        let mut base = self.clone();
        let mut acc = self.lift(1.0);
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            Ok(acc)
        }
    }

    /// `self ^ exponent`.
    ///
    /// A constant integral exponent uses [`Jet::powi`] and accepts any base.
    /// Everything else goes through `exp(exponent · ln(self))`, which needs a
    /// positive base.
    pub fn pow(&self, exponent: &Jet) -> Result<Jet, DomainError> {
        let e0 = exponent.value();
        if exponent.is_constant() && e0 == math::trunc(e0) && e0.abs() <= i32::MAX as f64 {
            return self.powi(e0 as i64);
        }
        if !(self.value() > 0.0) {
            return Err(DomainError::Power {
                base: self.value(),
                exponent: e0,
            });
        }
        Ok((exponent * &self.ln()?).exp())
    }

    /// Substitutes `inner` for the offset `s - s0` of this series.
    ///
    /// `inner` must vanish at its base point; the result is the Taylor
    /// series of `f(s0 + inner(σ))` at `inner`'s base point, truncated to
    /// `inner`'s order.
    pub fn compose(&self, inner: &Jet) -> Jet {
        debug_assert!(
            inner.value() == 0.0,
            "composition needs a zero-valued inner series"
        );
        let order = inner.order();
        let mut acc = Jet::constant(0.0, inner.s0, order);
        for &c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc.coeffs[0] += c;
        }
        acc
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        self.cauchy(rhs)
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul<f64> for &Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale(rhs)
    }
}

impl Add<f64> for &Jet {
    type Output = Jet;
    fn add(self, rhs: f64) -> Jet {
        let mut out = self.clone();
        out.coeffs[0] += rhs;
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Jet> for Jet {
            type Output = Jet;
            fn $method(self, rhs: &Jet) -> Jet {
                (&self).$method(rhs)
            }
        }
        impl $tr<Jet> for &Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale(rhs)
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(mut self, rhs: f64) -> Jet {
        self.coeffs[0] += rhs;
        self
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

/// Central-difference estimate of `f⁽ᵏ⁾(s0)` for `k ∈ 1..=4`, error `O(h²)`.
///
/// This is an independent cross-check for jet derivatives; it evaluates `f`
/// only at plain reals.
pub fn finite_difference_oracle(f: impl Fn(f64) -> f64, s0: f64, k: usize, h: f64) -> f64 {
    match k {
        1 => (f(s0 + h) - f(s0 - h)) / (2.0 * h),
        2 => (f(s0 + h) - 2.0 * f(s0) + f(s0 - h)) / (h * h),
        3 => {
            (f(s0 + 2.0 * h) - 2.0 * f(s0 + h) + 2.0 * f(s0 - h) - f(s0 - 2.0 * h))
                / (2.0 * h * h * h)
        }
        4 => {
            (f(s0 + 2.0 * h) - 4.0 * f(s0 + h) + 6.0 * f(s0) - 4.0 * f(s0 - h) + f(s0 - 2.0 * h))
                / (h * h * h * h)
        }
        _ => panic!("finite-difference oracle supports derivative orders 1..=4, got {k}"),
    }
}

/// Richardson extrapolation of [`finite_difference_oracle`] over `levels`
/// step halvings, starting at `h`. Each level removes one more even power of
/// the step from the truncation error.
pub fn richardson_derivative(
    f: impl Fn(f64) -> f64,
    s0: f64,
    k: usize,
    h: f64,
    levels: usize,
) -> f64 {
    let levels = levels.max(1);
    let mut table: Vec<f64> = (0..levels)
        .map(|i| finite_difference_oracle(&f, s0, k, h / (1u64 << i) as f64))
        .collect();
    let mut factor = 4.0;
    for _ in 1..levels {
        for i in 0..table.len() - 1 {
            table[i] = (factor * table[i + 1] - table[i]) / (factor - 1.0);
        }
        table.pop();
        factor *= 4.0;
    }
    table[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn assert_coeffs(j: &Jet, expected: &[f64], eps: f64) {
        assert_eq!(j.coeffs().len(), expected.len(), "{j:?}");
        for (a, b) in j.coeffs().iter().zip(expected) {
            assert_abs_diff_eq!(*a, *b, epsilon = eps);
        }
    }

    #[test]
    fn variable_jets() {
        assert_eq!(Jet::variable(2.0, 3).coeffs(), &[2.0, 1.0, 0.0, 0.0]);
        assert_eq!(Jet::variable(0.0, 1).coeffs(), &[0.0, 1.0]);
        assert_eq!(
            Jet::variable(-1.5, 5).coeffs(),
            &[-1.5, 1.0, 0.0, 0.0, 0.0, 0.0]
        );
    }

    #[test]
    fn arithmetic_examples() {
        let x = Jet::variable(0.0, 2);
        let one_plus = &x + 1.0;
        assert_coeffs(&(&one_plus * &one_plus), &[1.0, 2.0, 1.0], 0.0);

        let f = Jet::from_coeffs(0.0, vec![2.0, 3.0, 5.0]);
        assert_coeffs(&f.checked_div(&f).unwrap(), &[1.0, 0.0, 0.0], 1e-15);

        let z = Jet::from_coeffs(0.0, vec![0.0, 1.0, 0.0]);
        assert_eq!(z.checked_div(&z), Err(DomainError::DivisionByZero));
    }

    #[test]
    fn elementary_examples() {
        let x = Jet::variable(0.0, 3);
        assert_coeffs(&x.exp(), &[1.0, 1.0, 0.5, 1.0 / 6.0], 1e-15);
        let x = Jet::variable(0.0, 4);
        assert_coeffs(&x.sinh(), &[0.0, 1.0, 0.0, 1.0 / 6.0, 0.0], 1e-15);
        let x = Jet::variable(4.0, 2);
        assert_coeffs(&x.sqrt().unwrap(), &[2.0, 0.25, -0.015625], 1e-15);
    }

    #[test]
    fn elementary_domain_errors() {
        let x = Jet::variable(0.0, 2);
        assert_eq!(x.sqrt(), Err(DomainError::SqrtOfNonPositive(0.0)));
        assert!(matches!(
            (-&x + -1.0).ln(),
            Err(DomainError::LnOfNonPositive(_))
        ));
        let half = x.lift(0.5);
        assert!(matches!(
            (-&x + -1.0).pow(&half),
            Err(DomainError::Power { .. })
        ));
    }

    #[test]
    fn known_series() {
        let x = Jet::variable(0.0, 5);
        assert_coeffs(&x.cos(), &[1.0, 0.0, -0.5, 0.0, 1.0 / 24.0, 0.0], 1e-15);
        assert_coeffs(
            &x.sin(),
            &[0.0, 1.0, 0.0, -1.0 / 6.0, 0.0, 1.0 / 120.0],
            1e-15,
        );
        assert_coeffs(&x.cosh(), &[1.0, 0.0, 0.5, 0.0, 1.0 / 24.0, 0.0], 1e-15);
        // ln(1+x) = x - x²/2 + x³/3 - ...
        let l = (&x + 1.0).ln().unwrap();
        assert_coeffs(&l, &[0.0, 1.0, -0.5, 1.0 / 3.0, -0.25, 0.2], 1e-15);
        // 1/(1-x)
        let g = (-&x + 1.0).recip().unwrap();
        assert_coeffs(&g, &[1.0; 6], 1e-15);
    }

    #[test]
    fn integer_and_real_powers() {
        let x = Jet::variable(-2.0, 3);
        // x³ at -2: -8, 12, -6, 1
        assert_coeffs(&x.powi(3).unwrap(), &[-8.0, 12.0, -6.0, 1.0], 1e-12);
        let three = x.lift(3.0);
        assert_coeffs(&x.pow(&three).unwrap(), &[-8.0, 12.0, -6.0, 1.0], 1e-12);
        // x^-1 at -2
        assert_coeffs(&x.powi(-1).unwrap(), &[-0.5, -0.25, -0.125, -0.0625], 1e-15);
        // x^0.5 at 4 through exp/ln agrees with sqrt
        let y = Jet::variable(4.0, 4);
        let half = y.lift(0.5);
        let a = y.pow(&half).unwrap();
        let b = y.sqrt().unwrap();
        assert_coeffs(&a, b.coeffs(), 1e-14);
        assert_eq!(
            Jet::variable(0.0, 2).powi(-1),
            Err(DomainError::DivisionByZero)
        );
    }

    #[test]
    fn differentiate_and_integrate() {
        let x = Jet::variable(0.3, 6);
        let s = x.sin();
        let c = x.cos();
        let ds = s.differentiate();
        assert_eq!(ds.order(), 5);
        assert_coeffs(&ds, c.truncate(5).coeffs(), 1e-15);
        let back = ds.integrate();
        assert_abs_diff_eq!(back.value(), 0.0);
        for k in 1..=6 {
            assert_abs_diff_eq!(back.coeffs()[k], s.coeffs()[k], epsilon = 1e-15);
        }
        assert_abs_diff_eq!(s.derivative(3), -libm::cos(0.3), epsilon = 1e-14);
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = Jet::variable(1.0, 5);
        let b = Jet::variable(1.0, 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!(a.checked_div(&b).unwrap().order(), 2);
    }

    #[test]
    fn compose_matches_direct_expansion() {
        // exp expanded at 0.2, evaluated at 0.2 + (σ - 0.7) * 2 around σ = 0.7,
        // equals exp(0.2 + 2(σ - 0.7)).
        let outer = Jet::variable(0.2, 6).exp();
        let inner = Jet::from_coeffs(0.7, vec![0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let composed = outer.compose(&inner);
        let direct = (&(&Jet::variable(0.7, 6) * 2.0) + (0.2 - 1.4)).exp();
        assert_coeffs(&composed, direct.coeffs(), 1e-13);
        assert_eq!(composed.base_point(), 0.7);
    }

    #[test]
    fn finite_difference_examples() {
        let fd = finite_difference_oracle(libm::sinh, 0.0, 1, 1e-4);
        assert_abs_diff_eq!(fd, 1.0, epsilon = 1e-8);
        let fd = finite_difference_oracle(|s| s * s, 3.0, 2, 1e-3);
        assert_abs_diff_eq!(fd, 2.0, epsilon = 1e-6);
        let fd = finite_difference_oracle(libm::sin, 0.0, 3, 1e-2);
        assert_abs_diff_eq!(fd, -1.0, epsilon = 1e-3);
    }

    #[test]
    fn richardson_beats_plain_central_differences() {
        let plain = finite_difference_oracle(|s| libm::sin(5.0 * s), 0.3, 4, 1e-2);
        let rich = richardson_derivative(|s| libm::sin(5.0 * s), 0.3, 4, 2e-2, 3);
        let exact = 625.0 * libm::sin(1.5);
        assert!((rich - exact).abs() < (plain - exact).abs());
        assert!((rich - exact).abs() / exact.abs() < 1e-7);
    }

    fn small_jet(order: usize) -> impl Strategy<Value = Jet> {
        prop::collection::vec(-3.0f64..3.0, order + 1).prop_map(|c| Jet::from_coeffs(0.0, c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_jet(6), b in small_jet(6), c in small_jet(6)) {
            let ab = &a * &b;
            let ba = &b * &a;
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            for k in 0..=6 {
                prop_assert!((ab.coeffs()[k] - ba.coeffs()[k]).abs() < 1e-14);
                prop_assert!((lhs.coeffs()[k] - rhs.coeffs()[k]).abs() < 1e-13);
            }
        }

        #[test]
        fn pythagorean_identity(s0 in -10.0f64..10.0, scale in 0.1f64..3.0) {
            let x = &Jet::variable(s0, 8) * scale;
            let (s, c) = x.sin_cos();
            let one = &(&s * &s) + &(&c * &c);
            prop_assert!((one.value() - 1.0).abs() < 1e-12);
            for k in 1..=8 {
                prop_assert!(one.coeffs()[k].abs() < 1e-12);
            }
        }

        #[test]
        fn exp_ln_inverse(s0 in 0.1f64..5.0) {
            let x = Jet::variable(s0, 7);
            let y = x.ln().unwrap().exp();
            // ln's coefficients grow like s0^-k, and so does the rounding error.
            for k in 0..=7 {
                let tol = 1e-13 * s0.recip().powi(k as i32).max(1.0);
                prop_assert!((y.coeffs()[k] - x.coeffs()[k]).abs() < tol);
            }
        }
    }
}
