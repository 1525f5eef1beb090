//! Point-symmetry characteristics and their numerical verification.
//!
//! The recurrence admits the generators `X_k = alpha_n x_n d/dx_n` with
//! `alpha_n = exp(2 pi i k n / 10)` for `k` in `{1,2,3,4,6,7,8,9}`. This module
//! checks the linearized symmetry condition
//!
//! ```text
//! Q(n+10, Omega) - sum_{m=0..4} Q(n+2m, x_{n+2m}) dOmega/dx_{n+2m} = 0,   Q(n, x) = alpha_n x,
//! ```
//!
//! at sample points using hand-derived partial derivatives of `Omega`, and
//! exposes the canonical coordinate and the invariant it produces.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Double-precision complex scalar.
pub type ComplexF = Complex64;

/// Values of `k` whose characteristic solves `alpha_n + alpha_{n+2} + ... + alpha_{n+8} = 0`.
pub const ADMISSIBLE_K: [u32; 8] = [1, 2, 3, 4, 6, 7, 8, 9];

/// `Q(n, x) = alpha_n x` with `alpha_n = exp(i 2 k pi n / 10)`.
///
/// Any integer `k` is accepted so that `k = 5` and `k = 10` can serve as
/// negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryCharacteristic {
    pub k: u32,
}

impl SymmetryCharacteristic {
    pub fn new(k: u32) -> Self {
        SymmetryCharacteristic { k }
    }

    pub fn is_admissible(&self) -> bool {
        ADMISSIBLE_K.contains(&self.k)
    }

    pub fn alpha(&self, n: u64) -> ComplexF {
        // Reduce the phase exactly before converting to floating point.
        let phase = ((self.k as u64 % 10) * (n % 10)) % 10;
        ComplexF::from_polar(1.0, 2.0 * PI * phase as f64 / 10.0)
    }

    pub fn q(&self, n: u64, x: f64) -> ComplexF {
        self.alpha(n) * x
    }

    /// Terms `gamma_n` and `beta_n` of `Q = gamma_n x^2 + alpha_n x + beta_n`;
    /// both vanish for this family.
    pub fn quadratic_coefficients(&self, n: u64) -> (ComplexF, ComplexF, ComplexF) {
        (ComplexF::new(0.0, 0.0), self.alpha(n), ComplexF::new(0.0, 0.0))
    }
}

/// `|alpha_n + alpha_{n+2} + alpha_{n+4} + alpha_{n+6} + alpha_{n+8}|`.
pub fn alpha_sum_residual(k: u32, n: u64) -> f64 {
    let ch = SymmetryCharacteristic::new(k);
    (0..5).map(|m| ch.alpha(n + 2 * m)).sum::<ComplexF>().norm()
}

/// Value of `Omega = x_n / (A + B x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8})` and its
/// partial derivatives with respect to the five arguments, at the point
/// `evens = [x_n, x_{n+2}, x_{n+4}, x_{n+6}, x_{n+8}]`.
///
/// With `D = A + B P`:
/// `dOmega/dx_n = A / D^2` and `dOmega/dx_{n+2m} = -x_n B P / (x_{n+2m} D^2)`
/// for `m >= 1`, the latter written as `-x_n^2 B prod_{l != m} x_{n+2l} / D^2`
/// so that zero arguments stay finite.
pub fn omega_with_partials(evens: [f64; 5], a: f64, b: f64) -> (f64, [f64; 5]) {
    let product: f64 = evens.iter().product();
    let d = a + b * product;
    let d2 = d * d;
    let x0 = evens[0];
    let partials = std::array::from_fn(|m| {
        if m == 0 {
            a / d2
        } else {
            let others: f64 = (0..5).filter(|&l| l != m).map(|l| evens[l]).product();
            -b * x0 * others / d2
        }
    });
    (x0 / d, partials)
}

/// Modulus of the linearized symmetry condition for characteristic `k`,
/// evaluated at the window `point = x_n..x_{n+9}`.
pub fn symmetry_residual(k: u32, point: &[Rational], a: &Rational, b: &Rational, n: u64) -> Result<f64> {
    if point.len() != 10 {
        return Err(Error::InvalidInput(format!(
            "symmetry point must hold 10 terms, got {}",
            point.len()
        )));
    }
    let denom = a + b * (0..5).map(|m| &point[2 * m]).product::<Rational>();
    if denom.is_zero() {
        return Err(Error::forbidden(10));
    }
    let evens: [f64; 5] = std::array::from_fn(|m| point[2 * m].to_f64());
    let (omega, partials) = omega_with_partials(evens, a.to_f64(), b.to_f64());
    let ch = SymmetryCharacteristic::new(k);
    let image = ch.q(n + 10, omega);
    let action: ComplexF = (0..5).map(|m| ch.q(n + 2 * m as u64, evens[m]) * partials[m]).sum();
    Ok((image - action).norm())
}

/// Canonical coordinate `S_n` of a characteristic, defined by
/// `S_n alpha_n = ln|x_n|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonicalCoordinate {
    pub characteristic: SymmetryCharacteristic,
}

impl CanonicalCoordinate {
    pub fn new(k: u32) -> Self {
        CanonicalCoordinate {
            characteristic: SymmetryCharacteristic::new(k),
        }
    }

    /// `S_n` at `x_n`; `None` for `x_n = 0`.
    pub fn value(&self, n: u64, x: f64) -> Option<ComplexF> {
        if x == 0.0 {
            return None;
        }
        Some(ComplexF::new(x.abs().ln(), 0.0) / self.characteristic.alpha(n))
    }

    /// `exp(alpha_n S_n)`, which recovers `|x_n|`.
    pub fn invert(&self, n: u64, s: ComplexF) -> ComplexF {
        (self.characteristic.alpha(n) * s).exp()
    }
}

/// `F_n = 1 / (x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8})` from the five even-offset
/// terms of a window.
pub fn canonical_invariant(evens: &[Rational; 5]) -> Result<Rational> {
    if let Some(i) = evens.iter().position(Rational::is_zero) {
        return Err(Error::ZeroTerm { index: 2 * i });
    }
    Ok(evens.iter().product::<Rational>().recip().expect("nonzero product"))
}
