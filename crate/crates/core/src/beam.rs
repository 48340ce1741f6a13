//! Clamped-beam modes
//! `gₙ(x) = cosh cₙx − (γₙ/δₙ) sinh cₙx − cos cₙx + (γₙ/δₙ) sin cₙx`
//! on `[0, 1]`, and the separable approximate groundstate built from `g₁`.
//!
//! `γₙ/δₙ → 1` exponentially fast, so the hyperbolic pair is evaluated as
//! `½[(1 − R)e^{cx} + (1 + R)e^{−cx}]` with `1 − R` computed in closed form.
//! That avoids the cancellation between two huge hyperbolic terms for the
//! higher modes.

use std::f64::consts::{PI, SQRT_2};

use crate::eigencurve::{beam_constants, BeamConstants};
use crate::error::{Error, Result};
use crate::numerics::quadrature::{default_rule, DEFAULT_PANELS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamMode {
    pub constants: BeamConstants,
    pub n: usize,
    ratio: f64,
    one_minus_ratio: f64,
    inv_delta_scale: f64,
}

impl BeamMode {
    pub fn new(n: usize) -> Result<Self> {
        let constants = beam_constants(n)?;
        let c = constants.c_n;
        let ratio = constants.gamma_n / constants.delta_n;
        let em = (-c).exp();
        // δ − γ = cos c − sin c − e^{−c}
        let one_minus_ratio = (c.cos() - c.sin() - em) / constants.delta_n;
        // δ = ½e^{c}(1 − e^{−2c} − 2 sin c · e^{−c})
        let inv_delta_scale = 2.0 / (1.0 - em * em - 2.0 * c.sin() * em);
        Ok(BeamMode {
            constants,
            n,
            ratio,
            one_minus_ratio,
            inv_delta_scale,
        })
    }

    pub fn c(&self) -> f64 {
        self.constants.c_n
    }

    /// `((1 − R)e^{cx}, (1 + R)e^{−cx})`
    fn exponential_parts(&self, x: f64) -> (f64, f64) {
        let c = self.c();
        let plus = (c.cos() - c.sin() - (-c).exp()) * self.inv_delta_scale * (c * (x - 1.0)).exp();
        let minus = (1.0 + self.ratio) * (-c * x).exp();
        (plus, minus)
    }

    /// `gₙ⁽ᵏ⁾(x)` for `k = 0..=3`; higher derivatives cycle with factor `cₙ⁴`.
    pub fn derivative(&self, x: f64, order: usize) -> f64 {
        let c = self.c();
        let (p, m) = self.exponential_parts(x);
        let cx = c * x;
        let (s, co) = cx.sin_cos();
        let r = self.ratio;
        let k = order % 4;
        let scale = c.powi(order as i32);
        let value = match k {
            0 => 0.5 * (p + m) - co + r * s,
            1 => 0.5 * (p - m) + s + r * co,
            2 => 0.5 * (p + m) + co - r * s,
            _ => 0.5 * (p - m) - s - r * co,
        };
        scale * value
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.derivative(x, 0)
    }

    /// `1 − γₙ/δₙ`, computed without cancellation.
    pub fn one_minus_ratio(&self) -> f64 {
        self.one_minus_ratio
    }
}

/// `gₙ(x)` for `x ∈ [0, 1]`.
pub fn beam_mode_eval(mode: &BeamMode, x: f64) -> f64 {
    mode.eval(x)
}

/// Quadrature values of `(‖gₙ‖₂, ‖gₙ′‖₂²)`.
pub fn beam_mode_norms(mode: &BeamMode) -> (f64, f64) {
    let rule = default_rule();
    let l2 = rule
        .integrate(|x| mode.eval(x).powi(2), 0.0, 1.0, DEFAULT_PANELS)
        .sqrt();
    let grad_sq = rule.integrate(|x| mode.derivative(x, 1).powi(2), 0.0, 1.0, DEFAULT_PANELS);
    (l2, grad_sq)
}

/// Energy `c⁴ + 2dc²π²h⁻² + π⁴h⁻⁴` of the separable trial function
/// `√2 h^{−½} sin(πx/h) g₁(y)`.
pub fn hartree_energy(h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::InvalidArgument(format!("h must be positive, got {h}")));
    }
    let k = beam_constants(1)?;
    let c2 = k.c_n * k.c_n;
    let pi2 = PI * PI;
    let h2 = h * h;
    Ok(c2 * c2 + 2.0 * k.d_n * c2 * pi2 / h2 + pi2 * pi2 / (h2 * h2))
}

/// `√2 h^{−½} sin(πx/h) g₁(y)` on `[0, h] × [0, 1]`.
pub fn separable_groundstate(h: f64, x: f64, y: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::InvalidArgument(format!("h must be positive, got {h}")));
    }
    let g1 = BeamMode::new(1)?;
    Ok(SQRT_2 / h.sqrt() * (PI * x / h).sin() * g1.eval(y))
}
