//! Eigenvalues `ρₙ(α)` of `H(1, α) = d⁴/dx⁴ − 2α d²/dx²` on `[0, 1]` with
//! clamped ends, their derivatives, the scaling to `H(h, α)` and the
//! small/large-α expansions.
//!
//! An eigenvalue `ρ = β² − α²` corresponds to a root `β > α` of
//!
//! ```text
//! cosh√(β+α)·cos√(β−α) − α/√(β²−α²)·sinh√(β+α)·sin√(β−α) = 1.
//! ```
//!
//! Internally everything is expressed in `a = √(β+α)`, `b = √(β−α)` and the
//! gap `s = β − α = b²`, and the equation is divided through by `cosh a`:
//!
//! ```text
//! E(α, s) = cos b − (α/a)·tanh a·(sin b)/b − sech a = 0.
//! ```
//!
//! Working with the gap keeps `ρ = s(2α + s)` accurate when `α` is huge and
//! `β − α` would otherwise be the difference of two nearly equal numbers.

use std::f64::consts::{PI, SQRT_2};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::roots::{find_root, sign_changes, TOL_ABS, TOL_REL};

const PI2: f64 = PI * PI;

/// Scan resolution for locating eigenvalue brackets.
const SCAN_NODES: usize = 400;
/// Lower end of the gap scan. Every eigenvalue has `s > π²`, and `E < 0`
/// on `(0, π²]`, so starting here skips the spurious zero of `E` at `s = 0`.
const SCAN_START: f64 = 1.0;
const SCAN_EXPANSIONS: usize = 6;
/// `β + α` above which [`characteristic`] reports the cosh-scaled defect.
const RAW_LIMIT: f64 = 700.0;

/// Constants of the `n`-th clamped-beam mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BeamConstants {
    pub n: usize,
    /// `n`-th positive root of `cosh c · cos c = 1`.
    pub c_n: f64,
    /// Gradient-energy coefficient, `‖gₙ′‖² = dₙ cₙ²`.
    pub d_n: f64,
    /// `cosh cₙ − cos cₙ`
    pub gamma_n: f64,
    /// `sinh cₙ − sin cₙ`
    pub delta_n: f64,
}

const CACHE_SIZE: usize = 64;

/// Constants for mode `n ≥ 1`. The first 64 are computed once and cached.
pub fn beam_constants(n: usize) -> Result<BeamConstants> {
    if n == 0 {
        return Err(Error::InvalidArgument("mode index must be >= 1".into()));
    }
    static CACHE: OnceLock<Vec<BeamConstants>> = OnceLock::new();
    if n <= CACHE_SIZE {
        let cache = CACHE.get_or_init(|| {
            (1..=CACHE_SIZE)
                .map(|k| compute_beam_constants(k).expect("beam constant bracket"))
                .collect()
        });
        return Ok(cache[n - 1]);
    }
    compute_beam_constants(n)
}

fn compute_beam_constants(n: usize) -> Result<BeamConstants> {
    let lo = (n as f64 + 0.25) * PI;
    let hi = (n as f64 + 0.75) * PI;
    // cosh c · cos c − 1 divided by cosh c
    let f = |c: f64| c.cos() - 1.0 / c.cosh();
    let bracket = crate::numerics::Bracket::new(f, lo, hi)?;
    let c = find_root(f, bracket, 1e-15, 1e-16)?;

    let th = c.tanh();
    let tn = c.tan();
    let d = if tn.abs() > 10.0 {
        let r = th / tn;
        (2.0 * th - c * r - c) / (c * r - c)
    } else {
        (2.0 * th * tn - c * th - c * tn) / (c * th - c * tn)
    };
    Ok(BeamConstants {
        n,
        c_n: c,
        d_n: d,
        gamma_n: c.cosh() - c.cos(),
        delta_n: c.sinh() - c.sin(),
    })
}

/// A solved point on the `n`-th eigencurve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigencurveResult {
    pub n: usize,
    pub alpha: f64,
    /// Root of the characteristic equation, `β = α + gap`.
    pub beta: f64,
    /// `β − α`, the variable the solver actually works in.
    pub gap: f64,
    /// `ρₙ(α) = β² − α² = gap·(2α + gap)`.
    pub rho: f64,
    /// Cosh-scaled characteristic defect at the returned root.
    pub residual: f64,
}

/// Which end of the α axis an expansion describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Small,
    Large,
}

fn sinc(b: f64) -> f64 {
    if b.abs() < 1e-4 {
        1.0 - b * b / 6.0
    } else {
        b.sin() / b
    }
}

/// Scaled defect `E(α, s)`.
fn scaled_defect(alpha: f64, gap: f64) -> f64 {
    let a = (2.0 * alpha + gap).sqrt();
    let b = gap.sqrt();
    let sech = if a > 700.0 { 0.0 } else { 1.0 / a.cosh() };
    b.cos() - (alpha / a) * a.tanh() * sinc(b) - sech
}

/// Partial derivatives `(∂E/∂α, ∂E/∂s)` of the scaled defect.
fn scaled_defect_partials(alpha: f64, gap: f64) -> (f64, f64) {
    let a = (2.0 * alpha + gap).sqrt();
    let b = gap.sqrt();
    let th = a.tanh();
    let sech = if a > 700.0 { 0.0 } else { 1.0 / a.cosh() };
    let s = sinc(b);
    let ds = if b.abs() < 1e-4 {
        -b / 3.0
    } else {
        (b * b.cos() - b.sin()) / (b * b)
    };
    // E treated as a function of independent (α, a, b)
    let e_alpha = -th * s / a;
    let e_a = -alpha * s * (a * sech * sech - th) / (a * a) + sech * th;
    let e_b = -b.sin() - (alpha / a) * th * ds;
    // a² = 2α + s, b² = s
    let g_alpha = e_alpha + e_a / a;
    let g_gap = e_a / (2.0 * a) + e_b / (2.0 * b);
    (g_alpha, g_gap)
}

fn check_alpha_beta(alpha: f64, beta: f64) -> Result<()> {
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidArgument(format!("alpha must be >= 0, got {alpha}")));
    }
    if !(beta > alpha) || !beta.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "beta must exceed alpha, got beta = {beta}, alpha = {alpha}"
        )));
    }
    Ok(())
}

/// Defect of the characteristic equation,
/// `cosh√(β+α)cos√(β−α) − α/√(β²−α²)·sinh√(β+α)sin√(β−α) − 1`.
///
/// For `β + α > 700` the value is divided by `cosh√(β+α)`, which keeps the
/// sign and the roots.
pub fn characteristic(alpha: f64, beta: f64) -> Result<f64> {
    check_alpha_beta(alpha, beta)?;
    let gap = beta - alpha;
    if beta + alpha > RAW_LIMIT {
        return Ok(scaled_defect(alpha, gap));
    }
    let a = (beta + alpha).sqrt();
    let b = gap.sqrt();
    let coupling = if alpha == 0.0 {
        0.0
    } else {
        alpha / (a * b) * a.sinh() * b.sin()
    };
    Ok(a.cosh() * b.cos() - coupling - 1.0)
}

/// The characteristic defect divided by `cosh√(β+α)` for every argument.
pub fn characteristic_scaled(alpha: f64, beta: f64) -> Result<f64> {
    check_alpha_beta(alpha, beta)?;
    Ok(scaled_defect(alpha, beta - alpha))
}

/// Upper end of the initial gap scan for mode `n`.
fn scan_end(n: usize) -> Result<f64> {
    let c = beam_constants(n)?.c_n;
    let m = (n + 1) as f64;
    Ok(m * m * PI2 + 4.0 * c * c)
}

/// The `n`-th eigenvalue of `H(1, α)`.
///
/// The gap `s = β − α` is scanned on a uniform grid covering both the
/// small-α location `s ≈ cₙ²` and the large-α location `s ≈ n²π²`; the
/// `n`-th sign change is refined with Brent's method.
pub fn rho(n: usize, alpha: f64) -> Result<EigencurveResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("mode index must be >= 1".into()));
    }
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidArgument(format!("alpha must be >= 0, got {alpha}")));
    }
    let f = |s: f64| scaled_defect(alpha, s);
    let mut hi = scan_end(n)?;
    for _ in 0..SCAN_EXPANSIONS {
        let brackets = sign_changes(f, SCAN_START, hi, SCAN_NODES);
        if brackets.len() >= n {
            let gap = find_root(f, brackets[n - 1], TOL_ABS, TOL_REL)?;
            return Ok(EigencurveResult {
                n,
                alpha,
                beta: alpha + gap,
                gap,
                rho: gap * (2.0 * alpha + gap),
                residual: scaled_defect(alpha, gap),
            });
        }
        hi *= 2.0;
    }
    Err(Error::RootNotBracketed {
        n,
        alpha,
        scan_lo: SCAN_START,
        scan_hi: hi / 2.0,
    })
}

/// `ρₙ′` at an already solved point, by implicit differentiation of the
/// characteristic equation: `ρ′ = 2ββ′ − 2α` with `β′ = −F_α / F_β`.
pub fn derivative_at(point: &EigencurveResult) -> Result<f64> {
    let (g_alpha, g_gap) = scaled_defect_partials(point.alpha, point.gap);
    let scale = g_alpha.abs().max(1.0);
    if g_gap.abs() < 1e-14 * scale {
        return Err(Error::IllConditioned {
            alpha: point.alpha,
            slope: g_gap,
        });
    }
    // s′ = β′ − 1
    let gap_prime = -g_alpha / g_gap;
    Ok(2.0 * point.gap + 2.0 * point.beta * gap_prime)
}

/// `(ρₙ(α), ρₙ′(α))` from a single root solve.
pub fn rho_with_derivative(n: usize, alpha: f64) -> Result<(EigencurveResult, f64)> {
    let point = rho(n, alpha)?;
    let d = derivative_at(&point)?;
    Ok((point, d))
}

/// `ρₙ′(α)`. Defined for `α ≥ 0`; at `α = 0` it is the one-sided derivative.
pub fn rho_prime(n: usize, alpha: f64) -> Result<f64> {
    rho_with_derivative(n, alpha).map(|(_, d)| d)
}

/// `n`-th eigenvalue of `H(h, α)` on `[0, h]`: `ρₙ(h²α)·h⁻⁴`.
pub fn sigma(h: f64, alpha: f64, n: usize) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::InvalidArgument(format!("h must be positive, got {h}")));
    }
    Ok(rho(n, h * h * alpha)?.rho / h.powi(4))
}

/// Leading terms of `(ρₙ(α), ρₙ′(α))`.
///
/// Small: `(cₙ⁴ + 2dₙcₙ²α, 2dₙcₙ²)`.
/// Large: `(2n²π²α + 4√2n²π²α^½, 2n²π² + 2√2n²π²α^−½)`.
pub fn rho_asymptotic(n: usize, alpha: f64, regime: Regime) -> Result<(f64, f64)> {
    let k = beam_constants(n)?;
    match regime {
        Regime::Small => {
            if !(alpha >= 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "small-alpha expansion needs alpha >= 0, got {alpha}"
                )));
            }
            let c2 = k.c_n * k.c_n;
            let slope = 2.0 * k.d_n * c2;
            Ok((c2 * c2 + slope * alpha, slope))
        }
        Regime::Large => {
            if !(alpha > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "large-alpha expansion needs alpha > 0, got {alpha}"
                )));
            }
            let nn = (n * n) as f64 * PI2;
            let root = alpha.sqrt();
            Ok((
                2.0 * nn * alpha + 4.0 * SQRT_2 * nn * root,
                2.0 * nn + 2.0 * SQRT_2 * nn / root,
            ))
        }
    }
}

/// The large-α sandwich around the `n`-th root, ordered as `(lower, upper)`:
/// `α + n²π² + 2√2n²π²α^−½ + 6n²π²α^−1 ± (5√2/6)n⁴π⁴α^−3/2`.
pub fn beta_sandwich(n: usize, alpha: f64) -> (f64, f64) {
    let nf = n as f64;
    let n2 = nf * nf * PI2;
    let base = alpha + n2 + 2.0 * SQRT_2 * n2 / alpha.sqrt() + 6.0 * n2 / alpha;
    let corr = 5.0 * SQRT_2 / 6.0 * n2 * n2 * alpha.powf(-1.5);
    (base - corr, base + corr)
}
