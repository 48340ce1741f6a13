//! Two-sided bounds on the first clamped-plate eigenvalue `μ₁(h)` of the
//! rectangle `[0, h] × [0, 1]`, the lower bound `λ₃ ≤ μ₃`, the resulting
//! bounds on the negative part of the groundstate, and their large-`h`
//! expansions.
//!
//! Lower bounds come from `Δ² ≥ H(h, π²) ⊗ 1 + 1 ⊗ H(1, π²h⁻²) − 2π⁴h⁻²`,
//! so each is a sum of two eigencurve values. The upper bound `ν₁` is the
//! energy of the best separable trial function `f(x)g(y)`, whose factors
//! are groundstates of `H(h, α_g)` and `H(1, α_f)` coupled by
//! `α_f = ½ρ₁′(h²α_g)h⁻²` and `α_g = ½ρ₁′(α_f)`.

use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

use crate::eigencurve::{beam_constants, rho, rho_asymptotic, rho_prime, Regime};
use crate::error::{Error, Result};
use crate::numerics::roots::{find_root, sign_changes, Bracket, TOL_ABS, TOL_REL};

const PI2: f64 = PI * PI;
const PI4: f64 = PI2 * PI2;

/// Nodes of the scan for additional fixed points.
pub const FIXED_POINT_SCAN: usize = 64;

/// Arguments below this use the linear expansion of `ρ₁`.
const SMALL_ARG: f64 = 1e-8;

/// `ρₙ(α)` with the linear expansion for tiny arguments.
fn rho_value(n: usize, alpha: f64) -> Result<f64> {
    if alpha < SMALL_ARG {
        return Ok(rho_asymptotic(n, alpha, Regime::Small)?.0);
    }
    Ok(rho(n, alpha)?.rho)
}

fn rho_slope(n: usize, alpha: f64) -> Result<f64> {
    if alpha < SMALL_ARG {
        return Ok(rho_asymptotic(n, alpha, Regime::Small)?.1);
    }
    rho_prime(n, alpha)
}

fn check_h(h: f64) -> Result<()> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("h must be positive, got {h}")))
    }
}

/// `ρₘ(π²h²)h⁻⁴ + ρₙ(π²h⁻²) − 2π⁴h⁻²`, the bound attached to the product of
/// the `m`-th mode in `x` and the `n`-th mode in `y`.
fn tensor_branch(h: f64, m: usize, n: usize) -> Result<f64> {
    check_h(h)?;
    let h2 = h * h;
    Ok(rho_value(m, PI2 * h2)? / (h2 * h2) + rho_value(n, PI2 / h2)? - 2.0 * PI4 / h2)
}

/// `λₙ(h) = ρₙ(π²h²)h⁻⁴ + ρ₁(π²h⁻²) − 2π⁴h⁻²`.
///
/// `λ₁ ≤ μ₁`. For `n ≥ 2` this is the value along the `x`-direction
/// branch only; it is what is plotted as `λ₂`, not a proven bound on `μ₂`.
pub fn lambda_n(h: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("mode index must be >= 1".into()));
    }
    tensor_branch(h, n, 1)
}

/// The two candidates for `λ₃`: the `(1, 2)` branch (second mode across
/// the strip) and the `(3, 1)` branch (third mode along it).
pub fn lambda3_branches(h: f64) -> Result<(f64, f64)> {
    Ok((tensor_branch(h, 1, 2)?, tensor_branch(h, 3, 1)?))
}

/// `λ₃(h) ≤ μ₃(h)`, the smaller of the two [`lambda3_branches`].
pub fn lambda3(h: f64) -> Result<f64> {
    let (a, b) = lambda3_branches(h)?;
    Ok(a.min(b))
}

/// Solution of the separable fixed-point problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HartreeBound {
    pub nu1: f64,
    pub alpha_g: f64,
    pub alpha_f: f64,
    /// Number of sign changes of the fixed-point residual seen by the scan.
    pub root_count: usize,
}

/// `ρ₁′(½ρ₁′(h²α)h⁻²) − 2α`; positive at `π²`, negative at `d₁c₁²`.
pub fn fixed_point_residual(h: f64, alpha: f64) -> Result<f64> {
    let h2 = h * h;
    let alpha_f = 0.5 * rho_slope(1, h2 * alpha)? / h2;
    Ok(rho_slope(1, alpha_f)? - 2.0 * alpha)
}

/// Energy of the separable state at `α_g`, with `α_f` from the coupling.
fn hartree_energy_at(h: f64, alpha_g: f64) -> Result<(f64, f64)> {
    let h2 = h * h;
    let arg = h2 * alpha_g;
    let (rho_g, slope_g) = if arg < SMALL_ARG {
        rho_asymptotic(1, arg, Regime::Small)?
    } else {
        let (p, d) = crate::eigencurve::rho_with_derivative(1, arg)?;
        (p.rho, d)
    };
    let alpha_f = 0.5 * slope_g / h2;
    let nu = rho_g / (h2 * h2) + rho_value(1, alpha_f)? - slope_g / h2 * alpha_g;
    Ok((nu, alpha_f))
}

/// The upper bound `ν₁(h) ≥ μ₁(h)`.
///
/// Roots of [`fixed_point_residual`] are bracketed on `[π², d₁c₁²]` by a
/// uniform scan and refined with Brent's method. If more than one is found
/// the one with the smallest energy is returned.
pub fn nu1(h: f64) -> Result<HartreeBound> {
    check_h(h)?;
    let k = beam_constants(1)?;
    let lo = PI2;
    let hi = k.d_n * k.c_n * k.c_n;

    let mut failure = None;
    let mut residual = |a: f64| match fixed_point_residual(h, a) {
        Ok(v) => v,
        Err(e) => {
            failure.get_or_insert(e);
            f64::NAN
        }
    };
    let mut brackets = sign_changes(&mut residual, lo, hi, FIXED_POINT_SCAN);
    if brackets.is_empty() {
        // an exact zero at an end point is skipped by the scan
        match Bracket::new(&mut residual, lo, hi) {
            Ok(b) => brackets.push(b),
            Err(_) => {
                return Err(failure.take().unwrap_or(Error::NoFixedPoint { h }));
            }
        }
    }
    if let Some(e) = failure.take() {
        return Err(e);
    }

    let mut best: Option<HartreeBound> = None;
    for b in &brackets {
        let alpha_g = find_root(|a| fixed_point_residual(h, a).unwrap_or(f64::NAN), *b, TOL_ABS, TOL_REL)?;
        let (nu, alpha_f) = hartree_energy_at(h, alpha_g)?;
        if best.is_none_or(|cur| nu < cur.nu1) {
            best = Some(HartreeBound {
                nu1: nu,
                alpha_g,
                alpha_f,
                root_count: brackets.len(),
            });
        }
    }
    best.ok_or(Error::NoFixedPoint { h })
}

/// Bounds on `‖f₁⁻‖₂/‖f₁‖₂` and `‖f₁⁻‖∞/‖f₁‖₂` for the sign-normalised
/// groundstate `f₁`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NegPartBounds {
    pub l2: f64,
    pub linf: f64,
}

/// Negativity bounds from already computed `λ₁, λ₃, ν₁`.
pub fn neg_part_from(h: f64, lambda1: f64, lambda3: f64, nu1: f64) -> Result<NegPartBounds> {
    if !(lambda3 > nu1) {
        return Err(Error::VacuousBound { h, lambda3, nu1 });
    }
    let gap = (nu1 - lambda1).max(0.0).sqrt();
    let denom = (lambda3 - nu1).sqrt();
    Ok(NegPartBounds {
        l2: gap / denom,
        linf: gap * lambda3.powf(0.25) / (2.0 * denom),
    })
}

/// `(ν₁ − λ₁)^½ / (λ₃ − ν₁)^½` and `(ν₁ − λ₁)^½ λ₃^¼ / (2(λ₃ − ν₁)^½)`.
pub fn neg_part_bounds(h: f64) -> Result<NegPartBounds> {
    let l1 = lambda_n(h, 1)?;
    let l3 = lambda3(h)?;
    let nu = nu1(h)?.nu1;
    neg_part_from(h, l1, l3, nu)
}

/// All bounds at one `h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsRow {
    pub h: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
    pub nu1: f64,
    pub alpha_g: f64,
    pub alpha_f: f64,
    /// `100(ν₁ − λ₁)/λ₁`, a guaranteed relative error on `μ₁`.
    pub pct_err: f64,
    /// `None` when `λ₃ ≤ ν₁`.
    pub neg_l2: Option<f64>,
    pub neg_linf: Option<f64>,
    pub root_count: usize,
}

pub fn bounds_row(h: f64) -> Result<BoundsRow> {
    let lambda1 = lambda_n(h, 1)?;
    let lambda2 = lambda_n(h, 2)?;
    let lambda3 = lambda3(h)?;
    let hb = nu1(h)?;
    let neg = neg_part_from(h, lambda1, lambda3, hb.nu1).ok();
    Ok(BoundsRow {
        h,
        lambda1,
        lambda2,
        lambda3,
        nu1: hb.nu1,
        alpha_g: hb.alpha_g,
        alpha_f: hb.alpha_f,
        pct_err: 100.0 * (hb.nu1 - lambda1) / lambda1,
        neg_l2: neg.map(|n| n.l2),
        neg_linf: neg.map(|n| n.linf),
        root_count: hb.root_count,
    })
}

/// Truncated large-`h` expansions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticReport {
    pub h: f64,
    /// `c⁴ + 2dc²π²h⁻²`
    pub mu1_asym: f64,
    /// `mu1_asym + 4√2π²d^½c·h⁻³`
    pub nu1_asym_h3: f64,
    /// `mu1_asym + 4√2π³h⁻³`
    pub lambda1_asym_h3: f64,
    /// `c⁴ + (2dc²π² + 16π⁴)h⁻²`
    pub lambda3_asym: f64,
    /// `2^¼(d^½c − π)^½/(2π)·h^−½`
    pub neg_l2_asym: f64,
    /// `neg_l2_asym · c/2`
    pub neg_linf_asym: f64,
}

/// Coefficients `(ν₁, λ₁)` of `h⁻³` in the large-`h` expansions.
pub fn cubic_coefficients() -> Result<(f64, f64)> {
    let k = beam_constants(1)?;
    Ok((
        4.0 * SQRT_2 * PI2 * k.d_n.sqrt() * k.c_n,
        4.0 * SQRT_2 * PI2 * PI,
    ))
}

pub fn asymptotics(h: f64) -> Result<AsymptoticReport> {
    check_h(h)?;
    let k = beam_constants(1)?;
    let (c, d) = (k.c_n, k.d_n);
    let c2 = c * c;
    let h2 = h * h;
    let h3 = h2 * h;
    let mu1 = c2 * c2 + 2.0 * d * c2 * PI2 / h2;
    let (nu_coeff, lambda_coeff) = cubic_coefficients()?;
    let neg_l2 = 2f64.powf(0.25) * (d.sqrt() * c - PI).sqrt() / (2.0 * PI) / h.sqrt();
    Ok(AsymptoticReport {
        h,
        mu1_asym: mu1,
        nu1_asym_h3: mu1 + nu_coeff / h3,
        lambda1_asym_h3: mu1 + lambda_coeff / h3,
        lambda3_asym: c2 * c2 + (2.0 * d * c2 * PI2 + 16.0 * PI4) / h2,
        neg_l2_asym: neg_l2,
        neg_linf_asym: neg_l2 * c / 2.0,
    })
}
