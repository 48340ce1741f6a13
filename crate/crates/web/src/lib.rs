//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export returns a flat row-major `Float64Array`; the page knows the
//! column layout. Missing values are `NaN`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use wasm_bindgen::prelude::*;

use clamped_plate::bounds::{bounds_row, lambda3};
use clamped_plate::eigencurve::rho;
use clamped_plate::greens::{greens_eval, GreensKernel};

/// Upper limits on request sizes so a slider cannot freeze the tab.
const MAX_STEPS: usize = 2000;
const MAX_GRID: usize = 400;

fn grid(min: f64, max: f64, steps: usize) -> impl Iterator<Item = f64> {
    (0..=steps).map(move |i| min + (max - min) * i as f64 / steps as f64)
}

fn check_steps(steps: usize, limit: usize) -> Result<(), String> {
    if steps == 0 || steps > limit {
        return Err(format!("steps must be in 1..={limit}, got {steps}"));
    }
    Ok(())
}

/// Rows `(α, ρ₁, …, ρ_n)`.
pub fn curve_rows(alpha_min: f64, alpha_max: f64, steps: usize, n_max: usize) -> Result<Vec<f64>, String> {
    check_steps(steps, MAX_STEPS)?;
    if !(0.0 <= alpha_min && alpha_min < alpha_max) || !alpha_max.is_finite() {
        return Err(format!("need 0 <= alpha_min < alpha_max, got {alpha_min}, {alpha_max}"));
    }
    if !(1..=4).contains(&n_max) {
        return Err(format!("n_max must be in 1..=4, got {n_max}"));
    }
    let mut out = Vec::with_capacity((steps + 1) * (n_max + 1));
    for alpha in grid(alpha_min, alpha_max, steps) {
        out.push(alpha);
        for n in 1..=n_max {
            out.push(rho(n, alpha).map_err(|e| e.to_string())?.rho);
        }
    }
    Ok(out)
}

/// Rows `(h, λ₁, λ₂, λ₃, ν₁, l2 bound)`.
pub fn bound_rows(h_min: f64, h_max: f64, steps: usize) -> Result<Vec<f64>, String> {
    check_steps(steps, MAX_STEPS)?;
    if !(0.0 < h_min && h_min <= h_max) || !h_max.is_finite() {
        return Err(format!("need 0 < h_min <= h_max, got {h_min}, {h_max}"));
    }
    let mut out = Vec::with_capacity((steps + 1) * 6);
    for h in grid(h_min, h_max, steps) {
        let r = bounds_row(h).map_err(|e| format!("h = {h}: {e}"))?;
        out.extend([h, r.lambda1, r.lambda2, r.lambda3, r.nu1, r.neg_l2.unwrap_or(f64::NAN)]);
    }
    Ok(out)
}

/// `G(x, y)` on `(grid + 1)²` points, `x` varying slowest.
pub fn green_values(a: f64, grid_size: usize) -> Result<Vec<f64>, String> {
    check_steps(grid_size, MAX_GRID)?;
    let kernel = GreensKernel::new(a).map_err(|e| e.to_string())?;
    let pts: Vec<f64> = grid(0.0, 1.0, grid_size).collect();
    Ok(pts
        .iter()
        .flat_map(|&x| pts.iter().map(move |&y| greens_eval(&kernel, x, y)))
        .collect())
}

#[wasm_bindgen]
pub fn eigencurves(alpha_min: f64, alpha_max: f64, steps: usize, n_max: usize) -> Result<Vec<f64>, JsError> {
    curve_rows(alpha_min, alpha_max, steps, n_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bounds_curve(h_min: f64, h_max: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    bound_rows(h_min, h_max, steps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn greens_grid(a: f64, grid_size: usize) -> Result<Vec<f64>, JsError> {
    green_values(a, grid_size).map_err(|e| JsError::new(&e))
}

/// `λ₃(h)` alone, for the readout next to the plot.
#[wasm_bindgen]
pub fn third_lower_bound(h: f64) -> f64 {
    lambda3(h).unwrap_or(f64::NAN)
}
