//! Subcommand bodies. Each returns a [`Table`]; writing it out is the
//! caller's job.

use clamped_plate::bounds::{bounds_row, lambda3, lambda_n, neg_part_from, nu1};
use clamped_plate::eigencurve::rho;
use clamped_plate::greens::{greens_eval, GreensKernel};
use clamped_plate::oracle::oracle_report;

use crate::output::{format_number, Cell, Table};
use crate::CliError;

/// `h` grid of the λ₁/ν₁ table.
pub const BOUNDS_GRID: [f64; 9] = [1.0, 1.2, 1.4, 1.6, 1.8, 2.0, 3.0, 4.0, 5.0];
/// `h` grid of the negativity table.
pub const NEGATIVITY_GRID: [f64; 7] = [1.0, 10.0, 20.0, 40.0, 60.0, 80.0, 100.0];
pub const ORACLE_GRID: [f64; 4] = [1.0, 2.0, 3.0, 5.0];

pub const MAX_CURVES: usize = 4;

fn fmt_h(x: f64) -> String {
    format_number(x, 15)
}

/// `steps + 1` evenly spaced points of `[min, max]`.
pub fn linspace(min: f64, max: f64, steps: usize) -> Vec<f64> {
    (0..=steps)
        .map(|i| {
            if i == steps {
                max
            } else {
                min + (max - min) * i as f64 / steps as f64
            }
        })
        .collect()
}

/// Resolves `--h` and `--range` into a list of `h` values.
pub fn h_values(list: &[f64], range: Option<&[f64]>, default: &[f64]) -> Result<Vec<f64>, CliError> {
    let hs = match range {
        Some(r) => {
            let (min, max, steps) = (r[0], r[1], r[2]);
            if steps < 1.0 || steps.fract() != 0.0 {
                return Err(CliError::Usage(format!(
                    "range steps must be a positive integer, got {steps}"
                )));
            }
            if !(min <= max) {
                return Err(CliError::Usage(format!("range needs MIN <= MAX, got {min} {max}")));
            }
            let mut hs = list.to_vec();
            hs.extend(linspace(min, max, steps as usize));
            hs
        }
        None if list.is_empty() => default.to_vec(),
        None => list.to_vec(),
    };
    if let Some(bad) = hs.iter().find(|h| !(**h > 0.0) || !h.is_finite()) {
        return Err(CliError::Usage(format!("h must be positive, got {bad}")));
    }
    Ok(hs)
}

pub fn curves(alpha_min: f64, alpha_max: f64, steps: usize, n_max: usize) -> Result<Table, CliError> {
    if !(alpha_min >= 0.0) || !(alpha_min < alpha_max) || !alpha_max.is_finite() {
        return Err(CliError::Usage(format!(
            "need 0 <= alpha_min < alpha_max, got {alpha_min} {alpha_max}"
        )));
    }
    if steps == 0 {
        return Err(CliError::Usage("steps must be >= 1".into()));
    }
    if !(1..=MAX_CURVES).contains(&n_max) {
        return Err(CliError::Usage(format!("n_max must be in 1..={MAX_CURVES}, got {n_max}")));
    }
    let mut columns = vec!["alpha".to_string()];
    columns.extend((1..=n_max).map(|n| format!("rho{n}")));
    let mut table = Table::new(columns);
    for alpha in linspace(alpha_min, alpha_max, steps) {
        let mut row = vec![Cell::Num(alpha)];
        for n in 1..=n_max {
            let r = rho(n, alpha).map_err(|e| CliError::numerical(format!("alpha = {}, n = {n}", fmt_h(alpha)), e))?;
            row.push(r.rho.into());
        }
        table.push(row);
    }
    Ok(table)
}

pub fn bounds(hs: &[f64]) -> Result<Table, CliError> {
    let mut table = Table::new(["h", "lambda1", "lambda2", "lambda3", "nu1", "pct_err", "alpha_g"]);
    for &h in hs {
        let r = bounds_row(h).map_err(|e| CliError::numerical(format!("h = {}", fmt_h(h)), e))?;
        table.push(vec![
            h.into(),
            r.lambda1.into(),
            r.lambda2.into(),
            r.lambda3.into(),
            r.nu1.into(),
            r.pct_err.into(),
            r.alpha_g.into(),
        ]);
    }
    Ok(table)
}

/// Rows with `λ₃ ≤ ν₁` are kept with empty bounds and status `vacuous`.
pub fn negativity(hs: &[f64]) -> Result<Table, CliError> {
    let mut table = Table::new(["h", "l2_bound", "linf_bound", "status"]);
    for &h in hs {
        let ctx = || format!("h = {}", fmt_h(h));
        let l1 = lambda_n(h, 1).map_err(|e| CliError::numerical(ctx(), e))?;
        let l3 = lambda3(h).map_err(|e| CliError::numerical(ctx(), e))?;
        let n1 = nu1(h).map_err(|e| CliError::numerical(ctx(), e))?.nu1;
        match neg_part_from(h, l1, l3, n1) {
            Ok(b) => table.push(vec![h.into(), b.l2.into(), b.linf.into(), "ok".into()]),
            Err(_) => {
                eprintln!("h = {}: lambda3 = {l3} <= nu1 = {n1}, bound is vacuous", fmt_h(h));
                table.push(vec![h.into(), Cell::Empty, Cell::Empty, "vacuous".into()]);
            }
        }
    }
    Ok(table)
}

/// `G(x, y)` on a `(grid + 1) × (grid + 1)` uniform grid of the unit square.
pub fn greens(a: f64, grid: usize) -> Result<Table, CliError> {
    if grid == 0 {
        return Err(CliError::Usage("grid must be >= 1".into()));
    }
    let kernel = GreensKernel::new(a).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut table = Table::new(["x", "y", "g"]);
    let pts = linspace(0.0, 1.0, grid);
    for &x in &pts {
        for &y in &pts {
            table.push(vec![x.into(), y.into(), greens_eval(&kernel, x, y).into()]);
        }
    }
    Ok(table)
}

pub fn oracle(hs: &[f64], basis_m: usize, basis_n: usize) -> Result<Table, CliError> {
    if basis_m < 4 || basis_n < 4 {
        return Err(CliError::Usage(format!(
            "basis sizes must be >= 4, got {basis_m}x{basis_n}"
        )));
    }
    if basis_m * basis_n > clamped_plate::oracle::MAX_PRODUCT_BASIS {
        return Err(CliError::Usage(format!("basis {basis_m}x{basis_n} is too large")));
    }
    let mut table = Table::new([
        "h",
        "basis_m",
        "basis_n",
        "mu1_estimate",
        "mu3_estimate",
        "lambda1",
        "nu1",
        "lambda3",
        "enclosure_ok",
    ]);
    for &h in hs {
        let r = oracle_report(h, basis_m, basis_n)
            .map_err(|e| CliError::numerical(format!("h = {}", fmt_h(h)), e))?;
        table.push(vec![
            h.into(),
            r.basis_m.into(),
            r.basis_n.into(),
            r.mu1_estimate.into(),
            r.mu3_estimate.into(),
            r.lambda1.into(),
            r.nu1.into(),
            r.lambda3.into(),
            r.enclosure_ok.into(),
        ]);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_hits_end_points() {
        let v = linspace(0.0, 0.3, 3);
        assert_eq!(v.len(), 4);
        assert_eq!(v[3], 0.3);
        assert_eq!(v[0], 0.0);
    }

    #[test]
    fn h_selection() {
        assert_eq!(h_values(&[], None, &[1.0, 2.0]).unwrap(), vec![1.0, 2.0]);
        assert_eq!(h_values(&[3.0], None, &[1.0]).unwrap(), vec![3.0]);
        assert_eq!(h_values(&[], Some(&[1.0, 2.0, 2.0]), &[]).unwrap(), vec![1.0, 1.5, 2.0]);
        assert!(h_values(&[-1.0], None, &[]).is_err());
        assert!(h_values(&[], Some(&[1.0, 2.0, 0.5]), &[]).is_err());
        assert!(h_values(&[], Some(&[2.0, 1.0, 2.0]), &[]).is_err());
    }

    #[test]
    fn curve_arguments_checked() {
        assert!(curves(1.0, 1.0, 10, 2).is_err());
        assert!(curves(-1.0, 1.0, 10, 2).is_err());
        assert!(curves(0.0, 1.0, 10, 5).is_err());
        assert!(curves(0.0, 1.0, 0, 1).is_err());
    }
}
