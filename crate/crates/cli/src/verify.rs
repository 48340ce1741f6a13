//! Self-check report: reference tables, constants, solver residuals and (at
//! the full level) the Rayleigh–Ritz cross-checks and large-`h` limits.

use std::f64::consts::{PI, SQRT_2};

use clap::ValueEnum;

use clamped_plate::bounds::{asymptotics, lambda3, lambda_n, neg_part_bounds, nu1};
use clamped_plate::eigencurve::{beam_constants, rho, rho_prime};
use clamped_plate::greens::{greens_eval, GreensKernel};
use clamped_plate::oracle::{biharmonic_mu, groundstate_negativity};
use clamped_plate::Result;

use crate::output::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub value: f64,
    pub expected: String,
}

fn check(name: impl Into<String>, value: f64, expected: impl Into<String>, passed: bool) -> Check {
    Check {
        name: name.into(),
        passed,
        value,
        expected: expected.into(),
    }
}

/// (h, λ₁, ν₁, % error, unit in the last printed digit)
const LOWER_UPPER: [(f64, f64, f64, f64, f64); 9] = [
    (1.0, 1286.66, 1295.93, 0.720, 0.01),
    (1.2, 940.070, 946.421, 0.676, 0.001),
    (1.4, 776.088, 780.618, 0.584, 0.001),
    (1.6, 687.796, 691.129, 0.485, 0.001),
    (1.8, 635.529, 638.044, 0.396, 0.001),
    (2.0, 602.282, 604.221, 0.322, 0.001),
    (3.0, 537.444, 538.111, 0.124, 0.001),
    (4.0, 519.496, 519.794, 0.058, 0.001),
    (5.0, 512.080, 512.237, 0.031, 0.001),
];

const NEGATIVITY: [(f64, f64); 7] = [
    (1.0, 0.0484),
    (10.0, 0.0336),
    (20.0, 0.0249),
    (40.0, 0.0179),
    (60.0, 0.0147),
    (80.0, 0.0128),
    (100.0, 0.0114),
];

fn near(name: String, value: f64, target: f64, tol: f64) -> Check {
    let ok = (value - target).abs() <= tol;
    check(name, value, format!("{target} +- {tol}"), ok)
}

fn fast_checks(out: &mut Vec<Check>) -> Result<()> {
    for &(h, l1, n1, pct, unit) in &LOWER_UPPER {
        let lambda = lambda_n(h, 1)?;
        let nu = nu1(h)?.nu1;
        out.push(near(format!("lambda1(h={h})"), lambda, l1, unit));
        out.push(near(format!("nu1(h={h})"), nu, n1, unit));
        out.push(near(format!("pct_err(h={h})"), 100.0 * (nu - lambda) / lambda, pct, 1e-3));
    }
    for &(h, l2) in &NEGATIVITY {
        out.push(near(format!("neg_l2(h={h})"), neg_part_bounds(h)?.l2, l2, 1e-4));
    }

    let k = beam_constants(1)?;
    out.push(near("c1".into(), k.c_n, 4.73004, 1e-5));
    out.push(near("d1".into(), k.d_n, 0.54988, 1e-5));
    out.push(near("c1^4".into(), k.c_n.powi(4), 500.564, 5e-3));

    let l1 = lambda_n(1.0, 1)?;
    out.push(check("lambda1(1) below 1294.933940", l1, "< 1294.93394", l1 < 1294.933940));
    let n1 = nu1(1.0)?.nu1;
    out.push(check("nu1(1) above 1294.933988", n1, "> 1294.933988", n1 > 1294.933988));

    let mut worst: f64 = 0.0;
    for n in 1..=4 {
        for i in 0..=28 {
            worst = worst.max(rho(n, 10f64.powf(-6.0 + 0.5 * i as f64))?.residual.abs());
        }
    }
    out.push(check("max characteristic residual", worst, "<= 1e-10", worst <= 1e-10));

    let upper = 2.0 * k.d_n * k.c_n * k.c_n;
    let mut slope_ok = true;
    let mut prev = f64::INFINITY;
    for i in 0..=40 {
        let s = rho_prime(1, 10f64.powf(-3.0 + 0.25 * i as f64))?;
        slope_ok &= s >= 2.0 * PI * PI && s <= upper && s < prev;
        prev = s;
    }
    out.push(check("rho1' bounded and decreasing", prev, "in [2pi^2, 2dc^2]", slope_ok));

    let mut min_g = f64::INFINITY;
    for a in [0.5, 1.0, 2.0, 5.0, 10.0, 50.0] {
        let kernel = GreensKernel::new(a)?;
        for i in 1..50 {
            for j in 1..50 {
                min_g = min_g.min(greens_eval(&kernel, i as f64 / 50.0, j as f64 / 50.0));
            }
        }
    }
    out.push(check("min Green's function", min_g, "> 0", min_g > 0.0));
    Ok(())
}

fn full_checks(out: &mut Vec<Check>) -> Result<()> {
    for (h, m, n) in [(1.0, 14, 14), (2.0, 14, 14), (3.0, 14, 14), (5.0, 20, 8)] {
        let mu = biharmonic_mu(h, m, n, 3)?;
        let lo = lambda_n(h, 1)?;
        let hi = nu1(h)?.nu1 + 1e-6;
        out.push(check(
            format!("mu1 estimate(h={h}, {m}x{n})"),
            mu[0],
            format!("in [{lo:.6}, {hi:.6}]"),
            lo <= mu[0] && mu[0] <= hi,
        ));
        let l3 = lambda3(h)?;
        out.push(check(
            format!("mu3 estimate(h={h}, {m}x{n})"),
            mu[2],
            format!(">= {l3:.6}"),
            mu[2] >= l3 - 1e-6,
        ));
    }
    let mu = biharmonic_mu(1.0, 14, 14, 1)?[0];
    out.push(near("mu1 estimate(h=1) vs 1294.934".into(), mu, 1294.934, 0.05));

    let h: f64 = 200.0;
    let k = beam_constants(1)?;
    let base = asymptotics(h)?.mu1_asym;
    let lam = h.powi(3) * (lambda_n(h, 1)? - base);
    let lam_target = 4.0 * SQRT_2 * PI.powi(3);
    out.push(check(
        "h^3 lambda1 remainder (h=200)",
        lam,
        format!("{lam_target:.4} within 3%"),
        (lam / lam_target - 1.0).abs() <= 0.03,
    ));
    let nu = h.powi(3) * (nu1(h)?.nu1 - base);
    let nu_target = 4.0 * SQRT_2 * PI * PI * k.d_n.sqrt() * k.c_n;
    out.push(check(
        "h^3 nu1 remainder (h=200)",
        nu,
        format!("{nu_target:.4} within 3%"),
        (nu / nu_target - 1.0).abs() <= 0.03,
    ));

    let (ratio, _) = groundstate_negativity(1.0, 20, 20, 201)?;
    out.push(check(
        "measured negative part (h=1)",
        ratio,
        "in (0, 0.0484]",
        ratio > 0.0 && ratio <= 0.0484,
    ));
    Ok(())
}

pub fn run(level: Level) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    fast_checks(&mut out)?;
    if level == Level::Full {
        full_checks(&mut out)?;
    }
    Ok(out)
}

pub fn table(checks: &[Check]) -> Table {
    let mut t = Table::new(["check", "status", "value", "expected"]);
    for c in checks {
        t.push(vec![
            c.name.as_str().into(),
            if c.passed { "pass" } else { "fail" }.into(),
            Cell::Num(c.value),
            c.expected.as_str().into(),
        ]);
    }
    t
}
