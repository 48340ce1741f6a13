use clamped_plate::bounds::{
    asymptotics, bounds_row, cubic_coefficients, lambda3, lambda_n, neg_part_bounds, nu1,
};
use clamped_plate::eigencurve::beam_constants;
use std::f64::consts::PI;

/// (h, λ₁, ν₁, % error) as printed, with the size of one unit in the last
/// printed digit of λ₁ and ν₁.
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

#[test]
fn lower_and_upper_bound_table() {
    let mut prev_err = f64::INFINITY;
    for &(h, l1, n1, pct, ulp) in &LOWER_UPPER {
        let row = bounds_row(h).unwrap();
        assert!((row.lambda1 - l1).abs() <= ulp, "h={h}: λ₁ = {}", row.lambda1);
        assert!((row.nu1 - n1).abs() <= ulp, "h={h}: ν₁ = {}", row.nu1);
        assert!((row.pct_err - pct).abs() <= 1e-3, "h={h}: err = {}", row.pct_err);
        assert!(row.pct_err <= prev_err);
        prev_err = row.pct_err;
    }
}

#[test]
fn negativity_table() {
    for &(h, l2) in &NEGATIVITY {
        let b = neg_part_bounds(h).unwrap();
        assert!((b.l2 - l2).abs() <= 1e-4, "h={h}: {}", b.l2);
        assert!(b.linf > b.l2);
    }
}

#[test]
fn bracket_contains_literature_enclosure() {
    assert!(lambda_n(1.0, 1).unwrap() < 1294.933940);
    assert!(nu1(1.0).unwrap().nu1 > 1294.933988);
}

#[test]
fn enclosure_on_h_grid() {
    for h in [1.0, 1.5, 2.0, 3.0, 7.0, 15.0, 40.0, 100.0, 200.0] {
        let l1 = lambda_n(h, 1).unwrap();
        let hb = nu1(h).unwrap();
        assert!(l1 < hb.nu1, "h={h}");
        assert!(hb.nu1 < lambda3(h).unwrap(), "h={h}");
        assert_eq!(hb.root_count, 1, "h={h}");
    }
}

#[test]
fn cubic_terms_at_large_h() {
    let h: f64 = 200.0;
    let a = asymptotics(h).unwrap();
    let (nu_c, lam_c) = cubic_coefficients().unwrap();
    let l1 = (lambda_n(h, 1).unwrap() - a.mu1_asym) * h.powi(3);
    let n1 = (nu1(h).unwrap().nu1 - a.mu1_asym) * h.powi(3);
    assert!((l1 / lam_c - 1.0).abs() < 0.03, "{l1}");
    assert!((n1 / nu_c - 1.0).abs() < 0.03, "{n1}");
}

#[test]
fn nu1_remainder_is_quartic() {
    let mut scaled = Vec::new();
    for h in [25.0f64, 50.0, 100.0, 200.0] {
        let a = asymptotics(h).unwrap();
        scaled.push((nu1(h).unwrap().nu1 - a.nu1_asym_h3) * h.powi(4));
    }
    let first = scaled[0].abs();
    for s in &scaled {
        assert!(s.abs() <= 2.0 * first + 1.0, "{scaled:?}");
    }
}

#[test]
fn lambda3_expansion() {
    let h = 100.0;
    let a = asymptotics(h).unwrap();
    assert!((lambda3(h).unwrap() - a.lambda3_asym).abs() < 1e-2);
}

#[test]
fn negativity_decay_rate() {
    let h: f64 = 200.0;
    let b = neg_part_bounds(h).unwrap();
    let k = beam_constants(1).unwrap();
    let limit = 2f64.powf(0.25) * (k.d_n.sqrt() * k.c_n - PI).sqrt() / (2.0 * PI);
    assert!((b.l2 * h.sqrt() / limit - 1.0).abs() < 0.05, "{}", b.l2 * h.sqrt());
    let a = asymptotics(h).unwrap();
    assert!((a.neg_l2_asym - limit / h.sqrt()).abs() < 1e-15);
}
