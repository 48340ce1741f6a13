use clamped_plate::eigencurve::{beam_constants, beta_sandwich, characteristic_scaled, rho, rho_prime, sigma};
use clamped_plate::numerics::roots::{find_root, Bracket, TOL_ABS, TOL_REL};
use clamped_plate::numerics::{integrate, sym_eig, DenseMatrix};
use proptest::prelude::*;
use std::f64::consts::PI;

fn poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn brent_on_monotone_cubics(
        a in 0.01f64..10.0,
        b in -5.0f64..5.0,
        root in -3.0f64..3.0,
    ) {
        // (x − r)((x − r)² a + b² + 0.1) is strictly increasing through r
        let f = |x: f64| {
            let t = x - root;
            t * (a * t * t + b * b + 0.1)
        };
        let (lo, hi) = (-5.0, 5.0);
        let x = find_root(f, Bracket::new(f, lo, hi).unwrap(), TOL_ABS, TOL_REL).unwrap();
        let scale = f(lo).abs().max(f(hi).abs());
        prop_assert!(f(x).abs() <= 1e-9 * scale);
        prop_assert!((x - root).abs() <= 1e-9);
    }

    #[test]
    fn quadrature_linear_and_additive(
        p in prop::collection::vec(-3.0f64..3.0, 1..12),
        q in prop::collection::vec(-3.0f64..3.0, 1..12),
        s in -4.0f64..4.0,
        split in 0.05f64..0.95,
    ) {
        let (a, b) = (-1.0, 2.0);
        let lhs = integrate(|x| poly(&p, x) + s * poly(&q, x), a, b, 32);
        let rhs = integrate(|x| poly(&p, x), a, b, 32) + s * integrate(|x| poly(&q, x), a, b, 32);
        let scale = 1.0 + lhs.abs() + rhs.abs();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);

        let m = a + split * (b - a);
        let whole = integrate(|x| poly(&p, x), a, b, 32);
        let parts = integrate(|x| poly(&p, x), a, m, 32) + integrate(|x| poly(&p, x), m, b, 32);
        prop_assert!((whole - parts).abs() <= 1e-12 * (1.0 + whole.abs()));
    }

    #[test]
    fn eigenvalues_sum_to_trace(entries in prop::collection::vec(-10.0f64..10.0, 36)) {
        let n = 6;
        let mut m = DenseMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m[(i, j)] = entries[i * n + j];
                m[(j, i)] = entries[i * n + j];
            }
        }
        let e = sym_eig(&m).unwrap();
        let sum: f64 = e.values.iter().sum();
        prop_assert!((sum - m.trace()).abs() <= 1e-10 * m.frobenius_norm().max(1.0));
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn sigma_rescales_rho(h in 0.2f64..5.0, alpha in 0.0f64..50.0, n in 1usize..4) {
        let direct = rho(n, h * h * alpha).unwrap().rho / h.powi(4);
        let s = sigma(h, alpha, n).unwrap();
        prop_assert!((s - direct).abs() <= 1e-12 * direct);
    }

    #[test]
    fn solved_roots_have_small_residual(log_alpha in -6.0f64..8.0, n in 1usize..5) {
        let alpha = 10f64.powf(log_alpha);
        let r = rho(n, alpha).unwrap();
        prop_assert!(r.residual.abs() <= 1e-10);
    }
}

#[test]
fn first_slope_bounded_and_decreasing() {
    let k = beam_constants(1).unwrap();
    let upper = 2.0 * k.d_n * k.c_n * k.c_n;
    let lower = 2.0 * PI * PI;
    let mut prev = f64::INFINITY;
    for i in 0..=60 {
        let alpha = 10f64.powf(-4.0 + i as f64 * 0.2);
        let d = rho_prime(1, alpha).unwrap();
        assert!(d >= lower && d <= upper, "alpha={alpha}: {d}");
        assert!(d < prev);
        prev = d;
    }
}

#[test]
fn first_curve_concave() {
    for i in 1..40 {
        let alpha = 0.5 * i as f64;
        let step = 0.25;
        let second = rho(1, alpha + step).unwrap().rho - 2.0 * rho(1, alpha).unwrap().rho
            + rho(1, alpha - step).unwrap().rho;
        assert!(second < 0.0, "alpha={alpha}");
    }
}

#[test]
fn large_alpha_sandwich() {
    for n in 1..=2 {
        for alpha in [1e3, 1e4, 1e5] {
            let (lo, hi) = beta_sandwich(n, alpha);
            let beta = rho(n, alpha).unwrap().beta;
            assert!(lo < beta && beta < hi, "n={n} alpha={alpha}: {lo} {beta} {hi}");
            let f_lo = characteristic_scaled(alpha, lo).unwrap();
            let f_hi = characteristic_scaled(alpha, hi).unwrap();
            assert!(f_lo * f_hi < 0.0);
        }
    }
}
