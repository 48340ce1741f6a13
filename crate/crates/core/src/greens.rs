//! Explicit Green's function of `d⁴/dx⁴ − a² d²/dx²` on `[0, 1]` with
//! clamped ends. With `a² = 2α` this inverts `H(1, α)`.
//!
//! ```text
//! k(x,y) = (sinh a − a)(cosh ax − 1)(cosh ay − 1)
//!        − (cosh a − 1)(cosh ax − 1)(sinh ay − ay)
//!        − (cosh a − 1)(sinh ax − ax)(cosh ay − 1)
//!        + sinh a (sinh ax − ax)(sinh ay − ay)
//!
//! c = a³(2(1 − cosh a) + a sinh a)
//! G(x,y) = k(1−x, y)/c  for y ≤ x,   k(x, 1−y)/c  for x < y.
//! ```
//!
//! The four terms of `k` are each of size `e^{a(1+x+y)}` while their sum is
//! only `O(e^a)`, so about `e^{a(x+y)}` ulps are lost. For `a > 10` the
//! kernel is evaluated in a rearranged form where that cancellation has
//! been carried out analytically (see [`scaled_green`]).

use crate::error::{Error, Result};
use crate::numerics::quadrature::QuadratureRule;
use crate::numerics::{cosh_m1, sinh_m_x};

/// Above this `a` the exponentially scaled evaluation is used.
const SCALED_THRESHOLD: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreensKernel {
    pub a: f64,
    /// `a³(2(1 − cosh a) + a sinh a)`; overflows to infinity for `a ≳ 700`,
    /// which only affects [`k_eval`], not [`greens_eval`].
    pub c_norm: f64,
}

impl GreensKernel {
    pub fn new(a: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidArgument(format!("a must be positive, got {a}")));
        }
        // 2(1 − cosh a) + a sinh a = a(sinh a − a) − 2(cosh a − 1) + a², all
        // terms O(a⁴) near zero
        let c_norm = a.powi(3) * (a * sinh_m_x(a) - 2.0 * cosh_m1(a) + a * a);
        Ok(GreensKernel { a, c_norm })
    }

    /// Kernel for `H(1, α)`, i.e. `a = √(2α)`.
    pub fn for_alpha(alpha: f64) -> Result<Self> {
        Self::new((2.0 * alpha).sqrt())
    }
}

/// The four-term kernel `k(x, y)`.
pub fn k_eval(kernel: &GreensKernel, x: f64, y: f64) -> f64 {
    let a = kernel.a;
    let (cx, sx) = (cosh_m1(a * x), sinh_m_x(a * x));
    let (cy, sy) = (cosh_m1(a * y), sinh_m_x(a * y));
    sinh_m_x(a) * cx * cy - cosh_m1(a) * (cx * sy + sx * cy) + a.sinh() * sx * sy
}

/// `G(x, y)`.
pub fn greens_eval(kernel: &GreensKernel, x: f64, y: f64) -> f64 {
    let (u, v) = if y <= x { (1.0 - x, y) } else { (x, 1.0 - y) };
    if kernel.a > SCALED_THRESHOLD {
        scaled_green(kernel.a, u, v)
    } else {
        k_eval(kernel, u, v) / kernel.c_norm
    }
}

/// `k(u, v)/c` for `u + v ≤ 1`, free of overflow and exponential cancellation.
///
/// With `p = e^{−au}`, `q = e^{−av}`, `r = e^{−a}`, every hyperbolic factor is
/// `½e^{(·)}` times a bounded term, e.g. `cosh au − 1 = ½e^{au}(1 − p)²`.
/// Writing `sinh au − au = ½e^{au}[(1 − p)² + δᵤ]` with
/// `δᵤ = 2p(1 − p − au)`, the leading `O(1)` parts of the four terms cancel
/// exactly and
///
/// ```text
/// 8k e^{−a(1+u+v)} = 2r(2 − a − 2r)·ĉᵤĉᵥ + 2r(1 − r)(ĉᵤδᵥ + δᵤĉᵥ) + (1 − r²)δᵤδᵥ
/// ```
///
/// where `ĉ = (1 − p)²`. Each term is `O(pq · poly(a))`, so after multiplying
/// through by `e^{a(u+v)}` nothing overflows.
fn scaled_green(a: f64, u: f64, v: f64) -> f64 {
    let r = (-a).exp();
    // 1 − p, 1 − q
    let mu = -(-a * u).exp_m1();
    let mv = -(-a * v).exp_m1();
    let (cu, cv) = (mu * mu, mv * mv);
    // δ e^{a(·)}
    let du = 2.0 * (mu - a * u);
    let dv = 2.0 * (mv - a * v);
    // r e^{a(u+v)}, r e^{au}, r e^{av}
    let w = (-a * (1.0 - u - v)).exp();
    let ru = (-a * (1.0 - u)).exp();
    let rv = (-a * (1.0 - v)).exp();
    let bracket = 2.0 * (2.0 - a - 2.0 * r) * w * cu * cv
        + 2.0 * (1.0 - r) * (cu * dv * ru + du * cv * rv)
        + (1.0 - r * r) * du * dv;
    // c = ½a³e^{a}[a(1 − r²) − 2(1 − r)²]
    let norm = 4.0 * a.powi(3) * (a * (1.0 - r * r) - 2.0 * (1.0 - r) * (1.0 - r));
    bracket / norm
}

/// `φ(x) = artanh((sinh x − x)/(cosh x − 1))`.
pub fn phi(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::InvalidArgument(format!("phi needs x > 0, got {x}")));
    }
    if x < 1e-4 {
        // ratio = x/3 − x³/135 + …; artanh adds x³/81
        return Ok(x / 3.0 + x.powi(3) * (1.0 / 81.0 - 1.0 / 135.0));
    }
    let denom = cosh_m1(x);
    // 1 − ratio = (x − 1 + e^{−x})/(cosh x − 1)
    let one_minus = (x + (-x).exp_m1()) / denom;
    let one_plus = 2.0 - one_minus;
    Ok(0.5 * (one_plus / one_minus).ln())
}

/// A function sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    pub x: Vec<f64>,
    pub values: Vec<f64>,
}

impl SampledFunction {
    pub fn step(&self) -> f64 {
        self.x[1] - self.x[0]
    }
}

/// `f(x) = ∫₀¹ G(x, y) g(y) dy` on `grid_size + 1` uniform points of `[0, 1]`.
///
/// The integral is split at the kink `y = x` and each side is integrated
/// with composite Gauss–Legendre.
pub fn apply_inverse<F: Fn(f64) -> f64>(
    kernel: &GreensKernel,
    g: F,
    grid_size: usize,
) -> Result<SampledFunction> {
    if grid_size < 16 {
        return Err(Error::InvalidArgument(format!(
            "grid_size must be >= 16, got {grid_size}"
        )));
    }
    let rule = QuadratureRule::gauss_legendre(24);
    let mut xs = Vec::with_capacity(grid_size + 1);
    let mut values = Vec::with_capacity(grid_size + 1);
    for i in 0..=grid_size {
        let x = i as f64 / grid_size as f64;
        let left = rule.integrate(|y| greens_eval(kernel, x, y) * g(y), 0.0, x, 4);
        let right = rule.integrate(|y| greens_eval(kernel, x, y) * g(y), x, 1.0, 4);
        xs.push(x);
        values.push(left + right);
    }
    Ok(SampledFunction { x: xs, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{central_diff, second_diff};

    #[test]
    fn kernel_vanishes_on_left_edge() {
        let k = GreensKernel::new(2.0).unwrap();
        for j in 0..=10 {
            assert_eq!(k_eval(&k, 0.0, j as f64 / 10.0), 0.0);
        }
    }

    #[test]
    fn kernel_symmetric_and_positive() {
        let k = GreensKernel::new(2.0).unwrap();
        assert!(k_eval(&k, 0.3, 0.4) > 0.0);
        for &(x, y) in &[(0.1, 0.7), (0.33, 0.21), (0.9, 0.05), (0.5, 0.5)] {
            let (a, b) = (k_eval(&k, x, y), k_eval(&k, y, x));
            assert!((a - b).abs() <= 1e-14 * a.abs().max(1e-300));
        }
    }

    #[test]
    fn green_vanishes_on_boundary() {
        let k = GreensKernel::new(1.0).unwrap();
        for j in 0..=20 {
            let y = j as f64 / 20.0;
            assert!(greens_eval(&k, 0.0, y).abs() < 1e-15);
            assert!(greens_eval(&k, 1.0, y).abs() < 1e-15);
        }
    }

    #[test]
    fn green_positive_on_interior_grid() {
        for a in [0.5, 1.0, 2.0, 5.0, 10.0, 50.0] {
            let k = GreensKernel::new(a).unwrap();
            for i in 1..50 {
                for j in 1..50 {
                    let (x, y) = (i as f64 / 50.0, j as f64 / 50.0);
                    let g = greens_eval(&k, x, y);
                    assert!(g > 0.0, "a = {a}, G({x}, {y}) = {g}");
                }
            }
        }
    }

    #[test]
    fn green_continuous_across_diagonal() {
        let k = GreensKernel::new(3.0).unwrap();
        for i in 1..20 {
            let x = i as f64 / 20.0;
            // k(1−x, x) − k(x, 1−x) ≡ 0
            let diff = k_eval(&k, 1.0 - x, x) - k_eval(&k, x, 1.0 - x);
            assert!(diff.abs() / k.c_norm.abs() <= 1e-10);
        }
    }

    #[test]
    fn scaled_and_direct_forms_agree() {
        for a in [2.0, 5.0, 10.0, 15.0] {
            let k = GreensKernel::new(a).unwrap();
            for &(u, v) in &[(0.1, 0.2), (0.5, 0.4), (0.05, 0.9), (0.3, 0.3), (0.7, 0.01)] {
                let direct = k_eval(&k, u, v) / k.c_norm;
                let scaled = scaled_green(a, u, v);
                assert!(
                    (direct - scaled).abs() <= 1e-9 * direct.abs(),
                    "a={a} ({u},{v}): {direct} vs {scaled}"
                );
            }
        }
    }

    #[test]
    fn phi_slope_at_origin() {
        let slope = central_diff(|x| phi(x).unwrap(), 1e-3, 1e-4);
        assert!((slope - 1.0 / 3.0).abs() < 1e-3);
        assert!(phi(0.0).is_err());
        assert!(phi(-1.0).is_err());
    }

    #[test]
    fn phi_convex_and_increasing() {
        let mut prev = phi(0.1).unwrap();
        for i in 1..=199 {
            let x = 0.1 + i as f64 * 0.1;
            let v = phi(x).unwrap();
            assert!(v > prev);
            prev = v;
            if x < 19.95 {
                assert!(second_diff(|t| phi(t).unwrap(), x, 0.05) >= -1e-9, "x = {x}");
            }
        }
    }

    #[test]
    fn phi_superadditive_on_triangle() {
        for a in [0.5, 2.0, 7.0] {
            let pa = phi(a).unwrap();
            for i in 1..20 {
                for j in 1..(20 - i) {
                    let (x, y) = (i as f64 / 20.0, j as f64 / 20.0);
                    assert!(pa > phi(a * x).unwrap() + phi(a * y).unwrap());
                }
            }
        }
    }

    /// `∂³k/∂x³`, differentiated by hand.
    fn k_xxx(a: f64, x: f64, y: f64) -> f64 {
        let (cy, sy) = ((a * y).cosh() - 1.0, (a * y).sinh() - a * y);
        let (shx, chx) = ((a * x).sinh(), (a * x).cosh());
        a.powi(3)
            * ((a.sinh() - a) * shx * cy - (a.cosh() - 1.0) * (shx * sy + chx * cy)
                + a.sinh() * chx * sy)
    }

    #[test]
    fn third_derivative_jump_is_normalisation() {
        for a in [0.5, 2.0, 6.0] {
            let k = GreensKernel::new(a).unwrap();
            for i in 1..10 {
                let x = i as f64 / 10.0;
                let jump = -k_xxx(a, 1.0 - x, x) - k_xxx(a, x, 1.0 - x);
                assert!((jump - k.c_norm).abs() < 1e-9 * k.c_norm.abs(), "a={a} x={x}");
            }
        }
    }

    #[test]
    fn clamped_in_both_variables() {
        let k = GreensKernel::new(2.5).unwrap();
        for j in 1..10 {
            let y = j as f64 / 10.0;
            let e = 1e-4;
            let g = |x: f64| greens_eval(&k, x, y);
            let left = (-3.0 * g(0.0) + 4.0 * g(e) - g(2.0 * e)) / (2.0 * e);
            let right = (3.0 * g(1.0) - 4.0 * g(1.0 - e) + g(1.0 - 2.0 * e)) / (2.0 * e);
            // a slope of O(G) would be ~1e-2 here
            assert!(left.abs() < 1e-8 && right.abs() < 1e-8, "{left} {right}");
        }
    }

    #[test]
    fn solves_fourth_order_problem_for_constant_load() {
        let a = 2.0;
        let k = GreensKernel::new(a).unwrap();
        let n = 400;
        let f = apply_inverse(&k, |_| 1.0, n).unwrap();
        let hs = f.step();
        let v = &f.values;
        let mut worst = 0.0f64;
        for i in 2..=n - 2 {
            let d2 = (v[i - 1] - 2.0 * v[i] + v[i + 1]) / (hs * hs);
            let d4 = (v[i - 2] - 4.0 * v[i - 1] + 6.0 * v[i] - 4.0 * v[i + 1] + v[i + 2])
                / hs.powi(4);
            worst = worst.max((d4 - a * a * d2 - 1.0).abs());
        }
        assert!(worst <= 1e-3, "defect {worst}");
        assert_eq!(v[0], 0.0);
        assert!(v[n].abs() < 1e-15);
    }

    #[test]
    fn inverse_of_zero_is_zero() {
        let k = GreensKernel::new(2.0).unwrap();
        let f = apply_inverse(&k, |_| 0.0, 32).unwrap();
        assert!(f.values.iter().all(|&v| v == 0.0));
        assert!(apply_inverse(&k, |_| 1.0, 8).is_err());
    }
}
