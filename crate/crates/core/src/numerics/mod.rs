//! Numerical primitives shared by the solvers: bracketed root finding,
//! Gauss–Legendre quadrature, central differences and a dense symmetric
//! eigensolver.

pub mod eig;
pub mod quadrature;
pub mod roots;

pub use eig::{sym_eig, DenseMatrix, SymEigen};
pub use quadrature::{integrate, QuadratureRule};
pub use roots::{find_root, find_root_in, sign_changes, Bracket};

/// Symmetric difference quotient `(f(x + step) - f(x - step)) / (2 step)`.
pub fn central_diff<F: FnMut(f64) -> f64>(mut f: F, x: f64, step: f64) -> f64 {
    (f(x + step) - f(x - step)) / (2.0 * step)
}

/// Second symmetric difference `(f(x + step) - 2 f(x) + f(x - step)) / step²`.
pub fn second_diff<F: FnMut(f64) -> f64>(mut f: F, x: f64, step: f64) -> f64 {
    (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step)
}

/// `cosh x - 1` without cancellation near zero.
pub fn cosh_m1(x: f64) -> f64 {
    let s = (0.5 * x).sinh();
    2.0 * s * s
}

/// `sinh x - x` without cancellation near zero.
pub fn sinh_m_x(x: f64) -> f64 {
    if x.abs() < 0.5 {
        // x³/3! + x⁵/5! + ...; terms fall below 1e-17 relative by k = 9
        let x2 = x * x;
        let mut term = x * x2 / 6.0;
        let mut sum = term;
        let mut k = 3.0;
        while term.abs() > 1e-18 * sum.abs() {
            term *= x2 / ((k + 1.0) * (k + 2.0));
            sum += term;
            k += 2.0;
        }
        sum
    } else {
        x.sinh() - x
    }
}
