//! Bracketed scalar root finding (Brent's method).

use crate::error::{Error, Result};

/// Default absolute tolerance for [`find_root`].
pub const TOL_ABS: f64 = 1e-13;
/// Default relative tolerance for [`find_root`].
pub const TOL_REL: f64 = 1e-13;

const MAX_ITER: usize = 200;

/// An interval `[lo, hi]` on which a function changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    /// Evaluates `f` at both ends and checks for a sign change.
    pub fn new<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> Result<Self> {
        let f_lo = f(lo);
        let f_hi = f(hi);
        Self::from_values(lo, hi, f_lo, f_hi)
    }

    pub fn from_values(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if !f_lo.is_finite() {
            return Err(Error::NonFinite { x: lo, value: f_lo });
        }
        if !f_hi.is_finite() {
            return Err(Error::NonFinite { x: hi, value: f_hi });
        }
        if !(lo < hi) || f_lo * f_hi > 0.0 {
            return Err(Error::InvalidBracket { lo, hi, f_lo, f_hi });
        }
        Ok(Bracket { lo, hi, f_lo, f_hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Finds a root of `f` inside `bracket`.
///
/// Brent's scheme: inverse quadratic interpolation or secant steps when
/// they stay inside the bracket and shrink it fast enough, bisection
/// otherwise. Terminates once the bracket is narrower than
/// `max(tol_abs, tol_rel * |x|)`.
pub fn find_root<F: FnMut(f64) -> f64>(
    mut f: F,
    bracket: Bracket,
    tol_abs: f64,
    tol_rel: f64,
) -> Result<f64> {
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let (mut fa, mut fb) = (bracket.f_lo, bracket.f_hi);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 0.5 * tol_abs.max(tol_rel * b.abs()).max(4.0 * f64::EPSILON * b.abs());
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }

        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                // secant
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                // inverse quadratic
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }

        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
        if !fb.is_finite() {
            return Err(Error::NonFinite { x: b, value: fb });
        }
    }
    // The bisection safeguard halves the bracket at least every other
    // step, so this is only reached with absurd tolerances.
    Ok(b)
}

/// [`find_root`] on `[lo, hi]` with the default tolerances.
pub fn find_root_in<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> Result<f64> {
    let bracket = Bracket::new(&mut f, lo, hi)?;
    find_root(f, bracket, TOL_ABS, TOL_REL)
}

/// Samples `f` on `nodes` uniformly spaced points of `[lo, hi]` and returns
/// every sub-interval whose end values change sign, in increasing order.
pub fn sign_changes<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    nodes: usize,
) -> Vec<Bracket> {
    let nodes = nodes.max(2);
    let step = (hi - lo) / (nodes - 1) as f64;
    let mut out = Vec::new();
    let mut x_prev = lo;
    let mut f_prev = f(lo);
    for i in 1..nodes {
        let x = if i == nodes - 1 { hi } else { lo + step * i as f64 };
        let fx = f(x);
        if f_prev.is_finite() && fx.is_finite() && f_prev * fx <= 0.0 && f_prev != 0.0 {
            out.push(Bracket {
                lo: x_prev,
                hi: x,
                f_lo: f_prev,
                f_hi: fx,
            });
        }
        x_prev = x;
        f_prev = fx;
    }
    out
}
