//! Rayleigh–Ritz estimates in the clamped-beam basis, independent of the
//! transcendental eigencurve solver.
//!
//! With `uₘ(x) = h^{−½} gₘ(x/h)` the fourth-derivative form is diagonal,
//! `∫uₘ″uₙ″ = h⁻⁴cₙ⁴δₘₙ`, and only the gradient Gram matrix
//! `Bₘₙ = ∫gₘ′gₙ′` needs quadrature. The plate form on `[0, h] × [0, 1]`
//! in the product basis is `Aₓ⊗1 + 1⊗A_y + 2Bₓ⊗B_y`.
//!
//! Modes with odd index are even about the midpoint and vice versa, so `B`
//! vanishes unless `m + n` is even. The plate matrix therefore splits into
//! four parity blocks which are diagonalised separately.

use serde::Serialize;

use crate::beam::BeamMode;
use crate::bounds::{lambda3, lambda_n, nu1};
use crate::error::{Error, Result};
use crate::numerics::{sym_eig, DenseMatrix, QuadratureRule, SymEigen};

const GRAM_ORDER: usize = 64;
const GRAM_PANELS: usize = 8;

/// Largest product basis accepted by [`biharmonic_mu`].
pub const MAX_PRODUCT_BASIS: usize = 4096;

/// Slack allowed above `ν₁` in the enclosure check.
pub const ENCLOSURE_SLACK: f64 = 1e-6;

fn modes(count: usize) -> Result<Vec<BeamMode>> {
    (1..=count).map(BeamMode::new).collect()
}

/// `Bₘₙ = ∫₀¹ gₘ′gₙ′` for `m, n < size`, entries with odd `m + n` set to zero.
pub fn gradient_gram(size: usize) -> Result<DenseMatrix> {
    let modes = modes(size)?;
    let rule = QuadratureRule::gauss_legendre(GRAM_ORDER);
    let (xs, ws) = rule.composite_points(0.0, 1.0, GRAM_PANELS);
    let slopes: Vec<Vec<f64>> = modes
        .iter()
        .map(|g| xs.iter().map(|&x| g.derivative(x, 1)).collect())
        .collect();
    let mut b = DenseMatrix::zeros(size);
    for m in 0..size {
        for n in m..size {
            if (m + n) % 2 == 1 {
                continue;
            }
            let v: f64 = (0..xs.len()).map(|k| ws[k] * slopes[m][k] * slopes[n][k]).sum();
            b[(m, n)] = v;
            b[(n, m)] = v;
        }
    }
    Ok(b)
}

fn fourth_powers(size: usize) -> Result<Vec<f64>> {
    Ok(modes(size)?.iter().map(|g| g.c().powi(4)).collect())
}

/// Galerkin eigenpairs of `H(h, α) = d⁴/dx⁴ − 2α d²/dx²` on `[0, h]`.
/// Eigenvectors are coefficient vectors in the basis `h^{−½}gₘ(x/h)`.
pub fn h_operator_eigenpairs(h: f64, alpha: f64, basis_size: usize) -> Result<SymEigen> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidArgument(format!("h must be positive, got {h}")));
    }
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidArgument(format!("alpha must be >= 0, got {alpha}")));
    }
    if basis_size == 0 {
        return Err(Error::InvalidArgument("basis_size must be >= 1".into()));
    }
    let b = gradient_gram(basis_size)?;
    let c4 = fourth_powers(basis_size)?;
    let h2 = h * h;
    let mut k = DenseMatrix::zeros(basis_size);
    for m in 0..basis_size {
        for n in 0..basis_size {
            k[(m, n)] = 2.0 * alpha * b[(m, n)] / h2;
        }
        k[(m, m)] += c4[m] / (h2 * h2);
    }
    sym_eig(&k)
}

/// The lowest `k` Galerkin eigenvalues of `H(h, α)`.
pub fn h_operator_eigs(h: f64, alpha: f64, basis_size: usize, k: usize) -> Result<Vec<f64>> {
    if k == 0 || k > basis_size {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= basis_size, got k = {k}, basis_size = {basis_size}"
        )));
    }
    let mut values = h_operator_eigenpairs(h, alpha, basis_size)?.values;
    values.truncate(k);
    Ok(values)
}

/// One parity block of the plate matrix and its eigen-decomposition.
struct ParityBlock {
    /// `(i, j)` product-basis indices of the block's rows.
    index: Vec<(usize, usize)>,
    eig: SymEigen,
}

fn plate_blocks(h: f64, basis_m: usize, basis_n: usize) -> Result<Vec<ParityBlock>> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidArgument(format!("h must be positive, got {h}")));
    }
    if basis_m == 0 || basis_n == 0 {
        return Err(Error::InvalidArgument("basis sizes must be >= 1".into()));
    }
    if basis_m * basis_n > MAX_PRODUCT_BASIS {
        return Err(Error::InvalidArgument(format!(
            "basis {basis_m}x{basis_n} exceeds {MAX_PRODUCT_BASIS} functions"
        )));
    }
    let size = basis_m.max(basis_n);
    let b = gradient_gram(size)?;
    let c4 = fourth_powers(size)?;
    let h2 = h * h;

    let mut blocks = Vec::with_capacity(4);
    for (px, py) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let index: Vec<(usize, usize)> = (0..basis_m)
            .filter(|i| i % 2 == px)
            .flat_map(|i| (0..basis_n).filter(move |j| j % 2 == py).map(move |j| (i, j)))
            .collect();
        if index.is_empty() {
            continue;
        }
        let mut k = DenseMatrix::zeros(index.len());
        for (r, &(i, j)) in index.iter().enumerate() {
            for (s, &(p, q)) in index.iter().enumerate() {
                let mut v = 2.0 * b[(i, p)] / h2 * b[(j, q)];
                if r == s {
                    v += c4[i] / (h2 * h2) + c4[j];
                }
                k[(r, s)] = v;
            }
        }
        blocks.push(ParityBlock {
            index,
            eig: sym_eig(&k)?,
        });
    }
    Ok(blocks)
}

/// Rayleigh–Ritz estimates of `μ₁ … μ_k` for the clamped plate on
/// `[0, h] × [0, 1]` with `basis_m` modes along `x` and `basis_n` along `y`.
pub fn biharmonic_mu(h: f64, basis_m: usize, basis_n: usize, k: usize) -> Result<Vec<f64>> {
    if k == 0 || k > basis_m * basis_n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= {}, got {k}",
            basis_m * basis_n
        )));
    }
    let mut values: Vec<f64> = plate_blocks(h, basis_m, basis_n)?
        .into_iter()
        .flat_map(|b| b.eig.values)
        .collect();
    values.sort_by(f64::total_cmp);
    values.truncate(k);
    Ok(values)
}

/// Galerkin groundstate of the plate, normalised in `L²` and positive at
/// the centre.
#[derive(Debug, Clone)]
pub struct PlateGroundstate {
    pub h: f64,
    pub mu: f64,
    /// `(i, j, coefficient)` of `h^{−½}gᵢ₊₁(x/h)gⱼ₊₁(y)`.
    pub terms: Vec<(usize, usize, f64)>,
    x_modes: Vec<BeamMode>,
    y_modes: Vec<BeamMode>,
}

impl PlateGroundstate {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let s = 1.0 / self.h.sqrt();
        self.terms
            .iter()
            .map(|&(i, j, c)| c * s * self.x_modes[i].eval(x / self.h) * self.y_modes[j].eval(y))
            .sum()
    }
}

pub fn plate_groundstate(h: f64, basis_m: usize, basis_n: usize) -> Result<PlateGroundstate> {
    let blocks = plate_blocks(h, basis_m, basis_n)?;
    let block = blocks
        .iter()
        .min_by(|a, b| a.eig.values[0].total_cmp(&b.eig.values[0]))
        .ok_or_else(|| Error::InvalidArgument("empty basis".into()))?;
    let terms = block
        .index
        .iter()
        .zip(&block.eig.vectors[0])
        .map(|(&(i, j), &c)| (i, j, c))
        .collect();
    let mut state = PlateGroundstate {
        h,
        mu: block.eig.values[0],
        terms,
        x_modes: modes(basis_m)?,
        y_modes: modes(basis_n)?,
    };
    if state.eval(0.5 * h, 0.5) < 0.0 {
        state.terms.iter_mut().for_each(|t| t.2 = -t.2);
    }
    Ok(state)
}

/// Samples of a function on the midpoints of a uniform grid, with
/// composite Simpson weights.
fn midpoint_simpson(length: f64, cells: usize) -> (Vec<f64>, Vec<f64>) {
    // Simpson needs an odd number of points
    let cells = if cells.is_multiple_of(2) { cells + 1 } else { cells };
    let step = length / cells as f64;
    let points = (0..cells).map(|i| (i as f64 + 0.5) * step).collect();
    let weights = (0..cells)
        .map(|i| {
            let w = if i == 0 || i == cells - 1 {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            w * step / 3.0
        })
        .collect();
    (points, weights)
}

/// Measured `(‖f₁⁻‖₂/‖f₁‖₂, ‖f₁⁻‖∞/‖f₁‖₂)` of the Galerkin groundstate.
///
/// `grid` is the number of samples per unit length. Points are cell
/// midpoints, which keeps the boundary (where `f₁` vanishes and its sign is
/// rounding noise) out of the sample.
pub fn groundstate_negativity(h: f64, basis_m: usize, basis_n: usize, grid: usize) -> Result<(f64, f64)> {
    if grid < 3 {
        return Err(Error::InvalidArgument(format!("grid must be >= 3, got {grid}")));
    }
    let state = plate_groundstate(h, basis_m, basis_n)?;
    negativity_of(&state, grid)
}

pub fn negativity_of(state: &PlateGroundstate, grid: usize) -> Result<(f64, f64)> {
    let h = state.h;
    let (xs, wx) = midpoint_simpson(h, (grid as f64 * h).ceil() as usize);
    let (ys, wy) = midpoint_simpson(1.0, grid);
    let s = 1.0 / h.sqrt();
    let bm = state.x_modes.len();
    let bn = state.y_modes.len();
    let gx: Vec<Vec<f64>> = (0..bm)
        .map(|i| xs.iter().map(|&x| s * state.x_modes[i].eval(x / h)).collect())
        .collect();
    let gy: Vec<Vec<f64>> = (0..bn)
        .map(|j| ys.iter().map(|&y| state.y_modes[j].eval(y)).collect())
        .collect();

    let (mut total, mut negative, mut worst) = (0.0, 0.0, 0.0f64);
    let mut column = vec![0.0; bn];
    for (px, &wxp) in wx.iter().enumerate() {
        column.iter_mut().for_each(|c| *c = 0.0);
        for &(i, j, c) in &state.terms {
            column[j] += c * gx[i][px];
        }
        for (py, &wyp) in wy.iter().enumerate() {
            let f: f64 = (0..bn).map(|j| column[j] * gy[j][py]).sum();
            let w = wxp * wyp;
            total += w * f * f;
            if f < 0.0 {
                negative += w * f * f;
                worst = worst.max(-f);
            }
        }
    }
    if !(total > 0.0) {
        return Err(Error::NonFinite { x: h, value: total });
    }
    let norm = total.sqrt();
    Ok((negative.sqrt() / norm, worst / norm))
}

/// Rayleigh–Ritz estimates at one `h`, checked against the bracket
/// `[λ₁, ν₁]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleReport {
    pub h: f64,
    pub basis_m: usize,
    pub basis_n: usize,
    pub mu1_estimate: f64,
    pub mu3_estimate: f64,
    pub lambda1: f64,
    pub nu1: f64,
    pub lambda3: f64,
    /// `λ₁ ≤ μ₁ estimate ≤ ν₁ + 1e−6`.
    pub enclosure_ok: bool,
}

pub fn oracle_report(h: f64, basis_m: usize, basis_n: usize) -> Result<OracleReport> {
    if basis_m < 4 || basis_n < 4 {
        return Err(Error::InvalidArgument(format!(
            "basis sizes must be >= 4, got {basis_m}x{basis_n}"
        )));
    }
    let mu = biharmonic_mu(h, basis_m, basis_n, 3)?;
    let l1 = lambda_n(h, 1)?;
    let n1 = nu1(h)?.nu1;
    Ok(OracleReport {
        h,
        basis_m,
        basis_n,
        mu1_estimate: mu[0],
        mu3_estimate: mu[2],
        lambda1: l1,
        nu1: n1,
        lambda3: lambda3(h)?,
        enclosure_ok: l1 <= mu[0] && mu[0] <= n1 + ENCLOSURE_SLACK,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigencurve::{beam_constants, rho};

    #[test]
    fn gram_diagonal_is_gradient_energy() {
        let b = gradient_gram(6).unwrap();
        for n in 1..=6 {
            let k = beam_constants(n).unwrap();
            assert!((b[(n - 1, n - 1)] / (k.d_n * k.c_n * k.c_n) - 1.0).abs() < 1e-10);
        }
        assert_eq!(b[(0, 1)], 0.0);
        assert!(b[(0, 2)].abs() > 1e-3);
    }

    #[test]
    fn zero_coupling_gives_beam_spectrum() {
        let v = h_operator_eigs(1.0, 0.0, 6, 3).unwrap();
        for (n, val) in v.iter().enumerate() {
            let c = beam_constants(n + 1).unwrap().c_n;
            assert!((val / c.powi(4) - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn matches_transcendental_solver() {
        let v = h_operator_eigs(1.0, 25.0, 40, 1).unwrap();
        let exact = rho(1, 25.0).unwrap().rho;
        assert!((v[0] / exact - 1.0).abs() < 1e-6, "{} vs {exact}", v[0]);
    }

    #[test]
    fn obeys_length_scaling() {
        let v = h_operator_eigs(2.0, 10.0, 40, 2).unwrap();
        for n in 1..=2 {
            let exact = rho(n, 40.0).unwrap().rho / 16.0;
            assert!((v[n - 1] / exact - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn single_y_mode_is_one_dimensional_problem() {
        // with only g₁ across the strip the plate form is H(h, d₁c₁²) + c₁⁴
        let k = beam_constants(1).unwrap();
        let alpha = k.d_n * k.c_n * k.c_n;
        let plate = biharmonic_mu(3.0, 12, 1, 4).unwrap();
        let line = h_operator_eigs(3.0, alpha, 12, 4).unwrap();
        for (p, l) in plate.iter().zip(&line) {
            assert!((p - l - k.c_n.powi(4)).abs() < 1e-9 * p);
        }
    }

    #[test]
    fn uncoupled_product_basis_sums_spectra() {
        // one mode along x: the x-factor contributes c₁⁴h⁻⁴ and couples via
        // 2B₁₁h⁻² to the y problem
        let h: f64 = 2.0;
        let k = beam_constants(1).unwrap();
        let b11 = k.d_n * k.c_n * k.c_n;
        let plate = biharmonic_mu(h, 1, 10, 3).unwrap();
        let line = h_operator_eigs(1.0, b11 / (h * h), 10, 3).unwrap();
        for (p, l) in plate.iter().zip(&line) {
            assert!((p - l - k.c_n.powi(4) / h.powi(4)).abs() < 1e-9 * p);
        }
    }

    #[test]
    fn nested_bases_decrease() {
        let coarse = biharmonic_mu(1.0, 5, 5, 3).unwrap();
        let fine = biharmonic_mu(1.0, 10, 10, 3).unwrap();
        for (c, f) in coarse.iter().zip(&fine) {
            assert!(f <= c);
        }
    }

    #[test]
    fn square_estimate_inside_bracket() {
        let mu = biharmonic_mu(1.0, 10, 10, 1).unwrap()[0];
        assert!((1294.9339..=1295.94).contains(&mu), "{mu}");
    }

    #[test]
    fn groundstate_normalised() {
        let g = plate_groundstate(1.0, 8, 8).unwrap();
        let norm: f64 = g.terms.iter().map(|t| t.2 * t.2).sum();
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(g.eval(0.5, 0.5) > 0.0);
        assert!(g.eval(0.0, 0.3).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(h_operator_eigs(1.0, 1.0, 3, 4).is_err());
        assert!(h_operator_eigs(0.0, 1.0, 3, 1).is_err());
        assert!(biharmonic_mu(1.0, 100, 100, 1).is_err());
        assert!(oracle_report(1.0, 3, 10).is_err());
        assert!(groundstate_negativity(1.0, 4, 4, 2).is_err());
    }
}
