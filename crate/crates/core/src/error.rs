use thiserror::Error;

/// Errors produced by the solvers in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    InvalidBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("function returned a non-finite value {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },

    #[error("matrix is not symmetric: |a[{row}][{col}] - a[{col}][{row}]| = {defect}")]
    NotSymmetric { row: usize, col: usize, defect: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eigenvalue {n} of H(1, {alpha}) not bracketed on gap range [{scan_lo}, {scan_hi}]")]
    RootNotBracketed {
        n: usize,
        alpha: f64,
        scan_lo: f64,
        scan_hi: f64,
    },

    #[error("derivative ill-conditioned at alpha = {alpha}: |dF/dbeta| = {slope}")]
    IllConditioned { alpha: f64, slope: f64 },

    #[error("fixed-point equation for the separable bound has no sign change at h = {h}")]
    NoFixedPoint { h: f64 },

    #[error("negativity bound is vacuous at h = {h}: lambda3 = {lambda3} <= nu1 = {nu1}")]
    VacuousBound { h: f64, lambda3: f64, nu1: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
