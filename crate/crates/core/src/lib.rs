//! Lower and upper bounds, asymptotic expansions and groundstate-negativity
//! bounds for the first eigenvalue of the clamped biharmonic operator on the
//! rectangle `[0, h] × [0, 1]`.
//!
//! The crate is built around the one-dimensional family
//! `H(h, α) = d⁴/dx⁴ − 2α d²/dx²` with clamped ends:
//!
//! * [`eigencurve`] solves the characteristic equation of `H(1, α)` for its
//!   eigenvalues `ρₙ(α)` and their derivatives,
//! * [`beam`] evaluates the clamped-beam modes that diagonalise `H(1, 0)`,
//! * [`greens`] evaluates the explicit Green's function of `H(1, α)`,
//! * [`bounds`] combines the eigencurves into the lower bounds `λₙ(h)`, the
//!   separable (Hartree) upper bound `ν₁(h)` and the negativity bounds,
//! * [`oracle`] is an independent Rayleigh–Ritz solver in a beam-mode basis
//!   used to cross-check everything above.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod beam;
pub mod bounds;
pub mod eigencurve;
pub mod error;
pub mod greens;
pub mod numerics;
pub mod oracle;

pub use error::{Error, Result};
