//! Truncated operators on Cayley balls and the finite-dimensional checks built on them.

mod gap;
mod gradient;
mod operator;

pub use gap::{conditional_negativity_check, spectral_gap_check, GapReport};
pub use gradient::{
    carre_du_champ, carre_du_champ_gram, convolution_kernel_check, gradient_inner, min_eigenvalue,
    riesz_isometry_check, ConvolutionReport, GramReport, RieszReport, MAX_CONVOLUTION_DIM,
};
pub use operator::{
    coefficient_matrix, hadamard_tensor, psi_group_matrix, schatten_norm, schatten_norm_matrix, singular_values,
    tensor_compression, young_slack, TruncatedOperator, MAX_DIM,
};

use coxsp_core::BallError;
use coxsp_gamma::GammaError;
use coxsp_length::LengthError;
use thiserror::Error;

/// Tolerance for positive semidefiniteness and isometry checks.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Ball(#[from] BallError),
    #[error(transparent)]
    Length(#[from] LengthError),
    #[error("matrix dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: usize, cap: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("radius {radius} leaves no interior for translations of total length {margin}")]
    NoInterior { radius: usize, margin: usize },
}
