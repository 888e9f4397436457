use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {0} is outside the admissible disk |z| <= 1 - 1e-12")]
    OutsideDisk(Complex64),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid dimension {dim}: {reason}")]
    InvalidDimension { dim: usize, reason: &'static str },

    #[error("matrix has non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("symbol is not harmonic: {0}")]
    NotHarmonic(String),

    #[error("symbol is not analytic: {0}")]
    NotAnalytic(String),

    #[error("finite-difference stencil of width {h:e} at {z} leaves the disk")]
    StencilOutsideDisk { z: Complex64, h: f64 },

    #[error("quadrature rule too coarse: estimated residual {residual:e} exceeds {tolerance:e}")]
    QuadratureInsufficient { residual: f64, tolerance: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("no coefficient pair (alpha, beta) satisfies the harmonic-product conditions")]
    NoHarmonicPair,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
