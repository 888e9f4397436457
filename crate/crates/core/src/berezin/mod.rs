//! Berezin transforms of operators and symbols, Laplacian tooling and
//! boundary-decay profiling.
//!
//! Three independent routes are provided for `u~(z) = <T_u k_z, k_z>`:
//! the closed series for polynomial symbols, quadrature of `u |k_z|^2`, and
//! the double sum over a truncated matrix. "Approaching the boundary" is
//! always a concrete path `z_k -> e^{i theta}` sampled at finitely many radii.

mod covariance;
mod decay;
mod injectivity;
mod laplacian;
mod transform;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disk::DiskPoint;
use crate::error::{Error, Result};
use crate::quadrature::{DiskQuadrature, DEFAULT_ANGULAR, DEFAULT_RADIAL};

pub use covariance::{covariance_field_check, CovarianceResiduals};
pub use decay::{
    commutator_compactness_indicator, decay_profile, dyadic_schedule, ApproachPath,
    CommutatorReport, DecayProfile, DecaySample, Verdict, ZeroSample,
};
pub use injectivity::{recover_from_berezin, recovery_grid};
pub use laplacian::{
    harmonic_sum_boundary_quantity, invariant_laplacian, laplacian_berezin_at_zero_operator,
    laplacian_berezin_at_zero_symbol, laplacian_fd, mobius_moment, FdPolicy,
};
pub use transform::{
    berezin_conj_product, berezin_of_product, berezin_operator, berezin_quadrature, berezin_series,
    conj_product_converges, is_reliable, localization_norm, localization_norm_sq,
    mean_value_transform, reliable_radius, ProductBerezin, QuadratureEstimate, MAX_TAYLOR_TERMS,
};

/// Per-sample status attached to values near the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleFlag {
    Ok,
    /// Beyond the matrix route's reliable radius; evaluated through the symbol route instead.
    SymbolRoute,
    /// Neither truncation nor quadrature can be trusted at this point.
    Unreliable,
}

impl SampleFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            SampleFlag::Ok => "ok",
            SampleFlag::SymbolRoute => "symbol-route",
            SampleFlag::Unreliable => "unreliable",
        }
    }

    pub fn is_trusted(self) -> bool {
        !matches!(self, SampleFlag::Unreliable)
    }
}

impl fmt::Display for SampleFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Anything that can be sampled on the disk.
pub trait Field {
    fn value(&self, z: DiskPoint) -> Complex64;

    fn flag(&self, _z: DiskPoint) -> SampleFlag {
        SampleFlag::Ok
    }
}

impl<F> Field for F
where
    F: Fn(DiskPoint) -> Complex64,
{
    fn value(&self, z: DiskPoint) -> Complex64 {
        self(z)
    }
}

type Evaluator = Arc<dyn Fn(DiskPoint) -> Complex64 + Send + Sync>;
type Flagger = Arc<dyn Fn(DiskPoint) -> SampleFlag + Send + Sync>;

/// A labelled, deterministic function on the disk with an optional reliability flag.
#[derive(Clone)]
pub struct ScalarField {
    label: String,
    eval: Evaluator,
    flag: Option<Flagger>,
}

impl ScalarField {
    pub fn new<F>(label: impl Into<String>, eval: F) -> Self
    where
        F: Fn(DiskPoint) -> Complex64 + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            eval: Arc::new(eval),
            flag: None,
        }
    }

    pub fn with_flag<G>(mut self, flag: G) -> Self
    where
        G: Fn(DiskPoint) -> SampleFlag + Send + Sync + 'static,
    {
        self.flag = Some(Arc::new(flag));
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl Field for ScalarField {
    fn value(&self, z: DiskPoint) -> Complex64 {
        (self.eval)(z)
    }

    fn flag(&self, z: DiskPoint) -> SampleFlag {
        self.flag.as_ref().map_or(SampleFlag::Ok, |f| f(z))
    }
}

impl fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarField")
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

/// Resolved numerical settings shared by the Berezin tooling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BerezinConfig {
    /// Truncation dimension `N` for matrix routes.
    pub dim: usize,
    /// Series truncation and reliable-radius tolerance.
    pub tol: f64,
    pub n_radial: usize,
    pub n_angular: usize,
    pub fd: FdPolicy,
    /// Verdict threshold on the final path sample.
    pub threshold: f64,
}

impl Default for BerezinConfig {
    fn default() -> Self {
        Self {
            dim: crate::operator::DEFAULT_DIM,
            tol: 1e-10,
            n_radial: DEFAULT_RADIAL,
            n_angular: DEFAULT_ANGULAR,
            fd: FdPolicy::default(),
            threshold: 1e-3,
        }
    }
}

impl BerezinConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dim < 8 {
            return Err(Error::Config(format!(
                "truncation must be at least 8, got {}",
                self.dim
            )));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::Config(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        if self.threshold.is_nan() || self.threshold <= 0.0 {
            return Err(Error::Config(format!(
                "threshold must be positive, got {}",
                self.threshold
            )));
        }
        if !(self.fd.h0 > 0.0 && self.fd.h0 < 1.0) {
            return Err(Error::Config(format!(
                "finite-difference scale must lie in (0, 1), got {}",
                self.fd.h0
            )));
        }
        if self.n_radial == 0 || self.n_angular == 0 {
            return Err(Error::Config("quadrature sizes must be positive".into()));
        }
        Ok(())
    }

    pub fn rule(&self) -> Result<DiskQuadrature> {
        DiskQuadrature::new(self.n_radial, self.n_angular)
    }
}
