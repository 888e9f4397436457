use std::fmt;

use num_complex::Complex64;

use super::{format_complex, BlaschkeProduct, MonomialSymbol};
use crate::disk::DiskPoint;
use crate::error::{Error, Result};

/// A bounded analytic function on the disk: an analytic polynomial or a finite Blaschke product.
#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticSymbol {
    Polynomial(MonomialSymbol),
    Blaschke(BlaschkeProduct),
}

impl AnalyticSymbol {
    pub fn polynomial(symbol: MonomialSymbol) -> Result<Self> {
        if symbol.is_analytic() {
            Ok(Self::Polynomial(symbol))
        } else {
            Err(Error::NotAnalytic(symbol.to_string()))
        }
    }

    pub fn eval(&self, w: DiskPoint) -> Complex64 {
        match self {
            Self::Polynomial(p) => p.eval(w),
            Self::Blaschke(b) => b.eval(w),
        }
    }

    pub fn deriv(&self, w: DiskPoint) -> Complex64 {
        match self {
            Self::Polynomial(p) => p.dz().eval(w),
            Self::Blaschke(b) => b.deriv(w),
        }
    }

    pub fn taylor(&self, len: usize) -> Vec<Complex64> {
        match self {
            Self::Polynomial(p) => {
                let mut c = p.analytic_coeffs();
                c.resize(len, Complex64::new(0.0, 0.0));
                c
            }
            Self::Blaschke(b) => b.taylor(len),
        }
    }

    /// Radius `rho` with Taylor coefficients `O(n^m rho^n)`: zero for polynomials,
    /// the largest zero modulus for Blaschke products.
    pub fn coefficient_radius(&self) -> f64 {
        match self {
            Self::Polynomial(_) => 0.0,
            Self::Blaschke(b) => b.zeros().iter().map(|a| a.norm()).fold(0.0, f64::max),
        }
    }

    /// Number of Taylor coefficients to keep so the dropped tail is below `tol`
    /// when combined with a kernel at radius `radius`.
    pub fn taylor_length(&self, radius: f64, tol: f64, cap: usize) -> usize {
        let base = match self {
            Self::Polynomial(p) => p.deg_z() as usize + 1,
            Self::Blaschke(b) => b.zeros().len(),
        };
        let rho = self.coefficient_radius().max(radius);
        if rho == 0.0 {
            return base;
        }
        let mut n = 1usize;
        while n < cap && ((n + 1) as f64).powi(2) * rho.powi(n as i32) >= tol {
            n = (n * 5 / 4).max(n + 1);
        }
        (base + n).min(cap)
    }

    pub fn is_constant(&self) -> bool {
        match self {
            Self::Polynomial(p) => p.deg_z() == 0,
            Self::Blaschke(_) => false,
        }
    }
}

impl From<BlaschkeProduct> for AnalyticSymbol {
    fn from(b: BlaschkeProduct) -> Self {
        Self::Blaschke(b)
    }
}

impl fmt::Display for AnalyticSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Polynomial(p) => write!(f, "{p}"),
            Self::Blaschke(b) => {
                let zeros: Vec<String> = b
                    .zeros()
                    .iter()
                    .map(|a| format_complex(a.value()))
                    .collect();
                write!(f, "blaschke:{}", zeros.join(","))
            }
        }
    }
}
