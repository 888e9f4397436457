use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::Field;
use crate::disk::{mobius_eval, DiskPoint};
use crate::error::{Error, Result};
use crate::operator::TruncatedOperator;
use crate::quadrature::{monomial_moment, DiskQuadrature};
use crate::symbol::{HarmonicProductSum, MonomialSymbol};

/// Five-point stencil step `h = h0 (1 - |z|)`, optionally Richardson-extrapolated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FdPolicy {
    pub h0: f64,
    pub richardson: bool,
}

impl Default for FdPolicy {
    fn default() -> Self {
        Self {
            h0: 1e-3,
            richardson: false,
        }
    }
}

impl FdPolicy {
    pub fn step(&self, z: DiskPoint) -> f64 {
        self.h0 * (1.0 - z.norm())
    }
}

fn five_point(field: &impl Field, z: DiskPoint, h: f64) -> Result<Complex64> {
    let zv = z.value();
    let at = |offset: Complex64| {
        DiskPoint::new(zv + offset).map_err(|_| Error::StencilOutsideDisk { z: zv, h })
    };
    let sum = field.value(at(Complex64::new(h, 0.0))?)
        + field.value(at(Complex64::new(-h, 0.0))?)
        + field.value(at(Complex64::new(0.0, h))?)
        + field.value(at(Complex64::new(0.0, -h))?);
    Ok((sum - field.value(z) * 4.0) / (h * h))
}

/// Finite-difference Laplacian `(f(z+h) + f(z-h) + f(z+ih) + f(z-ih) - 4 f(z)) / h^2`.
pub fn laplacian_fd(field: &impl Field, z: DiskPoint, policy: FdPolicy) -> Result<Complex64> {
    let h = policy.step(z);
    let coarse = five_point(field, z, h)?;
    if policy.richardson {
        let fine = five_point(field, z, 0.5 * h)?;
        Ok((fine * 4.0 - coarse) / 3.0)
    } else {
        Ok(coarse)
    }
}

/// `(Delta S~)(0) = 16 <S w, w> - 8 <S 1, 1> = 8 <S e_1, e_1> - 8 <S e_0, e_0>`.
pub fn laplacian_berezin_at_zero_operator(s: &TruncatedOperator) -> Result<Complex64> {
    if s.dim() < 2 {
        return Err(Error::InvalidDimension {
            dim: s.dim(),
            reason: "the Laplacian at 0 needs dim >= 2",
        });
    }
    Ok((s.entry(1, 1) - s.entry(0, 0)) * 8.0)
}

/// `(Delta u~)(0) = 8 int u(w) (2|w|^2 - 1) dA(w)`, from the monomial moments.
pub fn laplacian_berezin_at_zero_symbol(u: &MonomialSymbol) -> Complex64 {
    u.terms()
        .map(|((j, k), c)| {
            let (j, k) = (j as usize, k as usize);
            c * (8.0 * (2.0 * monomial_moment(j + 1, k + 1) - monomial_moment(j, k)))
        })
        .sum()
}

/// `(1 - |z|^2)^2 (Delta f)(z)` with the finite-difference Laplacian.
pub fn invariant_laplacian(
    field: &impl Field,
    z: DiskPoint,
    policy: FdPolicy,
) -> Result<Complex64> {
    Ok(laplacian_fd(field, z, policy)? * z.defect().powi(2))
}

/// `int (u o phi_z)(w) (2|w|^2 - 1) dA(w)`. Eight times this equals
/// `(1 - |z|^2)^2 (Delta u~)(z)`.
pub fn mobius_moment(u: &MonomialSymbol, z: DiskPoint, rule: &DiskQuadrature) -> Complex64 {
    rule.integrate(|w| u.eval(mobius_eval(z, w)) * (2.0 * w.norm_sqr() - 1.0))
}

/// `(1 - |z|^2)^2 (Delta u)(z)` for `u` given as a sum of products of harmonic symbols.
pub fn harmonic_sum_boundary_quantity(u: &HarmonicProductSum, z: DiskPoint) -> Complex64 {
    u.expand().laplacian().eval(z) * z.defect().powi(2)
}
