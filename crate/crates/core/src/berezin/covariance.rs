use serde::{Deserialize, Serialize};

use super::{berezin_operator, is_reliable, laplacian_fd, BerezinConfig, SampleFlag};
use crate::disk::{mobius_eval, DiskPoint};
use crate::error::Result;
use crate::operator::{unitary_uz, TruncatedOperator};

/// Residuals of the Moebius covariance of the Berezin transform at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovarianceResiduals {
    /// `|S~(phi_z(w)) - (U_z S U_z)~(w)|`.
    pub value_residual: f64,
    /// `|(1-|w|^2)^2 Delta(S~ o phi_z)(w) - (1-|phi_z(w)|^2)^2 (Delta S~)(phi_z(w))|`.
    pub laplacian_residual: f64,
    pub flag: SampleFlag,
}

/// Checks `S~ o phi_z = (U_z S U_z)~` and the invariance of `(1-|z|^2)^2 Delta` at `w`.
///
/// Flagged unreliable when either `w` or `phi_z(w)`, with its finite-difference
/// stencil, lies beyond the reliable radius of `S.dim()`.
pub fn covariance_field_check(
    s: &TruncatedOperator,
    z: DiskPoint,
    w: DiskPoint,
    config: &BerezinConfig,
) -> Result<CovarianceResiduals> {
    let image = mobius_eval(z, w);
    let dim = s.dim();
    let moved = {
        let u = unitary_uz(z, dim)?;
        u.try_mul(s)?.try_mul(&u)?
    };
    let value_residual = (berezin_operator(s, image) - berezin_operator(&moved, w)).norm();

    let transform = |p: DiskPoint| berezin_operator(s, p);
    let composed = |p: DiskPoint| berezin_operator(s, mobius_eval(z, p));
    let lhs = laplacian_fd(&composed, w, config.fd)? * w.defect().powi(2);
    let rhs = laplacian_fd(&transform, image, config.fd)? * image.defect().powi(2);

    let margin =
        |p: DiskPoint| DiskPoint::from_polar((p.norm() + config.fd.step(p)).min(1.0 - 1e-12), 0.0);
    let reliable = [w, image].iter().all(|&p| {
        margin(p)
            .map(|m| is_reliable(m, dim, config.tol))
            .unwrap_or(false)
    });
    Ok(CovarianceResiduals {
        value_residual,
        laplacian_residual: (lhs - rhs).norm(),
        flag: if reliable {
            SampleFlag::Ok
        } else {
            SampleFlag::Unreliable
        },
    })
}
