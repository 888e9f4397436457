use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::disk::DiskPoint;
use crate::error::{Error, Result};
use crate::operator::TruncatedOperator;

/// Polar grid with `n_radii` radii evenly spaced in `[0.15, 0.93]` and `n_angles` angles.
pub fn recovery_grid(n_radii: usize, n_angles: usize) -> Vec<DiskPoint> {
    let mut out = Vec::with_capacity(n_radii * n_angles);
    for i in 0..n_radii {
        let r = if n_radii == 1 {
            0.5
        } else {
            0.15 + 0.78 * i as f64 / (n_radii - 1) as f64
        };
        for k in 0..n_angles {
            let theta = std::f64::consts::TAU * k as f64 / n_angles as f64;
            out.push(DiskPoint::new_unchecked(Complex64::from_polar(r, theta)));
        }
    }
    out
}

/// Least-squares fit of a `dim x dim` matrix from samples `(z, S~(z))`, inverting
/// `S~(z) = (1-|z|^2)^2 sum_{q,p} sqrt((q+1)(p+1)) <S e_p, e_q> z^q conj(z)^p`.
pub fn recover_from_berezin(
    samples: &[(DiskPoint, Complex64)],
    dim: usize,
) -> Result<TruncatedOperator> {
    let unknowns = dim * dim;
    if dim == 0 || samples.len() < unknowns {
        return Err(Error::Config(format!(
            "need at least {unknowns} samples for a {dim}x{dim} fit, got {}",
            samples.len()
        )));
    }
    let mut design = DMatrix::<Complex64>::zeros(samples.len(), unknowns);
    let mut rhs = DVector::<Complex64>::zeros(samples.len());
    let mut zp = vec![Complex64::new(0.0, 0.0); dim];
    for (row, &(z, value)) in samples.iter().enumerate() {
        let zv = z.value();
        let mut power = Complex64::new(1.0, 0.0);
        for (j, slot) in zp.iter_mut().enumerate() {
            *slot = power * ((j + 1) as f64).sqrt();
            power *= zv;
        }
        for q in 0..dim {
            for p in 0..dim {
                design[(row, q * dim + p)] = zp[q] * zp[p].conj();
            }
        }
        rhs[row] = value / z.defect().powi(2);
    }
    let solution = design
        .svd(true, true)
        .solve(&rhs, 1e-13)
        .map_err(|e| Error::Config(format!("least-squares solve failed: {e}")))?;
    TruncatedOperator::from_matrix(DMatrix::from_fn(dim, dim, |q, p| solution[q * dim + p]))
}
