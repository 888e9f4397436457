use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_dim, unitary_uz, TruncatedOperator};
use crate::disk::DiskPoint;
use crate::error::{Error, Result};
use crate::quadrature::DiskQuadrature;
use crate::symbol::{AnalyticSymbol, MonomialSymbol};

/// Largest Gram-matrix deviation tolerated by [`toeplitz_quadrature`].
pub const QUADRATURE_RESIDUAL_TOL: f64 = 1e-10;

/// Compression of `T_u` from the moment formula: for `w^j conj(w)^k`,
/// `<T e_p, e_q> = sqrt((p+1)(q+1)) / (j+p+1)` when `j + p = k + q`.
pub fn toeplitz_exact(u: &MonomialSymbol, dim: usize) -> Result<TruncatedOperator> {
    check_dim(dim)?;
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    for ((j, k), c) in u.terms() {
        let (j, k) = (j as usize, k as usize);
        for q in 0..dim {
            // p = k + q - j
            let Some(p) = (k + q).checked_sub(j).filter(|&p| p < dim) else {
                continue;
            };
            let entry = (((p + 1) * (q + 1)) as f64).sqrt() / (j + p + 1) as f64;
            m[(q, p)] += c * entry;
        }
    }
    Ok(TruncatedOperator::from_matrix_unchecked(m))
}

/// Compression of `T_f` for a pointwise symbol, `<f e_p, e_q>` by quadrature.
///
/// Each radial ring is reduced to its angular Fourier coefficients first, so
/// the cost is `O(n_radial * n_angular * dim)` rather than one `dim x dim`
/// update per node. Fails when the rule cannot reproduce the Gram matrix of
/// the basis to [`QUADRATURE_RESIDUAL_TOL`].
pub fn toeplitz_quadrature<F>(f: F, dim: usize, rule: &DiskQuadrature) -> Result<TruncatedOperator>
where
    F: Fn(DiskPoint) -> Complex64,
{
    check_dim(dim)?;
    let residual = rule.moment_residual(dim);
    if residual > QUADRATURE_RESIDUAL_TOL {
        return Err(Error::QuadratureInsufficient {
            residual,
            tolerance: QUADRATURE_RESIDUAL_TOL,
        });
    }
    let m_ang = rule.n_angular();
    let twiddle: Vec<Complex64> = (0..m_ang)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m_ang as f64))
        .collect();
    let sqrt: Vec<f64> = (0..dim).map(|n| ((n + 1) as f64).sqrt()).collect();
    let mut out = DMatrix::<Complex64>::zeros(dim, dim);
    let mut samples = vec![Complex64::new(0.0, 0.0); m_ang];
    // fourier[d + dim - 1] = mean_k f(r e^{i theta_k}) e^{i d theta_k}
    let mut fourier = vec![Complex64::new(0.0, 0.0); 2 * dim - 1];
    for &(r, weight) in rule.radial_nodes() {
        for (k, s) in samples.iter_mut().enumerate() {
            *s = f(DiskPoint::new_unchecked(twiddle[k] * r));
        }
        for (idx, slot) in fourier.iter_mut().enumerate() {
            let d = idx as i64 - (dim as i64 - 1);
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, s) in samples.iter().enumerate() {
                let t = (d * k as i64).rem_euclid(m_ang as i64) as usize;
                acc += s * twiddle[t];
            }
            *slot = acc / m_ang as f64;
        }
        let powers: Vec<f64> = (0..2 * dim - 1).map(|n| r.powi(n as i32)).collect();
        for q in 0..dim {
            for p in 0..dim {
                let d = p as i64 - q as i64;
                let f_d = fourier[(d + dim as i64 - 1) as usize];
                out[(q, p)] += f_d * (weight * sqrt[p] * sqrt[q] * powers[p + q]);
            }
        }
    }
    TruncatedOperator::from_matrix(out)
}

/// `U_z T_u U_z`, the covariance route to `T_{u o phi_z}`.
///
/// All three factors are compressed to `dim`, so only the leading block
/// reported by [`super::reliable_block`] is a faithful compression of
/// `T_{u o phi_z}`.
pub fn covariant_toeplitz(
    u: &MonomialSymbol,
    z: DiskPoint,
    dim: usize,
) -> Result<TruncatedOperator> {
    let uz = unitary_uz(z, dim)?;
    let t = toeplitz_exact(u, dim)?;
    uz.try_mul(&t)?.try_mul(&uz)
}

/// `2 T_{uv} - T_u T_v - T_v T_u`, which equals `H_{conj u}* H_v + H_{conj v}* H_u`
/// without representing the Hankel operators.
pub fn semicommutator_defect(
    u: &MonomialSymbol,
    v: &MonomialSymbol,
    dim: usize,
) -> Result<TruncatedOperator> {
    let tuv = toeplitz_exact(&u.multiply(v), dim)?;
    let tu = toeplitz_exact(u, dim)?;
    let tv = toeplitz_exact(v, dim)?;
    tuv.scale(2.0)
        .try_sub(&tu.try_mul(&tv)?)?
        .try_sub(&tv.try_mul(&tu)?)
}

/// Multiplication operator `T_f` for analytic `f`, from its Taylor coefficients.
/// Lower triangular, so compressions of products `T_f T_g` are exact.
pub fn analytic_toeplitz(f: &AnalyticSymbol, dim: usize) -> Result<TruncatedOperator> {
    check_dim(dim)?;
    TruncatedOperator::from_matrix(analytic_columns(&f.taylor(dim), dim, dim))
}

/// Columns `0..dim` of `T_f`, kept to `rows` rows.
fn analytic_columns(coeffs: &[Complex64], rows: usize, dim: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(rows, dim, |q, p| {
        if q >= p && q - p < coeffs.len() {
            coeffs[q - p] * (((p + 1) as f64) / ((q + 1) as f64)).sqrt()
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `2 T_{conj(f) g} - T_{conj f} T_g - T_g T_{conj f}` for analytic `f`, `g`, which
/// reduces to `T_{conj f} T_g - T_g T_{conj f}`.
///
/// Both products are compressed exactly: `T_{conj f} T_g = T_f* T_g` is formed from
/// columns of `T_f`, `T_g` long enough that the dropped Taylor tail is below `tol`,
/// and `T_{conj f}` leaves `span(e_0..e_{dim-1})` invariant.
pub fn analytic_semicommutator_defect(
    f: &AnalyticSymbol,
    g: &AnalyticSymbol,
    dim: usize,
    tol: f64,
) -> Result<TruncatedOperator> {
    check_dim(dim)?;
    const MAX_ROWS: usize = 1 << 16;
    let len = f
        .taylor_length(0.0, tol, MAX_ROWS)
        .max(g.taylor_length(0.0, tol, MAX_ROWS));
    let rows = dim + len;
    let a = analytic_columns(&f.taylor(len), rows, dim);
    let b = analytic_columns(&g.taylor(len), rows, dim);
    let conj_f_g = a.adjoint() * &b;
    let tf = a.rows(0, dim).into_owned();
    let tg = b.rows(0, dim).into_owned();
    TruncatedOperator::from_matrix(conj_f_g - tg * tf.adjoint())
}
