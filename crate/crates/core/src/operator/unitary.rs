use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_dim, TruncatedOperator};
use crate::disk::DiskPoint;
use crate::error::Result;

/// Upper bound on the series length used when measuring column tails.
const MAX_TAIL_SERIES: usize = 1 << 21;

/// Taylor coefficients (raw monomial basis) of `phi_z^p phi_z'` for `p = 0..columns`,
/// each of length `len`.
///
/// Multiplying a series by `phi_z = (z - w) / (1 - conj(z) w)` is the stable
/// recurrence `h_n = conj(z) h_{n-1} + z g_n - g_{n-1}`.
fn column_series(
    z: DiskPoint,
    columns: usize,
    len: usize,
    mut visit: impl FnMut(usize, &[Complex64]),
) {
    let (z, zb) = (z.value(), z.value().conj());
    // phi_z' = (|z|^2 - 1) sum (n+1) conj(z)^n w^n
    let mut g: Vec<Complex64> = Vec::with_capacity(len);
    let mut power = Complex64::new(z.norm_sqr() - 1.0, 0.0);
    for n in 0..len {
        g.push(power * (n + 1) as f64);
        power *= zb;
    }
    let mut h = vec![Complex64::new(0.0, 0.0); len];
    for p in 0..columns {
        visit(p, &g);
        let mut prev_g = Complex64::new(0.0, 0.0);
        let mut prev_h = Complex64::new(0.0, 0.0);
        for n in 0..len {
            let next = zb * prev_h + z * g[n] - prev_g;
            prev_g = g[n];
            h[n] = next;
            prev_h = next;
        }
        std::mem::swap(&mut g, &mut h);
    }
}

/// Compression of `U_z f = (f o phi_z) phi_z'`. Column `p` holds the first `dim`
/// orthonormal coefficients of `sqrt(p+1) phi_z^p phi_z'`.
pub fn unitary_uz(z: DiskPoint, dim: usize) -> Result<TruncatedOperator> {
    check_dim(dim)?;
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    let sqrt: Vec<f64> = (0..dim).map(|n| ((n + 1) as f64).sqrt()).collect();
    column_series(z, dim, dim, |p, coeffs| {
        for (n, c) in coeffs.iter().enumerate() {
            m[(n, p)] = c * (sqrt[p] / sqrt[n]);
        }
    });
    TruncatedOperator::from_matrix(m)
}

/// Norm of the part of each column `U_z e_p` (`p < dim`) lying beyond index `dim`.
///
/// Column `p` of `U_z` spreads out to roughly index `p (1 + |z|) / (1 - |z|)`,
/// so the compression only captures the leading columns faithfully.
pub fn uz_column_tails(z: DiskPoint, dim: usize) -> Vec<f64> {
    let r = z.norm();
    if r == 0.0 {
        return vec![0.0; dim];
    }
    let spread = dim as f64 * (1.0 + r) / (1.0 - r);
    let decay = 60.0 / -r.ln();
    let len = ((dim as f64 + spread + decay).ceil() as usize).clamp(2 * dim, MAX_TAIL_SERIES);
    let mut tails = vec![0.0; dim];
    column_series(z, dim, len, |p, coeffs| {
        let scale = (p + 1) as f64;
        let mut tail = 0.0;
        for (n, c) in coeffs.iter().enumerate() {
            let e = c.norm_sqr() * scale / (n + 1) as f64;
            if n >= dim {
                tail += e;
            }
        }
        tails[p] = tail.sqrt();
    });
    tails
}

/// Number of leading columns of `unitary_uz(z, dim)` whose tail beyond `dim` is below `tol`.
pub fn reliable_block(z: DiskPoint, dim: usize, tol: f64) -> usize {
    uz_column_tails(z, dim)
        .iter()
        .take_while(|&&t| t < tol)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::normalized_kernel;
    use crate::operator::basis_vector;

    fn p(re: f64, im: f64) -> DiskPoint {
        DiskPoint::from_re_im(re, im).unwrap()
    }

    #[test]
    fn origin_gives_parity_diagonal() {
        let u = unitary_uz(DiskPoint::ORIGIN, 6).unwrap();
        for q in 0..6 {
            for col in 0..6 {
                let want = if q == col {
                    (-1f64).powi(col as i32 + 1)
                } else {
                    0.0
                };
                assert_eq!(u.entry(q, col), Complex64::new(want, 0.0));
            }
        }
    }

    #[test]
    fn first_column_is_minus_normalized_kernel() {
        let z = p(0.4, 0.3);
        let u = unitary_uz(z, 32).unwrap();
        for n in 0..32 {
            // k_z = (1 - |z|^2) sum sqrt(n+1) conj(z)^n e_n
            let want = -(z.value().conj().powu(n as u32)) * (z.defect() * ((n + 1) as f64).sqrt());
            assert!((u.entry(n, 0) - want).norm() < 1e-15);
        }
        // pointwise: (U_z 1)(w) = -k_z(w)
        let w = p(-0.3, 0.1);
        let series: Complex64 = (0..32)
            .map(|n| u.entry(n, 0) * ((n + 1) as f64).sqrt() * w.value().powu(n as u32))
            .sum();
        assert!((series + normalized_kernel(z, w)).norm() < 1e-12);
    }

    #[test]
    fn entries_match_closed_form_columns() {
        // column p is sqrt(p+1) phi^p phi'; compare a value of the series to the function
        let z = p(0.2, -0.35);
        let u = unitary_uz(z, 96).unwrap();
        let w = p(0.1, 0.2);
        for col in [0, 1, 5] {
            let series: Complex64 = (0..96)
                .map(|n| u.entry(n, col) * ((n + 1) as f64).sqrt() * w.value().powu(n as u32))
                .sum();
            let phi = crate::disk::mobius_eval(z, w).value();
            let want =
                phi.powu(col as u32) * crate::disk::mobius_deriv(z, w) * ((col + 1) as f64).sqrt();
            assert!((series - want).norm() < 1e-12, "{col}");
        }
    }

    #[test]
    fn square_is_identity_on_reliable_block() {
        for z in [p(0.5, 0.0), p(0.0, 0.7), p(-0.3, 0.3)] {
            let u = unitary_uz(z, 64).unwrap();
            let block = reliable_block(z, 64, 1e-9);
            assert!(block >= 1);
            let sq = u.try_mul(&u).unwrap();
            let id = TruncatedOperator::identity(64).unwrap();
            assert!(
                sq.max_abs_diff_leading(&id, block) < 1e-8,
                "{z}: block {block}"
            );
        }
    }

    #[test]
    fn reliable_columns_are_orthonormal() {
        let z = p(0.6, 0.2);
        let u = unitary_uz(z, 64).unwrap();
        let block = reliable_block(z, 64, 1e-9);
        for a in 0..block {
            for b in 0..block {
                let ea = u.apply(&basis_vector(64, a)).unwrap();
                let eb = u.apply(&basis_vector(64, b)).unwrap();
                let ip = eb.dotc(&ea);
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((ip - want).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn column_spread_limits_the_reliable_block() {
        // at |z| = 0.5 the spread factor is 3, so a 32-column block cannot fit in 64 rows
        let z = p(0.5, 0.0);
        let tails = uz_column_tails(z, 64);
        assert!(tails[31] > 0.1);
        assert!(tails[0] < 1e-15);
        let b64 = reliable_block(z, 64, 1e-8);
        let b128 = reliable_block(z, 128, 1e-8);
        assert!(b64 < 32 && b128 > b64);
        assert_eq!(reliable_block(DiskPoint::ORIGIN, 16, 1e-12), 16);
    }

    #[test]
    fn columns_are_unit_vectors() {
        let z = p(0.3, 0.6);
        let tails = uz_column_tails(z, 40);
        let u = unitary_uz(z, 40).unwrap();
        for (col, tail) in tails.iter().enumerate() {
            let head: f64 = (0..40).map(|n| u.entry(n, col).norm_sqr()).sum();
            assert!((head + tail.powi(2) - 1.0).abs() < 1e-12);
        }
    }
}
