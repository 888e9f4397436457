//! Seeded generators for the randomized batteries.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::disk::DiskPoint;
use crate::operator::TruncatedOperator;
use crate::symbol::MonomialSymbol;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in the square `[-scale, scale]^2`.
pub fn complex(rng: &mut impl Rng, scale: f64) -> Complex64 {
    Complex64::new(
        rng.random_range(-scale..=scale),
        rng.random_range(-scale..=scale),
    )
}

/// Uniform with respect to area in the disk of the given radius.
pub fn point_in_disk(rng: &mut impl Rng, radius: f64) -> DiskPoint {
    let r = radius * rng.random::<f64>().sqrt();
    let theta = rng.random_range(0.0..std::f64::consts::TAU);
    DiskPoint::new_unchecked(Complex64::from_polar(r, theta))
}

/// `n_radii x n_angles` points with radii `max_radius * (i + 1) / n_radii`.
pub fn polar_grid(n_radii: usize, n_angles: usize, max_radius: f64) -> Vec<DiskPoint> {
    let mut out = Vec::with_capacity(n_radii * n_angles);
    for i in 0..n_radii {
        let r = max_radius * (i + 1) as f64 / n_radii as f64;
        for k in 0..n_angles {
            let theta = std::f64::consts::TAU * (k as f64 + 0.5 * (i % 2) as f64) / n_angles as f64;
            out.push(DiskPoint::new_unchecked(Complex64::from_polar(r, theta)));
        }
    }
    out
}

/// `c + sum_{1 <= j <= deg} a_j w^j + b_j conj(w)^j` with random coefficients.
pub fn harmonic_polynomial(rng: &mut impl Rng, max_degree: u32) -> MonomialSymbol {
    let deg = rng.random_range(1..=max_degree);
    let mut terms = vec![((0, 0), complex(rng, 1.0))];
    for j in 1..=deg {
        terms.push(((j, 0), complex(rng, 1.0)));
        terms.push(((0, j), complex(rng, 1.0)));
    }
    MonomialSymbol::from_terms(terms)
}

/// Analytic polynomial of degree `1..=max_degree`.
pub fn analytic_polynomial(rng: &mut impl Rng, max_degree: u32) -> MonomialSymbol {
    let deg = rng.random_range(1..=max_degree);
    MonomialSymbol::from_terms((0..=deg).map(|j| ((j, 0), complex(rng, 1.0))))
}

/// Up to six random monomials `w^j conj(w)^k` with `j + k <= max_degree`.
pub fn polynomial_symbol(rng: &mut impl Rng, max_degree: u32) -> MonomialSymbol {
    let count = rng.random_range(1..=6);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let j = rng.random_range(0..=max_degree);
            let k = rng.random_range(0..=max_degree - j);
            ((j, k), complex(rng, 1.0))
        })
        .collect();
    MonomialSymbol::from_terms(terms)
}

/// Random complex matrix scaled to unit Frobenius norm.
pub fn unit_frobenius_matrix(rng: &mut impl Rng, dim: usize) -> TruncatedOperator {
    let m = DMatrix::from_fn(dim, dim, |_, _| complex(rng, 1.0));
    let norm = m.norm();
    TruncatedOperator::from_matrix_unchecked(m / Complex64::new(norm, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_their_contracts() {
        let mut r = rng(1);
        for _ in 0..50 {
            assert!(point_in_disk(&mut r, 0.7).norm() <= 0.7);
            let h = harmonic_polynomial(&mut r, 6);
            assert!(h.is_harmonic() && h.deg_z() <= 6);
            assert!(analytic_polynomial(&mut r, 4).is_analytic());
            let p = polynomial_symbol(&mut r, 6);
            assert!(p.terms().all(|((j, k), _)| j + k <= 6));
            assert!((unit_frobenius_matrix(&mut r, 5).norm_fro() - 1.0).abs() < 1e-14);
        }
        assert_eq!(polar_grid(10, 10, 0.9).len(), 100);
        assert!(polar_grid(10, 10, 0.9)
            .iter()
            .all(|z| z.norm() <= 0.9 + 1e-15));
    }

    #[test]
    fn seeding_is_deterministic() {
        let a = polynomial_symbol(&mut rng(9), 6);
        let b = polynomial_symbol(&mut rng(9), 6);
        assert_eq!(a, b);
    }
}
