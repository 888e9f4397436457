use nalgebra::DVector;
use num_complex::Complex64;

use crate::disk::{normalized_kernel, DiskPoint};
use crate::error::{Error, Result};
use crate::operator::{basis_vector, covariant_toeplitz, toeplitz_exact, TruncatedOperator};
use crate::quadrature::{CompensatedSum, DiskQuadrature};
use crate::symbol::{AnalyticSymbol, MonomialSymbol};

const MAX_SERIES_TERMS: usize = 50_000_000;

/// `S~(z) = (1 - |z|^2)^2 sum_{j,n} sqrt((j+1)(n+1)) <S e_j, e_n> conj(z)^j z^n`
/// over the stored `N x N` block.
pub fn berezin_operator(s: &TruncatedOperator, z: DiskPoint) -> Complex64 {
    let n = s.dim();
    let zv = z.value();
    // coordinates of k_z / (1 - |z|^2) in the orthonormal basis
    let mut kz = DVector::<Complex64>::zeros(n);
    let mut power = Complex64::new(1.0, 0.0);
    for j in 0..n {
        kz[j] = power.conj() * ((j + 1) as f64).sqrt();
        power *= zv;
    }
    let skz = s.matrix() * &kz;
    kz.dotc(&skz) * z.defect().powi(2)
}

/// Whether the series tail `(N+1)|z|^(2N) / (1-|z|^2)^2` is below `tol`.
pub fn is_reliable(z: DiskPoint, dim: usize, tol: f64) -> bool {
    tail_bound(z.norm(), dim) < tol
}

fn tail_bound(r: f64, dim: usize) -> f64 {
    let t = r * r;
    (dim as f64 + 1.0) * t.powi(dim as i32) / (1.0 - t).powi(2)
}

/// Largest radius at which [`berezin_operator`] at dimension `dim` is trusted.
pub fn reliable_radius(dim: usize, tol: f64) -> f64 {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if tail_bound(mid, dim) < tol {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Closed series for polynomial symbols. For `w^j conj(w)^k` with `e = |j - k|`
/// and `m_* = max(j, k)`:
/// `u~(z) = (1-|z|^2)^2 z^e sum_m (m+1)(m+e+1)|z|^(2m) / (m_* + m + 1)`
/// (with `conj(z)^e` when `k > j`), summed until the geometric tail is below `tol`.
pub fn berezin_series(u: &MonomialSymbol, z: DiskPoint, tol: f64) -> Complex64 {
    let zv = z.value();
    let t = z.norm_sqr();
    let weight = (1.0 - t).powi(2);
    let per_term_tol = tol / u.term_count().max(1) as f64;
    u.terms()
        .map(|((j, k), c)| {
            let e = j.abs_diff(k);
            let top = j.max(k) as f64;
            let phase = if j >= k {
                zv.powu(e)
            } else {
                zv.conj().powu(e)
            };
            let scale = weight * phase.norm() * c.norm();
            let ef = e as f64;
            let mut sum = 0.0;
            let mut tm = 1.0;
            for m in 0..MAX_SERIES_TERMS {
                let mf = m as f64;
                sum += (mf + 1.0) * (mf + ef + 1.0) * tm / (top + mf + 1.0);
                tm *= t;
                // tail over m' > m is at most t^(m+1) [(m+e+2)/(1-t) + t/(1-t)^2]
                let tail = tm * ((mf + ef + 2.0) / (1.0 - t) + t / (1.0 - t).powi(2));
                if tm == 0.0 || tail * scale < per_term_tol {
                    break;
                }
            }
            c * phase * (weight * sum)
        })
        .sum()
}

/// Longest Taylor expansion [`berezin_conj_product`] will form.
pub const MAX_TAYLOR_TERMS: usize = 1 << 21;

fn conj_product_length(f: &AnalyticSymbol, g: &AnalyticSymbol, z: DiskPoint, tol: f64) -> usize {
    f.taylor_length(z.norm(), tol, MAX_TAYLOR_TERMS)
        .max(g.taylor_length(z.norm(), tol, MAX_TAYLOR_TERMS))
}

/// Whether [`berezin_conj_product`] converges within [`MAX_TAYLOR_TERMS`] at `z`.
pub fn conj_product_converges(
    f: &AnalyticSymbol,
    g: &AnalyticSymbol,
    z: DiskPoint,
    tol: f64,
) -> bool {
    conj_product_length(f, g, z, tol) < MAX_TAYLOR_TERMS
}

/// `(conj(f) g)~(z) = (1 - |z|^2)^2 <g K_z, f K_z>` for analytic `f`, `g`, from the
/// Taylor coefficients of `f K_z` and `g K_z`. `None` when the expansion would
/// need more than [`MAX_TAYLOR_TERMS`] coefficients.
pub fn berezin_conj_product(
    f: &AnalyticSymbol,
    g: &AnalyticSymbol,
    z: DiskPoint,
    tol: f64,
) -> Option<Complex64> {
    let len = conj_product_length(f, g, z, tol);
    if len >= MAX_TAYLOR_TERMS {
        return None;
    }
    let zb = z.value().conj();
    let with_kernel = |mut c: Vec<Complex64>| {
        // dividing twice by (1 - conj(z) w)
        for _ in 0..2 {
            for n in 1..c.len() {
                let prev = c[n - 1];
                c[n] += zb * prev;
            }
        }
        c
    };
    let fk = with_kernel(f.taylor(len));
    let gk = with_kernel(g.taylor(len));
    let sum: Complex64 = gk
        .iter()
        .zip(&fk)
        .enumerate()
        .map(|(n, (a, b))| a * b.conj() / (n + 1) as f64)
        .sum();
    Some(sum * z.defect().powi(2))
}

/// Result of a quadrature-route Berezin evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureEstimate {
    pub value: Complex64,
    /// `|int |k_z|^2 dA - 1|`; large values mean the rule does not resolve the kernel peak.
    pub kernel_mass_error: f64,
}

impl QuadratureEstimate {
    pub fn is_reliable(&self, tol: f64) -> bool {
        self.kernel_mass_error <= tol
    }
}

/// `int u(w) |k_z(w)|^2 dA(w)` by quadrature.
pub fn berezin_quadrature<F>(u: F, z: DiskPoint, rule: &DiskQuadrature) -> QuadratureEstimate
where
    F: Fn(DiskPoint) -> Complex64,
{
    let mut value = CompensatedSum::default();
    let mut mass = CompensatedSum::default();
    for (w, weight) in rule.nodes() {
        let k2 = normalized_kernel(z, w).norm_sqr() * weight;
        value.add(u(w) * k2);
        mass.add(k2.into());
    }
    let (value, mass) = (value.value(), mass.value().re);
    QuadratureEstimate {
        value,
        kernel_mass_error: (mass - 1.0).abs(),
    }
}

/// Both sides of the product formula
/// `(T_{u_1} ... T_{u_n})~(z) = <T_{u_1 o phi_z} ... T_{u_n o phi_z} 1, 1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductBerezin {
    /// Left side: matrix-route Berezin transform of the product.
    pub value: Complex64,
    /// Right side: covariant chain applied to `e_0`.
    pub chain_value: Complex64,
    pub residual: f64,
}

pub fn berezin_of_product(
    symbols: &[MonomialSymbol],
    z: DiskPoint,
    dim: usize,
) -> Result<ProductBerezin> {
    let Some((first, rest)) = symbols.split_first() else {
        return Err(Error::Config("product needs at least one symbol".into()));
    };
    let mut product = toeplitz_exact(first, dim)?;
    for u in rest {
        product = product.try_mul(&toeplitz_exact(u, dim)?)?;
    }
    let value = berezin_operator(&product, z);

    let mut v = basis_vector(dim, 0);
    for u in symbols.iter().rev() {
        v = covariant_toeplitz(u, z, dim)?.apply(&v)?;
    }
    let chain_value = v[0];
    Ok(ProductBerezin {
        value,
        chain_value,
        residual: (value - chain_value).norm(),
    })
}

/// `int (u o phi_z)(w) dA(w)`, which equals `u~(z)`.
pub fn mean_value_transform(u: &MonomialSymbol, z: DiskPoint, rule: &DiskQuadrature) -> Complex64 {
    rule.integrate(|w| u.eval_composed(z, w))
}

/// `||(u - u(z)) k_z||^2 = (|u|^2)~(z) - 2 Re(conj(u(z)) u~(z)) + |u(z)|^2`.
pub fn localization_norm_sq(u: &MonomialSymbol, z: DiskPoint, tol: f64) -> f64 {
    let uz = u.eval(z);
    let abs_sq = berezin_series(&u.multiply(&u.conjugate()), z, tol).re;
    let ut = berezin_series(u, z, tol);
    abs_sq - 2.0 * (uz.conj() * ut).re + uz.norm_sqr()
}

/// `||(u - u(z)) k_z||_2`; rounding noise below zero is clipped.
pub fn localization_norm(u: &MonomialSymbol, z: DiskPoint, tol: f64) -> f64 {
    localization_norm_sq(u, z, tol).max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::BlaschkeProduct;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p(re: f64, im: f64) -> DiskPoint {
        DiskPoint::from_re_im(re, im).unwrap()
    }

    #[test]
    fn identity_operator_transform_is_one() {
        let id = TruncatedOperator::identity(64).unwrap();
        for z in [p(0.7, 0.0), p(0.0, -0.5), p(0.4, 0.4)] {
            assert!((berezin_operator(&id, z) - 1.0).norm() < 1e-8);
        }
    }

    #[test]
    fn operator_transform_at_origin_is_corner_entry() {
        let t = toeplitz_exact(&MonomialSymbol::abs_sq(), 16).unwrap();
        assert!((berezin_operator(&t, DiskPoint::ORIGIN) - 0.5).norm() < 1e-15);
        let s = toeplitz_exact(
            &MonomialSymbol::from_terms([((2, 2), c(1.0, 3.0)), ((1, 0), c(2.0, 0.0))]),
            8,
        )
        .unwrap();
        assert_eq!(berezin_operator(&s, DiskPoint::ORIGIN), s.entry(0, 0));
    }

    #[test]
    fn series_examples() {
        for z in [p(0.0, 0.0), p(0.9, 0.0), p(-0.3, 0.6)] {
            assert!((berezin_series(&MonomialSymbol::one(), z, 1e-14) - 1.0).norm() < 1e-13);
        }
        assert!(
            (berezin_series(&MonomialSymbol::abs_sq(), DiskPoint::ORIGIN, 1e-14) - 0.5).norm()
                < 1e-15
        );
        // 0.5625 * sum (m+1)^2 0.25^m / (m+2), cross-checked by adaptive quadrature in mpmath
        let got = berezin_series(&MonomialSymbol::abs_sq(), p(0.5, 0.0), 1e-15);
        assert!((got.re - 0.589_138_652_066_028_3).abs() < 1e-13, "{got}");
        let rule = DiskQuadrature::default_rule();
        let quad = berezin_quadrature(|w| MonomialSymbol::abs_sq().eval(w), p(0.5, 0.0), &rule);
        assert!((quad.value - got).norm() < 1e-6);
    }

    #[test]
    fn quadrature_examples() {
        let rule = DiskQuadrature::default_rule();
        let z = p(0.3, -0.45);
        let est = berezin_quadrature(|w| w.value(), z, &rule);
        assert!((est.value - z.value()).norm() < 1e-12);
        assert!(est.is_reliable(1e-12));
        let one = berezin_quadrature(|_| c(1.0, 0.0), z, &rule);
        assert!((one.value - 1.0).norm() < 1e-12);
    }

    #[test]
    fn quadrature_flags_unresolved_kernel_peaks() {
        let rule = DiskQuadrature::new(10, 16).unwrap();
        let est = berezin_quadrature(|_| c(1.0, 0.0), p(0.995, 0.0), &rule);
        assert!(!est.is_reliable(1e-8));
    }

    #[test]
    fn series_and_quadrature_agree_on_mixed_symbols() {
        let rule = DiskQuadrature::default_rule();
        let u = MonomialSymbol::from_terms([
            ((3, 1), c(0.5, -1.0)),
            ((0, 2), c(2.0, 0.0)),
            ((2, 4), c(0.0, 1.0)),
        ]);
        for z in [p(0.8, 0.0), p(-0.2, 0.7), p(0.1, 0.05)] {
            let s = berezin_series(&u, z, 1e-14);
            let q = berezin_quadrature(|w| u.eval(w), z, &rule).value;
            assert!((s - q).norm() < 1e-10, "{z}: {s} vs {q}");
        }
    }

    #[test]
    fn product_examples() {
        let z = p(0.3, 0.2);
        let single = berezin_of_product(&[MonomialSymbol::one()], z, 64).unwrap();
        assert!((single.value - 1.0).norm() < 1e-10 && single.residual < 1e-10);

        let pair = berezin_of_product(
            &[MonomialSymbol::z(), MonomialSymbol::zbar()],
            DiskPoint::ORIGIN,
            64,
        )
        .unwrap();
        assert!(pair.value.norm() < 1e-15 && pair.residual < 1e-8);

        let z = p(0.45, -0.2);
        let analytic =
            berezin_of_product(&[MonomialSymbol::z(), MonomialSymbol::z()], z, 64).unwrap();
        assert!((analytic.value - z.value() * z.value()).norm() < 1e-10);
        assert!(analytic.residual < 1e-10);

        assert!(berezin_of_product(&[], z, 8).is_err());
    }

    #[test]
    fn mean_value_examples() {
        let rule = DiskQuadrature::default_rule();
        let z = p(0.5, 0.0);
        let harmonic = MonomialSymbol::from_terms([((3, 0), c(1.0, 1.0)), ((0, 2), c(-0.5, 0.0))]);
        assert!((mean_value_transform(&harmonic, z, &rule) - harmonic.eval(z)).norm() < 1e-10);
        assert!((mean_value_transform(&MonomialSymbol::one(), z, &rule) - 1.0).norm() < 1e-13);
        let got = mean_value_transform(&MonomialSymbol::abs_sq(), z, &rule);
        let want = berezin_series(&MonomialSymbol::abs_sq(), z, 1e-15);
        assert!((got - want).norm() < 1e-8);
    }

    #[test]
    fn localization_examples() {
        let z = p(0.2, 0.4);
        assert!(
            localization_norm_sq(&MonomialSymbol::constant(c(2.0, -1.0)), z, 1e-14).abs() < 1e-10
        );
        let w = MonomialSymbol::z();
        assert!((localization_norm(&w, DiskPoint::ORIGIN, 1e-14) - 0.5f64.sqrt()).abs() < 1e-12);
        let vals: Vec<f64> = [0.5, 0.9, 0.99]
            .iter()
            .map(|&r| localization_norm(&w, p(r, 0.0), 1e-14))
            .collect();
        assert!(vals[0] > vals[1] && vals[1] > vals[2], "{vals:?}");
    }

    #[test]
    fn reliable_radius_matches_bound() {
        let r = reliable_radius(64, 1e-10);
        assert!(r > 0.7 && r < 0.85, "{r}");
        assert!(is_reliable(p(r - 1e-6, 0.0), 64, 1e-10));
        assert!(!is_reliable(p(r + 1e-6, 0.0), 64, 1e-10));
    }

    #[test]
    fn conj_product_route_matches_series() {
        let f = AnalyticSymbol::polynomial(MonomialSymbol::z()).unwrap();
        let z = DiskPoint::from_re_im(0.5, 0.0).unwrap();
        let got = berezin_conj_product(&f, &f, z, 1e-16).unwrap();
        assert!((got.re - 0.5891386520660283).abs() < 1e-13, "{got}");
        let g_sym = MonomialSymbol::from_terms([((0, 0), c(0.5, 0.0)), ((2, 0), c(0.0, 1.0))]);
        let g = AnalyticSymbol::polynomial(g_sym.clone()).unwrap();
        let z = DiskPoint::from_re_im(-0.3, 0.6).unwrap();
        let want = berezin_series(&MonomialSymbol::z().conjugate().multiply(&g_sym), z, 1e-15);
        assert!((berezin_conj_product(&f, &g, z, 1e-16).unwrap() - want).norm() < 1e-12);
    }

    #[test]
    fn conj_product_route_matches_quadrature_for_blaschke() {
        let b: AnalyticSymbol = BlaschkeProduct::from_complex(&[c(0.5, 0.0), c(-0.2, 0.6)])
            .unwrap()
            .into();
        let rule = DiskQuadrature::default_rule();
        let z = DiskPoint::from_re_im(0.2, 0.3).unwrap();
        let quad = berezin_quadrature(|w| b.eval(w).norm_sqr().into(), z, &rule);
        let got = berezin_conj_product(&b, &b, z, 1e-16).unwrap();
        assert!((got - quad.value).norm() < 1e-10, "{got} vs {}", quad.value);
    }

    #[test]
    fn conj_product_route_gives_up_at_the_edge() {
        let f = AnalyticSymbol::polynomial(MonomialSymbol::z()).unwrap();
        let z = DiskPoint::from_re_im(1.0 - 1e-9, 0.0).unwrap();
        assert!(!conj_product_converges(&f, &f, z, 1e-16));
        assert!(berezin_conj_product(&f, &f, z, 1e-16).is_none());
    }
}
