use num_complex::Complex64;

use super::MonomialSymbol;
use crate::error::{Error, Result};

/// When is the product of two harmonic symbols harmonic?
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HarmonicProduct {
    /// `Delta(uv)` does not vanish.
    NotHarmonic,
    /// `u` and `v` are both analytic. Reported whenever it applies, including
    /// for constants, which are also conjugate-analytic.
    BothAnalytic,
    /// `conj(u)` and `conj(v)` are both analytic.
    BothConjugateAnalytic,
    /// `alpha u + beta v` and `conj(alpha) conj(u) - conj(beta) conj(v)` are both
    /// analytic, with `(alpha, beta) != (0, 0)`.
    Mixed { alpha: Complex64, beta: Complex64 },
}

/// Classifies `uv` for harmonic polynomial symbols `u`, `v`.
///
/// Harmonicity of `uv` is decided from the coefficients of `Delta(uv)`; the
/// only slack is a rounding allowance proportional to the coefficient scale,
/// so Gaussian-integer inputs are decided exactly.
pub fn classify_harmonic_product(
    u: &MonomialSymbol,
    v: &MonomialSymbol,
) -> Result<HarmonicProduct> {
    for s in [u, v] {
        if !s.is_harmonic() {
            return Err(Error::NotHarmonic(s.to_string()));
        }
    }
    let degree = (u.deg_z().max(u.deg_zbar()) + v.deg_z().max(v.deg_zbar())) as f64;
    let tol =
        1e-13 * u.max_abs_coeff().max(1.0) * v.max_abs_coeff().max(1.0) * (1.0 + degree).powi(2);

    if !u.multiply(v).laplacian().is_negligible(tol) {
        return Ok(HarmonicProduct::NotHarmonic);
    }
    if u.is_analytic() && v.is_analytic() {
        return Ok(HarmonicProduct::BothAnalytic);
    }
    if u.is_conjugate_analytic() && v.is_conjugate_analytic() {
        return Ok(HarmonicProduct::BothConjugateAnalytic);
    }

    let (alpha, beta) = solve_mixed_pair(u, v, tol)?;
    Ok(HarmonicProduct::Mixed { alpha, beta })
}

/// Residual of the two linear conditions
/// `alpha du/dzbar = -beta dv/dzbar` and `alpha du/dz = beta dv/dz`
/// (largest coefficient modulus of either difference).
pub fn mixed_pair_residual(
    u: &MonomialSymbol,
    v: &MonomialSymbol,
    alpha: Complex64,
    beta: Complex64,
) -> f64 {
    let first = &u.dzbar().scale(alpha) + &v.dzbar().scale(beta);
    let second = &u.dz().scale(alpha) - &v.dz().scale(beta);
    first.max_abs_coeff().max(second.max_abs_coeff())
}

fn solve_mixed_pair(
    u: &MonomialSymbol,
    v: &MonomialSymbol,
    tol: f64,
) -> Result<(Complex64, Complex64)> {
    // alpha * lhs + beta * rhs = 0, one row per coefficient of the two conditions
    let (ubar, uz, vbar, vz) = (u.dzbar(), u.dz(), v.dzbar(), v.dz());
    let mut keys: Vec<(bool, (u32, u32))> = Vec::new();
    keys.extend(ubar.terms().chain(vbar.terms()).map(|(jk, _)| (false, jk)));
    keys.extend(uz.terms().chain(vz.terms()).map(|(jk, _)| (true, jk)));
    keys.sort_unstable();
    keys.dedup();
    let lhs: Vec<Complex64> = keys
        .iter()
        .map(|&(second, (j, k))| {
            if second {
                uz.coeff(j, k)
            } else {
                ubar.coeff(j, k)
            }
        })
        .collect();
    let rhs: Vec<Complex64> = keys
        .iter()
        .map(|&(second, (j, k))| {
            if second {
                -vz.coeff(j, k)
            } else {
                vbar.coeff(j, k)
            }
        })
        .collect();

    let pivot = (0..lhs.len()).max_by(|&a, &b| lhs[a].norm().total_cmp(&lhs[b].norm()));
    let (alpha, beta) = match pivot {
        Some(i) if lhs[i].norm() > tol => (-rhs[i] / lhs[i], Complex64::new(1.0, 0.0)),
        _ => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
    };
    if mixed_pair_residual(u, v, alpha, beta) <= tol * (1.0 + alpha.norm()) {
        Ok((alpha, beta))
    } else {
        Err(Error::NoHarmonicPair)
    }
}

/// A finite sum of products of harmonic symbols, the factored form for which
/// `(1 - |z|^2)^2 (Delta u)(z)` is a meaningful boundary quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicProductSum {
    terms: Vec<Vec<MonomialSymbol>>,
}

impl HarmonicProductSum {
    pub fn new(terms: Vec<Vec<MonomialSymbol>>) -> Result<Self> {
        for factor in terms.iter().flatten() {
            if !factor.is_harmonic() {
                return Err(Error::NotHarmonic(factor.to_string()));
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[Vec<MonomialSymbol>] {
        &self.terms
    }

    pub fn expand(&self) -> MonomialSymbol {
        self.terms
            .iter()
            .fold(MonomialSymbol::zero(), |acc, factors| {
                let product = factors
                    .iter()
                    .fold(MonomialSymbol::one(), |p, f| p.multiply(f));
                &acc + &product
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn analytic_pair() {
        let w = MonomialSymbol::z();
        assert_eq!(
            classify_harmonic_product(&w, &w).unwrap(),
            HarmonicProduct::BothAnalytic
        );
    }

    #[test]
    fn analytic_times_conjugate_is_not_harmonic() {
        let got = classify_harmonic_product(&MonomialSymbol::z(), &MonomialSymbol::zbar()).unwrap();
        assert_eq!(got, HarmonicProduct::NotHarmonic);
    }

    #[test]
    fn mixed_pair_real_and_imaginary_parts() {
        let u = &MonomialSymbol::z() + &MonomialSymbol::zbar();
        let v = MonomialSymbol::from_terms([((1, 0), c(0.0, 1.0)), ((0, 1), c(0.0, -1.0))]);
        let got = classify_harmonic_product(&u, &v).unwrap();
        assert_eq!(
            got,
            HarmonicProduct::Mixed {
                alpha: c(0.0, 1.0),
                beta: c(1.0, 0.0)
            }
        );
        // alpha u + beta v = 2i w, conj(alpha) conj(u) - conj(beta) conj(v) = -2i w
        let first = &u.scale(c(0.0, 1.0)) + &v;
        assert_eq!(first, MonomialSymbol::monomial(1, 0, c(0.0, 2.0)));
        let second = &u.conjugate().scale(c(0.0, -1.0)) - &v.conjugate();
        assert_eq!(second, MonomialSymbol::monomial(1, 0, c(0.0, -2.0)));
    }

    #[test]
    fn constants_report_analytic() {
        let a = MonomialSymbol::constant(2.0);
        let b = MonomialSymbol::constant(c(0.0, 1.0));
        assert_eq!(
            classify_harmonic_product(&a, &b).unwrap(),
            HarmonicProduct::BothAnalytic
        );
    }

    #[test]
    fn constant_times_general_harmonic_is_mixed_with_beta_zero() {
        let u = MonomialSymbol::constant(3.0);
        let v = &MonomialSymbol::z() + &MonomialSymbol::monomial(0, 2, 1.0);
        match classify_harmonic_product(&u, &v).unwrap() {
            HarmonicProduct::Mixed { alpha, beta } => {
                assert_eq!((alpha, beta), (c(1.0, 0.0), c(0.0, 0.0)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_non_harmonic_input() {
        assert!(
            classify_harmonic_product(&MonomialSymbol::abs_sq(), &MonomialSymbol::z()).is_err()
        );
    }

    #[test]
    fn factored_sum_expands_and_validates() {
        let s = HarmonicProductSum::new(vec![
            vec![MonomialSymbol::z(), MonomialSymbol::zbar()],
            vec![MonomialSymbol::one()],
        ])
        .unwrap();
        assert_eq!(
            s.expand(),
            &MonomialSymbol::abs_sq() + &MonomialSymbol::one()
        );
        assert!(HarmonicProductSum::new(vec![vec![MonomialSymbol::abs_sq()]]).is_err());
    }
}
