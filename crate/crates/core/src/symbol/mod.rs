//! Polynomial symbols `u(w) = sum c_{j,k} w^j conj(w)^k` with Wirtinger calculus,
//! finite Blaschke products and the harmonic-product classifier.

mod analytic;
mod blaschke;
mod harmonic;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::disk::{mobius_eval, DiskPoint};

pub use analytic::AnalyticSymbol;
pub use blaschke::BlaschkeProduct;
pub use harmonic::{
    classify_harmonic_product, mixed_pair_residual, HarmonicProduct, HarmonicProductSum,
};
pub use parse::{format_complex, parse_complex, parse_complex_list};

/// Finite sum of monomials `c w^j conj(w)^k`; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MonomialSymbol {
    coeffs: BTreeMap<(u32, u32), Complex64>,
}

impl MonomialSymbol {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<Complex64>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(1.0)
    }

    /// `c w^j conj(w)^k`
    pub fn monomial(j: u32, k: u32, c: impl Into<Complex64>) -> Self {
        let mut s = Self::zero();
        s.add_term(j, k, c.into());
        s
    }

    /// The identity symbol `w`.
    pub fn z() -> Self {
        Self::monomial(1, 0, 1.0)
    }

    /// The symbol `conj(w)`.
    pub fn zbar() -> Self {
        Self::monomial(0, 1, 1.0)
    }

    /// `|w|^2`
    pub fn abs_sq() -> Self {
        Self::monomial(1, 1, 1.0)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Complex64)>,
    {
        let mut s = Self::zero();
        for ((j, k), c) in terms {
            s.add_term(j, k, c);
        }
        s
    }

    fn add_term(&mut self, j: u32, k: u32, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        let entry = self
            .coeffs
            .entry((j, k))
            .or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if *entry == Complex64::new(0.0, 0.0) {
            self.coeffs.remove(&(j, k));
        }
    }

    pub fn coeff(&self, j: u32, k: u32) -> Complex64 {
        self.coeffs.get(&(j, k)).copied().unwrap_or_default()
    }

    /// Nonzero terms in `(j, k)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Complex64)> + '_ {
        self.coeffs.iter().map(|(&jk, &c)| (jk, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest coefficient modulus (0 for the zero symbol).
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// True when every coefficient is within `tol` of zero.
    pub fn is_negligible(&self, tol: f64) -> bool {
        self.max_abs_coeff() <= tol
    }

    /// Maximum power of `w`.
    pub fn deg_z(&self) -> u32 {
        self.coeffs.keys().map(|&(j, _)| j).max().unwrap_or(0)
    }

    /// Maximum power of `conj(w)`.
    pub fn deg_zbar(&self) -> u32 {
        self.coeffs.keys().map(|&(_, k)| k).max().unwrap_or(0)
    }

    pub fn scale(&self, c: impl Into<Complex64>) -> Self {
        let c = c.into();
        Self::from_terms(self.terms().map(|(jk, v)| (jk, v * c)))
    }

    /// Coefficient-wise convolution: the pointwise product of the two symbols.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((j1, k1), a) in self.terms() {
            for ((j2, k2), b) in other.terms() {
                out.add_term(j1 + j2, k1 + k2, a * b);
            }
        }
        out
    }

    /// Pointwise complex conjugate: `(j, k) -> conj(c_{k, j})`.
    pub fn conjugate(&self) -> Self {
        Self::from_terms(self.terms().map(|((j, k), c)| ((k, j), c.conj())))
    }

    /// Wirtinger derivative `d/dz`.
    pub fn dz(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|&((j, _), _)| j > 0)
                .map(|((j, k), c)| ((j - 1, k), c * j as f64)),
        )
    }

    /// Wirtinger derivative `d/dzbar`.
    pub fn dzbar(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|&((_, k), _)| k > 0)
                .map(|((j, k), c)| ((j, k - 1), c * k as f64)),
        )
    }

    /// `4 d^2/(dz dzbar)`, the Euclidean Laplacian.
    pub fn laplacian(&self) -> Self {
        self.dz().dzbar().scale(4.0)
    }

    /// No mixed monomials: the symbol is an analytic plus a conjugate-analytic polynomial.
    pub fn is_harmonic(&self) -> bool {
        self.coeffs.keys().all(|&(j, k)| j == 0 || k == 0)
    }

    /// No `conj(w)` dependence.
    pub fn is_analytic(&self) -> bool {
        self.coeffs.keys().all(|&(_, k)| k == 0)
    }

    pub fn is_conjugate_analytic(&self) -> bool {
        self.coeffs.keys().all(|&(j, _)| j == 0)
    }

    pub fn eval(&self, w: DiskPoint) -> Complex64 {
        self.eval_at(w.value())
    }

    /// Evaluation at an arbitrary complex number (no disk check).
    pub fn eval_at(&self, w: Complex64) -> Complex64 {
        let wb = w.conj();
        self.terms()
            .map(|((j, k), c)| c * w.powu(j) * wb.powu(k))
            .sum()
    }

    /// Pointwise `u(phi_z(w))`. The composition is rational, so it is only
    /// ever evaluated, never expanded.
    pub fn eval_composed(&self, z: DiskPoint, w: DiskPoint) -> Complex64 {
        self.eval(mobius_eval(z, w))
    }

    /// Coefficients of an analytic symbol, `[c_0, c_1, ...]` up to `deg_z`.
    pub(crate) fn analytic_coeffs(&self) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.deg_z() as usize + 1];
        for ((j, _), c) in self.terms().filter(|&((_, k), _)| k == 0) {
            out[j as usize] = c;
        }
        out
    }
}

impl Add for &MonomialSymbol {
    type Output = MonomialSymbol;

    fn add(self, rhs: Self) -> MonomialSymbol {
        let mut out = self.clone();
        for ((j, k), c) in rhs.terms() {
            out.add_term(j, k, c);
        }
        out
    }
}

impl Sub for &MonomialSymbol {
    type Output = MonomialSymbol;

    fn sub(self, rhs: Self) -> MonomialSymbol {
        self + &(-rhs)
    }
}

impl Neg for &MonomialSymbol {
    type Output = MonomialSymbol;

    fn neg(self) -> MonomialSymbol {
        self.scale(-1.0)
    }
}

impl Mul for &MonomialSymbol {
    type Output = MonomialSymbol;

    fn mul(self, rhs: Self) -> MonomialSymbol {
        self.multiply(rhs)
    }
}

impl fmt::Display for MonomialSymbol {
    /// Text form `j,k:coeff;j,k:coeff`; the zero symbol prints as `0,0:0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0,0:0");
        }
        let mut first = true;
        for ((j, k), c) in self.terms() {
            if !first {
                write!(f, ";")?;
            }
            first = false;
            write!(f, "{j},{k}:{}", format_complex(c))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for MonomialSymbol {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_symbol(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p(re: f64, im: f64) -> DiskPoint {
        DiskPoint::from_re_im(re, im).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let prod = MonomialSymbol::z().multiply(&MonomialSymbol::zbar());
        assert_eq!(prod, MonomialSymbol::abs_sq());
        let one_plus_w = &MonomialSymbol::one() + &MonomialSymbol::z();
        assert_eq!(one_plus_w.multiply(&MonomialSymbol::one()), one_plus_w);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(MonomialSymbol::z().conjugate(), MonomialSymbol::zbar());
        assert_eq!(
            MonomialSymbol::abs_sq().conjugate(),
            MonomialSymbol::abs_sq()
        );
        let u = MonomialSymbol::from_terms([((2, 1), c(0.5, -2.0)), ((0, 3), c(1.0, 1.0))]);
        assert_eq!(u.conjugate().conjugate(), u);
        let w = p(0.3, -0.2);
        assert!((u.conjugate().eval(w) - u.eval(w).conj()).norm() < 1e-15);
    }

    #[test]
    fn wirtinger_examples() {
        let w2 = MonomialSymbol::monomial(2, 0, 1.0);
        assert_eq!(w2.dz(), MonomialSymbol::monomial(1, 0, 2.0));
        assert!(w2.dzbar().is_zero());
        assert_eq!(MonomialSymbol::abs_sq().dzbar(), MonomialSymbol::z());
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(
            MonomialSymbol::abs_sq().laplacian(),
            MonomialSymbol::constant(4.0)
        );
        assert!(MonomialSymbol::monomial(7, 0, 1.0).laplacian().is_zero());
        // d/dz d/dzbar (w^2 conj(w)^2) = 4 w conj(w), times 4
        assert_eq!(
            MonomialSymbol::monomial(2, 2, 1.0).laplacian(),
            MonomialSymbol::monomial(1, 1, 16.0)
        );
    }

    #[test]
    fn harmonic_membership() {
        let u = MonomialSymbol::from_terms([((1, 0), c(1.0, 0.0)), ((0, 2), c(3.0, 0.0))]);
        assert!(u.is_harmonic());
        assert!(!MonomialSymbol::abs_sq().is_harmonic());
        assert!(MonomialSymbol::zero().is_harmonic());
    }

    #[test]
    fn evaluation_examples() {
        assert!((MonomialSymbol::abs_sq().eval(p(0.5, 0.0)) - 0.25).norm() < 1e-16);
        assert_eq!(MonomialSymbol::one().eval(p(0.1, 0.7)), c(1.0, 0.0));
        let re2 = &MonomialSymbol::z() + &MonomialSymbol::zbar();
        assert!((re2.eval(p(0.3, 0.4)) - 0.6).norm() < 1e-15);
    }

    #[test]
    fn composed_evaluation_examples() {
        let z = p(0.4, -0.3);
        let w = p(-0.2, 0.5);
        assert_eq!(
            MonomialSymbol::z().eval_composed(z, w),
            mobius_eval(z, w).value()
        );
        assert_eq!(MonomialSymbol::one().eval_composed(z, w), c(1.0, 0.0));
        let u = MonomialSymbol::from_terms([((3, 1), c(1.0, 2.0)), ((0, 2), c(-1.0, 0.0))]);
        assert!((u.eval_composed(DiskPoint::ORIGIN, w) - u.eval_at(-w.value())).norm() < 1e-15);
    }

    #[test]
    fn zero_terms_are_dropped() {
        let u = &MonomialSymbol::z() - &MonomialSymbol::z();
        assert!(u.is_zero());
        assert_eq!(MonomialSymbol::monomial(3, 3, 0.0).term_count(), 0);
        assert_eq!(u.deg_z(), 0);
    }

    #[test]
    fn degrees() {
        let u = MonomialSymbol::from_terms([((4, 1), c(1.0, 0.0)), ((0, 6), c(1.0, 0.0))]);
        assert_eq!(u.deg_z(), 4);
        assert_eq!(u.deg_zbar(), 6);
    }
}
