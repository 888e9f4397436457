//! Tensor-product quadrature for the normalized area measure on the disk.
//!
//! With `s = r^2` the normalized measure is `dA = ds dtheta / (2 pi)`, so a
//! Gauss-Legendre rule in `s` on `[0, 1]` times the uniform rule in angle
//! integrates `w^a conj(w)^b` exactly whenever `a = b <= 2 n_radial - 1`
//! or `0 < |a - b| < n_angular`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::disk::DiskPoint;
use crate::error::{Error, Result};

pub const DEFAULT_RADIAL: usize = 80;
pub const DEFAULT_ANGULAR: usize = 256;

#[derive(Debug, Clone)]
pub struct DiskQuadrature {
    /// `(r, weight)` with weights summing to one.
    radial: Vec<(f64, f64)>,
    angular_count: usize,
    nodes: Vec<DiskPoint>,
    weights: Vec<f64>,
}

impl DiskQuadrature {
    pub fn new(n_radial: usize, n_angular: usize) -> Result<Self> {
        if n_radial == 0 || n_angular == 0 {
            return Err(Error::Config(format!(
                "quadrature needs at least one node per direction, got {n_radial} x {n_angular}"
            )));
        }
        let radial: Vec<(f64, f64)> = gauss_legendre_unit(n_radial)
            .into_iter()
            .map(|(s, w)| (s.sqrt(), w))
            .collect();
        let mut nodes = Vec::with_capacity(n_radial * n_angular);
        let mut weights = Vec::with_capacity(n_radial * n_angular);
        let dtheta = 2.0 * PI / n_angular as f64;
        for &(r, wr) in &radial {
            for k in 0..n_angular {
                let node = Complex64::from_polar(r, dtheta * k as f64);
                nodes.push(DiskPoint::new_unchecked(node));
                weights.push(wr / n_angular as f64);
            }
        }
        Ok(Self {
            radial,
            angular_count: n_angular,
            nodes,
            weights,
        })
    }

    /// The 80 x 256 rule, exact for every moment needed by dimension-64 operators.
    pub fn default_rule() -> Self {
        Self::new(DEFAULT_RADIAL, DEFAULT_ANGULAR).expect("default rule sizes are positive")
    }

    pub fn n_radial(&self) -> usize {
        self.radial.len()
    }

    pub fn n_angular(&self) -> usize {
        self.angular_count
    }

    pub fn radial_nodes(&self) -> &[(f64, f64)] {
        &self.radial
    }

    pub fn nodes(&self) -> impl Iterator<Item = (DiskPoint, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Polynomial degree in `s = r^2` integrated exactly.
    pub fn radial_degree(&self) -> usize {
        2 * self.radial.len() - 1
    }

    /// Highest angular frequency integrated exactly.
    pub fn angular_degree(&self) -> usize {
        self.angular_count - 1
    }

    pub fn exactness_degree(&self) -> usize {
        self.radial_degree().min(self.angular_degree())
    }

    /// Whether `w^a conj(w)^b` is integrated exactly (up to rounding).
    pub fn is_exact_for(&self, a: usize, b: usize) -> bool {
        if a == b {
            a <= self.radial_degree()
        } else {
            a.abs_diff(b) <= self.angular_degree()
        }
    }

    pub fn integrate<F>(&self, f: F) -> Complex64
    where
        F: Fn(DiskPoint) -> Complex64,
    {
        let mut acc = CompensatedSum::default();
        for (w, weight) in self.nodes() {
            acc.add(f(w) * weight);
        }
        acc.value()
    }

    pub fn try_integrate<F>(&self, f: F) -> Result<Complex64>
    where
        F: Fn(DiskPoint) -> Result<Complex64>,
    {
        let mut acc = CompensatedSum::default();
        for (w, weight) in self.nodes() {
            acc.add(f(w)? * weight);
        }
        Ok(acc.value())
    }

    /// Largest deviation of the rule from [`monomial_moment`] over `a, b < dim`.
    ///
    /// Uses the tensor structure: the rule applied to `w^a conj(w)^b` is the
    /// radial sum of `r^(a+b)` times the angular sum of `e^(i(a-b)theta)`.
    pub fn moment_residual(&self, dim: usize) -> f64 {
        if dim == 0 {
            return 0.0;
        }
        let radial: Vec<f64> = (0..2 * dim - 1)
            .map(|m| self.radial.iter().map(|&(r, w)| w * r.powi(m as i32)).sum())
            .collect();
        let m = self.angular_count;
        let angular: Vec<Complex64> = (0..dim)
            .map(|d| {
                (0..m)
                    .map(|k| Complex64::from_polar(1.0, 2.0 * PI * ((d * k) % m) as f64 / m as f64))
                    .sum::<Complex64>()
                    / m as f64
            })
            .collect();
        let mut worst = 0.0_f64;
        for a in 0..dim {
            for b in 0..dim {
                let got = angular[a.abs_diff(b)] * radial[a + b];
                worst = worst.max((got - monomial_moment(a, b)).norm());
            }
        }
        worst
    }
}

/// Neumaier summation, applied to real and imaginary parts separately.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: Complex64,
    carry: Complex64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: Complex64) {
        fn step(sum: &mut f64, carry: &mut f64, x: f64) {
            let t = *sum + x;
            if sum.abs() >= x.abs() {
                *carry += (*sum - t) + x;
            } else {
                *carry += (x - t) + *sum;
            }
            *sum = t;
        }
        step(&mut self.sum.re, &mut self.carry.re, x.re);
        step(&mut self.sum.im, &mut self.carry.im, x.im);
    }

    pub(crate) fn value(&self) -> Complex64 {
        self.sum + self.carry
    }
}

/// `int_D w^a conj(w)^b dA = delta_ab / (a + 1)`.
pub fn monomial_moment(a: usize, b: usize) -> f64 {
    if a == b {
        1.0 / (a as f64 + 1.0)
    } else {
        0.0
    }
}

/// Gauss-Legendre nodes and weights on `[0, 1]` (weights sum to one).
fn gauss_legendre_unit(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push(((1.0 - x) / 2.0, w / 2.0));
    }
    out.reverse();
    // the exact weights sum to one; remove the accumulated rounding
    let total: f64 = out.iter().map(|&(_, w)| w).sum();
    out.iter_mut().for_each(|(_, w)| *w /= total);
    out
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_are_positive_and_normalized() {
        let rule = DiskQuadrature::default_rule();
        let total = rule.integrate(|_| Complex64::new(1.0, 0.0)).re;
        assert!((total - 1.0).abs() < 1e-15);
        assert!(rule.nodes().all(|(_, w)| w > 0.0));
        assert!(rule.nodes().all(|(p, _)| p.norm() < 1.0));
    }

    #[test]
    fn small_moments() {
        let rule = DiskQuadrature::new(8, 16).unwrap();
        let one = rule.integrate(|_| Complex64::new(1.0, 0.0));
        assert!((one.re - 1.0).abs() < 1e-15);
        let r2 = rule.integrate(|w| Complex64::new(w.norm_sqr(), 0.0));
        assert!((r2.re - 0.5).abs() < 1e-15);
        let r4 = rule.integrate(|w| Complex64::new(w.norm_sqr().powi(2), 0.0));
        assert!((r4.re - 1.0 / 3.0).abs() < 1e-15);
        let mixed = rule.integrate(|w| w.value() * w.value().conj().powu(2));
        assert!(mixed.norm() < 1e-15);
    }

    #[test]
    fn moment_oracle_values() {
        assert_eq!(monomial_moment(0, 0), 1.0);
        // polar integral 2 int_0^1 r^3 dr
        assert_eq!(monomial_moment(1, 1), 0.5);
        assert_eq!(monomial_moment(2, 1), 0.0);
    }

    #[test]
    fn exactness_degree_is_reported() {
        let rule = DiskQuadrature::new(5, 12).unwrap();
        assert_eq!(rule.radial_degree(), 9);
        assert_eq!(rule.angular_degree(), 11);
        assert_eq!(rule.exactness_degree(), 9);
        assert!(rule.is_exact_for(9, 9));
        assert!(!rule.is_exact_for(10, 10));
        assert!(rule.is_exact_for(0, 11));
        assert!(!rule.is_exact_for(0, 12));
    }

    #[test]
    fn rule_reproduces_moments_within_its_degree() {
        let rule = DiskQuadrature::new(12, 30).unwrap();
        assert!(rule.moment_residual(20) < 1e-13);
        // beyond the radial degree the rule is no longer exact
        let coarse = DiskQuadrature::new(2, 30).unwrap();
        assert!(coarse.moment_residual(6) > 1e-6);
    }

    #[test]
    fn doubling_the_rule_is_self_consistent() {
        let base = DiskQuadrature::new(40, 128).unwrap();
        let fine = DiskQuadrature::new(80, 256).unwrap();
        let f = |w: DiskPoint| {
            let w = w.value();
            w.powu(12) * w.conj().powu(12)
                + Complex64::new(0.3, -1.0) * w.powu(3) * w.conj().powu(7)
                + 2.0
        };
        assert!((base.integrate(f) - fine.integrate(f)).norm() < 1e-10);
    }

    #[test]
    fn rejects_empty_rules() {
        assert!(DiskQuadrature::new(0, 4).is_err());
        assert!(DiskQuadrature::new(4, 0).is_err());
    }
}
