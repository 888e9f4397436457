use num_complex::Complex64;

use crate::disk::{mobius_deriv, mobius_eval, DiskPoint};
use crate::error::{Error, Result};

/// Finite Blaschke product `prod (a_k - w) / (1 - conj(a_k) w)` with unit front factor.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    zeros: Vec<DiskPoint>,
}

impl BlaschkeProduct {
    pub fn new(zeros: Vec<DiskPoint>) -> Self {
        Self { zeros }
    }

    pub fn from_complex(zeros: &[Complex64]) -> Result<Self> {
        let zeros = zeros
            .iter()
            .map(|&a| DiskPoint::new(a))
            .collect::<Result<Vec<_>>>()?;
        if zeros.is_empty() {
            return Err(Error::Parse(
                "a Blaschke product needs at least one zero".into(),
            ));
        }
        Ok(Self { zeros })
    }

    /// Zeros `1 - 2^-k` for `k = 1..=count`.
    pub fn dyadic(count: u32) -> Self {
        let zeros = (1..=count)
            .map(|k| DiskPoint::new_unchecked(Complex64::new(1.0 - 0.5f64.powi(k as i32), 0.0)))
            .collect();
        Self { zeros }
    }

    pub fn zeros(&self) -> &[DiskPoint] {
        &self.zeros
    }

    pub fn eval(&self, w: DiskPoint) -> Complex64 {
        self.zeros
            .iter()
            .map(|&a| mobius_eval(a, w).value())
            .product()
    }

    /// Product rule over the factors; no division by `b(w)`, so this is exact at the zeros.
    pub fn deriv(&self, w: DiskPoint) -> Complex64 {
        let factors: Vec<Complex64> = self
            .zeros
            .iter()
            .map(|&a| mobius_eval(a, w).value())
            .collect();
        let mut total = Complex64::new(0.0, 0.0);
        for (k, &a) in self.zeros.iter().enumerate() {
            let others: Complex64 = factors
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, &f)| f)
                .product();
            total += mobius_deriv(a, w) * others;
        }
        total
    }

    /// First `len` Taylor coefficients at the origin.
    pub fn taylor(&self, len: usize) -> Vec<Complex64> {
        let mut acc = vec![Complex64::new(0.0, 0.0); len];
        if len == 0 {
            return acc;
        }
        acc[0] = Complex64::new(1.0, 0.0);
        for &a in &self.zeros {
            // multiplying by (a - w)/(1 - conj(a) w): h_n = conj(a) h_{n-1} + a g_n - g_{n-1}
            let (a, ab) = (a.value(), a.value().conj());
            let mut prev_g = Complex64::new(0.0, 0.0);
            let mut prev_h = Complex64::new(0.0, 0.0);
            for slot in acc.iter_mut() {
                let g = *slot;
                let h = ab * prev_h + a * g - prev_g;
                *slot = h;
                prev_g = g;
                prev_h = h;
            }
        }
        acc
    }
}
