//! Points of the open unit disk, Moebius automorphisms and Bergman kernels.
//!
//! Every formula here has a `(1 - |z|^2)` singularity on the boundary, so
//! [`DiskPoint`] rejects anything with modulus above [`MAX_RADIUS`].

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest admissible modulus of a [`DiskPoint`].
pub const MAX_RADIUS: f64 = 1.0 - 1e-12;

/// A complex number strictly inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint(Complex64::new(0.0, 0.0));

    pub fn new(value: Complex64) -> Result<Self> {
        if value.re.is_finite() && value.im.is_finite() && value.norm() <= MAX_RADIUS {
            Ok(Self(value))
        } else {
            Err(Error::OutsideDisk(value))
        }
    }

    pub fn from_re_im(re: f64, im: f64) -> Result<Self> {
        Self::new(Complex64::new(re, im))
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(r, theta))
    }

    /// Skips the range check. Only for values that are inside the disk by
    /// construction, such as images of disk points under disk automorphisms.
    pub(crate) fn new_unchecked(value: Complex64) -> Self {
        Self(value)
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn norm(self) -> f64 {
        self.0.norm()
    }

    pub fn norm_sqr(self) -> f64 {
        self.0.norm_sqr()
    }

    /// `1 - |z|^2`
    pub fn defect(self) -> f64 {
        1.0 - self.0.norm_sqr()
    }
}

impl TryFrom<Complex64> for DiskPoint {
    type Error = Error;

    fn try_from(value: Complex64) -> Result<Self> {
        Self::new(value)
    }
}

impl TryFrom<f64> for DiskPoint {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(Complex64::new(value, 0.0))
    }
}

impl From<DiskPoint> for Complex64 {
    fn from(p: DiskPoint) -> Self {
        p.0
    }
}

impl fmt::Display for DiskPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The involutive automorphism `phi_z(w) = (z - w) / (1 - conj(z) w)`.
pub fn mobius_eval(z: DiskPoint, w: DiskPoint) -> DiskPoint {
    let (z, w) = (z.0, w.0);
    DiskPoint::new_unchecked((z - w) / (1.0 - z.conj() * w))
}

/// Complex derivative of `phi_z` at `w`: `(|z|^2 - 1) / (1 - conj(z) w)^2`.
pub fn mobius_deriv(z: DiskPoint, w: DiskPoint) -> Complex64 {
    let d = 1.0 - z.0.conj() * w.0;
    Complex64::new(z.0.norm_sqr() - 1.0, 0.0) / (d * d)
}

/// Bergman reproducing kernel `K_z(w) = 1 / (1 - conj(z) w)^2`.
pub fn bergman_kernel(z: DiskPoint, w: DiskPoint) -> Complex64 {
    let d = 1.0 - z.0.conj() * w.0;
    (d * d).inv()
}

/// Normalized kernel `k_z(w) = (1 - |z|^2) / (1 - conj(z) w)^2`, a unit vector in the Bergman space.
pub fn normalized_kernel(z: DiskPoint, w: DiskPoint) -> Complex64 {
    bergman_kernel(z, w) * z.defect()
}
