//! Truncated operators on the Bergman space.
//!
//! Matrices are written in the orthonormal basis `e_n(w) = sqrt(n + 1) w^n`
//! with `M[(q, p)] = <S e_p, e_q>`. Truncation is plain compression to the
//! top-left `N x N` block.

mod toeplitz;
mod unitary;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use toeplitz::{
    analytic_semicommutator_defect, analytic_toeplitz, covariant_toeplitz, semicommutator_defect,
    toeplitz_exact, toeplitz_quadrature, QUADRATURE_RESIDUAL_TOL,
};
pub use unitary::{reliable_block, unitary_uz, uz_column_tails};

/// Default truncation dimension.
pub const DEFAULT_DIM: usize = 64;

/// Basis tag written into matrix dumps.
pub const BASIS_TAG: &str = "orthonormal-monomial";

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedOperator {
    matrix: DMatrix<Complex64>,
}

impl TruncatedOperator {
    pub fn from_matrix(matrix: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if rows == 0 {
            return Err(Error::InvalidDimension {
                dim: 0,
                reason: "operators need dim >= 1",
            });
        }
        if rows != cols {
            return Err(Error::DimensionMismatch {
                left: rows,
                right: cols,
            });
        }
        if let Some(pos) = matrix
            .iter()
            .position(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            // column-major storage
            return Err(Error::NonFinite {
                row: pos % rows,
                col: pos / rows,
            });
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_matrix_unchecked(matrix: DMatrix<Complex64>) -> Self {
        Self { matrix }
    }

    pub fn identity(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            matrix: DMatrix::identity(dim, dim),
        })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            matrix: DMatrix::zeros(dim, dim),
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    /// `<S e_p, e_q>`
    pub fn entry(&self, q: usize, p: usize) -> Complex64 {
        self.matrix[(q, p)]
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_dim(rhs)?;
        Ok(Self {
            matrix: &self.matrix * &rhs.matrix,
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_dim(rhs)?;
        Ok(Self {
            matrix: &self.matrix + &rhs.matrix,
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_dim(rhs)?;
        Ok(Self {
            matrix: &self.matrix - &rhs.matrix,
        })
    }

    pub fn scale(&self, c: impl Into<Complex64>) -> Self {
        Self {
            matrix: &self.matrix * c.into(),
        }
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    /// `AB - BA`
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)
    }

    pub fn apply(&self, v: &DVector<Complex64>) -> Result<DVector<Complex64>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: v.len(),
            });
        }
        Ok(&self.matrix * v)
    }

    pub fn norm_fro(&self) -> f64 {
        self.matrix.norm()
    }

    /// Operator 2-norm estimated by power iteration on `S* S`.
    pub fn norm_op_est(&self, iterations: usize) -> f64 {
        let n = self.dim();
        let gram = self.matrix.adjoint() * &self.matrix;
        // deterministic start vector with no special alignment to the basis
        let mut v = DVector::from_fn(n, |i, _| {
            Complex64::new(1.0 + (i as f64 * 0.37).sin(), (i as f64 * 0.71).cos())
        });
        v /= Complex64::new(v.norm(), 0.0);
        let mut estimate = 0.0;
        for _ in 0..iterations {
            let next = &gram * &v;
            let norm = next.norm();
            if norm == 0.0 {
                return 0.0;
            }
            estimate = norm;
            v = next / Complex64::new(norm, 0.0);
        }
        estimate.sqrt()
    }

    /// Top-left `size x size` block.
    pub fn leading_block(&self, size: usize) -> Result<Self> {
        if size == 0 || size > self.dim() {
            return Err(Error::InvalidDimension {
                dim: size,
                reason: "block size must be in 1..=dim",
            });
        }
        Ok(Self {
            matrix: self.matrix.view((0, 0), (size, size)).into_owned(),
        })
    }

    /// Largest entrywise modulus of `self - other` on the leading `size x size` block.
    pub fn max_abs_diff_leading(&self, other: &Self, size: usize) -> f64 {
        let size = size.min(self.dim()).min(other.dim());
        let mut worst = 0.0_f64;
        for q in 0..size {
            for p in 0..size {
                worst = worst.max((self.matrix[(q, p)] - other.matrix[(q, p)]).norm());
            }
        }
        worst
    }

    /// Frobenius norm of `self - other` on the leading `size x size` block.
    pub fn fro_diff_leading(&self, other: &Self, size: usize) -> f64 {
        let size = size.min(self.dim()).min(other.dim());
        let a = self.matrix.view((0, 0), (size, size));
        let b = other.matrix.view((0, 0), (size, size));
        (a - b).norm()
    }

    pub fn to_dump(&self) -> MatrixDump {
        let n = self.dim();
        let entries = (0..n)
            .map(|q| {
                (0..n)
                    .map(|p| [self.matrix[(q, p)].re, self.matrix[(q, p)].im])
                    .collect()
            })
            .collect();
        MatrixDump {
            dim: n,
            basis: BASIS_TAG.to_string(),
            entries,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_dump())?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<MatrixDump>(text)?.try_into()
    }

    fn check_same_dim(&self, rhs: &Self) -> Result<()> {
        if self.dim() == rhs.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: rhs.dim(),
            })
        }
    }
}

/// JSON matrix dump: row-major array of `[re, im]` pairs with a small header.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDump {
    pub dim: usize,
    pub basis: String,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl TryFrom<MatrixDump> for TruncatedOperator {
    type Error = Error;

    fn try_from(dump: MatrixDump) -> Result<Self> {
        if dump.basis != BASIS_TAG {
            return Err(Error::Parse(format!("unsupported basis {:?}", dump.basis)));
        }
        if dump.entries.len() != dump.dim || dump.entries.iter().any(|row| row.len() != dump.dim) {
            return Err(Error::Parse(format!(
                "entries do not form a {0}x{0} matrix",
                dump.dim
            )));
        }
        let matrix = DMatrix::from_fn(dump.dim, dump.dim, |q, p| {
            let [re, im] = dump.entries[q][p];
            Complex64::new(re, im)
        });
        TruncatedOperator::from_matrix(matrix)
    }
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        Err(Error::InvalidDimension {
            dim,
            reason: "operators need dim >= 1",
        })
    } else {
        Ok(())
    }
}

/// Standard basis vector `e_index` of length `dim`.
pub fn basis_vector(dim: usize, index: usize) -> DVector<Complex64> {
    let mut v = DVector::zeros(dim);
    v[index] = Complex64::new(1.0, 0.0);
    v
}
