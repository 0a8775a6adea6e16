//! Dense complex matrices.
//!
//! [`ComplexMatrix`] wraps an `ndarray` matrix and guarantees that every entry
//! is finite. All operator symbols of the library (Hamiltonians, jump
//! operators `|m⟩⟨n|`, Kraus operators, superoperators) are stored this way.

use std::fmt;
use std::ops::Index;

use ndarray::{Array2, ArrayView2};
use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(Array2<C64>);

impl ComplexMatrix {
    /// Wraps an array, rejecting NaN or infinite entries.
    pub fn new(data: Array2<C64>) -> Result<Self> {
        if let Some(((row, col), _)) = data
            .indexed_iter()
            .find(|(_, z)| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite { row, col });
        }
        Ok(Self(data))
    }

    pub fn from_real(data: &Array2<f64>) -> Result<Self> {
        Self::new(data.mapv(|x| C64::new(x, 0.0)))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut((usize, usize)) -> C64) -> Result<Self> {
        Self::new(Array2::from_shape_fn((rows, cols), f))
    }

    /// Builds a matrix from row-major nested rows.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                actual: bad.len(),
            });
        }
        Self::from_fn(nrows, ncols, |(i, j)| rows[i][j])
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self(Array2::zeros((rows, cols)))
    }

    pub fn identity(n: usize) -> Self {
        Self(Array2::eye(n))
    }

    pub fn from_diag(diag: &[C64]) -> Result<Self> {
        let n = diag.len();
        Self::from_fn(n, n, |(i, j)| if i == j { diag[i] } else { ZERO })
    }

    /// The matrix unit `|m⟩⟨n|` in dimension `dim`.
    pub fn matrix_unit(dim: usize, m: usize, n: usize) -> Self {
        let mut data = Array2::zeros((dim, dim));
        data[[m, n]] = ONE;
        Self(data)
    }

    /// Wraps an array whose entries the caller already knows to be finite.
    pub(crate) fn from_array_unchecked(data: Array2<C64>) -> Self {
        debug_assert!(data.iter().all(|z| z.re.is_finite() && z.im.is_finite()));
        Self(data)
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// Side length of a square matrix.
    pub fn square_dim(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows())
        } else {
            Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            })
        }
    }

    pub fn view(&self) -> ArrayView2<'_, C64> {
        self.0.view()
    }

    pub fn as_array(&self) -> &Array2<C64> {
        &self.0
    }

    pub fn into_array(self) -> Array2<C64> {
        self.0
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.t().mapv(|z| z.conj()))
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.t().to_owned())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols() != rhs.rows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                actual: rhs.rows(),
            });
        }
        Self::new(self.0.dot(&rhs.0))
    }

    /// `self · x · self†`.
    pub fn sandwich(&self, x: &Self) -> Result<Self> {
        self.matmul(x)?.matmul(&self.adjoint())
    }

    pub fn scale(&self, factor: C64) -> Result<Self> {
        Self::new(self.0.mapv(|z| z * factor))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Self::new(&self.0 + &rhs.0)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Self::new(&self.0 - &rhs.0)
    }

    pub fn trace(&self) -> C64 {
        self.0.diag().sum()
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.0.iter().fold(0.0, |acc, z| acc.max(z.norm()))
    }

    /// `‖self − rhs‖_max`; infinite when the shapes differ.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        if self.0.dim() != rhs.0.dim() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(rhs.0.iter())
            .fold(0.0, |acc, (a, b)| acc.max((a - b).norm()))
    }

    /// `‖self − self†‖_max`.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows();
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self.0[[i, j]] - self.0[[j, i]].conj()).norm());
            }
        }
        dev
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if self.0.dim() != rhs.0.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.rows() * self.cols(),
                actual: rhs.rows() * rhs.cols(),
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[[i, j]]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMatrix{:?}", self.0)
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.0.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:>+.6}{:+.6}i", z.re, z.im))
                .collect();
            writeln!(f, "[{}]", cells.join("  "))?;
        }
        Ok(())
    }
}

/// Serialized as nested rows of `[re, im]` pairs.
impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<C64>> = self.0.rows().into_iter().map(|r| r.to_vec()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<C64>>::deserialize(deserializer)?;
        ComplexMatrix::from_rows(&rows).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite_entries() {
        let mut data = Array2::zeros((2, 2));
        data[[1, 0]] = C64::new(f64::NAN, 0.0);
        assert!(matches!(
            ComplexMatrix::new(data),
            Err(Error::NonFinite { row: 1, col: 0 })
        ));
        let mut data = Array2::zeros((2, 2));
        data[[0, 1]] = C64::new(0.0, f64::INFINITY);
        assert!(ComplexMatrix::new(data).is_err());
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let rows = vec![vec![ONE, ZERO], vec![ONE]];
        assert!(ComplexMatrix::from_rows(&rows).is_err());
    }

    #[test]
    fn json_uses_re_im_pairs() {
        let m = ComplexMatrix::from_rows(&[
            vec![C64::new(1.0, 0.0), C64::new(0.5, -0.25)],
            vec![C64::new(0.5, 0.25), C64::new(0.0, 0.0)],
        ])
        .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, "[[[1.0,0.0],[0.5,-0.25]],[[0.5,0.25],[0.0,0.0]]]");
        let back: ComplexMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn matmul_checks_inner_dimension() {
        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(2, 3);
        assert!(a.matmul(&b).is_err());
        assert_eq!(a.matmul(&b.transpose()).unwrap().rows(), 2);
    }

    #[test]
    fn hermitian_deviation_of_unit() {
        let x = ComplexMatrix::matrix_unit(3, 0, 2);
        assert_eq!(x.hermitian_deviation(), 1.0);
        let h = x.add(&x.adjoint()).unwrap();
        assert_eq!(h.hermitian_deviation(), 0.0);
    }
}
