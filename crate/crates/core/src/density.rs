use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::{ComplexMatrix, C64};

/// Acceptance thresholds for [`DensityMatrix`] construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateTolerance {
    /// Bound on `‖ρ − ρ†‖_max`.
    pub hermitian: f64,
    /// Bound on `|tr ρ − 1|`.
    pub trace: f64,
    /// Smallest eigenvalue allowed is `-positivity`.
    pub positivity: f64,
}

impl StateTolerance {
    pub const STRICT: Self = Self {
        hermitian: 1e-12,
        trace: 1e-12,
        positivity: 1e-10,
    };

    /// Looser bounds for states produced by exponentiating a full superoperator.
    pub const ORACLE: Self = Self {
        hermitian: 1e-9,
        trace: 1e-9,
        positivity: 1e-9,
    };
}

impl Default for StateTolerance {
    fn default() -> Self {
        Self::STRICT
    }
}

/// A Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
    min_eigenvalue: f64,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(mat, &StateTolerance::STRICT)
    }

    pub fn with_tolerance(mat: ComplexMatrix, tol: &StateTolerance) -> Result<Self> {
        mat.square_dim()?;
        let deviation = mat.hermitian_deviation();
        if deviation > tol.hermitian {
            return Err(Error::NotHermitian {
                deviation,
                tolerance: tol.hermitian,
            });
        }
        let trace = mat.trace().re;
        if (trace - 1.0).abs() > tol.trace {
            return Err(Error::TraceNotOne {
                trace,
                tolerance: tol.trace,
            });
        }
        let min_eigenvalue = linalg::min_eigenvalue(mat.as_array())?;
        if min_eigenvalue < -tol.positivity {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(Self {
            mat,
            min_eigenvalue,
        })
    }

    /// `|k⟩⟨k|` in dimension `dim`.
    pub fn basis_state(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: k + 1,
            });
        }
        Self::new(ComplexMatrix::matrix_unit(dim, k, k))
    }

    /// `|ψ⟩⟨ψ|` for the normalized `ψ`.
    pub fn pure(psi: &[C64]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::InvalidParameter {
                what: "state vector norm",
                value: norm,
            });
        }
        let n = psi.len();
        Self::new(ComplexMatrix::from_fn(n, n, |(i, j)| {
            psi[i] * psi[j].conj() / (norm * norm)
        })?)
    }

    /// The maximally mixed state `1/N`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(ComplexMatrix::identity(dim).scale(C64::new(1.0 / dim as f64, 0.0))?)
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn trace(&self) -> f64 {
        self.mat.trace().re
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    /// `tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.mat.as_array().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn populations(&self) -> Vec<f64> {
        self.mat.as_array().diag().iter().map(|z| z.re).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn accepts_valid_states() {
        let plus = DensityMatrix::pure(&[c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((plus.purity() - 1.0).abs() < 1e-15);
        assert!((plus.matrix()[(0, 1)].re - 0.5).abs() < 1e-15);
        let mixed = DensityMatrix::maximally_mixed(4).unwrap();
        assert!((mixed.purity() - 0.25).abs() < 1e-15);
        assert!((mixed.min_eigenvalue() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.1, 0.0)],
            vec![c(0.0, 0.0), c(0.5, 0.0)],
        ])
        .unwrap();
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn rejects_wrong_trace() {
        let m = ComplexMatrix::identity(2);
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::TraceNotOne { .. })
        ));
        let almost = ComplexMatrix::from_diag(&[c(0.5 + 1e-11, 0.0), c(0.5, 0.0)]).unwrap();
        assert!(DensityMatrix::new(almost).is_err());
    }

    #[test]
    fn rejects_indefinite() {
        let m = ComplexMatrix::from_diag(&[c(1.1, 0.0), c(-0.1, 0.0)]).unwrap();
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::NotPositive { .. })
        ));
        let tiny = ComplexMatrix::from_diag(&[c(1.0 + 5e-11, 0.0), c(-5e-11, 0.0)]).unwrap();
        assert!(DensityMatrix::new(tiny).is_ok());
    }

    #[test]
    fn basis_state_bounds() {
        assert!(DensityMatrix::basis_state(3, 3).is_err());
        assert_eq!(
            DensityMatrix::basis_state(3, 2).unwrap().populations(),
            vec![0.0, 0.0, 1.0]
        );
    }
}
