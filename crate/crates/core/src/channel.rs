//! Linear maps on density matrices: Kraus sets, Choi matrices and Liouvillian
//! superoperators.

use std::cell::Cell;
use std::fmt;

use ndarray::{Array1, Array2};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, hermitian_eigs};
use crate::matrix::{ComplexMatrix, C64, ZERO};

/// A linear map acting on `dim × dim` matrices.
pub trait LinearMap {
    fn dim(&self) -> usize;
    fn apply(&self, input: &ComplexMatrix) -> Result<ComplexMatrix>;
}

/// Where a Kraus operator came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum KrausLabel {
    /// The no-jump propagator `e^{At}`.
    NoJump,
    /// `√c · |to⟩⟨from|`.
    Jump { to: usize, from: usize },
    /// An eigenvector of a Choi matrix.
    Choi { index: usize },
}

impl fmt::Display for KrausLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrausLabel::NoJump => write!(f, "no-jump"),
            KrausLabel::Jump { to, from } => write!(f, "jump {from}->{to}"),
            KrausLabel::Choi { index } => write!(f, "choi #{index}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KrausOperator {
    pub label: KrausLabel,
    pub matrix: ComplexMatrix,
}

/// The map `ρ ↦ Σ_k K_k ρ K_k†`. Weights are folded into the operators.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KrausSet {
    dim: usize,
    operators: Vec<KrausOperator>,
}

/// Completeness residual accepted for a trace-preserving Kraus set.
pub const COMPLETENESS_TOLERANCE: f64 = 1e-10;

impl KrausSet {
    pub fn new(dim: usize, operators: Vec<KrausOperator>) -> Result<Self> {
        for op in &operators {
            if op.matrix.rows() != dim || op.matrix.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: op.matrix.rows().max(op.matrix.cols()),
                });
            }
        }
        Ok(Self { dim, operators })
    }

    pub fn operators(&self) -> &[KrausOperator] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// `‖Σ_k K_k† K_k − 1‖_max`.
    pub fn completeness_residual(&self) -> f64 {
        let mut sum = Array2::<C64>::zeros((self.dim, self.dim));
        for op in &self.operators {
            let k = op.matrix.as_array();
            sum += &k.t().mapv(|z| z.conj()).dot(k);
        }
        for d in sum.diag_mut() {
            *d -= 1.0;
        }
        sum.iter().fold(0.0, |acc, z| acc.max(z.norm()))
    }

    pub fn is_trace_preserving(&self) -> bool {
        self.completeness_residual() <= COMPLETENESS_TOLERANCE
    }
}

impl LinearMap for KrausSet {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, input: &ComplexMatrix) -> Result<ComplexMatrix> {
        check_input(self.dim, input)?;
        let mut out = Array2::<C64>::zeros((self.dim, self.dim));
        for op in &self.operators {
            let k = op.matrix.as_array();
            out += &k.dot(input.as_array()).dot(&k.t().mapv(|z| z.conj()));
        }
        ComplexMatrix::new(out)
    }
}

pub(crate) fn check_input(dim: usize, input: &ComplexMatrix) -> Result<()> {
    let n = input.square_dim()?;
    if n != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: n,
        });
    }
    Ok(())
}

/// Choi matrix `Σ_ij E_ij ⊗ Φ(E_ij)`: block `(i, j)` holds `Φ(|i⟩⟨j|)`.
pub fn choi_matrix(map: &impl LinearMap) -> Result<ComplexMatrix> {
    let n = map.dim();
    let mut choi = Array2::<C64>::zeros((n * n, n * n));
    for i in 0..n {
        for j in 0..n {
            let image = map.apply(&ComplexMatrix::matrix_unit(n, i, j))?;
            for ((a, b), z) in image.as_array().indexed_iter() {
                choi[[i * n + a, j * n + b]] = *z;
            }
        }
    }
    ComplexMatrix::new(choi)
}

/// Choi eigenvalues below `-CHOI_NEGATIVITY_TOLERANCE` mean the map is not CP.
pub const CHOI_NEGATIVITY_TOLERANCE: f64 = 1e-8;
/// Eigenvalues at or below this are dropped when extracting Kraus operators.
pub const CHOI_RANK_CUTOFF: f64 = 1e-12;

/// Canonical Kraus set from the eigen-decomposition of a Choi matrix.
pub fn kraus_from_choi(choi: &ComplexMatrix) -> Result<KrausSet> {
    let nn = choi.square_dim()?;
    let n = (nn as f64).sqrt().round() as usize;
    if n * n != nn {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            actual: nn,
        });
    }
    let (values, vectors) = hermitian_eigs(choi)?;
    if let Some(&worst) = values.first() {
        if worst < -CHOI_NEGATIVITY_TOLERANCE {
            return Err(Error::NotCompletelyPositive {
                detail: format!("Choi matrix has eigenvalue {worst:e}"),
            });
        }
    }
    let v = vectors.as_array();
    let mut operators = Vec::new();
    // Largest weight first.
    for col in (0..values.len()).rev() {
        let lambda = values[col];
        if lambda <= CHOI_RANK_CUTOFF {
            continue;
        }
        let scale = lambda.sqrt();
        let matrix = ComplexMatrix::from_fn(n, n, |(a, i)| v[[i * n + a, col]] * scale)?;
        operators.push(KrausOperator {
            label: KrausLabel::Choi {
                index: operators.len(),
            },
            matrix,
        });
    }
    KrausSet::new(n, operators)
}

thread_local! {
    static SUPEROPERATORS_BUILT: Cell<usize> = const { Cell::new(0) };
}

/// Number of [`Superoperator`]s constructed so far on the calling thread.
/// Lets callers confirm that a code path never materializes an `N² × N²` matrix.
pub fn superoperators_built_on_this_thread() -> usize {
    SUPEROPERATORS_BUILT.with(Cell::get)
}

/// An `N² × N²` generator acting on column-stacked density matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Superoperator {
    dim: usize,
    mat: ComplexMatrix,
}

impl Superoperator {
    pub fn new(dim: usize, mat: ComplexMatrix) -> Result<Self> {
        if mat.rows() != dim * dim || mat.cols() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: mat.rows(),
            });
        }
        SUPEROPERATORS_BUILT.with(|c| c.set(c.get() + 1));
        Ok(Self { dim, mat })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    /// `‖vec(1)† · L‖_max`; zero for a trace-preserving generator.
    pub fn trace_functional_residual(&self) -> f64 {
        let n = self.dim;
        let m = self.mat.as_array();
        let mut worst: f64 = 0.0;
        for col in 0..n * n {
            let mut acc = ZERO;
            for k in 0..n {
                acc += m[[k * n + k, col]];
            }
            worst = worst.max(acc.norm());
        }
        worst
    }

    /// `unvec(L · vec(ρ))`.
    pub fn act(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        check_input(self.dim, rho)?;
        let v: Array1<C64> = self.mat.as_array().dot(&linalg::vec(rho)?);
        linalg::unvec(&v, self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Identity(usize);

    impl LinearMap for Identity {
        fn dim(&self) -> usize {
            self.0
        }
        fn apply(&self, input: &ComplexMatrix) -> Result<ComplexMatrix> {
            Ok(input.clone())
        }
    }

    #[test]
    fn identity_map_choi_and_kraus() {
        let choi = choi_matrix(&Identity(2)).unwrap();
        // N times the projector onto (|00⟩ + |11⟩)/√2.
        let mut expected = Array2::<C64>::zeros((4, 4));
        for &(r, c) in &[(0, 0), (0, 3), (3, 0), (3, 3)] {
            expected[[r, c]] = C64::new(1.0, 0.0);
        }
        assert_eq!(choi.as_array(), &expected);

        let kraus = kraus_from_choi(&choi).unwrap();
        assert_eq!(kraus.len(), 1);
        let k = &kraus.operators()[0].matrix;
        // Eigenvectors carry an arbitrary phase.
        let phase = k[(0, 0)];
        assert!((phase.norm() - 1.0).abs() < 1e-12);
        let fixed = k.scale(phase.conj()).unwrap();
        assert!(fixed.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
        assert!(kraus.completeness_residual() < 1e-12);
    }

    #[test]
    fn non_cp_choi_is_reported() {
        // Transpose map: Choi is the swap operator, eigenvalue -1.
        struct Transpose;
        impl LinearMap for Transpose {
            fn dim(&self) -> usize {
                2
            }
            fn apply(&self, input: &ComplexMatrix) -> Result<ComplexMatrix> {
                Ok(input.transpose())
            }
        }
        let choi = choi_matrix(&Transpose).unwrap();
        assert!(matches!(
            kraus_from_choi(&choi),
            Err(Error::NotCompletelyPositive { .. })
        ));
    }

    #[test]
    fn kraus_set_rejects_wrong_shapes() {
        let op = KrausOperator {
            label: KrausLabel::NoJump,
            matrix: ComplexMatrix::identity(3),
        };
        assert!(KrausSet::new(2, vec![op]).is_err());
    }

    #[test]
    fn kraus_apply_checks_dimension() {
        let set = KrausSet::new(
            2,
            vec![KrausOperator {
                label: KrausLabel::NoJump,
                matrix: ComplexMatrix::identity(2),
            }],
        )
        .unwrap();
        assert!(set.apply(&ComplexMatrix::identity(3)).is_err());
        assert!(set.is_trace_preserving());
    }
}
