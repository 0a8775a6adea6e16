//! Brute-force reference: the full `N² × N²` Liouvillian and its exponential.
//!
//! This is the representation the closed-form solver avoids. It is used to
//! cross-check every other path and as the baseline in benchmarks. Memory
//! grows as `N⁴`, so dimensions above [`DEFAULT_MAX_DIM`] are refused unless
//! the limit is raised explicitly.

use crate::channel::{check_input, LinearMap, Superoperator};
use crate::density::{DensityMatrix, StateTolerance};
use crate::error::{Error, Result};
use crate::linalg::{self, add_kron};
use crate::matrix::{ComplexMatrix, C64};
use crate::model::LindbladModel;

pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub max_dim: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

/// Lindbladian superoperator in the column-stacking convention
/// `vec(A ρ B) = (Bᵀ ⊗ A) vec(ρ)` for an arbitrary Hamiltonian and arbitrary
/// jump operators `(rate, L)`:
///
/// ```text
/// ℒ = −i(1 ⊗ H − Hᵀ ⊗ 1) + Σ γ [ L̄ ⊗ L − ½ 1 ⊗ L†L − ½ (L†L)ᵀ ⊗ 1 ]
/// ```
pub fn lindbladian(
    hamiltonian: &ComplexMatrix,
    jumps: &[(f64, ComplexMatrix)],
) -> Result<Superoperator> {
    let n = hamiltonian.square_dim()?;
    for (_, op) in jumps {
        check_input(n, op)?;
    }
    let id = ComplexMatrix::identity(n);
    let mut l = ndarray::Array2::<C64>::zeros((n * n, n * n));
    let minus_i = C64::new(0.0, -1.0);
    add_kron(&mut l, minus_i, id.view(), hamiltonian.view());
    add_kron(&mut l, -minus_i, hamiltonian.transpose().view(), id.view());
    for (rate, op) in jumps {
        if *rate == 0.0 {
            continue;
        }
        let g = C64::new(*rate, 0.0);
        let conj = op.as_array().mapv(|z| z.conj());
        let ldl = op.adjoint().matmul(op)?;
        add_kron(&mut l, g, conj.view(), op.view());
        add_kron(&mut l, -0.5 * g, id.view(), ldl.view());
        add_kron(&mut l, -0.5 * g, ldl.transpose().view(), id.view());
    }
    Superoperator::new(n, ComplexMatrix::new(l)?)
}

/// Liouvillian of a model, including the two-level dephasing term
/// `−γ₀(ρ − σ_z ρ σ_z)`, which is the jump operator `σ_z` at rate `γ₀`.
pub fn liouvillian(model: &LindbladModel) -> Result<Superoperator> {
    liouvillian_with(model, &OracleOptions::default())
}

pub fn liouvillian_with(model: &LindbladModel, options: &OracleOptions) -> Result<Superoperator> {
    let n = model.dim();
    if n > options.max_dim {
        return Err(Error::OracleTooLarge {
            dim: n,
            limit: options.max_dim,
        });
    }
    let energies: Vec<C64> = model.energies().iter().map(|&e| C64::new(e, 0.0)).collect();
    let hamiltonian = ComplexMatrix::from_diag(&energies)?;
    let mut jumps: Vec<(f64, ComplexMatrix)> = model
        .jumps()
        .into_iter()
        .map(|(m, k, g)| (g, ComplexMatrix::matrix_unit(n, m, k)))
        .collect();
    if model.dephasing_rate() != 0.0 {
        if n != 2 {
            return Err(Error::InvalidModel(model.validate()));
        }
        jumps.push((model.dephasing_rate(), sigma_z()));
    }
    lindbladian(&hamiltonian, &jumps)
}

/// `σ_z = |1⟩⟨1| − |0⟩⟨0|` with `|0⟩` the lower level.
fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_diag(&[C64::new(-1.0, 0.0), C64::new(1.0, 0.0)]).expect("finite entries")
}

/// `e^{ℒt}` as a linear map on `N × N` matrices.
#[derive(Debug, Clone)]
pub struct OracleMap {
    dim: usize,
    propagator: ComplexMatrix,
}

impl OracleMap {
    pub fn new(model: &LindbladModel, t: f64) -> Result<Self> {
        Self::with_options(model, t, &OracleOptions::default())
    }

    pub fn with_options(model: &LindbladModel, t: f64, options: &OracleOptions) -> Result<Self> {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter {
                what: "time",
                value: t,
            });
        }
        let generator = liouvillian_with(model, options)?;
        let propagator = linalg::expm(generator.matrix(), t)?;
        Ok(Self {
            dim: model.dim(),
            propagator,
        })
    }

    pub fn propagator(&self) -> &ComplexMatrix {
        &self.propagator
    }
}

impl LinearMap for OracleMap {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, input: &ComplexMatrix) -> Result<ComplexMatrix> {
        check_input(self.dim, input)?;
        let v = self.propagator.as_array().dot(&linalg::vec(input)?);
        linalg::unvec(&v, self.dim)
    }
}

/// `unvec(e^{ℒt} vec(ρ0))`, validated at [`StateTolerance::ORACLE`].
pub fn oracle_evolve(model: &LindbladModel, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    oracle_evolve_with(model, rho0, t, &OracleOptions::default())
}

pub fn oracle_evolve_with(
    model: &LindbladModel,
    rho0: &DensityMatrix,
    t: f64,
    options: &OracleOptions,
) -> Result<DensityMatrix> {
    if rho0.dim() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            actual: rho0.dim(),
        });
    }
    let map = OracleMap::with_options(model, t, options)?;
    DensityMatrix::with_tolerance(map.apply(rho0.matrix())?, &StateTolerance::ORACLE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array2;

    #[test]
    fn trivial_model_has_zero_generator() {
        let model = LindbladModel::new(vec![0.0; 3], Array2::zeros((3, 3))).unwrap();
        let l = liouvillian(&model).unwrap();
        assert_eq!(l.matrix().max_norm(), 0.0);
    }

    #[test]
    fn two_level_decay_generator_by_hand() {
        // Basis of vec(ρ): (ρ00, ρ10, ρ01, ρ11).
        let (omega, gp) = (1.7, 0.6);
        let model =
            LindbladModel::from_jumps(vec![-omega / 2.0, omega / 2.0], &[(0, 1, gp)]).unwrap();
        let l = liouvillian(&model).unwrap();
        let m = l.matrix();
        let c = |re: f64, im: f64| C64::new(re, im);
        // populations: dρ00/dt = γ₊ρ11, dρ11/dt = −γ₊ρ11
        assert_eq!(m[(0, 3)], c(gp, 0.0));
        assert_eq!(m[(3, 3)], c(-gp, 0.0));
        assert_eq!(m[(0, 0)], c(0.0, 0.0));
        // coherences: dρ10/dt = (−iΩ − γ₊/2)ρ10, dρ01/dt = (iΩ − γ₊/2)ρ01
        assert!((m[(1, 1)] - c(-gp / 2.0, -omega)).norm() < 1e-15);
        assert!((m[(2, 2)] - c(-gp / 2.0, omega)).norm() < 1e-15);
        let mut off = 0.0f64;
        for (i, j) in [
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 2),
            (1, 3),
            (2, 0),
            (2, 1),
            (2, 3),
            (3, 0),
            (3, 1),
            (3, 2),
        ] {
            off = off.max(m[(i, j)].norm());
        }
        assert_eq!(off, 0.0);
        assert!(l.trace_functional_residual() < 1e-15);
    }

    #[test]
    fn dephasing_decays_coherences_at_twice_the_rate() {
        let model = LindbladModel::new(vec![-0.5, 0.5], Array2::zeros((2, 2)))
            .unwrap()
            .with_dephasing(0.3)
            .unwrap();
        let l = liouvillian(&model).unwrap();
        assert!((l.matrix()[(1, 1)].re + 0.6).abs() < 1e-15);
        assert!((l.matrix()[(2, 2)].re + 0.6).abs() < 1e-15);
        assert_eq!(l.matrix()[(0, 0)].re, 0.0);
    }

    #[test]
    fn size_limit_is_enforced() {
        let model = LindbladModel::new(vec![0.0; 5], Array2::zeros((5, 5))).unwrap();
        assert!(matches!(
            liouvillian_with(&model, &OracleOptions { max_dim: 4 }),
            Err(Error::OracleTooLarge { dim: 5, limit: 4 })
        ));
    }

    #[test]
    fn zero_time_returns_input() {
        let model = LindbladModel::from_jumps(vec![0.0, 1.0], &[(0, 1, 1.0)]).unwrap();
        let rho0 = DensityMatrix::pure(&[C64::new(0.6, 0.0), C64::new(0.0, 0.8)]).unwrap();
        let rho = oracle_evolve(&model, &rho0, 0.0).unwrap();
        assert_eq!(rho.matrix(), rho0.matrix());
        assert!(oracle_evolve(&model, &rho0, -1.0).is_err());
    }
}
