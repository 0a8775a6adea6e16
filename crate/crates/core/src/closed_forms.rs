//! Hand-derived solutions for three small models: the zero-temperature
//! three-level ladder, the finite-temperature two-level system, and the same
//! two-level system with extra pure dephasing.
//!
//! They serve as ground-truth fixtures for the general solver and as fast
//! paths. The dephasing case has degenerate transition frequencies (`σ_z`
//! couples each level to itself), which puts it outside the general solver;
//! it is evaluated here with the superoperators
//!
//! ```text
//! P_z ρ = σ_z ρ σ_z,   P_− ρ = σ_− ρ σ_+,   P_+ ρ = σ_+ ρ σ_−
//! ```
//!
//! Two-level conventions: `|0⟩` is the lower level, `σ_z = |1⟩⟨1| − |0⟩⟨0|`,
//! `σ_− = |0⟩⟨1|`, `H = (Ω/2) σ_z`; `γ₊` drives `|1⟩ → |0⟩` and `γ₋` drives
//! `|0⟩ → |1⟩`.

use serde::{Deserialize, Serialize};

use crate::channel::{check_input, LinearMap};
use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64};
use crate::model::LindbladModel;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn check_rate(what: &'static str, value: f64) -> Result<()> {
    if value >= 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter { what, value })
    }
}

fn check_time(t: f64) -> Result<()> {
    check_rate("time", t)
}

/// `1 − e^{−x t}` without cancellation for small `x t`.
fn one_minus_exp(x: f64, t: f64) -> f64 {
    -(-x * t).exp_m1()
}

/// Energies `(E0, E1, E2)` and a common decay rate `γ` for the ladder
/// `|2⟩ → |1⟩ → |0⟩`.
pub fn three_level_solution(
    energies: [f64; 3],
    gamma: f64,
    rho0: &DensityMatrix,
    t: f64,
) -> Result<DensityMatrix> {
    check_rate("gamma", gamma)?;
    check_time(t)?;
    check_input(3, rho0.matrix())?;
    let rho = rho0.matrix();
    let decay = (-gamma * t).exp();
    let a = ComplexMatrix::from_diag(&[
        (C64::new(0.0, -energies[0] * t)).exp(),
        (C64::new(-gamma * t / 2.0, -energies[1] * t)).exp(),
        (C64::new(-gamma * t / 2.0, -energies[2] * t)).exp(),
    ])?;
    let b0 = ComplexMatrix::matrix_unit(3, 0, 1);
    let b1 = ComplexMatrix::matrix_unit(3, 1, 2);
    let b0b1 = b0.matmul(&b1)?;

    let gt = gamma * t;
    let out = a
        .sandwich(rho)?
        .add(&b0.sandwich(rho)?.scale(c(one_minus_exp(gamma, t)))?)?
        .add(&b1.sandwich(rho)?.scale(c(gt * decay))?)?
        .add(
            &b0b1
                .sandwich(rho)?
                .scale(c(one_minus_exp(gamma, t) - gt * decay))?,
        )?;
    DensityMatrix::new(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoLevelParams {
    pub omega: f64,
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    #[serde(default)]
    pub gamma_0: f64,
}

impl TwoLevelParams {
    pub fn new(omega: f64, gamma_plus: f64, gamma_minus: f64) -> Self {
        Self {
            omega,
            gamma_plus,
            gamma_minus,
            gamma_0: 0.0,
        }
    }

    pub fn with_dephasing(self, gamma_0: f64) -> Self {
        Self { gamma_0, ..self }
    }

    /// `γ^β = γ₊ + γ₋`.
    pub fn gamma_beta(&self) -> f64 {
        self.gamma_plus + self.gamma_minus
    }

    /// `γ = γ₊ − γ₋`.
    pub fn gamma(&self) -> f64 {
        self.gamma_plus - self.gamma_minus
    }

    pub fn validate(&self) -> Result<()> {
        if !self.omega.is_finite() {
            return Err(Error::InvalidParameter {
                what: "omega",
                value: self.omega,
            });
        }
        check_rate("gamma_plus", self.gamma_plus)?;
        check_rate("gamma_minus", self.gamma_minus)?;
        check_rate("gamma_0", self.gamma_0)
    }

    /// Energies `(−Ω/2, Ω/2)`, `γ_01 = γ₊`, `γ_10 = γ₋`, dephasing `γ₀`.
    pub fn model(&self) -> Result<LindbladModel> {
        self.validate()?;
        LindbladModel::from_jumps(
            vec![-self.omega / 2.0, self.omega / 2.0],
            &[(0, 1, self.gamma_plus), (1, 0, self.gamma_minus)],
        )?
        .with_dephasing(self.gamma_0)
    }

    /// Reads a two-level model. The mean of the two energies is a global phase
    /// and drops out; `Ω = E1 − E0`.
    pub fn from_model(model: &LindbladModel) -> Result<Self> {
        if model.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: model.dim(),
            });
        }
        model.ensure_valid()?;
        let e = model.energies();
        let params = Self {
            omega: e[1] - e[0],
            gamma_plus: model.rate(0, 1),
            gamma_minus: model.rate(1, 0),
            gamma_0: model.dephasing_rate(),
        };
        params.validate()?;
        Ok(params)
    }

    /// `x / γ^β`, taking the `γ^β → 0` limit of the jump terms as zero.
    fn over_gamma_beta(&self, x: f64) -> f64 {
        let gb = self.gamma_beta();
        if gb == 0.0 {
            0.0
        } else {
            x / gb
        }
    }
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_diag(&[c(-1.0), c(1.0)]).expect("finite")
}

pub fn sigma_minus() -> ComplexMatrix {
    ComplexMatrix::matrix_unit(2, 0, 1)
}

pub fn sigma_plus() -> ComplexMatrix {
    ComplexMatrix::matrix_unit(2, 1, 0)
}

fn two_level_map(p: &TwoLevelParams, rho: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let gb = p.gamma_beta();
    let e = (-gb * t).exp();
    let half = (-gb * t / 2.0).exp();
    let (cos, sin) = ((p.omega * t).cos(), (p.omega * t).sin());
    let relax = one_minus_exp(gb, t);
    let r = p.over_gamma_beta(p.gamma() * relax);
    let sz = sigma_z();

    let rho_sz = rho.matmul(&sz)?;
    let sz_rho = sz.matmul(rho)?;
    rho.scale(c(0.25 * (1.0 + e + 2.0 * half * cos)))?
        .add(
            &sz.sandwich(rho)?
                .scale(c(0.25 * (1.0 + e - 2.0 * half * cos)))?,
        )?
        .sub(&rho_sz.scale(C64::new(0.25 * r, -0.5 * half * sin))?)?
        .sub(&sz_rho.scale(C64::new(0.25 * r, 0.5 * half * sin))?)?
        .add(
            &sigma_minus()
                .sandwich(rho)?
                .scale(c(p.over_gamma_beta(p.gamma_plus * relax)))?,
        )?
        .add(
            &sigma_plus()
                .sandwich(rho)?
                .scale(c(p.over_gamma_beta(p.gamma_minus * relax)))?,
        )
}

/// Finite-temperature two-level solution; `params.gamma_0` must be zero.
pub fn two_level_solution(
    params: &TwoLevelParams,
    rho0: &DensityMatrix,
    t: f64,
) -> Result<DensityMatrix> {
    params.validate()?;
    check_time(t)?;
    if params.gamma_0 != 0.0 {
        return Err(Error::DephasingUnsupported);
    }
    check_input(2, rho0.matrix())?;
    DensityMatrix::new(two_level_map(params, rho0.matrix(), t)?)
}

pub fn p_z(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    sigma_z().sandwich(rho)
}

pub fn p_minus(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    sigma_minus().sandwich(rho)
}

pub fn p_plus(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    sigma_plus().sandwich(rho)
}

fn dephasing_map(p: &TwoLevelParams, rho: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let (gp, gm, g0) = (p.gamma_plus, p.gamma_minus, p.gamma_0);
    let gb = p.gamma_beta();
    // e^{𝒜t} carries an overall e^{−γ₀t}; it is merged with cosh/sinh below.
    let kappa = -(gb + p.gamma()) / 4.0;
    let a_ground = C64::new(-(gb - p.gamma()) / 4.0, p.omega / 2.0);
    let a_excited = C64::new(kappa, -p.omega / 2.0);
    let no_jump = ComplexMatrix::from_diag(&[(a_ground * t).exp(), (a_excited * t).exp()])?;
    let evolved = no_jump.sandwich(rho)?;
    let damp = (-2.0 * g0 * t).exp();
    let cosh_part = 0.5 * (1.0 + damp);
    let sinh_part = 0.5 * (1.0 - damp);

    let relax = one_minus_exp(gb, t);
    let k_minus = -gp * (-gm * t).exp_m1() + gm * (-gm * t).exp() * (-gp * t).exp_m1();
    let k_plus = -gm * (-gp * t).exp_m1() + gp * (-gp * t).exp() * (-gm * t).exp_m1();

    let pm = p_minus(rho)?;
    let pp = p_plus(rho)?;
    evolved
        .scale(c(cosh_part))?
        .add(&p_z(&evolved)?.scale(c(sinh_part))?)?
        .add(&pm.scale(c(p.over_gamma_beta(gp * relax)))?)?
        .add(&p_minus(&pp)?.scale(c(p.over_gamma_beta(k_minus)))?)?
        .add(&pp.scale(c(p.over_gamma_beta(gm * relax)))?)?
        .add(&p_plus(&pm)?.scale(c(p.over_gamma_beta(k_plus)))?)
}

/// Two-level solution with pure dephasing `−γ₀(ρ − σ_z ρ σ_z)`; any `γ₀ ≥ 0`.
pub fn two_level_dephasing_solution(
    params: &TwoLevelParams,
    rho0: &DensityMatrix,
    t: f64,
) -> Result<DensityMatrix> {
    params.validate()?;
    check_time(t)?;
    check_input(2, rho0.matrix())?;
    DensityMatrix::new(dephasing_map(params, rho0.matrix(), t)?)
}

/// The dephasing solution as a linear map at fixed `t`, e.g. for Choi analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingMap {
    params: TwoLevelParams,
    time: f64,
}

impl DephasingMap {
    pub fn new(params: TwoLevelParams, time: f64) -> Result<Self> {
        params.validate()?;
        check_time(time)?;
        Ok(Self { params, time })
    }
}

impl LinearMap for DephasingMap {
    fn dim(&self) -> usize {
        2
    }

    fn apply(&self, input: &ComplexMatrix) -> Result<ComplexMatrix> {
        check_input(2, input)?;
        dephasing_map(&self.params, input, self.time)
    }
}

/// Largest residual of the `P` relations
/// `P_z² = 1`, `P_±² = 0`, `P_z P_± = P_± = P_± P_z`, `P_∓ P_± P_∓ = P_∓`,
/// over the matrix-unit basis of 2×2 matrices.
pub fn p_algebra_residual() -> f64 {
    let mut worst: f64 = 0.0;
    let mut check = |lhs: ComplexMatrix, rhs: ComplexMatrix| {
        worst = worst.max(lhs.max_abs_diff(&rhs));
    };
    let zero = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            let x = ComplexMatrix::matrix_unit(2, i, j);
            let pz = p_z(&x).unwrap();
            let pm = p_minus(&x).unwrap();
            let pp = p_plus(&x).unwrap();
            check(p_z(&pz).unwrap(), x.clone());
            check(p_minus(&pm).unwrap(), zero.clone());
            check(p_plus(&pp).unwrap(), zero.clone());
            check(p_z(&pm).unwrap(), pm.clone());
            check(p_minus(&pz).unwrap(), pm.clone());
            check(p_z(&pp).unwrap(), pp.clone());
            check(p_plus(&pz).unwrap(), pp.clone());
            check(p_minus(&p_plus(&pm).unwrap()).unwrap(), pm.clone());
            check(p_plus(&p_minus(&pp).unwrap()).unwrap(), pp.clone());
        }
    }
    worst
}

/// Tolerance for [`superop_p_algebra_check`].
pub const P_ALGEBRA_TOLERANCE: f64 = 1e-14;

pub fn superop_p_algebra_check() -> bool {
    p_algebra_residual() <= P_ALGEBRA_TOLERANCE
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(rows: [[C64; 2]; 2]) -> DensityMatrix {
        DensityMatrix::new(ComplexMatrix::from_rows(&[rows[0].to_vec(), rows[1].to_vec()]).unwrap())
            .unwrap()
    }

    #[test]
    fn ladder_from_top_state() {
        let rho0 = DensityMatrix::basis_state(3, 2).unwrap();
        let (g, t) = (0.8, 1.7);
        let rho = three_level_solution([-1.0, 0.2, 1.0], g, &rho0, t).unwrap();
        let e = (-g * t).exp();
        let p = rho.populations();
        assert!((p[0] - (1.0 - e - g * t * e)).abs() < 1e-15);
        assert!((p[1] - g * t * e).abs() < 1e-15);
        assert!((p[2] - e).abs() < 1e-15);
        assert!((p.iter().sum::<f64>() - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn ground_state_is_dark() {
        let rho0 = DensityMatrix::basis_state(3, 0).unwrap();
        for t in [0.0, 0.5, 3.0, 40.0] {
            let rho = three_level_solution([-1.0, 0.2, 1.0], 2.0, &rho0, t).unwrap();
            assert!(rho.matrix().max_abs_diff(rho0.matrix()) < 1e-15);
        }
    }

    #[test]
    fn two_level_at_time_zero() {
        let p = TwoLevelParams::new(1.3, 0.7, 0.2);
        let rho0 = state([[c(0.3), C64::new(0.1, 0.2)], [C64::new(0.1, -0.2), c(0.7)]]);
        let rho = two_level_solution(&p, &rho0, 0.0).unwrap();
        assert!(rho.matrix().max_abs_diff(rho0.matrix()) < 1e-16);
    }

    #[test]
    fn two_level_rejects_dephasing() {
        let p = TwoLevelParams::new(1.0, 0.5, 0.1).with_dephasing(0.2);
        let rho0 = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(matches!(
            two_level_solution(&p, &rho0, 1.0),
            Err(Error::DephasingUnsupported)
        ));
        assert!(two_level_solution(&TwoLevelParams::new(1.0, -0.5, 0.1), &rho0, 1.0).is_err());
        assert!(two_level_dephasing_solution(&p, &rho0, -1.0).is_err());
    }

    #[test]
    fn pure_dephasing_of_plus_state() {
        let g0 = 0.35;
        let p = TwoLevelParams::new(0.0, 0.0, 0.0).with_dephasing(g0);
        let rho0 = state([[c(0.5), c(0.5)], [c(0.5), c(0.5)]]);
        for t in [0.1, 1.0, 10.0] {
            let rho = two_level_dephasing_solution(&p, &rho0, t).unwrap();
            let expected = 0.5 * (-2.0 * g0 * t).exp();
            assert!((rho.matrix()[(0, 1)] - c(expected)).norm() < 1e-15);
            assert!((rho.matrix()[(0, 0)].re - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn p_algebra_examples() {
        let sx = ComplexMatrix::from_rows(&[vec![c(0.0), c(1.0)], vec![c(1.0), c(0.0)]]).unwrap();
        assert_eq!(p_z(&p_z(&sx).unwrap()).unwrap(), sx);
        let rho = state([[c(0.4), C64::new(0.1, 0.3)], [C64::new(0.1, -0.3), c(0.6)]]);
        let twice = p_minus(&p_minus(rho.matrix()).unwrap()).unwrap();
        assert_eq!(twice.max_norm(), 0.0);
        assert!(superop_p_algebra_check());
    }
}
