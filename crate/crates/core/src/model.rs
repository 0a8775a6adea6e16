//! Lindblad models built from energies and a jump-rate matrix.
//!
//! **Rate orientation:** `rates[(m, n)]` is the rate `γ_mn` of the jump
//! `|n⟩ → |m⟩`, i.e. the weight of `X_mn ρ X_mn†` with `X_mn = |m⟩⟨n|`.
//! Row = destination, column = source. Reading the matrix the other way round
//! reverses the dynamics.
//!
//! Units have `ħ = 1`: energies are angular frequencies and times are their
//! inverse. Energies are taken as given, including any level shifts.

use std::fmt;

use ndarray::Array2;

use crate::error::{Error, Result};

/// Relative tolerance below which two energies (or two transition
/// frequencies) count as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct LindbladModel {
    energies: Vec<f64>,
    rates: Array2<f64>,
    dephasing_rate: f64,
    channel_set: Vec<usize>,
}

impl LindbladModel {
    /// Builds a model without dephasing. Only shapes and finiteness are
    /// checked here; the physical conditions are reported by [`validate_model`].
    pub fn new(energies: Vec<f64>, rates: Array2<f64>) -> Result<Self> {
        let n = energies.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        if rates.dim() != (n, n) {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                actual: rates.len(),
            });
        }
        if let Some(&e) = energies.iter().find(|e| !e.is_finite()) {
            return Err(Error::InvalidParameter {
                what: "energy",
                value: e,
            });
        }
        if let Some(&g) = rates.iter().find(|g| !g.is_finite()) {
            return Err(Error::InvalidParameter {
                what: "rate",
                value: g,
            });
        }
        let channel_set = (0..n)
            .filter(|&m| (0..n).any(|k| rates[[m, k]] != 0.0 || rates[[k, m]] != 0.0))
            .collect();
        Ok(Self {
            energies,
            rates,
            dephasing_rate: 0.0,
            channel_set,
        })
    }

    /// Builds a model from a list of `(to, from, rate)` jumps.
    pub fn from_jumps(energies: Vec<f64>, jumps: &[(usize, usize, f64)]) -> Result<Self> {
        let n = energies.len();
        let mut rates = Array2::zeros((n, n));
        for &(to, from, rate) in jumps {
            if to >= n || from >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: to.max(from) + 1,
                });
            }
            rates[[to, from]] += rate;
        }
        Self::new(energies, rates)
    }

    /// Adds the pure-dephasing term `−γ₀(ρ − σ_z ρ σ_z)`; meaningful for two levels only.
    pub fn with_dephasing(mut self, rate: f64) -> Result<Self> {
        if !rate.is_finite() {
            return Err(Error::InvalidParameter {
                what: "dephasing rate",
                value: rate,
            });
        }
        self.dephasing_rate = rate;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.energies.len()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn rates(&self) -> &Array2<f64> {
        &self.rates
    }

    /// `γ_mn`, the rate of `|n⟩ → |m⟩`.
    pub fn rate(&self, to: usize, from: usize) -> f64 {
        self.rates[[to, from]]
    }

    pub fn dephasing_rate(&self) -> f64 {
        self.dephasing_rate
    }

    /// States touched by any nonzero rate, ascending.
    pub fn channel_set(&self) -> &[usize] {
        &self.channel_set
    }

    /// Total rate out of state `n`, `Σ_m γ_mn`.
    pub fn outflow(&self, n: usize) -> f64 {
        self.rates.column(n).sum()
    }

    /// Nonzero `(to, from)` jumps in row-major order.
    pub fn jumps(&self) -> Vec<(usize, usize, f64)> {
        self.rates
            .indexed_iter()
            .filter(|(_, &g)| g != 0.0)
            .map(|((m, n), &g)| (m, n, g))
            .collect()
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate_model(self)
    }

    /// `Err(InvalidModel)` unless [`validate_model`] finds nothing.
    pub fn ensure_valid(&self) -> Result<()> {
        let violations = validate_model(self);
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidModel(violations))
        }
    }

    /// Absolute degeneracy threshold for this spectrum.
    pub fn degeneracy_threshold(&self) -> f64 {
        let scale = self.energies.iter().fold(1.0f64, |acc, e| acc.max(e.abs()));
        DEGENERACY_TOLERANCE * scale
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NegativeRate {
        to: usize,
        from: usize,
        rate: f64,
    },
    DiagonalRate {
        state: usize,
        rate: f64,
    },
    DegenerateEnergy {
        first: usize,
        second: usize,
    },
    DegenerateTransition {
        first: (usize, usize),
        second: (usize, usize),
    },
    DephasingNeedsTwoLevels {
        dim: usize,
    },
    NegativeDephasing {
        rate: f64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NegativeRate { to, from, rate } => {
                write!(f, "negative rate {rate} for jump {from}->{to}")
            }
            Violation::DiagonalRate { state, rate } => {
                write!(f, "diagonal rate {rate} on state {state}")
            }
            Violation::DegenerateEnergy { first, second } => {
                write!(f, "coupled states {first} and {second} are degenerate")
            }
            Violation::DegenerateTransition { first, second } => write!(
                f,
                "transitions {}->{} and {}->{} have degenerate frequencies",
                first.1, first.0, second.1, second.0
            ),
            Violation::DephasingNeedsTwoLevels { dim } => {
                write!(f, "dephasing is only supported for two levels, got {dim}")
            }
            Violation::NegativeDephasing { rate } => write!(f, "negative dephasing rate {rate}"),
        }
    }
}

/// Lists every reason the model falls outside the solvable class: negative or
/// diagonal rates, degenerate coupled energies, degenerate transition
/// frequencies `E_m − E_n` among nonzero rates, and dephasing on `N ≠ 2`.
pub fn validate_model(model: &LindbladModel) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = model.dim();
    for ((to, from), &rate) in model.rates.indexed_iter() {
        if to == from {
            if rate != 0.0 {
                out.push(Violation::DiagonalRate { state: to, rate });
            }
        } else if rate < 0.0 {
            out.push(Violation::NegativeRate { to, from, rate });
        }
    }

    let tol = model.degeneracy_threshold();
    let e = &model.energies;
    let coupled = &model.channel_set;
    for (k, &a) in coupled.iter().enumerate() {
        for &b in &coupled[k + 1..] {
            if (e[a] - e[b]).abs() < tol {
                out.push(Violation::DegenerateEnergy {
                    first: a,
                    second: b,
                });
            }
        }
    }

    let transitions: Vec<(usize, usize)> = model
        .rates
        .indexed_iter()
        .filter(|&((m, k), &g)| m != k && g != 0.0)
        .map(|(idx, _)| idx)
        .collect();
    for (k, &(m1, n1)) in transitions.iter().enumerate() {
        for &(m2, n2) in &transitions[k + 1..] {
            let w1 = e[m1] - e[n1];
            let w2 = e[m2] - e[n2];
            if (w1 - w2).abs() < tol {
                out.push(Violation::DegenerateTransition {
                    first: (m1, n1),
                    second: (m2, n2),
                });
            }
        }
    }

    if model.dephasing_rate < 0.0 {
        out.push(Violation::NegativeDephasing {
            rate: model.dephasing_rate,
        });
    }
    if model.dephasing_rate > 0.0 && n != 2 {
        out.push(Violation::DephasingNeedsTwoLevels { dim: n });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_level(omega: f64, g: f64, gamma: f64) -> LindbladModel {
        LindbladModel::from_jumps(vec![-omega, g, omega], &[(0, 1, gamma), (1, 2, gamma)]).unwrap()
    }

    #[test]
    fn triplet_model_is_valid() {
        let model = three_level(1.0, 0.3, 0.7);
        assert!(validate_model(&model).is_empty());
        assert_eq!(model.channel_set(), &[0, 1, 2]);
    }

    #[test]
    fn diagonal_rate_is_one_violation() {
        let mut rates = Array2::zeros((2, 2));
        rates[[0, 0]] = 0.1;
        rates[[0, 1]] = 1.0;
        let model = LindbladModel::new(vec![0.0, 1.0], rates).unwrap();
        assert_eq!(
            validate_model(&model),
            vec![Violation::DiagonalRate {
                state: 0,
                rate: 0.1
            }]
        );
    }

    #[test]
    fn zero_exchange_makes_transitions_degenerate() {
        let model = three_level(1.0, 0.0, 1.0);
        let v = validate_model(&model);
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0], Violation::DegenerateTransition { .. }));
    }

    #[test]
    fn other_violations() {
        let model = LindbladModel::from_jumps(vec![0.0, 0.0, 1.0], &[(0, 1, -0.5)]).unwrap();
        let v = validate_model(&model);
        assert!(v.contains(&Violation::NegativeRate {
            to: 0,
            from: 1,
            rate: -0.5
        }));
        assert!(v.contains(&Violation::DegenerateEnergy {
            first: 0,
            second: 1
        }));

        let model = three_level(1.0, 0.3, 1.0).with_dephasing(0.2).unwrap();
        assert_eq!(
            validate_model(&model),
            vec![Violation::DephasingNeedsTwoLevels { dim: 3 }]
        );
        let qubit = LindbladModel::from_jumps(vec![-0.5, 0.5], &[(0, 1, 1.0)])
            .unwrap()
            .with_dephasing(0.2)
            .unwrap();
        assert!(validate_model(&qubit).is_empty());
    }

    #[test]
    fn uncoupled_degenerate_states_are_fine() {
        // States 2 and 3 share an energy but never jump.
        let model = LindbladModel::from_jumps(vec![0.0, 1.0, 5.0, 5.0], &[(0, 1, 1.0)]).unwrap();
        assert!(validate_model(&model).is_empty());
        assert_eq!(model.channel_set(), &[0, 1]);
    }

    #[test]
    fn validation_is_idempotent() {
        let model = three_level(1.0, 0.0, 1.0);
        assert_eq!(validate_model(&model), validate_model(&model));
    }

    #[test]
    fn structural_errors() {
        assert!(LindbladModel::new(vec![], Array2::zeros((0, 0))).is_err());
        assert!(LindbladModel::new(vec![0.0, 1.0], Array2::zeros((3, 3))).is_err());
        assert!(LindbladModel::new(vec![f64::NAN, 1.0], Array2::zeros((2, 2))).is_err());
        assert!(LindbladModel::from_jumps(vec![0.0], &[(0, 1, 1.0)]).is_err());
    }
}
