//! Jump rates from a bosonic reservoir, and the builtin physical models.
//!
//! A coupling between two levels with gap `ω > 0` and on-shell strength
//! `Γ(ω)` gives a downhill rate `[1 + N(ω)] Γ(ω)` and an uphill rate
//! `N(ω) Γ(ω)`, with `N` the Bose occupation. Their ratio is `e^{−βω}`, so the
//! rates always satisfy detailed balance and relax towards the Gibbs state.

use serde::{Deserialize, Serialize};

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::model::LindbladModel;

/// Spectral density of a reservoir channel, `Γ(ω) = 0` for `ω < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum SpectralFunction {
    /// `g` for `ω > 0`.
    Flat { g: f64 },
    /// `g ω e^{−ω/ω_c}` for `ω > 0`.
    Ohmic { g: f64, omega_c: f64 },
}

impl SpectralFunction {
    pub fn flat(g: f64) -> Self {
        SpectralFunction::Flat { g }
    }

    pub fn ohmic(g: f64, omega_c: f64) -> Self {
        SpectralFunction::Ohmic { g, omega_c }
    }

    pub fn validate(&self) -> Result<()> {
        let (g, omega_c) = match *self {
            SpectralFunction::Flat { g } => (g, 1.0),
            SpectralFunction::Ohmic { g, omega_c } => (g, omega_c),
        };
        if !(g >= 0.0 && g.is_finite()) {
            return Err(Error::InvalidParameter {
                what: "spectral strength g",
                value: g,
            });
        }
        if omega_c.is_nan() || omega_c <= 0.0 {
            return Err(Error::InvalidParameter {
                what: "cutoff omega_c",
                value: omega_c,
            });
        }
        Ok(())
    }

    pub fn eval(&self, omega: f64) -> f64 {
        if omega <= 0.0 {
            return 0.0;
        }
        match *self {
            SpectralFunction::Flat { g } => g,
            SpectralFunction::Ohmic { g, omega_c } => g * omega * (-omega / omega_c).exp(),
        }
    }

    /// `Γ'(0⁺)`.
    pub fn slope_at_zero(&self) -> f64 {
        match *self {
            SpectralFunction::Flat { .. } => 0.0,
            SpectralFunction::Ohmic { g, .. } => g,
        }
    }
}

/// Inverse temperature; `f64::INFINITY` is zero temperature.
fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            what: "beta",
            value: beta,
        })
    }
}

/// `N(ω) = 1 / (e^{βω} − 1)`.
pub fn bose_occupation(omega: f64, beta: f64) -> Result<f64> {
    if omega <= 0.0 || !omega.is_finite() {
        return Err(Error::NonPositiveFrequency(omega));
    }
    check_beta(beta)?;
    if beta.is_infinite() {
        return Ok(0.0);
    }
    Ok(1.0 / (beta * omega).exp_m1())
}

/// One reservoir coupling between two levels, in either order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coupling {
    pub pair: (usize, usize),
    #[serde(flatten)]
    pub spectral: SpectralFunction,
}

/// Rate matrix (row = destination) from reservoir couplings at inverse
/// temperature `beta`. The resulting model must pass validation.
pub fn rates_from_spectral(
    energies: &[f64],
    couplings: &[Coupling],
    beta: f64,
) -> Result<Array2<f64>> {
    check_beta(beta)?;
    let n = energies.len();
    let mut rates = Array2::zeros((n, n));
    let scale = energies.iter().fold(1.0f64, |acc, e| acc.max(e.abs()));
    for c in couplings {
        c.spectral.validate()?;
        let (a, b) = c.pair;
        if a >= n || b >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: a.max(b) + 1,
            });
        }
        let (lower, upper) = if energies[a] <= energies[b] {
            (a, b)
        } else {
            (b, a)
        };
        let omega = energies[upper] - energies[lower];
        if omega <= crate::model::DEGENERACY_TOLERANCE * scale {
            return Err(Error::NonPositiveFrequency(omega));
        }
        let occupation = bose_occupation(omega, beta)?;
        let strength = c.spectral.eval(omega);
        rates[[lower, upper]] += (1.0 + occupation) * strength;
        rates[[upper, lower]] += occupation * strength;
    }
    let model = LindbladModel::new(energies.to_vec(), rates)?;
    model.ensure_valid()?;
    Ok(model.rates().clone())
}

/// Largest relative violation of `γ_up = e^{−βω} γ_down` over all coupled pairs.
pub fn detailed_balance_residual(model: &LindbladModel, beta: f64) -> f64 {
    let e = model.energies();
    let mut worst: f64 = 0.0;
    for lower in 0..model.dim() {
        for upper in 0..model.dim() {
            let omega = e[upper] - e[lower];
            if omega <= 0.0 {
                continue;
            }
            let down = model.rate(lower, upper);
            let up = model.rate(upper, lower);
            if down == 0.0 && up == 0.0 {
                continue;
            }
            let expected = (-beta * omega).exp() * down;
            let scale = down.max(up);
            worst = worst.max((up - expected).abs() / scale);
        }
    }
    worst
}

/// Level shifts folded into the triplet energies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct EnergyShifts {
    pub delta_1: f64,
    pub delta_2: f64,
}

/// Two exchange-coupled qubits sharing one zero-temperature reservoir,
/// restricted to the triplet sector: energies `(−Ω, g + δ₁, Ω + δ₂)`,
/// `γ_01 = 2Γ(Ω + g)`, `γ_12 = 2Γ(Ω − g)`.
pub fn two_qubit_triplet_model(
    omega: f64,
    g: f64,
    spectral: &SpectralFunction,
    shifts: EnergyShifts,
) -> Result<LindbladModel> {
    if g.is_nan() || g < 0.0 {
        return Err(Error::InvalidParameter {
            what: "exchange coupling g",
            value: g,
        });
    }
    if omega <= g || !omega.is_finite() {
        return Err(Error::InvalidParameter {
            what: "omega (must exceed g)",
            value: omega,
        });
    }
    spectral.validate()?;
    let model = LindbladModel::from_jumps(
        vec![-omega, g + shifts.delta_1, omega + shifts.delta_2],
        &[
            (0, 1, 2.0 * spectral.eval(omega + g)),
            (1, 2, 2.0 * spectral.eval(omega - g)),
        ],
    )?;
    model.ensure_valid()?;
    Ok(model)
}

/// Spin-boson qubit with energies `(−Ω/2, Ω/2)`: `spectral_1` drives
/// transitions, `spectral_0` dephases with `γ₀ = Γ₀'(0⁺)/β`.
pub fn spin_boson_model(
    omega: f64,
    spectral_0: &SpectralFunction,
    spectral_1: &SpectralFunction,
    beta: f64,
) -> Result<LindbladModel> {
    spectral_0.validate()?;
    let rates = rates_from_spectral(
        &[-omega / 2.0, omega / 2.0],
        &[Coupling {
            pair: (0, 1),
            spectral: *spectral_1,
        }],
        beta,
    )?;
    let gamma_0 = if beta.is_infinite() {
        0.0
    } else {
        spectral_0.slope_at_zero() / beta
    };
    let model =
        LindbladModel::new(vec![-omega / 2.0, omega / 2.0], rates)?.with_dephasing(gamma_0)?;
    model.ensure_valid()?;
    Ok(model)
}

/// `e^{−βE_n} / Z`.
pub fn gibbs_populations(energies: &[f64], beta: f64) -> Vec<f64> {
    let e_min = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = energies
        .iter()
        .map(|&e| {
            if beta.is_infinite() {
                if e == e_min {
                    1.0
                } else {
                    0.0
                }
            } else {
                (-beta * (e - e_min)).exp()
            }
        })
        .collect();
    let z: f64 = weights.iter().sum();
    weights.into_iter().map(|w| w / z).collect()
}
