//! Closed-form evolution of Lindblad models in the Kraus representation.
//!
//! The generator is split into a no-jump part `A ρ + ρ A†`, with
//! `A = −iH − ½ Σ γ_mn X_mn† X_mn` diagonal in the energy basis, and the jump
//! part `Σ γ_mn X_mn ρ X_mn†`. Moving to the frame `ρ = e^{At} ρ_I e^{A†t}`,
//! the contractions `X_mn ρ_I X_mn†` for a fixed target `m` obey a closed
//! linear system driven by the `|I| × |I|` matrix `Γ_m`:
//!
//! ```text
//! (Γ_m)_{nn'} = δ_{nn'} Σ_{ℓ∈I} (γ_{ℓm} − γ_{ℓn}) + γ_{nn'}
//! ```
//!
//! Integrating once more gives
//!
//! ```text
//! ρ(t) = e^{At} ρ(0) e^{A†t} + Σ_{m,n'∈I} c_{mn'}(t) X_{mn'} ρ(0) X_{mn'}†
//! c_{mn'}(t) = e^{−κ_m t} Σ_{n∈I} γ_mn (∫₀ᵗ e^{Γ_m s} ds)_{nn'}
//! ```
//!
//! where `κ_m = Σ_ℓ γ_ℓm` is the total outflow of `m`; the factor `e^{−κ_m t}`
//! is what `e^{At}` does to `|m⟩⟨m|`. Only `|I| × |I|` matrices are
//! exponentiated, however large the system is.

use std::collections::BTreeMap;

use ndarray::Array2;

use crate::channel::{check_input, KrausLabel, KrausOperator, KrausSet, LinearMap};
use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::{ComplexMatrix, C64};
use crate::model::LindbladModel;

/// Coefficients in `[-NEGATIVE_COEFFICIENT_TOLERANCE, 0)` are rounding noise
/// and clipped to zero; anything lower is reported as a non-CP map.
pub const NEGATIVE_COEFFICIENT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub negative_coefficient_tolerance: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            negative_coefficient_tolerance: NEGATIVE_COEFFICIENT_TOLERANCE,
        }
    }
}

/// The diagonal generator `A = −i Σ_n Ẽ_n |n⟩⟨n|` with complex energies
/// `Ẽ_n = E_n − (i/2) Σ_m γ_mn`.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveGenerator {
    complex_energies: Vec<C64>,
}

impl EffectiveGenerator {
    pub fn complex_energies(&self) -> &[C64] {
        &self.complex_energies
    }

    /// Diagonal of `e^{At}`, i.e. `e^{−iẼ_n t}`.
    pub fn propagator_diagonal(&self, t: f64) -> Vec<C64> {
        self.complex_energies
            .iter()
            .map(|e| (-C64::i() * e * t).exp())
            .collect()
    }

    pub fn propagator(&self, t: f64) -> Result<ComplexMatrix> {
        ComplexMatrix::from_diag(&self.propagator_diagonal(t))
    }
}

fn ensure_solvable(model: &LindbladModel) -> Result<()> {
    model.ensure_valid()?;
    if model.dephasing_rate() != 0.0 {
        return Err(Error::DephasingUnsupported);
    }
    Ok(())
}

fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            what: "time",
            value: t,
        })
    }
}

pub fn effective_generator(model: &LindbladModel) -> Result<EffectiveGenerator> {
    ensure_solvable(model)?;
    Ok(effective_generator_unchecked(model))
}

fn effective_generator_unchecked(model: &LindbladModel) -> EffectiveGenerator {
    let complex_energies = model
        .energies()
        .iter()
        .enumerate()
        .map(|(n, &e)| C64::new(e, -0.5 * model.outflow(n)))
        .collect();
    EffectiveGenerator { complex_energies }
}

/// `Γ_m` over the channel set, rows and columns in ascending state order.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaMatrix {
    target: usize,
    states: Vec<usize>,
    mat: Array2<f64>,
}

impl GammaMatrix {
    pub fn target(&self) -> usize {
        self.target
    }

    /// State labels of the rows/columns.
    pub fn states(&self) -> &[usize] {
        &self.states
    }

    pub fn matrix(&self) -> &Array2<f64> {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }
}

pub fn gamma_matrix(model: &LindbladModel, m: usize) -> Result<GammaMatrix> {
    ensure_solvable(model)?;
    gamma_matrix_unchecked(model, m)
}

fn gamma_matrix_unchecked(model: &LindbladModel, m: usize) -> Result<GammaMatrix> {
    let states = model.channel_set().to_vec();
    if !states.contains(&m) {
        return Err(Error::NotInChannelSet { state: m });
    }
    let outflow = |n: usize| states.iter().map(|&l| model.rate(l, n)).sum::<f64>();
    let out_m = outflow(m);
    let mat = Array2::from_shape_fn((states.len(), states.len()), |(a, b)| {
        let (n, np) = (states[a], states[b]);
        let diag = if a == b { out_m - outflow(n) } else { 0.0 };
        diag + model.rate(n, np)
    });
    Ok(GammaMatrix {
        target: m,
        states,
        mat,
    })
}

/// Weights `c_{mn'}(t)` of the jump terms `X_{mn'} ρ(0) X_{mn'}†`, already in
/// the original (Schrödinger) frame.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpCoefficients {
    time: f64,
    coeffs: BTreeMap<(usize, usize), f64>,
}

impl JumpCoefficients {
    pub fn time(&self) -> f64 {
        self.time
    }

    /// `c_{to, from}`; zero for pairs outside the channel set.
    pub fn get(&self, to: usize, from: usize) -> f64 {
        self.coeffs.get(&(to, from)).copied().unwrap_or(0.0)
    }

    /// `((to, from), c)` in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }
}

pub fn jump_coefficients(model: &LindbladModel, t: f64) -> Result<JumpCoefficients> {
    jump_coefficients_with(model, t, &SolverOptions::default())
}

pub fn jump_coefficients_with(
    model: &LindbladModel,
    t: f64,
    options: &SolverOptions,
) -> Result<JumpCoefficients> {
    ensure_solvable(model)?;
    check_time(t)?;
    let states = model.channel_set();
    let mut coeffs = BTreeMap::new();
    for &m in states {
        let incoming: Vec<f64> = states.iter().map(|&n| model.rate(m, n)).collect();
        if incoming.iter().all(|&g| g == 0.0) {
            for &np in states {
                coeffs.insert((m, np), 0.0);
            }
            continue;
        }
        let gamma = gamma_matrix_unchecked(model, m)?;
        let integral = linalg::expm_integral(&ComplexMatrix::from_real(gamma.matrix())?, t)?;
        let decay = (-model.outflow(m) * t).exp();
        for (b, &np) in states.iter().enumerate() {
            let raw: f64 = incoming
                .iter()
                .enumerate()
                .map(|(a, &g)| g * integral[(a, b)].re)
                .sum();
            let c = decay * raw;
            if !c.is_finite() {
                return Err(Error::InvalidParameter {
                    what: "jump coefficient",
                    value: c,
                });
            }
            let c = if c < 0.0 {
                if c < -options.negative_coefficient_tolerance {
                    return Err(Error::NotCompletelyPositive {
                        detail: format!("jump coefficient c[{m},{np}]({t}) = {c:e}"),
                    });
                }
                0.0
            } else {
                c
            };
            coeffs.insert((m, np), c);
        }
    }
    Ok(JumpCoefficients { time: t, coeffs })
}

/// The solved map `ρ(0) ↦ ρ(t)`.
///
/// Holds only the `N` no-jump factors and the `|I|²` jump weights, so applying
/// it costs `O(N²)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionMap {
    no_jump: Vec<C64>,
    jumps: JumpCoefficients,
}

impl EvolutionMap {
    pub fn time(&self) -> f64 {
        self.jumps.time
    }

    pub fn jump_coefficients(&self) -> &JumpCoefficients {
        &self.jumps
    }

    /// Diagonal of the no-jump propagator `e^{At}`.
    pub fn no_jump_diagonal(&self) -> &[C64] {
        &self.no_jump
    }

    /// `{e^{At}} ∪ {√c_{mn'} X_{mn'} : c_{mn'} > 0}`.
    pub fn kraus_set(&self) -> Result<KrausSet> {
        let n = self.no_jump.len();
        let mut operators = vec![KrausOperator {
            label: KrausLabel::NoJump,
            matrix: ComplexMatrix::from_diag(&self.no_jump)?,
        }];
        for ((to, from), c) in self.jumps.iter() {
            if c > 0.0 {
                let mut matrix = Array2::<C64>::zeros((n, n));
                matrix[[to, from]] = C64::new(c.sqrt(), 0.0);
                operators.push(KrausOperator {
                    label: KrausLabel::Jump { to, from },
                    matrix: ComplexMatrix::new(matrix)?,
                });
            }
        }
        KrausSet::new(n, operators)
    }
}

impl LinearMap for EvolutionMap {
    fn dim(&self) -> usize {
        self.no_jump.len()
    }

    fn apply(&self, input: &ComplexMatrix) -> Result<ComplexMatrix> {
        check_input(self.dim(), input)?;
        let d = &self.no_jump;
        let rho = input.as_array();
        let mut out = Array2::from_shape_fn(rho.dim(), |(i, j)| d[i] * rho[[i, j]] * d[j].conj());
        for ((to, from), c) in self.jumps.iter() {
            if c != 0.0 {
                out[[to, to]] += rho[[from, from]] * c;
            }
        }
        ComplexMatrix::new(out)
    }
}

pub fn solve(model: &LindbladModel, t: f64) -> Result<EvolutionMap> {
    solve_with(model, t, &SolverOptions::default())
}

pub fn solve_with(model: &LindbladModel, t: f64, options: &SolverOptions) -> Result<EvolutionMap> {
    let jumps = jump_coefficients_with(model, t, options)?;
    let no_jump = effective_generator_unchecked(model).propagator_diagonal(t);
    Ok(EvolutionMap { no_jump, jumps })
}

/// `ρ(t)` for the initial state `rho0`.
pub fn evolve(model: &LindbladModel, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    if rho0.dim() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            actual: rho0.dim(),
        });
    }
    let map = solve(model, t)?;
    DensityMatrix::new(map.apply(rho0.matrix())?)
}

pub fn kraus_set(model: &LindbladModel, t: f64) -> Result<KrausSet> {
    solve(model, t)?.kraus_set()
}

/// Largest `|I|` among the `Γ_m` a model needs, i.e. the size of the matrices
/// the solver exponentiates.
pub fn gamma_dimension(model: &LindbladModel) -> usize {
    model.channel_set().len()
}
