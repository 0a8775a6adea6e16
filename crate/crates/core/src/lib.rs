//! Exact evolution of finite-level Lindblad master equations whose jumps are
//! of the form `X_mn = |m⟩⟨n|`, returned as a Kraus map.
//!
//! The evolution splits into the no-jump propagator `e^{At}` and jump terms
//! `c_mn'(t) |m⟩⟨n'| ρ |n'⟩⟨m|`. Each coefficient comes from the exponential of
//! a small real matrix `Γ_m` whose size is the number of states coupled to the
//! reservoir, so the `N² × N²` Liouvillian is never formed.
//!
//! ```no_run
//! use lindkraus::{evolve, DensityMatrix, LindbladModel};
//!
//! let model = LindbladModel::from_jumps(vec![-1.0, 0.3, 1.0], &[(0, 1, 1.0), (1, 2, 1.0)])?;
//! let rho = evolve(&model, &DensityMatrix::basis_state(3, 2)?, 1.0)?;
//! println!("{:?}", rho.populations());
//! # Ok::<(), lindkraus::Error>(())
//! ```
//!
//! See the `examples/` directory for one program per capability.

extern crate blas_src;

pub mod channel;
pub mod cli;
pub mod closed_forms;
pub mod density;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod microscopic;
pub mod model;
pub mod oracle;
pub mod random;
pub mod schema;
pub mod solver;

pub use channel::{
    choi_matrix, kraus_from_choi, KrausLabel, KrausOperator, KrausSet, LinearMap, Superoperator,
};
pub use closed_forms::{
    three_level_solution, two_level_dephasing_solution, two_level_solution, TwoLevelParams,
};
pub use density::{DensityMatrix, StateTolerance};
pub use error::{Error, Result};
pub use linalg::{expm, expm_integral};
pub use matrix::{ComplexMatrix, C64};
pub use model::{validate_model, LindbladModel, Violation};
pub use oracle::{liouvillian, oracle_evolve};
pub use solver::{evolve, gamma_matrix, jump_coefficients, kraus_set, solve, EvolutionMap};
