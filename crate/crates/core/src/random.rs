//! Seeded random models and states for sweeps and benchmarks.

use ndarray::Array2;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64};
use crate::model::LindbladModel;

/// Deterministic generator used throughout the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ranges for [`random_model`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomModelSpec {
    pub dim: usize,
    /// Number of distinct nonzero jumps `|from⟩ → |to⟩`.
    pub channels: usize,
    pub energy_range: (f64, f64),
    pub rate_range: (f64, f64),
}

impl RandomModelSpec {
    pub fn new(dim: usize, channels: usize) -> Self {
        Self {
            dim,
            channels,
            energy_range: (-1.0, 1.0),
            rate_range: (0.1, 1.0),
        }
    }
}

const MAX_ATTEMPTS: usize = 1000;

/// A model with exactly `spec.channels` jumps that passes validation.
pub fn random_model<R: Rng + ?Sized>(rng: &mut R, spec: &RandomModelSpec) -> Result<LindbladModel> {
    let n = spec.dim;
    let pairs = n * n.saturating_sub(1);
    if n == 0 || spec.channels > pairs {
        return Err(Error::InvalidParameter {
            what: "channel count",
            value: spec.channels as f64,
        });
    }
    let (e_lo, e_hi) = spec.energy_range;
    let (g_lo, g_hi) = spec.rate_range;
    for _ in 0..MAX_ATTEMPTS {
        let energies: Vec<f64> = (0..n).map(|_| rng.random_range(e_lo..=e_hi)).collect();
        let mut rates = Array2::zeros((n, n));
        for k in sample(rng, pairs, spec.channels) {
            let to = k / (n - 1);
            let mut from = k % (n - 1);
            if from >= to {
                from += 1;
            }
            rates[[to, from]] = rng.random_range(g_lo..=g_hi);
        }
        let model = LindbladModel::new(energies, rates)?;
        if model.validate().is_empty() {
            return Ok(model);
        }
    }
    Err(Error::InvalidParameter {
        what: "random model attempts",
        value: MAX_ATTEMPTS as f64,
    })
}

/// `G G† / tr(G G†)` for a complex Gaussian `G`: full rank almost surely.
pub fn random_density_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<DensityMatrix> {
    let g = ComplexMatrix::from_fn(dim, dim, |_| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })?;
    let gg = g.matmul(&g.adjoint())?;
    let mut rho = gg.scale(C64::new(1.0 / gg.trace().re, 0.0))?.into_array();
    // Remove rounding asymmetry.
    let herm = (&rho + &rho.t().mapv(|z| z.conj())) * C64::new(0.5, 0.0);
    rho.assign(&herm);
    DensityMatrix::new(ComplexMatrix::new(rho)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_has_requested_channels() {
        let mut r = rng(7);
        for (n, ch) in [(2, 1), (2, 2), (5, 3), (8, 3)] {
            let model = random_model(&mut r, &RandomModelSpec::new(n, ch)).unwrap();
            assert_eq!(model.jumps().len(), ch);
            assert!(model.validate().is_empty());
        }
        assert!(random_model(&mut r, &RandomModelSpec::new(2, 3)).is_err());
    }

    #[test]
    fn seeds_are_deterministic() {
        let a = random_model(&mut rng(3), &RandomModelSpec::new(6, 2)).unwrap();
        let b = random_model(&mut rng(3), &RandomModelSpec::new(6, 2)).unwrap();
        assert_eq!(a, b);
        let x = random_density_matrix(&mut rng(3), 4).unwrap();
        let y = random_density_matrix(&mut rng(3), 4).unwrap();
        assert_eq!(x, y);
        assert!(x.min_eigenvalue() > 0.0);
    }
}
