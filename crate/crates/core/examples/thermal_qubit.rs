// A qubit in a thermal bath relaxes to the Gibbs state.

use lindkraus::microscopic::{gibbs_populations, spin_boson_model, SpectralFunction};
use lindkraus::{evolve, two_level_solution, DensityMatrix, TwoLevelParams};

pub fn run_example() -> lindkraus::Result<()> {
    let (omega, beta) = (1.0, 1.5);
    let model = spin_boson_model(
        omega,
        &SpectralFunction::flat(0.0),
        &SpectralFunction::flat(0.4),
        beta,
    )?;
    let params = TwoLevelParams::from_model(&model)?;
    println!(
        "gamma+ = {:.6}, gamma- = {:.6}, ratio = {:.6}, exp(-beta omega) = {:.6}",
        params.gamma_plus,
        params.gamma_minus,
        params.gamma_minus / params.gamma_plus,
        (-beta * omega).exp()
    );

    let rho0 = DensityMatrix::basis_state(2, 1)?;
    for t in [0.0, 1.0, 5.0, 50.0 / params.gamma_beta()] {
        let rho = evolve(&model, &rho0, t)?;
        let closed = two_level_solution(&params, &rho0, t)?;
        let p = rho.populations();
        println!(
            "t = {t:>8.3}: ground {:.8} excited {:.8} (closed form differs by {:.1e})",
            p[0],
            p[1],
            rho.matrix().max_abs_diff(closed.matrix())
        );
    }
    let gibbs = gibbs_populations(model.energies(), beta);
    println!(
        "Gibbs:            ground {:.8} excited {:.8}",
        gibbs[0], gibbs[1]
    );
    Ok(())
}

fn main() -> lindkraus::Result<()> {
    run_example()
}
