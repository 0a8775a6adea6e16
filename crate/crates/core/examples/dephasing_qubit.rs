// Thermal relaxation plus pure dephasing. The dephasing term lies outside the
// general solver, so this uses the dedicated two-level solution and gets a
// Kraus set from its Choi matrix.

use lindkraus::closed_forms::{superop_p_algebra_check, DephasingMap};
use lindkraus::{
    choi_matrix, kraus_from_choi, oracle_evolve, two_level_dephasing_solution, DensityMatrix,
    TwoLevelParams, C64,
};

pub fn run_example() -> lindkraus::Result<()> {
    assert!(superop_p_algebra_check());
    let params = TwoLevelParams::new(1.0, 0.5, 0.1).with_dephasing(0.3);
    let model = params.model()?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let rho0 = DensityMatrix::pure(&[C64::new(h, 0.0), C64::new(h, 0.0)])?;

    for t in [0.1, 1.0, 10.0] {
        let rho = two_level_dephasing_solution(&params, &rho0, t)?;
        let exact = oracle_evolve(&model, &rho0, t)?;
        println!(
            "t = {t:>4}: |rho01| = {:.6e}, excited {:.6}, vs Liouvillian {:.1e}",
            rho.matrix()[(0, 1)].norm(),
            rho.populations()[1],
            rho.matrix().max_abs_diff(exact.matrix())
        );
    }

    let kraus = kraus_from_choi(&choi_matrix(&DephasingMap::new(params, 1.0)?)?)?;
    println!(
        "{} Kraus operators, completeness residual {:e}",
        kraus.len(),
        kraus.completeness_residual()
    );
    Ok(())
}

fn main() -> lindkraus::Result<()> {
    run_example()
}
