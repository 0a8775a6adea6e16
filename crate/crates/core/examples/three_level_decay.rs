// Cascade decay `|2⟩ → |1⟩ → |0⟩` of the two-qubit triplet sector, solved
// three ways: the general solver, the hand-written solution and the Kraus set.

use lindkraus::closed_forms::three_level_solution;
use lindkraus::{evolve, kraus_set, DensityMatrix, LindbladModel, LinearMap};

pub fn run_example() -> lindkraus::Result<()> {
    let (omega, g, gamma) = (1.0, 0.3, 1.0);
    let energies = [-omega, g, omega];
    let model = LindbladModel::from_jumps(energies.to_vec(), &[(0, 1, gamma), (1, 2, gamma)])?;
    let rho0 = DensityMatrix::basis_state(3, 2)?;

    println!("{:>5} {:>10} {:>10} {:>10}", "t", "p0", "p1", "p2");
    for k in 0..=10 {
        let t = 0.5 * k as f64;
        let rho = evolve(&model, &rho0, t)?;
        let p = rho.populations();
        println!("{t:>5.1} {:>10.6} {:>10.6} {:>10.6}", p[0], p[1], p[2]);

        let fixture = three_level_solution(energies, gamma, &rho0, t)?;
        assert!(rho.matrix().max_abs_diff(fixture.matrix()) < 1e-12);
    }

    let kraus = kraus_set(&model, 1.0)?;
    println!("\nKraus operators at t = 1:");
    for op in kraus.operators() {
        println!("  {}", op.label);
    }
    println!("completeness residual {:e}", kraus.completeness_residual());
    let plus = DensityMatrix::pure(&[
        lindkraus::C64::new(0.6, 0.0),
        lindkraus::C64::new(0.0, 0.0),
        lindkraus::C64::new(0.0, 0.8),
    ])?;
    let via_kraus = kraus.apply(plus.matrix())?;
    let direct = evolve(&model, &plus, 1.0)?;
    println!(
        "Kraus vs direct {:e}",
        via_kraus.max_abs_diff(direct.matrix())
    );
    Ok(())
}

fn main() -> lindkraus::Result<()> {
    run_example()
}
