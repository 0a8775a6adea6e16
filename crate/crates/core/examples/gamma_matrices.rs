// The small matrices `Γ_m` behind the jump coefficients, their exponentials
// and the coefficients they produce.

use lindkraus::linalg::{expm, expm_integral};
use lindkraus::{gamma_matrix, jump_coefficients, ComplexMatrix, LindbladModel};

pub fn run_example() -> lindkraus::Result<()> {
    let gamma = 1.0;
    let model = LindbladModel::from_jumps(vec![-1.0, 0.3, 1.0], &[(0, 1, gamma), (1, 2, gamma)])?;
    for m in model.channel_set() {
        let g = gamma_matrix(&model, *m)?;
        println!("Gamma_{m} over states {:?}:\n{}", g.states(), g.matrix());
    }

    let g0 = ComplexMatrix::from_real(gamma_matrix(&model, 0)?.matrix())?;
    let t = 1.0;
    println!("exp(Gamma_0 t):\n{}", expm(&g0, t)?);
    println!(
        "integral of exp(Gamma_0 s) over [0, t]:\n{}",
        expm_integral(&g0, t)?
    );

    let coeffs = jump_coefficients(&model, t)?;
    for ((to, from), c) in coeffs.iter().filter(|(_, c)| *c != 0.0) {
        println!("c[{to}<-{from}] = {c:.12}");
    }
    Ok(())
}

fn main() -> lindkraus::Result<()> {
    run_example()
}
