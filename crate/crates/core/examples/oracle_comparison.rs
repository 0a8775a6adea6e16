// Random models checked against the dense `N² × N²` Liouvillian.

use lindkraus::random::{random_density_matrix, random_model, rng, RandomModelSpec};
use lindkraus::{evolve, liouvillian, oracle_evolve};

pub fn run_example() -> lindkraus::Result<()> {
    let mut rng = rng(2024);
    let mut worst: f64 = 0.0;
    for n in 2..=6 {
        let model = random_model(&mut rng, &RandomModelSpec::new(n, 3.min(n * (n - 1))))?;
        let rho0 = random_density_matrix(&mut rng, n)?;
        let l = liouvillian(&model)?;
        for t in [0.1, 1.0, 10.0] {
            let dev = evolve(&model, &rho0, t)?
                .matrix()
                .max_abs_diff(oracle_evolve(&model, &rho0, t)?.matrix());
            worst = worst.max(dev);
        }
        println!(
            "N = {n}: jumps {:?}, trace functional residual {:.1e}",
            model
                .jumps()
                .iter()
                .map(|&(to, from, _)| (to, from))
                .collect::<Vec<_>>(),
            l.trace_functional_residual()
        );
    }
    println!("largest deviation from the Liouvillian: {worst:.2e}");
    Ok(())
}

fn main() -> lindkraus::Result<()> {
    run_example()
}
