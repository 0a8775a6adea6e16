// Cost of the closed form against the dense Liouvillian as the system grows
// with few channels, and how `Γ_m` grows when every level is coupled.

use lindkraus::cli::bench_one;
use lindkraus::solver::gamma_dimension;
use lindkraus::LindbladModel;

pub fn run_example() -> lindkraus::Result<()> {
    println!(
        "{:>4} {:>12} {:>12} {:>10}",
        "N", "closed (s)", "dense (s)", "speedup"
    );
    for n in [4, 8, 16] {
        let row = bench_one(n, 2, 1.0, n as u64)?;
        println!(
            "{n:>4} {:>12.3e} {:>12.3e} {:>10.1}",
            row.t_closed,
            row.t_oracle,
            row.speedup()
        );
    }

    // A ladder |N-1> → … → |0> couples all N levels. Energies k² keep the
    // transition frequencies distinct.
    for n in [4, 8, 16, 32] {
        let energies = (0..n).map(|k| (k * k) as f64).collect();
        let jumps: Vec<_> = (0..n - 1).map(|k| (k, k + 1, 1.0)).collect();
        let model = LindbladModel::from_jumps(energies, &jumps)?;
        println!(
            "N = {n:>2}, {} channels: Gamma_m dimension {}",
            n - 1,
            gamma_dimension(&model)
        );
    }
    Ok(())
}

fn main() -> lindkraus::Result<()> {
    run_example()
}
