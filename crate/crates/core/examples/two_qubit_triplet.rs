// Two exchange-coupled qubits: rates from an ohmic reservoir at zero
// temperature, then the triplet cascade with the singlet left alone.

use lindkraus::microscopic::{two_qubit_triplet_model, EnergyShifts, SpectralFunction};
use lindkraus::{evolve, DensityMatrix};

pub fn run_example() -> lindkraus::Result<()> {
    let (omega, g) = (2.0, 0.5);
    for spectral in [
        SpectralFunction::flat(0.25),
        SpectralFunction::ohmic(0.1, 5.0),
    ] {
        let model = two_qubit_triplet_model(omega, g, &spectral, EnergyShifts::default())?;
        println!(
            "{spectral:?}: gamma01 = {:.6}, gamma12 = {:.6}",
            model.rate(0, 1),
            model.rate(1, 2)
        );
        let rho = evolve(&model, &DensityMatrix::basis_state(3, 2)?, 2.0)?;
        println!("  populations at t = 2: {:?}", rho.populations());
    }

    let shifted = two_qubit_triplet_model(
        omega,
        g,
        &SpectralFunction::flat(0.25),
        EnergyShifts {
            delta_1: 0.01,
            delta_2: -0.02,
        },
    )?;
    println!("shifted energies {:?}", shifted.energies());

    match two_qubit_triplet_model(
        omega,
        0.0,
        &SpectralFunction::flat(0.25),
        EnergyShifts::default(),
    ) {
        Ok(_) => println!("g = 0 unexpectedly accepted"),
        Err(err) => println!("g = 0 rejected: {err}"),
    }
    Ok(())
}

fn main() -> lindkraus::Result<()> {
    run_example()
}
