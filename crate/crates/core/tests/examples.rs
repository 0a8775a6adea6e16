#[allow(dead_code)]
mod three_level_decay {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/three_level_decay.rs"
    ));
}

#[allow(dead_code)]
mod thermal_qubit {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/thermal_qubit.rs"
    ));
}

#[allow(dead_code)]
mod dephasing_qubit {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/dephasing_qubit.rs"
    ));
}

#[allow(dead_code)]
mod two_qubit_triplet {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/two_qubit_triplet.rs"
    ));
}

#[allow(dead_code)]
mod gamma_matrices {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/gamma_matrices.rs"
    ));
}

#[allow(dead_code)]
mod oracle_comparison {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/oracle_comparison.rs"
    ));
}

#[allow(dead_code)]
mod few_channels_scaling {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/few_channels_scaling.rs"
    ));
}

#[test]
fn three_level_decay_runs() {
    three_level_decay::run_example().expect("example should run");
}

#[test]
fn thermal_qubit_runs() {
    thermal_qubit::run_example().expect("example should run");
}

#[test]
fn dephasing_qubit_runs() {
    dephasing_qubit::run_example().expect("example should run");
}

#[test]
fn two_qubit_triplet_runs() {
    two_qubit_triplet::run_example().expect("example should run");
}

#[test]
fn gamma_matrices_runs() {
    gamma_matrices::run_example().expect("example should run");
}

#[test]
fn oracle_comparison_runs() {
    oracle_comparison::run_example().expect("example should run");
}

#[test]
fn few_channels_scaling_runs() {
    few_channels_scaling::run_example().expect("example should run");
}
