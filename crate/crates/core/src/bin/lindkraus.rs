use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("LINDKRAUS_LOG")).init();
    ExitCode::from(lindkraus::cli::run(std::env::args_os()))
}
