//! The `lindkraus` command-line front end.
//!
//! Exit codes: 0 success, 1 other failure, 2 malformed input, 3 model
//! validation failure, 4 map not completely positive (or a check failed).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{debug, info};
use serde::Serialize;

use crate::channel::{
    choi_matrix, kraus_from_choi, superoperators_built_on_this_thread, KrausSet, LinearMap,
};
use crate::closed_forms::{DephasingMap, TwoLevelParams};
use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64};
use crate::microscopic::{
    detailed_balance_residual, spin_boson_model, two_qubit_triplet_model, EnergyShifts,
    SpectralFunction,
};
use crate::model::LindbladModel;
use crate::oracle;
use crate::random::{self, RandomModelSpec};
use crate::schema;
use crate::solver::{self, SolverOptions};

#[derive(Debug, Parser)]
#[command(
    name = "lindkraus",
    version,
    about = "Closed-form Lindblad evolution in Kraus form"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evolve an initial state over a time grid.
    Evolve(EvolveArgs),
    /// Print the Kraus operators of the evolution map at one time.
    Kraus(KrausArgs),
    /// Compare against the dense Liouvillian and run validity checks.
    Check(CheckArgs),
    /// Time the closed-form path against the dense Liouvillian on random models.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    ThreeLevel,
    TwoLevel,
    SpinBoson,
    TwoQubit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rho0Kind {
    Excited,
    Ground,
    Plus,
    File,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectralForm {
    Flat,
    Ohmic,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// Model JSON file.
    #[arg(long, conflicts_with = "preset")]
    pub model: Option<PathBuf>,
    /// Builtin model.
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Decay rate (three-level, two-qubit) or flat transition strength (spin-boson).
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Level splitting.
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    /// Exchange coupling of the two-qubit and three-level presets.
    #[arg(long, default_value_t = 0.3)]
    pub coupling: f64,
    #[arg(long, default_value_t = 1.0)]
    pub gamma_plus: f64,
    #[arg(long, default_value_t = 0.0)]
    pub gamma_minus: f64,
    /// Dephasing rate (two-level) or slope of the ohmic dephasing density (spin-boson).
    #[arg(long, default_value_t = 0.0)]
    pub gamma0: f64,
    /// Inverse temperature for the spin-boson preset.
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, value_enum, default_value_t = SpectralForm::Flat)]
    pub spectral: SpectralForm,
    #[arg(long, default_value_t = 10.0)]
    pub omega_c: f64,
    /// Print the resolved model as JSON and exit.
    #[arg(long)]
    pub dump_model: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Override a tolerance, e.g. `agreement=1e-6`. Repeatable.
    #[arg(long = "tol-override", value_name = "KEY=VALUE")]
    pub tol_override: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value_t = Rho0Kind::Excited)]
    pub rho0: Rho0Kind,
    /// Density matrix file for `--rho0 file`.
    #[arg(long)]
    pub rho0_file: Option<PathBuf>,
    /// `start:stop:step` or a comma-separated list.
    #[arg(long, default_value = "0:10:1")]
    pub times: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub out: OutputFormat,
}

#[derive(Debug, Clone, Args)]
pub struct KrausArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, short = 't', default_value_t = 1.0)]
    pub time: f64,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value = "0.1,1,10")]
    pub times: String,
    /// Random initial states per time, in addition to the basis states.
    #[arg(long, default_value_t = 4)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Comma-separated dimensions.
    #[arg(long, default_value = "4,8,16,32")]
    pub sizes: String,
    #[arg(long, default_value_t = 2)]
    pub channels: usize,
    #[arg(long, short = 't', default_value_t = 1.0)]
    pub time: f64,
}

/// Thresholds used by the commands.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub agreement: f64,
    pub trace: f64,
    pub positivity: f64,
    pub completeness: f64,
    pub negative_coefficient: f64,
    pub detailed_balance: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            agreement: 1e-8,
            trace: 1e-12,
            positivity: 1e-10,
            completeness: 1e-10,
            negative_coefficient: solver::NEGATIVE_COEFFICIENT_TOLERANCE,
            detailed_balance: 1e-12,
        }
    }
}

impl Tolerances {
    pub fn with_overrides(overrides: &[String]) -> Result<Self> {
        let mut tol = Self::default();
        for item in overrides {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Schema(format!("expected KEY=VALUE, got {item:?}")))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Schema(format!("bad tolerance value {value:?}")))?;
            let slot = match key.trim().replace('-', "_").as_str() {
                "agreement" => &mut tol.agreement,
                "trace" => &mut tol.trace,
                "positivity" => &mut tol.positivity,
                "completeness" => &mut tol.completeness,
                "negative_coefficient" => &mut tol.negative_coefficient,
                "detailed_balance" => &mut tol.detailed_balance,
                other => return Err(Error::Schema(format!("unknown tolerance {other:?}"))),
            };
            *slot = value;
        }
        Ok(tol)
    }

    fn solver_options(&self) -> SolverOptions {
        SolverOptions {
            negative_coefficient_tolerance: self.negative_coefficient,
        }
    }
}

/// Maps a library error to the process exit code.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Schema(_) | Error::NotSquare { .. } | Error::NonFinite { .. } => 2,
        Error::InvalidModel(_)
        | Error::NonPositiveFrequency(_)
        | Error::NotInChannelSet { .. }
        | Error::DephasingUnsupported => 3,
        Error::NotCompletelyPositive { .. } | Error::NotPositive { .. } => 4,
        _ => 1,
    }
}

/// Parses `start:stop:step` (endpoints included within 1e-12) or `a,b,c`.
pub fn parse_times(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::Schema(format!("bad time grid {spec:?}"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
    let times = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(bad());
        };
        let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
        if step.is_nan() || step <= 0.0 || stop < start {
            return Err(bad());
        }
        let mut out = Vec::new();
        let mut k = 0u32;
        loop {
            let t = start + f64::from(k) * step;
            if t > stop + 1e-12 {
                break;
            }
            out.push(t.min(stop));
            k += 1;
        }
        out
    } else {
        spec.split(',').map(num).collect::<Result<Vec<_>>>()?
    };
    if times.is_empty() || times.iter().any(|t| !(*t >= 0.0 && t.is_finite())) {
        return Err(bad());
    }
    Ok(times)
}

/// A model plus the inverse temperature it was built at, when known.
#[derive(Debug, Clone)]
pub struct LoadedModel {
    pub model: LindbladModel,
    pub beta: Option<f64>,
}

pub fn load_model(args: &ModelArgs) -> Result<LoadedModel> {
    if let Some(path) = &args.model {
        let text = std::fs::read_to_string(path)?;
        let file: schema::ModelFile = serde_json::from_str(&text)?;
        let beta = file
            .spectral
            .as_ref()
            .map(|s| s.beta.unwrap_or(f64::INFINITY));
        return Ok(LoadedModel {
            model: file.to_model()?,
            beta,
        });
    }
    let preset = args
        .preset
        .ok_or_else(|| Error::Schema("either --model or --preset is required".into()))?;
    let spectral = |g: f64| match args.spectral {
        SpectralForm::Flat => SpectralFunction::flat(g),
        SpectralForm::Ohmic => SpectralFunction::ohmic(g, args.omega_c),
    };
    let (model, beta) = match preset {
        Preset::ThreeLevel => (
            LindbladModel::from_jumps(
                vec![-args.omega, args.coupling, args.omega],
                &[(0, 1, args.gamma), (1, 2, args.gamma)],
            )?,
            Some(f64::INFINITY),
        ),
        Preset::TwoLevel => (
            TwoLevelParams::new(args.omega, args.gamma_plus, args.gamma_minus)
                .with_dephasing(args.gamma0)
                .model()?,
            None,
        ),
        Preset::SpinBoson => (
            spin_boson_model(
                args.omega,
                &SpectralFunction::ohmic(args.gamma0, args.omega_c),
                &spectral(args.gamma),
                args.beta,
            )?,
            Some(args.beta),
        ),
        Preset::TwoQubit => (
            two_qubit_triplet_model(
                args.omega,
                args.coupling,
                &spectral(args.gamma / 2.0),
                EnergyShifts::default(),
            )?,
            Some(f64::INFINITY),
        ),
    };
    Ok(LoadedModel { model, beta })
}

/// The evolution map at time `t`: the general solver, or the dephasing closed
/// form when the model has `γ₀ > 0`.
pub enum Propagator {
    General(solver::EvolutionMap),
    Dephasing(DephasingMap),
}

impl Propagator {
    pub fn new(model: &LindbladModel, t: f64, options: &SolverOptions) -> Result<Self> {
        if model.dephasing_rate() > 0.0 {
            let params = TwoLevelParams::from_model(model)?;
            Ok(Propagator::Dephasing(DephasingMap::new(params, t)?))
        } else {
            Ok(Propagator::General(solver::solve_with(model, t, options)?))
        }
    }

    pub fn method(&self) -> &'static str {
        match self {
            Propagator::General(_) => "closed-form",
            Propagator::Dephasing(_) => "choi",
        }
    }

    pub fn kraus_set(&self) -> Result<KrausSet> {
        match self {
            Propagator::General(map) => map.kraus_set(),
            Propagator::Dephasing(map) => kraus_from_choi(&choi_matrix(map)?),
        }
    }
}

impl LinearMap for Propagator {
    fn dim(&self) -> usize {
        match self {
            Propagator::General(m) => m.dim(),
            Propagator::Dephasing(m) => m.dim(),
        }
    }

    fn apply(&self, input: &ComplexMatrix) -> Result<ComplexMatrix> {
        match self {
            Propagator::General(m) => m.apply(input),
            Propagator::Dephasing(m) => m.apply(input),
        }
    }
}

fn initial_state(args: &EvolveArgs, model: &LindbladModel) -> Result<DensityMatrix> {
    let n = model.dim();
    let e = model.energies();
    let by_energy = |pick: fn(f64, f64) -> bool| {
        (0..n).fold(0, |best, k| if pick(e[k], e[best]) { k } else { best })
    };
    let ground = by_energy(|a, b| a < b);
    let excited = by_energy(|a, b| a > b);
    match args.rho0 {
        Rho0Kind::Ground => DensityMatrix::basis_state(n, ground),
        Rho0Kind::Excited => DensityMatrix::basis_state(n, excited),
        Rho0Kind::Plus => {
            let mut psi = vec![C64::new(0.0, 0.0); n];
            let amp = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            psi[ground] += amp;
            psi[excited] += amp;
            DensityMatrix::pure(&psi)
        }
        Rho0Kind::Random => random::random_density_matrix(&mut random::rng(args.common.seed), n),
        Rho0Kind::File => {
            let path = args
                .rho0_file
                .as_ref()
                .ok_or_else(|| Error::Schema("--rho0 file needs --rho0-file".into()))?;
            let mat = schema::read_matrix(path)?;
            if mat.square_dim()? != n {
                return Err(Error::Schema(format!("initial state must be {n}x{n}")));
            }
            DensityMatrix::new(mat).map_err(|e| Error::Schema(format!("initial state: {e}")))
        }
    }
}

#[derive(Debug, Serialize)]
struct TrajectoryPoint {
    t: f64,
    trace_deviation: f64,
    min_eigenvalue: f64,
    purity: f64,
    rho: ComplexMatrix,
}

/// Runs `evolve` and returns the text written to stdout.
pub fn cmd_evolve(args: &EvolveArgs) -> Result<String> {
    let tol = Tolerances::with_overrides(&args.common.tol_override)?;
    let times = parse_times(&args.times)?;
    let loaded = load_model(&args.model)?;
    if args.model.dump_model {
        return Ok(schema::model_to_json(&loaded.model) + "\n");
    }
    let model = &loaded.model;
    model.ensure_valid()?;
    let rho0 = initial_state(args, model)?;
    let mut points = Vec::with_capacity(times.len());
    for &t in &times {
        let map = Propagator::new(model, t, &tol.solver_options())?;
        let rho = DensityMatrix::new(map.apply(rho0.matrix())?)?;
        debug!("t = {t}: min eigenvalue {:e}", rho.min_eigenvalue());
        points.push(TrajectoryPoint {
            t,
            trace_deviation: rho.trace() - 1.0,
            min_eigenvalue: rho.min_eigenvalue(),
            purity: rho.purity(),
            rho: rho.into_matrix(),
        });
    }
    info!("evolved {} time points", points.len());
    match args.out {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&points)? + "\n"),
        OutputFormat::Csv => {
            let n = model.dim();
            let mut out = String::from("t,trace_dev,min_eig,purity");
            for i in 0..n {
                for j in 0..n {
                    write!(out, ",re_{i}{j},im_{i}{j}").unwrap();
                }
            }
            out.push('\n');
            for p in &points {
                write!(
                    out,
                    "{},{:e},{:e},{}",
                    p.t, p.trace_deviation, p.min_eigenvalue, p.purity
                )
                .unwrap();
                for z in p.rho.as_array().iter() {
                    write!(out, ",{},{}", z.re, z.im).unwrap();
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Serialize)]
struct KrausReport<'a> {
    time: f64,
    method: &'static str,
    completeness_residual: f64,
    operators: &'a [crate::channel::KrausOperator],
}

pub fn cmd_kraus(args: &KrausArgs) -> Result<String> {
    let tol = Tolerances::with_overrides(&args.common.tol_override)?;
    let loaded = load_model(&args.model)?;
    if args.model.dump_model {
        return Ok(schema::model_to_json(&loaded.model) + "\n");
    }
    loaded.model.ensure_valid()?;
    let map = Propagator::new(&loaded.model, args.time, &tol.solver_options())?;
    let kraus = map.kraus_set()?;
    let residual = kraus.completeness_residual();
    if residual > tol.completeness {
        return Err(Error::NotCompletelyPositive {
            detail: format!("completeness residual {residual:e}"),
        });
    }
    let report = KrausReport {
        time: args.time,
        method: map.method(),
        completeness_residual: residual,
        operators: kraus.operators(),
    };
    Ok(serde_json::to_string_pretty(&report)? + "\n")
}

/// Outcome of `check`: the report text and whether every check passed.
pub struct CheckOutcome {
    pub report: String,
    pub passed: bool,
}

pub fn cmd_check(args: &CheckArgs) -> Result<CheckOutcome> {
    let tol = Tolerances::with_overrides(&args.common.tol_override)?;
    let times = parse_times(&args.times)?;
    let loaded = load_model(&args.model)?;
    if args.model.dump_model {
        return Ok(CheckOutcome {
            report: schema::model_to_json(&loaded.model) + "\n",
            passed: true,
        });
    }
    let model = &loaded.model;
    model.ensure_valid()?;
    let n = model.dim();
    let mut rng = random::rng(args.common.seed);
    let mut states: Vec<DensityMatrix> = (0..n)
        .map(|k| DensityMatrix::basis_state(n, k))
        .collect::<Result<_>>()?;
    for _ in 0..args.samples {
        states.push(random::random_density_matrix(&mut rng, n)?);
    }

    let mut report = String::new();
    let mut passed = true;
    let mut line = |name: &str, value: f64, limit: f64, ok: bool| {
        passed &= ok;
        let verdict = if ok { "ok" } else { "FAIL" };
        writeln!(
            report,
            "{name:<28} {value:>12.3e}  (limit {limit:.1e})  {verdict}"
        )
        .unwrap();
    };
    for &t in &times {
        let map = Propagator::new(model, t, &tol.solver_options())?;
        let exact = oracle::OracleMap::new(model, t)?;
        let (mut dev, mut trace_dev, mut min_eig) = (0.0f64, 0.0f64, f64::INFINITY);
        for rho0 in &states {
            let out = map.apply(rho0.matrix())?;
            dev = dev.max(out.max_abs_diff(&exact.apply(rho0.matrix())?));
            trace_dev = trace_dev.max((out.trace().re - 1.0).abs());
            min_eig = min_eig.min(crate::linalg::min_eigenvalue(out.as_array())?);
        }
        let residual = map.kraus_set()?.completeness_residual();
        line(
            &format!("t={t} oracle deviation"),
            dev,
            tol.agreement,
            dev <= tol.agreement,
        );
        line(
            &format!("t={t} trace deviation"),
            trace_dev,
            tol.trace,
            trace_dev <= tol.trace,
        );
        line(
            &format!("t={t} min eigenvalue"),
            min_eig,
            -tol.positivity,
            min_eig >= -tol.positivity,
        );
        line(
            &format!("t={t} kraus completeness"),
            residual,
            tol.completeness,
            residual <= tol.completeness,
        );
    }
    match loaded.beta {
        Some(beta) => {
            let r = detailed_balance_residual(model, beta);
            line(
                "detailed balance",
                r,
                tol.detailed_balance,
                r <= tol.detailed_balance,
            );
        }
        None => writeln!(
            report,
            "detailed balance             skipped (no temperature)"
        )
        .unwrap(),
    }
    writeln!(
        report,
        "{}",
        if passed {
            "all checks passed"
        } else {
            "some checks failed"
        }
    )
    .unwrap();
    Ok(CheckOutcome { report, passed })
}

/// One line of the benchmark table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchRow {
    pub dim: usize,
    pub t_closed: f64,
    pub t_oracle: f64,
    pub max_deviation: f64,
    pub gamma_dim: usize,
    /// Superoperators constructed while running the closed-form path.
    pub superops_in_closed_path: usize,
}

impl BenchRow {
    pub fn speedup(&self) -> f64 {
        self.t_oracle / self.t_closed
    }
}

/// Times both paths on one random model with `channels` jumps.
pub fn bench_one(dim: usize, channels: usize, t: f64, seed: u64) -> Result<BenchRow> {
    let mut rng = random::rng(seed);
    let model = random::random_model(&mut rng, &RandomModelSpec::new(dim, channels))?;
    let rho0 = random::random_density_matrix(&mut rng, dim)?;

    let before = superoperators_built_on_this_thread();
    let start = Instant::now();
    let closed = solver::evolve(&model, &rho0, t)?;
    let t_closed = start.elapsed().as_secs_f64();
    let superops = superoperators_built_on_this_thread() - before;

    let options = oracle::OracleOptions {
        max_dim: dim.max(oracle::DEFAULT_MAX_DIM),
    };
    let start = Instant::now();
    let exact = oracle::oracle_evolve_with(&model, &rho0, t, &options)?;
    let t_oracle = start.elapsed().as_secs_f64();

    Ok(BenchRow {
        dim,
        t_closed,
        t_oracle,
        max_deviation: closed.matrix().max_abs_diff(exact.matrix()),
        gamma_dim: solver::gamma_dimension(&model),
        superops_in_closed_path: superops,
    })
}

pub fn cmd_bench(args: &BenchArgs) -> Result<String> {
    let sizes: Vec<usize> = args
        .sizes
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Schema(format!("bad size {s:?}")))
        })
        .collect::<Result<_>>()?;
    let mut out =
        String::from("N,t_closed,t_oracle,speedup,max_dev,gamma_dim,superops_in_closed_path\n");
    for (k, &n) in sizes.iter().enumerate() {
        let row = bench_one(
            n,
            args.channels,
            args.time,
            args.common.seed.wrapping_add(k as u64),
        )?;
        info!("N = {n}: speedup {:.1}", row.speedup());
        writeln!(
            out,
            "{},{:.6e},{:.6e},{:.1},{:.3e},{},{}",
            row.dim,
            row.t_closed,
            row.t_oracle,
            row.speedup(),
            row.max_deviation,
            row.gamma_dim,
            row.superops_in_closed_path
        )
        .unwrap();
    }
    Ok(out)
}

/// Parses `args`, runs the command, writes output and returns the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Evolve(a) => cmd_evolve(a).map(|s| (s, true)),
        Command::Kraus(a) => cmd_kraus(a).map(|s| (s, true)),
        Command::Check(a) => cmd_check(a).map(|o| (o.report, o.passed)),
        Command::Bench(a) => cmd_bench(a).map(|s| (s, true)),
    };
    match result {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                0
            } else {
                4
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn time_grids() {
        assert_eq!(parse_times("0:5:0.5").unwrap().len(), 11);
        assert_eq!(parse_times("0").unwrap(), vec![0.0]);
        assert_eq!(parse_times("0.1, 1,10").unwrap(), vec![0.1, 1.0, 10.0]);
        let grid = parse_times("0:0.3:0.1").unwrap();
        assert_eq!(grid.len(), 4);
        assert_eq!(*grid.last().unwrap(), 0.3);
        for bad in ["", "1:0:0.1", "0:1:0", "a,b", "-1", "0:1"] {
            assert!(parse_times(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn tolerance_overrides() {
        let tol =
            Tolerances::with_overrides(&["agreement=1e-6".into(), "negative-coefficient=0".into()])
                .unwrap();
        assert_eq!(tol.agreement, 1e-6);
        assert_eq!(tol.negative_coefficient, 0.0);
        assert!(Tolerances::with_overrides(&["nope=1".into()]).is_err());
        assert!(Tolerances::with_overrides(&["agreement".into()]).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Schema("x".into())), 2);
        assert_eq!(exit_code(&Error::InvalidModel(vec![])), 3);
        assert_eq!(
            exit_code(&Error::NotCompletelyPositive {
                detail: String::new()
            }),
            4
        );
        assert_eq!(exit_code(&Error::Lapack(String::new())), 1);
    }
}
