//! Command-line front end for the rotator laboratory: reproduces the
//! closed-u / open-ψ parametric curves, the boundary-condition verdict
//! table, the superposition admissibility rule, torque-driven trajectories,
//! and the free-rotator band diagram as deterministic CSV/JSON artifacts.
//!
//! Floats are emitted with 17 significant digits so repeated runs are
//! byte-identical and values round-trip exactly. Exit codes: 0 success,
//! 1 usage error, 2 I/O error; verdict outcomes are data, never errors.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rotator::{
    band_diagram, classify, lattice_check, make_grid, run_trajectory, shift_invariance_check,
    admissibility_oracle, GaugeTag, PhysicsParams, PlaneWaveEval, PlaneWaveState,
    QuasiEigenstate, RawSuperposition, SuperTerm, LATTICE_TOLERANCE,
};

#[derive(Parser)]
#[command(name = "rotator", version, about = "Numerical laboratory for the single-coordinate quantum rotator")]
struct Cli {
    /// Reduced Planck constant
    #[arg(long, global = true, default_value_t = 1.0)]
    hbar: f64,
    /// Moment of inertia
    #[arg(long, global = true, default_value_t = 1.0)]
    inertia: f64,
    /// Applied torque
    #[arg(long, global = true, default_value_t = 0.0)]
    torque: f64,
    /// Grid size (number of angular nodes)
    #[arg(long, global = true, default_value_t = 256)]
    grid: usize,
    /// Pass/fail tolerance for boundary residuals
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Output file (stdout when omitted)
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parametric curves of u (momentum gauge, closed) and ψ (torque
    /// gauge, open unless k/ħ is an integer) in the complex plane
    Figure1 {
        /// Harmonic index λ of u = e^{iλθ}
        #[arg(long)]
        lambda: f64,
        /// Gauge offset k/ħ
        #[arg(long, allow_hyphen_values = true)]
        k_over_hbar: f64,
        /// Number of θ samples over [−π, π], endpoints included
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
    /// Boundary-condition verdicts (standard, amplitude/action,
    /// density/current) for a plane wave in either gauge
    CheckBc {
        #[arg(long, value_enum)]
        gauge: GaugeArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        k_over_hbar: f64,
    },
    /// Admissibility of a superposition of momentum eigenfunctions:
    /// lattice rule vs. the brute-force wrap-residual oracle
    Superpose {
        /// Comma-separated k/ħ values
        #[arg(long, allow_hyphen_values = true)]
        k_list: String,
        /// Comma-separated real coefficients (default: all 1)
        #[arg(long, allow_hyphen_values = true)]
        coeff_list: Option<String>,
    },
    /// Torque-driven trajectory of a quasi-eigenstate (n, k0)
    Evolve {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        k0: f64,
        #[arg(long)]
        t_final: f64,
        #[arg(long)]
        dt: f64,
    },
    /// Free-rotator band diagram E_n(k0) with a shift-invariance check
    Bands {
        #[arg(long, allow_hyphen_values = true)]
        n_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        n_max: i64,
        #[arg(long)]
        k0_steps: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GaugeArg {
    Momentum,
    Torque,
}

impl From<GaugeArg> for GaugeTag {
    fn from(g: GaugeArg) -> Self {
        match g {
            GaugeArg::Momentum => GaugeTag::Momentum,
            GaugeArg::Torque => GaugeTag::Torque,
        }
    }
}

/// Fixed-width float serialization: 17 significant digits, round-trip
/// safe, byte-identical across runs.
fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

enum CliError {
    Usage(String),
}

impl From<rotator::RotatorError> for CliError {
    fn from(e: rotator::RotatorError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help / --version are successful outcomes.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let output = match run(&cli) {
        Ok(text) => text,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{output}"),
    }
    ExitCode::SUCCESS
}

fn run(cli: &Cli) -> Result<String, CliError> {
    if cli.hbar <= 0.0 || cli.inertia <= 0.0 {
        return Err(CliError::Usage("hbar and inertia must be positive".into()));
    }
    let params = PhysicsParams::new(cli.hbar, cli.inertia, cli.torque);
    match &cli.command {
        Command::Figure1 { lambda, k_over_hbar, samples } => {
            cmd_figure1(cli, &params, *lambda, *k_over_hbar, *samples)
        }
        Command::CheckBc { gauge, lambda, k_over_hbar } => {
            cmd_check_bc(cli, &params, (*gauge).into(), *lambda, *k_over_hbar)
        }
        Command::Superpose { k_list, coeff_list } => {
            cmd_superpose(cli, &params, k_list, coeff_list.as_deref())
        }
        Command::Evolve { n, k0, t_final, dt } => cmd_evolve(cli, &params, *n, *k0, *t_final, *dt),
        Command::Bands { n_min, n_max, k0_steps } => {
            cmd_bands(cli, &params, *n_min, *n_max, *k0_steps)
        }
    }
}

/// Inclusive linspace over [−π, π]: both seam images are sampled so the
/// closure of u and the endpoint phase gap of ψ are read off exactly.
fn theta_samples(samples: usize) -> Vec<f64> {
    (0..samples).map(|i| -PI + 2.0 * PI * i as f64 / (samples - 1) as f64).collect()
}

fn cmd_figure1(
    cli: &Cli,
    params: &PhysicsParams,
    lambda: f64,
    k_over_hbar: f64,
    samples: usize,
) -> Result<String, CliError> {
    if samples < 16 {
        return Err(CliError::Usage(format!("need at least 16 samples, got {samples}")));
    }
    let k = k_over_hbar * params.hbar;
    let one = Complex64::new(1.0, 0.0);
    let u = PlaneWaveState::new(one, lambda, k, GaugeTag::Momentum);
    let psi = PlaneWaveState::new(one, lambda, k, GaugeTag::Torque);
    let rows: Vec<(f64, Complex64, Complex64)> = theta_samples(samples)
        .into_iter()
        .map(|t| (t, u.value_at(t, params), psi.value_at(t, params)))
        .collect();
    match cli.format {
        Format::Csv => {
            let mut out = String::from("theta,re_u,im_u,re_psi,im_psi\n");
            for (t, u, p) in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    f17(t),
                    f17(u.re),
                    f17(u.im),
                    f17(p.re),
                    f17(p.im)
                );
            }
            Ok(out)
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(t, u, p)| {
                    serde_json::json!({
                        "theta": t,
                        "re_u": u.re,
                        "im_u": u.im,
                        "re_psi": p.re,
                        "im_psi": p.im,
                    })
                })
                .collect();
            Ok(format!("{}\n", serde_json::to_string_pretty(&items).unwrap()))
        }
    }
}

fn cmd_check_bc(
    cli: &Cli,
    params: &PhysicsParams,
    gauge: GaugeTag,
    lambda: f64,
    k_over_hbar: f64,
) -> Result<String, CliError> {
    let k = k_over_hbar * params.hbar;
    let pw = PlaneWaveState::new(Complex64::new(1.0, 0.0), lambda, k, gauge);
    let eval = PlaneWaveEval { state: &pw, params };
    let classification = classify(&eval, params, cli.tol)?;
    Ok(format!("{}\n", serde_json::to_string_pretty(&classification).unwrap()))
}

fn parse_reals(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("cannot parse '{}' as a real number", s.trim())))
        })
        .collect()
}

fn cmd_superpose(
    cli: &Cli,
    params: &PhysicsParams,
    k_list: &str,
    coeff_list: Option<&str>,
) -> Result<String, CliError> {
    let ks: Vec<f64> = parse_reals(k_list)?.iter().map(|v| v * params.hbar).collect();
    let coeffs: Vec<f64> = match coeff_list {
        Some(text) => {
            let c = parse_reals(text)?;
            if c.len() != ks.len() {
                return Err(CliError::Usage(format!(
                    "{} momenta but {} coefficients",
                    ks.len(),
                    c.len()
                )));
            }
            c
        }
        None => vec![1.0; ks.len()],
    };
    let terms: Vec<SuperTerm> = ks
        .iter()
        .zip(&coeffs)
        .map(|(&k, &c)| SuperTerm { k, coeff: Complex64::new(c, 0.0) })
        .collect();
    let s = RawSuperposition::new(terms)?;
    let lattice = lattice_check(&s, params, LATTICE_TOLERANCE * params.hbar);
    let oracle = admissibility_oracle(&s, params, cli.tol);
    let report = serde_json::json!({
        "lattice": lattice,
        "oracle": oracle,
        "agreement": lattice.is_admissible() == oracle.pass,
    });
    Ok(format!("{}\n", serde_json::to_string_pretty(&report).unwrap()))
}

fn cmd_evolve(
    cli: &Cli,
    params: &PhysicsParams,
    n: i64,
    k0: f64,
    t_final: f64,
    dt: f64,
) -> Result<String, CliError> {
    if dt <= 0.0 || t_final < 0.0 {
        return Err(CliError::Usage("require dt > 0 and t_final >= 0".into()));
    }
    let steps = (t_final / dt).round() as usize;
    if steps == 0 {
        return Err(CliError::Usage("t_final must cover at least one step".into()));
    }
    let grid = make_grid(cli.grid)?;
    let q0 = QuasiEigenstate::new(n, k0, Complex64::new(1.0, 0.0));
    let stride = (steps / 20).max(1);
    let trajectory = run_trajectory(&q0, params, &grid, dt, steps, stride)?;
    match cli.format {
        Format::Csv => {
            let mut out = String::from("t,k0,energy,phase,rho_wrap,current\n");
            for r in &trajectory.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    f17(r.t),
                    f17(r.k0),
                    f17(r.energy),
                    f17(r.phase),
                    f17(r.rho_wrap),
                    f17(r.current)
                );
            }
            let _ = writeln!(out, "# max_phase_error,{}", f17(trajectory.max_phase_error));
            Ok(out)
        }
        Format::Json => {
            let report = serde_json::json!({
                "rows": trajectory.rows,
                "max_phase_error": trajectory.max_phase_error,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&report).unwrap()))
        }
    }
}

fn cmd_bands(
    cli: &Cli,
    params: &PhysicsParams,
    n_min: i64,
    n_max: i64,
    k0_steps: usize,
) -> Result<String, CliError> {
    let diagram = band_diagram(n_min, n_max, k0_steps, params)?;
    let check = shift_invariance_check(&diagram, params, cli.tol);
    match cli.format {
        Format::Csv => {
            let mut out = String::from("n,k0,energy\n");
            for p in &diagram {
                let _ = writeln!(out, "{},{},{}", p.n, f17(p.k0), f17(p.energy));
            }
            let verdict = if check.pass { "pass" } else { "fail" };
            let _ = writeln!(out, "# shift_invariance,{verdict},{}", f17(check.max_deviation));
            Ok(out)
        }
        Format::Json => {
            let report = serde_json::json!({
                "points": diagram,
                "shift_check": check,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&report).unwrap()))
        }
    }
}
