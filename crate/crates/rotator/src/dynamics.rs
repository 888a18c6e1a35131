//! Torque-driven evolution.
//!
//! Under constant torque the eigenfunctions become quasi-eigenfunctions:
//! the density never changes, but the momentum eigenvalue nħ + k₀(t)
//! drifts at k̇₀ = T. Evolution is carried out in the momentum gauge,
//! where the Hamiltonian (−iħ∂_θ + k)²/2m_i is Fourier-diagonal and the
//! seam-discontinuous potential is absent; torque-gauge views are produced
//! by gauge transform.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, RotatorError};
use crate::gauge;
use crate::grid::AngleGrid;
use crate::params::{GaugeTag, PhysicsParams};
use crate::spectral;
use crate::state::{sample_plane_wave, GridState, PlaneWaveState};

/// Eq-6-style state A·e^{i(n + k₀(t)/ħ)θ}: constant density, band index n,
/// time-dependent offset k₀. Stationary but not strictly an eigenstate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuasiEigenstate {
    pub n: i64,
    pub k0: f64,
    pub amplitude: Complex64,
    /// Unwrapped dynamical phase −(1/ħ)∫E dt; kept unreduced so
    /// convergence studies see the raw value.
    pub accumulated_phase: f64,
    pub time: f64,
}

impl QuasiEigenstate {
    pub fn new(n: i64, k0: f64, amplitude: Complex64) -> Self {
        Self { n, k0, amplitude, accumulated_phase: 0.0, time: 0.0 }
    }

    /// Instantaneous physical momentum nħ + k₀.
    pub fn momentum(&self, params: &PhysicsParams) -> f64 {
        self.n as f64 * params.hbar + self.k0
    }

    pub fn energy(&self, params: &PhysicsParams) -> f64 {
        band_energy(self.n, self.k0, params)
    }

    /// Momentum-gauge grid snapshot u = a·e^{iΦ}·e^{inθ} with k = k₀.
    pub fn sample(&self, grid: &AngleGrid, params: &PhysicsParams) -> GridState {
        let pw = PlaneWaveState {
            amplitude: self.amplitude * Complex64::new(0.0, self.accumulated_phase).exp(),
            lambda: self.n as f64,
            k: self.k0,
            gauge: GaugeTag::Momentum,
            time: self.time,
        };
        sample_plane_wave(&pw, grid, params)
    }
}

/// E = (nħ + k₀)²/(2m_i), the free-rotator band energy.
pub fn band_energy(n: i64, k0: f64, params: &PhysicsParams) -> f64 {
    let p = n as f64 * params.hbar + k0;
    p * p / (2.0 * params.inertia)
}

/// dE/dt = T·(nħ + k₀)/m_i: the rate at which the torque source exchanges
/// energy with the rotator. Zero at the band minimum k₀ = −nħ.
pub fn energy_flow_rate(q: &QuasiEigenstate, params: &PhysicsParams) -> f64 {
    params.torque * q.momentum(params) / params.inertia
}

/// Closed-form evolution under constant torque: k₀(t) = k₀(0) + T·t and
/// the dynamical phase is the exact integral of −E(n, k₀(t'))/ħ, a cubic
/// in t.
pub fn evolve_analytic(q: &QuasiEigenstate, params: &PhysicsParams, t_final: f64) -> QuasiEigenstate {
    let dt = t_final - q.time;
    let p0 = q.momentum(params);
    let t_torque = params.torque;
    // ∫₀^dt (p0 + T·t')² dt' = p0²·dt + p0·T·dt² + T²·dt³/3.
    let integral =
        p0 * p0 * dt + p0 * t_torque * dt * dt + t_torque * t_torque * dt * dt * dt / 3.0;
    let phase_increment = -integral / (2.0 * params.inertia * params.hbar);
    QuasiEigenstate {
        k0: q.k0 + t_torque * dt,
        accumulated_phase: q.accumulated_phase + phase_increment,
        time: t_final,
        ..*q
    }
}

/// One midpoint-k step of the exact Fourier-diagonal propagator: apply
/// e^{−iH(k_mid)dt/ħ} with k_mid = k + T·dt/2, then advance k by T·dt.
/// For band-limited states the only error is the midpoint quadrature of
/// the k(t) sweep, globally O(dt²).
pub fn step(state: &mut GridState, params: &PhysicsParams, dt: f64) -> Result<()> {
    if state.gauge != GaugeTag::Momentum {
        return Err(RotatorError::WrongGauge { expected: GaugeTag::Momentum, got: state.gauge });
    }
    let n = state.grid.len();
    let k_mid = state.k + params.torque * dt / 2.0;
    let mut coeffs = spectral::fourier_coefficients(&state.samples);
    for (j, c) in coeffs.iter_mut().enumerate() {
        let lam = spectral::bin_frequency(j, n) as f64;
        let p = params.hbar * lam + k_mid;
        let energy = p * p / (2.0 * params.inertia);
        *c *= Complex64::new(0.0, -energy * dt / params.hbar).exp();
    }
    state.samples = spectral::samples_from_coefficients(&coeffs);
    state.k = gauge::advance_k(state.k, params, dt);
    state.time += dt;
    Ok(())
}

/// Stepped propagation over `steps` equal intervals.
pub fn evolve_stepped(
    state: &GridState,
    params: &PhysicsParams,
    dt: f64,
    steps: usize,
) -> Result<GridState> {
    if dt <= 0.0 {
        return Err(RotatorError::InvalidArgument(format!("dt must be positive, got {dt}")));
    }
    let mut s = state.clone();
    for _ in 0..steps {
        step(&mut s, params, dt)?;
    }
    Ok(s)
}

/// Energy expectation ⟨(−iħ∂+k)²/2m_i⟩ of a momentum-gauge grid state,
/// evaluated mode by mode in Fourier space.
pub fn energy_expectation(state: &GridState, params: &PhysicsParams) -> Result<f64> {
    if state.gauge != GaugeTag::Momentum {
        return Err(RotatorError::WrongGauge { expected: GaugeTag::Momentum, got: state.gauge });
    }
    let n = state.grid.len();
    let coeffs = spectral::fourier_coefficients(&state.samples);
    let mut num = 0.0;
    let mut den = 0.0;
    for (j, c) in coeffs.iter().enumerate() {
        let lam = spectral::bin_frequency(j, n) as f64;
        let p = params.hbar * lam + state.k;
        let w = c.norm_sqr();
        num += w * p * p / (2.0 * params.inertia);
        den += w;
    }
    Ok(num / den)
}

/// Verdict of the quasi-eigenstate stationarity property: the density must
/// stay pointwise frozen while the momentum expectation moves by T·Δt.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StationarityReport {
    /// Max pointwise |ρ_after − ρ_before|.
    pub rho_drift: f64,
    /// Measured ⟨p⟩_after − ⟨p⟩_before.
    pub momentum_shift: f64,
    /// T·(t_after − t_before).
    pub expected_shift: f64,
    pub pass: bool,
}

pub fn stationarity_check(
    before: &GridState,
    after: &GridState,
    params: &PhysicsParams,
    rho_tolerance: f64,
    momentum_tolerance: f64,
) -> StationarityReport {
    let rho_drift = before
        .samples
        .iter()
        .zip(&after.samples)
        .map(|(a, b)| (a.norm_sqr() - b.norm_sqr()).abs())
        .fold(0.0f64, f64::max);
    let momentum_shift =
        gauge::momentum_expectation(after, params) - gauge::momentum_expectation(before, params);
    let expected_shift = params.torque * (after.time - before.time);
    let pass = rho_drift <= rho_tolerance
        && (momentum_shift - expected_shift).abs() <= momentum_tolerance;
    StationarityReport { rho_drift, momentum_shift, expected_shift, pass }
}

/// One sampled point of a torque-driven trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectoryRow {
    pub t: f64,
    pub k0: f64,
    pub energy: f64,
    pub phase: f64,
    pub rho_wrap: f64,
    pub current: f64,
}

/// Result of driving a quasi-eigenstate with the stepped propagator while
/// recording observables and comparing against the closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub rows: Vec<TrajectoryRow>,
    /// Max |stepped − analytic| accumulated phase over the recorded rows.
    pub max_phase_error: f64,
    pub final_state: GridState,
}

/// Propagate the quasi-eigenstate (n, k₀) with the stepped momentum-gauge
/// propagator, recording every `stride` steps (and always the final step).
/// The phase is measured from the band-n Fourier coefficient and
/// accumulated per step, so per-step increments must stay below π.
pub fn run_trajectory(
    q0: &QuasiEigenstate,
    params: &PhysicsParams,
    grid: &AngleGrid,
    dt: f64,
    steps: usize,
    stride: usize,
) -> Result<Trajectory> {
    if dt <= 0.0 || stride == 0 {
        return Err(RotatorError::InvalidArgument(
            "dt must be positive and stride nonzero".into(),
        ));
    }
    let mut state = q0.sample(grid, params);
    let coeff_at = |s: &GridState| -> Complex64 {
        let coeffs = spectral::fourier_coefficients(&s.samples);
        let idx = q0.n.rem_euclid(grid.len() as i64) as usize;
        coeffs[idx]
    };
    let mut prev_coeff = coeff_at(&state);
    let mut phase = q0.accumulated_phase;
    let mut max_phase_error = 0.0f64;
    let mut rows = Vec::new();

    let mut record = |state: &GridState, phase: f64, max_err: &mut f64| -> Result<()> {
        let analytic = evolve_analytic(q0, params, state.time);
        let err = (phase - analytic.accumulated_phase).abs();
        if err > *max_err {
            *max_err = err;
        }
        let torque_view = gauge::to_torque_gauge_grid(state, params)?;
        let eval = crate::boundary::GridWaveEval::new(&torque_view, params);
        let report = crate::boundary::check_density_current(&eval, params, crate::boundary::DEFAULT_TOLERANCE);
        let fields = crate::observables::observables_grid(state, params)?;
        rows.push(TrajectoryRow {
            t: state.time,
            k0: state.k,
            energy: energy_expectation(state, params)?,
            phase,
            rho_wrap: report.residual("rho"),
            current: fields.current[0],
        });
        Ok(())
    };

    record(&state, phase, &mut max_phase_error)?;
    for s in 1..=steps {
        step(&mut state, params, dt)?;
        // Recompute t and k from the step index: s·dt in one rounding
        // instead of s accumulated roundings, so e.g. 1000 steps of
        // dt = 1e−3 under T = 1 land on k₀ = 1.0 exactly.
        state.time = q0.time + s as f64 * dt;
        state.k = q0.k0 + params.torque * (state.time - q0.time);
        let c = coeff_at(&state);
        phase += (c / prev_coeff).arg();
        prev_coeff = c;
        if s % stride == 0 || s == steps {
            record(&state, phase, &mut max_phase_error)?;
        }
    }
    Ok(Trajectory { rows, max_phase_error, final_state: state })
}
