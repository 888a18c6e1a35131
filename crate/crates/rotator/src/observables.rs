//! Gauge-invariant observables: probability density ρ = A², its gradient
//! ρ_θ, and the probability current J.
//!
//! The current uses the gauge-invariant combination of the action gradient:
//! J = ρ(S_θ + k)/m_i in the momentum gauge and J = ρ·S_θ/m_i in the
//! torque gauge. Numerically it is evaluated through Im(ψ*ψ_θ), which
//! equals ρ·S_θ/ħ wherever the amplitude is finite but needs no phase
//! unwrapping.

use serde::Serialize;

use crate::error::{Result, RotatorError};
use crate::grid::AngleGrid;
use crate::params::{GaugeTag, PhysicsParams};
use crate::spectral;
use crate::state::{GridState, PlaneWaveState};
use crate::AMPLITUDE_THRESHOLD;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObservableFields {
    pub rho: Vec<f64>,
    pub rho_theta: Vec<f64>,
    pub current: Vec<f64>,
}

/// Observables of a sampled state. Errors if the amplitude drops below the
/// phase-definability threshold at any node.
pub fn observables_grid(state: &GridState, params: &PhysicsParams) -> Result<ObservableFields> {
    for (j, s) in state.samples.iter().enumerate() {
        let a = s.norm();
        if a < AMPLITUDE_THRESHOLD {
            return Err(RotatorError::PhaseUndefined { node: j, amplitude: a });
        }
    }
    let rho: Vec<f64> = state.samples.iter().map(|s| s.norm_sqr()).collect();
    let rho_theta = spectral::spectral_derivative_real(&rho, &state.grid);
    let dpsi = state.derivative_samples(params);
    let k_term = match state.gauge {
        GaugeTag::Momentum => state.k,
        GaugeTag::Torque => 0.0,
    };
    let current = state
        .samples
        .iter()
        .zip(&dpsi)
        .map(|(s, d)| {
            (params.hbar * (s.conj() * d).im + k_term * s.norm_sqr()) / params.inertia
        })
        .collect();
    Ok(ObservableFields { rho, rho_theta, current })
}

/// Observables of a closed-form plane wave, constant across the grid:
/// ρ = |a|², ρ_θ = 0, J = ρ·(ħλ + k)/m_i.
pub fn observables_plane_wave(
    state: &PlaneWaveState,
    grid: &AngleGrid,
    params: &PhysicsParams,
) -> ObservableFields {
    let n = grid.len();
    let rho_val = state.amplitude.norm_sqr();
    let current_val = rho_val * state.momentum_eigenvalue(params) / params.inertia;
    ObservableFields {
        rho: vec![rho_val; n],
        rho_theta: vec![0.0; n],
        current: vec![current_val; n],
    }
}
