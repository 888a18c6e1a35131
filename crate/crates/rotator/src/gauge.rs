//! Gauge transformations between the momentum and torque gauges, canonical
//! momentum, and the dynamics of the momentum parameter k.
//!
//! Every state carries its k as metadata, so the transforms need no
//! out-of-band context: torque-gauge samples are the momentum-gauge
//! samples times e^{ikθ/ħ}, and both bookkeepings assign the same physical
//! momentum ħλ + k to a plane wave.

use num_complex::Complex64;

use crate::error::{Result, RotatorError};
use crate::grid::AngleGrid;
use crate::params::{GaugeTag, PhysicsParams};
use crate::state::{GridState, PlaneWaveState};

fn expect_gauge(got: GaugeTag, expected: GaugeTag) -> Result<()> {
    if got == expected {
        Ok(())
    } else {
        Err(RotatorError::WrongGauge { expected, got })
    }
}

/// Multiply samples by e^{ikθ/ħ} and flip the tag; k is taken from the
/// state's own metadata.
pub fn to_torque_gauge_grid(state: &GridState, params: &PhysicsParams) -> Result<GridState> {
    expect_gauge(state.gauge, GaugeTag::Momentum)?;
    let kh = state.k / params.hbar;
    let samples = state
        .grid
        .nodes()
        .iter()
        .zip(&state.samples)
        .map(|(&t, &s)| s * Complex64::new(0.0, kh * t).exp())
        .collect();
    Ok(GridState { samples, grid: state.grid.clone(), gauge: GaugeTag::Torque, k: state.k, time: state.time })
}

/// Inverse of [`to_torque_gauge_grid`]: divide out e^{ikθ/ħ}.
pub fn to_momentum_gauge_grid(state: &GridState, params: &PhysicsParams) -> Result<GridState> {
    expect_gauge(state.gauge, GaugeTag::Torque)?;
    let samples = state.momentum_gauge_samples(params);
    Ok(GridState { samples, grid: state.grid.clone(), gauge: GaugeTag::Momentum, k: state.k, time: state.time })
}

/// Gauge transform of a closed-form plane wave: the (λ, k) bookkeeping is
/// shared between the gauges, only the tag flips (the exponent μ adjusts
/// through [`PlaneWaveState::mu`]).
pub fn to_torque_gauge_plane(state: &PlaneWaveState) -> Result<PlaneWaveState> {
    expect_gauge(state.gauge, GaugeTag::Momentum)?;
    Ok(PlaneWaveState { gauge: GaugeTag::Torque, ..*state })
}

pub fn to_momentum_gauge_plane(state: &PlaneWaveState) -> Result<PlaneWaveState> {
    expect_gauge(state.gauge, GaugeTag::Torque)?;
    Ok(PlaneWaveState { gauge: GaugeTag::Momentum, ..*state })
}

/// k̇ = T integrated exactly over a step: k + T·dt.
pub fn advance_k(k: f64, params: &PhysicsParams, dt: f64) -> f64 {
    k + params.torque * dt
}

/// Apply the canonical momentum operator: (−iħ∂_θ + k) in the momentum
/// gauge, −iħ∂_θ in the torque gauge. Differentiation happens on the
/// band-limited momentum-gauge part, so torque-gauge states with
/// fractional k/ħ are handled exactly.
pub fn canonical_momentum_apply(state: &GridState, params: &PhysicsParams) -> GridState {
    let dpsi = state.derivative_samples(params);
    let k_term = match state.gauge {
        GaugeTag::Momentum => state.k,
        GaugeTag::Torque => 0.0,
    };
    let samples = state
        .samples
        .iter()
        .zip(&dpsi)
        .map(|(&s, &d)| Complex64::new(0.0, -params.hbar) * d + k_term * s)
        .collect();
    GridState { samples, ..state.clone() }
}

/// ⟨p⟩ = ⟨ψ|p̂|ψ⟩ / ⟨ψ|ψ⟩ with p̂ the canonical momentum of the state's
/// gauge. Gauge-invariant for gauge-equivalent states.
pub fn momentum_expectation(state: &GridState, params: &PhysicsParams) -> f64 {
    let p_psi = canonical_momentum_apply(state, params);
    let num: Complex64 = state
        .samples
        .iter()
        .zip(&p_psi.samples)
        .map(|(s, p)| s.conj() * p)
        .sum();
    let den: f64 = state.samples.iter().map(|s| s.norm_sqr()).sum();
    num.re / den
}

/// Action bookkeeping of a state: S = φ in the momentum gauge and
/// S = φ + kθ in the torque gauge, with φ shared between the gauges.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionRecord {
    pub phi: Vec<f64>,
    pub k: f64,
    pub gauge: GaugeTag,
}

impl ActionRecord {
    /// Total action samples on the grid.
    pub fn total(&self, grid: &AngleGrid) -> Vec<f64> {
        match self.gauge {
            GaugeTag::Momentum => self.phi.clone(),
            GaugeTag::Torque => {
                self.phi.iter().zip(grid.nodes()).map(|(&p, &t)| p + self.k * t).collect()
            }
        }
    }

    /// Split a state's unwrapped action into the shared φ part and the
    /// k(t)θ term of the torque gauge.
    pub fn from_state(state: &GridState, params: &PhysicsParams) -> Result<Self> {
        let fields = crate::madelung::decompose(state, params)?;
        let phi = match state.gauge {
            GaugeTag::Momentum => fields.action,
            GaugeTag::Torque => fields
                .action
                .iter()
                .zip(state.grid.nodes())
                .map(|(&s, &t)| s - state.k * t)
                .collect(),
        };
        Ok(Self { phi, k: state.k, gauge: state.gauge })
    }
}
