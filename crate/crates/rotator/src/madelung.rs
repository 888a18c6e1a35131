//! Amplitude/action split ψ = A·e^{iS/ħ} and the real/imaginary equation
//! pair it obeys.
//!
//! Real part:      −(ħ²/2m_i)·A_θθ + (1/2m_i)·A·S_θ² − TθA = −A·S_t
//! Imaginary part:  2·A_θ·S_θ + A·S_θθ = −2m_i·A_t
//!
//! The −TθA term belongs to the torque gauge only (the momentum-gauge
//! potential is zero). Only gradients of S appear, which is why continuity
//! of (A, A_θ, S_θ) suffices as a boundary condition.
//!
//! The unwrapped action is generally non-periodic (its seam jump is the
//! physics), so its derivatives are taken by one-sided finite differences
//! that never cross the seam; amplitude derivatives are spectral, since A
//! is gauge invariant and periodic for admissible states.

use num_complex::Complex64;

use crate::error::{Result, RotatorError};
use crate::grid::AngleGrid;
use crate::params::{GaugeTag, PhysicsParams};
use crate::spectral;
use crate::state::GridState;
use crate::AMPLITUDE_THRESHOLD;

/// Real amplitude and unwrapped action of a sampled state, with the time
/// derivatives supplied externally (zero by default; a snapshot cannot
/// know them).
#[derive(Debug, Clone, PartialEq)]
pub struct MadelungFields {
    pub amplitude: Vec<f64>,
    /// Unwrapped action S, anchored at the first node with S(θ_0)/ħ in
    /// (−π, π]. Continuous along the grid; may be non-periodic.
    pub action: Vec<f64>,
    pub action_theta: Vec<f64>,
    pub da_dt: Vec<f64>,
    pub ds_dt: Vec<f64>,
    grid: AngleGrid,
}

impl MadelungFields {
    pub fn grid(&self) -> &AngleGrid {
        &self.grid
    }

    pub fn with_da_dt(mut self, da_dt: Vec<f64>) -> Self {
        assert_eq!(da_dt.len(), self.amplitude.len());
        self.da_dt = da_dt;
        self
    }

    pub fn with_ds_dt(mut self, ds_dt: Vec<f64>) -> Self {
        assert_eq!(ds_dt.len(), self.action.len());
        self.ds_dt = ds_dt;
        self
    }

    /// Constant ∂S/∂t = −E for a stationary state of energy E.
    pub fn with_stationary_energy(self, energy: f64) -> Self {
        let n = self.action.len();
        self.with_ds_dt(vec![-energy; n])
    }
}

/// Split a sampled state into A = |ψ| and the nearest-branch unwrapped
/// action. Needs every node amplitude above threshold and a grid fine
/// enough that true phase increments per step stay below π (N > 2·|μ|).
pub fn decompose(state: &GridState, params: &PhysicsParams) -> Result<MadelungFields> {
    for (j, s) in state.samples.iter().enumerate() {
        if s.norm() < AMPLITUDE_THRESHOLD {
            return Err(RotatorError::PhaseUndefined { node: j, amplitude: s.norm() });
        }
    }
    let amplitude: Vec<f64> = state.samples.iter().map(|s| s.norm()).collect();
    let phase = spectral::unwrap_phase(&state.samples);
    let action: Vec<f64> = phase.iter().map(|&p| params.hbar * p).collect();
    let action_theta = spectral::fd_derivative(&action, state.grid.spacing());
    let n = action.len();
    Ok(MadelungFields {
        amplitude,
        action,
        action_theta,
        da_dt: vec![0.0; n],
        ds_dt: vec![0.0; n],
        grid: state.grid.clone(),
    })
}

/// Rebuild samples A·e^{iS/ħ}; inverse of [`decompose`] up to one global
/// phase.
pub fn reconstruct(
    fields: &MadelungFields,
    params: &PhysicsParams,
    gauge: GaugeTag,
    k: f64,
) -> GridState {
    let samples = fields
        .amplitude
        .iter()
        .zip(&fields.action)
        .map(|(&a, &s)| a * Complex64::new(0.0, s / params.hbar).exp())
        .collect();
    GridState { samples, grid: fields.grid.clone(), gauge, k, time: 0.0 }
}

/// Pointwise residual of the real part of the Schrödinger pair:
/// −(ħ²/2m_i)A_θθ + (1/2m_i)A·S_θ² − TθA + A·S_t, the potential term
/// present in the torque gauge only. Zero on eigenstates with S_t = −E.
pub fn residual_eq1(fields: &MadelungFields, params: &PhysicsParams, gauge: GaugeTag) -> Vec<f64> {
    let a_theta2 = spectral::spectral_second_derivative_real(&fields.amplitude, &fields.grid);
    let s_theta = &fields.action_theta;
    fields
        .amplitude
        .iter()
        .enumerate()
        .map(|(j, &a)| {
            let potential = match gauge {
                GaugeTag::Momentum => 0.0,
                GaugeTag::Torque => params.torque * fields.grid.node(j),
            };
            -(params.hbar * params.hbar / (2.0 * params.inertia)) * a_theta2[j]
                + a * s_theta[j] * s_theta[j] / (2.0 * params.inertia)
                - potential * a
                + a * fields.ds_dt[j]
        })
        .collect()
}

/// Pointwise residual of the imaginary part: 2A_θS_θ + A·S_θθ + 2m_i·A_t.
/// Zero on any plane wave (A constant, S linear).
pub fn residual_eq2(fields: &MadelungFields, params: &PhysicsParams) -> Vec<f64> {
    let a_theta = spectral::spectral_derivative_real(&fields.amplitude, &fields.grid);
    let s_theta2 = spectral::fd_second_derivative(&fields.action, fields.grid.spacing());
    fields
        .amplitude
        .iter()
        .enumerate()
        .map(|(j, &a)| {
            2.0 * a_theta[j] * fields.action_theta[j]
                + a * s_theta2[j]
                + 2.0 * params.inertia * fields.da_dt[j]
        })
        .collect()
}

/// The complex momentum density Ψ*Ψ_θ = A·A_θ + (i/ħ)·A²·S_θ. Wrap
/// continuity of this single complex field is equivalent to continuity of
/// the (A, A_θ, S_θ) triple wherever A > 0.
pub fn complex_momentum_density(state: &GridState, params: &PhysicsParams) -> Result<Vec<Complex64>> {
    let fields = decompose(state, params)?;
    let a_theta = spectral::spectral_derivative_real(&fields.amplitude, &fields.grid);
    Ok(fields
        .amplitude
        .iter()
        .enumerate()
        .map(|(j, &a)| {
            Complex64::new(a * a_theta[j], a * a * fields.action_theta[j] / params.hbar)
        })
        .collect())
}
