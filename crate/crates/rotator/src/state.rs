use num_complex::Complex64;

use crate::error::{Result, RotatorError};
use crate::grid::AngleGrid;
use crate::params::{GaugeTag, PhysicsParams};
use crate::spectral;

/// Closed-form single-mode state a·e^{iμθ}.
///
/// The exponent bookkeeping follows the gauge: in the momentum gauge the
/// state is u = a·e^{iλθ} with k carried beside it in the Hamiltonian; in
/// the torque gauge the k phase lives in the wave function, so
/// μ = λ + k/ħ. Both describe the same physical momentum ħλ + k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveState {
    pub amplitude: Complex64,
    pub lambda: f64,
    pub k: f64,
    pub gauge: GaugeTag,
    pub time: f64,
}

impl PlaneWaveState {
    pub fn new(amplitude: Complex64, lambda: f64, k: f64, gauge: GaugeTag) -> Self {
        Self { amplitude, lambda, k, gauge, time: 0.0 }
    }

    /// Effective exponent μ of a·e^{iμθ} as written in this gauge.
    pub fn mu(&self, params: &PhysicsParams) -> f64 {
        match self.gauge {
            GaugeTag::Momentum => self.lambda,
            GaugeTag::Torque => self.lambda + self.k / params.hbar,
        }
    }

    /// Physical momentum ħλ + k, the same number in either gauge.
    pub fn momentum_eigenvalue(&self, params: &PhysicsParams) -> f64 {
        params.hbar * self.lambda + self.k
    }

    pub fn value_at(&self, theta: f64, params: &PhysicsParams) -> Complex64 {
        self.amplitude * Complex64::new(0.0, self.mu(params) * theta).exp()
    }

    pub fn derivative_at(&self, theta: f64, params: &PhysicsParams) -> Complex64 {
        Complex64::new(0.0, self.mu(params)) * self.value_at(theta, params)
    }

    /// Total probability on the ring, 2π|a|².
    pub fn total_probability(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.amplitude.norm_sqr()
    }

    /// Ψ*Ψ_θ for a plane wave: the constant |a|²·iμ.
    pub fn complex_momentum_density(&self, params: &PhysicsParams) -> Complex64 {
        Complex64::new(0.0, self.mu(params)) * self.amplitude.norm_sqr()
    }
}

/// Sample a closed-form plane wave onto the grid; gauge tag, k, and time
/// are carried over.
pub fn sample_plane_wave(state: &PlaneWaveState, grid: &AngleGrid, params: &PhysicsParams) -> GridState {
    let mu = state.mu(params);
    let samples = grid
        .nodes()
        .iter()
        .map(|&t| state.amplitude * Complex64::new(0.0, mu * t).exp())
        .collect();
    GridState { samples, grid: grid.clone(), gauge: state.gauge, k: state.k, time: state.time }
}

/// Sampled wave function on the angle grid, tagged with its gauge and the
/// momentum parameter k.
///
/// In the torque gauge the samples carry the e^{ikθ/ħ} factor, which for
/// fractional k/ħ is not band-limited; anything that differentiates a
/// torque-gauge state must first divide that factor out (see
/// [`GridState::momentum_gauge_samples`]).
#[derive(Debug, Clone, PartialEq)]
pub struct GridState {
    pub samples: Vec<Complex64>,
    pub grid: AngleGrid,
    pub gauge: GaugeTag,
    pub k: f64,
    pub time: f64,
}

impl GridState {
    pub fn new(
        samples: Vec<Complex64>,
        grid: AngleGrid,
        gauge: GaugeTag,
        k: f64,
    ) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(RotatorError::SampleCountMismatch { samples: samples.len(), grid: grid.len() });
        }
        Ok(Self { samples, grid, gauge, k, time: 0.0 })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Total probability 2π/N · Σ|ψ_j|².
    pub fn total_probability(&self) -> f64 {
        self.grid.weight() * self.samples.iter().map(|s| s.norm_sqr()).sum::<f64>()
    }

    /// The band-limited momentum-gauge representation u of this state:
    /// identity in the momentum gauge, samples × e^{−ikθ/ħ} in the torque
    /// gauge.
    pub fn momentum_gauge_samples(&self, params: &PhysicsParams) -> Vec<Complex64> {
        match self.gauge {
            GaugeTag::Momentum => self.samples.clone(),
            GaugeTag::Torque => {
                let kh = self.k / params.hbar;
                self.grid
                    .nodes()
                    .iter()
                    .zip(&self.samples)
                    .map(|(&t, &s)| s * Complex64::new(0.0, -kh * t).exp())
                    .collect()
            }
        }
    }

    /// ∂ψ/∂θ with the gauge phase handled: the derivative is taken
    /// spectrally on the band-limited u part and the e^{ikθ/ħ} factor is
    /// reattached by the product rule.
    pub fn derivative_samples(&self, params: &PhysicsParams) -> Vec<Complex64> {
        match self.gauge {
            GaugeTag::Momentum => spectral::spectral_derivative(&self.samples, &self.grid),
            GaugeTag::Torque => {
                let kh = self.k / params.hbar;
                let u = self.momentum_gauge_samples(params);
                let du = spectral::spectral_derivative(&u, &self.grid);
                self.grid
                    .nodes()
                    .iter()
                    .zip(du.iter().zip(&u))
                    .map(|(&t, (&dui, &ui))| {
                        (dui + Complex64::new(0.0, kh) * ui) * Complex64::new(0.0, kh * t).exp()
                    })
                    .collect()
            }
        }
    }
}
