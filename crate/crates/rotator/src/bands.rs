//! The free-rotator band structure E_n(k₀) = (nħ + k₀)²/2m_i and its
//! lattice-shift symmetry: as a set, the spectrum is invariant under
//! k₀ → k₀ + ħ with bands re-indexed by one, the Bloch structure shared
//! with the 1D crystal.

use serde::Serialize;

use crate::dynamics::band_energy;
use crate::error::{Result, RotatorError};
use crate::params::PhysicsParams;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BandPoint {
    pub n: i64,
    pub k0: f64,
    pub energy: f64,
}

/// Full (n, k₀) grid of band points, k₀ sweeping [0, ħ) uniformly with
/// spacing ħ/k0_samples; rows sorted by (n, k₀).
pub fn band_diagram(
    n_min: i64,
    n_max: i64,
    k0_samples: usize,
    params: &PhysicsParams,
) -> Result<Vec<BandPoint>> {
    if n_min > n_max {
        return Err(RotatorError::InvalidArgument(format!(
            "band range empty: n_min {n_min} > n_max {n_max}"
        )));
    }
    if k0_samples < 2 {
        return Err(RotatorError::InvalidArgument(format!(
            "need at least 2 k0 samples, got {k0_samples}"
        )));
    }
    let mut points = Vec::with_capacity(((n_max - n_min + 1) as usize) * k0_samples);
    for n in n_min..=n_max {
        for i in 0..k0_samples {
            let k0 = params.hbar * i as f64 / k0_samples as f64;
            points.push(BandPoint { n, k0, energy: band_energy(n, k0, params) });
        }
    }
    Ok(points)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftCheck {
    pub max_deviation: f64,
    pub pass: bool,
}

/// Verify E(n, k₀ + ħ) = E(n+1, k₀) on every interior band of the diagram
/// (all n with n+1 still present). The right side is the diagram's stored
/// energy, so corrupted diagram data fails the check.
pub fn shift_invariance_check(
    diagram: &[BandPoint],
    params: &PhysicsParams,
    tolerance: f64,
) -> ShiftCheck {
    let mut max_deviation = 0.0f64;
    for p in diagram {
        let Some(reindexed) = diagram
            .iter()
            .find(|q| q.n == p.n + 1 && (q.k0 - p.k0).abs() <= 1e-15 * params.hbar.max(1.0))
        else {
            continue;
        };
        let shifted = band_energy(p.n, p.k0 + params.hbar, params);
        max_deviation = max_deviation.max((shifted - reindexed.energy).abs());
    }
    ShiftCheck { max_deviation, pass: max_deviation <= tolerance }
}
