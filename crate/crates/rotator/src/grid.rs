use std::f64::consts::PI;

use crate::error::{Result, RotatorError};

/// Minimum grid size accepted by [`AngleGrid::new`]; anything coarser is
/// useless for spectral differentiation.
pub const MIN_GRID_SIZE: usize = 8;

/// Uniform periodic grid on the circle: θ_j = −π + 2πj/N, j = 0..N−1.
///
/// θ = π is not a node; it is identified with θ = −π (the seam).
#[derive(Debug, Clone, PartialEq)]
pub struct AngleGrid {
    n: usize,
    nodes: Vec<f64>,
}

impl AngleGrid {
    pub fn new(n_samples: usize) -> Result<Self> {
        if n_samples < MIN_GRID_SIZE {
            return Err(RotatorError::GridTooCoarse { min: MIN_GRID_SIZE, got: n_samples });
        }
        let h = 2.0 * PI / n_samples as f64;
        let nodes = (0..n_samples).map(|j| -PI + h * j as f64).collect();
        Ok(Self { n: n_samples, nodes })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node spacing 2π/N.
    pub fn spacing(&self) -> f64 {
        2.0 * PI / self.n as f64
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, j: usize) -> f64 {
        self.nodes[j]
    }

    /// Quadrature weight for the trapezoid rule on the circle (exact for
    /// band-limited integrands): each node carries 2π/N.
    pub fn weight(&self) -> f64 {
        self.spacing()
    }
}

/// Alias for the spec-level operation name.
pub fn make_grid(n_samples: usize) -> Result<AngleGrid> {
    AngleGrid::new(n_samples)
}
