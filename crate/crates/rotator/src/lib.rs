//! Numerical laboratory for the single-coordinate quantum rotator.
//!
//! A rigid rotator with one angular coordinate θ ∈ [−π, π) admits two
//! natural gauges for an applied torque T: the *momentum gauge*, where the
//! potential vanishes and the canonical momentum is −iħ∂_θ + k with k̇ = T,
//! and the *torque gauge*, where the potential is the seam-discontinuous
//! ramp Tθ and the canonical momentum is −iħ∂_θ. The two are related by the
//! phase factor e^{ikθ/ħ}.
//!
//! Requiring the wave function and its gradient to be 2π-periodic is
//! gauge-dependent: a state that is periodic in the momentum gauge acquires
//! a seam jump of phase 2πk/ħ in the torque gauge. This crate implements
//! both gauges side by side, quantifies that contradiction as wrap
//! residuals, and checks the gauge-invariant alternatives: continuity of
//! (A, A_θ, S_θ) or equivalently (ρ, ρ_θ, J) across the seam.
//!
//! Module map:
//! - [`params`], [`grid`], [`state`], [`spectral`], [`observables`] — the
//!   angle grid, state representations, spectral differentiation, and
//!   gauge-invariant observables.
//! - [`gauge`] — gauge transforms, canonical momentum, k dynamics.
//! - [`boundary`] — the three boundary-condition checkers and a classifier.
//! - [`madelung`] — amplitude/action split and the real/imaginary equation
//!   pair it satisfies.
//! - [`superpose`] — superpositions, the integer-ħ momentum-spacing rule,
//!   and a brute-force density-periodicity oracle.
//! - [`dynamics`] — quasi-eigenstates under constant torque, closed-form
//!   and stepped evolution, energy flow.
//! - [`bands`] — the free-rotator band diagram and its lattice-shift
//!   symmetry.

pub mod bands;
pub mod boundary;
pub mod dynamics;
pub mod error;
pub mod gauge;
pub mod grid;
pub mod madelung;
pub mod observables;
pub mod params;
pub mod spectral;
pub mod state;
pub mod superpose;

pub use bands::{band_diagram, shift_invariance_check, BandPoint, ShiftCheck};
pub use boundary::{
    check_amplitude_action, check_density_current, check_standard, classify, BCReport,
    Classification, PlaneWaveEval, WaveAt, DEFAULT_TOLERANCE,
};
pub use dynamics::{band_energy, evolve_analytic, run_trajectory, QuasiEigenstate, Trajectory};
pub use error::{Result, RotatorError};
pub use grid::{make_grid, AngleGrid};
pub use observables::ObservableFields;
pub use params::{GaugeTag, PhysicsParams};
pub use state::{GridState, PlaneWaveState};
pub use superpose::{
    admissibility_oracle, lattice_check, RawSuperposition, SuperTerm, LATTICE_TOLERANCE,
};

/// Amplitudes below this are treated as having undefined phase.
pub const AMPLITUDE_THRESHOLD: f64 = 1e-12;
