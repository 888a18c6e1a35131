use crate::params::GaugeTag;

pub type Result<T> = std::result::Result<T, RotatorError>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RotatorError {
    #[error("grid too coarse: need at least {min} samples, got {got}")]
    GridTooCoarse { min: usize, got: usize },

    #[error("expected a state in the {expected} gauge, got {got}")]
    WrongGauge { expected: GaugeTag, got: GaugeTag },

    #[error("sample count {samples} does not match grid size {grid}")]
    SampleCountMismatch { samples: usize, grid: usize },

    #[error("amplitude {amplitude:.3e} at node {node} is below the phase-definability threshold")]
    PhaseUndefined { node: usize, amplitude: f64 },

    #[error("invalid superposition: {0}")]
    InvalidSuperposition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
