use serde::{Deserialize, Serialize};

/// Physical constants of the rotator: the action quantum ħ, the inertia
/// parameter m_i, and the applied torque T. Natural units ħ = m_i = 1 by
/// default; every downstream energy scales as ħ²/m_i.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicsParams {
    pub hbar: f64,
    pub inertia: f64,
    pub torque: f64,
}

impl Default for PhysicsParams {
    fn default() -> Self {
        Self { hbar: 1.0, inertia: 1.0, torque: 0.0 }
    }
}

impl PhysicsParams {
    pub fn new(hbar: f64, inertia: f64, torque: f64) -> Self {
        assert!(hbar > 0.0, "hbar must be positive");
        assert!(inertia > 0.0, "inertia must be positive");
        Self { hbar, inertia, torque }
    }

    /// Natural units with a given torque.
    pub fn with_torque(torque: f64) -> Self {
        Self { torque, ..Self::default() }
    }
}

/// Which of the two gauges a state lives in.
///
/// Momentum gauge: zero potential, canonical momentum −iħ∂_θ + k, k̇ = T.
/// Torque gauge: potential Tθ (discontinuous at the seam), canonical
/// momentum −iħ∂_θ; wave function carries the extra phase e^{ikθ/ħ}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaugeTag {
    Momentum,
    Torque,
}

impl GaugeTag {
    pub fn other(self) -> Self {
        match self {
            GaugeTag::Momentum => GaugeTag::Torque,
            GaugeTag::Torque => GaugeTag::Momentum,
        }
    }
}

impl std::fmt::Display for GaugeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GaugeTag::Momentum => write!(f, "momentum"),
            GaugeTag::Torque => write!(f, "torque"),
        }
    }
}

impl std::str::FromStr for GaugeTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "momentum" => Ok(GaugeTag::Momentum),
            "torque" => Ok(GaugeTag::Torque),
            other => Err(format!("unknown gauge '{other}' (expected 'momentum' or 'torque')")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_natural_units() {
        let p = PhysicsParams::default();
        assert_eq!(p.hbar, 1.0);
        assert_eq!(p.inertia, 1.0);
        assert_eq!(p.torque, 0.0);
    }

    #[test]
    #[should_panic]
    fn rejects_nonpositive_hbar() {
        PhysicsParams::new(0.0, 1.0, 0.0);
    }

    #[test]
    fn gauge_parses_both_ways() {
        assert_eq!("momentum".parse::<GaugeTag>().unwrap(), GaugeTag::Momentum);
        assert_eq!("torque".parse::<GaugeTag>().unwrap(), GaugeTag::Torque);
        assert!("coulomb".parse::<GaugeTag>().is_err());
        assert_eq!(GaugeTag::Momentum.other(), GaugeTag::Torque);
    }
}
