//! Browser bindings for the rotator laboratory. Each export takes plain
//! numbers/strings and returns a JSON string, so the page needs no
//! generated TypeScript glue beyond the wasm-bindgen loader. The functions
//! are ordinary Rust on native targets and are unit-tested there.

use num_complex::Complex64;
use rotator::{
    band_diagram, classify, shift_invariance_check, GaugeTag, PhysicsParams, PlaneWaveEval,
    PlaneWaveState,
};
use wasm_bindgen::prelude::*;

/// Parametric Figure-1 curves: u = e^{iλθ} (momentum gauge, closed) and
/// ψ = e^{i(λ+k/ħ)θ} (torque gauge, open unless k/ħ is an integer),
/// sampled inclusively over [−π, π].
#[wasm_bindgen]
pub fn figure1_points(lambda: f64, k_over_hbar: f64, samples: usize) -> Result<String, String> {
    if samples < 16 {
        return Err(format!("need at least 16 samples, got {samples}"));
    }
    let params = PhysicsParams::default();
    let one = Complex64::new(1.0, 0.0);
    let u = PlaneWaveState::new(one, lambda, k_over_hbar, GaugeTag::Momentum);
    let psi = PlaneWaveState::new(one, lambda, k_over_hbar, GaugeTag::Torque);
    let pi = std::f64::consts::PI;
    let rows: Vec<serde_json::Value> = (0..samples)
        .map(|i| {
            let t = -pi + 2.0 * pi * i as f64 / (samples - 1) as f64;
            let uv = u.value_at(t, &params);
            let pv = psi.value_at(t, &params);
            serde_json::json!({
                "theta": t,
                "re_u": uv.re, "im_u": uv.im,
                "re_psi": pv.re, "im_psi": pv.im,
            })
        })
        .collect();
    Ok(serde_json::to_string(&rows).unwrap())
}

/// Boundary-condition verdicts (standard, amplitude/action,
/// density/current) for the plane wave a=1, λ, k in the given gauge.
#[wasm_bindgen]
pub fn classify_bc(gauge: &str, lambda: f64, k_over_hbar: f64) -> Result<String, String> {
    let gauge: GaugeTag = gauge.parse().map_err(|_| format!("unknown gauge '{gauge}'"))?;
    let params = PhysicsParams::default();
    let pw = PlaneWaveState::new(Complex64::new(1.0, 0.0), lambda, k_over_hbar, gauge);
    let eval = PlaneWaveEval { state: &pw, params: &params };
    let classification = classify(&eval, &params, 1e-10).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&classification).unwrap())
}

/// Free-rotator band diagram E_n(k₀) over n_min..=n_max with the
/// lattice-shift verification attached.
#[wasm_bindgen]
pub fn band_points(n_min: i32, n_max: i32, k0_steps: usize) -> Result<String, String> {
    let params = PhysicsParams::default();
    let diagram =
        band_diagram(n_min as i64, n_max as i64, k0_steps, &params).map_err(|e| e.to_string())?;
    let check = shift_invariance_check(&diagram, &params, 1e-12);
    let report = serde_json::json!({ "points": diagram, "shift_check": check });
    Ok(serde_json::to_string(&report).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure1_points_shape_and_closure() {
        let json = figure1_points(1.0, -0.15, 64).unwrap();
        let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
        assert_eq!(rows.len(), 64);
        let first = &rows[0];
        let last = &rows[63];
        // u closes; ψ endpoint phase gap is 0.3π.
        assert!((first["re_u"].as_f64().unwrap() - last["re_u"].as_f64().unwrap()).abs() <= 1e-12);
        let a = Complex64::new(first["re_psi"].as_f64().unwrap(), first["im_psi"].as_f64().unwrap());
        let b = Complex64::new(last["re_psi"].as_f64().unwrap(), last["im_psi"].as_f64().unwrap());
        assert!(((b / a).arg().abs() - 0.3 * std::f64::consts::PI).abs() <= 1e-10);
    }

    #[test]
    fn figure1_points_rejects_short_sampling() {
        assert!(figure1_points(1.0, 0.0, 4).is_err());
    }

    #[test]
    fn classify_bc_torque_verdict_pattern() {
        let json = classify_bc("torque", 1.0, 0.25).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["summary"], "standard=fail amplitude_action=pass density_current=pass");
        assert!(classify_bc("sideways", 1.0, 0.0).is_err());
    }

    #[test]
    fn band_points_pass_shift_check() {
        let json = band_points(-2, 2, 33).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["points"].as_array().unwrap().len(), 5 * 33);
        assert_eq!(v["shift_check"]["pass"], true);
        assert!(band_points(2, 1, 33).is_err());
    }
}
