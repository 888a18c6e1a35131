//! Fourier machinery on the periodic angle grid.
//!
//! Band-limited functions (integer harmonics |n| < N/2) are represented
//! exactly by their samples, so the spectral derivative is exact on them.
//! Non-periodic sequences (unwrapped actions with fractional winding) are
//! handled elsewhere by finite differences; see [`fd_derivative`].

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::PI;

use crate::grid::AngleGrid;

/// Signed integer frequency for FFT bin `j` of an N-point transform:
/// 0, 1, …, N/2−1, −N/2, …, −1.
pub fn bin_frequency(j: usize, n: usize) -> i64 {
    if j < n / 2 {
        j as i64
    } else {
        j as i64 - n as i64
    }
}

fn fft(samples: &[Complex64], inverse: bool) -> Vec<Complex64> {
    let mut planner = FftPlanner::new();
    let fft = if inverse {
        planner.plan_fft_inverse(samples.len())
    } else {
        planner.plan_fft_forward(samples.len())
    };
    let mut buf = samples.to_vec();
    fft.process(&mut buf);
    buf
}

/// Fourier coefficients c_n such that f(θ_j) = Σ_n c_n e^{inθ_j}, with bin
/// order as in [`bin_frequency`]. The grid starts at θ = −π, so the plain
/// DFT picks up a phase (−1)^n that is compensated here.
pub fn fourier_coefficients(samples: &[Complex64]) -> Vec<Complex64> {
    let n = samples.len();
    let scale = 1.0 / n as f64;
    fft(samples, false)
        .into_iter()
        .enumerate()
        .map(|(j, c)| {
            let freq = bin_frequency(j, n);
            // e^{−in θ_0} with θ_0 = −π is (−1)^n.
            let sign = if freq.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            c * scale * sign
        })
        .collect()
}

/// Inverse of [`fourier_coefficients`].
pub fn samples_from_coefficients(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    let adjusted: Vec<Complex64> = coeffs
        .iter()
        .enumerate()
        .map(|(j, &c)| {
            let freq = bin_frequency(j, n);
            let sign = if freq.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            c * sign
        })
        .collect();
    fft(&adjusted, true)
}

/// Spectral derivative ∂/∂θ on the periodic grid: exact for integer
/// harmonics with |n| < N/2. The Nyquist mode has no well-defined odd
/// derivative on the real line through the samples; its coefficient is
/// dropped, the standard choice.
pub fn spectral_derivative(samples: &[Complex64], grid: &AngleGrid) -> Vec<Complex64> {
    let n = grid.len();
    assert_eq!(samples.len(), n, "samples must live on the grid");
    let mut coeffs = fourier_coefficients(samples);
    for (j, c) in coeffs.iter_mut().enumerate() {
        let freq = bin_frequency(j, n);
        if 2 * j == n {
            *c = Complex64::ZERO;
        } else {
            *c *= Complex64::new(0.0, freq as f64);
        }
    }
    samples_from_coefficients(&coeffs)
}

/// Spectral derivative of a real field; imaginary round-off is discarded.
pub fn spectral_derivative_real(samples: &[f64], grid: &AngleGrid) -> Vec<f64> {
    let complex: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    spectral_derivative(&complex, grid).into_iter().map(|c| c.re).collect()
}

/// Spectral second derivative of a real periodic field: coefficients times
/// −n² (the Nyquist mode keeps its −(N/2)² factor, consistent with the
/// cos-form interpolant).
pub fn spectral_second_derivative_real(samples: &[f64], grid: &AngleGrid) -> Vec<f64> {
    let n = grid.len();
    assert_eq!(samples.len(), n);
    let complex: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut coeffs = fourier_coefficients(&complex);
    for (j, c) in coeffs.iter_mut().enumerate() {
        let freq = bin_frequency(j, n) as f64;
        *c *= -freq * freq;
    }
    samples_from_coefficients(&coeffs).into_iter().map(|c| c.re).collect()
}

/// Trigonometric interpolant through grid samples, evaluated at arbitrary θ.
/// Periodic by construction; the Nyquist coefficient is split symmetrically
/// between ±N/2 so real samples interpolate to real values.
#[derive(Debug, Clone)]
pub struct FourierInterpolant {
    coeffs: Vec<Complex64>,
}

impl FourierInterpolant {
    pub fn from_samples(samples: &[Complex64]) -> Self {
        Self { coeffs: fourier_coefficients(samples) }
    }

    pub fn value(&self, theta: f64) -> Complex64 {
        self.series(theta, 0)
    }

    pub fn derivative(&self, theta: f64) -> Complex64 {
        self.series(theta, 1)
    }

    fn series(&self, theta: f64, order: u32) -> Complex64 {
        let n = self.coeffs.len();
        let mut acc = Complex64::ZERO;
        for (j, &c) in self.coeffs.iter().enumerate() {
            let freq = bin_frequency(j, n) as f64;
            if 2 * j == n {
                // Split Nyquist: c·cos(fθ) (derivative −c·f·sin(fθ)).
                let term = match order {
                    0 => Complex64::new((freq * theta).cos(), 0.0),
                    _ => Complex64::new(-freq * (freq * theta).sin(), 0.0),
                };
                acc += c * term;
            } else {
                let phase = Complex64::new(0.0, freq * theta).exp();
                let factor = match order {
                    0 => Complex64::ONE,
                    _ => Complex64::new(0.0, freq),
                };
                acc += c * factor * phase;
            }
        }
        acc
    }
}

/// First derivative of a *non-periodic* sequence on the uniform grid,
/// fourth-order finite differences: central in the interior, one-sided at
/// the ends. Never crosses the seam, so it is the right tool for unwrapped
/// actions whose seam jump is genuine. Exact for polynomials up to degree 4
/// (in particular for linear actions).
pub fn fd_derivative(samples: &[f64], spacing: f64) -> Vec<f64> {
    let n = samples.len();
    assert!(n >= 6, "finite-difference stencils need at least 6 points");
    let f = samples;
    let mut out = vec![0.0; n];
    let d = 12.0 * spacing;
    out[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / d;
    out[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / d;
    for i in 2..n - 2 {
        out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / d;
    }
    out[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) / d;
    out[n - 1] =
        (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) / d;
    out
}

/// Second derivative of a non-periodic sequence, fourth-order stencils.
pub fn fd_second_derivative(samples: &[f64], spacing: f64) -> Vec<f64> {
    let n = samples.len();
    assert!(n >= 6, "finite-difference stencils need at least 6 points");
    let f = samples;
    let mut out = vec![0.0; n];
    let d = 12.0 * spacing * spacing;
    out[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4]
        - 10.0 * f[5])
        / d;
    out[1] =
        (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) / d;
    for i in 2..n - 2 {
        out[i] =
            (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / d;
    }
    out[n - 2] = (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4]
        - 6.0 * f[n - 5]
        + f[n - 6])
        / d;
    out[n - 1] = (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4]
        + 61.0 * f[n - 5]
        - 10.0 * f[n - 6])
        / d;
    out
}

/// Nearest-branch phase unwrap of complex samples: arg of the first sample
/// in (−π, π], then each step takes the branch within π of the previous
/// value. Valid while true per-step increments stay below π.
pub fn unwrap_phase(samples: &[Complex64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(samples.len());
    let mut prev = samples[0].arg();
    out.push(prev);
    for s in &samples[1..] {
        let raw = s.arg();
        let mut delta = raw - prev;
        while delta > PI {
            delta -= 2.0 * PI;
        }
        while delta <= -PI {
            delta += 2.0 * PI;
        }
        prev += delta;
        out.push(prev);
    }
    out
}
