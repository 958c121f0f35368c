//! Symbol streams and generalized observations.
//!
//! A generalized state stacks a complex baseband sample with its one-slot
//! first difference: `[I, Q, dI, dQ]`.

use nalgebra::{Complex, Matrix4, Vector4};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

pub type Vec4 = Vector4<f64>;
pub type Mat4 = Matrix4<f64>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SignalError {
    #[error("symbol count must be at least 1")]
    EmptyStream,
    #[error("invalid model matrices: {0}")]
    InvalidMatrices(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedState(pub Vec4);

impl GeneralizedState {
    pub fn zero() -> Self {
        Self(Vec4::zeros())
    }

    pub fn from_symbols(current: Complex<f64>, previous: Option<Complex<f64>>) -> Self {
        let (di, dq) = match previous {
            Some(p) => (current.re - p.re, current.im - p.im),
            None => (0.0, 0.0),
        };
        Self(Vec4::new(current.re, current.im, di, dq))
    }

    pub fn value(&self) -> &Vec4 {
        &self.0
    }
}

pub fn qpsk_symbol<R: Rng + ?Sized>(rng: &mut R) -> Complex<f64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let bits: u8 = rng.random_range(0..4);
    let re = if bits & 1 == 0 { s } else { -s };
    let im = if bits & 2 == 0 { s } else { -s };
    Complex::new(re, im)
}

pub fn qpsk_stream<R: Rng + ?Sized>(n_symbols: usize, rng: &mut R) -> Result<Vec<Complex<f64>>, SignalError> {
    if n_symbols == 0 {
        return Err(SignalError::EmptyStream);
    }
    Ok((0..n_symbols).map(|_| qpsk_symbol(rng)).collect())
}

/// Generalized state of `symbols[t]`; the derivative is zero at `t = 0`.
pub fn to_generalized(symbols: &[Complex<f64>], t: usize) -> GeneralizedState {
    let prev = if t == 0 { None } else { Some(symbols[t - 1]) };
    GeneralizedState::from_symbols(symbols[t], prev)
}

/// Linear dynamic, control and observation maps with their noise covariances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GdbnMatrices {
    pub a: Mat4,
    pub b: Mat4,
    pub h: Mat4,
    pub sigma_w: Mat4,
    pub sigma_v: Mat4,
}

impl GdbnMatrices {
    /// Constant-velocity dynamics (value += derivative, derivative persists),
    /// identity control and observation maps.
    pub fn constant_velocity(process_var: f64, noise_var: f64) -> Self {
        let mut a = Mat4::identity();
        a[(0, 2)] = 1.0;
        a[(1, 3)] = 1.0;
        Self {
            a,
            b: Mat4::identity(),
            h: Mat4::identity(),
            sigma_w: Mat4::identity() * process_var,
            sigma_v: Mat4::identity() * noise_var,
        }
    }

    pub fn validate(&self) -> Result<(), SignalError> {
        self.h_inverse()?;
        for (name, m) in [("sigma_w", &self.sigma_w), ("sigma_v", &self.sigma_v)] {
            if (m - m.transpose()).abs().max() > 1e-12 {
                return Err(SignalError::InvalidMatrices(format!("{name} is not symmetric")));
            }
            if m.symmetric_eigenvalues().min() < -1e-12 {
                return Err(SignalError::InvalidMatrices(format!("{name} is not positive semi-definite")));
            }
        }
        Ok(())
    }

    pub fn h_inverse(&self) -> Result<Mat4, SignalError> {
        self.h
            .try_inverse()
            .ok_or_else(|| SignalError::InvalidMatrices("observation map is singular".into()))
    }
}

/// Per-component measurement noise variance for a unit-power QPSK signal at `snr_db`.
pub fn noise_variance_for_snr(snr_db: f64) -> f64 {
    10f64.powf(-snr_db / 10.0) / 2.0
}

/// Symmetric square root of a positive semi-definite matrix.
pub fn psd_sqrt(m: &Mat4) -> Mat4 {
    let eig = m.symmetric_eigen();
    let roots = eig.eigenvalues.map(|v| v.max(0.0).sqrt());
    eig.eigenvectors * Mat4::from_diagonal(&roots) * eig.eigenvectors.transpose()
}

/// Draws `N(0, cov)` given `factor = psd_sqrt(cov)`.
pub fn gaussian_noise<R: Rng + ?Sized>(factor: &Mat4, rng: &mut R) -> Vec4 {
    let n = Vec4::from_fn(|_, _| StandardNormal.sample(rng));
    factor * n
}

/// `z = H x_uav + scale * H x_jam + v`, the jammer term present only when given.
pub fn observe<R: Rng + ?Sized>(
    x_uav: &GeneralizedState,
    x_jam: Option<&GeneralizedState>,
    jammer_scale: f64,
    matrices: &GdbnMatrices,
    rng: &mut R,
) -> GeneralizedState {
    let noise = gaussian_noise(&psd_sqrt(&matrices.sigma_v), rng);
    let mut z = matrices.h * x_uav.0 + noise;
    if let Some(j) = x_jam {
        z += matrices.h * j.0 * jammer_scale;
    }
    GeneralizedState(z)
}
