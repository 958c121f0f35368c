//! Markov jump particle filter: particles over superstates, each carrying a
//! Kalman filter over the generalized state.
//!
//! One slot is `predict` then `update`. The update produces the predictive
//! (π) and diagnostic (λ) messages at both the discrete and continuous level.
//! An update can be rolled back to the predicted particles, which is how the
//! agent keeps jammed observations out of its state estimate.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::offline_learning::{nearest, PrbModel};
use crate::signal::{GdbnMatrices, Mat4, Vec4};

pub const EIGEN_FLOOR: f64 = 1e-10;
const LN_2PI: f64 = 1.837_877_066_409_345_5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gaussian {
    pub mean: Vec4,
    pub cov: Mat4,
}

impl Gaussian {
    pub fn log_pdf(&self, x: &Vec4) -> f64 {
        gaussian_log_pdf(&(x - self.mean), &self.cov)
    }
}

/// Log density of `N(0, cov)` at `d`.
pub fn gaussian_log_pdf(d: &Vec4, cov: &Mat4) -> f64 {
    let chol = make_spd(cov).cholesky().expect("floored covariance factors");
    let l = chol.l_dirty();
    let log_det = 2.0 * (0..4).map(|i| l[(i, i)].ln()).sum::<f64>();
    let quad = d.dot(&chol.solve(d));
    -0.5 * (quad + log_det + 4.0 * LN_2PI)
}

/// Symmetrizes `m` and raises any eigenvalue below [`EIGEN_FLOOR`] to it.
pub fn make_spd(m: &Mat4) -> Mat4 {
    let sym = (m + m.transpose()) * 0.5;
    if (sym - Mat4::identity() * EIGEN_FLOOR).cholesky().is_some() {
        return sym;
    }
    let eig = sym.symmetric_eigen();
    let vals = eig.eigenvalues.map(|v| v.max(EIGEN_FLOOR));
    let out = eig.eigenvectors * Mat4::from_diagonal(&vals) * eig.eigenvectors.transpose();
    (out + out.transpose()) * 0.5
}

#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    /// Zero-based superstate index.
    pub superstate: usize,
    pub weight: f64,
    pub mean: Vec4,
    pub cov: Mat4,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FilterParams {
    pub n_particles: usize,
    /// Resample when the effective sample size falls below this fraction of L.
    pub ess_fraction: f64,
    /// Add the sampled superstate's covariance to the prediction covariance.
    pub regime_process_noise: bool,
}

impl Default for FilterParams {
    fn default() -> Self {
        Self {
            n_particles: 100,
            ess_fraction: 0.5,
            regime_process_noise: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MessagePair {
    pub discrete_pi: Vec<f64>,
    pub discrete_lambda: Vec<f64>,
    /// Unweighted share of particles on each superstate after prediction.
    pub occurrence: Vec<f64>,
    pub cont_pi: Gaussian,
    pub cont_lambda: Gaussian,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UpdateOutcome {
    pub messages: MessagePair,
    /// All weights underflowed and were reset to uniform.
    pub degenerate: bool,
}

pub fn effective_sample_size(weights: &[f64]) -> f64 {
    let s2: f64 = weights.iter().map(|w| w * w).sum();
    if s2 == 0.0 {
        0.0
    } else {
        1.0 / s2
    }
}

/// Systematic resampling indices for normalized `weights` with offset `u0 ∈ [0, 1)`.
pub fn systematic_indices(weights: &[f64], u0: f64) -> Vec<usize> {
    let n = weights.len();
    let mut out = Vec::with_capacity(n);
    let mut cum = weights[0];
    let mut i = 0;
    for k in 0..n {
        let u = (u0 + k as f64) / n as f64;
        while u > cum && i + 1 < n {
            i += 1;
            cum += weights[i];
        }
        out.push(i);
    }
    out
}

fn collapse(particles: &[Particle]) -> Gaussian {
    let mean = particles.iter().fold(Vec4::zeros(), |acc, p| acc + p.mean * p.weight);
    let cov = particles.iter().fold(Mat4::zeros(), |acc, p| {
        let d = p.mean - mean;
        acc + (p.cov + d * d.transpose()) * p.weight
    });
    Gaussian {
        mean,
        cov: make_spd(&cov),
    }
}

fn normalize_log(logs: &[f64]) -> Option<Vec<f64>> {
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return None;
    }
    let exps: Vec<f64> = logs.iter().map(|l| (l - max).exp()).collect();
    let total: f64 = exps.iter().sum();
    (total > 0.0 && total.is_finite()).then(|| exps.iter().map(|e| e / total).collect())
}

#[derive(Debug, Clone)]
pub struct Mmjpf {
    params: FilterParams,
    particles: Vec<Particle>,
    predicted: Vec<Particle>,
    base: Option<Gaussian>,
    degenerate_count: usize,
}

impl Mmjpf {
    pub fn new(params: FilterParams) -> Self {
        Self {
            params,
            particles: Vec::new(),
            predicted: Vec::new(),
            base: None,
            degenerate_count: 0,
        }
    }

    pub fn params(&self) -> &FilterParams {
        &self.params
    }

    pub fn is_initialized(&self) -> bool {
        !self.particles.is_empty()
    }

    pub fn particles(&self) -> &[Particle] {
        &self.particles
    }

    pub fn degenerate_count(&self) -> usize {
        self.degenerate_count
    }

    /// Seeds L particles on `z`, superstates drawn from the PRB's occupancy.
    pub fn initialize<R: Rng + ?Sized>(&mut self, model: &PrbModel, matrices: &GdbnMatrices, z: &Vec4, rng: &mut R) {
        let h_inv = matrices.h_inverse().expect("validated observation map");
        let mean = h_inv * z;
        let cov = make_spd(&(h_inv * matrices.sigma_v * h_inv.transpose()));
        let pick = WeightedIndex::new(&model.occupancy).expect("occupancy has mass");
        let l = self.params.n_particles;
        self.particles = (0..l)
            .map(|_| Particle {
                superstate: pick.sample(rng),
                weight: 1.0 / l as f64,
                mean,
                cov,
            })
            .collect();
        self.predicted.clear();
        self.base = None;
    }

    /// Seeds particles with an explicit state and superstate split.
    pub fn initialize_with(&mut self, superstates: &[usize], mean: Vec4, cov: Mat4) {
        let l = superstates.len();
        self.particles = superstates
            .iter()
            .map(|&s| Particle {
                superstate: s,
                weight: 1.0 / l as f64,
                mean,
                cov,
            })
            .collect();
        self.predicted.clear();
        self.base = None;
    }

    /// Moves particles to another PRB's model, mapping each superstate to the
    /// nearest mean; continuous states carry over.
    pub fn remap(&mut self, from: &PrbModel, to: &PrbModel) {
        if from.prb == to.prb {
            return;
        }
        let map: Vec<usize> = from
            .superstates
            .iter()
            .map(|s| nearest(&s.mean, to.superstates.iter().map(|t| t.mean)))
            .collect();
        for p in &mut self.particles {
            p.superstate = map[p.superstate];
        }
    }

    pub fn predict<R: Rng + ?Sized>(&mut self, model: &PrbModel, matrices: &GdbnMatrices, segment: usize, rng: &mut R) {
        let a = &matrices.a;
        let propagated: Vec<(Vec4, Mat4)> = self
            .particles
            .iter()
            .map(|p| (a * p.mean, a * p.cov * a.transpose() + matrices.sigma_w))
            .collect();
        let base_parts: Vec<Particle> = self
            .particles
            .iter()
            .zip(&propagated)
            .map(|(p, (m, c))| Particle {
                mean: *m,
                cov: *c,
                ..p.clone()
            })
            .collect();
        self.base = Some(collapse(&base_parts));

        let rows: Vec<WeightedIndex<f64>> = (0..model.n_states())
            .map(|i| WeightedIndex::new(model.transitions.row(segment, i)).expect("stochastic row"))
            .collect();
        for (p, (m, c)) in self.particles.iter_mut().zip(propagated) {
            let s = rows[p.superstate].sample(rng);
            let ss = &model.superstates[s];
            p.superstate = s;
            p.mean = m + matrices.b * ss.mean;
            p.cov = make_spd(&if self.params.regime_process_noise { c + ss.cov } else { c });
        }
    }

    pub fn update(&mut self, model: &PrbModel, matrices: &GdbnMatrices, z: &Vec4) -> UpdateOutcome {
        let m = model.n_states();
        let h = &matrices.h;
        let h_inv = matrices.h_inverse().expect("validated observation map");
        self.predicted = self.particles.clone();

        let mut discrete_pi = vec![0.0; m];
        let mut occurrence = vec![0.0; m];
        let l = self.particles.len() as f64;
        for p in &self.particles {
            discrete_pi[p.superstate] += p.weight;
            occurrence[p.superstate] += 1.0 / l;
        }
        let cont_pi = collapse(&self.particles);
        let cont_lambda = Gaussian {
            mean: h_inv * z,
            cov: make_spd(&(h_inv * matrices.sigma_v * h_inv.transpose())),
        };

        let mut log_w = Vec::with_capacity(self.particles.len());
        for p in &mut self.particles {
            let s = make_spd(&(h * p.cov * h.transpose() + matrices.sigma_v));
            let innov = z - h * p.mean;
            log_w.push(p.weight.ln() + gaussian_log_pdf(&innov, &s));
            let s_inv = s.cholesky().expect("spd innovation covariance").inverse();
            let k = p.cov * h.transpose() * s_inv;
            let ikh = Mat4::identity() - k * h;
            p.mean += k * innov;
            p.cov = make_spd(&(ikh * p.cov * ikh.transpose() + k * matrices.sigma_v * k.transpose()));
        }
        let degenerate = match normalize_log(&log_w) {
            Some(w) => {
                for (p, w) in self.particles.iter_mut().zip(w) {
                    p.weight = w;
                }
                false
            }
            None => {
                for p in &mut self.particles {
                    p.weight = 1.0 / l;
                }
                self.degenerate_count += 1;
                true
            }
        };

        let base = self.base.clone().unwrap_or_else(|| cont_pi.clone());
        let lambda_logs: Vec<f64> = model
            .superstates
            .iter()
            .map(|ss| {
                let mean = h * (base.mean + matrices.b * ss.mean);
                let state_cov = if self.params.regime_process_noise { base.cov + ss.cov } else { base.cov };
                gaussian_log_pdf(&(z - mean), &(h * state_cov * h.transpose() + matrices.sigma_v))
            })
            .collect();
        let discrete_lambda = normalize_log(&lambda_logs).unwrap_or_else(|| vec![1.0 / m as f64; m]);

        UpdateOutcome {
            messages: MessagePair {
                discrete_pi,
                discrete_lambda,
                occurrence,
                cont_pi,
                cont_lambda,
            },
            degenerate,
        }
    }

    /// Discards the observation of the last `update`: means and weights go
    /// back to their predicted values while covariances keep the posterior
    /// value, which does not depend on the observation. Equivalent to updating
    /// each particle with its own predicted observation.
    pub fn revert_update(&mut self) {
        if self.predicted.is_empty() {
            return;
        }
        for (p, prior) in self.particles.iter_mut().zip(self.predicted.drain(..)) {
            p.superstate = prior.superstate;
            p.weight = prior.weight;
            p.mean = prior.mean;
        }
    }

    /// Systematic resampling when ESS < `ess_fraction`·L. Returns whether it ran.
    pub fn resample<R: Rng + ?Sized>(&mut self, rng: &mut R) -> bool {
        let weights: Vec<f64> = self.particles.iter().map(|p| p.weight).collect();
        let l = weights.len();
        if l == 0 || effective_sample_size(&weights) >= self.params.ess_fraction * l as f64 {
            return false;
        }
        let idx = systematic_indices(&weights, rng.random::<f64>());
        self.particles = idx
            .into_iter()
            .map(|i| Particle {
                weight: 1.0 / l as f64,
                ..self.particles[i].clone()
            })
            .collect();
        true
    }

    /// Weighted superstate histogram of the current particles.
    pub fn regime_posterior(&self, n_states: usize) -> Vec<f64> {
        let mut out = vec![0.0; n_states];
        for p in &self.particles {
            out[p.superstate] += p.weight;
        }
        out
    }

    /// Moment-matched Gaussian of the particle mixture.
    pub fn collapsed(&self) -> Gaussian {
        collapse(&self.particles)
    }
}
