//! Surprise measures between predictive and diagnostic messages.

use serde::{Deserialize, Serialize};

use crate::filter::{make_spd, Gaussian};
use crate::signal::Vec4;

pub const PROB_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AbnormalitySignal {
    pub skl: f64,
    pub bhatt: f64,
    pub is_abnormal: bool,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AbnormalityError {
    #[error("distributions have different supports ({0} vs {1})")]
    SupportMismatch(usize, usize),
}

/// How occurrence weights combine with the divergence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SklReading {
    /// Full-distribution divergence weighted by the total occurrence mass of the winning set.
    #[default]
    AsWritten,
    /// Each superstate's own divergence term weighted by its occurrence.
    PerComponent,
}

fn sym_term(p: f64, q: f64) -> f64 {
    let (p, q) = (p.max(PROB_FLOOR), q.max(PROB_FLOOR));
    (p - q) * (p.ln() - q.ln())
}

/// `KL(p‖q) + KL(q‖p)` with both sides floored before the logs.
pub fn symmetric_kl(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).map(|(&a, &b)| sym_term(a, b)).sum()
}

pub fn skl_abnormality(pi: &[f64], lambda: &[f64], occurrence: &[f64], reading: SklReading) -> Result<f64, AbnormalityError> {
    if pi.len() != lambda.len() || pi.len() != occurrence.len() {
        return Err(AbnormalityError::SupportMismatch(pi.len(), lambda.len()));
    }
    let winning = occurrence.iter().enumerate().filter(|(_, &w)| w > 0.0);
    Ok(match reading {
        SklReading::AsWritten => {
            let mass: f64 = winning.map(|(_, w)| w).sum();
            mass * symmetric_kl(pi, lambda)
        }
        SklReading::PerComponent => winning.map(|(i, w)| w * sym_term(pi[i], lambda[i])).sum(),
    })
}

/// Bhattacharyya distance `-ln BC` between two Gaussians.
pub fn bhattacharyya_abnormality(a: &Gaussian, b: &Gaussian) -> f64 {
    let avg = (a.cov + b.cov) * 0.5;
    let chol = match avg.cholesky() {
        Some(c) => c,
        None => make_spd(&avg).cholesky().expect("floored covariance factors"),
    };
    let d: Vec4 = a.mean - b.mean;
    let quad = d.dot(&chol.solve(&d));
    let log_det_avg = log_det(&avg);
    let dist = quad / 8.0 + 0.5 * (log_det_avg - 0.5 * (log_det(&a.cov) + log_det(&b.cov)));
    dist.max(0.0)
}

fn log_det(m: &crate::signal::Mat4) -> f64 {
    let chol = match m.cholesky() {
        Some(c) => c,
        None => make_spd(m).cholesky().expect("floored covariance factors"),
    };
    let l = chol.l_dirty();
    2.0 * (0..4).map(|i| l[(i, i)].ln()).sum::<f64>()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedErrorDiscrete {
    /// Zero-based superstate the error is attached to.
    pub anchor: usize,
    pub delta: Vec<f64>,
}

impl GeneralizedErrorDiscrete {
    /// Total-variation size of the error.
    pub fn magnitude(&self) -> f64 {
        0.5 * self.delta.iter().map(|d| d.abs()).sum::<f64>()
    }
}

/// `λ − π`, attached to `anchor`.
pub fn discrete_generalized_error(pi: &[f64], lambda: &[f64], anchor: usize) -> Result<GeneralizedErrorDiscrete, AbnormalityError> {
    if pi.len() != lambda.len() {
        return Err(AbnormalityError::SupportMismatch(pi.len(), lambda.len()));
    }
    Ok(GeneralizedErrorDiscrete {
        anchor,
        delta: lambda.iter().zip(pi).map(|(l, p)| l - p).collect(),
    })
}

/// Thresholded decision on one of the two indicators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detector {
    pub statistic: crate::offline_learning::DecisionStatistic,
}

impl Detector {
    pub fn statistic_value(&self, skl: f64, bhatt: f64) -> f64 {
        match self.statistic {
            crate::offline_learning::DecisionStatistic::Skl => skl,
            crate::offline_learning::DecisionStatistic::Bhattacharyya => bhatt,
        }
    }

    pub fn assess(&self, skl: f64, bhatt: f64, threshold: f64) -> AbnormalitySignal {
        AbnormalitySignal {
            skl,
            bhatt,
            is_abnormal: self.statistic_value(skl, bhatt) >= threshold,
        }
    }
}
