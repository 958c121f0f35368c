//! Offline model of the clean C2 signal on each PRB.
//!
//! Observations from a jammer-free episode are turned into generalized
//! errors against a null-force predictor, clustered with Growing Neural Gas
//! into superstates, and the label sequence gives Laplace-smoothed
//! superstate transition matrices.

use std::path::Path;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::environment::PrbIndex;
use crate::signal::{GdbnMatrices, Mat4, SignalError, Vec4};

pub const MODEL_VERSION: u32 = 1;
pub const COV_REGULARIZATION: f64 = 1e-6;

#[derive(Debug, thiserror::Error)]
pub enum LearnError {
    #[error(transparent)]
    Model(#[from] SignalError),
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("observation and prediction sequences differ in length ({0} vs {1})")]
    Misaligned(usize, usize),
    #[error("invalid hyperparameters: {0}")]
    InvalidParams(String),
    #[error("invalid model file: {0}")]
    InvalidModel(String),
    #[error("model file i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("model file format: {0}")]
    Format(#[from] serde_json::Error),
}

/// A generalized error with the predicted state it was measured against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorSample {
    pub state: Vec4,
    pub error: Vec4,
}

/// Null-force predictions `A H⁻¹ z[t-1]` for `t = 1..len`.
pub fn null_force_predictions(observations: &[Vec4], matrices: &GdbnMatrices) -> Result<Vec<Vec4>, LearnError> {
    let h_inv = matrices.h_inverse()?;
    Ok(observations
        .windows(2)
        .map(|w| matrices.a * (h_inv * w[0]))
        .collect())
}

/// `H⁻¹ (z − H x̂)` per aligned pair.
pub fn generalized_errors(observations: &[Vec4], predictions: &[Vec4], h: &Mat4) -> Result<Vec<ErrorSample>, LearnError> {
    if observations.len() != predictions.len() {
        return Err(LearnError::Misaligned(observations.len(), predictions.len()));
    }
    let h_inv = h
        .try_inverse()
        .ok_or_else(|| SignalError::InvalidMatrices("observation map is singular".into()))?;
    Ok(observations
        .iter()
        .zip(predictions)
        .map(|(z, x)| ErrorSample {
            state: *x,
            error: h_inv * (z - h * x),
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GngParams {
    pub max_nodes: usize,
    /// Steps between node insertions.
    pub insert_every: usize,
    pub eps_winner: f64,
    pub eps_neighbor: f64,
    pub max_edge_age: u32,
    /// Error scaling of the two nodes split by an insertion.
    pub split_decay: f64,
    /// Per-step decay of every node's accumulated error.
    pub global_decay: f64,
    /// Passes over the data.
    pub epochs: usize,
}

impl Default for GngParams {
    fn default() -> Self {
        Self {
            max_nodes: 10,
            insert_every: 100,
            eps_winner: 0.2,
            eps_neighbor: 0.006,
            max_edge_age: 50,
            split_decay: 0.5,
            global_decay: 0.995,
            epochs: 5,
        }
    }
}

impl GngParams {
    pub fn validate(&self) -> Result<(), LearnError> {
        let rates_ok = (0.0..=1.0).contains(&self.eps_winner)
            && (0.0..=1.0).contains(&self.eps_neighbor)
            && (0.0..=1.0).contains(&self.split_decay)
            && (0.0..=1.0).contains(&self.global_decay);
        if self.max_nodes < 1 || self.insert_every < 1 || self.epochs < 1 || !rates_ok {
            return Err(LearnError::InvalidParams(format!("{self:?}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Superstate {
    /// Dense 1-based id within its PRB.
    pub id: usize,
    pub mean: Vec4,
    pub cov: Mat4,
}

struct Gng {
    nodes: Vec<Vec4>,
    error: Vec<f64>,
    /// (a, b, age) with a < b.
    edges: Vec<(usize, usize, u32)>,
}

impl Gng {
    fn nearest_two(&self, x: &Vec4) -> (usize, usize) {
        let mut best = (usize::MAX, f64::INFINITY);
        let mut second = (usize::MAX, f64::INFINITY);
        for (i, w) in self.nodes.iter().enumerate() {
            let d = (w - x).norm_squared();
            if d < best.1 {
                second = best;
                best = (i, d);
            } else if d < second.1 {
                second = (i, d);
            }
        }
        (best.0, second.0)
    }

    fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b, _)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    fn connect(&mut self, i: usize, j: usize) {
        let (a, b) = (i.min(j), i.max(j));
        match self.edges.iter_mut().find(|e| e.0 == a && e.1 == b) {
            Some(e) => e.2 = 0,
            None => self.edges.push((a, b, 0)),
        }
    }

    fn disconnect(&mut self, i: usize, j: usize) {
        let (a, b) = (i.min(j), i.max(j));
        self.edges.retain(|e| !(e.0 == a && e.1 == b));
    }

    fn prune(&mut self, max_age: u32) {
        self.edges.retain(|e| e.2 <= max_age);
        let mut keep: Vec<bool> = vec![false; self.nodes.len()];
        for &(a, b, _) in &self.edges {
            keep[a] = true;
            keep[b] = true;
        }
        if keep.iter().all(|&k| k) {
            return;
        }
        let mut remap = vec![usize::MAX; self.nodes.len()];
        let mut next = 0;
        for (i, &k) in keep.iter().enumerate() {
            if k {
                remap[i] = next;
                next += 1;
            }
        }
        let mut i = 0;
        self.nodes.retain(|_| {
            i += 1;
            keep[i - 1]
        });
        let mut i = 0;
        self.error.retain(|_| {
            i += 1;
            keep[i - 1]
        });
        for e in &mut self.edges {
            e.0 = remap[e.0];
            e.1 = remap[e.1];
        }
    }

    fn insert(&mut self, p: &GngParams) {
        let q = argmax(&self.error);
        let Some(f) = self
            .neighbors(q)
            .into_iter()
            .max_by(|&a, &b| self.error[a].total_cmp(&self.error[b]))
        else {
            return;
        };
        let r = self.nodes.len();
        self.nodes.push((self.nodes[q] + self.nodes[f]) * 0.5);
        self.disconnect(q, f);
        self.connect(q, r);
        self.connect(r, f);
        self.error[q] *= p.split_decay;
        self.error[f] *= p.split_decay;
        self.error.push(self.error[q]);
    }
}

fn argmax(xs: &[f64]) -> usize {
    let mut best = 0;
    for (i, x) in xs.iter().enumerate() {
        if *x > xs[best] {
            best = i;
        }
    }
    best
}

/// Index of the nearest mean; ties go to the lowest index.
pub fn nearest(x: &Vec4, means: impl IntoIterator<Item = Vec4>) -> usize {
    let mut best = (0, f64::INFINITY);
    for (i, m) in means.into_iter().enumerate() {
        let d = (m - x).norm_squared();
        if d < best.1 {
            best = (i, d);
        }
    }
    best.0
}

/// Growing Neural Gas over the samples; every node that wins at least one
/// sample becomes a superstate.
pub fn gng_fit<R: Rng + ?Sized>(samples: &[Vec4], params: &GngParams, rng: &mut R) -> Result<Vec<Superstate>, LearnError> {
    params.validate()?;
    if samples.len() < 2 {
        return Err(LearnError::TooFewSamples {
            needed: 2,
            got: samples.len(),
        });
    }
    let first = rand::seq::index::sample(rng, samples.len(), 2);
    let mut g = Gng {
        nodes: vec![samples[first.index(0)], samples[first.index(1)]],
        error: vec![0.0; 2],
        edges: Vec::new(),
    };
    let mut order: Vec<usize> = (0..samples.len()).collect();
    let mut step = 0usize;
    for _ in 0..params.epochs {
        order.shuffle(rng);
        for &k in &order {
            step += 1;
            let x = &samples[k];
            let (s1, s2) = g.nearest_two(x);
            for e in g.edges.iter_mut().filter(|e| e.0 == s1 || e.1 == s1) {
                e.2 += 1;
            }
            g.error[s1] += (g.nodes[s1] - x).norm_squared();
            let w = g.nodes[s1];
            g.nodes[s1] = w + (x - w) * params.eps_winner;
            for n in g.neighbors(s1) {
                let w = g.nodes[n];
                g.nodes[n] = w + (x - w) * params.eps_neighbor;
            }
            g.connect(s1, s2);
            g.prune(params.max_edge_age);
            if step % params.insert_every == 0 && g.nodes.len() < params.max_nodes {
                g.insert(params);
            }
            for e in &mut g.error {
                *e *= params.global_decay;
            }
        }
    }

    let labels: Vec<usize> = samples.iter().map(|x| nearest(x, g.nodes.iter().copied())).collect();
    let mut out = Vec::new();
    for (i, w) in g.nodes.iter().enumerate() {
        let members: Vec<&Vec4> = samples.iter().zip(&labels).filter(|(_, &l)| l == i).map(|(x, _)| x).collect();
        if members.is_empty() {
            continue;
        }
        out.push(Superstate {
            id: out.len() + 1,
            mean: *w,
            cov: sample_covariance(&members) + Mat4::identity() * COV_REGULARIZATION,
        });
    }
    Ok(out)
}

fn sample_covariance(xs: &[&Vec4]) -> Mat4 {
    let n = xs.len() as f64;
    let mean = xs.iter().fold(Vec4::zeros(), |acc, x| acc + *x) / n;
    xs.iter()
        .fold(Mat4::zeros(), |acc, x| acc + (*x - mean) * (*x - mean).transpose())
        / n
}

/// Zero-based label of each error sample under the given superstates.
pub fn assign(errors: &[Vec4], superstates: &[Superstate]) -> Vec<usize> {
    errors
        .iter()
        .map(|e| nearest(e, superstates.iter().map(|s| s.mean)))
        .collect()
}

/// Row-stochastic superstate transition matrices, one per time segment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuperstateTransitions {
    pub segments: Vec<Vec<Vec<f64>>>,
}

impl SuperstateTransitions {
    pub fn n_states(&self) -> usize {
        self.segments.first().map_or(0, |s| s.len())
    }

    pub fn row(&self, segment: usize, from: usize) -> &[f64] {
        &self.segments[segment.min(self.segments.len() - 1)][from]
    }

    pub fn validate(&self) -> Result<(), LearnError> {
        let m = self.n_states();
        if self.segments.is_empty() || m == 0 {
            return Err(LearnError::InvalidModel("empty transition matrix".into()));
        }
        for seg in &self.segments {
            if seg.len() != m {
                return Err(LearnError::InvalidModel("ragged transition matrix".into()));
            }
            for row in seg {
                let sum: f64 = row.iter().sum();
                if row.len() != m || (sum - 1.0).abs() > 1e-9 || row.iter().any(|p| !(0.0..=1.0).contains(p)) {
                    return Err(LearnError::InvalidModel(format!("row {row:?} is not a simplex")));
                }
            }
        }
        Ok(())
    }
}

/// Bigram counts over `labels` with `smoothing` added to every cell, split
/// into `n_segments` equal blocks. A row with no mass is uniform.
pub fn estimate_transitions(
    labels: &[usize],
    n_states: usize,
    n_segments: usize,
    smoothing: f64,
) -> Result<SuperstateTransitions, LearnError> {
    if labels.len() < 2 {
        return Err(LearnError::TooFewSamples {
            needed: 2,
            got: labels.len(),
        });
    }
    if n_segments == 0 || n_states == 0 || smoothing < 0.0 || labels.iter().any(|&l| l >= n_states) {
        return Err(LearnError::InvalidParams(format!(
            "n_states {n_states}, n_segments {n_segments}, smoothing {smoothing}"
        )));
    }
    let n_pairs = labels.len() - 1;
    let mut counts = vec![vec![vec![smoothing; n_states]; n_states]; n_segments];
    for t in 0..n_pairs {
        let seg = t * n_segments / n_pairs;
        counts[seg][labels[t]][labels[t + 1]] += 1.0;
    }
    for seg in &mut counts {
        for row in seg.iter_mut() {
            let total: f64 = row.iter().sum();
            if total > 0.0 {
                row.iter_mut().for_each(|c| *c /= total);
            } else {
                row.iter_mut().for_each(|c| *c = 1.0 / n_states as f64);
            }
        }
    }
    Ok(SuperstateTransitions { segments: counts })
}

/// Learned clean-signal model of one PRB.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrbModel {
    pub prb: PrbIndex,
    pub superstates: Vec<Superstate>,
    pub transitions: SuperstateTransitions,
    /// Empirical superstate frequencies, used to seed the filter.
    pub occupancy: Vec<f64>,
    /// Abnormality threshold for the configured decision statistic.
    pub threshold: f64,
}

impl PrbModel {
    pub fn n_states(&self) -> usize {
        self.superstates.len()
    }

    pub fn validate(&self) -> Result<(), LearnError> {
        let m = self.superstates.len();
        if m == 0 {
            return Err(LearnError::InvalidModel(format!("{} has no superstates", self.prb)));
        }
        for (i, s) in self.superstates.iter().enumerate() {
            if s.id != i + 1 {
                return Err(LearnError::InvalidModel(format!("{}: superstate ids are not dense", self.prb)));
            }
            if s.cov.cholesky().is_none() {
                return Err(LearnError::InvalidModel(format!("{}: covariance {} not SPD", self.prb, s.id)));
            }
        }
        self.transitions.validate()?;
        if self.transitions.n_states() != m || self.occupancy.len() != m {
            return Err(LearnError::InvalidModel(format!("{}: dimension mismatch", self.prb)));
        }
        if !(self.threshold >= 0.0) {
            return Err(LearnError::InvalidModel(format!("{}: threshold must be >= 0", self.prb)));
        }
        Ok(())
    }
}

/// Fits superstates and transitions for one PRB from a clean observation run.
pub fn fit_prb_model<R: Rng + ?Sized>(
    prb: PrbIndex,
    observations: &[Vec4],
    matrices: &GdbnMatrices,
    gng: &GngParams,
    n_segments: usize,
    smoothing: f64,
    rng: &mut R,
) -> Result<PrbModel, LearnError> {
    let predictions = null_force_predictions(observations, matrices)?;
    let samples = generalized_errors(&observations[1..], &predictions, &matrices.h)?;
    let errors: Vec<Vec4> = samples.iter().map(|s| s.error).collect();
    let superstates = gng_fit(&errors, gng, rng)?;
    let labels = assign(&errors, &superstates);
    let m = superstates.len();
    let transitions = estimate_transitions(&labels, m, n_segments, smoothing)?;
    let mut occupancy = vec![0.0; m];
    for &l in &labels {
        occupancy[l] += 1.0 / labels.len() as f64;
    }
    let total: f64 = occupancy.iter().sum();
    occupancy.iter_mut().for_each(|p| *p /= total);
    Ok(PrbModel {
        prb,
        superstates,
        transitions,
        occupancy,
        threshold: 0.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionStatistic {
    Skl,
    Bhattacharyya,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LearnedModel {
    pub version: u32,
    pub n_prbs: usize,
    pub statistic: DecisionStatistic,
    pub matrices: GdbnMatrices,
    pub prbs: Vec<PrbModel>,
}

impl LearnedModel {
    pub fn prb(&self, prb: PrbIndex) -> &PrbModel {
        &self.prbs[prb.index()]
    }

    pub fn validate(&self) -> Result<(), LearnError> {
        if self.version != MODEL_VERSION {
            return Err(LearnError::InvalidModel(format!(
                "version {} unsupported (expected {MODEL_VERSION})",
                self.version
            )));
        }
        if self.prbs.len() != self.n_prbs {
            return Err(LearnError::InvalidModel(format!(
                "{} PRB models for {} PRBs",
                self.prbs.len(),
                self.n_prbs
            )));
        }
        self.matrices.validate()?;
        for (i, p) in self.prbs.iter().enumerate() {
            if p.prb.index() != i {
                return Err(LearnError::InvalidModel(format!("PRB models out of order at {i}")));
            }
            p.validate()?;
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<(), LearnError> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, serde_json::to_string(self)?)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, LearnError> {
        let model: Self = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        model.validate()?;
        Ok(model)
    }
}
