//! Comparison policies: uniform frequency hopping and tabular Q-learning.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::agent::{Feedback, Policy};
use crate::environment::PrbIndex;

pub fn fh_select<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PrbIndex {
    PrbIndex::from_index(rng.random_range(0..n))
}

pub struct FhAgent {
    n: usize,
    rng: ChaCha8Rng,
}

impl FhAgent {
    pub fn new(n: usize, rng: ChaCha8Rng) -> Self {
        Self { n, rng }
    }
}

impl Policy for FhAgent {
    fn label(&self) -> &str {
        "fh"
    }

    fn select(&mut self) -> PrbIndex {
        fh_select(self.n, &mut self.rng)
    }

    fn observe(&mut self, _feedback: &Feedback) {}
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QlParams {
    pub alpha_lr: f64,
    pub gamma_disc: f64,
    /// ε_t = max(epsilon_min, epsilon_decay^t).
    pub epsilon_decay: f64,
    pub epsilon_min: f64,
}

impl Default for QlParams {
    fn default() -> Self {
        Self {
            alpha_lr: 0.1,
            gamma_disc: 0.9,
            epsilon_decay: 0.995,
            epsilon_min: 0.01,
        }
    }
}

impl QlParams {
    pub fn epsilon(&self, t: usize) -> f64 {
        self.epsilon_decay.powi(t.min(i32::MAX as usize) as i32).max(self.epsilon_min)
    }
}

/// Q(s, a) over (current PRB, next PRB).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QTable {
    n: usize,
    q: Vec<f64>,
    pub epsilon: f64,
    pub alpha_lr: f64,
    pub gamma_disc: f64,
}

impl QTable {
    pub fn zeros(n: usize, alpha_lr: f64, gamma_disc: f64) -> Self {
        Self {
            n,
            q: vec![0.0; n * n],
            epsilon: 1.0,
            alpha_lr,
            gamma_disc,
        }
    }

    pub fn get(&self, s: PrbIndex, a: PrbIndex) -> f64 {
        self.q[s.index() * self.n + a.index()]
    }

    pub fn set(&mut self, s: PrbIndex, a: PrbIndex, v: f64) {
        self.q[s.index() * self.n + a.index()] = v;
    }

    fn row(&self, s: PrbIndex) -> &[f64] {
        &self.q[s.index() * self.n..(s.index() + 1) * self.n]
    }

    fn row_max(&self, s: PrbIndex) -> f64 {
        self.row(s).iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// ε-greedy action in row `s`, ties broken uniformly.
    pub fn q_step<R: Rng + ?Sized>(&self, s: PrbIndex, rng: &mut R) -> PrbIndex {
        if rng.random::<f64>() < self.epsilon {
            return fh_select(self.n, rng);
        }
        let max = self.row_max(s);
        let best: Vec<usize> = self
            .row(s)
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == max)
            .map(|(i, _)| i)
            .collect();
        PrbIndex::from_index(best[rng.random_range(0..best.len())])
    }

    pub fn learn(&mut self, s: PrbIndex, a: PrbIndex, r: f64, next: PrbIndex) {
        let q = self.get(s, a);
        let target = r + self.gamma_disc * self.row_max(next);
        self.set(s, a, q + self.alpha_lr * (target - q));
    }
}

/// Q-learning conditioned on the agent's own previous PRB.
pub struct QlAgent {
    params: QlParams,
    table: QTable,
    state: PrbIndex,
    chosen: Option<PrbIndex>,
    t: usize,
    rng: ChaCha8Rng,
}

impl QlAgent {
    pub fn new(n: usize, params: QlParams, mut rng: ChaCha8Rng) -> Self {
        let state = fh_select(n, &mut rng);
        Self {
            table: QTable::zeros(n, params.alpha_lr, params.gamma_disc),
            params,
            state,
            chosen: None,
            t: 0,
            rng,
        }
    }

    pub fn table(&self) -> &QTable {
        &self.table
    }
}

impl Policy for QlAgent {
    fn label(&self) -> &str {
        "ql"
    }

    fn select(&mut self) -> PrbIndex {
        self.table.epsilon = self.params.epsilon(self.t);
        let a = self.table.q_step(self.state, &mut self.rng);
        self.chosen = Some(a);
        a
    }

    fn observe(&mut self, feedback: &Feedback) {
        let a = self.chosen.take().expect("select before observe");
        self.table.learn(self.state, a, feedback.reward, a);
        self.state = a;
        self.t += 1;
    }
}
