//! Active-inference PRB selection.
//!
//! The agent keeps three row-stochastic N×N tables: its own PRB transition
//! habits, a model of jammer transitions, and state-conditioned action
//! probabilities. Each slot it picks the PRB maximizing action probability
//! times predicted jammer absence. After observing, the perception filter
//! decides whether the slot was abnormal. Abnormal slots push probability
//! away from the chosen PRB in proportion to the surprise. Clean slots
//! record the transition as a habit, which breaks ties among equally good
//! PRBs on later visits.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::abnormality::{
    bhattacharyya_abnormality, discrete_generalized_error, skl_abnormality, AbnormalitySignal, Detector,
    GeneralizedErrorDiscrete, SklReading,
};
use crate::environment::PrbIndex;
use crate::filter::{FilterParams, MessagePair, Mmjpf};
use crate::offline_learning::LearnedModel;
use crate::signal::GeneralizedState;

/// Relative tolerance for treating two scores as tied.
const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AgentError {
    #[error("need at least {needed} PRBs, got {got}")]
    TooFewPrbs { needed: usize, got: usize },
}

/// Square row-stochastic matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StochasticMatrix {
    n: usize,
    data: Vec<f64>,
}

impl StochasticMatrix {
    pub fn uniform(n: usize) -> Self {
        Self {
            n,
            data: vec![1.0 / n as f64; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.n)
    }

    /// Column means: the row-marginal prediction.
    pub fn column_means(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for row in self.rows() {
            for (o, p) in out.iter_mut().zip(row) {
                *o += p / self.n as f64;
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Clamps entries to `[floor, 1]` and rescales to unit sum.
pub fn project_row(row: &mut [f64], floor: f64) {
    for p in row.iter_mut() {
        *p = if p.is_nan() { floor } else { p.clamp(floor, 1.0) };
    }
    let total: f64 = row.iter().sum();
    if total > 0.0 {
        row.iter_mut().for_each(|p| *p /= total);
    } else {
        let u = 1.0 / row.len() as f64;
        row.iter_mut().for_each(|p| *p = u);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeliefTables {
    pub p_uav: StochasticMatrix,
    pub p_jam: StochasticMatrix,
    pub ain_table: StochasticMatrix,
}

pub fn init_tables(n: usize) -> Result<BeliefTables, AgentError> {
    if n < 2 {
        return Err(AgentError::TooFewPrbs { needed: 2, got: n });
    }
    Ok(BeliefTables {
        p_uav: StochasticMatrix::uniform(n),
        p_jam: StochasticMatrix::uniform(n),
        ain_table: StochasticMatrix::uniform(n),
    })
}

/// Predicted jammer occupancy: the jammer-model row of the last PRB where a
/// collision was detected, or the row marginal before any collision.
pub fn predicted_occupancy(tables: &BeliefTables, last_collision: Option<PrbIndex>) -> Vec<f64> {
    match last_collision {
        Some(prb) => tables.p_jam.row(prb.index()).to_vec(),
        None => tables.p_jam.column_means(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieBreak {
    Uniform,
    /// Prefer the PRB most often reached cleanly from the current one.
    #[default]
    Habit,
}

fn maximizers(values: impl Iterator<Item = (usize, f64)>) -> Vec<usize> {
    let items: Vec<(usize, f64)> = values.collect();
    let max = items.iter().map(|x| x.1).fold(f64::NEG_INFINITY, f64::max);
    items
        .into_iter()
        .filter(|&(_, v)| v >= max - max.abs() * TIE_TOLERANCE)
        .map(|(i, _)| i)
        .collect()
}

/// Argmax of `ain_table[prev] · (1 − occupancy)`, ties broken by habit then uniformly.
pub fn select_action<R: Rng + ?Sized>(
    tables: &BeliefTables,
    prev: PrbIndex,
    occupancy: &[f64],
    tie_break: TieBreak,
    rng: &mut R,
) -> PrbIndex {
    let row = tables.ain_table.row(prev.index());
    let mut best = maximizers(row.iter().zip(occupancy).map(|(p, o)| p * (1.0 - o)).enumerate());
    if tie_break == TieBreak::Habit && best.len() > 1 {
        let habit = tables.p_uav.row(prev.index());
        best = maximizers(best.iter().map(|&i| (i, habit[i])));
    }
    PrbIndex::from_index(best[rng.random_range(0..best.len())])
}

/// Largest update magnitude that keeps every entry of `row` inside [0, 1].
pub fn gamma_headroom(row: &[f64], chosen: PrbIndex) -> f64 {
    let n = row.len();
    let others_max = row
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != chosen.index())
        .map(|(_, p)| *p)
        .fold(0.0, f64::max);
    row[chosen.index()].min((n - 1) as f64 * (1.0 - others_max)).max(0.0)
}

/// Update magnitude proportional to the discrete surprise, capped by headroom.
pub fn gamma_star(kappa: f64, skl: f64, headroom: f64) -> f64 {
    (kappa * skl).clamp(0.0, headroom)
}

/// Diagnostic action message: the current action row with the chosen entry
/// lowered by γ and the others raised by γ/(N−1) when abnormal.
pub fn lambda_action(tables: &BeliefTables, state: PrbIndex, chosen: PrbIndex, gamma: f64, abnormal: bool) -> Vec<f64> {
    let mut row = tables.ain_table.row(state.index()).to_vec();
    if !abnormal || gamma == 0.0 {
        return row;
    }
    let n = row.len();
    let spread = gamma / (n - 1) as f64;
    for (i, p) in row.iter_mut().enumerate() {
        if i == chosen.index() {
            *p -= gamma;
        } else {
            *p += spread;
        }
    }
    if row.iter().any(|p| !(0.0..=1.0).contains(p)) {
        log::debug!("action message left [0, 1]; clipped");
        project_row(&mut row, 0.0);
    }
    row
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ActionError {
    pub anchor: PrbIndex,
    pub delta: Vec<f64>,
}

/// `λ(a) − π(a)` against the action row of `state`.
pub fn action_error(tables: &BeliefTables, state: PrbIndex, lambda: &[f64], chosen: PrbIndex) -> ActionError {
    let prior = tables.ain_table.row(state.index());
    ActionError {
        anchor: chosen,
        delta: lambda.iter().zip(prior).map(|(l, p)| l - p).collect(),
    }
}

/// Applies the jammer-model, action and transition corrections of one
/// abnormal slot. Every touched row is clipped and renormalized.
pub fn apply_updates(
    tables: &mut BeliefTables,
    action_err: &ActionError,
    superstate_err: &GeneralizedErrorDiscrete,
    from: PrbIndex,
    to: PrbIndex,
    action_floor: f64,
) {
    let chosen = action_err.anchor;
    if action_err.delta.iter().all(|d| *d == 0.0) {
        return update_habit_only(tables, superstate_err, from, to, action_floor);
    }
    let jam = tables.p_jam.row_mut(chosen.index());
    for (p, d) in jam.iter_mut().zip(&action_err.delta) {
        *p -= d;
    }
    project_row(jam, 0.0);

    let ain = tables.ain_table.row_mut(from.index());
    for (p, d) in ain.iter_mut().zip(&action_err.delta) {
        *p += d;
    }
    project_row(ain, action_floor);
    update_habit_only(tables, superstate_err, from, to, action_floor);
}

fn update_habit_only(
    tables: &mut BeliefTables,
    superstate_err: &GeneralizedErrorDiscrete,
    from: PrbIndex,
    to: PrbIndex,
    action_floor: f64,
) {
    let shift = superstate_err.magnitude();
    if shift > 0.0 {
        let row = tables.p_uav.row_mut(from.index());
        row[to.index()] -= shift;
        project_row(row, action_floor);
    }
}

/// Records a clean `from → to` transition as a habit; with `symmetric`, also
/// `to → from`.
pub fn reinforce_transition(tables: &mut BeliefTables, from: PrbIndex, to: PrbIndex, rate: f64, symmetric: bool) {
    let mut pull = |a: PrbIndex, b: PrbIndex| {
        let row = tables.p_uav.row_mut(a.index());
        for p in row.iter_mut() {
            *p *= 1.0 - rate;
        }
        row[b.index()] += rate;
        project_row(row, 0.0);
    };
    pull(from, to);
    if symmetric && from != to {
        pull(to, from);
    }
}

/// What a policy learns after acting in one slot.
#[derive(Debug, Clone, PartialEq)]
pub struct Feedback {
    pub observation: GeneralizedState,
    /// +1 under H0, −1 under H1. Only reward-driven baselines read it.
    pub reward: f64,
}

pub trait Policy: Send {
    fn label(&self) -> &str;
    fn select(&mut self) -> PrbIndex;
    fn observe(&mut self, feedback: &Feedback);
    /// Surprise measured by the policy itself, when it has a perception model.
    fn abnormality(&self) -> Option<AbnormalitySignal> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PerceptionParams {
    pub skl_reading: SklReading,
    /// Keep the predicted state on abnormal slots instead of absorbing the observation.
    pub skip_update_on_abnormal: bool,
    /// Consecutive observations that may be discarded before the filter is
    /// forced to absorb one again; keeps a false alarm from starving it.
    pub max_consecutive_skips: usize,
}

impl Default for PerceptionParams {
    fn default() -> Self {
        Self {
            skl_reading: SklReading::AsWritten,
            skip_update_on_abnormal: true,
            max_consecutive_skips: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Percept {
    pub signal: AbnormalitySignal,
    /// Absent on the slot that initializes the filter.
    pub messages: Option<MessagePair>,
}

/// The learned model, a filter over it, and the abnormality decision.
pub struct Perception {
    model: Arc<LearnedModel>,
    filter: Mmjpf,
    detector: Detector,
    params: PerceptionParams,
    current: Option<PrbIndex>,
    skipped: usize,
    slot: usize,
    horizon: usize,
    rng: ChaCha8Rng,
}

impl Perception {
    pub fn new(model: Arc<LearnedModel>, filter: FilterParams, params: PerceptionParams, horizon: usize, rng: ChaCha8Rng) -> Self {
        let detector = Detector {
            statistic: model.statistic,
        };
        Self {
            model,
            filter: Mmjpf::new(filter),
            detector,
            params,
            current: None,
            skipped: 0,
            slot: 0,
            horizon: horizon.max(1),
            rng,
        }
    }

    pub fn filter(&self) -> &Mmjpf {
        &self.filter
    }

    fn segment(&self, prb: PrbIndex) -> usize {
        let n_seg = self.model.prb(prb).transitions.segments.len();
        (self.slot * n_seg / self.horizon).min(n_seg - 1)
    }

    /// Filters `z` received on `prb`, thresholding with `threshold` when
    /// given and the PRB's calibrated threshold otherwise.
    pub fn perceive_with(&mut self, prb: PrbIndex, z: &GeneralizedState, threshold: Option<f64>) -> Percept {
        let model = Arc::clone(&self.model);
        let pm = model.prb(prb);
        let percept = if !self.filter.is_initialized() {
            self.filter.initialize(pm, &model.matrices, &z.0, &mut self.rng);
            Percept {
                signal: AbnormalitySignal::default(),
                messages: None,
            }
        } else {
            if let Some(prev) = self.current.filter(|&p| p != prb) {
                self.filter.remap(model.prb(prev), pm);
            }
            let segment = self.segment(prb);
            self.filter.predict(pm, &model.matrices, segment, &mut self.rng);
            let out = self.filter.update(pm, &model.matrices, &z.0);
            let m = &out.messages;
            let skl = skl_abnormality(&m.discrete_pi, &m.discrete_lambda, &m.occurrence, self.params.skl_reading)
                .expect("messages share the superstate support");
            let bhatt = bhattacharyya_abnormality(&m.cont_pi, &m.cont_lambda);
            let signal = self.detector.assess(skl, bhatt, threshold.unwrap_or(pm.threshold));
            if signal.is_abnormal && self.params.skip_update_on_abnormal && self.skipped < self.params.max_consecutive_skips {
                self.filter.revert_update();
                self.skipped += 1;
            } else {
                self.skipped = 0;
            }
            self.filter.resample(&mut self.rng);
            Percept {
                signal,
                messages: Some(out.messages),
            }
        };
        self.current = Some(prb);
        self.slot += 1;
        percept
    }

    pub fn perceive(&mut self, prb: PrbIndex, z: &GeneralizedState) -> Percept {
        self.perceive_with(prb, z, None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AinParams {
    /// Update magnitude per unit of discrete surprise.
    pub kappa: f64,
    /// Lower bound on action-table entries.
    pub action_floor: f64,
    /// Step size of the clean-transition habit.
    pub habit_rate: f64,
    pub symmetric_habit: bool,
    pub tie_break: TieBreak,
    pub perception: PerceptionParams,
}

impl Default for AinParams {
    fn default() -> Self {
        Self {
            kappa: 0.1,
            action_floor: 1e-4,
            habit_rate: 0.5,
            symmetric_habit: true,
            tie_break: TieBreak::Habit,
            perception: PerceptionParams::default(),
        }
    }
}

pub struct AinAgent {
    params: AinParams,
    tables: BeliefTables,
    perception: Perception,
    prev: Option<PrbIndex>,
    chosen: Option<PrbIndex>,
    last_collision: Option<PrbIndex>,
    last_signal: Option<AbnormalitySignal>,
    rng: ChaCha8Rng,
}

impl AinAgent {
    pub fn new(
        model: Arc<LearnedModel>,
        params: AinParams,
        filter: FilterParams,
        horizon: usize,
        rng: ChaCha8Rng,
        filter_rng: ChaCha8Rng,
    ) -> Result<Self, AgentError> {
        let tables = init_tables(model.n_prbs)?;
        Ok(Self {
            perception: Perception::new(model, filter, params.perception, horizon, filter_rng),
            params,
            tables,
            prev: None,
            chosen: None,
            last_collision: None,
            last_signal: None,
            rng,
        })
    }

    pub fn tables(&self) -> &BeliefTables {
        &self.tables
    }

    pub fn perception(&self) -> &Perception {
        &self.perception
    }
}

impl Policy for AinAgent {
    fn label(&self) -> &str {
        "ain"
    }

    fn select(&mut self) -> PrbIndex {
        let n = self.tables.ain_table.n();
        let a = match self.prev {
            None => PrbIndex::from_index(self.rng.random_range(0..n)),
            Some(s) => {
                let occupancy = predicted_occupancy(&self.tables, self.last_collision);
                select_action(&self.tables, s, &occupancy, self.params.tie_break, &mut self.rng)
            }
        };
        self.chosen = Some(a);
        a
    }

    fn observe(&mut self, feedback: &Feedback) {
        let a = self.chosen.take().expect("select before observe");
        let percept = self.perception.perceive(a, &feedback.observation);
        self.last_signal = Some(percept.signal);
        if let (Some(s), Some(msgs)) = (self.prev, percept.messages.as_ref()) {
            if percept.signal.is_abnormal {
                let row = self.tables.ain_table.row(s.index());
                let gamma = gamma_star(self.params.kappa, percept.signal.skl, gamma_headroom(row, a));
                let lambda = lambda_action(&self.tables, s, a, gamma, true);
                let err = action_error(&self.tables, s, &lambda, a);
                let anchor = msgs
                    .discrete_pi
                    .iter()
                    .enumerate()
                    .max_by(|x, y| x.1.total_cmp(y.1))
                    .map_or(0, |(i, _)| i);
                let ss = discrete_generalized_error(&msgs.discrete_pi, &msgs.discrete_lambda, anchor)
                    .expect("messages share the superstate support");
                apply_updates(&mut self.tables, &err, &ss, s, a, self.params.action_floor);
                self.last_collision = Some(a);
            } else {
                reinforce_transition(&mut self.tables, s, a, self.params.habit_rate, self.params.symmetric_habit);
            }
        }
        self.prev = Some(a);
    }

    fn abnormality(&self) -> Option<AbnormalitySignal> {
        self.last_signal
    }
}
