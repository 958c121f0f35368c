use serde::{Deserialize, Serialize};

/// Trailing window and collision rate that define convergence.
pub const CONVERGENCE_WINDOW: usize = 100;
pub const CONVERGENCE_RATE: f64 = 0.02;

/// One CSV line; field order is the column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsRow {
    pub slot: usize,
    pub hypothesis: String,
    pub reward: i32,
    pub abnormality: f64,
    pub sinr_db: f64,
    pub cum_reward: i64,
    pub cum_abnormality: f64,
    /// Running sum of linear SINR.
    pub cum_sinr: f64,
    pub chosen_prb: usize,
    pub jammer_prb: usize,
}

/// One JSONL line of the episode log.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpisodeRecord {
    pub slot: usize,
    pub action: usize,
    pub hypothesis: String,
    pub observation: [f64; 4],
    pub sinr: f64,
    pub jammer_prb: usize,
    pub jammer_transmitted: bool,
    pub skl: f64,
    pub bhatt: f64,
    pub is_abnormal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedSummary {
    pub agent: String,
    pub jammer: String,
    pub seed: u64,
    pub n_slots: usize,
    pub cum_reward: i64,
    pub cum_abnormality: f64,
    pub cum_sinr: f64,
    pub collisions: usize,
    pub flagged: usize,
    pub convergence_slot: usize,
    /// Collision rate over the last 500 slots (or the whole run if shorter).
    pub tail_collision_rate: f64,
}

/// First slot after which every trailing window of `window` slots holds a
/// collision rate below `rate`. Windows that start before slot 0 count the
/// missing slots as clean. Equals the run length when the last window fails.
pub fn convergence_slot(collisions: &[bool], window: usize, rate: f64) -> usize {
    let mut count = 0usize;
    let mut last_bad: Option<usize> = None;
    for (t, &c) in collisions.iter().enumerate() {
        count += c as usize;
        if t >= window {
            count -= collisions[t - window] as usize;
        }
        if count as f64 / window as f64 >= rate {
            last_bad = Some(t);
        }
    }
    last_bad.map_or(0, |t| t + 1)
}
