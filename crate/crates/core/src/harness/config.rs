use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::agent::AinParams;
use crate::baselines::QlParams;
use crate::channel::ChannelParams;
use crate::environment::{stream_rng, JammerKind, JammerStrategy, Trajectory, WorldSpec};
use crate::filter::FilterParams;
use crate::offline_learning::{DecisionStatistic, GngParams};
use crate::signal::{noise_variance_for_snr, GdbnMatrices};

use super::HarnessError;

/// Stream used to build per-seed scenario details such as the constant jammer's PRB set.
pub const STREAM_SCENARIO: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AgentKind {
    Ain,
    Ql,
    Fh,
}

impl AgentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Ain => "ain",
            Self::Ql => "ql",
            Self::Fh => "fh",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct JammerConfig {
    pub kind: JammerKind,
    pub enabled: bool,
    /// Fraction of slots in which the jammer transmits.
    pub hit_rate: f64,
    /// Size of the constant jammer's PRB set when drawn from the seed.
    pub constant_set_size: usize,
    /// Explicit 1-based PRBs for the constant jammer; overrides the draw.
    pub constant_set: Vec<usize>,
}

impl Default for JammerConfig {
    fn default() -> Self {
        Self {
            kind: JammerKind::Constant,
            enabled: true,
            hit_rate: 0.4,
            constant_set_size: 3,
            constant_set: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ShadowingConfig {
    pub enabled: bool,
    /// Distance the UAV travels before shadowing is redrawn; 0 redraws every slot.
    pub decorrelation_m: f64,
}

impl Default for ShadowingConfig {
    fn default() -> Self {
        Self {
            enabled: true,
            decorrelation_m: 50.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GeometryConfig {
    pub gbs_pos: [f64; 3],
    pub jammer_pos: [f64; 3],
    pub uav_altitude_m: f64,
    pub speed_mps: f64,
    pub waypoints: Vec<[f64; 2]>,
}

impl Default for GeometryConfig {
    fn default() -> Self {
        Self {
            gbs_pos: [0.0, 0.0, 30.0],
            jammer_pos: [500.0, 200.0, 10.0],
            uav_altitude_m: 60.0,
            speed_mps: 4.8,
            waypoints: vec![[300.0, 0.0], [300.0, 400.0], [0.0, 400.0]],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TrainingConfig {
    pub seed: u64,
    pub gng: GngParams,
    pub n_segments: usize,
    pub transition_smoothing: f64,
    pub statistic: DecisionStatistic,
    /// Quantile of the clean validation statistic used as threshold (1 = maximum).
    pub threshold_quantile: f64,
    /// Multiplier applied to that quantile.
    pub threshold_margin: f64,
    /// Clean slots per PRB for fitting and for validation; defaults to the run length.
    pub episode_slots: Option<usize>,
}

impl Default for TrainingConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            gng: GngParams::default(),
            n_segments: 1,
            transition_smoothing: 1.0,
            statistic: DecisionStatistic::Bhattacharyya,
            threshold_quantile: 1.0,
            threshold_margin: 1.5,
            episode_slots: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    pub name: Option<String>,
    pub n_prbs: usize,
    pub n_frames: usize,
    pub slots_per_frame: usize,
    /// Overrides `n_frames * slots_per_frame` when set.
    pub n_slots: Option<usize>,
    pub slot_duration_s: f64,
    pub snr_db: f64,
    pub jsr_db: f64,
    pub p_tx_uav_w: f64,
    /// Process noise variance of the dynamic model, per component.
    pub process_var: f64,
    pub jammer: JammerConfig,
    pub channel: ChannelParams,
    pub shadowing: ShadowingConfig,
    pub geometry: GeometryConfig,
    pub agent: AgentKind,
    pub seeds: Vec<u64>,
    pub model_path: Option<PathBuf>,
    pub ain: AinParams,
    pub ql: QlParams,
    pub filter: FilterParams,
    pub training: TrainingConfig,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            name: None,
            n_prbs: 50,
            n_frames: 200,
            slots_per_frame: 10,
            n_slots: None,
            slot_duration_s: 5e-4,
            snr_db: 15.0,
            jsr_db: 6.0,
            p_tx_uav_w: 1.0,
            process_var: 1e-4,
            jammer: JammerConfig::default(),
            channel: ChannelParams::default(),
            shadowing: ShadowingConfig::default(),
            geometry: GeometryConfig::default(),
            agent: AgentKind::Ain,
            seeds: (0..20).collect(),
            model_path: None,
            ain: AinParams::default(),
            ql: QlParams::default(),
            filter: FilterParams::default(),
            training: TrainingConfig::default(),
        }
    }
}

/// The parts of a scenario every agent in a comparison must share.
#[derive(Serialize)]
struct EnvironmentKey<'a> {
    n_prbs: usize,
    n_slots: usize,
    slot_duration_s: f64,
    snr_db: f64,
    jsr_db: f64,
    p_tx_uav_w: f64,
    process_var: f64,
    jammer: &'a JammerConfig,
    channel: &'a ChannelParams,
    shadowing: &'a ShadowingConfig,
    geometry: &'a GeometryConfig,
    seeds: &'a [u64],
}

impl ScenarioConfig {
    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        let config: Self =
            serde_json::from_str(&text).map_err(|e| HarnessError::Config(format!("{}: {e}", path.display())))?;
        config.validate()?;
        Ok(config)
    }

    pub fn n_slots(&self) -> usize {
        self.n_slots.unwrap_or(self.n_frames * self.slots_per_frame)
    }

    pub fn run_id(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("{}-{}", self.agent.as_str(), self.jammer.kind))
    }

    pub fn matrices(&self) -> GdbnMatrices {
        GdbnMatrices::constant_velocity(self.process_var, noise_variance_for_snr(self.snr_db))
    }

    pub fn environment_key(&self) -> String {
        serde_json::to_string(&EnvironmentKey {
            n_prbs: self.n_prbs,
            n_slots: self.n_slots(),
            slot_duration_s: self.slot_duration_s,
            snr_db: self.snr_db,
            jsr_db: self.jsr_db,
            p_tx_uav_w: self.p_tx_uav_w,
            process_var: self.process_var,
            jammer: &self.jammer,
            channel: &self.channel,
            shadowing: &self.shadowing,
            geometry: &self.geometry,
            seeds: &self.seeds,
        })
        .expect("plain data serializes")
    }

    fn trajectory(&self) -> Trajectory {
        Trajectory {
            waypoints: self.geometry.waypoints.clone(),
            altitude_m: self.geometry.uav_altitude_m,
            speed_mps: self.geometry.speed_mps,
            slot_duration_s: self.slot_duration_s,
        }
    }

    /// World for `seed`, with the jammer silenced when `jammer_enabled` is false.
    pub fn world_spec(&self, seed: u64, jammer_enabled: bool) -> Result<WorldSpec, HarnessError> {
        let j = &self.jammer;
        let hit_rate = if j.enabled && jammer_enabled { j.hit_rate } else { 0.0 };
        let mut rng = stream_rng(seed, STREAM_SCENARIO);
        let jammer = JammerStrategy::build(j.kind, self.n_prbs, hit_rate, j.constant_set_size, &j.constant_set, &mut rng)?;
        Ok(WorldSpec {
            n_prbs: self.n_prbs,
            n_slots: self.n_slots(),
            jammer,
            gbs_pos: self.geometry.gbs_pos,
            jammer_pos: self.geometry.jammer_pos,
            trajectory: self.trajectory(),
            channel: self.channel,
            shadowing: self.shadowing.enabled,
            shadowing_decorrelation_m: self.shadowing.decorrelation_m,
            p_tx_uav: self.p_tx_uav_w,
            snr_db: self.snr_db,
            jsr_db: self.jsr_db,
            matrices: self.matrices(),
        })
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |msg: String| Err(HarnessError::Config(msg));
        if self.n_prbs < 2 {
            return bad(format!("n_prbs must be >= 2, got {}", self.n_prbs));
        }
        if self.n_slots() < 2 {
            return bad(format!("run length must be >= 2 slots, got {}", self.n_slots()));
        }
        if self.seeds.is_empty() {
            return bad("at least one seed required".into());
        }
        if !(self.process_var >= 0.0) || !(self.p_tx_uav_w > 0.0) {
            return bad("process_var must be >= 0 and p_tx_uav_w > 0".into());
        }
        if !(0.0..=1.0).contains(&self.jammer.hit_rate) {
            return bad(format!("hit_rate {} outside [0, 1]", self.jammer.hit_rate));
        }
        if self.filter.n_particles < 1 || !(0.0..=1.0).contains(&self.filter.ess_fraction) {
            return bad("filter needs >= 1 particle and ess_fraction in [0, 1]".into());
        }
        let a = &self.ain;
        if !(a.kappa >= 0.0) || !(0.0..1.0).contains(&a.action_floor) || !(0.0..=1.0).contains(&a.habit_rate) {
            return bad("ain: kappa >= 0, action_floor in [0, 1), habit_rate in [0, 1]".into());
        }
        if a.action_floor * self.n_prbs as f64 >= 1.0 {
            return bad("ain: action_floor too large for the PRB count".into());
        }
        let q = &self.ql;
        if !(0.0..=1.0).contains(&q.alpha_lr)
            || !(0.0..=1.0).contains(&q.gamma_disc)
            || !(0.0..=1.0).contains(&q.epsilon_decay)
            || !(0.0..=1.0).contains(&q.epsilon_min)
        {
            return bad("ql parameters must lie in [0, 1]".into());
        }
        let t = &self.training;
        if t.n_segments < 1 || !(t.transition_smoothing >= 0.0) {
            return bad("training: n_segments >= 1 and transition_smoothing >= 0".into());
        }
        if !(t.threshold_quantile > 0.0 && t.threshold_quantile <= 1.0) || !(t.threshold_margin > 0.0) {
            return bad("training: threshold_quantile in (0, 1] and threshold_margin > 0".into());
        }
        if t.episode_slots.is_some_and(|n| n < 3) {
            return bad("training: episode_slots must be >= 3".into());
        }
        t.gng.validate().map_err(|e| HarnessError::Config(e.to_string()))?;
        self.world_spec(self.seeds[0], true)?.validate()?;
        Ok(())
    }
}
