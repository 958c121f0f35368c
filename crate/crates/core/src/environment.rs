//! The jamming world: PRB grid, jammer strategies, UAV trajectory, and the
//! per-slot resolution of collisions into observations and SINR.
//!
//! Each world owns three independent random streams (jammer, channel, signal)
//! derived from the run seed, so jammer behaviour and channel draws are
//! identical across agents that act differently under the same seed.

use std::fmt;

use nalgebra::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::channel::{
    self, depression_angle, deterministic_pathloss, ChannelError, ChannelParams, Geometry, GroundNode,
    LinkBudget, ShadowingTrack,
};
use crate::signal::{observe, qpsk_symbol, GdbnMatrices, GeneralizedState};

pub const STREAM_JAMMER: u64 = 1;
pub const STREAM_CHANNEL: u64 = 2;
pub const STREAM_SIGNAL: u64 = 3;

/// Deterministic generator for one named stream of a run.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EnvError {
    #[error("PRB {n} outside 1..={n_prbs}")]
    PrbOutOfRange { n: usize, n_prbs: usize },
    #[error("invalid jammer strategy: {0}")]
    InvalidJammer(String),
    #[error("invalid trajectory: {0}")]
    InvalidTrajectory(String),
    #[error(transparent)]
    Channel(#[from] ChannelError),
}

/// One-based PRB number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrbIndex(usize);

impl PrbIndex {
    pub fn new(n: usize, n_prbs: usize) -> Result<Self, EnvError> {
        if n == 0 || n > n_prbs {
            return Err(EnvError::PrbOutOfRange { n, n_prbs });
        }
        Ok(Self(n))
    }

    pub fn from_index(i: usize) -> Self {
        Self(i + 1)
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Zero-based position for table lookups.
    pub fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for PrbIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JammerKind {
    Constant,
    Sweep,
    Random,
}

impl std::str::FromStr for JammerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "constant" => Ok(Self::Constant),
            "sweep" => Ok(Self::Sweep),
            "random" => Ok(Self::Random),
            other => Err(format!("unknown jammer kind {other:?}")),
        }
    }
}

impl fmt::Display for JammerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Constant => "constant",
            Self::Sweep => "sweep",
            Self::Random => "random",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JammerStrategy {
    pub kind: JammerKind,
    /// PRBs the constant jammer draws from; unused by the other kinds.
    pub constant_set: Vec<PrbIndex>,
    pub hit_rate: f64,
}

impl JammerStrategy {
    /// Builds a strategy, drawing the constant jammer's PRB set without
    /// replacement when `explicit_set` is empty.
    pub fn build<R: Rng + ?Sized>(
        kind: JammerKind,
        n_prbs: usize,
        hit_rate: f64,
        set_size: usize,
        explicit_set: &[usize],
        rng: &mut R,
    ) -> Result<Self, EnvError> {
        let constant_set = if kind != JammerKind::Constant {
            Vec::new()
        } else if !explicit_set.is_empty() {
            explicit_set
                .iter()
                .map(|&n| PrbIndex::new(n, n_prbs))
                .collect::<Result<_, _>>()?
        } else {
            if set_size == 0 || set_size > n_prbs {
                return Err(EnvError::InvalidJammer(format!(
                    "constant set size {set_size} must be in 1..={n_prbs}"
                )));
            }
            rand::seq::index::sample(rng, n_prbs, set_size)
                .into_iter()
                .map(PrbIndex::from_index)
                .collect()
        };
        let strategy = Self {
            kind,
            constant_set,
            hit_rate,
        };
        strategy.validate()?;
        Ok(strategy)
    }

    pub fn validate(&self) -> Result<(), EnvError> {
        if !(0.0..=1.0).contains(&self.hit_rate) {
            return Err(EnvError::InvalidJammer(format!("hit rate {} outside [0, 1]", self.hit_rate)));
        }
        if self.kind == JammerKind::Constant && self.constant_set.is_empty() {
            return Err(EnvError::InvalidJammer("constant jammer needs a non-empty PRB set".into()));
        }
        Ok(())
    }

    fn initial<R: Rng + ?Sized>(&self, n_prbs: usize, rng: &mut R) -> PrbIndex {
        match self.kind {
            JammerKind::Constant => self.constant_set[rng.random_range(0..self.constant_set.len())],
            JammerKind::Sweep | JammerKind::Random => PrbIndex::from_index(rng.random_range(0..n_prbs)),
        }
    }
}

/// Advances the jammer one slot and draws whether it transmits.
pub fn jammer_next<R: Rng + ?Sized>(
    strategy: &JammerStrategy,
    current: PrbIndex,
    n_prbs: usize,
    rng: &mut R,
) -> (PrbIndex, bool) {
    let next = match strategy.kind {
        JammerKind::Constant => strategy.constant_set[rng.random_range(0..strategy.constant_set.len())],
        JammerKind::Sweep => PrbIndex(current.get() % n_prbs + 1),
        JammerKind::Random => PrbIndex::from_index(rng.random_range(0..n_prbs)),
    };
    let transmitted = rng.random_bool(strategy.hit_rate);
    (next, transmitted)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Trajectory {
    /// Horizontal waypoints in meters.
    pub waypoints: Vec<[f64; 2]>,
    pub altitude_m: f64,
    pub speed_mps: f64,
    pub slot_duration_s: f64,
}

impl Trajectory {
    pub fn validate(&self) -> Result<(), EnvError> {
        if self.waypoints.is_empty() {
            return Err(EnvError::InvalidTrajectory("at least one waypoint required".into()));
        }
        if !(self.speed_mps >= 0.0) || !(self.slot_duration_s > 0.0) || !(self.altitude_m > 0.0) {
            return Err(EnvError::InvalidTrajectory(
                "speed must be >= 0, slot duration and altitude > 0".into(),
            ));
        }
        Ok(())
    }
}

/// UAV position at slot `t`: constant-speed travel along the waypoint
/// polyline, holding at the last waypoint once it is reached.
pub fn uav_position(t: usize, trajectory: &Trajectory) -> [f64; 3] {
    let mut remaining = trajectory.speed_mps * trajectory.slot_duration_s * t as f64;
    let pts = &trajectory.waypoints;
    for w in pts.windows(2) {
        let (dx, dy) = (w[1][0] - w[0][0], w[1][1] - w[0][1]);
        let len = dx.hypot(dy);
        if remaining <= len && len > 0.0 {
            let f = remaining / len;
            return [w[0][0] + f * dx, w[0][1] + f * dy, trajectory.altitude_m];
        }
        remaining -= len;
    }
    let last = pts[pts.len() - 1];
    [last[0], last[1], trajectory.altitude_m]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hypothesis {
    H0,
    H1,
}

impl Hypothesis {
    /// +1 for a clean slot, -1 for a jammed one.
    pub fn reward(self) -> f64 {
        match self {
            Self::H0 => 1.0,
            Self::H1 => -1.0,
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::H0 => "H0",
            Self::H1 => "H1",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepOutcome {
    pub slot: usize,
    pub uav_prb: PrbIndex,
    pub observation: GeneralizedState,
    pub hypothesis: Hypothesis,
    pub sinr: f64,
    /// Ground truth for the metrics logger only.
    pub jammer_prb_truth: PrbIndex,
    pub jammer_transmitted: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WorldSpec {
    pub n_prbs: usize,
    pub n_slots: usize,
    pub jammer: JammerStrategy,
    pub gbs_pos: [f64; 3],
    pub jammer_pos: [f64; 3],
    pub trajectory: Trajectory,
    pub channel: ChannelParams,
    pub shadowing: bool,
    /// Zero redraws shadowing every slot.
    pub shadowing_decorrelation_m: f64,
    pub p_tx_uav: f64,
    pub snr_db: f64,
    pub jsr_db: f64,
    pub matrices: GdbnMatrices,
}

impl WorldSpec {
    pub fn geometry_at(&self, t: usize) -> Geometry {
        Geometry {
            uav_pos: uav_position(t, &self.trajectory),
            gbs_pos: self.gbs_pos,
            jammer_pos: self.jammer_pos,
        }
    }

    pub fn validate(&self) -> Result<(), EnvError> {
        if self.n_prbs == 0 {
            return Err(EnvError::InvalidJammer("at least one PRB required".into()));
        }
        self.jammer.validate()?;
        self.trajectory.validate()?;
        self.channel.validate()?;
        self.matrices
            .validate()
            .map_err(|e| EnvError::Channel(ChannelError::InvalidParams(e.to_string())))?;
        let mut angles = Vec::with_capacity(2 * self.n_slots.max(1));
        for t in 0..self.n_slots.max(1) {
            let g = self.geometry_at(t);
            g.validate()?;
            angles.push(depression_angle(&g, GroundNode::Gbs)?);
            angles.push(depression_angle(&g, GroundNode::Jammer)?);
        }
        if self.shadowing {
            self.channel.check_shadow_range(angles)?;
        }
        Ok(())
    }

    /// Budget calibrated on the shadowing-free gains at the first slot.
    pub fn link_budget(&self) -> Result<LinkBudget, EnvError> {
        let g = self.geometry_at(0);
        let gu = deterministic_pathloss(&g, GroundNode::Gbs, &self.channel)?.gain();
        let ju = deterministic_pathloss(&g, GroundNode::Jammer, &self.channel)?.gain();
        let budget = LinkBudget::calibrated(self.p_tx_uav, self.snr_db, self.jsr_db, gu, ju);
        budget.validate()?;
        Ok(budget)
    }

    /// Amplitude of the jammer term in the observation.
    pub fn jammer_scale(&self) -> f64 {
        channel::db_to_linear(self.jsr_db).sqrt()
    }
}

pub struct World {
    spec: WorldSpec,
    budget: LinkBudget,
    slot: usize,
    jammer_prb: PrbIndex,
    jammer_rng: ChaCha8Rng,
    channel_rng: ChaCha8Rng,
    signal_rng: ChaCha8Rng,
    prev_uav_symbol: Option<Complex<f64>>,
    prev_jam_symbol: Option<Complex<f64>>,
    gbs_shadow: ShadowingTrack,
    jam_shadow: ShadowingTrack,
}

impl World {
    pub fn new(spec: WorldSpec, seed: u64) -> Result<Self, EnvError> {
        spec.validate()?;
        let budget = spec.link_budget()?;
        let mut jammer_rng = stream_rng(seed, STREAM_JAMMER);
        let jammer_prb = spec.jammer.initial(spec.n_prbs, &mut jammer_rng);
        let decor = spec.shadowing_decorrelation_m;
        Ok(Self {
            budget,
            slot: 0,
            jammer_prb,
            jammer_rng,
            channel_rng: stream_rng(seed, STREAM_CHANNEL),
            signal_rng: stream_rng(seed, STREAM_SIGNAL),
            prev_uav_symbol: None,
            prev_jam_symbol: None,
            gbs_shadow: ShadowingTrack::new(decor),
            jam_shadow: ShadowingTrack::new(decor),
            spec,
        })
    }

    pub fn spec(&self) -> &WorldSpec {
        &self.spec
    }

    pub fn budget(&self) -> &LinkBudget {
        &self.budget
    }

    pub fn slot(&self) -> usize {
        self.slot
    }

    fn link_gain(&mut self, geometry: &Geometry, node: GroundNode) -> Result<f64, EnvError> {
        let mut pl = deterministic_pathloss(geometry, node, &self.spec.channel)?;
        if self.spec.shadowing {
            let theta = depression_angle(geometry, node)?;
            let track = match node {
                GroundNode::Gbs => &mut self.gbs_shadow,
                GroundNode::Jammer => &mut self.jam_shadow,
            };
            pl.shadowing_db = track.sample(geometry.uav_pos, theta, &self.spec.channel, &mut self.channel_rng)?;
        }
        Ok(pl.gain())
    }

    pub fn step(&mut self, action: PrbIndex) -> Result<StepOutcome, EnvError> {
        let action = PrbIndex::new(action.get(), self.spec.n_prbs)?;
        let t = self.slot;
        let (jammer_prb, transmitted) = if t == 0 {
            (self.jammer_prb, self.jammer_rng.random_bool(self.spec.jammer.hit_rate))
        } else {
            jammer_next(&self.spec.jammer, self.jammer_prb, self.spec.n_prbs, &mut self.jammer_rng)
        };
        self.jammer_prb = jammer_prb;
        let hypothesis = if transmitted && jammer_prb == action {
            Hypothesis::H1
        } else {
            Hypothesis::H0
        };

        let geometry = self.spec.geometry_at(t);
        let h_gu = self.link_gain(&geometry, GroundNode::Gbs)?;
        let h_ju = self.link_gain(&geometry, GroundNode::Jammer)?;
        let sinr = channel::sinr(&self.budget.with_jammer(hypothesis == Hypothesis::H1), h_gu, h_ju);

        let su = qpsk_symbol(&mut self.signal_rng);
        let sj = qpsk_symbol(&mut self.signal_rng);
        let xu = GeneralizedState::from_symbols(su, self.prev_uav_symbol);
        let xj = GeneralizedState::from_symbols(sj, self.prev_jam_symbol);
        self.prev_uav_symbol = Some(su);
        self.prev_jam_symbol = Some(sj);
        let jam_term = (hypothesis == Hypothesis::H1).then_some(&xj);
        let observation = observe(&xu, jam_term, self.spec.jammer_scale(), &self.spec.matrices, &mut self.signal_rng);

        self.slot += 1;
        Ok(StepOutcome {
            slot: t,
            uav_prb: action,
            observation,
            hypothesis,
            sinr,
            jammer_prb_truth: jammer_prb,
            jammer_transmitted: transmitted,
        })
    }
}
