//! Scenario configuration, offline training, experiment runs and result files.

mod config;
mod experiment;
mod metrics;

use std::path::{Path, PathBuf};

pub use config::{
    AgentKind, GeometryConfig, JammerConfig, ScenarioConfig, ShadowingConfig, TrainingConfig, STREAM_SCENARIO,
};
pub use experiment::{
    bench, build_policy, resolve_model, run, run_seed, train, train_with_calibration, BenchRow, PrbCalibration,
    RunSummary, SeedRun, STREAM_AGENT, STREAM_FILTER, STREAM_MONITOR,
};
pub use metrics::{convergence_slot, EpisodeRecord, MetricsRow, SeedSummary, CONVERGENCE_RATE, CONVERGENCE_WINDOW};

use crate::agent::AgentError;
use crate::environment::EnvError;
use crate::offline_learning::LearnError;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("agent ain needs a trained model file (set model_path)")]
    MissingModel,
    #[error("model: {0}")]
    Model(#[from] LearnError),
    #[error(transparent)]
    Env(#[from] EnvError),
    #[error(transparent)]
    Agent(#[from] AgentError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("environment configs differ: {0}")]
    MismatchedEnvironments(String),
}

impl HarnessError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}
