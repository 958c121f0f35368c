use std::collections::HashMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::agent::{AinAgent, Feedback, Perception, Policy};
use crate::baselines::{FhAgent, QlAgent};
use crate::channel::linear_to_db;
use crate::environment::{stream_rng, Hypothesis, PrbIndex, World};
use crate::offline_learning::{fit_prb_model, LearnedModel, MODEL_VERSION};

use super::metrics::{convergence_slot, EpisodeRecord, MetricsRow, SeedSummary, CONVERGENCE_RATE, CONVERGENCE_WINDOW};
use super::{AgentKind, HarnessError, ScenarioConfig};

pub const STREAM_AGENT: u64 = 10;
pub const STREAM_FILTER: u64 = 11;
pub const STREAM_MONITOR: u64 = 12;
const STREAM_GNG: u64 = 20;
const STREAM_CALIBRATION: u64 = 21;

const TAIL_SLOTS: usize = 500;

/// Seed for PRB `prb`'s clean episode number `episode`.
fn episode_seed(seed: u64, prb: usize, episode: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((prb as u64 + 1) << 8)
        .wrapping_add(episode)
}

fn clean_observations(config: &ScenarioConfig, prb: PrbIndex, seed: u64, n: usize) -> Result<Vec<crate::signal::Vec4>, HarnessError> {
    let mut world = World::new(config.world_spec(seed, false)?, seed)?;
    (0..n).map(|_| Ok(world.step(prb)?.observation.0)).collect()
}

/// Clean validation statistics of one PRB.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrbCalibration {
    pub prb: PrbIndex,
    pub values: Vec<f64>,
    pub threshold: f64,
}

fn quantile(values: &[f64], q: f64) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let k = ((q * v.len() as f64).ceil() as usize).clamp(1, v.len());
    v[k - 1]
}

/// Fits every PRB's model on a jammer-free episode, then thresholds the
/// decision statistic on a second clean episode per PRB.
pub fn train_with_calibration(config: &ScenarioConfig) -> Result<(LearnedModel, Vec<PrbCalibration>), HarnessError> {
    config.validate()?;
    let t = &config.training;
    let n_obs = t.episode_slots.unwrap_or(config.n_slots());
    let matrices = config.matrices();
    let prbs = (0..config.n_prbs)
        .into_par_iter()
        .map(|i| {
            let prb = PrbIndex::from_index(i);
            let obs = clean_observations(config, prb, episode_seed(t.seed, i, 0), n_obs)?;
            let mut rng = stream_rng(episode_seed(t.seed, i, 0), STREAM_GNG);
            Ok(fit_prb_model(prb, &obs, &matrices, &t.gng, t.n_segments, t.transition_smoothing, &mut rng)?)
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;
    let mut model = LearnedModel {
        version: MODEL_VERSION,
        n_prbs: config.n_prbs,
        statistic: t.statistic,
        matrices,
        prbs,
    };
    let shared = Arc::new(model.clone());
    let calibration = (0..config.n_prbs)
        .into_par_iter()
        .map(|i| {
            let prb = PrbIndex::from_index(i);
            let seed = episode_seed(t.seed, i, 1);
            let obs = clean_observations(config, prb, seed, n_obs)?;
            let mut perception = Perception::new(
                Arc::clone(&shared),
                config.filter,
                config.ain.perception,
                n_obs,
                stream_rng(seed, STREAM_CALIBRATION),
            );
            let values: Vec<f64> = obs
                .iter()
                .map(|z| {
                    let p = perception.perceive_with(prb, &crate::signal::GeneralizedState(*z), Some(f64::INFINITY));
                    let s = p.signal;
                    (p.messages.is_some(), if shared.statistic == crate::offline_learning::DecisionStatistic::Skl { s.skl } else { s.bhatt })
                })
                .filter(|(has, _)| *has)
                .map(|(_, v)| v)
                .collect();
            let threshold = quantile(&values, t.threshold_quantile) * t.threshold_margin;
            Ok(PrbCalibration { prb, values, threshold })
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;
    for (pm, c) in model.prbs.iter_mut().zip(&calibration) {
        pm.threshold = c.threshold;
    }
    model.validate()?;
    Ok((model, calibration))
}

pub fn train(config: &ScenarioConfig) -> Result<LearnedModel, HarnessError> {
    Ok(train_with_calibration(config)?.0)
}

/// Loads the configured model file. Missing files are an error, as is an
/// AIn config without one.
pub fn resolve_model(config: &ScenarioConfig) -> Result<Option<Arc<LearnedModel>>, HarnessError> {
    let Some(path) = &config.model_path else {
        return if config.agent == AgentKind::Ain {
            Err(HarnessError::MissingModel)
        } else {
            Ok(None)
        };
    };
    if !path.exists() {
        return Err(HarnessError::io(path, std::io::Error::new(std::io::ErrorKind::NotFound, "model file not found")));
    }
    let model = LearnedModel::load(path)?;
    check_model(config, &model)?;
    Ok(Some(Arc::new(model)))
}

fn check_model(config: &ScenarioConfig, model: &LearnedModel) -> Result<(), HarnessError> {
    if model.n_prbs != config.n_prbs {
        return Err(HarnessError::Config(format!(
            "model covers {} PRBs, config has {}",
            model.n_prbs, config.n_prbs
        )));
    }
    Ok(())
}

pub fn build_policy(config: &ScenarioConfig, model: Option<&Arc<LearnedModel>>, seed: u64) -> Result<Box<dyn Policy>, HarnessError> {
    let rng = stream_rng(seed, STREAM_AGENT);
    Ok(match config.agent {
        AgentKind::Fh => Box::new(FhAgent::new(config.n_prbs, rng)),
        AgentKind::Ql => Box::new(QlAgent::new(config.n_prbs, config.ql, rng)),
        AgentKind::Ain => {
            let model = model.ok_or(HarnessError::MissingModel)?;
            check_model(config, model)?;
            Box::new(AinAgent::new(
                Arc::clone(model),
                config.ain,
                config.filter,
                config.n_slots(),
                rng,
                stream_rng(seed, STREAM_FILTER),
            )?)
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeedRun {
    pub rows: Vec<MetricsRow>,
    pub episode: Vec<EpisodeRecord>,
    pub summary: SeedSummary,
}

/// One seed of one agent. Agents without their own perception are scored by
/// a monitor filter when a model is available.
pub fn run_seed(config: &ScenarioConfig, model: Option<&Arc<LearnedModel>>, seed: u64) -> Result<SeedRun, HarnessError> {
    let mut world = World::new(config.world_spec(seed, true)?, seed)?;
    let mut policy = build_policy(config, model, seed)?;
    let mut monitor = match (config.agent, model) {
        (AgentKind::Ain, _) | (_, None) => None,
        (_, Some(m)) => Some(Perception::new(
            Arc::clone(m),
            config.filter,
            config.ain.perception,
            config.n_slots(),
            stream_rng(seed, STREAM_MONITOR),
        )),
    };
    let n = config.n_slots();
    let mut rows = Vec::with_capacity(n);
    let mut episode = Vec::with_capacity(n);
    let (mut cum_reward, mut cum_abn, mut cum_sinr) = (0i64, 0.0f64, 0.0f64);
    let mut collisions = Vec::with_capacity(n);
    let mut flagged = 0;
    for _ in 0..n {
        let action = policy.select();
        let out = world.step(action)?;
        let reward = out.hypothesis.reward();
        policy.observe(&Feedback {
            observation: out.observation,
            reward,
        });
        let signal = match (policy.abnormality(), monitor.as_mut()) {
            (Some(s), _) => s,
            (None, Some(m)) => m.perceive(action, &out.observation).signal,
            (None, None) => Default::default(),
        };
        cum_reward += reward as i64;
        cum_abn += signal.skl;
        cum_sinr += out.sinr;
        flagged += signal.is_abnormal as usize;
        collisions.push(out.hypothesis == Hypothesis::H1);
        rows.push(MetricsRow {
            slot: out.slot,
            hypothesis: out.hypothesis.to_string(),
            reward: reward as i32,
            abnormality: signal.skl,
            sinr_db: linear_to_db(out.sinr),
            cum_reward,
            cum_abnormality: cum_abn,
            cum_sinr,
            chosen_prb: action.get(),
            jammer_prb: out.jammer_prb_truth.get(),
        });
        let z = out.observation.0;
        episode.push(EpisodeRecord {
            slot: out.slot,
            action: action.get(),
            hypothesis: out.hypothesis.to_string(),
            observation: [z[0], z[1], z[2], z[3]],
            sinr: out.sinr,
            jammer_prb: out.jammer_prb_truth.get(),
            jammer_transmitted: out.jammer_transmitted,
            skl: signal.skl,
            bhatt: signal.bhatt,
            is_abnormal: signal.is_abnormal,
        });
    }
    let tail = &collisions[n.saturating_sub(TAIL_SLOTS)..];
    let summary = SeedSummary {
        agent: policy.label().to_string(),
        jammer: config.jammer.kind.to_string(),
        seed,
        n_slots: n,
        cum_reward,
        cum_abnormality: cum_abn,
        cum_sinr,
        collisions: collisions.iter().filter(|&&c| c).count(),
        flagged,
        convergence_slot: convergence_slot(&collisions, CONVERGENCE_WINDOW, CONVERGENCE_RATE),
        tail_collision_rate: tail.iter().filter(|&&c| c).count() as f64 / tail.len() as f64,
    };
    Ok(SeedRun {
        rows,
        episode,
        summary,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub run_id: String,
    pub agent: String,
    pub jammer: String,
    pub n_slots: usize,
    pub mean_cum_reward: f64,
    pub mean_cum_abnormality: f64,
    pub mean_cum_sinr: f64,
    pub mean_convergence_slot: f64,
    pub seeds: Vec<SeedSummary>,
}

impl RunSummary {
    fn from_seeds(config: &ScenarioConfig, seeds: Vec<SeedSummary>) -> Self {
        let k = seeds.len() as f64;
        let mean = |f: &dyn Fn(&SeedSummary) -> f64| seeds.iter().map(f).sum::<f64>() / k;
        Self {
            run_id: config.run_id(),
            agent: config.agent.as_str().to_string(),
            jammer: config.jammer.kind.to_string(),
            n_slots: config.n_slots(),
            mean_cum_reward: mean(&|s| s.cum_reward as f64),
            mean_cum_abnormality: mean(&|s| s.cum_abnormality),
            mean_cum_sinr: mean(&|s| s.cum_sinr),
            mean_convergence_slot: mean(&|s| s.convergence_slot as f64),
            seeds,
        }
    }
}

fn write_seed_files(dir: &Path, seed: u64, run: &SeedRun) -> Result<(), HarnessError> {
    let csv_path = dir.join(format!("seed{seed}.csv"));
    let mut w = csv::Writer::from_path(&csv_path)?;
    for row in &run.rows {
        w.serialize(row)?;
    }
    w.flush().map_err(|e| HarnessError::io(&csv_path, e))?;
    let log_path = dir.join(format!("seed{seed}.jsonl"));
    let file = File::create(&log_path).map_err(|e| HarnessError::io(&log_path, e))?;
    let mut out = BufWriter::new(file);
    for rec in &run.episode {
        serde_json::to_writer(&mut out, rec)?;
        out.write_all(b"\n").map_err(|e| HarnessError::io(&log_path, e))?;
    }
    out.flush().map_err(|e| HarnessError::io(&log_path, e))?;
    Ok(())
}

/// Runs every configured seed concurrently. With `out`, writes
/// `<out>/<run_id>/seed<k>.csv`, `seed<k>.jsonl` and `summary.json`.
pub fn run(config: &ScenarioConfig, model: Option<&Arc<LearnedModel>>, out: Option<&Path>) -> Result<RunSummary, HarnessError> {
    config.validate()?;
    if config.agent == AgentKind::Ain && model.is_none() {
        return Err(HarnessError::MissingModel);
    }
    if let Some(m) = model {
        check_model(config, m)?;
    }
    let dir = out.map(|o| o.join(config.run_id()));
    if let Some(d) = &dir {
        std::fs::create_dir_all(d).map_err(|e| HarnessError::io(d, e))?;
    }
    let summaries = config
        .seeds
        .par_iter()
        .map(|&seed| {
            let r = run_seed(config, model, seed)?;
            if let Some(d) = &dir {
                write_seed_files(d, seed, &r)?;
            }
            Ok(r.summary)
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;
    let summary = RunSummary::from_seeds(config, summaries);
    if let Some(d) = &dir {
        let path = d.join("summary.json");
        std::fs::write(&path, serde_json::to_string_pretty(&summary)?).map_err(|e| HarnessError::io(&path, e))?;
    }
    Ok(summary)
}

/// One line of the comparison table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub run_id: String,
    pub agent: String,
    pub jammer: String,
    pub n_seeds: usize,
    pub mean_cum_reward: f64,
    pub mean_cum_abnormality: f64,
    pub mean_cum_sinr: f64,
    pub mean_convergence_slot: f64,
}

/// Runs several agents on identical environments (same seeds, same jammer
/// realizations) and writes `comparison.csv` and `per_seed.csv` under `out`.
pub fn bench(configs: &[ScenarioConfig], out: Option<&Path>) -> Result<Vec<BenchRow>, HarnessError> {
    let Some(first) = configs.first() else {
        return Err(HarnessError::Config("bench needs at least one config".into()));
    };
    let key = first.environment_key();
    for c in &configs[1..] {
        if c.environment_key() != key {
            return Err(HarnessError::MismatchedEnvironments(format!(
                "{} vs {}",
                first.run_id(),
                c.run_id()
            )));
        }
    }
    let mut ids: Vec<String> = configs.iter().map(|c| c.run_id()).collect();
    ids.sort();
    ids.dedup();
    if ids.len() != configs.len() {
        return Err(HarnessError::Config("bench configs need distinct run ids".into()));
    }
    let mut models: HashMap<PathBuf, Arc<LearnedModel>> = HashMap::new();
    let mut summaries = Vec::new();
    for c in configs {
        let model = match &c.model_path {
            Some(p) if models.contains_key(p) => Some(Arc::clone(&models[p])),
            _ => {
                let m = resolve_model(c)?;
                if let (Some(p), Some(m)) = (&c.model_path, &m) {
                    models.insert(p.clone(), Arc::clone(m));
                }
                m
            }
        };
        if c.agent == AgentKind::Ain && model.is_none() {
            return Err(HarnessError::MissingModel);
        }
        summaries.push(run(c, model.as_ref(), out)?);
    }
    let rows: Vec<BenchRow> = summaries
        .iter()
        .map(|s| BenchRow {
            run_id: s.run_id.clone(),
            agent: s.agent.clone(),
            jammer: s.jammer.clone(),
            n_seeds: s.seeds.len(),
            mean_cum_reward: s.mean_cum_reward,
            mean_cum_abnormality: s.mean_cum_abnormality,
            mean_cum_sinr: s.mean_cum_sinr,
            mean_convergence_slot: s.mean_convergence_slot,
        })
        .collect();
    if let Some(o) = out {
        let path = o.join("comparison.csv");
        let mut w = csv::Writer::from_path(&path)?;
        for r in &rows {
            w.serialize(r)?;
        }
        w.flush().map_err(|e| HarnessError::io(&path, e))?;
        let path = o.join("per_seed.csv");
        let mut w = csv::Writer::from_path(&path)?;
        for s in summaries.iter().flat_map(|s| &s.seeds) {
            w.serialize(s)?;
        }
        w.flush().map_err(|e| HarnessError::io(&path, e))?;
    }
    Ok(rows)
}
