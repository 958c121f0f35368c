use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use log::info;

use antijam::environment::JammerKind;
use antijam::harness::{self, HarnessError, ScenarioConfig};

#[derive(Parser)]
#[command(name = "antijam", about = "Anti-jamming PRB selection simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    overrides: Overrides,
}

#[derive(Args)]
struct Overrides {
    /// Run a single seed instead of the configured list.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override the run length in slots.
    #[arg(long, global = true)]
    slots: Option<usize>,
    /// Override the jammer strategy (constant, sweep, random).
    #[arg(long, global = true)]
    jammer: Option<JammerKind>,
}

#[derive(Subcommand)]
enum Command {
    /// Fit the per-PRB models on clean episodes and write the model file.
    Train {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run one agent over the configured seeds.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Run several agents on the same environments and tabulate them.
    Bench {
        #[arg(long, num_args = 1.., required = true)]
        configs: Vec<PathBuf>,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
}

fn load(path: &Path, o: &Overrides) -> Result<ScenarioConfig, HarnessError> {
    let mut c = ScenarioConfig::load(path)?;
    if let Some(s) = o.seed {
        c.seeds = vec![s];
    }
    if let Some(n) = o.slots {
        c.n_slots = Some(n);
    }
    if let Some(k) = o.jammer {
        c.jammer.kind = k;
    }
    c.validate()?;
    Ok(c)
}

fn execute(cli: Cli) -> Result<(), HarnessError> {
    let o = &cli.overrides;
    match cli.command {
        Command::Train { config, out } => {
            let c = load(&config, o)?;
            let model = harness::train(&c)?;
            if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| HarnessError::Io {
                    path: dir.to_path_buf(),
                    source: e,
                })?;
            }
            model.save(&out)?;
            for p in &model.prbs {
                info!("prb {}: {} superstates, threshold {:.4}", p.prb, p.superstates.len(), p.threshold);
            }
            println!("wrote {}", out.display());
        }
        Command::Run { config, out } => {
            let c = load(&config, o)?;
            let model = harness::resolve_model(&c)?;
            let s = harness::run(&c, model.as_ref(), Some(&out))?;
            println!(
                "{}: mean cum_reward {:.1}, mean convergence slot {:.1} over {} seeds -> {}",
                s.run_id,
                s.mean_cum_reward,
                s.mean_convergence_slot,
                s.seeds.len(),
                out.join(&s.run_id).display()
            );
        }
        Command::Bench { configs, out } => {
            let cs = configs.iter().map(|p| load(p, o)).collect::<Result<Vec<_>, _>>()?;
            std::fs::create_dir_all(&out).map_err(|e| HarnessError::Io {
                path: out.clone(),
                source: e,
            })?;
            let rows = harness::bench(&cs, Some(&out))?;
            println!("{:<20} {:>6} {:>10} {:>14} {:>12}", "run", "agent", "jammer", "cum_reward", "convergence");
            for r in rows {
                println!(
                    "{:<20} {:>6} {:>10} {:>14.1} {:>12.1}",
                    r.run_id, r.agent, r.jammer, r.mean_cum_reward, r.mean_convergence_slot
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
