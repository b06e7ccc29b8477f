// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Experiment runner: builds an algorithm and a workload from their ids,
//! drives repetitions, and writes one CSV row per update plus a summary row
//! per repetition.
//!
//! Repetition `r` of a run seeded with `s` uses `rep_seed = mix(s, r)`; the
//! workload draws from `mix(rep_seed, 0)` and the algorithm from
//! `mix(rep_seed, 1)`.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::adversaries::{
    gen_delta2_doubling, gen_greedy_cycle, gen_incremental_greedy_lb, gen_shift_star_reduction,
    gen_toggle_workload, make_fully_dynamic_det_adversary, rand_c0_dynamic, rand_c0_incremental,
    AdversaryError, Replay, Workload,
};
use crate::colorful_path::ColorfulPath;
use crate::dist_maint::{toggle_expectation, DistMaint};
use crate::forest::ColoredForest;
use crate::greedy::{Greedy, GreedyVariant, TieBreaker};
use crate::maintainer::{Maintainer, UpdateError};
use crate::palette::{Palette, PaletteError};
use crate::rng::mix;
use crate::sequence::{parse_sequence, ParseError, UpdateKind};
use crate::sublinear::Sublinear;

pub const ALGORITHMS: [&str; 8] = [
    "greedy",
    "greedy-shift",
    "greedy-path",
    "smallest-subtree",
    "colorful-path",
    "dist-maint",
    "dist-maint-rooted",
    "sublinear-delta",
];

pub const WORKLOADS: [&str; 8] = [
    "adv:greedy-incremental",
    "adv:owner-stars",
    "adv:layered-cycle",
    "adv:shift-stars",
    "adv:delta2",
    "adv:rand-c0-inc",
    "adv:rand-c0-dyn",
    "adv:toggle",
];

pub const CSV_HEADER: [&str; 8] = [
    "rep",
    "update_idx",
    "kind",
    "recourse",
    "component_sizes",
    "cum_amortized",
    "worst_case",
    "bound",
];

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("workload `{0}` is neither a known id nor a readable file")]
    UnknownWorkload(String),
    #[error("invalid config: {0}")]
    InvalidConfig(&'static str),
    #[error("repetition {rep} stopped after {limit} updates")]
    UpdateLimit { rep: usize, limit: usize },
    #[error("repetition {rep}, update {index}: {source}")]
    Update {
        rep: usize,
        index: usize,
        source: UpdateError,
    },
    #[error(transparent)]
    Palette(#[from] PaletteError),
    #[error(transparent)]
    Adversary(#[from] AdversaryError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub alg: String,
    /// Workload id or path of a sequence file.
    pub workload: String,
    pub delta: u32,
    pub extra: u32,
    pub n: usize,
    pub seed: u64,
    pub reps: usize,
    /// Tree depth for `adv:layered-cycle`, `adv:toggle` and `adv:rand-c0-dyn`.
    pub depth: Option<u32>,
    /// Links, cycles, toggles or rounds, depending on the workload.
    pub steps: Option<usize>,
    pub max_updates: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            alg: "greedy".into(),
            workload: "adv:layered-cycle".into(),
            delta: 3,
            extra: 0,
            n: 1000,
            seed: 0,
            reps: 1,
            depth: None,
            steps: None,
            max_updates: 10_000_000,
        }
    }
}

/// One CSV row; summary rows have `update_idx = None`.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub rep: usize,
    pub update_idx: Option<usize>,
    pub kind: &'static str,
    pub recourse: u64,
    pub component_sizes: String,
    pub cum_amortized: f64,
    pub worst_case: usize,
    pub bound: Option<f64>,
}

/// Result of one repetition.
#[derive(Debug, Clone)]
pub struct RepOutcome {
    pub rows: Vec<Row>,
    pub total: u64,
    pub updates: usize,
    pub worst_case: usize,
    pub predicted_total: Option<u64>,
    pub scripted: bool,
    pub forest: ColoredForest,
}

impl RepOutcome {
    pub fn amortized(&self) -> f64 {
        if self.updates == 0 {
            0.0
        } else {
            self.total as f64 / self.updates as f64
        }
    }
}

pub fn make_algorithm(
    id: &str,
    seed: u64,
    ties: Option<TieBreaker>,
) -> Result<Box<dyn Maintainer + Send>, HarnessError> {
    let greedy = |v| {
        Box::new(Greedy::with_ties(
            v,
            ties.clone().unwrap_or(TieBreaker::LexMin),
        ))
    };
    Ok(match id {
        "greedy" => greedy(GreedyVariant::Exact),
        "greedy-shift" => greedy(GreedyVariant::Shift),
        "greedy-path" => greedy(GreedyVariant::Path),
        "smallest-subtree" => greedy(GreedyVariant::SmallestSubtree),
        "colorful-path" => Box::new(ColorfulPath::default()),
        "dist-maint" => Box::new(DistMaint::new(false, seed)),
        "dist-maint-rooted" => Box::new(DistMaint::new(true, seed)),
        "sublinear-delta" => Box::new(Sublinear::default()),
        other => return Err(HarnessError::UnknownAlgorithm(other.to_string())),
    })
}

fn replay_workload(forest: ColoredForest, adversary: Replay) -> Workload {
    Workload {
        forest,
        adversary: Box::new(adversary),
        ties: None,
        bound: None,
        predicted_total: None,
    }
}

/// Builds the workload `cfg.workload` for one repetition.
pub fn make_workload(cfg: &ExperimentConfig, seed: u64) -> Result<Workload, HarnessError> {
    let palette = Palette::new(cfg.delta, cfg.extra)?;
    let w = match cfg.workload.as_str() {
        "adv:greedy-incremental" => {
            let lb = gen_incremental_greedy_lb(palette)?;
            let forest = ColoredForest::new(lb.n.max(cfg.n), palette);
            Workload {
                ties: Some(lb.ties()),
                bound: Some(lb.amortized()),
                predicted_total: Some(lb.predicted_recourse),
                ..replay_workload(forest, Replay::new("adv:greedy-incremental", lb.updates))
            }
        }
        "adv:owner-stars" => {
            let (forest, adv) = make_fully_dynamic_det_adversary(palette, cfg.n, usize::MAX)?;
            let steps = cfg.steps.unwrap_or(2 * adv.n0());
            let (forest, adv) = make_fully_dynamic_det_adversary(palette, forest.n(), steps)?;
            Workload {
                forest,
                bound: Some(adv.amortized_bound(steps)),
                adversary: Box::new(adv),
                ties: None,
                predicted_total: None,
            }
        }
        "adv:layered-cycle" => {
            let cyc = gen_greedy_cycle(palette, cfg.depth.unwrap_or(9))?;
            let rounds = cfg.steps.unwrap_or(100);
            let adv = Replay::cycled(
                "adv:layered-cycle",
                Vec::new(),
                cyc.updates.to_vec(),
                rounds,
            );
            Workload {
                ties: (!cyc.unique_minimum).then(|| cyc.ties(rounds)),
                bound: Some(cyc.predicted as f64 / 6.0),
                predicted_total: Some(cyc.predicted * rounds as u64),
                ..replay_workload(cyc.forest, adv)
            }
        }
        "adv:shift-stars" => {
            let (forest, adv) = gen_shift_star_reduction(palette, cfg.n)?;
            Workload {
                forest,
                adversary: Box::new(adv),
                ties: None,
                bound: None,
                predicted_total: None,
            }
        }
        "adv:delta2" => {
            let (forest, adv) = gen_delta2_doubling(cfg.n)?;
            let edges = crate::adversaries::doubling_length(adv.levels());
            Workload {
                forest,
                bound: Some(adv.predicted() as f64 / edges as f64),
                predicted_total: Some(adv.predicted()),
                adversary: Box::new(adv),
                ties: None,
            }
        }
        "adv:rand-c0-inc" => {
            let (forest, adv, _) = rand_c0_incremental(palette, cfg.n, mix(seed, 0))?;
            let per_gadget = 2.0 * f64::from(palette.delta()) - 0.5;
            Workload {
                bound: Some(0.5 / per_gadget),
                ..replay_workload(forest, adv)
            }
        }
        "adv:rand-c0-dyn" => {
            let (forest, adv, _) = rand_c0_dynamic(
                palette,
                cfg.depth.unwrap_or(4),
                cfg.steps.unwrap_or(1000),
                mix(seed, 0),
            )?;
            replay_workload(forest, adv)
        }
        "adv:toggle" => {
            let h = cfg.depth.unwrap_or(6);
            let (forest, adv) = gen_toggle_workload(palette, h, cfg.steps.unwrap_or(1000))?;
            Workload {
                bound: Some(toggle_expectation(palette.delta(), palette.kappa(), h)),
                ..replay_workload(forest, adv)
            }
        }
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|_| HarnessError::UnknownWorkload(path.to_string()))?;
            let updates = parse_sequence(&text)?;
            let top = updates.iter().map(|u| u.u.max(u.v) + 1).max().unwrap_or(0);
            let forest = ColoredForest::new(cfg.n.max(top), palette);
            replay_workload(forest, Replay::new("file", updates))
        }
    };
    Ok(w)
}

fn component_sizes(f: &ColoredForest, kind: UpdateKind, u: usize, v: usize) -> String {
    match kind {
        UpdateKind::Insert => f.component(u).len().to_string(),
        UpdateKind::Delete => format!("{};{}", f.component(u).len(), f.component(v).len()),
    }
}

/// Runs repetition `rep` sequentially.
pub fn run_repetition(cfg: &ExperimentConfig, rep: usize) -> Result<RepOutcome, HarnessError> {
    let rep_seed = mix(cfg.seed, rep as u64);
    let mut w = make_workload(cfg, rep_seed)?;
    let scripted = w.ties.is_some();
    let mut alg = make_algorithm(&cfg.alg, mix(rep_seed, 1), w.ties.take())?;
    let f = &mut w.forest;
    let mut rows = Vec::new();
    let (mut total, mut worst) = (0u64, 0usize);
    while let Some(up) = w.adversary.next_update(f) {
        let index = rows.len();
        if index >= cfg.max_updates {
            return Err(HarnessError::UpdateLimit {
                rep,
                limit: cfg.max_updates,
            });
        }
        let r = alg
            .apply(f, &up)
            .map_err(|source| HarnessError::Update { rep, index, source })?;
        total += r as u64;
        worst = worst.max(r);
        rows.push(Row {
            rep,
            update_idx: Some(index),
            kind: if up.is_insert() { "+" } else { "-" },
            recourse: r as u64,
            component_sizes: component_sizes(f, up.kind, up.u, up.v),
            cum_amortized: total as f64 / (index + 1) as f64,
            worst_case: worst,
            bound: w.bound,
        });
    }
    let updates = rows.len();
    let amortized = if updates == 0 {
        0.0
    } else {
        total as f64 / updates as f64
    };
    rows.push(Row {
        rep,
        update_idx: None,
        kind: "summary",
        recourse: total,
        component_sizes: if scripted {
            "ties=scripted"
        } else {
            "ties=default"
        }
        .into(),
        cum_amortized: amortized,
        worst_case: worst,
        bound: w.bound,
    });
    Ok(RepOutcome {
        rows,
        total,
        updates,
        worst_case: worst,
        predicted_total: w.predicted_total,
        scripted,
        forest: w.forest,
    })
}

/// Runs every repetition, in parallel, and returns them in order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<RepOutcome>, HarnessError> {
    if cfg.reps == 0 {
        return Err(HarnessError::InvalidConfig(
            "repetitions must be at least 1",
        ));
    }
    (0..cfg.reps)
        .into_par_iter()
        .map(|rep| run_repetition(cfg, rep))
        .collect()
}

pub fn write_csv<W: Write>(outcomes: &[RepOutcome], out: W) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in outcomes.iter().flat_map(|o| &o.rows) {
        w.write_record([
            row.rep.to_string(),
            row.update_idx
                .map_or_else(|| "summary".to_string(), |i| i.to_string()),
            row.kind.to_string(),
            row.recourse.to_string(),
            row.component_sizes.clone(),
            row.cum_amortized.to_string(),
            row.worst_case.to_string(),
            row.bound.map_or_else(String::new, |b| b.to_string()),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Runs `cfg` and returns the CSV text.
pub fn experiment_csv(cfg: &ExperimentConfig) -> Result<String, HarnessError> {
    let outcomes = run_experiment(cfg)?;
    let mut buf = Vec::new();
    write_csv(&outcomes, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn write_experiment(
    cfg: &ExperimentConfig,
    path: &Path,
) -> Result<Vec<RepOutcome>, HarnessError> {
    let outcomes = run_experiment(cfg)?;
    write_csv(&outcomes, std::fs::File::create(path)?)?;
    Ok(outcomes)
}
