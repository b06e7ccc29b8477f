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

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use forest_recolor::acceptance::{run_suite, Suite};
use forest_recolor::dist_maint::DistMaint;
use forest_recolor::harness::{run_experiment, write_csv, ExperimentConfig, ALGORITHMS, WORKLOADS};
use forest_recolor::oracles::{
    chisq_uniformity, coloring_probability, enumerate_proper_colorings, min_recourse_bruteforce,
    to_f64, ColoringHistogram,
};
use forest_recolor::rng::mix;
use forest_recolor::{ColoredForest, EdgeKey, Maintainer, Update};

#[derive(Debug, Parser)]
#[command(
    name = "forest-recolor",
    version,
    about = "Dynamic edge coloring of forests: experiments and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run an algorithm against a workload and write per-update CSV rows.
    Run(RunArgs),
    /// Run an acceptance suite: all, deterministic, randomized or oracles.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Brute-force checks on a forest snapshot.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// List algorithm and workload ids.
    List,
}

#[derive(Debug, clap::Args)]
struct RunArgs {
    #[arg(long)]
    alg: String,
    /// Workload id (see `list`) or a sequence file.
    #[arg(long)]
    workload: String,
    #[arg(long)]
    delta: u32,
    #[arg(long, default_value_t = 0)]
    extra: u32,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    /// Output CSV; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Tree depth for layered-cycle, toggle and rand-c0-dyn.
    #[arg(long)]
    depth: Option<u32>,
    /// Links, cycles, toggles or rounds, depending on the workload.
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long, default_value_t = 10_000_000)]
    max_updates: usize,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Count the proper colorings of the snapshot's edges and report the
    /// probability of its coloring under the top-down distribution.
    Enumerate {
        #[arg(long)]
        snapshot: PathBuf,
        /// Print every coloring.
        #[arg(long)]
        list: bool,
    },
    /// Least recourse of inserting `(u, v)` into the snapshot.
    MinRecourse {
        #[arg(long)]
        snapshot: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
    },
    /// Build the snapshot's edges with dist-maint many times and test the
    /// final colorings for uniformity.
    Chisq {
        #[arg(long)]
        snapshot: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        runs: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Insert with parent hints from the snapshot.
        #[arg(long)]
        rooted: bool,
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
        /// Histogram CSV: `coloring,count,expected`, one row per proper
        /// coloring (colors in sorted edge order, space separated).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_snapshot(path: &PathBuf) -> Result<ColoredForest> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(ColoredForest::from_snapshot(&text)?)
}

fn run(args: RunArgs) -> Result<bool> {
    let cfg = ExperimentConfig {
        alg: args.alg,
        workload: args.workload,
        delta: args.delta,
        extra: args.extra,
        n: args.n,
        seed: args.seed,
        reps: args.reps,
        depth: args.depth,
        steps: args.steps,
        max_updates: args.max_updates,
    };
    let outcomes = run_experiment(&cfg)?;
    match &args.out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .with_context(|| format!("creating {}", path.display()))?;
            write_csv(&outcomes, file)?;
        }
        None => write_csv(&outcomes, std::io::stdout().lock())?,
    }
    for o in &outcomes {
        let rep = o.rows.last().map_or(0, |r| r.rep);
        eprintln!(
            "rep {rep}: {} updates, total {}, amortized {:.4}, worst {}",
            o.updates,
            o.total,
            o.amortized(),
            o.worst_case
        );
    }
    Ok(true)
}

fn verify(suite: Suite) -> bool {
    let verdicts = run_suite(suite);
    for v in &verdicts {
        println!("{v}");
    }
    verdicts.iter().all(|v| v.passed)
}

/// Edges of `f` as updates, parents first, in sorted edge order.
fn build_sequence(f: &ColoredForest, rooted: bool) -> Vec<Update> {
    let mut out = Vec::new();
    for root in (0..f.n()).filter(|&r| f.is_root(r)) {
        for (x, p) in f.bfs_order(root, None) {
            if let Some(p) = p {
                out.push(if rooted {
                    Update::attach(p, x)
                } else {
                    Update::insert(p, x)
                });
            }
        }
    }
    out
}

fn oracle(cmd: OracleCommand) -> Result<bool> {
    match cmd {
        OracleCommand::Enumerate { snapshot, list } => {
            let f = read_snapshot(&snapshot)?;
            let keys: Vec<EdgeKey> = f.edges().into_iter().map(|(k, _)| k).collect();
            let all = enumerate_proper_colorings(f.n(), &keys, f.kappa())?;
            println!(
                "edges {} kappa {} colorings {}",
                keys.len(),
                f.kappa(),
                all.len()
            );
            if f.edge_count() > 0 {
                let p = coloring_probability(&f)?;
                println!("probability of snapshot coloring {p} ({:.6})", to_f64(&p));
            }
            if list {
                let mut out = std::io::stdout().lock();
                for c in all {
                    let line: Vec<String> = c.iter().map(u32::to_string).collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
            }
            Ok(true)
        }
        OracleCommand::MinRecourse { snapshot, u, v } => {
            let f = read_snapshot(&snapshot)?;
            println!("{}", min_recourse_bruteforce(&f, u, v)?);
            Ok(true)
        }
        OracleCommand::Chisq {
            snapshot,
            runs,
            seed,
            rooted,
            alpha,
            out,
        } => {
            let f = read_snapshot(&snapshot)?;
            if f.edge_count() == 0 {
                bail!("snapshot has no edges");
            }
            let keys: Vec<EdgeKey> = f.edges().into_iter().map(|(k, _)| k).collect();
            let cells = enumerate_proper_colorings(f.n(), &keys, f.kappa())?;
            let support = cells.len();
            let seq = build_sequence(&f, rooted);
            let mut hist = ColoringHistogram::default();
            for run in 0..runs {
                let mut g = ColoredForest::new(f.n(), f.palette());
                let mut m = DistMaint::new(rooted, mix(seed, run));
                for up in &seq {
                    m.apply(&mut g, up)?;
                }
                hist.add(g.colors_in_edge_order());
            }
            let (stat, p) = chisq_uniformity(&hist, support)?;
            if let Some(path) = out {
                let mut w = csv::Writer::from_path(&path)
                    .with_context(|| format!("creating {}", path.display()))?;
                w.write_record(["coloring", "count", "expected"])?;
                let expected = (runs as f64 / support as f64).to_string();
                for cell in cells {
                    let count = hist.counts.get(&cell).copied().unwrap_or(0);
                    let key: Vec<String> = cell.iter().map(u32::to_string).collect();
                    w.write_record([key.join(" "), count.to_string(), expected.clone()])?;
                }
                w.flush()?;
            }
            let passed = p > alpha;
            println!(
                "support {support} runs {runs} chi2 {stat:.3} p {p:.4} {}",
                if passed { "PASS" } else { "FAIL" }
            );
            Ok(passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::Verify { suite } => Ok(verify(suite)),
        Command::Oracle { command } => oracle(command),
        Command::List => {
            println!("algorithms: {}", ALGORITHMS.join(", "));
            println!("workloads: {} or a sequence file", WORKLOADS.join(", "));
            Ok(true)
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
