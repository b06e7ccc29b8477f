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

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_forest-recolor"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_csv(dir: &Path, name: &str, extra: &[&str]) -> String {
    let out = dir.join(name);
    let mut args = vec!["run", "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::read_to_string(out).unwrap()
}

#[test]
fn same_seed_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--alg",
        "dist-maint",
        "--workload",
        "adv:rand-c0-dyn",
        "--delta",
        "3",
        "--depth",
        "3",
        "--steps",
        "200",
        "--seed",
        "9",
        "--reps",
        "3",
    ];
    let a = run_csv(dir.path(), "a.csv", &args);
    let b = run_csv(dir.path(), "b.csv", &args);
    assert_eq!(a, b);
    assert!(a.starts_with(
        "rep,update_idx,kind,recourse,component_sizes,cum_amortized,worst_case,bound\n"
    ));
    assert_eq!(a.lines().filter(|l| l.contains(",summary,")).count(), 3);
}

#[test]
fn layered_cycle_summary_row() {
    let dir = tempfile::tempdir().unwrap();
    let csv = run_csv(
        dir.path(),
        "cycle.csv",
        &[
            "--alg",
            "greedy",
            "--workload",
            "adv:layered-cycle",
            "--delta",
            "3",
            "--depth",
            "9",
            "--steps",
            "50",
        ],
    );
    let summary = csv.lines().last().unwrap();
    let cols: Vec<&str> = summary.split(',').collect();
    assert_eq!(cols[1], "summary");
    assert_eq!(cols[3], "550");
    assert_eq!(cols[4], "ties=scripted");
    assert_eq!(cols[5].parse::<f64>().unwrap(), 550.0 / 300.0);
}

#[test]
fn sequence_file_workload() {
    let dir = tempfile::tempdir().unwrap();
    let seq = dir.path().join("seq.txt");
    std::fs::write(
        &seq,
        "# a path, cut and relinked\n+ 0 1\n+ 1 2 p=1\n+ 2 3\n- 1 2\n+ 1 2\n",
    )
    .unwrap();
    let csv = run_csv(
        dir.path(),
        "seq.csv",
        &[
            "--alg",
            "greedy",
            "--workload",
            seq.to_str().unwrap(),
            "--delta",
            "2",
            "--n",
            "4",
        ],
    );
    assert_eq!(csv.lines().count(), 1 + 5 + 1);
    assert!(csv.contains("\n0,3,-,0,2;2,"));
}

#[test]
fn bad_inputs_exit_nonzero() {
    let o = run(&[
        "run",
        "--alg",
        "nope",
        "--workload",
        "adv:toggle",
        "--delta",
        "3",
    ]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown algorithm"));
    let o = run(&[
        "run",
        "--alg",
        "greedy",
        "--workload",
        "adv:toggle",
        "--delta",
        "3",
        "--extra",
        "5",
    ]);
    assert!(!o.status.success());
    let o = run(&["verify", "--suite", "bogus"]);
    assert!(!o.status.success());
}

#[test]
fn verify_oracles_suite() {
    let o = run(&["verify", "--suite", "oracles"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("criterion  1 PASS"));
}

#[test]
fn oracle_commands() {
    let dir = tempfile::tempdir().unwrap();
    let snap = dir.path().join("path.txt");
    std::fs::write(
        &snap,
        "forest n=4 kappa=3 delta=3\ne 0 1 1 p=0\ne 1 2 2 p=1\ne 2 3 3 p=2\n",
    )
    .unwrap();
    let s = snap.to_str().unwrap();

    let o = run(&["oracle", "enumerate", "--snapshot", s]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("colorings 12"), "{text}");
    assert!(text.contains("1/12"), "{text}");

    let o = run(&[
        "oracle",
        "min-recourse",
        "--snapshot",
        s,
        "--u",
        "1",
        "--v",
        "3",
    ]);
    assert!(!o.status.success(), "1 and 3 share a tree");
    let star = dir.path().join("star.txt");
    std::fs::write(
        &star,
        "forest n=6 kappa=4 delta=4\ne 0 1 3 p=0\ne 0 2 4 p=0\ne 3 4 1 p=3\ne 3 5 2 p=3\n",
    )
    .unwrap();
    let o = run(&[
        "oracle",
        "min-recourse",
        "--snapshot",
        star.to_str().unwrap(),
        "--u",
        "0",
        "--v",
        "3",
    ]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "1");

    let o = run(&[
        "oracle",
        "chisq",
        "--snapshot",
        s,
        "--runs",
        "20000",
        "--seed",
        "4",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));
    assert!(String::from_utf8(o.stdout).unwrap().contains("support 12"));
}

#[test]
fn list_ids() {
    let o = run(&["list"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("dist-maint-rooted"));
    assert!(text.contains("adv:owner-stars"));
}
