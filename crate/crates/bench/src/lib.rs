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

//! Benchmark fixtures.

use forest_recolor::adversaries::{
    gen_greedy_cycle, gen_toggle_workload, random_rooted_updates, GreedyCycle,
};
use forest_recolor::rng::seeded;
use forest_recolor::{ColoredForest, Maintainer, Palette, Update};

/// A fresh forest and a random rooted sequence on it.
pub fn rooted_fixture(
    delta: u32,
    extra: u32,
    n: usize,
    count: usize,
    seed: u64,
) -> (ColoredForest, Vec<Update>) {
    let palette = Palette::new(delta, extra).expect("valid palette");
    let updates = random_rooted_updates(palette, n, count, &mut seeded(seed));
    (ColoredForest::new(n, palette), updates)
}

pub fn cycle_fixture(delta: u32, extra: u32, depth: u32) -> GreedyCycle {
    gen_greedy_cycle(Palette::new(delta, extra).expect("valid palette"), depth)
        .expect("depth at least 6")
}

/// The toggle workload with its tree build already applied by `m`.
pub fn toggle_fixture(
    delta: u32,
    extra: u32,
    h: u32,
    m: &mut dyn Maintainer,
) -> (ColoredForest, [Update; 2]) {
    let palette = Palette::new(delta, extra).expect("valid palette");
    let (mut f, adv) = gen_toggle_workload(palette, h, 1).expect("toggle workload");
    let seq = adv.to_vec();
    let (build, block) = seq.split_at(seq.len() - 2);
    for up in build {
        m.apply(&mut f, up).expect("tree build");
    }
    (f, [block[0], block[1]])
}

/// Applies every update and returns the total recourse.
pub fn replay(f: &mut ColoredForest, updates: &[Update], m: &mut dyn Maintainer) -> u64 {
    updates
        .iter()
        .map(|u| m.apply(f, u).expect("legal update") as u64)
        .sum()
}
