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

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};

use forest_recolor::adversaries::caterpillar;
use forest_recolor::colorful_path::ColorfulPath;
use forest_recolor::dist_maint::DistMaint;
use forest_recolor::greedy::{Greedy, GreedyVariant};
use forest_recolor::sublinear::Sublinear;
use forest_recolor::{ColoredForest, Maintainer, Palette};
use forest_recolor_bench::{cycle_fixture, replay, rooted_fixture, toggle_fixture};

fn random_rooted(c: &mut Criterion) {
    let mut g = c.benchmark_group("random_rooted_1000");
    let (f, updates) = rooted_fixture(4, 2, 200, 1000, 1);
    type Make = fn() -> Box<dyn Maintainer>;
    let algs: [(&str, Make); 4] = [
        ("greedy", || Box::new(Greedy::new(GreedyVariant::Exact))),
        ("greedy-path", || Box::new(Greedy::new(GreedyVariant::Path))),
        ("colorful-path", || Box::new(ColorfulPath::default())),
        ("dist-maint-rooted", || Box::new(DistMaint::new(true, 7))),
    ];
    for (name, make) in algs {
        g.bench_function(name, |b| {
            b.iter_batched(
                || (f.clone(), make()),
                |(mut f, mut m)| black_box(replay(&mut f, &updates, m.as_mut())),
                BatchSize::SmallInput,
            )
        });
    }
    g.finish();
}

fn greedy_cycle(c: &mut Criterion) {
    let mut g = c.benchmark_group("greedy_cycle_round");
    for d in [6, 9, 12] {
        let cyc = cycle_fixture(3, 0, d);
        g.bench_with_input(BenchmarkId::from_parameter(d), &cyc, |b, cyc| {
            b.iter_batched(
                || {
                    (
                        cyc.forest.clone(),
                        Greedy::with_ties(GreedyVariant::Exact, cyc.ties(1)),
                    )
                },
                |(mut f, mut m)| black_box(replay(&mut f, &cyc.updates, &mut m)),
                BatchSize::LargeInput,
            )
        });
    }
    g.finish();
}

fn toggle(c: &mut Criterion) {
    let mut g = c.benchmark_group("dist_maint_toggle");
    for h in [4, 8] {
        let mut m = DistMaint::new(true, 3);
        let (mut f, block) = toggle_fixture(3, 1, h, &mut m);
        g.bench_function(BenchmarkId::from_parameter(h), |b| {
            b.iter(|| black_box(replay(&mut f, &block, &mut m)))
        });
    }
    g.finish();
}

fn sublinear_merge(c: &mut Criterion) {
    let mut g = c.benchmark_group("sublinear_caterpillar_merge");
    for size in [1usize << 9, 1 << 13] {
        let palette = Palette::new(4, 0).expect("valid palette");
        let mut base = ColoredForest::new(2 * size, palette);
        let spine = size / 3 - 1;
        let (_, next) = caterpillar(&mut base, 0, spine, (1, 2), &[3, 4]).expect("fits");
        caterpillar(&mut base, next, spine, (2, 1), &[3, 4]).expect("fits");
        g.bench_function(BenchmarkId::from_parameter(2 * size), |b| {
            b.iter_batched(
                || base.clone(),
                |mut f| {
                    black_box(
                        Sublinear::default()
                            .insert(&mut f, 0, next, None)
                            .expect("legal"),
                    )
                },
                BatchSize::LargeInput,
            )
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    random_rooted,
    greedy_cycle,
    toggle,
    sublinear_merge
);
criterion_main!(benches);
