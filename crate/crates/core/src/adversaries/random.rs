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

//! Random workloads and random small instances.

use rand::seq::IndexedRandom;
use rand::Rng as _;

use crate::dist_maint::sample_uniform_coloring;
use crate::forest::{ColoredForest, EdgeKey, VertexId};
use crate::palette::Palette;
use crate::rng::Rng;
use crate::sequence::Update;

const TRIES: usize = 64;

/// `count` legal rooted updates on `n` vertices: roughly two insertions per
/// deletion, each insertion hanging a root below a vertex of another tree.
pub fn random_rooted_updates(
    palette: Palette,
    n: usize,
    count: usize,
    rng: &mut Rng,
) -> Vec<Update> {
    let mut f = ColoredForest::new(n, palette);
    let mut edges: Vec<EdgeKey> = Vec::new();
    let cap = palette.delta() as usize;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let want_insert = edges.is_empty() || rng.random_bool(2.0 / 3.0);
        let mut done = false;
        if want_insert {
            for _ in 0..TRIES {
                let r = f.root_of(rng.random_range(0..n));
                let p = rng.random_range(0..n);
                if f.degree(r) < cap && f.degree(p) < cap && !f.same_component(p, r) {
                    f.insert_topology(p, r, Some(p)).expect("checked legal");
                    edges.push(EdgeKey::new(p, r));
                    out.push(Update::attach(p, r));
                    done = true;
                    break;
                }
            }
        }
        if !done && !edges.is_empty() {
            let k = edges.swap_remove(rng.random_range(0..edges.len()));
            f.delete_topology(k.a, k.b).expect("edge exists");
            out.push(Update::delete(k.a, k.b));
        }
    }
    out
}

/// Unrooted insertions joining random vertices of different trees until
/// no attempt succeeds `TRIES` times in a row or the forest is spanning.
pub fn random_incremental_updates(palette: Palette, n: usize, rng: &mut Rng) -> Vec<Update> {
    let mut f = ColoredForest::new(n, palette);
    let cap = palette.delta() as usize;
    let mut out = Vec::new();
    let mut misses = 0;
    while out.len() + 1 < n && misses < TRIES {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v && f.degree(u) < cap && f.degree(v) < cap && !f.same_component(u, v) {
            f.insert_topology(u, v, None).expect("checked legal");
            out.push(Update::insert(u, v));
            misses = 0;
        } else {
            misses += 1;
        }
    }
    out
}

/// A properly colored random forest and a legal insertion into it.
#[derive(Debug, Clone)]
pub struct SmallInstance {
    pub forest: ColoredForest,
    pub u: VertexId,
    pub v: VertexId,
}

/// Palettes with `kappa <= 4`: `(delta, c)` in
/// `{(1,0), (2,0), (3,0), (3,1), (4,0)}`.
const SMALL_PALETTES: [(u32, u32); 5] = [(1, 0), (2, 0), (3, 0), (3, 1), (4, 0)];

/// Random instance with at most `max_n` vertices and `kappa <= 4`; the
/// coloring is uniform over proper colorings.
pub fn random_small_instance(max_n: usize, rng: &mut Rng) -> SmallInstance {
    loop {
        let &(delta, c) = SMALL_PALETTES.choose(rng).expect("nonempty");
        let palette = Palette::new(delta, c).expect("valid small palette");
        let n = rng.random_range(2..=max_n.max(2));
        let mut f = ColoredForest::new(n, palette);
        let cap = delta as usize;
        let target = rng.random_range(0..n - 1);
        for _ in 0..target * 4 {
            if f.edge_count() == target {
                break;
            }
            let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
            if a != b && f.degree(a) < cap && f.degree(b) < cap && !f.same_component(a, b) {
                f.insert_topology(a, b, None).expect("checked legal");
            }
        }
        let pairs: Vec<(VertexId, VertexId)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| f.degree(a) < cap && f.degree(b) < cap && !f.same_component(a, b))
            .collect();
        let Some(&(u, v)) = pairs.choose(rng) else {
            continue;
        };
        sample_uniform_coloring(&mut f, rng);
        f.begin_update();
        return SmallInstance { forest: f, u, v };
    }
}
