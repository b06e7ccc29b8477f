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

//! Oblivious workloads for randomized algorithms with `kappa = delta`:
//! coin-flip links between stars or between complete trees, and the
//! root toggle.

use rand::Rng as _;

use super::structures::{complete_tree_edges, complete_tree_size};
use super::{need_vertices, AdversaryError, Replay};
use crate::forest::{ColoredForest, VertexId};
use crate::palette::Palette;
use crate::rng::seeded;
use crate::sequence::Update;

fn require_c0(palette: Palette) -> Result<(), AdversaryError> {
    if palette.extra() != 0 || palette.delta() < 2 {
        return Err(AdversaryError::WrongPalette {
            expected: "kappa = delta >= 2",
            delta: palette.delta(),
            kappa: palette.kappa(),
        });
    }
    Ok(())
}

/// Disjoint gadgets of two `(delta-1)`-stars and a spare vertex. A fair coin
/// picks, per gadget, a direct link of the centers or a link through the
/// spare vertex; either way one recoloring happens with probability at
/// least one half. Returns the forest, the sequence and the coins (`true`
/// for direct).
pub fn rand_c0_incremental(
    palette: Palette,
    n: usize,
    seed: u64,
) -> Result<(ColoredForest, Replay, Vec<bool>), AdversaryError> {
    require_c0(palette)?;
    let f = ColoredForest::new(n, palette);
    let delta = palette.delta() as usize;
    let width = 2 * delta + 1;
    need_vertices(&f, width)?;
    let mut rng = seeded(seed);
    let mut updates = Vec::new();
    let mut coins = Vec::new();
    for g in 0..n / width {
        let base = g * width;
        let (v1, v2, spare) = (base, base + delta, base + 2 * delta);
        for center in [v1, v2] {
            for leaf in center + 1..center + delta {
                updates.push(Update::attach(center, leaf));
            }
        }
        let direct = rng.random_bool(0.5);
        coins.push(direct);
        if direct {
            updates.push(Update::insert(v1, v2));
        } else {
            updates.push(Update::insert(v1, spare));
            updates.push(Update::insert(v2, spare));
        }
    }
    Ok((f, Replay::new("adv:rand-c0-inc", updates), coins))
}

/// Attach updates building a complete `(delta-1)`-ary tree of depth `h`.
fn tree_updates(
    root: VertexId,
    first_free: VertexId,
    delta: u32,
    h: u32,
) -> (Vec<Update>, VertexId) {
    let (edges, next) = complete_tree_edges(root, first_free, delta as usize - 1, h);
    (
        edges
            .into_iter()
            .map(|(p, c)| Update::attach(p, c))
            .collect(),
        next,
    )
}

/// Vertex ids of the two-tree workloads: roots and a spare vertex.
fn two_trees(palette: Palette, h: u32) -> (usize, Vec<Update>, VertexId, VertexId) {
    let size = complete_tree_size(palette.delta() as usize - 1, h);
    let (mut build, next) = tree_updates(0, 1, palette.delta(), h);
    let r2 = next;
    let (more, _) = tree_updates(r2, r2 + 1, palette.delta(), h);
    build.extend(more);
    debug_assert_eq!(r2, size);
    (2 * size, build, 0, r2)
}

/// Two complete trees of depth `h`, then `rounds` coin flips: a direct root
/// link, or links of both roots to a spare vertex; the links are removed
/// again before the next round.
pub fn rand_c0_dynamic(
    palette: Palette,
    h: u32,
    rounds: usize,
    seed: u64,
) -> Result<(ColoredForest, Replay, Vec<bool>), AdversaryError> {
    require_c0(palette)?;
    let (size, build, r1, r2) = two_trees(palette, h);
    let spare = size;
    let f = ColoredForest::new(size + 1, palette);
    let mut rng = seeded(seed);
    let mut updates = build;
    let mut coins = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        let direct = rng.random_bool(0.5);
        coins.push(direct);
        if direct {
            updates.extend([Update::attach(r1, r2), Update::delete(r1, r2)]);
        } else {
            updates.extend([
                Update::attach(r1, spare),
                Update::attach(spare, r2),
                Update::delete(r1, spare),
                Update::delete(spare, r2),
            ]);
        }
    }
    Ok((f, Replay::new("adv:rand-c0-dyn", updates), coins))
}

/// Two complete `(delta-1)`-ary trees of depth `h` built by insertions,
/// then `toggles` rounds of linking `r2` below `r1` and cutting it again.
pub fn gen_toggle_workload(
    palette: Palette,
    h: u32,
    toggles: usize,
) -> Result<(ColoredForest, Replay), AdversaryError> {
    if palette.delta() < 2 {
        return Err(AdversaryError::WrongPalette {
            expected: "delta >= 2",
            delta: palette.delta(),
            kappa: palette.kappa(),
        });
    }
    gen_toggle_trees(palette, palette.delta() as usize - 1, h, toggles)
}

/// The toggle workload on `arity`-ary trees, for palettes whose `kappa`
/// exceeds what `arity + 1` allows as `delta + c`.
pub fn gen_toggle_trees(
    palette: Palette,
    arity: usize,
    h: u32,
    toggles: usize,
) -> Result<(ColoredForest, Replay), AdversaryError> {
    if arity == 0 || arity + 1 > palette.delta() as usize {
        return Err(AdversaryError::NotApplicable(
            "tree arity must be in 1..delta",
        ));
    }
    let (edges, r2) = complete_tree_edges(0, 1, arity, h);
    let (more, n) = complete_tree_edges(r2, r2 + 1, arity, h);
    let build = edges
        .into_iter()
        .chain(more)
        .map(|(p, c)| Update::attach(p, c))
        .collect();
    let f = ColoredForest::new(n, palette);
    let block = vec![Update::attach(0, r2), Update::delete(0, r2)];
    Ok((f, Replay::cycled("adv:toggle", build, block, toggles)))
}
