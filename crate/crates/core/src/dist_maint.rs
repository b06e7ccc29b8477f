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

//! Randomized maintenance that keeps the coloring uniformly distributed over
//! all proper colorings of the current forest.
//!
//! Every random choice draws from the update's stream in a fixed order: an
//! insertion draws the new edge's color (index into the sorted free set at
//! the parent) and then, only if the old root had a child edge of that color,
//! the replacement color (index into the sorted free set at the old root). A
//! deletion draws one integer in `0..kappa`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng as _;

use crate::forest::{ColoredForest, EdgeKey, VertexId};
use crate::maintainer::{apply_colors, Maintainer, UpdateError};
use crate::palette::{Color, UNCOLORED};
use crate::rng::{seeded, Rng};

/// Edges recolored by one repair, top-down.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepairTrace {
    pub start: VertexId,
    pub swapped: Vec<(EdgeKey, Color, Color)>,
}

/// The downward path flipped when `v`'s parent edge changes from `alpha` to
/// `beta`: as `(parent, child, new color)` triples. Nothing is modified.
pub fn forbidden_path(
    f: &ColoredForest,
    v: VertexId,
    alpha: Color,
    beta: Color,
) -> Vec<(VertexId, VertexId, Color)> {
    let mut out = Vec::new();
    let (mut x, mut a, mut b) = (v, alpha, beta);
    while let Some(w) = f.neighbor_by_color(x, b) {
        if f.parent(w) != Some(x) {
            break;
        }
        out.push((x, w, a));
        x = w;
        std::mem::swap(&mut a, &mut b);
    }
    out
}

fn trace_of(
    f: &ColoredForest,
    start: VertexId,
    changes: &[(VertexId, VertexId, Color)],
) -> RepairTrace {
    RepairTrace {
        start,
        swapped: changes
            .iter()
            .map(|&(a, b, c)| (EdgeKey::new(a, b), f.color(a, b).unwrap_or(UNCOLORED), c))
            .collect(),
    }
}

/// Repairs `v` after its parent edge changed from `alpha` to `beta` by
/// swapping the two colors down the bicolored path.
pub fn fix_forbidden(
    f: &mut ColoredForest,
    v: VertexId,
    alpha: Color,
    beta: Color,
) -> Result<RepairTrace, UpdateError> {
    let changes = forbidden_path(f, v, alpha, beta);
    let trace = trace_of(f, v, &changes);
    apply_colors(f, &changes)?;
    Ok(trace)
}

/// Attaches the root `r` below `p` with a color uniform over the free
/// colors at `p`, then repairs below `r`.
fn attach(
    f: &mut ColoredForest,
    p: VertexId,
    r: VertexId,
    rng: &mut Rng,
) -> Result<RepairTrace, UpdateError> {
    f.insert_topology(p, r, Some(p))?;
    let free = f.available(p).to_vec();
    let beta = free[rng.random_range(0..free.len())];
    root_to_child(f, p, r, beta, rng)
}

/// Colors the new parent edge `(p, r)` with `beta`; if a child edge of `r`
/// already has `beta` it moves to a uniform free color at `r` and the
/// conflict is pushed down.
pub fn root_to_child(
    f: &mut ColoredForest,
    p: VertexId,
    r: VertexId,
    beta: Color,
    rng: &mut Rng,
) -> Result<RepairTrace, UpdateError> {
    let hit = f.neighbor_by_color(r, beta).filter(|&w| w != p);
    let Some(w) = hit else {
        f.set_color(p, r, beta)?;
        return Ok(RepairTrace {
            start: r,
            swapped: Vec::new(),
        });
    };
    f.set_color(r, w, UNCOLORED)?;
    f.set_color(p, r, beta)?;
    let free = f.available(r).to_vec();
    let alpha = free[rng.random_range(0..free.len())];
    let mut changes = vec![(r, w, alpha)];
    changes.extend(forbidden_path(f, w, beta, alpha));
    let mut trace = trace_of(f, r, &changes);
    trace.swapped[0].1 = beta;
    apply_colors(f, &changes)?;
    Ok(trace)
}

/// Repairs the new root `r` after losing a parent edge of color `alpha`:
/// with probability `l/kappa` (`l` children) a uniform child edge takes
/// `alpha` and its old color is pushed down.
pub fn child_to_root(
    f: &mut ColoredForest,
    r: VertexId,
    alpha: Color,
    rng: &mut Rng,
) -> Result<RepairTrace, UpdateError> {
    let children = f.children(r);
    let kappa = f.kappa() as usize;
    let k = rng.random_range(0..kappa);
    let quiet = kappa - children.len();
    if k < quiet {
        return Ok(RepairTrace {
            start: r,
            swapped: Vec::new(),
        });
    }
    let w = children[k - quiet];
    let old = f.color(r, w).unwrap_or(UNCOLORED);
    let mut changes = vec![(r, w, alpha)];
    changes.extend(forbidden_path(f, w, old, alpha));
    let trace = trace_of(f, r, &changes);
    apply_colors(f, &changes)?;
    Ok(trace)
}

/// Replaces every color with a draw from the top-down distribution of the
/// current rooting: each vertex colors its child edges uniformly and
/// injectively from the palette minus its parent-edge color.
pub fn sample_uniform_coloring(f: &mut ColoredForest, rng: &mut Rng) {
    for (k, _) in f.edges() {
        f.set_color(k.a, k.b, UNCOLORED).expect("edge exists");
    }
    let kappa = f.kappa();
    for root in 0..f.n() {
        if !f.is_root(root) {
            continue;
        }
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            let up = f.parent(x).and_then(|p| f.color(x, p)).unwrap_or(UNCOLORED);
            let mut pool: Vec<Color> = (1..=kappa).filter(|&c| c != up).collect();
            for w in f.children(x) {
                let c = pool.swap_remove(rng.random_range(0..pool.len()));
                f.set_color(x, w, c).expect("drawn color is free");
                stack.push(w);
            }
        }
    }
}

/// Probability that one insertion above a complete tree recolors a fixed
/// edge `depth` levels below the old root: `1/(kappa (kappa-1)^(depth-1))`.
pub fn recolor_probability(kappa: u32, depth: u32) -> BigRational {
    assert!(depth >= 1, "depth starts at 1");
    let den = BigInt::from(kappa) * BigInt::from(kappa - 1).pow(depth - 1);
    BigRational::new(BigInt::from(1), den)
}

/// Expected recourse of one insertion joining the roots of two complete
/// `(delta-1)`-ary trees of depth `h`.
pub fn toggle_expectation(delta: u32, kappa: u32, h: u32) -> f64 {
    let p = f64::from(delta - 1) / f64::from(kappa - 1);
    let sum: f64 = (0..h).map(|i| p.powi(i as i32)).sum();
    f64::from(delta - 1) / f64::from(kappa) * sum
}

/// The randomized maintainer, rooted or unrooted.
#[derive(Debug, Clone)]
pub struct DistMaint {
    pub rooted: bool,
    pub rng: Rng,
    pub last_trace: RepairTrace,
}

impl DistMaint {
    pub fn new(rooted: bool, seed: u64) -> Self {
        DistMaint {
            rooted,
            rng: seeded(seed),
            last_trace: RepairTrace::default(),
        }
    }

    /// The endpoint to hang below the other one in the unrooted model.
    fn pick_child(f: &ColoredForest, u: VertexId, v: VertexId) -> VertexId {
        let eu = f.component_edge_count(u);
        let ev = f.component_edge_count(v);
        let delta = f.delta() as usize;
        let (ku, kv) = if eu <= delta && ev <= delta {
            (f.degree(u), f.degree(v))
        } else {
            (eu, ev)
        };
        if (kv, v) < (ku, u) {
            v
        } else {
            u
        }
    }
}

impl Maintainer for DistMaint {
    fn name(&self) -> &'static str {
        if self.rooted {
            "dist-maint-rooted"
        } else {
            "dist-maint"
        }
    }

    fn insert(
        &mut self,
        f: &mut ColoredForest,
        u: VertexId,
        v: VertexId,
        parent_hint: Option<VertexId>,
    ) -> Result<usize, UpdateError> {
        for x in [u, v] {
            if x >= f.n() {
                return Err(crate::forest::ForestError::VertexOutOfRange(x).into());
            }
        }
        let (p, r) = if self.rooted {
            let (p, r) = match parent_hint {
                Some(h) if h == v => (v, u),
                Some(_) => (u, v),
                None if f.is_root(v) => (u, v),
                None if f.is_root(u) => (v, u),
                None => return Err(UpdateError::NotRoot(v)),
            };
            if !f.is_root(r) {
                return Err(UpdateError::NotRoot(r));
            }
            (p, r)
        } else if f.has_edge(u, v) || f.same_component(u, v) || u == v {
            // let the topology layer report the precise error
            (u, v)
        } else {
            let child = Self::pick_child(f, u, v);
            (if child == v { u } else { v }, child)
        };
        f.begin_update();
        self.last_trace = attach(f, p, r, &mut self.rng)?;
        Ok(f.end_update())
    }

    fn delete(
        &mut self,
        f: &mut ColoredForest,
        u: VertexId,
        v: VertexId,
    ) -> Result<usize, UpdateError> {
        f.begin_update();
        let child = if v < f.n() && f.parent(v) == Some(u) {
            v
        } else {
            u
        };
        let alpha = f.delete_topology(u, v)?;
        self.last_trace = child_to_root(f, child, alpha, &mut self.rng)?;
        Ok(f.end_update())
    }
}
