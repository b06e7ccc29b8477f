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

//! Insertion with `kappa = delta` colors and sublinear worst-case recourse:
//! bicolored swaps are cut short after a per-level cap, and the cut edge
//! takes a third color, splitting the problem into two smaller subtrees.

use std::collections::HashMap;

use crate::forest::{ColoredForest, VertexId};
use crate::maintainer::{Maintainer, UpdateError};
use crate::palette::{Color, UNCOLORED};

/// Level count and per-conflict swap cap for a smaller tree of `n` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelPlan {
    pub ell: u32,
    pub cap: usize,
}

impl LevelPlan {
    pub fn new(n: usize, delta: u32) -> Self {
        let lg = if n > 1 { (n as f64).log2() } else { 0.0 };
        let ell = ((2.0 * lg).sqrt().round() as u32).max(1);
        let l = f64::from(ell);
        let raw = (n as f64).powf(1.0 / l) * 2f64.powf((l + 1.0) / 2.0)
            / f64::from(delta.saturating_sub(2).max(1));
        LevelPlan {
            ell,
            cap: (raw.ceil() as usize).max(1),
        }
    }

    /// Recourse budget: `sum_{i=1..ell} 2^(i-1) * cap`.
    pub fn budget(&self) -> u64 {
        ((1u64 << self.ell) - 1) * self.cap as u64
    }
}

/// Per-level conflict counts of one insertion.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SublinearTrace {
    pub plan: Option<LevelPlan>,
    pub conflicts_per_level: Vec<usize>,
}

type Path = Vec<(VertexId, VertexId)>;

/// Edges `(upper, lower)` of the bicolored path leaving `y` with color `a`,
/// then `b`, then `a`, ...
fn bicolored_path(f: &ColoredForest, y: VertexId, a: Color, b: Color) -> Path {
    let mut out = Vec::new();
    let (mut x, mut want, mut next) = (y, a, b);
    while let Some(w) = f.neighbor_by_color(x, want) {
        out.push((x, w));
        x = w;
        std::mem::swap(&mut want, &mut next);
    }
    out
}

/// Inserts `(u, v)` into a `kappa = delta` forest.
pub fn sublinear_insert(
    f: &mut ColoredForest,
    u: VertexId,
    v: VertexId,
    parent_hint: Option<VertexId>,
) -> Result<(usize, SublinearTrace), UpdateError> {
    if f.palette().extra() != 0 || f.delta() < 3 {
        return Err(UpdateError::WrongPalette {
            expected: "kappa = delta >= 3",
            delta: f.delta(),
            kappa: f.kappa(),
        });
    }
    f.begin_update();
    f.insert_topology(u, v, parent_hint)?;
    let tu = f.bfs_order(u, Some(v));
    let tv = f.bfs_order(v, Some(u));
    let ((top, bottom), order) = if (tv.len(), v) < (tu.len(), u) {
        ((u, v), tv)
    } else {
        ((v, u), tu)
    };
    let mut size: HashMap<VertexId, usize> = order.iter().map(|&(x, _)| (x, 0)).collect();
    for &(x, p) in order.iter().rev() {
        if let Some(p) = p {
            let s = size[&x] + 1;
            *size.get_mut(&p).unwrap() += s;
        }
    }
    let plan = LevelPlan::new(order.len() - 1, f.delta());
    let mut trace = SublinearTrace {
        plan: Some(plan),
        conflicts_per_level: Vec::new(),
    };
    let mut level = vec![(top, bottom)];
    let mut depth = 1;
    while !level.is_empty() {
        debug_assert!(level.len() <= 1 << (depth - 1));
        trace.conflicts_per_level.push(level.len());
        let last = depth >= plan.ell;
        let mut next = Vec::new();
        for (x, y) in level {
            fix(f, x, y, plan.cap, last, &size, &mut next)?;
        }
        level = next;
        depth += 1;
    }
    Ok((f.end_update(), trace))
}

/// Resolves the uncolored edge `(x, y)`, `y` below `x`. Pushes any new
/// conflicts onto `spawned`.
fn fix(
    f: &mut ColoredForest,
    x: VertexId,
    y: VertexId,
    cap: usize,
    last: bool,
    size: &HashMap<VertexId, usize>,
    spawned: &mut Vec<(VertexId, VertexId)>,
) -> Result<(), UpdateError> {
    if let Some(c) = f.available_edge(x, y).first() {
        f.set_color(x, y, c)?;
        return Ok(());
    }
    let (ax, ay) = (f.available(x), f.available(y));
    let mut best: Option<(usize, Color, Color, Path)> = None;
    for a in ax.iter() {
        for b in ay.iter() {
            let path = bicolored_path(f, y, a, b);
            if best.as_ref().is_none_or(|(len, ..)| path.len() < *len) {
                best = Some((path.len(), a, b, path));
            }
        }
    }
    let (len, a, b, path) = best.expect("both endpoints have a free color");
    if len <= cap || last {
        swap_prefix(f, &path, path.len(), a, b)?;
        f.set_color(x, y, a)?;
        return Ok(());
    }
    // truncate at p_i (1-based) with a third color gamma
    let edge_size = |p: VertexId, c: Color| -> usize {
        f.neighbor_by_color(p, c)
            .map(|w| {
                if f_is_below(size, p, w) {
                    size[&w] + 1
                } else {
                    0
                }
            })
            .unwrap_or(0)
    };
    let mut choice: Option<(usize, usize, Color)> = None;
    for i in 1..=cap.min(len) {
        let (upper, lower) = path[i - 1];
        for g in f.palette().all().iter().filter(|&g| g != a && g != b) {
            let cost = edge_size(upper, g).max(edge_size(lower, g));
            if choice.is_none_or(|(c, ..)| cost < c) {
                choice = Some((cost, i, g));
            }
        }
    }
    let (_, i, gamma) = choice.expect("delta >= 3 leaves a third color");
    let (upper, lower) = path[i - 1];
    f.set_color(upper, lower, UNCOLORED)?;
    swap_prefix(f, &path, i - 1, a, b)?;
    f.set_color(x, y, a)?;
    for p in [upper, lower] {
        if let Some(w) = f.neighbor_by_color(p, gamma) {
            f.set_color(p, w, UNCOLORED)?;
            spawned.push((p, w));
        }
    }
    f.set_color(upper, lower, gamma)?;
    Ok(())
}

fn f_is_below(size: &HashMap<VertexId, usize>, p: VertexId, w: VertexId) -> bool {
    size.contains_key(&w) && size[&w] < size[&p]
}

/// Swaps `a` and `b` on the first `k` path edges (edge `j` held `a` when `j`
/// is even).
fn swap_prefix(
    f: &mut ColoredForest,
    path: &[(VertexId, VertexId)],
    k: usize,
    a: Color,
    b: Color,
) -> Result<(), UpdateError> {
    for &(p, q) in &path[..k] {
        f.set_color(p, q, UNCOLORED)?;
    }
    for (j, &(p, q)) in path[..k].iter().enumerate() {
        f.set_color(p, q, if j % 2 == 0 { b } else { a })?;
    }
    Ok(())
}

/// Maintainer wrapper; deletions keep the coloring.
#[derive(Debug, Clone, Default)]
pub struct Sublinear {
    pub last_trace: SublinearTrace,
}

impl Maintainer for Sublinear {
    fn name(&self) -> &'static str {
        "sublinear-delta"
    }

    fn insert(
        &mut self,
        f: &mut ColoredForest,
        u: VertexId,
        v: VertexId,
        parent_hint: Option<VertexId>,
    ) -> Result<usize, UpdateError> {
        let (r, trace) = sublinear_insert(f, u, v, parent_hint)?;
        self.last_trace = trace;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palette::Palette;

    #[test]
    fn plan_values() {
        let p = LevelPlan::new(1 << 16, 4);
        // lg N = 16, sqrt(32) = 5.66 -> 6 levels
        assert_eq!(p.ell, 6);
        let d = (2f64.powf(16.0 / 6.0) * 2f64.powf(3.5) / 2.0).ceil() as usize;
        assert_eq!(p.cap, d);
        assert_eq!(p.budget(), 63 * d as u64);
        assert_eq!(LevelPlan::new(0, 3), LevelPlan { ell: 1, cap: 1 });
    }

    #[test]
    fn shared_color_costs_nothing() {
        let mut f = ColoredForest::new(4, Palette::new(3, 0).unwrap());
        f.insert_topology(0, 1, None).unwrap();
        f.set_color(0, 1, 1).unwrap();
        let (r, _) = sublinear_insert(&mut f, 1, 2, None).unwrap();
        assert_eq!(r, 0);
        f.assert_proper().unwrap();
    }

    #[test]
    fn rejects_extra_colors() {
        let mut f = ColoredForest::new(2, Palette::new(3, 1).unwrap());
        assert!(matches!(
            sublinear_insert(&mut f, 0, 1, None),
            Err(UpdateError::WrongPalette { .. })
        ));
    }

    #[test]
    fn blocked_star_pair() {
        let mut f = ColoredForest::new(6, Palette::new(3, 0).unwrap());
        for (a, b, c) in [(0, 1, 1), (0, 2, 2), (3, 4, 3), (3, 5, 1)] {
            f.insert_topology(a, b, Some(a)).unwrap();
            f.set_color(a, b, c).unwrap();
        }
        let (r, _) = sublinear_insert(&mut f, 0, 3, None).unwrap();
        // no shared free color: one swap on the bicolored path from 0
        assert_eq!(r, 1);
        f.assert_proper().unwrap();
    }
}
