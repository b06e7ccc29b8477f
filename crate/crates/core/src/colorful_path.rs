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

//! Rooted-forest coloring with `2*delta - 2` colors that repairs by walking
//! a single downward path.

use crate::forest::{ColoredForest, EdgeKey, VertexId};
use crate::maintainer::{Maintainer, UpdateError};
use crate::palette::{Color, UNCOLORED};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// A shared free color finished the repair.
    Stop,
    /// Moved to a child edge whose far end can finish next.
    StepToFree,
    /// Moved to a child edge whose color differs from the edge two levels up.
    StepAvoidGrandparent,
}

/// One colored edge of a repair walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CpStep {
    pub edge: EdgeKey,
    pub kind: StepKind,
    pub color_taken: Color,
    /// Color of the edge two levels above `edge` when the step ran, if any.
    pub grandparent_color: Option<Color>,
}

fn check_palette(f: &ColoredForest) -> Result<(), UpdateError> {
    let d = f.delta();
    if d < 3 || f.kappa() != 2 * d - 2 {
        return Err(UpdateError::WrongPalette {
            expected: "kappa = 2*delta - 2 with delta >= 3",
            delta: d,
            kappa: f.kappa(),
        });
    }
    Ok(())
}

/// Attaches the root `r` below `p` and repairs the coloring. Returns the
/// recourse and the repair walk.
pub fn cp_insert(
    f: &mut ColoredForest,
    p: VertexId,
    r: VertexId,
) -> Result<(usize, Vec<CpStep>), UpdateError> {
    check_palette(f)?;
    if r >= f.n() || !f.is_root(r) {
        return Err(UpdateError::NotRoot(r));
    }
    f.begin_update();
    f.insert_topology(p, r, Some(p))?;
    let mut trace = Vec::new();
    let (mut u, mut v) = (p, r);
    loop {
        let edge = EdgeKey::new(u, v);
        let gp_color = f
            .parent(u)
            .and_then(|pu| f.parent(pu).map(|g| (pu, g)))
            .and_then(|(pu, g)| f.color(pu, g));
        if let Some(c) = f.available_edge(u, v).first() {
            f.set_color(u, v, c)?;
            trace.push(CpStep {
                edge,
                kind: StepKind::Stop,
                color_taken: c,
                grandparent_color: gp_color,
            });
            break;
        }
        let (au, av) = (f.available(u), f.available(v));
        debug_assert_eq!(f.degree(u), f.delta() as usize);
        debug_assert_eq!(f.degree(v), f.delta() as usize);
        debug_assert_eq!(au, f.used(v));
        let children = f.children(v);
        let to_free = children.iter().copied().find(|&w| {
            let c = f.color(v, w).unwrap_or(UNCOLORED);
            au.contains(c) && !f.available(w).intersection(av).is_empty()
        });
        let (w, kind) = match to_free {
            Some(w) => (w, StepKind::StepToFree),
            None => {
                let w = children
                    .iter()
                    .copied()
                    .filter(|&w| f.color(v, w) != gp_color)
                    .min_by_key(|&w| f.color(v, w))
                    .expect("a full vertex has two child colors");
                (w, StepKind::StepAvoidGrandparent)
            }
        };
        let c = f.color(v, w).unwrap_or(UNCOLORED);
        f.set_color(v, w, UNCOLORED)?;
        f.set_color(u, v, c)?;
        trace.push(CpStep {
            edge,
            kind,
            color_taken: c,
            grandparent_color: gp_color,
        });
        u = v;
        v = w;
    }
    Ok((f.end_update(), trace))
}

/// Maintainer wrapper. Without a parent hint the endpoint that is a root
/// becomes the child (`v` preferred).
#[derive(Debug, Clone, Default)]
pub struct ColorfulPath {
    pub keep_traces: bool,
    pub last_trace: Vec<CpStep>,
}

impl Maintainer for ColorfulPath {
    fn name(&self) -> &'static str {
        "colorful-path"
    }

    fn insert(
        &mut self,
        f: &mut ColoredForest,
        u: VertexId,
        v: VertexId,
        parent_hint: Option<VertexId>,
    ) -> Result<usize, UpdateError> {
        let (p, r) = match parent_hint {
            Some(h) if h == v => (v, u),
            Some(_) => (u, v),
            None if v < f.n() && f.is_root(v) => (u, v),
            None if u < f.n() && f.is_root(u) => (v, u),
            None => return Err(UpdateError::NotRoot(v)),
        };
        let (rec, trace) = cp_insert(f, p, r)?;
        if self.keep_traces {
            self.last_trace = trace;
        }
        Ok(rec)
    }
}
