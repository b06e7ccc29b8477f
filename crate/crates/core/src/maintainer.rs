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

//! The interface shared by every update algorithm.

use thiserror::Error;

use crate::forest::{ColoredForest, ForestError, VertexId};
use crate::palette::Color;
use crate::sequence::{Update, UpdateKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UpdateError {
    #[error(transparent)]
    Forest(#[from] ForestError),
    #[error("scripted tie-break list exhausted")]
    ScriptExhausted,
    #[error("scripted color {choice} is not among the optimal choices {options:?}")]
    ScriptedChoiceNotOptimal { choice: Color, options: Vec<Color> },
    #[error("vertex {0} is not the root of its component")]
    NotRoot(VertexId),
    #[error("algorithm needs {expected}, palette has delta={delta} kappa={kappa}")]
    WrongPalette {
        expected: &'static str,
        delta: u32,
        kappa: u32,
    },
}

/// A dynamic edge-coloring algorithm. Each call performs one update and
/// returns its recourse, which is also appended to the forest's ledger.
pub trait Maintainer {
    fn name(&self) -> &'static str;

    fn insert(
        &mut self,
        f: &mut ColoredForest,
        u: VertexId,
        v: VertexId,
        parent_hint: Option<VertexId>,
    ) -> Result<usize, UpdateError>;

    /// Removes the edge and keeps every other color.
    fn delete(
        &mut self,
        f: &mut ColoredForest,
        u: VertexId,
        v: VertexId,
    ) -> Result<usize, UpdateError> {
        f.begin_update();
        f.delete_topology(u, v)?;
        Ok(f.end_update())
    }

    fn apply(&mut self, f: &mut ColoredForest, up: &Update) -> Result<usize, UpdateError> {
        match up.kind {
            UpdateKind::Insert => self.insert(f, up.u, up.v, up.parent_hint),
            UpdateKind::Delete => self.delete(f, up.u, up.v),
        }
    }
}

/// Uncolors every listed edge whose color changes, then assigns the new
/// colors, so that intermediate states never clash.
pub fn apply_colors(
    f: &mut ColoredForest,
    changes: &[(VertexId, VertexId, Color)],
) -> Result<(), ForestError> {
    for &(a, b, c) in changes {
        if f.color(a, b) != Some(c) {
            f.set_color(a, b, crate::palette::UNCOLORED)?;
        }
    }
    for &(a, b, c) in changes {
        f.set_color(a, b, c)?;
    }
    Ok(())
}
