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

//! Lower-bound constructions: static update generators and adaptive
//! adversaries that read the coloring before choosing the next update.

mod doubling;
mod incremental;
mod layered;
mod owner_stars;
mod random;
mod randomized;
mod structures;
mod thresholds;

pub use doubling::{
    doubling_length, doubling_levels, doubling_prediction, gen_delta2_doubling,
    gen_shift_star_reduction, Doubling, ShiftStars,
};
pub use incremental::{gen_incremental_greedy_lb, IncrementalLb};
pub use layered::{
    build_layered_tree, gen_greedy_cycle, is_layered, layered_tree_size, GreedyCycle, SubPalette,
};
pub use owner_stars::{make_fully_dynamic_det_adversary, OwnerStars};
pub use random::{
    random_incremental_updates, random_rooted_updates, random_small_instance, SmallInstance,
};
pub use randomized::{gen_toggle_trees, gen_toggle_workload, rand_c0_dynamic, rand_c0_incremental};
pub use structures::{caterpillar, complete_tree_edges, complete_tree_size};
pub use thresholds::{adversary_thresholds, binomial, Thresholds};

use thiserror::Error;

use crate::forest::{ColoredForest, ForestError};
use crate::greedy::TieBreaker;
use crate::palette::PaletteError;
use crate::sequence::Update;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdversaryError {
    #[error("construction needs {need} vertices, forest has {have}")]
    InsufficientVertices { need: u64, have: u64 },
    #[error("depth {depth} is below the minimum {min}")]
    DepthTooSmall { depth: u32, min: u32 },
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("construction needs {expected}, palette has delta={delta} kappa={kappa}")]
    WrongPalette {
        expected: &'static str,
        delta: u32,
        kappa: u32,
    },
    #[error(transparent)]
    Forest(#[from] ForestError),
    #[error(transparent)]
    Palette(#[from] PaletteError),
}

/// A source of updates that may look at the current forest and coloring.
pub trait Adversary {
    fn name(&self) -> &'static str;

    /// The next update, or `None` once the construction is finished.
    fn next_update(&mut self, f: &ColoredForest) -> Option<Update>;
}

/// A fixed prefix followed by a block repeated `repeats` times.
#[derive(Debug, Clone)]
pub struct Replay {
    name: &'static str,
    prefix: Vec<Update>,
    block: Vec<Update>,
    repeats: usize,
    pos: usize,
}

impl Replay {
    pub fn new(name: &'static str, updates: Vec<Update>) -> Self {
        Replay {
            name,
            prefix: updates,
            block: Vec::new(),
            repeats: 0,
            pos: 0,
        }
    }

    pub fn cycled(
        name: &'static str,
        prefix: Vec<Update>,
        block: Vec<Update>,
        repeats: usize,
    ) -> Self {
        Replay {
            name,
            prefix,
            block,
            repeats,
            pos: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.prefix.len() + self.block.len() * self.repeats
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every update, expanded.
    pub fn to_vec(&self) -> Vec<Update> {
        let mut out = self.prefix.clone();
        for _ in 0..self.repeats {
            out.extend_from_slice(&self.block);
        }
        out
    }
}

impl Adversary for Replay {
    fn name(&self) -> &'static str {
        self.name
    }

    fn next_update(&mut self, _f: &ColoredForest) -> Option<Update> {
        let i = self.pos;
        if i >= self.len() {
            return None;
        }
        self.pos += 1;
        if i < self.prefix.len() {
            Some(self.prefix[i])
        } else {
            let j = i - self.prefix.len();
            Some(self.block[j % self.block.len()])
        }
    }
}

/// Initial forest plus the adversary that drives it.
pub struct Workload {
    pub forest: ColoredForest,
    pub adversary: Box<dyn Adversary + Send>,
    /// Tie-break script for greedy; such runs are flagged as scripted.
    pub ties: Option<TieBreaker>,
    /// Reference value for the CSV bound column.
    pub bound: Option<f64>,
    /// Exact total recourse the construction forces, when known.
    pub predicted_total: Option<u64>,
}

impl std::fmt::Debug for Workload {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Workload")
            .field("adversary", &self.adversary.name())
            .field("n", &self.forest.n())
            .field("scripted", &self.ties.is_some())
            .field("bound", &self.bound)
            .finish()
    }
}

fn need_vertices(f: &ColoredForest, need: usize) -> Result<(), AdversaryError> {
    if f.n() < need {
        return Err(AdversaryError::InsufficientVertices {
            need: need as u64,
            have: f.n() as u64,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palette::Palette;

    #[test]
    fn replay_cycles_block() {
        let f = ColoredForest::new(3, Palette::new(2, 0).unwrap());
        let mut r = Replay::cycled(
            "t",
            vec![Update::insert(0, 1)],
            vec![Update::insert(1, 2), Update::delete(1, 2)],
            2,
        );
        assert_eq!(r.len(), 5);
        let got: Vec<Update> = std::iter::from_fn(|| r.next_update(&f)).collect();
        assert_eq!(got, r.to_vec());
        assert_eq!(got[3], Update::insert(1, 2));
    }
}
