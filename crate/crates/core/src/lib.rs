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

//! Maintenance of proper edge colorings of dynamic forests under insertions
//! and deletions, with exact recourse accounting, adversarial workloads and
//! brute-force oracles.

pub mod acceptance;
pub mod adversaries;
pub mod colorful_path;
pub mod dist_maint;
pub mod forest;
pub mod greedy;
pub mod harness;
pub mod ledger;
pub mod maintainer;
pub mod oracles;
pub mod palette;
pub mod rng;
pub mod sequence;
pub mod sublinear;

pub use forest::{ColoredForest, EdgeKey, ForestError, SnapshotError, VertexId};
pub use ledger::RecourseLedger;
pub use maintainer::{Maintainer, UpdateError};
pub use palette::{Color, ColorSet, Palette, PaletteError, UNCOLORED};
pub use sequence::{ParseError, Update, UpdateKind};
