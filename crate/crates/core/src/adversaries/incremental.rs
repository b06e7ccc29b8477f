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

//! Insertion-only sequence on which greedy pays one recoloring per star.
//!
//! A hub `u` gets `delta - ell` leaves colored `ell+c+1..=kappa`. Star `i`
//! (`i = 1..=ell`) gets leaves colored `i..=ell+c` and is then linked to `u`;
//! the hub already uses every color the star misses, so each link costs one.

use super::AdversaryError;
use crate::forest::VertexId;
use crate::greedy::TieBreaker;
use crate::palette::{Color, Palette};
use crate::sequence::Update;

#[derive(Debug, Clone)]
pub struct IncrementalLb {
    pub palette: Palette,
    pub n: usize,
    pub ell: u32,
    pub updates: Vec<Update>,
    /// One color per insertion, for [`TieBreaker::Scripted`].
    pub script: Vec<Color>,
    pub predicted_recourse: u64,
}

impl IncrementalLb {
    pub fn ties(&self) -> TieBreaker {
        TieBreaker::scripted(self.script.iter().copied())
    }

    pub fn amortized(&self) -> f64 {
        self.predicted_recourse as f64 / self.updates.len() as f64
    }
}

fn insertions(delta: u32, c: u32, ell: u32) -> u32 {
    delta + (ell * ell + (2 * c + 1) * ell) / 2
}

fn choose_ell(delta: u32, c: u32) -> u32 {
    let lo = (2 * delta).isqrt();
    let hi = if lo * lo == 2 * delta { lo } else { lo + 1 };
    let score = |l: u32| f64::from(l) / f64::from(insertions(delta, c, l));
    let ell = if score(hi) > score(lo) { hi } else { lo };
    if ell + c + 1 > delta {
        1
    } else {
        ell
    }
}

pub fn gen_incremental_greedy_lb(palette: Palette) -> Result<IncrementalLb, AdversaryError> {
    let (delta, c) = (palette.delta(), palette.extra());
    if delta < 3 {
        return Err(AdversaryError::WrongPalette {
            expected: "delta >= 3",
            delta,
            kappa: palette.kappa(),
        });
    }
    let ell = choose_ell(delta, c);
    let mut updates = Vec::new();
    let mut script = Vec::new();
    let hub: VertexId = 0;
    let mut next: VertexId = 1;
    for color in ell + c + 1..=delta + c {
        updates.push(Update::attach(hub, next));
        script.push(color);
        next += 1;
    }
    for i in 1..=ell {
        let center = next;
        next += 1;
        for color in i..=ell + c {
            updates.push(Update::attach(center, next));
            script.push(color);
            next += 1;
        }
        updates.push(Update::attach(hub, center));
        script.push(i);
    }
    debug_assert_eq!(updates.len() as u32, insertions(delta, c, ell));
    Ok(IncrementalLb {
        palette,
        n: next,
        ell,
        updates,
        script,
        predicted_recourse: u64::from(ell),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::ColoredForest;
    use crate::greedy::{Greedy, GreedyVariant};
    use crate::maintainer::Maintainer;

    fn replay(lb: &IncrementalLb) -> ColoredForest {
        let mut f = ColoredForest::new(lb.n, lb.palette);
        let mut g = Greedy::with_ties(GreedyVariant::Exact, lb.ties());
        for up in &lb.updates {
            g.apply(&mut f, up).unwrap();
        }
        f.assert_proper().unwrap();
        assert_eq!(g.ties.remaining_script(), 0);
        f
    }

    #[test]
    fn delta_eight() {
        let lb = gen_incremental_greedy_lb(Palette::new(8, 0).unwrap()).unwrap();
        assert_eq!(
            (lb.ell, lb.updates.len(), lb.predicted_recourse),
            (4, 18, 4)
        );
        assert_eq!(replay(&lb).ledger().total(), 4);
    }

    #[test]
    fn clamped_to_one() {
        let lb = gen_incremental_greedy_lb(Palette::new(3, 1).unwrap()).unwrap();
        assert_eq!(lb.ell, 1);
        assert!((lb.amortized() - 0.2).abs() < 1e-12);
        assert_eq!(replay(&lb).ledger().total(), 1);
    }

    #[test]
    fn replay_matches_prediction_across_palettes() {
        for delta in 3..=12 {
            for c in 0..=delta - 2 {
                let lb = gen_incremental_greedy_lb(Palette::new(delta, c).unwrap()).unwrap();
                assert_eq!(
                    replay(&lb).ledger().total(),
                    lb.predicted_recourse,
                    "delta={delta} c={c}"
                );
            }
        }
    }
}
