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

//! Layered trees and the six-update cycle that makes greedy recolor a long
//! path twice per round trip.
//!
//! In a `P`-layered tree every non-leaf vertex at even depth colors its
//! child edges with exactly `P`, and every non-leaf vertex at odd depth with
//! exactly the complement of `P`.

use std::collections::VecDeque;

use super::{need_vertices, AdversaryError};
use crate::forest::{ColoredForest, VertexId};
use crate::greedy::TieBreaker;
use crate::palette::{Color, ColorSet, Palette};
use crate::sequence::Update;

/// A subset of `[1, kappa]`; its complement is implied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubPalette {
    colors: ColorSet,
    kappa: u32,
}

impl SubPalette {
    pub fn new(colors: ColorSet, kappa: u32) -> Self {
        SubPalette {
            colors: colors.intersection(ColorSet::full(kappa)),
            kappa,
        }
    }

    /// `{1, ..., k}`.
    pub fn prefix(k: u32, kappa: u32) -> Self {
        SubPalette::new((1..=k).collect(), kappa)
    }

    pub fn colors(&self) -> ColorSet {
        self.colors
    }

    pub fn complement(&self) -> SubPalette {
        SubPalette {
            colors: ColorSet::full(self.kappa).difference(self.colors),
            kappa: self.kappa,
        }
    }

    fn at_depth(&self, depth: usize) -> ColorSet {
        if depth % 2 == 0 {
            self.colors
        } else {
            self.complement().colors
        }
    }
}

/// Vertices of a perfect `p`-layered tree of the given depth.
pub fn layered_tree_size(p: &SubPalette, depth: u32) -> usize {
    let (a, b) = (p.colors.len(), p.complement().colors.len());
    let mut level = 1usize;
    let mut total = 1usize;
    for k in 0..depth {
        level *= if k % 2 == 0 { a } else { b };
        total += level;
    }
    total
}

/// Places a perfect `p`-layered tree of the given depth below `root`, using
/// fresh vertices from `*next_free` on in BFS order. Children are numbered
/// in increasing color order. Returns the tree's vertices in BFS order.
pub fn build_layered_tree(
    f: &mut ColoredForest,
    root: VertexId,
    p: &SubPalette,
    depth: u32,
    next_free: &mut VertexId,
) -> Result<Vec<VertexId>, AdversaryError> {
    let cap = f.delta() as usize - 1;
    if p.colors.len() > cap || p.complement().colors.len() > cap || p.kappa != f.kappa() {
        return Err(AdversaryError::NotApplicable(
            "layered sub-palettes need at most delta-1 colors each",
        ));
    }
    need_vertices(f, *next_free + layered_tree_size(p, depth) - 1)?;
    let mut order = vec![root];
    let mut level = vec![root];
    for k in 0..depth as usize {
        let mut below = Vec::new();
        for &x in &level {
            for c in p.at_depth(k).iter() {
                let y = *next_free;
                *next_free += 1;
                f.place_edge(x, y, c)?;
                below.push(y);
            }
        }
        order.extend_from_slice(&below);
        level = below;
    }
    Ok(order)
}

/// Whether the component of `root`, hung from `root`, is `p`-layered.
pub fn is_layered(f: &ColoredForest, root: VertexId, p: &SubPalette) -> bool {
    let mut queue = VecDeque::from([(root, None::<VertexId>, 0usize)]);
    while let Some((x, parent, depth)) = queue.pop_front() {
        let mut below = ColorSet::empty();
        let mut count = 0;
        for &(y, c) in f.neighbors(x) {
            if Some(y) == parent {
                continue;
            }
            below.insert(c);
            count += 1;
            queue.push_back((y, Some(x), depth + 1));
        }
        if count > 0 && (count != below.len() || below != p.at_depth(depth)) {
            return false;
        }
    }
    true
}

/// The initial state and one round of the greedy cycle.
#[derive(Debug, Clone)]
pub struct GreedyCycle {
    pub forest: ColoredForest,
    pub updates: [Update; 6],
    pub d1: u32,
    pub d2: u32,
    /// Recourse greedy pays per round.
    pub predicted: u64,
    pub roots: [VertexId; 4],
    pub cut_points: [VertexId; 2],
    pub p: SubPalette,
    /// Whether every insertion of the round has a single cheapest repair.
    /// Relinking `(u2, r3)` can also flip a root-to-leaf path of `T3`,
    /// which is exactly as long when `d` is a multiple of 3.
    pub unique_minimum: bool,
    /// New-edge colors that reproduce the initial state, one per insertion.
    pub script: [Color; 3],
}

impl GreedyCycle {
    /// Lexicographic ties when the minimum is unique, the script otherwise.
    pub fn ties(&self, rounds: usize) -> TieBreaker {
        if self.unique_minimum {
            TieBreaker::LexMin
        } else {
            TieBreaker::scripted(self.script.iter().copied().cycle().take(3 * rounds))
        }
    }
}

/// Two perfect layered trees of depth `d` (`P = {1..c+1}` and its
/// complement) and the cycle: cut `(u1, r4)` and `(u2, r3)`, link the roots,
/// relink `(u2, r3)`, cut the roots, relink `(u1, r4)`.
pub fn gen_greedy_cycle(palette: Palette, d: u32) -> Result<GreedyCycle, AdversaryError> {
    if d < 6 {
        return Err(AdversaryError::DepthTooSmall { depth: d, min: 6 });
    }
    let kappa = palette.kappa();
    let p = SubPalette::prefix(palette.extra() + 1, kappa);
    let q = p.complement();
    let n = layered_tree_size(&p, d) + layered_tree_size(&q, d);
    let mut f = ColoredForest::new(n, palette);
    let r1 = 0;
    let mut next = 1;
    build_layered_tree(&mut f, r1, &p, d, &mut next)?;
    let r2 = next;
    next += 1;
    build_layered_tree(&mut f, r2, &q, d, &mut next)?;
    let d1 = d / 3;
    let d2 = d1 - 1;
    let descend = |from: VertexId, steps: u32| (0..steps).fold(from, |x, _| f.children(x)[0]);
    let u1 = descend(r1, d1);
    let r4 = f.children(u1)[0];
    let u2 = descend(r2, d2);
    let r3 = f.children(u2)[0];
    let color = |a, b| f.color(a, b).expect("tree edge");
    let script = [color(r2, f.children(r2)[0]), color(u2, r3), color(u1, r4)];
    let updates = [
        Update::delete(u1, r4),
        Update::delete(u2, r3),
        Update::attach(r1, r2),
        Update::attach(u2, r3),
        Update::delete(r1, r2),
        Update::attach(u1, r4),
    ];
    Ok(GreedyCycle {
        forest: f,
        updates,
        d1,
        d2,
        predicted: u64::from(2 * d1 + 2 * d2 + 1),
        roots: [r1, r2, r3, r4],
        cut_points: [u1, u2],
        p,
        unique_minimum: d1 + d2 + 1 < d - d2 - 1,
        script,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::{Greedy, GreedyVariant};
    use crate::maintainer::Maintainer;

    #[test]
    fn small_layered_tree() {
        let mut f = ColoredForest::new(7, Palette::new(3, 1).unwrap());
        let p = SubPalette::prefix(2, 4);
        let mut next = 1;
        let order = build_layered_tree(&mut f, 0, &p, 2, &mut next).unwrap();
        assert_eq!(order, (0..7).collect::<Vec<_>>());
        assert_eq!(f.color(0, 1), Some(1));
        assert_eq!(f.color(0, 2), Some(2));
        for (x, kids) in [(1, [3, 4]), (2, [5, 6])] {
            assert_eq!(f.color(x, kids[0]), Some(3));
            assert_eq!(f.color(x, kids[1]), Some(4));
        }
        f.assert_proper().unwrap();
        assert!(is_layered(&f, 0, &p));
        assert!(!is_layered(&f, 0, &p.complement()));
        // viewed from a leaf the alternation breaks
        assert!(!is_layered(&f, 3, &p));
    }

    #[test]
    fn path_merge_recolors_root_to_leaf() {
        let palette = Palette::new(3, 1).unwrap();
        let p = SubPalette::prefix(2, 4);
        let size = layered_tree_size(&p, 3);
        let mut f = ColoredForest::new(2 * size, palette);
        let mut next = 1;
        build_layered_tree(&mut f, 0, &p, 3, &mut next).unwrap();
        let r2 = next;
        next += 1;
        build_layered_tree(&mut f, r2, &p.complement(), 3, &mut next).unwrap();
        let mut g = Greedy::new(GreedyVariant::Path);
        let r = g.insert(&mut f, 0, r2, Some(0)).unwrap();
        assert!(r >= 3, "a full root-to-leaf path, got {r}");
        f.assert_proper().unwrap();
    }

    #[test]
    fn cycle_shape() {
        let cyc = gen_greedy_cycle(Palette::new(3, 0).unwrap(), 9).unwrap();
        assert_eq!((cyc.d1, cyc.d2, cyc.predicted), (3, 2, 11));
        assert!(is_layered(&cyc.forest, cyc.roots[0], &cyc.p));
        assert!(is_layered(&cyc.forest, cyc.roots[1], &cyc.p.complement()));
        assert!(matches!(
            gen_greedy_cycle(Palette::new(3, 0).unwrap(), 5),
            Err(AdversaryError::DepthTooSmall { depth: 5, min: 6 })
        ));
    }

    #[test]
    fn greedy_cycle_is_a_fixed_point() {
        for (delta, c, d) in [
            (3, 0, 6),
            (3, 0, 9),
            (3, 1, 6),
            (4, 0, 6),
            (3, 1, 12),
            (4, 1, 10),
        ] {
            let cyc = gen_greedy_cycle(Palette::new(delta, c).unwrap(), d).unwrap();
            let mut f = cyc.forest.clone();
            let start = f.coloring_hash();
            let mut g = Greedy::with_ties(GreedyVariant::Exact, cyc.ties(3));
            for round in 0..3 {
                let before = f.ledger().total();
                for up in &cyc.updates {
                    g.apply(&mut f, up).unwrap();
                }
                let paid = f.ledger().total() - before;
                assert_eq!(
                    paid, cyc.predicted,
                    "delta={delta} c={c} d={d} round={round}"
                );
                assert_eq!(
                    f.coloring_hash(),
                    start,
                    "delta={delta} c={c} d={d} round={round}"
                );
            }
        }
    }
}
