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

//! Path doubling for two colors, and its embedding into same-palette star
//! centers for shift-based algorithms.
//!
//! Paths of equal length are merged in pairs. An even path has endpoints
//! with different free colors, so one of them can always be joined to the
//! other path's endpoint with no common free color; one whole path must
//! then flip. Odd paths are first extended by one fresh vertex.

use std::collections::{BTreeMap, VecDeque};

use super::{need_vertices, Adversary, AdversaryError};
use crate::forest::{ColoredForest, VertexId};
use crate::palette::{ColorSet, Palette};
use crate::sequence::Update;

/// Path length after `i` levels: `(4*2^i - 4 - (i mod 2)) / 3`.
pub fn doubling_length(i: u32) -> u64 {
    ((4u64 << i) - 4 - u64::from(i % 2)) / 3
}

/// Largest level count whose final path fits in `pool` vertices.
pub fn doubling_levels(pool: usize) -> u32 {
    let mut ell = 0;
    while doubling_length(ell + 1) < pool as u64 {
        ell += 1;
    }
    ell
}

/// Exact recourse greedy pays over `ell` levels: a merge at level `i`
/// flips a path of length `d_i`, and level `i` has `2^(ell-1-i)` merges.
pub fn doubling_prediction(ell: u32) -> u64 {
    (1..ell)
        .map(|i| (1u64 << (ell - 1 - i)) * doubling_length(i))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PathEnds {
    a: VertexId,
    b: VertexId,
    len: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stage {
    Seed(usize),
    Pair(usize),
    Done,
}

/// Adaptive doubling over a vertex pool of degree-two slots.
#[derive(Debug, Clone)]
pub struct Doubling {
    pool: Vec<VertexId>,
    levels: u32,
    fresh: usize,
    stage: Stage,
    paths: Vec<PathEnds>,
    merged: Vec<PathEnds>,
    /// Lengths of each merged pair, extended path first.
    pub merges: Vec<(u64, u64)>,
}

impl Doubling {
    pub fn new(pool: Vec<VertexId>) -> Self {
        let levels = doubling_levels(pool.len());
        let seeds = if levels == 0 {
            0
        } else {
            1usize << (levels - 1)
        };
        Doubling {
            fresh: 2 * seeds,
            pool,
            levels,
            stage: if levels == 0 {
                Stage::Done
            } else {
                Stage::Seed(0)
            },
            paths: Vec::new(),
            merged: Vec::new(),
            merges: Vec::new(),
        }
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    /// Greedy's recourse per level, `i = 1..levels-1`.
    pub fn per_level_recourse(&self) -> Vec<u64> {
        (1..self.levels)
            .map(|i| (1u64 << (self.levels - 1 - i)) * doubling_length(i))
            .collect()
    }

    pub fn predicted(&self) -> u64 {
        doubling_prediction(self.levels)
    }

    fn merge(&mut self, f: &ColoredForest, i: usize) -> Update {
        let (p, q) = (self.paths[2 * i], self.paths[2 * i + 1]);
        let (x, w) = [(p.a, q.a), (p.a, q.b), (p.b, q.a), (p.b, q.b)]
            .into_iter()
            .find(|&(x, w)| f.available(x) != f.available(w))
            .unwrap_or((p.a, q.a));
        let far = |e: PathEnds, end: VertexId| if e.a == end { e.b } else { e.a };
        self.merges.push((p.len, q.len));
        self.merged.push(PathEnds {
            a: far(p, x),
            b: far(q, w),
            len: p.len + q.len + 1,
        });
        Update::insert(x, w)
    }
}

impl Adversary for Doubling {
    fn name(&self) -> &'static str {
        "adv:delta2"
    }

    fn next_update(&mut self, f: &ColoredForest) -> Option<Update> {
        loop {
            match self.stage {
                Stage::Done => return None,
                Stage::Seed(k) => {
                    if 2 * k < self.fresh {
                        let (a, b) = (self.pool[2 * k], self.pool[2 * k + 1]);
                        self.paths.push(PathEnds { a, b, len: 1 });
                        self.stage = Stage::Seed(k + 1);
                        return Some(Update::insert(a, b));
                    }
                    self.stage = Stage::Pair(0);
                }
                Stage::Pair(i) => {
                    if 2 * i >= self.paths.len() {
                        if self.merged.is_empty() {
                            self.stage = Stage::Done;
                        } else {
                            self.paths = std::mem::take(&mut self.merged);
                            self.stage = Stage::Pair(0);
                        }
                        continue;
                    }
                    if self.paths.len() == 1 {
                        self.stage = Stage::Done;
                        continue;
                    }
                    let p = self.paths[2 * i];
                    if p.len % 2 == 1 {
                        let y = self.pool[self.fresh];
                        self.fresh += 1;
                        self.paths[2 * i] = PathEnds {
                            b: y,
                            len: p.len + 1,
                            ..p
                        };
                        return Some(Update::insert(p.b, y));
                    }
                    self.stage = Stage::Pair(i + 1);
                    return Some(self.merge(f, i));
                }
            }
        }
    }
}

/// The two-color doubling adversary on `n` vertices.
pub fn gen_delta2_doubling(n: usize) -> Result<(ColoredForest, Doubling), AdversaryError> {
    let f = ColoredForest::new(n, Palette::new(2, 0)?);
    need_vertices(&f, 2)?;
    Ok((f, Doubling::new((0..n).collect())))
}

/// Builds `K = floor(n / (delta-1))` stars of degree `delta-2`, groups the
/// centers by leaf colors, and runs [`Doubling`] on each group. Centers keep
/// two free slots and two free colors, so they behave as a two-color forest
/// as long as no star edge is recolored.
#[derive(Debug, Clone)]
pub struct ShiftStars {
    palette: Palette,
    centers: Vec<VertexId>,
    build: VecDeque<Update>,
    palettes: Vec<ColorSet>,
    groups: VecDeque<Doubling>,
    current: Option<Doubling>,
}

pub fn gen_shift_star_reduction(
    palette: Palette,
    n: usize,
) -> Result<(ColoredForest, ShiftStars), AdversaryError> {
    if palette.extra() != 0 {
        return Err(AdversaryError::NotApplicable(
            "only the c = 0 reduction is implemented",
        ));
    }
    if palette.delta() < 3 {
        return Err(AdversaryError::WrongPalette {
            expected: "delta >= 3",
            delta: palette.delta(),
            kappa: palette.kappa(),
        });
    }
    let f = ColoredForest::new(n, palette);
    let per = palette.delta() as usize - 1;
    need_vertices(&f, 2 * per)?;
    let stars = n / per;
    let mut build = VecDeque::new();
    let centers: Vec<VertexId> = (0..stars).map(|j| j * per).collect();
    for &c in &centers {
        for leaf in c + 1..c + per {
            build.push_back(Update::attach(c, leaf));
        }
    }
    Ok((
        f,
        ShiftStars {
            palette,
            centers,
            build,
            palettes: Vec::new(),
            groups: VecDeque::new(),
            current: None,
        },
    ))
}

impl ShiftStars {
    pub fn star_count(&self) -> usize {
        self.centers.len()
    }

    /// Number of possible star palettes, `C(delta, 2)`.
    pub fn palette_count(&self) -> usize {
        let d = self.palette.delta() as usize;
        d * (d - 1) / 2
    }

    /// `(K/4) * lg(K/B)`.
    pub fn bound(&self) -> f64 {
        let k = self.star_count() as f64;
        let b = self.palette_count() as f64;
        (k / 4.0) * (k / b).log2().max(0.0)
    }

    /// Whether every star still shows the leaf colors it had when grouped.
    pub fn star_palettes_intact(&self, f: &ColoredForest) -> bool {
        let per = self.palette.delta() as usize - 1;
        self.palettes.is_empty()
            || self.centers.iter().zip(&self.palettes).all(|(&c, &p)| {
                (c + 1..c + per)
                    .filter_map(|l| f.color(c, l))
                    .collect::<ColorSet>()
                    == p
            })
    }

    fn group(&mut self, f: &ColoredForest) {
        let per = self.palette.delta() as usize - 1;
        let mut by_palette: BTreeMap<Vec<u32>, Vec<VertexId>> = BTreeMap::new();
        for &c in &self.centers {
            let p: ColorSet = (c + 1..c + per).filter_map(|l| f.color(c, l)).collect();
            self.palettes.push(p);
            by_palette.entry(p.to_vec()).or_default().push(c);
        }
        self.groups = by_palette.into_values().map(Doubling::new).collect();
    }
}

impl Adversary for ShiftStars {
    fn name(&self) -> &'static str {
        "adv:shift-stars"
    }

    fn next_update(&mut self, f: &ColoredForest) -> Option<Update> {
        if let Some(up) = self.build.pop_front() {
            return Some(up);
        }
        if self.palettes.is_empty() {
            self.group(f);
        }
        loop {
            if let Some(d) = self.current.as_mut() {
                if let Some(up) = d.next_update(f) {
                    return Some(up);
                }
            }
            self.current = Some(self.groups.pop_front()?);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::{Greedy, GreedyVariant};
    use crate::maintainer::Maintainer;

    #[test]
    fn lengths() {
        assert_eq!(
            (1..=4).map(doubling_length).collect::<Vec<_>>(),
            vec![1, 4, 9, 20]
        );
        for i in 1..20 {
            let d = doubling_length(i);
            assert_eq!(doubling_length(i + 1), 2 * d + 1 + d % 2);
        }
        assert_eq!(doubling_levels(2), 1);
        assert_eq!(doubling_levels(5), 2);
        assert_eq!(doubling_levels(10), 3);
        assert_eq!(doubling_levels(9), 2);
    }

    fn run(n: usize) -> (ColoredForest, Doubling) {
        let (mut f, mut adv) = gen_delta2_doubling(n).unwrap();
        let mut g = Greedy::new(GreedyVariant::Exact);
        while let Some(up) = adv.next_update(&f) {
            g.apply(&mut f, &up).unwrap();
        }
        f.assert_proper().unwrap();
        (f, adv)
    }

    #[test]
    fn greedy_pays_the_prediction() {
        for n in [2, 5, 10, 64, 300] {
            let (f, adv) = run(n);
            let ell = adv.levels();
            assert_eq!(f.edge_count() as u64, doubling_length(ell), "n={n}");
            assert_eq!(f.ledger().total(), adv.predicted(), "n={n}");
            assert_eq!(
                adv.per_level_recourse().iter().sum::<u64>(),
                adv.predicted()
            );
            assert!(adv.merges.iter().all(|&(p, _)| p % 2 == 0), "n={n}");
        }
    }

    #[test]
    fn shift_reduction_keeps_star_palettes() {
        let p = Palette::new(4, 0).unwrap();
        let (mut f, mut adv) = gen_shift_star_reduction(p, 300).unwrap();
        let mut g = Greedy::new(GreedyVariant::Shift);
        while let Some(up) = adv.next_update(&f) {
            g.apply(&mut f, &up).unwrap();
            assert!(adv.star_palettes_intact(&f));
        }
        f.assert_proper().unwrap();
        assert!(f.ledger().total() as f64 >= adv.bound());
    }
}
