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

//! Adaptive adversary that keeps every deterministic algorithm paying about
//! one recoloring per two updates.
//!
//! Each `(delta-1)`-subset `P` of the palette has an owner vertex. Stars of
//! degree `delta-1` are linked, center first, to the owner of the colors
//! their leaves use; an owner can keep at most `c+1` such stars, so further
//! links force a recoloring inside some star, and the adversary then cuts
//! every star whose leaf colors moved.

use num_traits::ToPrimitive;

use super::{adversary_thresholds, need_vertices, Adversary, AdversaryError};
use crate::forest::{ColoredForest, VertexId};
use crate::palette::{ColorSet, Palette};
use crate::sequence::Update;

#[derive(Debug, Clone)]
struct Star {
    center: VertexId,
    leaves: Vec<VertexId>,
    /// Owner and the leaf colors at link time.
    linked: Option<(VertexId, ColorSet)>,
}

#[derive(Debug, Clone)]
pub struct OwnerStars {
    palette: Palette,
    owners: Vec<ColorSet>,
    stars: Vec<Star>,
    build_pos: usize,
    steps: usize,
    links: usize,
    cuts: usize,
    n0: usize,
}

fn subsets(kappa: u32, size: usize) -> Vec<ColorSet> {
    fn rec(start: u32, kappa: u32, left: usize, cur: &mut ColorSet, out: &mut Vec<ColorSet>) {
        if left == 0 {
            out.push(*cur);
            return;
        }
        for c in start..=kappa {
            if (kappa - c + 1) as usize >= left {
                cur.insert(c);
                rec(c + 1, kappa, left - 1, cur, out);
                cur.remove(c);
            }
        }
    }
    let mut out = Vec::new();
    rec(1, kappa, size, &mut ColorSet::empty(), &mut out);
    out
}

/// The owner-star adversary for `steps` links on a forest of `n` vertices.
/// Owners take ids `0..B`; star `j` has center `B + j*delta` and its leaves
/// right after it.
pub fn make_fully_dynamic_det_adversary(
    palette: Palette,
    n: usize,
    steps: usize,
) -> Result<(ColoredForest, OwnerStars), AdversaryError> {
    let n0 = adversary_thresholds(palette)?
        .n0
        .to_usize()
        .ok_or(AdversaryError::NotApplicable(
            "owner-star threshold overflows",
        ))?;
    let f = ColoredForest::new(n, palette);
    need_vertices(&f, n0)?;
    let delta = palette.delta() as usize;
    let owners = subsets(palette.kappa(), delta - 1);
    let b = owners.len();
    let count = (palette.extra() as usize + 1) * b + 1;
    let stars = (0..count)
        .map(|j| {
            let center = b + j * delta;
            Star {
                center,
                leaves: (center + 1..center + delta).collect(),
                linked: None,
            }
        })
        .collect();
    Ok((
        f,
        OwnerStars {
            palette,
            owners,
            stars,
            build_pos: 0,
            steps,
            links: 0,
            cuts: 0,
            n0,
        },
    ))
}

impl OwnerStars {
    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn links(&self) -> usize {
        self.links
    }

    /// Stars cut after their leaf colors changed; each cost a recoloring.
    pub fn cuts(&self) -> usize {
        self.cuts
    }

    /// Sub-palette count `|P|`.
    pub fn palettes(&self) -> usize {
        self.owners.len()
    }

    /// Recolorings forced so far: every link beyond `(c+1)|P|` costs one.
    pub fn forced(&self) -> usize {
        self.links
            .saturating_sub((self.palette.extra() as usize + 1) * self.owners.len())
    }

    /// Lower bound on the amortized recourse after `s` links.
    pub fn amortized_bound(&self, s: usize) -> f64 {
        let free = (self.palette.extra() as usize + 1) * self.owners.len();
        s.saturating_sub(free) as f64 / (2 * s + self.n0) as f64
    }

    fn leaf_colors(f: &ColoredForest, star: &Star) -> ColorSet {
        star.leaves
            .iter()
            .filter_map(|&l| f.color(star.center, l))
            .collect()
    }
}

impl Adversary for OwnerStars {
    fn name(&self) -> &'static str {
        "adv:owner-stars"
    }

    fn next_update(&mut self, f: &ColoredForest) -> Option<Update> {
        let per = self.palette.delta() as usize - 1;
        if self.build_pos < self.stars.len() * per {
            let star = &self.stars[self.build_pos / per];
            let up = Update::attach(star.center, star.leaves[self.build_pos % per]);
            self.build_pos += 1;
            return Some(up);
        }
        for star in &mut self.stars {
            if let Some((owner, p)) = star.linked {
                if Self::leaf_colors(f, star) != p {
                    star.linked = None;
                    self.cuts += 1;
                    return Some(Update::delete(star.center, owner));
                }
            }
        }
        if self.links >= self.steps {
            return None;
        }
        let star = self.stars.iter_mut().find(|s| s.linked.is_none())?;
        let p = Self::leaf_colors(f, star);
        let owner = self.owners.iter().position(|&o| o == p)?;
        star.linked = Some((owner, p));
        self.links += 1;
        Some(Update::attach(owner, star.center))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::{Greedy, GreedyVariant};
    use crate::maintainer::Maintainer;

    #[test]
    fn subsets_in_order() {
        let s: Vec<Vec<u32>> = subsets(4, 2).iter().map(|c| c.to_vec()).collect();
        assert_eq!(s.len(), 6);
        assert_eq!(s[0], vec![1, 2]);
        assert_eq!(s[5], vec![3, 4]);
    }

    #[test]
    fn too_few_vertices() {
        let p = Palette::new(3, 0).unwrap();
        assert!(matches!(
            make_fully_dynamic_det_adversary(p, 14, 10),
            Err(AdversaryError::InsufficientVertices { need: 15, have: 14 })
        ));
    }

    #[test]
    fn greedy_pays_for_links() {
        let p = Palette::new(3, 0).unwrap();
        let (mut f, mut adv) = make_fully_dynamic_det_adversary(p, 15, 60).unwrap();
        let mut g = Greedy::new(GreedyVariant::Exact);
        while let Some(up) = adv.next_update(&f) {
            g.apply(&mut f, &up).unwrap();
            f.assert_proper().unwrap();
        }
        assert_eq!(adv.links(), 60);
        assert!(adv.cuts() >= adv.forced());
        assert!(f.ledger().total() as usize >= adv.cuts());
        assert!(f.ledger().amortized() >= adv.amortized_bound(60));
    }

    #[test]
    fn legal_against_every_deterministic_greedy() {
        for (delta, c) in [(3, 1), (4, 0), (4, 1)] {
            let p = Palette::new(delta, c).unwrap();
            for variant in [
                GreedyVariant::Exact,
                GreedyVariant::Shift,
                GreedyVariant::Path,
            ] {
                let n0 = adversary_thresholds(p).unwrap().n0.to_usize().unwrap();
                let (mut f, mut adv) = make_fully_dynamic_det_adversary(p, n0, 3 * n0).unwrap();
                let mut g = Greedy::new(variant);
                while let Some(up) = adv.next_update(&f) {
                    g.apply(&mut f, &up).unwrap();
                }
                f.assert_proper().unwrap();
                assert!(adv.cuts() >= adv.forced(), "{delta} {c} {variant:?}");
                assert!(
                    f.ledger().total() as usize >= adv.cuts(),
                    "{delta} {c} {variant:?}"
                );
            }
        }
    }
}
