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

//! Greedy update rules: exact minimum recourse via tree DP, shift chains
//! (with and without fans), and the smallest-subtree shifting heuristic.

use std::collections::{HashMap, HashSet, VecDeque};

use pathfinding::kuhn_munkres::kuhn_munkres_min;
use pathfinding::matrix::Matrix;
use rand::Rng as _;

use crate::forest::{ColoredForest, EdgeKey, VertexId};
use crate::maintainer::{apply_colors, Maintainer, UpdateError};
use crate::palette::{Color, ColorSet, UNCOLORED};
use crate::rng::{seeded, Rng};

/// How to pick among equally cheap colors for a new edge.
#[derive(Debug, Clone)]
pub enum TieBreaker {
    LexMin,
    /// Consumed front to back, one entry per insertion, even when only one
    /// color is optimal.
    Scripted(VecDeque<Color>),
    SeededRandom(Box<Rng>),
}

impl TieBreaker {
    pub fn scripted<I: IntoIterator<Item = Color>>(choices: I) -> Self {
        TieBreaker::Scripted(choices.into_iter().collect())
    }

    pub fn seeded(seed: u64) -> Self {
        TieBreaker::SeededRandom(Box::new(seeded(seed)))
    }

    /// Picks one of `options` (sorted, nonempty).
    pub fn choose(&mut self, options: &[Color]) -> Result<Color, UpdateError> {
        debug_assert!(!options.is_empty());
        match self {
            TieBreaker::LexMin => Ok(options[0]),
            TieBreaker::Scripted(queue) => {
                let choice = queue.pop_front().ok_or(UpdateError::ScriptExhausted)?;
                if options.contains(&choice) {
                    Ok(choice)
                } else {
                    Err(UpdateError::ScriptedChoiceNotOptimal {
                        choice,
                        options: options.to_vec(),
                    })
                }
            }
            TieBreaker::SeededRandom(_) if options.len() == 1 => Ok(options[0]),
            TieBreaker::SeededRandom(rng) => Ok(options[rng.random_range(0..options.len())]),
        }
    }

    pub fn remaining_script(&self) -> usize {
        match self {
            TieBreaker::Scripted(q) => q.len(),
            _ => 0,
        }
    }
}

/// One side of a new edge, hung from its endpoint with the other endpoint
/// cut away. Index 0 is the root.
struct LocalTree {
    verts: Vec<VertexId>,
    children: Vec<Vec<usize>>,
    // original color of the edge to the parent, 0 at the root
    up_color: Vec<Color>,
}

impl LocalTree {
    fn build(f: &ColoredForest, root: VertexId, avoid: VertexId) -> Self {
        let order = f.bfs_order(root, Some(avoid));
        let mut index = HashMap::with_capacity(order.len());
        let mut verts = Vec::with_capacity(order.len());
        let mut children = vec![Vec::new(); order.len()];
        let mut up_color = vec![UNCOLORED; order.len()];
        for (i, &(v, p)) in order.iter().enumerate() {
            index.insert(v, i);
            verts.push(v);
            if let Some(p) = p {
                let pi = index[&p];
                children[pi].push(i);
                up_color[i] = f.color(p, v).unwrap_or(UNCOLORED);
            }
        }
        LocalTree {
            verts,
            children,
            up_color,
        }
    }

    /// `table[x][b]`: least number of recolorings inside the subtree of `x`
    /// (its parent edge included, except at the root) when the edge above `x`
    /// ends up colored `b`.
    fn table(&self, kappa: u32) -> Vec<Vec<u32>> {
        let k = kappa as usize;
        let mut table = vec![vec![0u32; k + 1]; self.verts.len()];
        for x in (0..self.verts.len()).rev() {
            let mut row = vec![0u32; k + 1];
            for beta in 1..=kappa {
                let (cost, _) = assign(&self.children[x], beta, kappa, &table);
                let change = u32::from(x != 0 && beta != self.up_color[x]);
                row[beta as usize] = change + cost;
            }
            table[x] = row;
        }
        table
    }

    /// Colors of every edge in the tree once the edge above the root takes
    /// `beta`.
    fn reconstruct(
        &self,
        beta: Color,
        kappa: u32,
        table: &[Vec<u32>],
        out: &mut Vec<(VertexId, VertexId, Color)>,
    ) {
        let mut stack = vec![(0usize, beta)];
        while let Some((x, b)) = stack.pop() {
            let (_, cols) = assign(&self.children[x], b, kappa, table);
            for (&ch, &c) in self.children[x].iter().zip(&cols) {
                out.push((self.verts[x], self.verts[ch], c));
                stack.push((ch, c));
            }
        }
    }
}

/// Minimum-cost injective assignment of `children` to colors other than
/// `beta`, with cost `table[child][color]`.
fn assign(children: &[usize], beta: Color, kappa: u32, table: &[Vec<u32>]) -> (u32, Vec<Color>) {
    match children {
        [] => (0, Vec::new()),
        [ch] => {
            let row = &table[*ch];
            let best = (1..=kappa)
                .filter(|&b| b != beta)
                .min_by_key(|&b| (row[b as usize], b))
                .expect("palette has a second color");
            (row[best as usize], vec![best])
        }
        _ => {
            let cols: Vec<Color> = (1..=kappa).filter(|&b| b != beta).collect();
            let weights = Matrix::from_fn(children.len(), cols.len(), |(i, j)| {
                i64::from(table[children[i]][cols[j] as usize])
            });
            let (cost, picks) = kuhn_munkres_min(&weights);
            (cost as u32, picks.into_iter().map(|j| cols[j]).collect())
        }
    }
}

/// Inserts `(u, v)` and recolors a minimum set of existing edges.
pub fn greedy_insert(
    f: &mut ColoredForest,
    u: VertexId,
    v: VertexId,
    parent_hint: Option<VertexId>,
    tb: &mut TieBreaker,
) -> Result<usize, UpdateError> {
    f.begin_update();
    f.insert_topology(u, v, parent_hint)?;
    let kappa = f.kappa();
    let tu = LocalTree::build(f, u, v);
    let tv = LocalTree::build(f, v, u);
    let pu = tu.table(kappa);
    let pv = tv.table(kappa);
    let total = |b: Color| pu[0][b as usize] + pv[0][b as usize];
    let best = (1..=kappa).map(total).min().expect("nonempty palette");
    let tied: Vec<Color> = (1..=kappa).filter(|&b| total(b) == best).collect();
    let beta = tb.choose(&tied)?;
    let mut changes = Vec::with_capacity(tu.verts.len() + tv.verts.len());
    tu.reconstruct(beta, kappa, &pu, &mut changes);
    tv.reconstruct(beta, kappa, &pv, &mut changes);
    changes.push((u, v, beta));
    apply_colors(f, &changes)?;
    let r = f.end_update();
    debug_assert_eq!(r as u32, best);
    Ok(r)
}

/// A position in a shift chain: `g` is uncolored, `x` is the endpoint the
/// chain arrived through, and `lambda` is the color that has left `x` along
/// the chain (0 if none).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct ChainState {
    g: EdgeKey,
    x: VertexId,
    lambda: Color,
}

struct ChainView<'a> {
    f: &'a ColoredForest,
}

impl ChainView<'_> {
    fn col(&self, g: EdgeKey) -> Color {
        self.f.color(g.a, g.b).unwrap_or(UNCOLORED)
    }

    fn near(&self, s: &ChainState) -> ColorSet {
        let mut a = self.f.available(s.x);
        if s.lambda != UNCOLORED {
            a.insert(s.lambda);
        }
        a
    }

    fn far(&self, s: &ChainState) -> ColorSet {
        let mut a = self.f.available(s.g.other(s.x));
        let c = self.col(s.g);
        if c != UNCOLORED {
            a.insert(c);
        }
        a
    }

    fn stop_colors(&self, s: &ChainState) -> ColorSet {
        self.near(s).intersection(self.far(s))
    }

    /// Legal next states, sorted by the color moved and then by vertex.
    fn moves(&self, s: &ChainState, fans: bool) -> Vec<(Color, VertexId, ChainState)> {
        let fv = s.g.other(s.x);
        let near = self.near(s);
        let mut out = Vec::new();
        for &(y, c) in self.f.neighbors(fv) {
            if y != s.x && near.contains(c) {
                let lambda = self.col(s.g);
                out.push((
                    c,
                    y,
                    ChainState {
                        g: EdgeKey::new(fv, y),
                        x: fv,
                        lambda,
                    },
                ));
            }
        }
        if fans {
            let far = self.f.available(fv);
            for &(y, c) in self.f.neighbors(s.x) {
                if y != fv && c != s.lambda && far.contains(c) {
                    out.push((
                        c,
                        y,
                        ChainState {
                            g: EdgeKey::new(s.x, y),
                            ..*s
                        },
                    ));
                }
            }
        }
        out.sort_by_key(|&(c, y, _)| (c, y));
        out
    }
}

/// Applies a chain: each edge takes the original color of its successor, the
/// last edge takes the lowest free color.
fn apply_chain(
    f: &mut ColoredForest,
    chain: &[ChainState],
    stop: Color,
) -> Result<(), UpdateError> {
    let view = ChainView { f };
    let mut changes = Vec::with_capacity(chain.len());
    for w in chain.windows(2) {
        changes.push((w[0].g.a, w[0].g.b, view.col(w[1].g)));
    }
    let last = chain.last().expect("chain starts at the new edge");
    changes.push((last.g.a, last.g.b, stop));
    apply_colors(f, &changes)?;
    Ok(())
}

/// Breadth-first search for the shortest shift chain starting at the
/// uncolored edge `(u, v)`.
fn shortest_chain(
    f: &ColoredForest,
    u: VertexId,
    v: VertexId,
    fans: bool,
) -> (Vec<ChainState>, Color) {
    let view = ChainView { f };
    let e0 = EdgeKey::new(u, v);
    let mut pred: HashMap<ChainState, Option<ChainState>> = HashMap::new();
    let mut queue = VecDeque::new();
    for x in [e0.a, e0.b] {
        let s = ChainState {
            g: e0,
            x,
            lambda: UNCOLORED,
        };
        pred.insert(s, None);
        queue.push_back(s);
    }
    let path_to = |s: ChainState, pred: &HashMap<ChainState, Option<ChainState>>| {
        let mut chain = vec![s];
        let mut cur = s;
        while let Some(Some(p)) = pred.get(&cur) {
            chain.push(*p);
            cur = *p;
        }
        chain.reverse();
        chain
    };
    while let Some(s) = queue.pop_front() {
        if let Some(stop) = view.stop_colors(&s).first() {
            return (path_to(s, &pred), stop);
        }
        let mut on_chain: Option<HashSet<EdgeKey>> = None;
        for (_, _, next) in view.moves(&s, fans) {
            if pred.contains_key(&next) {
                continue;
            }
            if fans {
                let seen =
                    on_chain.get_or_insert_with(|| path_to(s, &pred).iter().map(|c| c.g).collect());
                if seen.contains(&next.g) {
                    continue;
                }
            }
            pred.insert(next, Some(s));
            queue.push_back(next);
        }
    }
    unreachable!("a forest with kappa >= delta always admits a shift chain")
}

/// Inserts `(u, v)` and repairs with a cheapest shift chain; fans (turning
/// at the entry vertex) are allowed.
pub fn greedy_shift_insert(
    f: &mut ColoredForest,
    u: VertexId,
    v: VertexId,
    parent_hint: Option<VertexId>,
) -> Result<usize, UpdateError> {
    chain_insert(f, u, v, parent_hint, true)
}

/// Like [`greedy_shift_insert`] but the recolored edges must form a path.
pub fn greedy_path_insert(
    f: &mut ColoredForest,
    u: VertexId,
    v: VertexId,
    parent_hint: Option<VertexId>,
) -> Result<usize, UpdateError> {
    chain_insert(f, u, v, parent_hint, false)
}

fn chain_insert(
    f: &mut ColoredForest,
    u: VertexId,
    v: VertexId,
    parent_hint: Option<VertexId>,
    fans: bool,
) -> Result<usize, UpdateError> {
    f.begin_update();
    f.insert_topology(u, v, parent_hint)?;
    let (chain, stop) = shortest_chain(f, u, v, fans);
    apply_chain(f, &chain, stop)?;
    let r = f.end_update();
    debug_assert_eq!(r + 1, chain.len());
    Ok(r)
}

/// Inserts `(u, v)` with `kappa = delta` by shifting colors down the
/// smaller tree, always continuing into the smallest subtree.
pub fn smallest_subtree_insert(
    f: &mut ColoredForest,
    u: VertexId,
    v: VertexId,
    parent_hint: Option<VertexId>,
) -> Result<usize, UpdateError> {
    if f.palette().extra() != 0 {
        return Err(UpdateError::WrongPalette {
            expected: "kappa = delta",
            delta: f.delta(),
            kappa: f.kappa(),
        });
    }
    f.begin_update();
    f.insert_topology(u, v, parent_hint)?;
    let (s, o) = smaller_side(f, u, v);
    let e0 = EdgeKey::new(u, v);
    let sizes = subtree_sizes_avoiding(f, s, o);
    let view = ChainView { f };
    let mut chain = vec![ChainState {
        g: e0,
        x: o,
        lambda: UNCOLORED,
    }];
    let stop = loop {
        let cur = *chain.last().unwrap();
        if let Some(c) = view.stop_colors(&cur).first() {
            break c;
        }
        let next = view
            .moves(&cur, false)
            .into_iter()
            .min_by_key(|&(c, y, _)| (sizes[&y], c))
            .map(|(_, _, n)| n)
            .expect("a blocked color is used by some edge at the far end");
        chain.push(next);
    };
    apply_chain(f, &chain, stop)?;
    Ok(f.end_update())
}

/// The endpoint whose tree has fewer edges (ties to the smaller id), paired
/// with the other endpoint.
fn smaller_side(f: &ColoredForest, u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    let eu = f.bfs_order(u, Some(v)).len();
    let ev = f.bfs_order(v, Some(u)).len();
    if (ev, v) < (eu, u) {
        (v, u)
    } else {
        (u, v)
    }
}

fn subtree_sizes_avoiding(
    f: &ColoredForest,
    root: VertexId,
    avoid: VertexId,
) -> HashMap<VertexId, usize> {
    let order = f.bfs_order(root, Some(avoid));
    let mut size: HashMap<VertexId, usize> = order.iter().map(|&(v, _)| (v, 0)).collect();
    for &(v, p) in order.iter().rev() {
        if let Some(p) = p {
            let s = size[&v] + 1;
            *size.get_mut(&p).unwrap() += s;
        }
    }
    size
}

/// Which greedy rule a [`Greedy`] maintainer applies on insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyVariant {
    Exact,
    Shift,
    Path,
    SmallestSubtree,
}

impl GreedyVariant {
    pub fn id(&self) -> &'static str {
        match self {
            GreedyVariant::Exact => "greedy",
            GreedyVariant::Shift => "greedy-shift",
            GreedyVariant::Path => "greedy-path",
            GreedyVariant::SmallestSubtree => "smallest-subtree",
        }
    }
}

/// Greedy maintainer; deletions keep the coloring.
#[derive(Debug, Clone)]
pub struct Greedy {
    pub variant: GreedyVariant,
    pub ties: TieBreaker,
}

impl Greedy {
    pub fn new(variant: GreedyVariant) -> Self {
        Greedy {
            variant,
            ties: TieBreaker::LexMin,
        }
    }

    pub fn with_ties(variant: GreedyVariant, ties: TieBreaker) -> Self {
        Greedy { variant, ties }
    }
}

impl Maintainer for Greedy {
    fn name(&self) -> &'static str {
        self.variant.id()
    }

    fn insert(
        &mut self,
        f: &mut ColoredForest,
        u: VertexId,
        v: VertexId,
        parent_hint: Option<VertexId>,
    ) -> Result<usize, UpdateError> {
        match self.variant {
            GreedyVariant::Exact => greedy_insert(f, u, v, parent_hint, &mut self.ties),
            GreedyVariant::Shift => greedy_shift_insert(f, u, v, parent_hint),
            GreedyVariant::Path => greedy_path_insert(f, u, v, parent_hint),
            GreedyVariant::SmallestSubtree => smallest_subtree_insert(f, u, v, parent_hint),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palette::Palette;

    fn forest(n: usize, delta: u32, extra: u32) -> ColoredForest {
        ColoredForest::new(n, Palette::new(delta, extra).unwrap())
    }

    fn leaf(f: &mut ColoredForest, center: VertexId, leaf: VertexId, c: Color) {
        f.insert_topology(center, leaf, Some(center)).unwrap();
        f.set_color(center, leaf, c).unwrap();
    }

    // u with leaves {3,4}, v with leaves {1,2}, delta = 4
    fn blocked_pair() -> ColoredForest {
        let mut f = forest(6, 4, 0);
        leaf(&mut f, 0, 1, 3);
        leaf(&mut f, 0, 2, 4);
        leaf(&mut f, 3, 4, 1);
        leaf(&mut f, 3, 5, 2);
        f
    }

    #[test]
    fn lower_bound_gadget_costs_one() {
        let mut f = blocked_pair();
        let r = greedy_insert(&mut f, 0, 3, None, &mut TieBreaker::LexMin).unwrap();
        assert_eq!(r, 1);
        f.assert_proper().unwrap();
    }

    #[test]
    fn isolated_pair_is_free() {
        let mut f = forest(2, 3, 0);
        assert_eq!(
            greedy_insert(&mut f, 0, 1, None, &mut TieBreaker::LexMin),
            Ok(0)
        );
        assert_eq!(f.color(0, 1), Some(1));
    }

    #[test]
    fn chain_variants_on_gadget() {
        for fans in [false, true] {
            let mut f = blocked_pair();
            let r = chain_insert(&mut f, 0, 3, None, fans).unwrap();
            assert_eq!(r, 1);
            f.assert_proper().unwrap();
        }
        let mut f = blocked_pair();
        assert_eq!(smallest_subtree_insert(&mut f, 0, 3, None), Ok(1));
        f.assert_proper().unwrap();
    }

    #[test]
    fn shared_color_needs_nothing() {
        let mut f = forest(4, 3, 0);
        leaf(&mut f, 0, 1, 1);
        leaf(&mut f, 2, 3, 1);
        assert_eq!(greedy_path_insert(&mut f, 0, 2, None), Ok(0));
        assert_eq!(f.color(0, 2), Some(2));
    }

    #[test]
    fn scripted_ties() {
        let mut f = forest(4, 3, 0);
        let mut tb = TieBreaker::scripted([3, 2, 1]);
        greedy_insert(&mut f, 0, 1, None, &mut tb).unwrap();
        greedy_insert(&mut f, 0, 2, None, &mut tb).unwrap();
        assert_eq!(f.color(0, 1), Some(3));
        assert_eq!(f.color(0, 2), Some(2));
        // a forced choice still consumes its entry
        assert_eq!(greedy_insert(&mut f, 0, 3, None, &mut tb), Ok(0));
        assert_eq!(tb.remaining_script(), 0);
        let mut g = forest(3, 3, 0);
        let mut tb = TieBreaker::scripted([]);
        assert_eq!(
            greedy_insert(&mut g, 0, 1, None, &mut tb),
            Err(UpdateError::ScriptExhausted)
        );
        let mut g = forest(4, 3, 0);
        leaf(&mut g, 0, 1, 1);
        let mut tb = TieBreaker::scripted([1]);
        assert!(matches!(
            greedy_insert(&mut g, 0, 2, None, &mut tb),
            Err(UpdateError::ScriptedChoiceNotOptimal { choice: 1, .. })
        ));
    }

    #[test]
    fn fan_beats_path() {
        // u=0 has edges 1:(0,1) 2:(0,2); v=3 has edges 1:(3,4) 2:(3,5) and
        // delta=3. Vertex 1 also carries color 3, vertex 2 is free of 3.
        let mut f = forest(8, 3, 0);
        leaf(&mut f, 0, 1, 1);
        leaf(&mut f, 0, 2, 2);
        leaf(&mut f, 1, 6, 3);
        leaf(&mut f, 3, 4, 1);
        leaf(&mut f, 3, 5, 2);
        leaf(&mut f, 4, 7, 3);
        let mut g = f.clone();
        let shift = greedy_shift_insert(&mut f, 0, 3, None).unwrap();
        let path = greedy_path_insert(&mut g, 0, 3, None).unwrap();
        f.assert_proper().unwrap();
        g.assert_proper().unwrap();
        assert!(shift <= path);
    }

    #[test]
    fn smallest_subtree_rejects_extra_colors() {
        let mut f = forest(2, 3, 1);
        assert!(matches!(
            smallest_subtree_insert(&mut f, 0, 1, None),
            Err(UpdateError::WrongPalette { .. })
        ));
    }
}
