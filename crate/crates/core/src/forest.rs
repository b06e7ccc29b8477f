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

//! Dynamic forest with a (partial) edge coloring, per-component rooting and
//! recourse accounting.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::ledger::RecourseLedger;
use crate::palette::{Color, ColorSet, Palette, UNCOLORED};

pub type VertexId = usize;

/// An unordered edge stored as `(a, b)` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeKey {
    pub a: VertexId,
    pub b: VertexId,
}

impl EdgeKey {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        debug_assert_ne!(u, v);
        if u < v {
            EdgeKey { a: u, b: v }
        } else {
            EdgeKey { a: v, b: u }
        }
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.a == x || self.b == x
    }
}

impl std::fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("self loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {0} already present")]
    DuplicateEdge(EdgeKey),
    #[error("{0} and {1} are in the same component")]
    SameComponent(VertexId, VertexId),
    #[error("vertex {0} already has maximum degree")]
    DegreeExceeded(VertexId),
    #[error("edge {0} not present")]
    MissingEdge(EdgeKey),
    #[error("parent hint {hint} is not an endpoint of {edge}")]
    InvalidParentHint { edge: EdgeKey, hint: VertexId },
    #[error("color {0} outside the palette")]
    ColorOutOfRange(Color),
    #[error("color {color} already used at vertex {vertex}")]
    ColorClash { vertex: VertexId, color: Color },
    #[error("color {color} repeated at vertex {vertex}")]
    ImproperColoring { vertex: VertexId, color: Color },
    #[error("edge {0} has no color")]
    UncoloredEdge(EdgeKey),
    #[error("cycle through vertex {0}")]
    Cycle(VertexId),
    #[error("parent pointers broken at vertex {0}")]
    RootingBroken(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("snapshot line {line}: {msg}")]
pub struct SnapshotError {
    pub line: usize,
    pub msg: String,
}

/// Forest state shared by every maintenance algorithm.
///
/// Colors are stored on both endpoints of an edge. Component structure is
/// recovered on demand from the parent pointers, which always form one rooted
/// tree per component.
#[derive(Debug, Clone)]
pub struct ColoredForest {
    palette: Palette,
    adj: Vec<Vec<(VertexId, Color)>>,
    used: Vec<ColorSet>,
    parent: Vec<Option<VertexId>>,
    edges: usize,
    ledger: RecourseLedger,
    // color of each edge when the current update first touched it
    touched: HashMap<EdgeKey, Color>,
    last_recolored: Vec<EdgeKey>,
}

impl ColoredForest {
    pub fn new(n: usize, palette: Palette) -> Self {
        ColoredForest {
            palette,
            adj: vec![Vec::new(); n],
            used: vec![ColorSet::empty(); n],
            parent: vec![None; n],
            edges: 0,
            ledger: RecourseLedger::default(),
            touched: HashMap::new(),
            last_recolored: Vec::new(),
        }
    }

    pub fn palette(&self) -> Palette {
        self.palette
    }

    pub fn kappa(&self) -> u32 {
        self.palette.kappa()
    }

    pub fn delta(&self) -> u32 {
        self.palette.delta()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Incident `(neighbor, color)` pairs in insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, Color)] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].iter().any(|&(w, _)| w == v)
    }

    /// Color of edge `(u, v)`; `Some(0)` if present but uncolored.
    pub fn color(&self, u: VertexId, v: VertexId) -> Option<Color> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, c)| c)
    }

    /// The neighbor of `v` along the edge colored `c`.
    pub fn neighbor_by_color(&self, v: VertexId, c: Color) -> Option<VertexId> {
        if c == UNCOLORED || !self.used[v].contains(c) {
            return None;
        }
        self.adj[v].iter().find(|&&(_, x)| x == c).map(|&(w, _)| w)
    }

    pub fn used(&self, v: VertexId) -> ColorSet {
        self.used[v]
    }

    /// Colors of the palette not used at `v`.
    pub fn available(&self, v: VertexId) -> ColorSet {
        self.palette.all().difference(self.used[v])
    }

    pub fn available_edge(&self, u: VertexId, v: VertexId) -> ColorSet {
        self.available(u).intersection(self.available(v))
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn is_root(&self, v: VertexId) -> bool {
        self.parent[v].is_none()
    }

    /// Children of `v` under the current rooting, sorted by id.
    pub fn children(&self, v: VertexId) -> Vec<VertexId> {
        let p = self.parent[v];
        let mut out: Vec<VertexId> = self.adj[v]
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| Some(w) != p)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn root_of(&self, mut v: VertexId) -> VertexId {
        while let Some(p) = self.parent[v] {
            v = p;
        }
        v
    }

    pub fn same_component(&self, u: VertexId, v: VertexId) -> bool {
        self.root_of(u) == self.root_of(v)
    }

    /// Vertices of `v`'s component in BFS order from `v`.
    pub fn component(&self, v: VertexId) -> Vec<VertexId> {
        self.bfs_order(v, None)
            .into_iter()
            .map(|(x, _)| x)
            .collect()
    }

    pub fn component_edge_count(&self, v: VertexId) -> usize {
        self.component(v).len() - 1
    }

    /// BFS from `root` treating it as the root, never crossing into `avoid`.
    /// Returns `(vertex, parent in this rooting)` pairs; neighbors are visited
    /// in id order so the result is canonical.
    pub fn bfs_order(
        &self,
        root: VertexId,
        avoid: Option<VertexId>,
    ) -> Vec<(VertexId, Option<VertexId>)> {
        let mut out = vec![(root, None)];
        let mut i = 0;
        while i < out.len() {
            let (x, px) = out[i];
            i += 1;
            let mut next: Vec<VertexId> = self.adj[x]
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| Some(w) != px && Some(w) != avoid)
                .collect();
            next.sort_unstable();
            out.extend(next.into_iter().map(|w| (w, Some(x))));
        }
        out
    }

    /// Edge count of every rooted subtree when the component is hung from
    /// `root`.
    pub fn subtree_sizes(&self, root: VertexId) -> HashMap<VertexId, usize> {
        let order = self.bfs_order(root, None);
        let mut size: HashMap<VertexId, usize> = order.iter().map(|&(v, _)| (v, 0)).collect();
        for &(v, p) in order.iter().rev() {
            if let Some(p) = p {
                let s = size[&v] + 1;
                *size.get_mut(&p).unwrap() += s;
            }
        }
        size
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), ForestError> {
        if v >= self.n() {
            Err(ForestError::VertexOutOfRange(v))
        } else {
            Ok(())
        }
    }

    /// Adds the uncolored edge `(u, v)`. The endpoint other than
    /// `parent_hint` (or `v` without a hint) becomes a child of the other
    /// endpoint after its component is rerooted at it.
    pub fn insert_topology(
        &mut self,
        u: VertexId,
        v: VertexId,
        parent_hint: Option<VertexId>,
    ) -> Result<EdgeKey, ForestError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(ForestError::SelfLoop(u));
        }
        let key = EdgeKey::new(u, v);
        if self.has_edge(u, v) {
            return Err(ForestError::DuplicateEdge(key));
        }
        if let Some(h) = parent_hint {
            if h != u && h != v {
                return Err(ForestError::InvalidParentHint { edge: key, hint: h });
            }
        }
        if self.same_component(u, v) {
            return Err(ForestError::SameComponent(u, v));
        }
        let cap = self.delta() as usize;
        for x in [u, v] {
            if self.degree(x) >= cap {
                return Err(ForestError::DegreeExceeded(x));
            }
        }
        let (p, child) = match parent_hint {
            Some(h) if h == v => (v, u),
            _ => (u, v),
        };
        self.reroot(child);
        self.parent[child] = Some(p);
        self.adj[u].push((v, UNCOLORED));
        self.adj[v].push((u, UNCOLORED));
        self.edges += 1;
        self.touched.entry(key).or_insert(UNCOLORED);
        Ok(key)
    }

    /// Places the edge `(parent, child)` with color `c` outside any update;
    /// used to set up initial states. Nothing is recorded as recourse.
    pub fn place_edge(
        &mut self,
        parent: VertexId,
        child: VertexId,
        c: Color,
    ) -> Result<(), ForestError> {
        let key = self.insert_topology(parent, child, Some(parent))?;
        let placed = self.set_color(parent, child, c);
        if placed.is_err() {
            self.delete_topology(parent, child)?;
        }
        self.touched.remove(&key);
        placed
    }

    /// Removes `(u, v)` and returns its color. The child endpoint becomes the
    /// root of its new component.
    pub fn delete_topology(&mut self, u: VertexId, v: VertexId) -> Result<Color, ForestError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let key = EdgeKey::new(u, v);
        let c = self.color(u, v).ok_or(ForestError::MissingEdge(key))?;
        self.touched.entry(key).or_insert(c);
        self.adj[u].retain(|&(w, _)| w != v);
        self.adj[v].retain(|&(w, _)| w != u);
        if c != UNCOLORED {
            self.used[u].remove(c);
            self.used[v].remove(c);
        }
        if self.parent[v] == Some(u) {
            self.parent[v] = None;
        } else {
            self.parent[u] = None;
        }
        self.edges -= 1;
        Ok(c)
    }

    /// Sets the color of an existing edge. A nonzero color must be free at
    /// both endpoints; use `UNCOLORED` first when swapping.
    pub fn set_color(&mut self, u: VertexId, v: VertexId, c: Color) -> Result<(), ForestError> {
        let key = EdgeKey::new(u, v);
        let old = self.color(u, v).ok_or(ForestError::MissingEdge(key))?;
        if c > self.kappa() {
            return Err(ForestError::ColorOutOfRange(c));
        }
        if old == c {
            return Ok(());
        }
        if c != UNCOLORED {
            for x in [u, v] {
                if self.used[x].contains(c) {
                    return Err(ForestError::ColorClash {
                        vertex: x,
                        color: c,
                    });
                }
            }
        }
        self.touched.entry(key).or_insert(old);
        for (x, y) in [(u, v), (v, u)] {
            if let Some(slot) = self.adj[x].iter_mut().find(|(w, _)| *w == y) {
                slot.1 = c;
            }
            if old != UNCOLORED {
                self.used[x].remove(old);
            }
            if c != UNCOLORED {
                self.used[x].insert(c);
            }
        }
        Ok(())
    }

    /// Hangs `new_root`'s component from `new_root`. Colors are untouched.
    pub fn reroot(&mut self, new_root: VertexId) {
        let mut prev = None;
        let mut cur = Some(new_root);
        while let Some(x) = cur {
            let next = self.parent[x];
            self.parent[x] = prev;
            prev = Some(x);
            cur = next;
        }
    }

    /// Starts recourse tracking for one update.
    pub fn begin_update(&mut self) {
        self.touched.clear();
    }

    /// Closes the current update and returns its recourse: the number of
    /// edges that were colored before the update, still exist, and now carry
    /// a different color.
    pub fn end_update(&mut self) -> usize {
        let mut changed: Vec<EdgeKey> = self
            .touched
            .iter()
            .filter(|&(k, &old)| {
                old != UNCOLORED && matches!(self.color(k.a, k.b), Some(now) if now != old)
            })
            .map(|(&k, _)| k)
            .collect();
        changed.sort_unstable();
        let r = changed.len();
        self.last_recolored = changed;
        self.touched.clear();
        self.ledger.record(r);
        r
    }

    /// Edges counted as recolored by the last `end_update`.
    pub fn last_recolored(&self) -> &[EdgeKey] {
        &self.last_recolored
    }

    pub fn ledger(&self) -> &RecourseLedger {
        &self.ledger
    }

    pub fn reset_ledger(&mut self) {
        self.ledger = RecourseLedger::default();
    }

    /// All edges with their colors, sorted by key.
    pub fn edges(&self) -> Vec<(EdgeKey, Color)> {
        let mut out = Vec::with_capacity(self.edges);
        for (u, list) in self.adj.iter().enumerate() {
            for &(v, c) in list {
                if u < v {
                    out.push((EdgeKey::new(u, v), c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Colors listed in sorted edge order; canonical key for histograms.
    pub fn colors_in_edge_order(&self) -> Vec<Color> {
        self.edges().into_iter().map(|(_, c)| c).collect()
    }

    pub fn coloring_hash(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.n().hash(&mut h);
        self.edges().hash(&mut h);
        h.finish()
    }

    /// Checks degree caps, properness, full coloring, acyclicity and rooting.
    pub fn assert_proper(&self) -> Result<(), ForestError> {
        let kappa = self.kappa();
        for v in 0..self.n() {
            if self.degree(v) > self.delta() as usize {
                return Err(ForestError::DegreeExceeded(v));
            }
            let mut seen = ColorSet::empty();
            for &(w, c) in &self.adj[v] {
                if c == UNCOLORED {
                    return Err(ForestError::UncoloredEdge(EdgeKey::new(v, w)));
                }
                if c > kappa {
                    return Err(ForestError::ColorOutOfRange(c));
                }
                if seen.contains(c) {
                    return Err(ForestError::ImproperColoring {
                        vertex: v,
                        color: c,
                    });
                }
                seen.insert(c);
            }
            if seen != self.used[v] {
                return Err(ForestError::RootingBroken(v));
            }
        }
        let mut visited = vec![false; self.n()];
        for s in 0..self.n() {
            if visited[s] {
                continue;
            }
            visited[s] = true;
            let mut queue = VecDeque::from([(s, usize::MAX)]);
            while let Some((x, from)) = queue.pop_front() {
                for &(w, _) in &self.adj[x] {
                    if w == from {
                        continue;
                    }
                    if visited[w] {
                        return Err(ForestError::Cycle(w));
                    }
                    visited[w] = true;
                    queue.push_back((w, x));
                }
            }
        }
        for v in 0..self.n() {
            if let Some(p) = self.parent[v] {
                if !self.has_edge(v, p) {
                    return Err(ForestError::RootingBroken(v));
                }
            }
            for &(w, _) in &self.adj[v] {
                let down = self.parent[w] == Some(v);
                let up = self.parent[v] == Some(w);
                if down == up {
                    return Err(ForestError::RootingBroken(v));
                }
            }
        }
        Ok(())
    }

    /// Line-oriented dump: a header, then `e a b color [p=x]` per edge.
    pub fn to_snapshot(&self) -> String {
        let mut s = format!(
            "forest n={} kappa={} delta={}\n",
            self.n(),
            self.kappa(),
            self.delta()
        );
        for (k, c) in self.edges() {
            let _ = write!(s, "e {} {} {}", k.a, k.b, c);
            if self.parent[k.b] == Some(k.a) {
                let _ = write!(s, " p={}", k.a);
            } else if self.parent[k.a] == Some(k.b) {
                let _ = write!(s, " p={}", k.b);
            }
            s.push('\n');
        }
        s
    }

    pub fn from_snapshot(text: &str) -> Result<Self, SnapshotError> {
        let err = |line: usize, msg: &str| SnapshotError {
            line,
            msg: msg.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("forest") {
            return Err(err(hl, "expected `forest` header"));
        }
        let mut field = |name: &str| -> Result<u64, SnapshotError> {
            parts
                .next()
                .and_then(|t| t.strip_prefix(name))
                .and_then(|t| t.strip_prefix('='))
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| err(hl, &format!("bad `{name}` field")))
        };
        let n = field("n")? as usize;
        let kappa = field("kappa")? as u32;
        let delta = field("delta")? as u32;
        let palette = Palette::new(delta, kappa.saturating_sub(delta))
            .map_err(|e| err(hl, &e.to_string()))?;
        if palette.kappa() != kappa {
            return Err(err(hl, "kappa smaller than delta"));
        }
        let mut f = ColoredForest::new(n, palette);
        let mut pending = Vec::new();
        for (ln, line) in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() < 4 || toks.len() > 5 || toks[0] != "e" {
                return Err(err(ln, "expected `e a b color [p=x]`"));
            }
            let num = |t: &str| t.parse::<u64>().map_err(|_| err(ln, "bad number"));
            let a = num(toks[1])? as usize;
            let b = num(toks[2])? as usize;
            let c = num(toks[3])? as Color;
            let hint = match toks.get(4) {
                Some(t) => Some(
                    t.strip_prefix("p=")
                        .ok_or_else(|| err(ln, "bad parent field"))
                        .and_then(num)? as usize,
                ),
                None => None,
            };
            f.insert_topology(a, b, hint)
                .map_err(|e| err(ln, &e.to_string()))?;
            pending.push((ln, a, b, c));
        }
        for (ln, a, b, c) in pending {
            f.set_color(a, b, c).map_err(|e| err(ln, &e.to_string()))?;
        }
        f.touched.clear();
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forest(n: usize, delta: u32, extra: u32) -> ColoredForest {
        ColoredForest::new(n, Palette::new(delta, extra).unwrap())
    }

    fn path(colors: &[Color], delta: u32) -> ColoredForest {
        let mut f = forest(colors.len() + 1, delta, 0);
        for (i, &c) in colors.iter().enumerate() {
            f.insert_topology(i, i + 1, Some(i)).unwrap();
            f.set_color(i, i + 1, c).unwrap();
        }
        f
    }

    #[test]
    fn insert_basics() {
        let mut f = forest(3, 2, 0);
        let k = f.insert_topology(0, 1, None).unwrap();
        assert_eq!(k, EdgeKey::new(1, 0));
        assert_eq!(f.component_edge_count(0), 1);
        assert_eq!(
            f.insert_topology(1, 0, None),
            Err(ForestError::DuplicateEdge(k))
        );
        f.insert_topology(1, 2, None).unwrap();
        assert_eq!(
            f.insert_topology(0, 2, None),
            Err(ForestError::SameComponent(0, 2))
        );
        assert_eq!(f.insert_topology(1, 1, None), Err(ForestError::SelfLoop(1)));
    }

    #[test]
    fn degree_cap() {
        let mut f = forest(4, 2, 0);
        f.insert_topology(0, 1, None).unwrap();
        f.insert_topology(0, 2, None).unwrap();
        assert_eq!(
            f.insert_topology(0, 3, None),
            Err(ForestError::DegreeExceeded(0))
        );
    }

    #[test]
    fn delete_makes_child_root() {
        let mut f = path(&[1, 2], 2);
        assert_eq!(f.parent(2), Some(1));
        f.begin_update();
        assert_eq!(f.delete_topology(1, 2), Ok(2));
        assert_eq!(f.end_update(), 0);
        assert!(f.is_root(2));
        assert_eq!(f.root_of(1), 0);
        assert_eq!(
            f.delete_topology(1, 2),
            Err(ForestError::MissingEdge(EdgeKey::new(1, 2)))
        );
        assert_eq!(f.available(1).to_vec(), vec![2]);
    }

    #[test]
    fn available_sets() {
        let mut f = forest(4, 3, 1);
        assert_eq!(f.available(0).to_vec(), vec![1, 2, 3, 4]);
        f.insert_topology(0, 1, None).unwrap();
        f.insert_topology(0, 2, None).unwrap();
        f.set_color(0, 1, 1).unwrap();
        f.set_color(0, 2, 3).unwrap();
        assert_eq!(f.available(0).to_vec(), vec![2, 4]);
        assert_eq!(f.available(0).union(f.used(0)), f.palette().all());
        let mut g = forest(4, 3, 0);
        for (i, c) in [(1, 1), (2, 2), (3, 3)] {
            g.insert_topology(0, i, None).unwrap();
            g.set_color(0, i, c).unwrap();
        }
        assert!(g.available(0).is_empty());
    }

    #[test]
    fn reroot_path() {
        let mut f = path(&[1, 2], 2);
        let h = f.coloring_hash();
        f.reroot(0);
        assert_eq!(f.parent(0), None);
        f.reroot(2);
        assert_eq!(f.parent(2), None);
        assert_eq!(f.parent(1), Some(2));
        assert_eq!(f.parent(0), Some(1));
        assert_eq!(f.coloring_hash(), h);
        f.assert_proper().unwrap();
    }

    #[test]
    fn properness_check() {
        path(&[1, 2, 1], 2).assert_proper().unwrap();
        let mut f = forest(3, 2, 0);
        f.insert_topology(0, 1, None).unwrap();
        f.insert_topology(1, 2, None).unwrap();
        f.set_color(0, 1, 1).unwrap();
        assert_eq!(
            f.set_color(1, 2, 1),
            Err(ForestError::ColorClash {
                vertex: 1,
                color: 1
            })
        );
        assert_eq!(
            f.assert_proper(),
            Err(ForestError::UncoloredEdge(EdgeKey::new(1, 2)))
        );
    }

    #[test]
    fn improper_detected() {
        let mut f = path(&[1, 2], 2);
        // force a clash behind the setter's back
        f.adj[1][1].1 = 1;
        f.adj[2][0].1 = 1;
        assert_eq!(
            f.assert_proper(),
            Err(ForestError::ImproperColoring {
                vertex: 1,
                color: 1
            })
        );
    }

    #[test]
    fn subtree_sizes_star() {
        let mut f = forest(5, 3, 0);
        for i in 1..4 {
            f.insert_topology(0, i, None).unwrap();
        }
        let s = f.subtree_sizes(0);
        assert_eq!(s[&0], 3);
        assert_eq!(s[&1], 0);
        assert_eq!(f.subtree_sizes(4)[&4], 0);
    }

    #[test]
    fn net_diff_recourse() {
        let mut f = path(&[1, 2, 1], 2);
        f.begin_update();
        f.set_color(1, 2, UNCOLORED).unwrap();
        f.set_color(1, 2, 2).unwrap();
        assert_eq!(f.end_update(), 0);
        f.begin_update();
        f.set_color(0, 1, UNCOLORED).unwrap();
        f.set_color(1, 2, UNCOLORED).unwrap();
        f.set_color(2, 3, UNCOLORED).unwrap();
        f.set_color(0, 1, 2).unwrap();
        f.set_color(1, 2, 1).unwrap();
        f.set_color(2, 3, 2).unwrap();
        assert_eq!(f.end_update(), 3);
        assert_eq!(f.ledger().total(), 3);
        assert_eq!(f.ledger().updates(), 2);
    }

    #[test]
    fn snapshot_round_trip() {
        let mut f = path(&[1, 2, 1], 2);
        f.reroot(2);
        let s = f.to_snapshot();
        assert!(s.starts_with("forest n=4 kappa=2 delta=2\n"));
        let g = ColoredForest::from_snapshot(&s).unwrap();
        assert_eq!(g.to_snapshot(), s);
        assert_eq!(g.coloring_hash(), f.coloring_hash());
        g.assert_proper().unwrap();
        let bad = "forest n=2 kappa=2 delta=2\ne 0 x 1\n";
        assert_eq!(ColoredForest::from_snapshot(bad).unwrap_err().line, 2);
    }
}
