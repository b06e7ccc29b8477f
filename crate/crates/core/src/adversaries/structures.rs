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

//! Fixed tree shapes shared by several constructions.

use super::{need_vertices, AdversaryError};
use crate::forest::{ColoredForest, VertexId};
use crate::palette::Color;

/// Vertices in a complete `arity`-ary tree whose leaves sit at `depth`.
pub fn complete_tree_size(arity: usize, depth: u32) -> usize {
    (0..=depth).map(|k| arity.pow(k)).sum()
}

/// Edges `(parent, child)` of a complete `arity`-ary tree rooted at `root`,
/// in BFS order, with the other vertices numbered from `first_free`.
/// Returns the edges and the next unused id.
pub fn complete_tree_edges(
    root: VertexId,
    first_free: VertexId,
    arity: usize,
    depth: u32,
) -> (Vec<(VertexId, VertexId)>, VertexId) {
    let mut edges = Vec::new();
    let mut level = vec![root];
    let mut next = first_free;
    for _ in 0..depth {
        let mut below = Vec::with_capacity(level.len() * arity);
        for &p in &level {
            for _ in 0..arity {
                edges.push((p, next));
                below.push(next);
                next += 1;
            }
        }
        level = below;
    }
    (edges, next)
}

/// Places a caterpillar rooted at `start`: a spine of `spine_edges` edges
/// alternating `spine_colors.0`, `spine_colors.1`, with one leaf per entry
/// of `legs` hanging from every spine vertex. Returns the last spine vertex
/// and the next unused id.
pub fn caterpillar(
    f: &mut ColoredForest,
    start: VertexId,
    spine_edges: usize,
    spine_colors: (Color, Color),
    legs: &[Color],
) -> Result<(VertexId, VertexId), AdversaryError> {
    need_vertices(f, start + (spine_edges + 1) * (legs.len() + 1))?;
    let spine: Vec<VertexId> = (0..=spine_edges).map(|j| start + j).collect();
    let mut next = start + spine_edges + 1;
    for (j, w) in spine.windows(2).enumerate() {
        let c = if j % 2 == 0 {
            spine_colors.0
        } else {
            spine_colors.1
        };
        f.place_edge(w[0], w[1], c)?;
    }
    for &x in &spine {
        for &c in legs {
            f.place_edge(x, next, c)?;
            next += 1;
        }
    }
    Ok((spine[spine_edges], next))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palette::Palette;

    #[test]
    fn complete_tree_shape() {
        assert_eq!(complete_tree_size(2, 3), 15);
        let (edges, next) = complete_tree_edges(0, 1, 2, 2);
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]);
        assert_eq!(next, 7);
    }

    #[test]
    fn caterpillar_is_proper() {
        let mut f = ColoredForest::new(40, Palette::new(4, 0).unwrap());
        let (end, next) = caterpillar(&mut f, 0, 5, (1, 2), &[3, 4]).unwrap();
        assert_eq!((end, next), (5, 18));
        f.assert_proper().unwrap();
        assert_eq!(f.available(0).to_vec(), vec![2]);
        assert!(f.ledger().per_update().is_empty());
    }
}
