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

//! Brute-force ground truth for small forests.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use statrs::distribution::{ChiSquared, ContinuousCDF};
use thiserror::Error;

use crate::forest::{ColoredForest, EdgeKey, ForestError, VertexId};
use crate::palette::{Color, ColorSet, UNCOLORED};

/// Largest edge count the exhaustive routines accept.
pub const MAX_EDGES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{edges} edges exceed the exhaustive limit of {MAX_EDGES}")]
    TooLarge { edges: usize },
    #[error("{total} samples, need at least {needed}")]
    InsufficientSamples { total: u64, needed: u64 },
    #[error("histogram has {cells} distinct cells but the support is {support}")]
    SupportMismatch { cells: usize, support: usize },
    #[error(transparent)]
    Forest(#[from] ForestError),
}

/// Every proper coloring of `edges` (sorted) with colors `1..=kappa`, listed
/// lexicographically; each coloring follows the order of `edges`.
pub fn enumerate_proper_colorings(
    n: usize,
    edges: &[EdgeKey],
    kappa: u32,
) -> Result<Vec<Vec<Color>>, OracleError> {
    if edges.len() > MAX_EDGES {
        return Err(OracleError::TooLarge { edges: edges.len() });
    }
    let mut used = vec![ColorSet::empty(); n];
    let mut cur = vec![UNCOLORED; edges.len()];
    let mut out = Vec::new();
    enumerate_rec(edges, kappa, 0, &mut used, &mut cur, &mut out);
    Ok(out)
}

fn enumerate_rec(
    edges: &[EdgeKey],
    kappa: u32,
    i: usize,
    used: &mut [ColorSet],
    cur: &mut [Color],
    out: &mut Vec<Vec<Color>>,
) {
    if i == edges.len() {
        out.push(cur.to_vec());
        return;
    }
    let EdgeKey { a, b } = edges[i];
    for c in 1..=kappa {
        if used[a].contains(c) || used[b].contains(c) {
            continue;
        }
        used[a].insert(c);
        used[b].insert(c);
        cur[i] = c;
        enumerate_rec(edges, kappa, i + 1, used, cur, out);
        used[a].remove(c);
        used[b].remove(c);
    }
}

/// Least number of existing edges of `f` that must change color so that
/// the forest plus the edge `(u, v)` is properly colored.
pub fn min_recourse_bruteforce(
    f: &ColoredForest,
    u: VertexId,
    v: VertexId,
) -> Result<usize, OracleError> {
    f.clone().insert_topology(u, v, None)?;
    let mut edges = f.edges();
    edges.push((EdgeKey::new(u, v), UNCOLORED));
    edges.sort_unstable();
    if edges.len() > MAX_EDGES {
        return Err(OracleError::TooLarge { edges: edges.len() });
    }
    let mut search = MinRecourse {
        edges: &edges,
        kappa: f.kappa(),
        used: vec![ColorSet::empty(); f.n()],
        best: usize::MAX,
    };
    search.run(0, 0);
    Ok(search.best)
}

struct MinRecourse<'a> {
    edges: &'a [(EdgeKey, Color)],
    kappa: u32,
    used: Vec<ColorSet>,
    best: usize,
}

impl MinRecourse<'_> {
    fn run(&mut self, i: usize, cost: usize) {
        if cost >= self.best {
            return;
        }
        if i == self.edges.len() {
            self.best = cost;
            return;
        }
        let (EdgeKey { a, b }, old) = self.edges[i];
        // try the old color first so good bounds come early
        let order = std::iter::once(old)
            .filter(|&c| c != UNCOLORED)
            .chain((1..=self.kappa).filter(|&c| c != old));
        for c in order {
            if self.used[a].contains(c) || self.used[b].contains(c) {
                continue;
            }
            self.used[a].insert(c);
            self.used[b].insert(c);
            let step = usize::from(old != UNCOLORED && c != old);
            self.run(i + 1, cost + step);
            self.used[a].remove(c);
            self.used[b].remove(c);
        }
    }
}

fn falling_factorial(top: i64, count: i64) -> BigInt {
    (0..count).fold(BigInt::one(), |acc, i| acc * BigInt::from(top - i))
}

/// Probability of the current coloring under the top-down distribution of
/// the current rooting: each vertex colors its child edges uniformly and
/// injectively, avoiding its parent-edge color.
pub fn coloring_probability(f: &ColoredForest) -> Result<BigRational, OracleError> {
    f.assert_proper()?;
    let kappa = i64::from(f.kappa());
    let mut p = BigRational::one();
    for v in 0..f.n() {
        let children = f.children(v).len() as i64;
        let pool = if f.is_root(v) { kappa } else { kappa - 1 };
        p /= BigRational::from_integer(falling_factorial(pool, children));
    }
    Ok(p)
}

/// Counts of canonical colorings (colors in sorted edge order).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColoringHistogram {
    pub counts: BTreeMap<Vec<Color>, u64>,
    pub total: u64,
}

impl ColoringHistogram {
    pub fn add(&mut self, coloring: Vec<Color>) {
        *self.counts.entry(coloring).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn merge(&mut self, other: ColoringHistogram) {
        for (k, c) in other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
        self.total += other.total;
    }
}

/// Pearson chi-square statistic against the uniform law on `support` cells
/// (cells never observed count as zero) and its upper-tail p-value.
pub fn chisq_uniformity(h: &ColoringHistogram, support: usize) -> Result<(f64, f64), OracleError> {
    let needed = 10 * support as u64;
    if h.total < needed {
        return Err(OracleError::InsufficientSamples {
            total: h.total,
            needed,
        });
    }
    if h.counts.len() > support {
        return Err(OracleError::SupportMismatch {
            cells: h.counts.len(),
            support,
        });
    }
    let expected = h.total as f64 / support as f64;
    let seen: f64 = h
        .counts
        .values()
        .map(|&o| (o as f64 - expected).powi(2) / expected)
        .sum();
    let missing = (support - h.counts.len()) as f64 * expected;
    let stat = seen + missing;
    if support < 2 {
        return Ok((stat, 1.0));
    }
    let dist = ChiSquared::new((support - 1) as f64).expect("positive degrees of freedom");
    Ok((stat, dist.sf(stat)))
}

/// Converts an exact probability to `f64`, for reporting.
pub fn to_f64(p: &BigRational) -> f64 {
    p.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palette::Palette;

    fn keys(pairs: &[(usize, usize)]) -> Vec<EdgeKey> {
        let mut v: Vec<EdgeKey> = pairs.iter().map(|&(a, b)| EdgeKey::new(a, b)).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_proper_colorings(2, &keys(&[(0, 1)]), 3)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            enumerate_proper_colorings(3, &keys(&[(0, 1), (0, 2)]), 3)
                .unwrap()
                .len(),
            6
        );
        let path = keys(&[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(enumerate_proper_colorings(4, &path, 3).unwrap().len(), 12);
        let big: Vec<(usize, usize)> = (0..13).map(|i| (i, i + 1)).collect();
        assert_eq!(
            enumerate_proper_colorings(14, &keys(&big), 3),
            Err(OracleError::TooLarge { edges: 13 })
        );
    }

    fn colored_path(kappa_delta: (u32, u32), colors: &[Color]) -> ColoredForest {
        let (delta, extra) = kappa_delta;
        let mut f = ColoredForest::new(colors.len() + 1, Palette::new(delta, extra).unwrap());
        for (i, &c) in colors.iter().enumerate() {
            f.insert_topology(i, i + 1, Some(i)).unwrap();
            f.set_color(i, i + 1, c).unwrap();
        }
        f
    }

    #[test]
    fn probability_matches_enumeration_and_is_root_invariant() {
        let mut f = colored_path((3, 0), &[1, 2, 3]);
        let want = BigRational::new(BigInt::from(1), BigInt::from(12));
        for r in 0..4 {
            f.reroot(r);
            assert_eq!(coloring_probability(&f).unwrap(), want);
        }
        let single = colored_path((3, 0), &[2]);
        assert_eq!(
            coloring_probability(&single).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(3))
        );
    }

    #[test]
    fn min_recourse_cases() {
        let mut f = ColoredForest::new(6, Palette::new(4, 0).unwrap());
        for (a, b, c) in [(0, 1, 3), (0, 2, 4), (3, 4, 1), (3, 5, 2)] {
            f.insert_topology(a, b, Some(a)).unwrap();
            f.set_color(a, b, c).unwrap();
        }
        assert_eq!(min_recourse_bruteforce(&f, 0, 3), Ok(1));
        let g = colored_path((3, 0), &[1, 2]);
        let mut h = ColoredForest::new(5, g.palette());
        for (k, c) in g.edges() {
            h.insert_topology(k.a, k.b, None).unwrap();
            h.set_color(k.a, k.b, c).unwrap();
        }
        assert_eq!(min_recourse_bruteforce(&h, 2, 4), Ok(0));
        assert_eq!(
            min_recourse_bruteforce(&h, 0, 2),
            Err(OracleError::Forest(ForestError::SameComponent(0, 2)))
        );
    }

    #[test]
    fn chisq_extremes() {
        let mut h = ColoringHistogram::default();
        for i in 0..12u32 {
            for _ in 0..100 {
                h.add(vec![i]);
            }
        }
        let (stat, p) = chisq_uniformity(&h, 12).unwrap();
        assert_eq!(stat, 0.0);
        assert!((p - 1.0).abs() < 1e-12);

        let mut skew = ColoringHistogram::default();
        for _ in 0..1200 {
            skew.add(vec![1]);
        }
        let (_, p) = chisq_uniformity(&skew, 12).unwrap();
        assert!(p < 1e-6);

        let mut few = ColoringHistogram::default();
        few.add(vec![1]);
        assert!(matches!(
            chisq_uniformity(&few, 12),
            Err(OracleError::InsufficientSamples {
                total: 1,
                needed: 120
            })
        ));
    }
}
