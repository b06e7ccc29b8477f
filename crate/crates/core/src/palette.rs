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

//! Palettes and compact color sets.

use std::fmt;

use thiserror::Error;

/// An edge color. Proper colors are `1..=kappa`; `0` marks an uncolored edge.
pub type Color = u32;

/// The placeholder color of an edge that is waiting for a color.
pub const UNCOLORED: Color = 0;

/// Largest palette a [`ColorSet`] can hold.
pub const MAX_KAPPA: u32 = 127;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PaletteError {
    #[error("maximum degree must be at least 1")]
    ZeroDegree,
    #[error("extra colors c={extra} not allowed for delta={delta}")]
    ExtraOutOfRange { delta: u32, extra: u32 },
    #[error("palette of {kappa} colors exceeds the supported maximum of {MAX_KAPPA}")]
    TooManyColors { kappa: u32 },
}

/// The palette `[1, kappa]` with `kappa = delta + extra`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Palette {
    delta: u32,
    extra: u32,
}

impl Palette {
    pub fn new(delta: u32, extra: u32) -> Result<Self, PaletteError> {
        if delta == 0 {
            return Err(PaletteError::ZeroDegree);
        }
        let allowed = if delta >= 3 { delta - 2 } else { 0 };
        if extra > allowed {
            return Err(PaletteError::ExtraOutOfRange { delta, extra });
        }
        let kappa = delta + extra;
        if kappa > MAX_KAPPA {
            return Err(PaletteError::TooManyColors { kappa });
        }
        Ok(Palette { delta, extra })
    }

    /// Maximum degree.
    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// Number of colors beyond `delta`.
    pub fn extra(&self) -> u32 {
        self.extra
    }

    /// Palette size.
    pub fn kappa(&self) -> u32 {
        self.delta + self.extra
    }

    pub fn all(&self) -> ColorSet {
        ColorSet::full(self.kappa())
    }
}

impl fmt::Display for Palette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "delta={} extra={} kappa={}",
            self.delta,
            self.extra,
            self.kappa()
        )
    }
}

/// A set of colors stored as a bit mask; bit `c` stands for color `c`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u128);

impl ColorSet {
    pub const fn empty() -> Self {
        ColorSet(0)
    }

    /// The colors `1..=kappa`.
    pub fn full(kappa: u32) -> Self {
        debug_assert!(kappa <= MAX_KAPPA);
        if kappa == 0 {
            return ColorSet(0);
        }
        ColorSet(((1u128 << kappa) - 1) << 1)
    }

    pub fn singleton(c: Color) -> Self {
        let mut s = ColorSet::empty();
        s.insert(c);
        s
    }

    pub fn insert(&mut self, c: Color) {
        debug_assert!((1..=MAX_KAPPA).contains(&c));
        self.0 |= 1u128 << c;
    }

    pub fn remove(&mut self, c: Color) {
        if c <= MAX_KAPPA {
            self.0 &= !(1u128 << c);
        }
    }

    pub fn contains(&self, c: Color) -> bool {
        (1..=MAX_KAPPA).contains(&c) && self.0 & (1u128 << c) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    /// Smallest color in the set.
    pub fn first(&self) -> Option<Color> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    /// The `k`-th smallest color (0-based).
    pub fn nth(&self, k: usize) -> Option<Color> {
        self.iter().nth(k)
    }

    /// Colors in ascending order.
    pub fn iter(&self) -> ColorIter {
        ColorIter(self.0)
    }

    pub fn to_vec(&self) -> Vec<Color> {
        self.iter().collect()
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::empty();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl IntoIterator for ColorSet {
    type Item = Color;
    type IntoIter = ColorIter;

    fn into_iter(self) -> ColorIter {
        self.iter()
    }
}

pub struct ColorIter(u128);

impl Iterator for ColorIter {
    type Item = Color;

    fn next(&mut self) -> Option<Color> {
        if self.0 == 0 {
            return None;
        }
        let c = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(c)
    }
}
