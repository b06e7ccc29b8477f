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

//! Exact vertex counts the star-counting constructions need.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::AdversaryError;
use crate::palette::Palette;

/// `C(n, k)`, zero when `k > n`.
fn div_ceil(a: BigUint, b: &BigUint) -> BigUint {
    (a + b - 1u32) / b
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thresholds {
    /// Owner-star adversary.
    pub n0: BigUint,
    /// Layered-tree bootstrap.
    pub n1: BigUint,
    /// Shift-based reduction.
    pub n2: BigUint,
}

fn n0(delta: u64, c: u64) -> BigUint {
    let b = binomial(delta + c, c + 1);
    let stars = BigUint::from(c + 1) * &b + 1u32;
    stars * BigUint::from(delta) + b
}

// star packing: N' full stars, each yields C(delta, c+1) small ones
fn n1(delta: u64, c: u64) -> BigUint {
    let b = binomial(delta + c, c + 1);
    let m = (c + 1) * (delta - 1);
    let want = BigUint::from(m - 1) * b + 1u32;
    let per = binomial(delta, c + 1);
    let stars = div_ceil(want, &per);
    stars * BigUint::from(delta + 1)
}

fn n2_stars(delta: u64, c: u64) -> BigUint {
    let x = (2 * c + 2).min(delta - c - 2);
    let num = BigUint::from(delta * x * (delta + c - x)) * binomial(delta + c, x);
    div_ceil(num, &binomial(delta, x))
}

pub fn adversary_thresholds(palette: Palette) -> Result<Thresholds, AdversaryError> {
    let (delta, c) = (u64::from(palette.delta()), u64::from(palette.extra()));
    if delta < 3 {
        return Err(AdversaryError::WrongPalette {
            expected: "delta >= 3",
            delta: palette.delta(),
            kappa: palette.kappa(),
        });
    }
    Ok(Thresholds {
        n0: n0(delta, c),
        n1: n1(delta, c),
        n2: n2_stars(delta, c).max(n1(c + 2, c)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(delta: u32, c: u32) -> Thresholds {
        adversary_thresholds(Palette::new(delta, c).unwrap()).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(60, 30), BigUint::from(118_264_581_564_861_424u64));
    }

    #[test]
    fn small_values() {
        let v = t(3, 0);
        // B = 3 palettes, N = 4 stars of 3 vertices, plus 3 owners
        assert_eq!(v.n0, BigUint::from(15u32));
        // M = 2, N' = ceil(4 / 3) = 2 stars of 4 vertices
        assert_eq!(v.n1, BigUint::from(8u32));
        // x = 1: 3 * 1 * 2 * 3 / 3 = 6; n1(2, 0) = 3
        assert_eq!(v.n2, BigUint::from(6u32));
        // B = C(4, 2) = 6, N = 13
        assert_eq!(t(3, 1).n0, BigUint::from(13u32 * 3 + 6));
    }

    #[test]
    fn monotone_in_delta() {
        for c in 0..3 {
            let mut prev: Option<Thresholds> = None;
            for delta in (c + 2).max(3)..=16 {
                let cur = t(delta, c);
                if let Some(p) = &prev {
                    assert!(cur.n0 >= p.n0, "n0 at delta={delta} c={c}");
                    assert!(cur.n1 >= p.n1, "n1 at delta={delta} c={c}");
                    assert!(cur.n2 >= p.n2, "n2 at delta={delta} c={c}");
                }
                prev = Some(cur);
            }
        }
    }

    #[test]
    fn growth_rates_for_constant_c() {
        // n0 ~ delta^(c+2) and n1 ~ delta^2 for fixed c
        let ratio = |a: &BigUint, b: &BigUint| {
            use num_traits::ToPrimitive;
            a.to_f64().unwrap() / b.to_f64().unwrap()
        };
        let (a, b) = (t(8, 0), t(16, 0));
        assert!((ratio(&b.n0, &a.n0) - 4.0).abs() < 1.0);
        assert!((ratio(&b.n1, &a.n1) - 4.0).abs() < 1.0);
        let (a, b) = (t(8, 1), t(16, 1));
        assert!((ratio(&b.n0, &a.n0) - 8.0).abs() < 2.0);
    }
}
