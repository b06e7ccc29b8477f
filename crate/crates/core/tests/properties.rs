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

use std::collections::HashMap;

use proptest::prelude::*;

use forest_recolor::adversaries::{random_rooted_updates, random_small_instance};
use forest_recolor::colorful_path::ColorfulPath;
use forest_recolor::dist_maint::DistMaint;
use forest_recolor::greedy::{
    greedy_insert, greedy_path_insert, greedy_shift_insert, smallest_subtree_insert, Greedy,
    GreedyVariant, TieBreaker,
};
use forest_recolor::oracles::coloring_probability;
use forest_recolor::rng::seeded;
use forest_recolor::sequence::{parse_sequence, serialize_sequence};
use forest_recolor::sublinear::Sublinear;
use forest_recolor::{ColoredForest, EdgeKey, Maintainer, Palette, Update};

fn maintainers(palette: Palette, seed: u64) -> Vec<Box<dyn Maintainer>> {
    let mut out: Vec<Box<dyn Maintainer>> = vec![
        Box::new(Greedy::new(GreedyVariant::Exact)),
        Box::new(Greedy::with_ties(
            GreedyVariant::Exact,
            TieBreaker::seeded(seed),
        )),
        Box::new(Greedy::new(GreedyVariant::Shift)),
        Box::new(Greedy::new(GreedyVariant::Path)),
        Box::new(DistMaint::new(true, seed)),
        Box::new(DistMaint::new(false, seed)),
    ];
    if palette.extra() == 0 {
        out.push(Box::new(Greedy::new(GreedyVariant::SmallestSubtree)));
        if palette.delta() >= 3 {
            out.push(Box::new(Sublinear::default()));
        }
    }
    if palette.delta() >= 3 && palette.kappa() == 2 * palette.delta() - 2 {
        out.push(Box::new(ColorfulPath::default()));
    }
    out
}

fn palette_strategy() -> impl Strategy<Value = Palette> {
    (2u32..=5)
        .prop_flat_map(|d| (Just(d), 0..=d.saturating_sub(2)))
        .prop_map(|(d, c)| Palette::new(d, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_maintainer_stays_proper(palette in palette_strategy(), seed in any::<u64>(), n in 4usize..24) {
        let updates = random_rooted_updates(palette, n, 120, &mut seeded(seed));
        for mut m in maintainers(palette, seed) {
            let mut f = ColoredForest::new(n, palette);
            for up in &updates {
                let r = m.apply(&mut f, up).unwrap();
                prop_assert!(f.assert_proper().is_ok(), "{} after {}", m.name(), up);
                prop_assert_eq!(r, f.last_recolored().len());
                if !up.is_insert() && !m.name().starts_with("dist-maint") {
                    prop_assert_eq!(r, 0);
                }
            }
            prop_assert_eq!(f.ledger().updates(), updates.len());
        }
    }

    #[test]
    fn recourse_ordering(seed in any::<u64>()) {
        let inst = random_small_instance(10, &mut seeded(seed));
        let run = |insert: &dyn Fn(&mut ColoredForest) -> usize| {
            let mut f = inst.forest.clone();
            let r = insert(&mut f);
            f.assert_proper().unwrap();
            r
        };
        let (u, v) = (inst.u, inst.v);
        let exact = run(&|f| greedy_insert(f, u, v, None, &mut TieBreaker::LexMin).unwrap());
        let shift = run(&|f| greedy_shift_insert(f, u, v, None).unwrap());
        let path = run(&|f| greedy_path_insert(f, u, v, None).unwrap());
        prop_assert!(exact <= shift && shift <= path, "{exact} {shift} {path}");
        if inst.forest.palette().extra() == 0 {
            let sst = run(&|f| smallest_subtree_insert(f, u, v, None).unwrap());
            prop_assert!(path <= sst, "{path} {sst}");
        }
    }

    #[test]
    fn path_variant_recolors_a_path(seed in any::<u64>()) {
        let inst = random_small_instance(10, &mut seeded(seed));
        let mut f = inst.forest.clone();
        greedy_path_insert(&mut f, inst.u, inst.v, None).unwrap();
        let mut edges: Vec<EdgeKey> = f.last_recolored().to_vec();
        edges.push(EdgeKey::new(inst.u, inst.v));
        let mut deg: HashMap<usize, usize> = HashMap::new();
        for k in &edges {
            *deg.entry(k.a).or_default() += 1;
            *deg.entry(k.b).or_default() += 1;
        }
        prop_assert!(deg.values().all(|&d| d <= 2));
        // a forest subgraph with |E| = |V| - 1 is connected
        prop_assert_eq!(deg.len(), edges.len() + 1);
        let ends: Vec<usize> = deg.iter().filter(|(_, &d)| d == 1).map(|(&x, _)| x).collect();
        prop_assert_eq!(ends.len(), 2);
    }

    #[test]
    fn reroot_keeps_hash_and_probability(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let inst = random_small_instance(10, &mut seeded(seed));
        let mut f = inst.forest;
        let h = f.coloring_hash();
        let p = coloring_probability(&f).unwrap();
        let r = pick.index(f.n());
        f.reroot(r);
        prop_assert!(f.is_root(r));
        prop_assert_eq!(f.coloring_hash(), h);
        prop_assert_eq!(coloring_probability(&f).unwrap(), p);
        f.assert_proper().unwrap();
    }

    #[test]
    fn sequences_round_trip(palette in palette_strategy(), seed in any::<u64>()) {
        let updates: Vec<Update> = random_rooted_updates(palette, 12, 40, &mut seeded(seed));
        let text = serialize_sequence(&updates);
        let back = parse_sequence(&text).unwrap();
        prop_assert_eq!(&back, &updates);
        prop_assert_eq!(serialize_sequence(&back), text);
    }
}
