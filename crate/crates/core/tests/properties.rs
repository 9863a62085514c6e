//! Property tests over randomly generated inputs.

use proptest::prelude::*;
use std::collections::BTreeMap;
use symflex_core::colourings::{
    conjugate, is_cartesian, is_nac, is_pseudo_rs, Colour, ThreeColouring, TwoColour,
    TwoColouring,
};
use symflex_core::frameworks::{strip_framework, StripSpec};
use symflex_core::graph_core::gk_graph;
use symflex_core::Graph;

/// Random connected graph on up to 8 vertices, as an edge list over "0".."7".
fn arbitrary_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = symflex_core::frameworks::SeedSequence(seed);
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut edges: std::collections::BTreeSet<(u32, u32)> = std::collections::BTreeSet::new();
        for v in 1..n as u32 {
            let u = (rng.next_u64() % v as u64) as u32;
            edges.insert((u, v));
        }
        for _ in 0..(rng.next_u64() % 8) {
            let u = (rng.next_u64() % n as u64) as u32;
            let v = (rng.next_u64() % n as u64) as u32;
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
        let named: Vec<(String, String)> =
            edges.iter().map(|&(u, v)| (u.to_string(), v.to_string())).collect();
        Graph::new(&names, &named).unwrap()
    })
}

/// Exhaustive cycle scan, the definition-level oracle for the two-colour
/// check.
fn naive_is_nac(g: &Graph, delta: &TwoColouring) -> bool {
    if !delta.0.contains(&TwoColour::Red) || !delta.0.contains(&TwoColour::Blue) {
        return false;
    }
    let m = g.edge_count();
    assert!(m <= 31);
    'subset: for mask in 1u32..(1 << m) {
        let mut degree = vec![0u8; g.vertex_count()];
        for e in 0..m {
            if mask >> e & 1 == 1 {
                let (u, v) = g.edge(e);
                degree[u as usize] += 1;
                degree[v as usize] += 1;
            }
        }
        let touched: Vec<usize> =
            (0..g.vertex_count()).filter(|&v| degree[v] > 0).collect();
        if touched.iter().any(|&v| degree[v] != 2) {
            continue 'subset;
        }
        let mut dsu = symflex_core::graph_core::Dsu::new(g.vertex_count());
        for e in 0..m {
            if mask >> e & 1 == 1 {
                let (u, v) = g.edge(e);
                dsu.union(u as usize, v as usize);
            }
        }
        let root = dsu.find(touched[0]);
        if touched.iter().any(|&v| dsu.find(v) != root) {
            continue 'subset;
        }
        let red = (0..m).filter(|&e| mask >> e & 1 == 1 && delta.0[e] == TwoColour::Red).count();
        let total = (mask & ((1 << m) - 1)).count_ones() as usize;
        if red == 1 || total - red == 1 {
            return false;
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn component_nac_check_matches_cycle_scan(g in arbitrary_graph(), bits in any::<u32>()) {
        prop_assume!(g.edge_count() <= 12);
        let delta = TwoColouring(
            (0..g.edge_count())
                .map(|e| if bits >> (e % 32) & 1 == 1 { TwoColour::Blue } else { TwoColour::Red })
                .collect(),
        );
        prop_assert_eq!(is_nac(&g, &delta).is_nac(), naive_is_nac(&g, &delta));
    }

    #[test]
    fn components_refine_unions(g in arbitrary_graph(), p in any::<u32>(), q in any::<u32>()) {
        let keep_p = |e: usize| p >> (e % 32) & 1 == 1;
        let keep_pq = |e: usize| (p | q) >> (e % 32) & 1 == 1;
        let fine = g.component_labels(keep_p);
        let coarse = g.component_labels(keep_pq);
        // two vertices in one fine component share a coarse component
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for v in 0..g.vertex_count() {
            let c = seen.entry(fine[v]).or_insert(coarse[v]);
            prop_assert_eq!(*c, coarse[v]);
        }
    }

    #[test]
    fn simple_path_cap_is_a_prefix(g in arbitrary_graph(), seed in any::<u64>()) {
        let n = g.vertex_count() as u32;
        prop_assume!(n >= 2);
        let u = (seed % n as u64) as u32;
        let v = ((seed >> 8) % n as u64) as u32;
        prop_assume!(u != v);
        let full = g.simple_paths(u, v, |_| false, 10_000);
        prop_assume!(!full.truncated);
        let capped = g.simple_paths(u, v, |_| false, 3);
        prop_assert_eq!(capped.truncated, full.paths.len() > 3);
        prop_assert_eq!(&capped.paths[..], &full.paths[..full.paths.len().min(3)]);
    }

    #[test]
    fn conjugation_involutes_and_preserves_structure(seed in any::<u64>(), k in 1u32..=3) {
        let g = gk_graph(k).unwrap();
        let all = symflex_core::colourings::enumerate_pseudo_rs(
            &g,
            &symflex_core::colourings::EnumerateOptions::default(),
            &symflex_core::colourings::Budget::default(),
        )
        .unwrap();
        prop_assume!(!all.is_empty());
        let delta = &all[(seed % all.len() as u64) as usize];
        let conj = conjugate(&g, delta);
        prop_assert_eq!(&conjugate(&g, &conj), delta);
        prop_assert!(is_pseudo_rs(&g, &conj).is_ok());
        prop_assert_eq!(delta.gold_edges(), conj.gold_edges());
        prop_assert_eq!(
            is_cartesian(&g, delta).is_cartesian(),
            is_cartesian(&g, &conj).is_cartesian()
        );
    }

    #[test]
    fn strips_stay_symmetric_and_walk_independent(seed in any::<u64>(), m in 1u32..=3, n in 1u32..=2) {
        let fw = strip_framework(&StripSpec::plain(m, n, seed));
        prop_assert!(fw.is_reflection_symmetric(1e-9));
        prop_assert!(symflex_core::frameworks::is_walk_independent(&fw, 1e-9).is_ok());
    }

    #[test]
    fn edge_orbits_partition_the_edge_set(seed in any::<u64>(), k in 1u32..=4) {
        let g = gk_graph(k).unwrap();
        let orbits = g.edge_orbits();
        let mut seen = vec![0u8; g.edge_count()];
        for orbit in &orbits {
            seen[orbit.representative] += 1;
            if !orbit.is_invariant {
                seen[orbit.mirror] += 1;
            }
            prop_assert_eq!(g.sigma_edge(orbit.representative), orbit.mirror);
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        // sigma is an involution on edges
        let e = (seed % g.edge_count() as u64) as usize;
        prop_assert_eq!(g.sigma_edge(g.sigma_edge(e)), e);
    }
}

#[test]
fn gold_substitutions_agree_on_random_three_colourings() {
    // the two substitutions succeed or fail together once the mirror
    // condition holds; checked over colourings built to satisfy it
    let g = gk_graph(2).unwrap();
    let mut rng = symflex_core::frameworks::SeedSequence(42);
    for _ in 0..500 {
        let orbits = g.edge_orbits();
        let mut colours = vec![Colour::Gold; g.edge_count()];
        for orbit in &orbits {
            if orbit.is_invariant {
                continue;
            }
            let (a, b) = match rng.next_u64() % 3 {
                0 => (Colour::Red, Colour::Blue),
                1 => (Colour::Blue, Colour::Red),
                _ => (Colour::Gold, Colour::Gold),
            };
            colours[orbit.representative] = a;
            colours[orbit.mirror] = b;
        }
        let delta = ThreeColouring(colours);
        let to_red = is_nac(&g, &delta.substitute_gold(TwoColour::Red)).is_nac();
        let to_blue = is_nac(&g, &delta.substitute_gold(TwoColour::Blue)).is_nac();
        assert_eq!(to_red, to_blue);
    }
}
