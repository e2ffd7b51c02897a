mod common;

use std::collections::BTreeSet;

use braidtk::braid::{closure_summary, BraidWord};
use braidtk::surface::{
    is_e_arboreal, neighborhood_summary, verify_assemblage, CurveConfiguration, CurveEvent,
    SubsurfaceSummary,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// Canonical string of the tree rooted at `v`.
fn rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted(adj, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn canonical(edges: &[(usize, usize)], n: usize) -> String {
    let mut adj = vec![vec![]; n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    (0..n).map(|v| rooted(&adj, v, usize::MAX)).min().unwrap()
}

/// One edge list per unlabelled tree on `n` vertices, for n up to `max`.
fn all_trees(max: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = vec![(1, vec![])];
    let mut layer: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for n in 2..=max {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &layer {
            for v in 0..n - 1 {
                let mut e = t.clone();
                e.push((v, n - 1));
                if seen.insert(canonical(&e, n)) {
                    next.push(e);
                }
            }
        }
        out.extend(next.iter().map(|e| (n, e.clone())));
        layer = next;
    }
    out
}

/// Orders every curve's events by index, which is needed past degree 3.
fn tree_config(n: usize, edges: &[(usize, usize)]) -> CurveConfiguration {
    let mut cfg = CurveConfiguration::from_graph(n, edges).unwrap();
    for c in 0..n {
        let mine: Vec<usize> = (0..edges.len())
            .filter(|&k| edges[k].0 == c || edges[k].1 == c)
            .collect();
        if mine.len() > 3 {
            cfg = cfg.with_order(c, mine).unwrap();
        }
    }
    cfg
}

#[test]
fn tree_identities() {
    let trees = all_trees(12);
    // 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551 unlabelled trees.
    assert_eq!(trees.len(), 987);
    for (n, edges) in trees {
        let s = neighborhood_summary(&tree_config(n, &edges)).unwrap();
        assert_eq!(s.betti, n as i64, "{edges:?}");
        assert_eq!(2 * s.h + s.r as i64 - 1, n as i64, "{edges:?}");
        assert!(s.connected);
    }
}

#[test]
fn chains_match_two_strand_torus_links() {
    for n in 1..=12 {
        let s = neighborhood_summary(&CurveConfiguration::chain(n)).unwrap();
        let w = BraidWord::new(2, vec![1; n + 1]).unwrap();
        assert_eq!(s.r, closure_summary(&w).components, "A{n}");
        assert_eq!(s.r, if n % 2 == 0 { 1 } else { 2 });
    }
}

#[test]
fn tripod_table() {
    for (a, b, c) in [(1, 2, 6), (2, 2, 5), (3, 2, 4), (1, 4, 4)] {
        let cfg = CurveConfiguration::tripod(a, b, c);
        let s = neighborhood_summary(&cfg).unwrap();
        assert_eq!((s.h, s.r), (5, 1), "T({a},{b},{c})");
        assert!(is_e_arboreal(&cfg));
    }
}

#[test]
fn whole_standard_configuration_spans_the_fibre_surface() {
    // The neighbourhood of all brick curves misses the complementary
    // disks; together with them it is the whole fibre surface.
    for w in common::corpus(8) {
        if w.is_split() || !braidtk::linking::is_prime(&w) || closure_summary(&w).betti == 0 {
            continue;
        }
        let cfg = CurveConfiguration::standard(&w).unwrap();
        let s = cfg.span_summary().unwrap();
        let c = closure_summary(&w);
        assert_eq!((s.betti, s.r, s.h), (c.betti, c.components, c.genus), "{w}");
        let n = neighborhood_summary(&cfg).unwrap();
        assert_eq!(n.betti - n.r as i64, s.betti - s.r as i64, "{w}");
    }
}

#[test]
fn abstract_assemblage() {
    // E6 core of genus 3 plus a curve hanging off a leaf.
    let mut edges = vec![(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)];
    let cfg = CurveConfiguration::from_graph(6, &edges).unwrap();
    let r = verify_assemblage(&cfg, 6, 3);
    assert!(r.accepted);
    edges.push((5, 6));
    let cfg = CurveConfiguration::from_graph(7, &edges).unwrap();
    assert!(verify_assemblage(&cfg, 6, 3).accepted);
    assert!(!verify_assemblage(&cfg, 6, 5).accepted);
}

fn relabel(n: usize, events: &[CurveEvent], perm: &[usize]) -> CurveConfiguration {
    let ev = events
        .iter()
        .map(|e| CurveEvent {
            a: perm[e.a],
            b: perm[e.b],
            sign: e.sign,
        })
        .collect();
    CurveConfiguration::from_events(n, ev).unwrap()
}

fn summary_of(cfg: &CurveConfiguration) -> SubsurfaceSummary {
    neighborhood_summary(cfg).unwrap()
}

proptest! {
    #[test]
    fn random_trees_satisfy_the_identity(prufer in proptest::collection::vec(0usize..12, 0..10), seed in any::<u64>()) {
        let n = prufer.len() + 2;
        let prufer: Vec<usize> = prufer.iter().map(|&x| x % n).collect();
        let mut degree = vec![1; n];
        for &x in &prufer {
            degree[x] += 1;
        }
        let mut edges = Vec::new();
        for &x in &prufer {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, x));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        let mut cfg = CurveConfiguration::from_graph(n, &edges).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        for c in 0..n {
            let mut mine: Vec<usize> = (0..edges.len())
                .filter(|&k| edges[k].0 == c || edges[k].1 == c)
                .collect();
            if mine.len() > 3 {
                // Any cyclic order will do for a tree.
                mine.shuffle(&mut rng);
                cfg = cfg.with_order(c, mine).unwrap();
            }
        }
        let s = summary_of(&cfg);
        prop_assert_eq!(s.betti, n as i64);
        prop_assert_eq!(2 * s.h + s.r as i64 - 1, n as i64);
    }

    #[test]
    fn tracing_ignores_labels(w in (3usize..=4).prop_flat_map(|n| proptest::collection::vec(1..n, 4..10).prop_map(move |l| BraidWord::new(n, l).unwrap())), seed in any::<u64>()) {
        // Brick configurations carry their own cyclic orders; relabelling
        // the curves of the abstract copy (all degrees at most 3) must not
        // change the traced boundary.
        let Ok(cfg) = CurveConfiguration::standard(&w) else { return Ok(()) };
        let g = cfg.intersection_graph();
        if (0..g.vertex_count()).any(|v| g.degree(v) > 3) {
            return Ok(());
        }
        let n = cfg.curve_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        let mut reversed: Vec<CurveEvent> = cfg.events().to_vec();
        reversed.reverse();
        let base = summary_of(&relabel(n, cfg.events(), &(0..n).collect::<Vec<_>>()));
        // Reversing the event list reverses every cyclic order of at most
        // three events, which is a mirror image with the same summary.
        prop_assert_eq!(summary_of(&relabel(n, &reversed, &perm)), base);
    }
}
