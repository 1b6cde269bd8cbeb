use std::collections::BTreeSet;

use proptest::prelude::*;

use rainbow_core::short_cycle::{find_short_rainbow_cycle, Branch};
use rainbow_core::excess::{chord_census, minimal_excess_subgraph};
use rainbow_core::format::{parse_cert, parse_dgr, parse_ecg, write_cert, write_dgr, write_ecg};
use rainbow_core::instances::{
    from_digraph, psi_digraph, psi_graph, random_digraph_between, random_instance, ClassShape, ShapeMix,
};
use rainbow_core::oracle::{directed_girth, girth_exact, max_stable_set, rainbow_girth_exact, RainbowGirth};
use rainbow_core::{CycleCertificate, Digraph, Edge, EdgeColouredGraph, Subgraph};

/// Small edge-coloured multigraph: loops and same-colour repeats dropped,
/// unused colours squeezed out.
fn arb_graph(max_n: usize, max_t: usize, max_m: usize) -> impl Strategy<Value = EdgeColouredGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, 0..max_t), 1..=max_m).prop_map(move |raw| {
            let mut seen = BTreeSet::new();
            let kept: Vec<(usize, usize, usize)> = raw
                .into_iter()
                .filter(|&(u, v, c)| u != v && seen.insert((u.min(v), u.max(v), c)))
                .collect();
            let colours: BTreeSet<usize> = kept.iter().map(|e| e.2).collect();
            let index = |c: usize| colours.iter().position(|&x| x == c).unwrap();
            let edges = kept.iter().map(|&(u, v, c)| Edge::new(u, v, index(c))).collect();
            EdgeColouredGraph::new(n, colours.len(), edges).unwrap()
        })
    })
}

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=3 * n).prop_map(move |raw| {
            let mut seen = BTreeSet::new();
            let arcs = raw.into_iter().filter(|&(u, v)| u != v && seen.insert((u, v))).collect();
            Digraph::new(n, arcs).unwrap()
        })
    })
}

/// Every cycle, as (length, colours distinct), by trying all vertex
/// sequences and all edge choices between consecutive vertices.
fn brute_force_cycles(g: &EdgeColouredGraph) -> Vec<(usize, bool)> {
    fn extend(g: &EdgeColouredGraph, path: &mut Vec<usize>, used: &mut Vec<usize>, out: &mut Vec<(usize, bool)>) {
        let last = *path.last().unwrap();
        for (id, e) in g.edges().iter().enumerate() {
            if used.contains(&id) || !e.touches(last) {
                continue;
            }
            let next = e.other(last);
            used.push(id);
            if next == path[0] && used.len() >= 2 {
                let colours: BTreeSet<usize> = used.iter().map(|&i| g.edge(i).colour).collect();
                out.push((used.len(), colours.len() == used.len()));
            } else if !path.contains(&next) {
                path.push(next);
                extend(g, path, used, out);
                path.pop();
            }
            used.pop();
        }
    }
    let mut out = Vec::new();
    for start in 0..g.vertex_count() {
        extend(g, &mut vec![start], &mut Vec::new(), &mut out);
    }
    out
}

fn brute_force_directed_girth(d: &Digraph) -> Option<usize> {
    let out = d.out_neighbours();
    let n = d.vertex_count();
    let mut best: Option<usize> = None;
    fn walk(out: &[Vec<usize>], start: usize, v: usize, len: usize, seen: &mut Vec<bool>, best: &mut Option<usize>) {
        for &w in &out[v] {
            if w == start {
                *best = Some(best.map_or(len, |b| b.min(len)));
            } else if !seen[w] {
                seen[w] = true;
                walk(out, start, w, len + 1, seen, best);
                seen[w] = false;
            }
        }
    }
    for s in 0..n {
        let mut seen = vec![false; n];
        seen[s] = true;
        walk(&out, s, s, 1, &mut seen, &mut best);
    }
    best
}

fn heavy(shape: ClassShape) -> ShapeMix {
    ShapeMix::new(vec![(shape, 3), (ClassShape::Uniform, 1)]).unwrap()
}

fn arb_shape() -> impl Strategy<Value = ClassShape> {
    prop_oneof![
        Just(ClassShape::Uniform),
        Just(ClassShape::Star),
        Just(ClassShape::Triangle),
        Just(ClassShape::Matching)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn two_core_is_idempotent_and_keeps_excess(g in arb_graph(9, 6, 16)) {
        let full = g.full();
        let core = full.two_core();
        prop_assert_eq!(core.two_core(), core.clone());
        prop_assert!(core.is_subgraph_of(&full));
        prop_assert!(core.min_degree().is_none_or(|d| d >= 2));
        prop_assert!(core.excess() >= full.excess().min(0));
        if !core.is_empty() {
            prop_assert!(core.excess() >= full.excess());
        }
    }

    #[test]
    fn two_core_is_monotone(g in arb_graph(9, 6, 16), drop in 0usize..16) {
        let full = g.full();
        let ids: Vec<usize> = full.edge_ids().iter().copied().filter(|&id| id != drop).collect();
        let part = Subgraph::new(&g, ids).unwrap();
        prop_assert!(part.two_core().is_subgraph_of(&full.two_core()));
    }

    #[test]
    fn rainbow_girth_matches_brute_force(g in arb_graph(6, 5, 9)) {
        let cycles = brute_force_cycles(&g);
        let plain = cycles.iter().map(|c| c.0).min();
        let rainbow = cycles.iter().filter(|c| c.1).map(|c| c.0).min();
        let cap = g.vertex_count().max(2);
        let rg = rainbow_girth_exact(&g, cap).unwrap();
        prop_assert_eq!(rg.length(), rainbow);
        if let RainbowGirth::Finite(c) = &rg {
            prop_assert!(c.validate(&g).is_ok());
            prop_assert!(c.rainbow);
        }
        let gg = girth_exact(&g.full());
        prop_assert_eq!(gg.length(), plain);
        if let (Some(p), Some(r)) = (gg.length(), rg.length()) {
            prop_assert!(p <= r);
        }
    }

    #[test]
    fn rainbow_girth_cap_is_monotone(g in arb_graph(8, 6, 14), cap in 2usize..8) {
        let low = rainbow_girth_exact(&g, cap).unwrap();
        let high = rainbow_girth_exact(&g, cap + 1).unwrap();
        match low {
            RainbowGirth::Finite(c) => prop_assert_eq!(high.length(), Some(c.len())),
            RainbowGirth::NoneWithin(_) => prop_assert!(high.length().is_none_or(|l| l == cap + 1)),
        }
    }

    #[test]
    fn directed_girth_matches_brute_force(d in arb_digraph(7)) {
        prop_assert_eq!(directed_girth(&d).length(), brute_force_directed_girth(&d));
    }

    #[test]
    fn reduction_preserves_girth(seed in any::<u64>(), n in 3usize..12, lo in 1usize..3) {
        let d = random_digraph_between(n, lo.min(n - 1), (lo + 1).min(n - 1), seed).unwrap();
        let red = from_digraph(&d);
        prop_assert_eq!(rainbow_girth_exact(&red.graph, n).unwrap().length(), directed_girth(&d).length());
        prop_assert_eq!(psi_graph(&red.graph), psi_digraph(&d).unwrap());
        for (c, &tail) in red.colour_vertex.iter().enumerate() {
            let class = red.graph.colour_class(c).unwrap();
            prop_assert!(class.iter().all(|&id| red.graph.edge(id).touches(tail)));
        }
    }

    #[test]
    fn stable_set_matches_brute_force(g in arb_graph(14, 8, 24)) {
        let full = g.full();
        let vs = full.vertices();
        let found = max_stable_set(&full).unwrap();
        let independent = |mask: u32| g.edges().iter().all(|e| {
            let (a, b) = (vs.iter().position(|&v| v == e.u).unwrap(), vs.iter().position(|&v| v == e.v).unwrap());
            mask >> a & 1 == 0 || mask >> b & 1 == 0
        });
        let best = (0u32..1 << vs.len()).filter(|&m| independent(m)).map(u32::count_ones).max().unwrap();
        prop_assert_eq!(found.size, best as usize);
        prop_assert!(found.vertices.iter().all(|v| vs.contains(v)));
        let set: BTreeSet<_> = found.vertices.iter().collect();
        prop_assert!(g.edges().iter().all(|e| !(set.contains(&e.u) && set.contains(&e.v))));
    }

    #[test]
    fn ecg_round_trip(g in arb_graph(10, 6, 20)) {
        let text = write_ecg(&g);
        let back = parse_ecg(&text).unwrap();
        prop_assert_eq!(write_ecg(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn dgr_and_cert_round_trip(d in arb_digraph(8), vs in prop::collection::vec(0usize..50, 2..8), flag: bool) {
        let text = write_dgr(&d);
        prop_assert_eq!(write_dgr(&parse_dgr(&text).unwrap()), text);
        let cert = CycleCertificate { edges: vs.iter().map(|v| v * 3).collect(), vertices: vs, rainbow: flag };
        prop_assert_eq!(parse_cert(&write_cert(&cert)).unwrap(), cert);
    }

    #[test]
    fn minimal_excess_subgraph_is_locally_minimal(seed in any::<u64>(), n in 4usize..14, extra in 1usize..6, k in 1i64..3) {
        let g = random_instance(n, n + extra + k as usize, 1, seed, &ShapeMix::only(ClassShape::Uniform)).unwrap();
        let r = minimal_excess_subgraph(&g.full(), k).unwrap();
        prop_assert!(r.is_rainbow());
        prop_assert!(r.excess() >= k);
        prop_assert!(r.min_degree().unwrap() >= 2);
        for v in r.vertices() {
            prop_assert!(r.without_vertex(v).two_core().excess() < k);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn short_rainbow_cycle_invariants(seed in any::<u64>(), n in 6usize..40, shape in arb_shape()) {
        let g = random_instance(n, n, 3, seed, &heavy(shape)).unwrap();
        let found = find_short_rainbow_cycle(&g).unwrap();
        let l = found.certificate.len();
        prop_assert!(found.certificate.validate(&g).is_ok());
        prop_assert!(found.certificate.rainbow);
        prop_assert!(9 * l <= 4 * n + 63);
        let again = find_short_rainbow_cycle(&g).unwrap();
        prop_assert_eq!(&again.certificate, &found.certificate);

        let trimmed = &found.prepared.graph;
        let profile = &found.prepared.profile;
        match found.branch {
            Branch::ManyNonStar => {
                prop_assert!(5 * l <= 2 * n + 35);
                prop_assert_eq!(found.outcome.overlap, 0);
                // chords of R inside R together with the second cycle
                let r = Subgraph::new(trimmed, found.outcome.first.clone()).unwrap();
                let second = Subgraph::new(trimmed, found.outcome.second.clone()).unwrap();
                let cycle = girth_exact(&second).certificate().unwrap().clone();
                let h = Subgraph::new(trimmed, cycle.edges).unwrap().union(&r);
                let keys: Vec<_> = h.edge_ids().iter().map(|&id| trimmed.edge(id).key()).collect();
                let two_cycle = keys.iter().enumerate().any(|(i, k)| keys[..i].contains(k));
                if !two_cycle {
                    prop_assert!(chord_census(&r, &h).unwrap().total() <= 15);
                }
            }
            Branch::FewNonStar => {
                prop_assert!(found.outcome.overlap <= profile.non_star_classes.len());
                prop_assert!(profile.non_star_vertices.len() <= 7);
            }
            Branch::AllStar => prop_assert!(l <= n.div_ceil(3)),
        }
    }
}
