//! Excess-k subgraphs: vertex-minimal extraction, short-cycle guarantees for
//! excess 1 and 2, and chord counting around a minimal subgraph.
//!
//! A graph is excess-k when it has at least `k` more edges than vertices.

use crate::error::{Error, Result};
use crate::graph::{CycleCertificate, EdgeId, Subgraph};
use crate::oracle::{girth_exact, Girth};

/// A vertex-minimal excess-`k` subgraph of the rainbow subgraph `s`.
///
/// Starts from the 2-core of `s` and keeps replacing the current subgraph `R`
/// by `two_core(R - v)` for the smallest vertex `v` for which that core is
/// still excess-`k`, rescanning from the smallest vertex after every success.
/// All edges of the final core are kept, so the excess may exceed `k`.
///
/// The current subgraph is always induced in `s` on its vertex set, so when no
/// single vertex can be dropped no excess-`k` subgraph of `s` lives on a
/// proper subset of its vertices either.
pub fn minimal_excess_subgraph<'g>(s: &Subgraph<'g>, k: i64) -> Result<Subgraph<'g>> {
    if k < 1 {
        return Err(Error::precondition(format!("k must be at least 1, got {k}")));
    }
    if !s.is_rainbow() {
        return Err(Error::precondition("subgraph is not rainbow"));
    }
    let mut current = s.two_core();
    if current.excess() < k {
        return Err(Error::precondition(format!(
            "2-core has excess {} < {k}",
            current.excess()
        )));
    }
    'scan: loop {
        for v in current.vertices() {
            let candidate = current.without_vertex(v).two_core();
            if candidate.excess() >= k {
                current = candidate;
                continue 'scan;
            }
        }
        return Ok(current);
    }
}

fn shortest_cycle(h: &Subgraph<'_>, statement: &'static str) -> Result<CycleCertificate> {
    match girth_exact(h) {
        Girth::Finite(cert) => Ok(cert),
        Girth::Infinite => Err(Error::violation(
            statement,
            format!("excess {} subgraph without a cycle", h.excess()),
            h.graph(),
        )),
    }
}

/// Shortest cycle of an excess-1 graph, checked against `3l <= 2|V| + 3`.
pub fn short_cycle_excess1(h: &Subgraph<'_>) -> Result<CycleCertificate> {
    if h.excess() < 1 {
        return Err(Error::precondition(format!("excess {} < 1", h.excess())));
    }
    let cert = shortest_cycle(h, "excess-1-cycle")?;
    let n = h.vertex_count();
    if 3 * cert.len() > 2 * n + 3 {
        return Err(Error::violation(
            "excess-1-cycle",
            format!("shortest cycle {} exceeds 2n/3 + 1 for n = {n} (edges {:?})", cert.len(), h.edge_ids()),
            h.graph(),
        ));
    }
    Ok(cert)
}

/// Shortest cycle of an excess-2 graph, checked against `2l <= |V| + 2`.
pub fn short_cycle_excess2(h: &Subgraph<'_>) -> Result<CycleCertificate> {
    if h.excess() < 2 {
        return Err(Error::precondition(format!("excess {} < 2", h.excess())));
    }
    let cert = shortest_cycle(h, "excess-2-cycle")?;
    let n = h.vertex_count();
    if 2 * cert.len() > n + 2 {
        return Err(Error::violation(
            "excess-2-cycle",
            format!("shortest cycle {} exceeds n/2 + 1 for n = {n} (edges {:?})", cert.len(), h.edge_ids()),
            h.graph(),
        ));
    }
    Ok(cert)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordCensus {
    /// Chords whose colour does not occur in `R`.
    pub novel: usize,
    /// Chords whose colour occurs in `R`.
    pub plain: usize,
    pub chords: Vec<EdgeId>,
}

impl ChordCensus {
    pub fn total(&self) -> usize {
        self.novel + self.plain
    }
}

/// Edges of `h` outside `r` with both ends in `V(r)`. An edge parallel to an
/// edge of `r` counts as a chord.
pub fn chord_census(r: &Subgraph<'_>, h: &Subgraph<'_>) -> Result<ChordCensus> {
    if !std::ptr::eq(r.graph(), h.graph()) {
        return Err(Error::precondition("R and H must share an ambient graph"));
    }
    if !r.is_rainbow() {
        return Err(Error::precondition("R is not rainbow"));
    }
    if r.min_degree().is_some_and(|d| d < 2) {
        return Err(Error::precondition("R has a vertex of degree below 2"));
    }
    let deg = r.degrees();
    let colours = r.colours();
    let mut census = ChordCensus { novel: 0, plain: 0, chords: Vec::new() };
    for &id in h.edge_ids() {
        let e = h.graph().edge(id);
        if r.contains(id) || deg[e.u] == 0 || deg[e.v] == 0 {
            continue;
        }
        if colours.contains(&e.colour) {
            census.plain += 1;
        } else {
            census.novel += 1;
        }
        census.chords.push(id);
    }
    Ok(census)
}

/// `max{ C(2k+2, 2), 6k(r-1) }`.
pub fn chord_bound(k: usize, r: usize) -> usize {
    let m = 2 * k + 2;
    (m * (m - 1) / 2).max(6 * k * r.saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, EdgeColouredGraph};

    fn rainbow(n: usize, pairs: &[(usize, usize)]) -> EdgeColouredGraph {
        EdgeColouredGraph::rainbow_from_pairs(n, pairs).unwrap()
    }

    const K4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    const THETA: [(usize, usize); 6] = [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)];

    #[test]
    fn k4_with_pendant_path() {
        let mut pairs = K4.to_vec();
        pairs.extend([(3, 4), (4, 5), (5, 6)]);
        let g = rainbow(7, &pairs);
        let r = minimal_excess_subgraph(&g.full(), 2).unwrap();
        assert_eq!(r.edge_ids(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn theta_is_already_minimal() {
        let g = rainbow(5, &THETA);
        assert_eq!(minimal_excess_subgraph(&g.full(), 1).unwrap(), g.full());
    }

    /// K4 on 0..4, path 3-4-5, C5 on 5..10; eleven distinct colours.
    fn k4_path_c5() -> EdgeColouredGraph {
        let mut pairs = K4.to_vec();
        pairs.extend([(3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 5)]);
        rainbow(10, &pairs)
    }

    /// Largest excess of a subgraph whose vertices all lie in `mask`; the
    /// best choice takes every edge induced by the mask.
    fn induced_excess(g: &EdgeColouredGraph, mask: u32) -> i64 {
        let inside = |v: usize| mask >> v & 1 == 1;
        let edges = g.edges().iter().filter(|e| inside(e.u) && inside(e.v)).count() as i64;
        edges - mask.count_ones() as i64
    }

    #[test]
    fn k4_is_unique_minimal_support() {
        let g = k4_path_c5();
        // Oracle: every vertex subset whose induced graph has excess >= 2,
        // keeping only the inclusion-minimal ones.
        let supports: Vec<u32> = (1u32..1 << 10).filter(|&m| induced_excess(&g, m) >= 2).collect();
        let minimal: Vec<u32> =
            supports.iter().copied().filter(|&m| !supports.iter().any(|&o| o != m && o & m == o)).collect();
        assert_eq!(minimal, vec![0b1111]);

        let r = minimal_excess_subgraph(&g.full(), 2).unwrap();
        assert_eq!(r.vertices(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn preconditions() {
        let c5 = rainbow(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(matches!(minimal_excess_subgraph(&c5.full(), 1), Err(Error::Precondition(_))));
        let mono = EdgeColouredGraph::new(3, 1, vec![Edge::new(0, 1, 0), Edge::new(1, 2, 0)]).unwrap();
        assert!(minimal_excess_subgraph(&mono.full(), 1).is_err());
        assert!(short_cycle_excess2(&rainbow(5, &THETA).full()).is_err());
    }

    #[test]
    fn excess1_examples() {
        let triple = EdgeColouredGraph::new(
            2,
            3,
            vec![Edge::new(0, 1, 0), Edge::new(0, 1, 1), Edge::new(0, 1, 2)],
        )
        .unwrap();
        assert_eq!(short_cycle_excess1(&triple.full()).unwrap().len(), 2);
        assert_eq!(short_cycle_excess1(&rainbow(5, &THETA).full()).unwrap().len(), 4);
        let bowtie = rainbow(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert_eq!(short_cycle_excess1(&bowtie.full()).unwrap().len(), 3);
    }

    #[test]
    fn excess2_examples() {
        assert_eq!(short_cycle_excess2(&rainbow(4, &K4).full()).unwrap().len(), 3);

        // K4 with every edge subdivided once: vertices 0..4 plus midpoints 4..10
        let pairs: Vec<_> = K4.iter().enumerate().flat_map(|(i, &(a, b))| [(a, 4 + i), (4 + i, b)]).collect();
        let sub = rainbow(10, &pairs);
        assert_eq!(sub.full().excess(), 2);
        assert_eq!(short_cycle_excess2(&sub.full()).unwrap().len(), 6);

        let bowtie_chord = rainbow(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (1, 3)]);
        assert_eq!(short_cycle_excess2(&bowtie_chord.full()).unwrap().len(), 3);
    }

    fn theta_with(extra: Edge, colours: usize) -> EdgeColouredGraph {
        let mut edges: Vec<Edge> = THETA.iter().enumerate().map(|(c, &(u, v))| Edge::new(u, v, c)).collect();
        edges.push(extra);
        EdgeColouredGraph::new(5, colours, edges).unwrap()
    }

    #[test]
    fn chord_census_examples() {
        let plain = theta_with(Edge::new(0, 1, 2), 6);
        let r = Subgraph::new(&plain, 0..6).unwrap();
        let c = chord_census(&r, &plain.full()).unwrap();
        assert_eq!((c.novel, c.plain, c.chords), (0, 1, vec![6]));

        let novel = theta_with(Edge::new(0, 1, 6), 7);
        let r = Subgraph::new(&novel, 0..6).unwrap();
        let c = chord_census(&r, &novel.full()).unwrap();
        assert_eq!((c.novel, c.plain), (1, 0));

        let bare = rainbow(5, &THETA);
        let c = chord_census(&bare.full(), &bare.full()).unwrap();
        assert_eq!(c.total(), 0);
    }

    #[test]
    fn chord_bound_values() {
        assert_eq!(chord_bound(2, 2), 15);
        assert_eq!(chord_bound(1, 2), 6);
        assert_eq!(chord_bound(1, 1), 6);
        assert_eq!(chord_bound(1, 4), 18);
    }
}
