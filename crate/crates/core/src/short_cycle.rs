//! Short rainbow cycles when every colour class has at least three edges.
//!
//! Given an `n`-vertex graph with at least `n` colours and every class of size
//! at least 3, [`find_short_rainbow_cycle`] returns a rainbow cycle of length
//! `l` with `9l <= 4n + 63`.
//!
//! The instance is first trimmed to `n` classes of exactly three edges. A
//! class is a *star class* when its three edges share a vertex (the centre);
//! vertices that are not the centre of any star class are *non-star*
//! vertices. With at least eight non-star vertices, two vertex-disjoint
//! rainbow subgraphs are built from transversals and the shorter of their
//! girths is returned. With fewer, either every vertex centres a star class,
//! and orienting each star away from its centre gives a digraph of minimum
//! outdegree 3 whose shortest directed cycle is rainbow, or a non-star vertex
//! `z` is avoided by two nearly edge-disjoint transversals.
//!
//! The length bounds are checked on every result, never used to steer the
//! search. A failed bound is reported as a [`TheoremViolation`].
//!
//! [`TheoremViolation`]: crate::error::TheoremViolation

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::excess::{minimal_excess_subgraph, short_cycle_excess1, short_cycle_excess2};
use crate::graph::{Colour, CycleCertificate, Digraph, Edge, EdgeColouredGraph, EdgeId, Subgraph, Vertex};
use crate::oracle::{directed_girth, girth_exact, DirectedGirth, Girth};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    ManyNonStar,
    FewNonStar,
    AllStar,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::ManyNonStar => "many-nonstar",
            Branch::FewNonStar => "few-nonstar",
            Branch::AllStar => "all-star",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Star/non-star split of a graph whose classes have exactly three edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassProfile {
    /// Star class colour to its centre.
    pub star_classes: BTreeMap<Colour, Vertex>,
    pub non_star_classes: BTreeSet<Colour>,
    pub star_vertices: BTreeSet<Vertex>,
    pub non_star_vertices: BTreeSet<Vertex>,
}

/// Common vertex of all edges, if there is one and there are at least two
/// edges.
fn star_centre(edges: &[Edge]) -> Option<Vertex> {
    let first = edges.first()?;
    if edges.len() < 2 {
        return None;
    }
    [first.u, first.v].into_iter().find(|&c| edges.iter().all(|e| e.touches(c)))
}

pub fn classify(g: &EdgeColouredGraph) -> ClassProfile {
    let mut profile = ClassProfile::default();
    for (c, class) in g.classes().enumerate() {
        let edges: Vec<Edge> = class.iter().map(|&id| *g.edge(id)).collect();
        match star_centre(&edges).filter(|_| edges.len() == 3) {
            Some(centre) => {
                profile.star_classes.insert(c, centre);
                profile.star_vertices.insert(centre);
            }
            None => {
                profile.non_star_classes.insert(c);
            }
        }
    }
    profile.non_star_vertices =
        (0..g.vertex_count()).filter(|v| !profile.star_vertices.contains(v)).collect();
    profile
}

/// The trimmed instance: `n` classes of exactly three edges.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub graph: EdgeColouredGraph,
    /// `origin[e]` is the id in the input graph of trimmed edge `e`.
    pub origin: Vec<EdgeId>,
    pub profile: ClassProfile,
}

/// Keeps colours `0..n` and, within each, the three edges with the smallest
/// `(min endpoint, max endpoint, id)`. Trimmed edges are listed by colour in
/// that order.
pub fn prepare(g: &EdgeColouredGraph) -> Result<Prepared> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::precondition("graph has no vertices"));
    }
    if g.colour_count() < n {
        return Err(Error::precondition(format!("{} colours for {n} vertices", g.colour_count())));
    }
    if let Some((c, class)) = g.classes().enumerate().find(|(_, class)| class.len() < 3) {
        return Err(Error::precondition(format!("colour {c} has only {} edges", class.len())));
    }
    let mut edges = Vec::with_capacity(3 * n);
    let mut origin = Vec::with_capacity(3 * n);
    for c in 0..n {
        let mut class = g.colour_class(c)?.to_vec();
        class.sort_by_key(|&id| (g.edge(id).key(), id));
        for &id in &class[..3] {
            edges.push(*g.edge(id));
            origin.push(id);
        }
    }
    let graph = EdgeColouredGraph::new(n, n, edges)?;
    let profile = classify(&graph);
    Ok(Prepared { graph, origin, profile })
}

/// True when every edge has an end in `{x, y}`.
pub fn dominates(class: &[Edge], x: Vertex, y: Vertex) -> bool {
    class.iter().all(|e| e.touches(x) || e.touches(y))
}

fn class_edges(g: &EdgeColouredGraph, c: Colour) -> Vec<Edge> {
    g.classes().nth(c).map(|ids| ids.iter().map(|&id| *g.edge(id)).collect()).unwrap_or_default()
}

/// Lexicographically least pair of non-star vertices that no colour class
/// dominates. Needs at least eight non-star vertices; then such a pair
/// exists because a non-star class dominates at most three pairs.
pub fn find_undominated_pair(g: &EdgeColouredGraph, profile: &ClassProfile) -> Result<(Vertex, Vertex)> {
    let nonstar: Vec<Vertex> = profile.non_star_vertices.iter().copied().collect();
    if nonstar.len() < 8 {
        return Err(Error::precondition(format!("{} non-star vertices, need at least 8", nonstar.len())));
    }
    let classes: Vec<Vec<Edge>> = (0..g.colour_count()).map(|c| class_edges(g, c)).collect();
    for (i, &x) in nonstar.iter().enumerate() {
        for &y in &nonstar[i + 1..] {
            if !classes.iter().any(|class| dominates(class, x, y)) {
                return Ok((x, y));
            }
        }
    }
    Err(Error::violation("undominated-pair", "every pair of non-star vertices is dominated", g))
}

/// One edge per colour.
#[derive(Debug, Clone)]
pub struct Transversal<'g> {
    pub subgraph: Subgraph<'g>,
    /// How many chosen edges had to come from `forbidden_edges`.
    pub overlap: usize,
}

/// For every colour, the least edge (by endpoints, then id) that avoids
/// `forbidden_vertices` and is not in `forbidden_edges`; when every
/// vertex-avoiding edge is forbidden, the least vertex-avoiding edge is taken
/// and counted in `overlap`.
pub fn transversal_avoiding<'g>(
    g: &'g EdgeColouredGraph,
    forbidden_vertices: &BTreeSet<Vertex>,
    forbidden_edges: &BTreeSet<EdgeId>,
) -> Result<Transversal<'g>> {
    let mut chosen = Vec::with_capacity(g.colour_count());
    let mut overlap = 0;
    for (c, class) in g.classes().enumerate() {
        let mut candidates: Vec<EdgeId> = class
            .iter()
            .copied()
            .filter(|&id| {
                let e = g.edge(id);
                !forbidden_vertices.contains(&e.u) && !forbidden_vertices.contains(&e.v)
            })
            .collect();
        candidates.sort_by_key(|&id| (g.edge(id).key(), id));
        let Some(&fallback) = candidates.first() else {
            return Err(Error::precondition(format!(
                "every edge of colour {c} meets {forbidden_vertices:?}"
            )));
        };
        match candidates.iter().find(|id| !forbidden_edges.contains(id)) {
            Some(&id) => chosen.push(id),
            None => {
                overlap += 1;
                chosen.push(fallback);
            }
        }
    }
    Ok(Transversal { subgraph: Subgraph::new(g, chosen)?, overlap })
}

/// What one branch built on the trimmed instance.
#[derive(Debug, Clone)]
pub struct BranchOutcome {
    pub branch: Branch,
    /// Rainbow cycle in trimmed edge ids.
    pub certificate: CycleCertificate,
    /// The undominated pair (many-nonstar) or the avoided vertex `z` twice
    /// (few-nonstar).
    pub avoided: Option<(Vertex, Vertex)>,
    /// Edge ids of the first vertex-minimal subgraph (`R` or `R1`).
    pub first: Vec<EdgeId>,
    /// Edge ids of the second subgraph (`R'` or `R2`).
    pub second: Vec<EdgeId>,
    /// Edges shared between the first subgraph and the second transversal.
    pub overlap: usize,
    /// Lengths of the two candidate cycles.
    pub candidates: (usize, usize),
}

fn as_rainbow(mut cert: CycleCertificate) -> CycleCertificate {
    cert.rainbow = true;
    cert
}

fn shorter(a: CycleCertificate, b: CycleCertificate) -> CycleCertificate {
    if b.len() < a.len() {
        b
    } else {
        a
    }
}

fn check_bound(
    g: &EdgeColouredGraph,
    statement: &'static str,
    holds: bool,
    detail: impl FnOnce() -> String,
) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(Error::violation(statement, detail(), g))
    }
}

/// At least eight non-star vertices: returns a rainbow cycle with
/// `5l <= 2n + 35`.
pub fn many_nonstar_branch(g: &EdgeColouredGraph, profile: &ClassProfile) -> Result<BranchOutcome> {
    let n = g.vertex_count();
    let (x, y) = find_undominated_pair(g, profile)?;
    let avoiding = transversal_avoiding(g, &BTreeSet::from([x, y]), &BTreeSet::new())?;
    let r = minimal_excess_subgraph(&avoiding.subgraph, 2)?;
    let in_r: BTreeSet<EdgeId> = r.edge_ids().iter().copied().collect();
    let disjoint = transversal_avoiding(g, &BTreeSet::new(), &in_r)?;
    check_bound(g, "disjoint-transversal", disjoint.overlap == 0, || {
        format!("transversal disjoint from R shares {} edges with it", disjoint.overlap)
    })?;
    let cycle_in_r = as_rainbow(short_cycle_excess2(&r)?);
    let Girth::Finite(cycle_in_second) = girth_exact(&disjoint.subgraph) else {
        return Err(Error::violation("disjoint-transversal", "a transversal with n edges has no cycle", g));
    };
    let cycle_in_second = as_rainbow(cycle_in_second);
    let candidates = (cycle_in_r.len(), cycle_in_second.len());
    let certificate = shorter(cycle_in_r, cycle_in_second);
    let l = certificate.len();
    check_bound(g, "many-nonstar-bound", 5 * l <= 2 * n + 35, || format!("length {l} exceeds 2n/5 + 7 for n = {n}"))?;
    Ok(BranchOutcome {
        branch: Branch::ManyNonStar,
        certificate,
        avoided: Some((x, y)),
        first: r.edge_ids().to_vec(),
        second: disjoint.subgraph.edge_ids().to_vec(),
        overlap: disjoint.overlap,
        candidates,
    })
}

/// At most seven non-star vertices: returns a rainbow cycle with
/// `9l <= 4n + 63` (and `l <= ceil(n/3)` when every vertex centres a star).
pub fn few_nonstar_branch(g: &EdgeColouredGraph, profile: &ClassProfile) -> Result<BranchOutcome> {
    let n = g.vertex_count();
    if profile.non_star_vertices.len() > 7 {
        return Err(Error::precondition(format!(
            "{} non-star vertices, at most 7 allowed",
            profile.non_star_vertices.len()
        )));
    }
    let outcome = match profile.non_star_vertices.first() {
        None => all_star(g, profile)?,
        Some(&z) => avoid_vertex(g, profile, z)?,
    };
    let l = outcome.certificate.len();
    check_bound(g, "few-nonstar-bound", 9 * l <= 4 * n + 63, || format!("length {l} exceeds 4n/9 + 7 for n = {n}"))?;
    Ok(outcome)
}

fn all_star(g: &EdgeColouredGraph, profile: &ClassProfile) -> Result<BranchOutcome> {
    let n = g.vertex_count();
    let centres: BTreeSet<Vertex> = profile.star_classes.values().copied().collect();
    if profile.star_classes.len() != n || centres.len() != n {
        return Err(Error::violation(
            "star-bijection",
            "no non-star vertex, yet star centres are not a bijection onto the vertices",
            g,
        ));
    }
    let mut arcs = Vec::with_capacity(3 * n);
    let mut edge_of_arc = HashMap::with_capacity(3 * n);
    for (&c, &centre) in &profile.star_classes {
        for &id in g.colour_class(c)? {
            let leaf = g.edge(id).other(centre);
            arcs.push((centre, leaf));
            edge_of_arc.insert((centre, leaf), id);
        }
    }
    let d = Digraph::new(n, arcs)?;
    let DirectedGirth::Finite(cycle) = directed_girth(&d) else {
        return Err(Error::violation("outdegree-3-cycle", "outdegree-3 digraph is acyclic", g));
    };
    let l = cycle.len();
    check_bound(g, "outdegree-3-cycle", l <= n.div_ceil(3), || {
        format!("shortest directed cycle {l} exceeds ceil(n/3) for n = {n}")
    })?;
    let edges = cycle.arcs().iter().map(|arc| edge_of_arc[arc]).collect();
    let certificate = CycleCertificate { vertices: cycle.vertices, edges, rainbow: true };
    Ok(BranchOutcome {
        branch: Branch::AllStar,
        certificate,
        avoided: None,
        first: Vec::new(),
        second: Vec::new(),
        overlap: 0,
        candidates: (l, l),
    })
}

fn avoid_vertex(g: &EdgeColouredGraph, profile: &ClassProfile, z: Vertex) -> Result<BranchOutcome> {
    let forbidden = BTreeSet::from([z]);
    let first_transversal = transversal_avoiding(g, &forbidden, &BTreeSet::new())?;
    let r1 = minimal_excess_subgraph(&first_transversal.subgraph, 1)?;
    let in_r1: BTreeSet<EdgeId> = r1.edge_ids().iter().copied().collect();
    let second_transversal = transversal_avoiding(g, &forbidden, &in_r1)?;
    let allowed = profile.non_star_classes.len();
    check_bound(g, "few-nonstar-overlap", second_transversal.overlap <= allowed, || {
        format!("second transversal shares {} edges with R1, above {allowed}", second_transversal.overlap)
    })?;
    let r2 = minimal_excess_subgraph(&second_transversal.subgraph, 1)?;
    let a = as_rainbow(short_cycle_excess1(&r1)?);
    let b = as_rainbow(short_cycle_excess1(&r2)?);
    let candidates = (a.len(), b.len());
    Ok(BranchOutcome {
        branch: Branch::FewNonStar,
        certificate: shorter(a, b),
        avoided: Some((z, z)),
        first: r1.edge_ids().to_vec(),
        second: r2.edge_ids().to_vec(),
        overlap: second_transversal.overlap,
        candidates,
    })
}

/// A verified rainbow cycle of the input graph.
#[derive(Debug, Clone)]
pub struct ShortRainbowCycle {
    /// Certificate in the input graph's edge ids.
    pub certificate: CycleCertificate,
    pub branch: Branch,
    pub prepared: Prepared,
    /// The branch result in trimmed edge ids.
    pub outcome: BranchOutcome,
}

pub fn find_short_rainbow_cycle(g: &EdgeColouredGraph) -> Result<ShortRainbowCycle> {
    let prepared = prepare(g)?;
    let trimmed = &prepared.graph;
    let outcome = if prepared.profile.non_star_vertices.len() >= 8 {
        many_nonstar_branch(trimmed, &prepared.profile)?
    } else {
        few_nonstar_branch(trimmed, &prepared.profile)?
    };
    let certificate = outcome.certificate.clone().map_edges(&prepared.origin);
    if let Err(v) = certificate.validate(g) {
        return Err(Error::violation("certificate", format!("{} certificate invalid: {v}", outcome.branch), g));
    }
    let (n, l) = (g.vertex_count(), certificate.len());
    check_bound(g, "short-rainbow-cycle", 9 * l <= 4 * n + 63, || format!("length {l} exceeds 4n/9 + 7 for n = {n}"))?;
    Ok(ShortRainbowCycle { certificate, branch: outcome.branch, outcome, prepared })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{circulant_digraph, from_digraph};
    use crate::oracle::rainbow_girth_exact;

    fn class(pairs: &[(usize, usize)]) -> Vec<Edge> {
        pairs.iter().map(|&(u, v)| Edge::new(u, v, 0)).collect()
    }

    /// Colour i is the triangle on {i, i+1, i+2} mod 9.
    fn nine_triangles() -> EdgeColouredGraph {
        let edges = (0..9)
            .flat_map(|i| {
                let (a, b, c) = (i, (i + 1) % 9, (i + 2) % 9);
                [Edge::new(a, b, i), Edge::new(b, c, i), Edge::new(a, c, i)]
            })
            .collect();
        EdgeColouredGraph::new(9, 9, edges).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(star_centre(&class(&[(1, 0), (2, 0), (3, 0)])), Some(0));
        assert_eq!(star_centre(&class(&[(0, 1), (1, 2), (0, 2)])), None);
        assert_eq!(star_centre(&class(&[(0, 1), (2, 3), (4, 5)])), None);
    }

    #[test]
    fn domination_examples() {
        let tri = class(&[(0, 1), (1, 2), (0, 2)]);
        assert!(dominates(&tri, 0, 2));
        assert!(!dominates(&class(&[(1, 2), (2, 3), (1, 3)]), 0, 3));
        let matching = class(&[(0, 1), (2, 3), (4, 5)]);
        for x in 0..6 {
            for y in x + 1..6 {
                assert!(!dominates(&matching, x, y));
            }
        }
    }

    #[test]
    fn undominated_pair_in_nine_triangles() {
        let g = nine_triangles();
        let profile = classify(&g);
        assert_eq!(profile.non_star_vertices.len(), 9);
        assert!(dominates(&class_edges(&g, 0), 0, 1));
        assert_eq!(find_undominated_pair(&g, &profile).unwrap(), (0, 3));
    }

    #[test]
    fn undominated_pair_needs_eight() {
        let d = circulant_digraph(9, &[1, 2, 3]).unwrap();
        let g = from_digraph(&d).graph;
        assert!(matches!(find_undominated_pair(&g, &classify(&g)), Err(Error::Precondition(_))));
    }

    #[test]
    fn transversal_examples() {
        // colour 0: triangle on 0,1,2; colour 1: star at 3 with leaves 0, 4, 5
        let g = EdgeColouredGraph::new(
            6,
            2,
            vec![
                Edge::new(0, 1, 0),
                Edge::new(1, 2, 0),
                Edge::new(0, 2, 0),
                Edge::new(3, 0, 1),
                Edge::new(3, 4, 1),
                Edge::new(3, 5, 1),
            ],
        )
        .unwrap();
        let t = transversal_avoiding(&g, &BTreeSet::from([0]), &BTreeSet::from([4])).unwrap();
        assert_eq!(t.subgraph.edge_ids(), &[1, 5]);
        assert_eq!(t.overlap, 0);

        let t = transversal_avoiding(&g, &BTreeSet::from([0]), &BTreeSet::from([1])).unwrap();
        assert_eq!(t.subgraph.edge_ids(), &[1, 4]);
        assert_eq!(t.overlap, 1);

        assert!(transversal_avoiding(&g, &BTreeSet::from([3]), &BTreeSet::new()).is_err());
    }

    #[test]
    fn nine_triangles_give_a_two_cycle() {
        let g = nine_triangles();
        assert_eq!(rainbow_girth_exact(&g, 9).unwrap().length(), Some(2));
        let found = find_short_rainbow_cycle(&g).unwrap();
        assert_eq!(found.branch, Branch::ManyNonStar);
        assert_eq!(found.certificate.len(), 2);
        assert!(found.certificate.validate(&g).is_ok());
        assert_eq!(found.outcome.overlap, 0);
    }

    #[test]
    fn circulant_goes_all_star() {
        let g = from_digraph(&circulant_digraph(9, &[1, 2, 3]).unwrap()).graph;
        let found = find_short_rainbow_cycle(&g).unwrap();
        assert_eq!(found.branch, Branch::AllStar);
        assert_eq!(found.certificate.vertices, vec![0, 3, 6]);
        assert_eq!(found.certificate.len(), 3);

        let g = from_digraph(&circulant_digraph(12, &[1, 2, 3]).unwrap()).graph;
        let found = find_short_rainbow_cycle(&g).unwrap();
        assert_eq!(found.branch, Branch::AllStar);
        assert!(found.certificate.len() <= 4);
    }

    #[test]
    fn one_triangle_class_goes_few_nonstar() {
        // circulant n = 12, colour 0 (centre 0) replaced by the triangle 4-5-6
        let base = from_digraph(&circulant_digraph(12, &[1, 2, 3]).unwrap()).graph;
        let mut edges: Vec<Edge> = base.edges().iter().copied().filter(|e| e.colour != 0).collect();
        edges.extend([Edge::new(4, 5, 0), Edge::new(5, 6, 0), Edge::new(4, 6, 0)]);
        let g = EdgeColouredGraph::new(12, 12, edges).unwrap();
        let found = find_short_rainbow_cycle(&g).unwrap();
        assert_eq!(found.branch, Branch::FewNonStar);
        assert_eq!(found.outcome.avoided, Some((0, 0)));
        assert!(found.outcome.overlap <= 1);
        assert!(9 * found.certificate.len() <= 4 * 12 + 63);
    }

    #[test]
    fn big_classes_are_trimmed() {
        let base = from_digraph(&circulant_digraph(9, &[1, 2, 3]).unwrap()).graph;
        let mut edges = base.edges().to_vec();
        edges.extend([Edge::new(0, 5, 0), Edge::new(0, 6, 0)]);
        let g = EdgeColouredGraph::new(9, 9, edges).unwrap();
        let found = find_short_rainbow_cycle(&g).unwrap();
        assert!(found.prepared.graph.classes().all(|c| c.len() == 3));
        assert!(found.certificate.validate(&g).is_ok());
    }

    #[test]
    fn preconditions() {
        let small = EdgeColouredGraph::new(
            3,
            3,
            vec![
                Edge::new(0, 1, 0),
                Edge::new(1, 2, 0),
                Edge::new(0, 2, 0),
                Edge::new(0, 1, 1),
                Edge::new(1, 2, 1),
                Edge::new(0, 1, 2),
            ],
        )
        .unwrap();
        assert!(matches!(find_short_rainbow_cycle(&small), Err(Error::Precondition(_))));
        let few_colours = EdgeColouredGraph::new(
            4,
            1,
            vec![Edge::new(0, 1, 0), Edge::new(1, 2, 0), Edge::new(2, 3, 0)],
        )
        .unwrap();
        assert!(matches!(find_short_rainbow_cycle(&few_colours), Err(Error::Precondition(_))));
    }

    #[test]
    fn three_triangles_on_three_vertices() {
        let edges = (0..3).flat_map(|c| [Edge::new(0, 1, c), Edge::new(1, 2, c), Edge::new(0, 2, c)]).collect();
        let g = EdgeColouredGraph::new(3, 3, edges).unwrap();
        let found = find_short_rainbow_cycle(&g).unwrap();
        assert_eq!(found.branch, Branch::FewNonStar);
        assert_eq!(found.certificate.len(), 2);
    }
}
