//! Edge-coloured multigraphs, simple digraphs, edge-subset views and cycle
//! certificates.
//!
//! Vertices and colours are dense integer ranges `0..n` and `0..t`. Edges
//! are identified by their index in the input edge list; every derived object
//! (subgraphs, certificates) refers back to those indices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type Colour = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub colour: Colour,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex, colour: Colour) -> Self {
        Edge { u, v, colour }
    }

    /// Endpoints ordered `(min, max)`.
    pub fn key(&self) -> (Vertex, Vertex) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    pub fn joins(&self, a: Vertex, b: Vertex) -> bool {
        (self.u == a && self.v == b) || (self.u == b && self.v == a)
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { edge: usize, vertex: Vertex, n: usize },
    #[error("edge {edge}: colour {colour} out of range for t = {colours}")]
    ColourOutOfRange { edge: usize, colour: Colour, colours: usize },
    #[error("edge {edge}: loop at vertex {vertex}")]
    Loop { edge: usize, vertex: Vertex },
    #[error("edge {edge}: parallel to edge {earlier} within colour {colour}")]
    ParallelInColour { edge: usize, earlier: usize, colour: Colour },
    #[error("colour {colour} out of range for t = {colours}")]
    UnknownColour { colour: Colour, colours: usize },
    #[error("colour {colour} has no edges")]
    EmptyColourClass { colour: Colour },
    #[error("arc {arc}: loop at vertex {vertex}")]
    ArcLoop { arc: usize, vertex: Vertex },
    #[error("arc {arc}: vertex {vertex} out of range for n = {n}")]
    ArcOutOfRange { arc: usize, vertex: Vertex, n: usize },
    #[error("arc {arc}: duplicate of arc {earlier}")]
    DuplicateArc { arc: usize, earlier: usize },
    #[error("edge id {id} out of range ({len} edges)")]
    EdgeIdOutOfRange { id: EdgeId, len: usize },
}

/// An edge-coloured multigraph in which each colour class is simple.
///
/// Parallel edges of different colours are allowed (they form rainbow
/// 2-cycles); loops and same-colour parallels are rejected, as are colour ids
/// without any edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouredGraph {
    n: usize,
    colours: usize,
    edges: Vec<Edge>,
    classes: Vec<Vec<EdgeId>>,
}

impl EdgeColouredGraph {
    pub fn new(n: usize, colours: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut classes: Vec<Vec<EdgeId>> = vec![Vec::new(); colours];
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { edge: i, vertex: x, n });
                }
            }
            if e.u == e.v {
                return Err(GraphError::Loop { edge: i, vertex: e.u });
            }
            if e.colour >= colours {
                return Err(GraphError::ColourOutOfRange { edge: i, colour: e.colour, colours });
            }
            if let Some(&earlier) = seen.get(&(e.key(), e.colour)) {
                return Err(GraphError::ParallelInColour { edge: i, earlier, colour: e.colour });
            }
            seen.insert((e.key(), e.colour), i);
            classes[e.colour].push(i);
        }
        if let Some(colour) = classes.iter().position(Vec::is_empty) {
            return Err(GraphError::EmptyColourClass { colour });
        }
        Ok(EdgeColouredGraph { n, colours, edges, classes })
    }

    /// Builds a graph in which every edge gets its own colour, for callers that
    /// only care about the uncoloured structure.
    pub fn rainbow_from_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let edges = pairs.iter().enumerate().map(|(c, &(u, v))| Edge::new(u, v, c)).collect();
        Self::new(n, pairs.len(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn colour_count(&self) -> usize {
        self.colours
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    /// Edge ids of colour `c`, in input order.
    pub fn colour_class(&self, c: Colour) -> Result<&[EdgeId], GraphError> {
        self.classes
            .get(c)
            .map(Vec::as_slice)
            .ok_or(GraphError::UnknownColour { colour: c, colours: self.colours })
    }

    pub fn classes(&self) -> impl Iterator<Item = &[EdgeId]> + '_ {
        self.classes.iter().map(Vec::as_slice)
    }

    pub fn min_class_size(&self) -> usize {
        self.classes.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn full(&self) -> Subgraph<'_> {
        Subgraph { graph: self, edges: (0..self.edges.len()).collect() }
    }

    /// Incidence lists sorted by `(neighbour, edge id)`.
    pub fn adjacency(&self) -> Vec<Vec<(Vertex, EdgeId)>> {
        adjacency_of(self, 0..self.edges.len())
    }
}

pub(crate) fn adjacency_of(
    graph: &EdgeColouredGraph,
    ids: impl IntoIterator<Item = EdgeId>,
) -> Vec<Vec<(Vertex, EdgeId)>> {
    let mut adj = vec![Vec::new(); graph.n];
    for id in ids {
        let e = graph.edges[id];
        adj[e.u].push((e.v, id));
        adj[e.v].push((e.u, id));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// A simple digraph: no loops, at most one arc per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashMap::with_capacity(arcs.len());
        for (i, &(u, v)) in arcs.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::ArcOutOfRange { arc: i, vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::ArcLoop { arc: i, vertex: u });
            }
            if let Some(&earlier) = seen.get(&(u, v)) {
                return Err(GraphError::DuplicateArc { arc: i, earlier });
            }
            seen.insert((u, v), i);
        }
        Ok(Digraph { n, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, _) in &self.arcs {
            deg[u] += 1;
        }
        deg
    }

    /// Out-neighbour lists, each sorted ascending.
    pub fn out_neighbours(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            out[u].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
        }
        out
    }

    pub fn has_sink(&self) -> bool {
        self.out_degrees().contains(&0)
    }
}

/// A set of edges of an ambient graph. The vertex set, degrees and excess
/// are always derived from the edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph<'g> {
    graph: &'g EdgeColouredGraph,
    edges: Vec<EdgeId>,
}

impl<'g> Subgraph<'g> {
    pub fn new(
        graph: &'g EdgeColouredGraph,
        ids: impl IntoIterator<Item = EdgeId>,
    ) -> Result<Self, GraphError> {
        let set: BTreeSet<EdgeId> = ids.into_iter().collect();
        if let Some(&id) = set.iter().next_back().filter(|&&id| id >= graph.edge_count()) {
            return Err(GraphError::EdgeIdOutOfRange { id, len: graph.edge_count() });
        }
        Ok(Subgraph { graph, edges: set.into_iter().collect() })
    }

    pub fn graph(&self) -> &'g EdgeColouredGraph {
        self.graph
    }

    /// Selected edge ids, ascending.
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.edges.binary_search(&id).is_ok()
    }

    /// Degree of every ambient vertex inside this subgraph.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.graph.vertex_count()];
        for &id in &self.edges {
            let e = self.graph.edge(id);
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// Endpoints of the selected edges, ascending.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.degrees().iter().filter(|&&d| d > 0).count()
    }

    /// `|E| - |V|`; negative for forests with several edges per component
    /// missing.
    pub fn excess(&self) -> i64 {
        self.edges.len() as i64 - self.vertex_count() as i64
    }

    /// Minimum degree over `V(S)`, or `None` for the empty subgraph.
    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().filter(|&d| d > 0).min()
    }

    pub fn colours(&self) -> BTreeSet<Colour> {
        self.edges.iter().map(|&id| self.graph.edge(id).colour).collect()
    }

    pub fn is_rainbow(&self) -> bool {
        self.colours().len() == self.edges.len()
    }

    /// Drops `v` together with its incident edges.
    pub fn without_vertex(&self, v: Vertex) -> Subgraph<'g> {
        let edges = self.edges.iter().copied().filter(|&id| !self.graph.edge(id).touches(v)).collect();
        Subgraph { graph: self.graph, edges }
    }

    /// Largest subgraph of minimum degree at least 2, obtained by repeatedly
    /// deleting vertices of degree at most 1.
    pub fn two_core(&self) -> Subgraph<'g> {
        let n = self.graph.vertex_count();
        let mut deg = vec![0usize; n];
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (slot, &id) in self.edges.iter().enumerate() {
            let e = self.graph.edge(id);
            deg[e.u] += 1;
            deg[e.v] += 1;
            incident[e.u].push(slot);
            incident[e.v].push(slot);
        }
        let mut alive = vec![true; self.edges.len()];
        let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = queue.pop_front() {
            if deg[v] != 1 {
                continue;
            }
            let slot = incident[v].iter().copied().find(|&s| alive[s]).expect("degree-1 vertex has a live edge");
            alive[slot] = false;
            let w = self.graph.edge(self.edges[slot]).other(v);
            deg[v] = 0;
            deg[w] -= 1;
            if deg[w] == 1 {
                queue.push_back(w);
            }
        }
        let edges = self.edges.iter().zip(&alive).filter(|(_, &a)| a).map(|(&id, _)| id).collect();
        Subgraph { graph: self.graph, edges }
    }

    /// Union of the edge sets; both must live in the same ambient graph.
    pub fn union(&self, other: &Subgraph<'g>) -> Subgraph<'g> {
        debug_assert!(std::ptr::eq(self.graph, other.graph));
        let set: BTreeSet<EdgeId> = self.edges.iter().chain(&other.edges).copied().collect();
        Subgraph { graph: self.graph, edges: set.into_iter().collect() }
    }

    pub fn is_subgraph_of(&self, other: &Subgraph<'_>) -> bool {
        self.edges.iter().all(|&id| other.contains(id))
    }
}

pub fn excess(s: &Subgraph<'_>) -> i64 {
    s.excess()
}

pub fn two_core<'g>(s: &Subgraph<'g>) -> Subgraph<'g> {
    s.two_core()
}

/// An explicitly listed cycle: edge `i` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleCertificate {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub rainbow: bool,
}

impl CycleCertificate {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn colours(&self, graph: &EdgeColouredGraph) -> Vec<Colour> {
        self.edges.iter().map(|&id| graph.edge(id).colour).collect()
    }

    /// Rewrites edge ids through `map` (e.g. from a trimmed instance back to
    /// the original one).
    pub fn map_edges(mut self, map: &[EdgeId]) -> Self {
        for id in &mut self.edges {
            *id = map[*id];
        }
        self
    }

    pub fn validate(&self, graph: &EdgeColouredGraph) -> Result<(), CertificateViolation> {
        validate_certificate(graph, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateViolation {
    #[error("cycle of length {0} is too short (need at least 2)")]
    TooShort(usize),
    #[error("{vertices} vertices but {edges} edges")]
    LengthMismatch { vertices: usize, edges: usize },
    #[error("vertex {vertex} at index {index} out of range")]
    VertexOutOfRange { index: usize, vertex: Vertex },
    #[error("vertex {vertex} repeated at index {index}")]
    RepeatedVertex { index: usize, vertex: Vertex },
    #[error("edge id {id} at index {index} out of range")]
    EdgeOutOfRange { index: usize, id: EdgeId },
    #[error("edge {id} at index {index} does not join {a} and {b}")]
    EdgeMismatch { index: usize, id: EdgeId, a: Vertex, b: Vertex },
    #[error("edge {id} repeated at index {index}")]
    RepeatedEdge { index: usize, id: EdgeId },
    #[error("colour {colour} repeated at index {index}")]
    RepeatedColour { index: usize, colour: Colour },
}

pub fn validate_certificate(
    graph: &EdgeColouredGraph,
    cert: &CycleCertificate,
) -> Result<(), CertificateViolation> {
    let len = cert.vertices.len();
    if cert.edges.len() != len {
        return Err(CertificateViolation::LengthMismatch { vertices: len, edges: cert.edges.len() });
    }
    if len < 2 {
        return Err(CertificateViolation::TooShort(len));
    }
    let mut seen = BTreeSet::new();
    for (index, &vertex) in cert.vertices.iter().enumerate() {
        if vertex >= graph.vertex_count() {
            return Err(CertificateViolation::VertexOutOfRange { index, vertex });
        }
        if !seen.insert(vertex) {
            return Err(CertificateViolation::RepeatedVertex { index, vertex });
        }
    }
    let mut seen_edges = BTreeSet::new();
    let mut seen_colours = BTreeSet::new();
    for (index, &id) in cert.edges.iter().enumerate() {
        if id >= graph.edge_count() {
            return Err(CertificateViolation::EdgeOutOfRange { index, id });
        }
        if !seen_edges.insert(id) {
            return Err(CertificateViolation::RepeatedEdge { index, id });
        }
        let (a, b) = (cert.vertices[index], cert.vertices[(index + 1) % len]);
        let e = graph.edge(id);
        if !e.joins(a, b) {
            return Err(CertificateViolation::EdgeMismatch { index, id, a, b });
        }
        if cert.rainbow && !seen_colours.insert(e.colour) {
            return Err(CertificateViolation::RepeatedColour { index, colour: e.colour });
        }
    }
    Ok(())
}

impl fmt::Display for CycleCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        write!(f, "{} (length {})", path.join("-"), self.len())
    }
}
