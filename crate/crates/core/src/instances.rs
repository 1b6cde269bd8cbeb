//! Instance constructors: the digraph reduction, the three-colour extremal
//! colouring of `K_n`, reciprocal-size sums, defect, and seeded random
//! generators.
//!
//! Every random generator draws from [`SplitMix64`] in the order documented on
//! the function, so a `(parameters, seed)` pair names one instance.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge, EdgeColouredGraph, Vertex};
use crate::rng::SplitMix64;

/// The edge-coloured graph of a digraph together with the vertex each colour
/// stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphReduction {
    pub graph: EdgeColouredGraph,
    /// `colour_vertex[c]` is the tail vertex whose out-arcs carry colour `c`.
    pub colour_vertex: Vec<Vertex>,
}

/// Arc `(u, v)` becomes edge `{u, v}` coloured by `u`. Vertices without
/// out-arcs get no colour; the rest are numbered densely in vertex order.
pub fn from_digraph(d: &Digraph) -> DigraphReduction {
    let degrees = d.out_degrees();
    let mut colour_of = vec![usize::MAX; d.vertex_count()];
    let mut colour_vertex = Vec::new();
    for (v, &deg) in degrees.iter().enumerate() {
        if deg > 0 {
            colour_of[v] = colour_vertex.len();
            colour_vertex.push(v);
        }
    }
    let edges = d.arcs().iter().map(|&(u, v)| Edge::new(u, v, colour_of[u])).collect();
    let graph = EdgeColouredGraph::new(d.vertex_count(), colour_vertex.len(), edges)
        .expect("a simple digraph reduces to a per-colour simple graph");
    DigraphReduction { graph, colour_vertex }
}

/// Arcs `u -> u + j (mod n)` for every vertex `u` and jump `j`, in that order.
pub fn circulant_digraph(n: usize, jumps: &[usize]) -> Result<Digraph> {
    let mut seen = HashSet::new();
    for &j in jumps {
        if n == 0 || j % n == 0 || !seen.insert(j % n) {
            return Err(Error::Infeasible(format!("jumps {jumps:?} are not distinct non-zero residues mod {n}")));
        }
    }
    let arcs = (0..n).flat_map(|u| jumps.iter().map(move |&j| (u, (u + j) % n))).collect();
    Ok(Digraph::new(n, arcs)?)
}

pub const RED: usize = 0;
pub const BLUE: usize = 1;
pub const GREEN: usize = 2;

/// Three-colouring of `K_n` without rainbow cycles and with class sizes
/// within one of each other.
///
/// Vertices split into `X = 0..a`, `Y = a..2a`, `Z = 2a..n` with
/// `a = ceil(2n/5)`. Edges inside a part are red, `X`-`Y` edges blue, and edges
/// between `Z` and `X ∪ Y` green. Then the lexicographically first edges
/// inside `X` turn blue and those inside `Y` turn green until the sizes are
/// balanced; when `C(n,2)` is not divisible by 3 the spare edges stay red
/// first, then blue. Edges are listed in lexicographic order of `(u, v)`,
/// `u < v`.
pub fn balanced_three_colouring(n: usize) -> Result<EdgeColouredGraph> {
    if n < 100 {
        return Err(Error::Infeasible(format!("the balanced three-colouring needs n >= 100, got {n}")));
    }
    let a = (2 * n).div_ceil(5);
    let part = |v: usize| if v < a { 0 } else if v < 2 * a { 1 } else { 2 };
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let colour = match (part(u), part(v)) {
                (p, q) if p == q => RED,
                (0, 1) => BLUE,
                _ => GREEN,
            };
            edges.push(Edge::new(u, v, colour));
        }
    }
    let total = edges.len();
    let (q, rem) = (total / 3, total % 3);
    let mut sizes = [0usize; 3];
    for e in &edges {
        sizes[e.colour] += 1;
    }
    let blue_target = q + usize::from(rem == 2);
    let green_target = q;
    let mut to_blue = blue_target.checked_sub(sizes[BLUE]).expect("blue starts below its target for n >= 100");
    let mut to_green = green_target.checked_sub(sizes[GREEN]).expect("green starts below its target for n >= 100");
    for e in &mut edges {
        match (part(e.u), part(e.v)) {
            (0, 0) if to_blue > 0 => {
                e.colour = BLUE;
                to_blue -= 1;
            }
            (1, 1) if to_green > 0 => {
                e.colour = GREEN;
                to_green -= 1;
            }
            _ => {}
        }
    }
    assert_eq!((to_blue, to_green), (0, 0), "parts too small to rebalance");
    Ok(EdgeColouredGraph::new(n, 3, edges)?)
}

/// `sum over colour classes A of 1/|A|`.
pub fn psi_graph(g: &EdgeColouredGraph) -> BigRational {
    g.classes().fold(BigRational::zero(), |acc, class| acc + BigRational::new(1.into(), BigInt::from(class.len())))
}

/// `sum over vertices v of 1/deg+(v)`; undefined when a sink exists.
pub fn psi_digraph(d: &Digraph) -> Result<BigRational> {
    let degrees = d.out_degrees();
    if let Some(v) = degrees.iter().position(|&k| k == 0) {
        return Err(Error::precondition(format!("vertex {v} is a sink")));
    }
    Ok(degrees
        .iter()
        .fold(BigRational::zero(), |acc, &k| acc + BigRational::new(1.into(), BigInt::from(k))))
}

/// `sum of (r - deg+(u))` over vertices of outdegree at most `r`.
pub fn defect(d: &Digraph, r: usize) -> usize {
    d.out_degrees().iter().filter(|&&k| k <= r).map(|&k| r - k).sum()
}

/// How the edges of one colour class are laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassShape {
    /// Distinct uniform vertex pairs.
    Uniform,
    /// Edges from one centre to distinct leaves.
    Star,
    /// The first edges of a clique on as few vertices as possible; a triangle
    /// when the class has three edges.
    Triangle,
    /// Pairwise disjoint edges.
    Matching,
}

impl ClassShape {
    pub fn name(self) -> &'static str {
        match self {
            ClassShape::Uniform => "uniform",
            ClassShape::Star => "star",
            ClassShape::Triangle => "triangle",
            ClassShape::Matching => "matching",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "uniform" => Some(ClassShape::Uniform),
            "star" => Some(ClassShape::Star),
            "triangle" => Some(ClassShape::Triangle),
            "matching" => Some(ClassShape::Matching),
            _ => None,
        }
    }

    fn fits(self, n: usize, size: usize) -> bool {
        match self {
            ClassShape::Uniform => size <= n * n.saturating_sub(1) / 2,
            ClassShape::Star => size < n,
            ClassShape::Triangle => clique_order(size) <= n,
            ClassShape::Matching => 2 * size <= n,
        }
    }
}

fn clique_order(size: usize) -> usize {
    (0usize..).find(|&k| k * k.saturating_sub(1) / 2 >= size).expect("some clique is large enough")
}

/// Weighted choice of class shapes, e.g. `star:3,uniform:1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeMix(Vec<(ClassShape, u32)>);

impl ShapeMix {
    pub fn new(parts: Vec<(ClassShape, u32)>) -> Result<Self> {
        if parts.is_empty() || parts.iter().all(|&(_, w)| w == 0) {
            return Err(Error::Infeasible("shape mix needs a positive weight".into()));
        }
        Ok(ShapeMix(parts))
    }

    pub fn only(shape: ClassShape) -> Self {
        ShapeMix(vec![(shape, 1)])
    }

    /// Parses `shape` or `shape:weight,shape:weight,...`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|part| {
                let (name, weight) = match part.split_once(':') {
                    Some((name, w)) => {
                        (name, w.parse().map_err(|_| Error::Infeasible(format!("bad shape weight `{w}`")))?)
                    }
                    None => (part, 1),
                };
                let shape = ClassShape::parse(name).ok_or_else(|| Error::Infeasible(format!("unknown shape `{name}`")))?;
                Ok((shape, weight))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    fn pick(&self, rng: &mut SplitMix64) -> ClassShape {
        if let [(shape, _)] = self.0.as_slice() {
            return *shape;
        }
        let total: u32 = self.0.iter().map(|&(_, w)| w).sum();
        let mut x = rng.below(total as usize) as u32;
        for &(shape, w) in &self.0 {
            if x < w {
                return shape;
            }
            x -= w;
        }
        unreachable!()
    }

    fn shapes(&self) -> impl Iterator<Item = ClassShape> + '_ {
        self.0.iter().filter(|&&(_, w)| w > 0).map(|&(s, _)| s)
    }
}

impl std::fmt::Display for ShapeMix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(s, w)| format!("{}:{w}", s.name())).collect();
        f.write_str(&parts.join(","))
    }
}

/// Draws distinct vertices, rejecting those already in `taken`.
fn draw_fresh(rng: &mut SplitMix64, n: usize, taken: &mut Vec<Vertex>) -> Vertex {
    loop {
        let x = rng.below(n);
        if !taken.contains(&x) {
            taken.push(x);
            return x;
        }
    }
}

fn sample_class(rng: &mut SplitMix64, n: usize, size: usize, shape: ClassShape) -> Vec<(Vertex, Vertex)> {
    match shape {
        ClassShape::Uniform => {
            let mut pairs: Vec<(Vertex, Vertex)> = Vec::with_capacity(size);
            while pairs.len() < size {
                let (u, v) = (rng.below(n), rng.below(n));
                if u != v && !pairs.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                    pairs.push((u, v));
                }
            }
            pairs
        }
        ClassShape::Star => {
            let mut taken = Vec::with_capacity(size + 1);
            let centre = draw_fresh(rng, n, &mut taken);
            (0..size).map(|_| (centre, draw_fresh(rng, n, &mut taken))).collect()
        }
        ClassShape::Triangle => {
            let k = clique_order(size);
            let mut taken = Vec::with_capacity(k);
            for _ in 0..k {
                draw_fresh(rng, n, &mut taken);
            }
            (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).take(size).map(|(i, j)| (taken[i], taken[j])).collect()
        }
        ClassShape::Matching => {
            let mut taken = Vec::with_capacity(2 * size);
            (0..size)
                .map(|_| {
                    let u = draw_fresh(rng, n, &mut taken);
                    (u, draw_fresh(rng, n, &mut taken))
                })
                .collect()
        }
    }
}

fn sample_instance(rng: &mut SplitMix64, n: usize, sizes: &[usize], mix: &ShapeMix) -> Result<EdgeColouredGraph> {
    for (c, &size) in sizes.iter().enumerate() {
        if size == 0 {
            return Err(Error::Infeasible(format!("colour {c} would be empty")));
        }
        if let Some(shape) = mix.shapes().find(|s| !s.fits(n, size)) {
            return Err(Error::Infeasible(format!(
                "a {} class of {size} edges does not fit on {n} vertices",
                shape.name()
            )));
        }
    }
    let mut edges = Vec::with_capacity(sizes.iter().sum());
    for (c, &size) in sizes.iter().enumerate() {
        let shape = mix.pick(rng);
        edges.extend(sample_class(rng, n, size, shape).into_iter().map(|(u, v)| Edge::new(u, v, c)));
    }
    Ok(EdgeColouredGraph::new(n, sizes.len(), edges)?)
}

/// `t` colour classes of `r` edges each on `n` vertices.
///
/// For each colour `c = 0..t` in turn: if the mix has more than one entry, a
/// shape is drawn with `below(total weight)`; then the class is drawn:
///
/// * uniform: pairs `(below(n), below(n))`, rejecting loops and pairs already
///   in the class;
/// * star: a centre, then `r` leaves, each by `below(n)` rejecting vertices
///   already used in the class;
/// * triangle: `k` distinct vertices `w0..w(k-1)` the same way, where `k` is
///   the least order with `C(k,2) >= r`, and edges `(wi, wj)`, `i < j`, in
///   lexicographic order of `(i, j)`, keeping the first `r`;
/// * matching: for each edge two fresh vertices, drawn the same way.
///
/// Edges are listed by colour, then in draw order.
pub fn random_instance(n: usize, t: usize, r: usize, seed: u64, mix: &ShapeMix) -> Result<EdgeColouredGraph> {
    random_instance_with_sizes(n, &vec![r; t], seed, mix)
}

pub fn random_instance_with_sizes(n: usize, sizes: &[usize], seed: u64, mix: &ShapeMix) -> Result<EdgeColouredGraph> {
    sample_instance(&mut SplitMix64::new(seed), n, sizes, mix)
}

/// `n` uniform colour classes whose sizes are `1 + below(2)`, all sizes drawn
/// first, then the classes as in [`random_instance`].
pub fn random_small_class_instance(n: usize, seed: u64) -> Result<EdgeColouredGraph> {
    let mut rng = SplitMix64::new(seed);
    let sizes: Vec<usize> = (0..n).map(|_| 1 + rng.below(2)).collect();
    sample_instance(&mut rng, n, &sizes, &ShapeMix::only(ClassShape::Uniform))
}

/// Every vertex gets exactly `outdeg` distinct out-neighbours.
pub fn random_digraph(n: usize, outdeg: usize, seed: u64) -> Result<Digraph> {
    random_digraph_between(n, outdeg, outdeg, seed)
}

/// For each vertex `u = 0..n`: its outdegree is `lo`, or `lo + below(hi - lo + 1)`
/// when `hi > lo`; then its heads are drawn with `below(n)`, rejecting `u` and
/// heads already chosen. Arcs are listed by tail, then in draw order.
pub fn random_digraph_between(n: usize, lo: usize, hi: usize, seed: u64) -> Result<Digraph> {
    if lo > hi || hi + 1 > n.max(1) {
        return Err(Error::Infeasible(format!("outdegrees {lo}..={hi} impossible on {n} vertices")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        let deg = if hi > lo { lo + rng.below(hi - lo + 1) } else { lo };
        let mut taken = vec![u];
        for _ in 0..deg {
            arcs.push((u, draw_fresh(&mut rng, n, &mut taken)));
        }
    }
    Ok(Digraph::new(n, arcs)?)
}

/// Parameters for [`random_excess_graph`].
#[derive(Debug, Clone, Copy)]
pub struct ExcessGraphSpec {
    /// Exact excess of the result.
    pub excess: usize,
    pub max_vertices: usize,
    /// Attach pendant trees (keeps the excess, breaks minimum degree 2).
    pub pendant_trees: bool,
    /// Forbid parallel edges.
    pub simple: bool,
}

/// A connected graph of exact excess `spec.excess`, every edge its own colour.
///
/// Draw order: kernel order `kv = 1 + below(max(2k, 1))`; a random tree on the
/// kernel (vertex `i` hangs from `below(i)`); `k + 1` extra kernel edges as
/// `(below(kv), below(kv))` pairs, loops and repeats allowed. Each kernel loop
/// is subdivided at least twice when the result must be simple and once
/// otherwise, and each repeated pair at least once when simple. The vertex
/// total is `lo + below(max_vertices - lo + 1)`; when `pendant_trees` is set
/// `below(spare + 1)` of the spare vertices become pendant vertices, each
/// hanging from `below(current order)`, and the other spare vertices
/// subdivide kernel edges chosen by `below(kernel edges)`. Finally the labels
/// are shuffled.
pub fn random_excess_graph(spec: ExcessGraphSpec, seed: u64) -> Result<EdgeColouredGraph> {
    let mut rng = SplitMix64::new(seed);
    let k = spec.excess;
    let kv = 1 + rng.below((2 * k).max(1));
    let mut kernel: Vec<(usize, usize)> = (1..kv).map(|i| (rng.below(i), i)).collect();
    for _ in 0..=k {
        kernel.push((rng.below(kv), rng.below(kv)));
    }
    let mut required = vec![0usize; kernel.len()];
    for (i, &(a, b)) in kernel.iter().enumerate() {
        let repeated = kernel[..i].iter().any(|&(c, d)| (c, d) == (a, b) || (c, d) == (b, a));
        required[i] = match (a == b, spec.simple) {
            (true, true) => 2,
            (true, false) => 1,
            (false, true) if repeated => 1,
            _ => 0,
        };
    }
    let lo = kv + required.iter().sum::<usize>();
    if lo > spec.max_vertices {
        return Err(Error::Infeasible(format!(
            "kernel needs {lo} vertices, above the limit {}",
            spec.max_vertices
        )));
    }
    let total = lo + rng.below(spec.max_vertices - lo + 1);
    let spare = total - lo;
    let pendant = if spec.pendant_trees { rng.below(spare + 1) } else { 0 };
    let mut subdivisions = required;
    for _ in 0..spare - pendant {
        let i = rng.below(kernel.len());
        subdivisions[i] += 1;
    }

    let mut next = kv;
    let mut pairs = Vec::with_capacity(total + k);
    for (&(a, b), &s) in kernel.iter().zip(&subdivisions) {
        let mut prev = a;
        for _ in 0..s {
            pairs.push((prev, next));
            prev = next;
            next += 1;
        }
        pairs.push((prev, b));
    }
    for _ in 0..pendant {
        let anchor = rng.below(next);
        pairs.push((anchor, next));
        next += 1;
    }
    debug_assert_eq!(next, total);
    let mut labels: Vec<usize> = (0..total).collect();
    rng.shuffle(&mut labels);
    let pairs: Vec<_> = pairs.into_iter().map(|(u, v)| (labels[u], labels[v])).collect();
    Ok(EdgeColouredGraph::rainbow_from_pairs(total, &pairs)?)
}
