//! Randomized hunts and property suites.
//!
//! Trial `i` of a run seeded with `S` uses seed `S ^ i` and nothing else, and
//! results are kept in trial order, so reports do not depend on how trials
//! are scheduled. Trials run on the current rayon pool.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::excess::{chord_bound, chord_census, minimal_excess_subgraph};
use crate::format::{write_dgr, write_ecg};
use crate::graph::{Digraph, Edge, EdgeColouredGraph, Subgraph};
use crate::instances::{
    defect, psi_digraph, psi_graph, random_digraph_between, random_excess_graph, random_instance,
    random_instance_with_sizes, random_small_class_instance, ClassShape, ExcessGraphSpec, ShapeMix,
};
use crate::oracle::{default_cap, directed_girth, girth_exact, max_stable_set, rainbow_girth_exact, RainbowGirth};
use crate::rng::SplitMix64;

/// What a hunt checks each sample against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// `rg <= ceil(n/r)` with at least `n` colours. Open conjecture: a
    /// violation is a finding.
    NOverR,
    /// `rg <= ceil(n/2)` with at least `n` colours of size at least 2.
    TwoEdgeClasses,
    /// `rg <= ceil(psi)` for `n` colours of one or two edges.
    Psi,
    /// Shortest directed cycle `g` of a sink-free digraph: `g <= 2 psi(D)`, and
    /// `n >= r'(g - 1) + 1 - def_r'(D)` for every `r' <= r + 1` with
    /// `g >= 2r' - 1`.
    DigraphGirth,
}

impl Check {
    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Check::NOverR => "aharoni",
            Check::TwoEdgeClasses => "r2",
            Check::Psi => "psi",
            Check::DigraphGirth => "thm41",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Check::NOverR, Check::TwoEdgeClasses, Check::Psi, Check::DigraphGirth].into_iter().find(|c| c.name() == s)
    }

    /// Whether a violation means a bug rather than a discovery.
    pub fn is_proved(self) -> bool {
        self != Check::NOverR
    }
}

#[derive(Debug, Clone)]
pub struct HuntConfig {
    pub n: usize,
    pub t: usize,
    pub r: usize,
    pub trials: usize,
    pub seed: u64,
    pub shape: ShapeMix,
    pub check: Option<Check>,
}

/// A girth value as far as the search went.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Observed {
    Exact(usize),
    /// No cycle up to this length.
    Above(usize),
}

impl fmt::Display for Observed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Observed::Exact(l) => write!(f, "{l}"),
            Observed::Above(cap) => write!(f, ">{cap}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Finding,
    Fault,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trial {
    pub index: usize,
    pub seed: u64,
    pub cap: usize,
    pub observed: Observed,
    pub verdict: Verdict,
    pub detail: String,
}

/// The sampled instance, in its file format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(EdgeColouredGraph),
    Digraph(Digraph),
}

impl Instance {
    pub fn to_text(&self) -> String {
        match self {
            Instance::Graph(g) => write_ecg(g),
            Instance::Digraph(d) => write_dgr(d),
        }
    }
}

fn ceil_ratio(q: &BigRational) -> usize {
    q.ceil().to_integer().to_usize().expect("small ceiling")
}

impl HuntConfig {
    fn validate(&self) -> Result<()> {
        let infeasible = |msg: String| Err(Error::Infeasible(msg));
        match self.check {
            Some(Check::NOverR) if self.t < self.n => infeasible(format!("aharoni needs t >= n, got t = {}", self.t)),
            Some(Check::TwoEdgeClasses) if self.t < self.n || self.r < 2 => {
                infeasible(format!("r2 needs t >= n and r >= 2, got t = {}, r = {}", self.t, self.r))
            }
            Some(Check::Psi) if self.n < 3 => infeasible("psi needs n >= 3".into()),
            Some(Check::DigraphGirth) if self.r == 0 || self.r >= self.n => {
                infeasible(format!("thm41 needs 1 <= r < n, got r = {}", self.r))
            }
            None | Some(Check::NOverR) | Some(Check::TwoEdgeClasses) if self.r == 0 || self.t == 0 => {
                infeasible("r and t must be positive".into())
            }
            _ => Ok(()),
        }
    }

    /// The instance of the trial with this seed.
    pub fn instance(&self, seed: u64) -> Result<Instance> {
        Ok(match self.check {
            Some(Check::Psi) => Instance::Graph(random_small_class_instance(self.n, seed)?),
            Some(Check::DigraphGirth) => Instance::Digraph(random_digraph_between(self.n, 1, self.r, seed)?),
            _ => Instance::Graph(random_instance(self.n, self.t, self.r, seed, &self.shape)?),
        })
    }

    fn run_trial(&self, index: usize) -> Result<Trial> {
        let seed = self.seed ^ index as u64;
        let instance = self.instance(seed)?;
        let mut trial = Trial { index, seed, cap: 0, observed: Observed::Above(0), verdict: Verdict::Ok, detail: String::new() };
        match (&instance, self.check) {
            (Instance::Digraph(d), _) => {
                let Some(g) = directed_girth(d).length() else {
                    trial.verdict = Verdict::Fault;
                    trial.detail = "sink-free digraph without a cycle".into();
                    return Ok(trial);
                };
                trial.cap = self.n;
                trial.observed = Observed::Exact(g);
                let failures = digraph_failures(d, g, self.r + 1)?;
                if !failures.is_empty() {
                    trial.verdict = Verdict::Fault;
                    trial.detail = failures.join("; ");
                }
            }
            (Instance::Graph(g), check) => {
                let bound = match check {
                    Some(Check::NOverR) => Some(self.n.div_ceil(self.r)),
                    Some(Check::TwoEdgeClasses) => Some(self.n.div_ceil(2)),
                    Some(Check::Psi) => Some(ceil_ratio(&psi_graph(g))),
                    _ => None,
                };
                trial.cap = bound.map_or_else(|| default_cap(g), |b| b + 1);
                trial.observed = match rainbow_girth_exact(g, trial.cap)? {
                    RainbowGirth::Finite(c) => Observed::Exact(c.len()),
                    RainbowGirth::NoneWithin(cap) => Observed::Above(cap),
                };
                if let (Some(bound), Some(check)) = (bound, check) {
                    if trial.observed > Observed::Exact(bound) {
                        trial.verdict = if check.is_proved() { Verdict::Fault } else { Verdict::Finding };
                        trial.detail = format!("rainbow girth {} above {bound}", trial.observed);
                    }
                }
            }
        }
        Ok(trial)
    }
}

/// Failed digraph inequalities for shortest cycle length `g`, checking the
/// defect inequality for `r' = 1..=max_r`.
fn digraph_failures(d: &Digraph, g: usize, max_r: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let psi = psi_digraph(d)?;
    if BigRational::from_integer(BigInt::from(g)) > psi.clone() * BigInt::from(2) {
        failures.push(format!("girth {g} above 2 psi = {}", psi * BigInt::from(2)));
    }
    let n = d.vertex_count();
    for r in 1..=max_r {
        if g + 1 >= 2 * r && n + defect(d, r) < r * (g - 1) + 1 {
            failures.push(format!("n = {n} below {r}(g - 1) + 1 - def = {}", (r * (g - 1) + 1) as i64 - defect(d, r) as i64));
        }
    }
    Ok(failures)
}

#[derive(Debug, Clone)]
pub struct HuntReport {
    pub config: HuntConfig,
    pub trials: Vec<Trial>,
}

pub fn hunt(config: &HuntConfig) -> Result<HuntReport> {
    config.validate()?;
    let trials = (0..config.trials).into_par_iter().map(|i| config.run_trial(i)).collect::<Result<Vec<_>>>()?;
    Ok(HuntReport { config: config.clone(), trials })
}

impl HuntReport {
    /// First trial attaining the largest observed value.
    pub fn max_trial(&self) -> Option<&Trial> {
        self.trials.iter().rev().max_by_key(|t| t.observed)
    }

    pub fn histogram(&self) -> BTreeMap<Observed, usize> {
        let mut h = BTreeMap::new();
        for t in &self.trials {
            *h.entry(t.observed).or_insert(0) += 1;
        }
        h
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.trials.iter().filter(|t| t.verdict == verdict).count()
    }

    /// The instance of [`HuntReport::max_trial`], in its file format.
    pub fn witness(&self) -> Result<Option<String>> {
        self.max_trial().map(|t| self.config.instance(t.seed).map(|i| i.to_text())).transpose()
    }

    pub fn render(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let check = c.check.map_or("none", Check::name);
        writeln!(out, "hunt check={check} n={} t={} r={} trials={} seed={} shape={}", c.n, c.t, c.r, c.trials, c.seed, c.shape)
            .unwrap();
        if let Some(t) = self.max_trial() {
            writeln!(out, "max {} trial {} seed {} cap {}", t.observed, t.index, t.seed, t.cap).unwrap();
        }
        for (value, count) in self.histogram() {
            writeln!(out, "histogram {value} {count}").unwrap();
        }
        for t in self.trials.iter().filter(|t| t.verdict != Verdict::Ok) {
            let tag = if t.verdict == Verdict::Finding { "FINDING" } else { "FAULT" };
            writeln!(out, "{tag} trial {} seed {}: {}", t.index, t.seed, t.detail).unwrap();
        }
        writeln!(out, "findings {}", self.count(Verdict::Finding)).unwrap();
        writeln!(out, "faults {}", self.count(Verdict::Fault)).unwrap();
        out
    }
}

/// One property suite's outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteRow {
    pub name: &'static str,
    pub trials: usize,
    /// Trials where the property was actually tested.
    pub checked: usize,
    pub failures: usize,
    /// Smallest `bound - value` over checked trials.
    pub worst_margin: Option<BigRational>,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub seed: u64,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.failures == 0)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "report suite=lemmas seed={}", self.seed).unwrap();
        writeln!(out, "{:<28} {:>7} {:>7} {:>8} {:>7}  status", "property", "trials", "checked", "failures", "margin").unwrap();
        for r in &self.rows {
            let margin = r.worst_margin.as_ref().map_or_else(|| "-".to_string(), |m| m.to_string());
            let status = if r.failures == 0 { "pass" } else { "FAIL" };
            writeln!(out, "{:<28} {:>7} {:>7} {:>8} {:>7}  {status}", r.name, r.trials, r.checked, r.failures, margin).unwrap();
            if let Some(detail) = &r.first_failure {
                writeln!(out, "  first failure: {detail}").unwrap();
            }
        }
        out
    }
}

/// Outcome of one property trial: `None` when the property did not apply.
type Sample = Option<(BigRational, Option<String>)>;

fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// `margin >= 0` passes.
fn sample(margin: BigRational, detail: impl FnOnce() -> String) -> Sample {
    let failure = (margin < BigRational::zero()).then(detail);
    Some((margin, failure))
}

fn run_suite(name: &'static str, seed: u64, trials: usize, f: impl Fn(u64) -> Result<Sample> + Sync) -> Result<SuiteRow> {
    let base = SplitMix64::new(seed).next_u64();
    let samples = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = base ^ i as u64;
            match f(s) {
                Err(Error::TheoremViolation(v)) => Ok(Some((int(-1), Some(format!("seed {s}: {v}"))))),
                other => other.map(|x| x.map(|(m, d)| (m, d.map(|d| format!("seed {s}: {d}"))))),
            }
        })
        .collect::<Result<Vec<Sample>>>()?;
    let mut row = SuiteRow { name, trials, checked: 0, failures: 0, worst_margin: None, first_failure: None };
    for (margin, failure) in samples.into_iter().flatten() {
        row.checked += 1;
        if failure.is_some() {
            row.failures += 1;
            row.first_failure = row.first_failure.or(failure);
        }
        if row.worst_margin.as_ref().is_none_or(|w| margin < *w) {
            row.worst_margin = Some(margin);
        }
    }
    Ok(row)
}

/// Trial `i` of every suite uses `s = B ^ i`, where `B` is the first output of
/// `SplitMix64::new(S)`: a small seed change then moves every trial. Each
/// suite draws its parameters from `SplitMix64::new(s)` in the documented
/// order, then takes the instance seed from the next `next_u64()`.
pub fn lemma_report(seed: u64, trials: usize) -> Result<SuiteReport> {
    let rows = vec![
        run_suite("excess-1 girth", seed, trials, |s| short_cycle_sample(s, 1))?,
        run_suite("excess-2 girth", seed, trials, |s| short_cycle_sample(s, 2))?,
        run_suite("stable set", seed, trials, stable_set_sample)?,
        run_suite("chords of minimal subgraph", seed, trials, chord_sample)?,
        run_suite("minimal subgraph", seed, trials, minimality_sample)?,
        run_suite("digraph girth vs 2 psi", seed, trials, |s| digraph_sample(s, false))?,
        run_suite("digraph defect", seed, trials, |s| digraph_sample(s, true))?,
        run_suite("rainbow girth vs psi", seed, trials, psi_sample)?,
    ];
    Ok(SuiteReport { seed, rows })
}

/// `pendant = below(2)`, `simple = below(2)`; up to 60 vertices. Checks
/// `3g <= 2n + 3` (k = 1) or `2g <= n + 2` (k = 2).
fn short_cycle_sample(seed: u64, k: usize) -> Result<Sample> {
    let mut rng = SplitMix64::new(seed);
    let pendant_trees = rng.below(2) == 1;
    let simple = rng.below(2) == 1;
    let spec = ExcessGraphSpec { excess: k, max_vertices: 60, pendant_trees, simple };
    let g = random_excess_graph(spec, rng.next_u64())?;
    let h = g.full();
    let n = h.vertex_count() as i64;
    let l = girth_exact(&h).length().ok_or_else(|| Error::violation("excess-girth", "no cycle", &g))? as i64;
    let margin = if k == 1 { 2 * n + 3 - 3 * l } else { n + 2 - 2 * l };
    Ok(sample(int(margin), || format!("n = {n}, girth {l}")))
}

/// `k = below(5)`; a simple graph of excess `k` on at most 24 vertices,
/// reduced to its 2-core. Checks `2 alpha <= n + k`.
fn stable_set_sample(seed: u64) -> Result<Sample> {
    let mut rng = SplitMix64::new(seed);
    let k = rng.below(5);
    let spec = ExcessGraphSpec { excess: k, max_vertices: 24, pendant_trees: false, simple: true };
    let g = random_excess_graph(spec, rng.next_u64())?;
    let core = g.full().two_core();
    let n = core.vertex_count() as i64;
    let alpha = max_stable_set(&core)?.size as i64;
    Ok(sample(int(n + core.excess() - 2 * alpha), || format!("n = {n}, k = {}, stable {alpha}", core.excess())))
}

/// For every vertex mask `W` of `h` (at most 20 vertices), the largest
/// excess of a rainbow subgraph with vertices inside `W`:
/// `max over W' ⊆ W of colours(h[W']) - |W'|`.
fn best_rainbow_excess(h: &EdgeColouredGraph) -> Vec<i64> {
    let n = h.vertex_count();
    assert!(n <= 20, "subset table over {n} vertices");
    let class_masks: Vec<Vec<u32>> =
        h.classes().map(|class| class.iter().map(|&id| 1 << h.edge(id).u | 1 << h.edge(id).v).collect()).collect();
    let mut best = vec![0i64; 1 << n];
    for w in 0u32..1 << n {
        let colours = class_masks.iter().filter(|ms| ms.iter().any(|&m| m & !w == 0)).count() as i64;
        let mut b = colours - w.count_ones() as i64;
        for v in 0..n {
            if w >> v & 1 == 1 {
                b = b.max(best[(w & !(1 << v)) as usize]);
            }
        }
        best[w as usize] = b;
    }
    best
}

/// A rainbow subgraph of excess at least `k` whose vertex set is minimal
/// among all such subgraphs of `h`, or `None` if there is none.
///
/// Draws: a shuffle of the vertices, the removal order; then, with `W` the
/// minimal vertex set, for each colour with an edge inside `W` the edge
/// `below(count)` among them; then for each chosen edge in turn, `below(2)`
/// decides whether to try dropping it (kept when dropping would lower the
/// excess below `k` or uncover a vertex).
fn rainbow_minimal_subgraph<'g>(h: &'g EdgeColouredGraph, k: i64, rng: &mut SplitMix64) -> Result<Option<Subgraph<'g>>> {
    let n = h.vertex_count();
    let best = best_rainbow_excess(h);
    let mut w: u32 = ((1u64 << n) - 1) as u32;
    if best[w as usize] < k {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    while let Some(&v) = order.iter().find(|&&v| w >> v & 1 == 1 && best[(w & !(1 << v)) as usize] >= k) {
        w &= !(1 << v);
    }
    let inside = |id: usize| {
        let e = h.edge(id);
        w >> e.u & 1 == 1 && w >> e.v & 1 == 1
    };
    let mut picks = Vec::new();
    for class in h.classes() {
        let candidates: Vec<usize> = class.iter().copied().filter(|&id| inside(id)).collect();
        if !candidates.is_empty() {
            picks.push(candidates[rng.below(candidates.len())]);
        }
    }
    let mut degree = vec![0usize; n];
    for &id in &picks {
        degree[h.edge(id).u] += 1;
        degree[h.edge(id).v] += 1;
    }
    let mut kept = Vec::with_capacity(picks.len());
    let mut edges = picks.len() as i64;
    let vertices = w.count_ones() as i64;
    for id in picks {
        let e = h.edge(id);
        if rng.below(2) == 1 && edges - 1 - vertices >= k && degree[e.u] > 1 && degree[e.v] > 1 {
            degree[e.u] -= 1;
            degree[e.v] -= 1;
            edges -= 1;
        } else {
            kept.push(id);
        }
    }
    Ok(Some(Subgraph::new(h, kept)?))
}

/// Ambient graph: `n = 4 + below(9)`, `r = 1 + below(4)`, `k = 1 + below(3)`,
/// `t = n + k + below(3)` colours of sizes `1 + below(r)` each; then
/// `below(2)` picks either the uniform instance (seeded by `next_u64()`), or
/// a graph without parallel edges: the pairs of `K_n` in lexicographic order,
/// shuffled, handed out to the colours in turn. `R` comes from
/// [`rainbow_minimal_subgraph`]. Passes when `H[V(R)]` has two parallel edges
/// or the chords number at most `chord_bound(excess(R), r)` with `r` the
/// largest class of `H`.
///
/// `R` must be vertex-minimal among all rainbow subgraphs of `H`: minimality
/// inside one transversal is not enough (see the tests).
fn chord_sample(seed: u64) -> Result<Sample> {
    let mut rng = SplitMix64::new(seed);
    let n = 4 + rng.below(9);
    let r = 1 + rng.below(4);
    let k = 1 + rng.below(3);
    let t = n + k + rng.below(3);
    let sizes: Vec<usize> = (0..t).map(|_| 1 + rng.below(r)).collect();
    let h = if rng.below(2) == 0 {
        match random_instance_with_sizes(n, &sizes, rng.next_u64(), &ShapeMix::only(ClassShape::Uniform)) {
            Ok(h) => h,
            Err(_) => return Ok(None),
        }
    } else {
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        if sizes.iter().sum::<usize>() > pairs.len() {
            return Ok(None);
        }
        rng.shuffle(&mut pairs);
        let mut rest = pairs.into_iter();
        let edges = sizes
            .iter()
            .enumerate()
            .flat_map(|(c, &size)| rest.by_ref().take(size).map(move |(u, v)| Edge::new(u, v, c)).collect::<Vec<_>>())
            .collect();
        EdgeColouredGraph::new(n, t, edges)?
    };
    let Some(min) = rainbow_minimal_subgraph(&h, k as i64, &mut rng)? else {
        return Ok(None);
    };
    chord_verdict(&h, &min)
}

fn chord_verdict(h: &EdgeColouredGraph, min: &Subgraph<'_>) -> Result<Sample> {
    let inside = min.degrees();
    let within: Vec<_> = h.edges().iter().filter(|e| inside[e.u] > 0 && inside[e.v] > 0).collect();
    let parallel = within.iter().enumerate().any(|(i, e)| within[..i].iter().any(|f| f.key() == e.key()));
    if parallel {
        return Ok(None);
    }
    let r = h.classes().map(<[usize]>::len).max().unwrap_or(0);
    let census = chord_census(min, &h.full())?;
    let bound = chord_bound(min.excess() as usize, r);
    Ok(sample(int(bound as i64 - census.total() as i64), || {
        format!("{} chords above {bound} (excess {}, r = {r})", census.total(), min.excess())
    }))
}

/// Random rainbow graph: `n = 4 + below(13)`, `k = 1 + below(2)`,
/// `m = n + k + below(n)` single-edge colours. Checks that
/// `minimal_excess_subgraph(G, k)` is rainbow, has minimum degree 2 and
/// excess at least `k`, and loses excess `k` when any vertex is removed.
/// Margin: excess minus `k`.
fn minimality_sample(seed: u64) -> Result<Sample> {
    let mut rng = SplitMix64::new(seed);
    let n = 4 + rng.below(13);
    let k = 1 + rng.below(2) as i64;
    let m = n + k as usize + rng.below(n);
    let g = random_instance(n, m, 1, rng.next_u64(), &ShapeMix::only(ClassShape::Uniform))?;
    let min = minimal_excess_subgraph(&g.full(), k)?;
    let removable = min.vertices().into_iter().find(|&v| min.without_vertex(v).two_core().excess() >= k);
    let ok = min.is_rainbow() && min.min_degree().unwrap_or(0) >= 2 && removable.is_none();
    let margin = if ok { min.excess() - k } else { -1 };
    Ok(sample(int(margin), || format!("not minimal: removable vertex {removable:?}")))
}

/// `n = 4 + below(17)`, `r = 1 + below(3)`, outdegrees between 1 and `r`.
/// Either `2 psi - g`, or the smallest `n - (r'(g-1) + 1 - def_r'(D))` over
/// `r' <= r + 1` with `g >= 2r' - 1`.
fn digraph_sample(seed: u64, defect_form: bool) -> Result<Sample> {
    let mut rng = SplitMix64::new(seed);
    let n = 4 + rng.below(17);
    let r = 1 + rng.below(3);
    let d = random_digraph_between(n, 1, r, rng.next_u64())?;
    let Some(g) = directed_girth(&d).length() else {
        return Ok(sample(int(-1), || "sink-free digraph without a cycle".into()));
    };
    if !defect_form {
        let margin = psi_digraph(&d)? * BigInt::from(2) - int(g as i64);
        return Ok(sample(margin, || format!("girth {g}, n = {n}")));
    }
    let margins: Vec<i64> = (1..=r + 1)
        .filter(|&r2| g + 1 >= 2 * r2)
        .map(|r2| n as i64 - ((r2 * (g - 1) + 1) as i64 - defect(&d, r2) as i64))
        .collect();
    Ok(margins.into_iter().min().and_then(|m| sample(int(m), || format!("girth {g}, n = {n}"))))
}

/// `n = 3 + below(10)`; [`random_small_class_instance`]. Checks
/// `rg <= ceil(psi)`.
fn psi_sample(seed: u64) -> Result<Sample> {
    let mut rng = SplitMix64::new(seed);
    let n = 3 + rng.below(10);
    let g = random_small_class_instance(n, rng.next_u64())?;
    let bound = ceil_ratio(&psi_graph(&g));
    let margin = match rainbow_girth_exact(&g, bound)? {
        RainbowGirth::Finite(c) => bound as i64 - c.len() as i64,
        RainbowGirth::NoneWithin(_) => -1,
    };
    Ok(sample(int(margin), || format!("no rainbow cycle within ceil(psi) = {bound}, n = {n}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(check: Check, n: usize, t: usize, r: usize) -> HuntConfig {
        HuntConfig { n, t, r, trials: 40, seed: 1, shape: ShapeMix::only(ClassShape::Uniform), check: Some(check) }
    }

    #[test]
    fn hunts_are_clean_and_ordered() {
        for c in [
            config(Check::TwoEdgeClasses, 10, 10, 2),
            config(Check::Psi, 10, 10, 2),
            config(Check::DigraphGirth, 10, 10, 2),
            config(Check::NOverR, 9, 9, 3),
        ] {
            let report = hunt(&c).unwrap();
            assert_eq!(report.count(Verdict::Fault), 0, "{}", report.render());
            assert!(report.trials.iter().enumerate().all(|(i, t)| t.index == i && t.seed == 1 ^ i as u64));
            assert!(report.witness().unwrap().is_some());
        }
    }

    #[test]
    fn infeasible_hunts() {
        assert!(hunt(&config(Check::TwoEdgeClasses, 10, 10, 1)).is_err());
        assert!(hunt(&config(Check::NOverR, 10, 9, 3)).is_err());
        assert!(hunt(&config(Check::DigraphGirth, 4, 4, 4)).is_err());
    }

    #[test]
    fn observed_order() {
        assert!(Observed::Exact(9) < Observed::Above(3));
        assert!(Observed::Exact(3) < Observed::Exact(4));
    }

    #[test]
    fn small_report_passes() {
        let report = lemma_report(3, 30).unwrap();
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.rows.len(), 8);
    }

    /// 12 vertices, 13 colours of at most 3 edges, no parallel edges.
    const CHORDY: &str = "ecg 12 30 13\ne 1 10 0\ne 4 9 1\ne 0 10 1\ne 4 8 1\ne 1 8 2\ne 2 4 2\ne 0 6 3\ne 7 11 3\n\
        e 5 11 3\ne 3 10 4\ne 4 7 4\ne 9 10 4\ne 2 9 5\ne 3 7 5\ne 2 7 6\ne 1 5 6\ne 10 11 6\ne 4 5 7\ne 0 9 8\n\
        e 6 7 9\ne 8 9 9\ne 2 6 9\ne 0 2 10\ne 0 5 10\ne 5 10 11\ne 1 7 11\ne 8 10 11\ne 1 2 12\ne 3 6 12\ne 6 8 12\n";

    #[test]
    fn transversal_minimality_is_too_weak_for_the_chord_bound() {
        let h = crate::format::parse_ecg(CHORDY).unwrap();
        let transversal = Subgraph::new(&h, [0, 3, 4, 8, 9, 12, 14, 17, 18, 19, 22, 24, 29]).unwrap();
        let r = minimal_excess_subgraph(&transversal, 1).unwrap();
        assert_eq!(r.edge_ids(), &[0, 3, 4, 12, 14, 17, 18, 19, 22, 24, 29]);
        assert_eq!(r.excess(), 1);
        // 13 chords against a bound of 12
        let (margin, failure) = chord_verdict(&h, &r).unwrap().unwrap();
        assert_eq!(margin, int(-1));
        assert!(failure.is_some());
        // because H has an excess-1 rainbow subgraph on fewer of R's vertices
        let mask: u32 = r.vertices().iter().map(|&v| 1 << v).sum();
        let best = best_rainbow_excess(&h);
        assert!((0..12).any(|v| mask >> v & 1 == 1 && best[(mask & !(1 << v)) as usize] >= 1));

        let mut rng = SplitMix64::new(0);
        let min = rainbow_minimal_subgraph(&h, 1, &mut rng).unwrap().unwrap();
        assert!(min.is_rainbow() && min.excess() >= 1);
        let (margin, _) = chord_verdict(&h, &min).unwrap().unwrap();
        assert!(margin >= BigRational::zero());
    }

    #[test]
    fn best_rainbow_excess_examples() {
        // two colours on a triangle plus a parallel pair
        let h = EdgeColouredGraph::new(
            3,
            3,
            vec![Edge::new(0, 1, 0), Edge::new(0, 1, 1), Edge::new(1, 2, 1), Edge::new(0, 2, 2)],
        )
        .unwrap();
        let best = best_rainbow_excess(&h);
        assert_eq!(best[0b011], 0); // colours 0 and 1 on {0, 1}
        assert_eq!(best[0b111], 0);
        assert_eq!(best[0b001], 0); // the empty subgraph
    }

    #[test]
    fn digraph_inequalities_on_a_cycle() {
        // directed 5-cycle: g = 5, psi = 5, def_1 = 0, def_2 = 5, def_3 = 10
        let d = Digraph::new(5, (0..5).map(|u| (u, (u + 1) % 5)).collect()).unwrap();
        assert!(digraph_failures(&d, 5, 3).unwrap().is_empty());
    }
}
