//! Parametric motion synthesis and numeric verification.
//!
//! Three constructions produce closed-form per-vertex motions of the shape
//! `p_t(u) = rot(t) A(u) + rot(-t) mirror A'(u) + Z(u)`, optionally extended
//! by a second rotation channel whose angle `s(t)` is solved so that a chosen
//! pivot stays on the mirror axis. A sampling verifier checks edge-length
//! constancy, mirror symmetry, edge non-degeneracy and non-triviality.

use crate::colourings::{
    almost_red_blue_cycles, cycle_edges, is_cartesian, is_pseudo_rs, Budget, CartesianVerdict,
    Colour, Cycle, ThreeColouring,
};
use crate::frameworks::{
    colour_accumulation, dist, is_walk_independent, Framework, WalkIndepVerdict,
};
use crate::graph_core::{mirror_point, SymmetricGraph};
use std::collections::BTreeMap;
use thiserror::Error;

/// Tolerances used by the verifier.
#[derive(Debug, Clone, Copy)]
pub struct TolProfile {
    pub max_symmetry_residual: f64,
    pub max_rel_length_variation: f64,
    pub min_edge_gap: f64,
    pub min_nontriviality_angle: f64,
}

impl Default for TolProfile {
    fn default() -> TolProfile {
        TolProfile {
            max_symmetry_residual: 1e-12,
            max_rel_length_variation: 1e-9,
            min_edge_gap: 1e-8,
            min_nontriviality_angle: 1e-3,
        }
    }
}

/// The optional second rotation channel with its tabulated reparametrisation.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondChannel {
    pub b: Vec<[f64; 2]>,
    pub b_mirror: Vec<[f64; 2]>,
    /// Angle of the first channel's anchor point.
    pub alpha: f64,
    /// Angle of the second channel's anchor point.
    pub beta: f64,
    /// +1 for the principal branch, -1 for the mirrored one.
    pub branch: f64,
    /// `(t, s)` pairs sampled at millirad resolution across the domain.
    pub s_table: Vec<(f64, f64)>,
}

impl SecondChannel {
    /// Solves `2 cos(t + alpha) + 2 cos(s + beta) + 1 = 0` on the chosen
    /// branch.
    pub fn s_of_t(&self, t: f64) -> f64 {
        let y = -(1.0 + 2.0 * (t + self.alpha).cos()) / 2.0;
        -self.beta + self.branch * y.clamp(-1.0, 1.0).acos()
    }
}

/// A closed-form symmetric motion over the vertices of one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametricFlex {
    pub a: Vec<[f64; 2]>,
    pub a_mirror: Vec<[f64; 2]>,
    pub z: Vec<[f64; 2]>,
    pub second: Option<SecondChannel>,
    /// Closed parameter interval.
    pub domain: (f64, f64),
}

fn rotate(t: f64, p: [f64; 2]) -> [f64; 2] {
    let (sin, cos) = t.sin_cos();
    [cos * p[0] - sin * p[1], sin * p[0] + cos * p[1]]
}

impl ParametricFlex {
    pub fn vertex_count(&self) -> usize {
        self.a.len()
    }

    pub fn position(&self, u: usize, t: f64) -> [f64; 2] {
        let mut p = rotate(t, self.a[u]);
        let m = rotate(-t, mirror_point(self.a_mirror[u]));
        p[0] += m[0] + self.z[u][0];
        p[1] += m[1] + self.z[u][1];
        if let Some(ch) = &self.second {
            let s = ch.s_of_t(t);
            let q = rotate(s, ch.b[u]);
            let qm = rotate(-s, mirror_point(ch.b_mirror[u]));
            p[0] += q[0] + qm[0];
            p[1] += q[1] + qm[1];
        }
        p
    }

    pub fn realisation(&self, t: f64) -> Vec<[f64; 2]> {
        (0..self.vertex_count()).map(|u| self.position(u, t)).collect()
    }
}

/// A parameter value with the realisation it produces.
pub type TimedRealisation = (f64, Vec<[f64; 2]>);

/// Uniform samples over the flex domain; a single sample sits at the start.
pub fn sample_flex(flex: &ParametricFlex, n: usize) -> Result<Vec<TimedRealisation>, FlexError> {
    if n == 0 {
        return Err(FlexError::BadSampleCount);
    }
    let (t0, t1) = flex.domain;
    let ts: Vec<f64> = if n == 1 {
        vec![t0]
    } else {
        (0..n).map(|i| t0 + (t1 - t0) * i as f64 / (n - 1) as f64).collect()
    };
    Ok(ts.into_iter().map(|t| (t, flex.realisation(t))).collect())
}

/// Measured residuals of a sampled flex, with the profile it was judged by.
#[derive(Debug, Clone)]
pub struct FlexReport {
    pub max_rel_length_variation: f64,
    pub max_symmetry_residual: f64,
    pub min_edge_gap: f64,
    pub nontriviality_angle: f64,
    pub samples: usize,
    pub profile: TolProfile,
    pub failures: Vec<&'static str>,
}

impl FlexReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Samples the flex and measures edge-length variation, mirror residual,
/// minimum edge length and the largest angle variation between an edge and
/// its mirror image.
pub fn verify_flex(
    g: &SymmetricGraph,
    flex: &ParametricFlex,
    n_samples: usize,
    profile: TolProfile,
) -> FlexReport {
    assert!(n_samples >= 2, "need at least two samples");
    assert_eq!(flex.vertex_count(), g.vertex_count());
    let samples = sample_flex(flex, n_samples).expect("n_samples >= 2");
    let mut max_sym = 0.0f64;
    let mut max_rel = 0.0f64;
    let mut min_gap = f64::INFINITY;
    let m = g.edge_count();
    let mut len_min = vec![f64::INFINITY; m];
    let mut len_max = vec![f64::NEG_INFINITY; m];
    let mut ang_min = vec![f64::INFINITY; m];
    let mut ang_max = vec![f64::NEG_INFINITY; m];
    for (_, p) in &samples {
        for u in 0..g.vertex_count() as u32 {
            let img = g.sigma_vertex(u);
            max_sym = max_sym.max(dist(p[img as usize], mirror_point(p[u as usize])));
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let (pu, pv) = (p[u as usize], p[v as usize]);
            let len = dist(pu, pv);
            len_min[e] = len_min[e].min(len);
            len_max[e] = len_max[e].max(len);
            min_gap = min_gap.min(len);
            // angle against the mirrored edge, oriented by the vertex map
            let me = g.sigma_edge(e);
            if me >= e {
                let (su, sv) = (g.sigma_vertex(u), g.sigma_vertex(v));
                let d1 = [pv[0] - pu[0], pv[1] - pu[1]];
                let d2 = [p[sv as usize][0] - p[su as usize][0], p[sv as usize][1] - p[su as usize][1]];
                let angle = (d1[0] * d2[1] - d1[1] * d2[0]).atan2(d1[0] * d2[0] + d1[1] * d2[1]);
                ang_min[e] = ang_min[e].min(angle);
                ang_max[e] = ang_max[e].max(angle);
            }
        }
    }
    let mut nontriv = 0.0f64;
    for e in 0..m {
        if len_max[e] > 0.0 {
            let mean = (len_max[e] + len_min[e]) / 2.0;
            max_rel = max_rel.max((len_max[e] - len_min[e]) / mean);
        }
        if ang_max[e] > ang_min[e] {
            nontriv = nontriv.max(ang_max[e] - ang_min[e]);
        }
    }
    let mut failures = Vec::new();
    if max_rel > profile.max_rel_length_variation {
        failures.push("edge length variation");
    }
    if max_sym > profile.max_symmetry_residual {
        failures.push("symmetry residual");
    }
    if min_gap < profile.min_edge_gap {
        failures.push("edge gap");
    }
    if nontriv < profile.min_nontriviality_angle {
        failures.push("non-triviality");
    }
    FlexReport {
        max_rel_length_variation: max_rel,
        max_symmetry_residual: max_sym,
        min_edge_gap: min_gap,
        nontriviality_angle: nontriv,
        samples: n_samples,
        profile,
        failures,
    }
}

#[derive(Debug, Error, Clone)]
pub enum FlexError {
    #[error("colouring is not certified cycle-free: {0}")]
    NotRsNoCycle(String),
    #[error("base points stayed degenerate after {retries} retries; last failures: {failures:?}")]
    DegenerateBasepoints { retries: usize, failures: Vec<&'static str> },
    #[error("split construction preconditions failed: {0:?}")]
    ConditionsFailed(Box<DoubleReport>),
    #[error("construction forces zero length on edge {0}-{1}")]
    ZeroLengthEdge(String, String),
    #[error("the reparametrisation domain is empty")]
    EmptyParameterDomain,
    #[error("a capped search truncated; verdict unknown")]
    TruncatedSearch,
    #[error("reparametrisation branch is discontinuous")]
    BranchDiscontinuity,
    #[error("framework is not walk-independent: {0:?}")]
    NotWalkIndependent(WalkIndepVerdict),
    #[error("colouring is not Cartesian; witness pair {0}-{1}")]
    NotCartesian(String, String),
    #[error("sample count must be positive")]
    BadSampleCount,
}

/// Seeded, exactly-representable base points: dyadic jitters of `(i, i^2)`.
/// The first draw is the plain family; retries re-draw the jitters so
/// coincidences that are invariant under global scaling still go away.
struct BasePoints {
    unit: f64,
    state: std::cell::Cell<u64>,
    jitter: std::cell::RefCell<std::collections::BTreeMap<(u8, usize), [f64; 2]>>,
}

impl BasePoints {
    fn new(seed: u64, retry: u32) -> BasePoints {
        let unit = (8 + (seed % 7)) as f64 / 8.0;
        let state = if retry == 0 { 0 } else { seed ^ (0xa5a5_5a5a ^ u64::from(retry)) << 8 };
        BasePoints {
            unit,
            state: std::cell::Cell::new(state),
            jitter: std::cell::RefCell::new(std::collections::BTreeMap::new()),
        }
    }

    /// Dyadic jitter in [0, 1), stable per (family, index) within one draw.
    fn jitter(&self, family: u8, i: usize) -> [f64; 2] {
        if self.state.get() == 0 {
            return [0.0, 0.0];
        }
        *self
            .jitter
            .borrow_mut()
            .entry((family, i))
            .or_insert_with(|| {
                let mut rng = crate::frameworks::SeedSequence(
                    self.state.get() ^ ((family as u64) << 32 | i as u64),
                );
                [(rng.next_u64() % 8) as f64 / 8.0, (rng.next_u64() % 8) as f64 / 8.0]
            })
    }

    /// Grid anchor for the i-th component (1-based): `unit * (i, i^2)` plus a
    /// sub-unit jitter; x offsets keep the anchors pairwise distinct.
    fn r(&self, i: usize) -> [f64; 2] {
        let j = self.jitter(0, i);
        let x = i as f64;
        [self.unit * (x + j[0]), self.unit * (x * x + j[1])]
    }

    /// Off-axis anchor, never seated on the mirror axis and never the mirror
    /// of another: x stays in `unit * [i + 1, i + 2)`, strictly positive.
    fn d(&self, i: usize) -> [f64; 2] {
        let j = self.jitter(1, i);
        let x = (i + 1) as f64;
        [self.unit * (x + j[0]), self.unit * (x * x + j[1])]
    }

    /// Axis anchor `(0, unit * (j + jitter))`.
    fn d_bar(&self, j: usize) -> [f64; 2] {
        let jit = self.jitter(2, j);
        [0.0, self.unit * (j as f64 + jit[0])]
    }
}

/// Assigns the gold-removed component anchors: invariant components sit on
/// the axis, mirrored pairs get an off-axis point and its reflection.
fn gold_component_anchors(
    g: &SymmetricGraph,
    z_labels: &[usize],
    points: &BasePoints,
    anchor_override: &BTreeMap<usize, [f64; 2]>,
) -> Vec<[f64; 2]> {
    let n_comps = z_labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut rep = vec![u32::MAX; n_comps];
    for v in (0..g.vertex_count() as u32).rev() {
        rep[z_labels[v as usize]] = v;
    }
    let mut anchors: Vec<Option<[f64; 2]>> = vec![None; n_comps];
    let (mut next_pair, mut next_axis) = (1usize, 1usize);
    for c in 0..n_comps {
        if anchors[c].is_some() {
            continue;
        }
        let image = z_labels[g.sigma_vertex(rep[c]) as usize];
        if let Some(&p) = anchor_override.get(&c) {
            anchors[c] = Some(p);
            if image != c {
                anchors[image] = Some(mirror_point(p));
            }
            continue;
        }
        if image == c {
            anchors[c] = Some(points.d_bar(next_axis));
            next_axis += 1;
        } else {
            let p = points.d(next_pair);
            next_pair += 1;
            anchors[c] = Some(p);
            anchors[image] = Some(mirror_point(p));
        }
    }
    anchors.into_iter().map(|p| p.expect("every component got an anchor")).collect()
}

/// Grid construction: place each blue-removed component on its own anchor and
/// each gold-removed component on a mirrored pair of offsets. Works for any
/// certified colouring without almost red-blue cycles.
pub fn grid_flex(
    g: &SymmetricGraph,
    delta: &ThreeColouring,
    seed: u64,
    budget: &Budget,
) -> Result<ParametricFlex, FlexError> {
    if let Err(reason) = is_pseudo_rs(g, delta) {
        return Err(FlexError::NotRsNoCycle(format!("{reason:?}")));
    }
    let cycles = almost_red_blue_cycles(g, delta, budget.cycle_cap);
    if !cycles.cycles.is_empty() {
        return Err(FlexError::NotRsNoCycle(format!(
            "{} almost red-blue cycle(s) present",
            cycles.cycles.len()
        )));
    }
    if cycles.truncated {
        return Err(FlexError::TruncatedSearch);
    }
    let a_labels = g.component_labels(|e| delta.get(e) != Colour::Blue);
    let z_labels = g.component_labels(|e| delta.get(e) != Colour::Gold);
    let n = g.vertex_count();
    let mut last_failures = Vec::new();
    for retry in 0..16 {
        let points = BasePoints::new(seed, retry);
        let z_anchors = gold_component_anchors(g, &z_labels, &points, &BTreeMap::new());
        let mut a = vec![[0.0; 2]; n];
        let mut a_mirror = vec![[0.0; 2]; n];
        let mut z = vec![[0.0; 2]; n];
        for u in 0..n as u32 {
            a[u as usize] = points.r(a_labels[u as usize] + 1);
            a_mirror[u as usize] = points.r(a_labels[g.sigma_vertex(u) as usize] + 1);
            z[u as usize] = z_anchors[z_labels[u as usize]];
        }
        let flex = ParametricFlex { a, a_mirror, z, second: None, domain: (0.0, std::f64::consts::TAU) };
        // reject seeds that merely happen to collide: vertices with distinct
        // component signatures must land on distinct start points
        let p0 = flex.realisation(0.0);
        let signature = |u: u32| {
            (
                a_labels[u as usize],
                a_labels[g.sigma_vertex(u) as usize],
                z_labels[u as usize],
            )
        };
        let spurious = (0..n as u32).any(|u| {
            (u + 1..n as u32).any(|v| {
                signature(u) != signature(v) && dist(p0[u as usize], p0[v as usize]) < 1e-8
            })
        });
        if spurious {
            last_failures = vec!["spurious start collision"];
            continue;
        }
        let report = verify_flex(g, &flex, 48, TolProfile::default());
        if report.passed() {
            return Ok(flex);
        }
        last_failures = report.failures;
    }
    Err(FlexError::DegenerateBasepoints { retries: 16, failures: last_failures })
}

/// Pair of colours an edge carries under two colourings at once.
pub type PairValue = (Colour, Colour);

/// Outcome of the five structural conditions for the split construction, plus
/// the data the construction itself needs.
#[derive(Debug, Clone)]
pub struct DoubleReport {
    pub gold_sets_equal: bool,
    /// Invariant five-cycle through the pivot, almost red-blue in both.
    pub five_cycle: Option<Cycle>,
    /// The pivot's neighbours split into a mirrored pair of connected groups.
    pub partition: Option<(Vec<u32>, Vec<u32>)>,
    /// Condition: removing an edge's pair-value disconnects its endpoints in
    /// the split graph.
    pub separation_ok: bool,
    pub separation_witness: Option<(String, String)>,
    /// Condition: every pivot-to-pivot path attains all five pair-values.
    pub five_values_ok: bool,
    pub five_values_witness: Option<Vec<String>>,
    pub five_values_truncated: bool,
    /// The two colourings certify each other on every almost red-blue cycle.
    pub mutual_certificates: bool,
    pub certificates_truncated: bool,
    /// Endpoint of the five-cycle's gold edge whose cycle-neighbour lies in
    /// the first partition class.
    pub u_bar: Option<u32>,
    /// That cycle-neighbour.
    pub x: Option<u32>,
}

impl DoubleReport {
    pub fn all_hold(&self) -> bool {
        self.conditions_hold() && !self.five_values_truncated && !self.certificates_truncated
    }

    fn conditions_hold(&self) -> bool {
        self.gold_sets_equal
            && self.five_cycle.is_some()
            && self.partition.is_some()
            && self.separation_ok
            && self.five_values_ok
            && self.mutual_certificates
    }

    /// Everything checked held, but a cap stopped some enumeration early.
    pub fn truncation_only(&self) -> bool {
        self.conditions_hold() && (self.five_values_truncated || self.certificates_truncated)
    }
}

/// The split graph: the pivot replaced by two vertices, one per neighbour
/// group, with the reflection extended to swap them.
struct SplitGraph {
    graph: SymmetricGraph,
    /// Map from split-graph vertex to original vertex.
    back: Vec<u32>,
    w1: u32,
    w2: u32,
    /// Pair value per split edge.
    values: Vec<PairValue>,
}

fn build_split(
    g: &SymmetricGraph,
    d1: &ThreeColouring,
    d2: &ThreeColouring,
    pivot: u32,
    part_n: &[u32],
    part_s: &[u32],
) -> SplitGraph {
    let w1_name = format!("{}~1", g.vertex_name(pivot));
    let w2_name = format!("{}~2", g.vertex_name(pivot));
    assert!(g.vertex_ix(&w1_name).is_none() && g.vertex_ix(&w2_name).is_none());
    let mut vertices: Vec<String> = Vec::new();
    let mut sigma: Vec<(String, String)> = vec![(w1_name.clone(), w2_name.clone())];
    for u in 0..g.vertex_count() as u32 {
        if u == pivot {
            continue;
        }
        vertices.push(g.vertex_name(u).to_owned());
        sigma.push((
            g.vertex_name(u).to_owned(),
            g.vertex_name(g.sigma_vertex(u)).to_owned(),
        ));
    }
    vertices.push(w1_name.clone());
    vertices.push(w2_name.clone());
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut edge_values: Vec<((String, String), PairValue)> = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let value = (d1.get(e), d2.get(e));
        let name_of = |w: u32, other: u32| -> String {
            if w != pivot {
                g.vertex_name(w).to_owned()
            } else if part_n.contains(&other) {
                w1_name.clone()
            } else {
                debug_assert!(part_s.contains(&other));
                w2_name.clone()
            }
        };
        let pair = (name_of(u, v), name_of(v, u));
        edges.push(pair.clone());
        edge_values.push((pair, value));
    }
    let graph = SymmetricGraph::from_pairs(&vertices, &edges, &sigma)
        .expect("splitting an invariant vertex preserves the symmetry");
    let mut values = vec![(Colour::Gold, Colour::Gold); graph.edge_count()];
    for ((a, b), value) in edge_values {
        let e = graph
            .edge_between(graph.vertex_ix(&a).unwrap(), graph.vertex_ix(&b).unwrap())
            .unwrap();
        values[e] = value;
    }
    let back = (0..graph.vertex_count() as u32)
        .map(|u| {
            let name = graph.vertex_name(u);
            if name == w1_name || name == w2_name {
                pivot
            } else {
                g.vertex_ix(name).unwrap()
            }
        })
        .collect();
    SplitGraph {
        w1: graph.vertex_ix(&w1_name).unwrap(),
        w2: graph.vertex_ix(&w2_name).unwrap(),
        graph,
        back,
        values,
    }
}

const FIVE_VALUES: [PairValue; 5] = [
    (Colour::Red, Colour::Red),
    (Colour::Red, Colour::Blue),
    (Colour::Blue, Colour::Red),
    (Colour::Blue, Colour::Blue),
    (Colour::Gold, Colour::Gold),
];

/// Evaluates the five structural conditions for the split construction at the
/// invariant vertex `pivot`.
pub fn check_double_conditions(
    g: &SymmetricGraph,
    d1: &ThreeColouring,
    d2: &ThreeColouring,
    pivot: u32,
    budget: &Budget,
) -> DoubleReport {
    assert!(g.is_invariant_vertex(pivot), "pivot must be invariant");
    let mut report = DoubleReport {
        gold_sets_equal: d1.gold_edges() == d2.gold_edges(),
        five_cycle: None,
        partition: None,
        separation_ok: false,
        separation_witness: None,
        five_values_ok: false,
        five_values_witness: None,
        five_values_truncated: false,
        mutual_certificates: false,
        certificates_truncated: false,
        u_bar: None,
        x: None,
    };

    // mutual certificates across all almost red-blue cycles, both directions
    let mut mutual = true;
    let mut cert_truncated = false;
    for (own, other) in [(d1, d2), (d2, d1)] {
        let found = almost_red_blue_cycles(g, own, budget.cycle_cap);
        cert_truncated |= found.truncated;
        for cycle in &found.cycles {
            let edges = cycle_edges(g, cycle);
            let separated = edges.iter().enumerate().any(|(i, &e1)| {
                edges[i + 1..]
                    .iter()
                    .any(|&e2| own.get(e1) == own.get(e2) && other.get(e1) != other.get(e2))
            });
            if !separated {
                mutual = false;
            }
        }
    }
    report.mutual_certificates = mutual;
    report.certificates_truncated = cert_truncated;

    // invariant five-cycle through the pivot, almost red-blue in both
    let found = almost_red_blue_cycles(g, d1, budget.cycle_cap);
    for cycle in &found.cycles {
        if cycle.len() != 5 || !cycle.contains(&pivot) {
            continue;
        }
        let as_set: std::collections::BTreeSet<u32> = cycle.iter().copied().collect();
        let image: std::collections::BTreeSet<u32> =
            cycle.iter().map(|&v| g.sigma_vertex(v)).collect();
        if as_set != image {
            continue;
        }
        let golds: Vec<usize> = cycle_edges(g, cycle)
            .into_iter()
            .filter(|&e| d1.get(e) == Colour::Gold && d2.get(e) == Colour::Gold)
            .collect();
        if golds.len() == 1 && g.is_invariant_edge(golds[0]) {
            report.five_cycle = Some(cycle.clone());
            break;
        }
    }

    // unique mirrored partition of the pivot's neighbours
    let labels = g.component_labels(|e| {
        let (u, v) = g.edge(e);
        u != pivot && v != pivot && d1.get(e) != Colour::Gold
    });
    let nbrs: Vec<u32> = g.neighbours(pivot).map(|(v, _)| v).collect();
    let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for &v in &nbrs {
        groups.entry(labels[v as usize]).or_default().push(v);
    }
    if groups.len() == 2 {
        let mut it = groups.into_values();
        let (n_side, s_side) = (it.next().unwrap(), it.next().unwrap());
        let image: std::collections::BTreeSet<u32> =
            n_side.iter().map(|&v| g.sigma_vertex(v)).collect();
        if image == s_side.iter().copied().collect() {
            report.partition = Some((n_side, s_side));
        }
    }

    let (part_n, part_s) = match &report.partition {
        Some((a, b)) => (a.clone(), b.clone()),
        None => return report,
    };

    // orient the five-cycle: the gold endpoint whose cycle-neighbour sits in
    // the first group
    if let Some(cycle) = &report.five_cycle {
        let edges = cycle_edges(g, cycle);
        let gold_pos = edges
            .iter()
            .position(|&e| d1.get(e) == Colour::Gold)
            .expect("five-cycle carries its gold edge");
        let len = cycle.len();
        let (p, q) = (cycle[gold_pos], cycle[(gold_pos + 1) % len]);
        // neighbour of p along the cycle away from q
        let before = cycle[(gold_pos + len - 1) % len];
        let after = cycle[(gold_pos + 2) % len];
        // the two candidates are mirror images, so exactly one sits in the
        // first group
        let (u_bar, x) = if part_n.contains(&before) { (p, before) } else { (q, after) };
        report.u_bar = Some(u_bar);
        report.x = Some(x);
    }

    let split = build_split(g, d1, d2, pivot, &part_n, &part_s);

    // separation: dropping an edge's own pair-value disconnects it
    report.separation_ok = true;
    for e in 0..split.graph.edge_count() {
        let value = split.values[e];
        let (u, v) = split.graph.edge(e);
        let labels = split
            .graph
            .component_labels(|f| split.values[f] != value);
        if labels[u as usize] == labels[v as usize] {
            report.separation_ok = false;
            report.separation_witness = Some((
                split.graph.vertex_name(u).to_owned(),
                split.graph.vertex_name(v).to_owned(),
            ));
            break;
        }
    }

    // every pivot-to-pivot path sees all five pair-values
    let paths = split.graph.simple_paths(split.w1, split.w2, |_| false, budget.cycle_cap);
    report.five_values_truncated = paths.truncated;
    report.five_values_ok = true;
    for path in &paths.paths {
        let mut seen = [false; 5];
        for w in path.windows(2) {
            let e = split.graph.edge_between(w[0], w[1]).unwrap();
            if let Some(i) = FIVE_VALUES.iter().position(|&v| v == split.values[e]) {
                seen[i] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            report.five_values_ok = false;
            report.five_values_witness = Some(
                path.iter().map(|&v| split.graph.vertex_name(v).to_owned()).collect(),
            );
            break;
        }
    }
    report
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DoubleOptions {
    /// Skip the condition gate and let the degeneracy checks speak.
    pub forced: bool,
    /// Take the mirrored solution branch of the reparametrisation.
    pub mirrored_branch: bool,
}

/// Builds the two-parameter split flex after [`check_double_conditions`]
/// passes.
pub fn double_flex(
    g: &SymmetricGraph,
    d1: &ThreeColouring,
    d2: &ThreeColouring,
    pivot: u32,
    seed: u64,
    budget: &Budget,
    opts: DoubleOptions,
) -> Result<(ParametricFlex, DoubleReport), FlexError> {
    let report = check_double_conditions(g, d1, d2, pivot, budget);
    if !opts.forced && !report.all_hold() {
        if report.truncation_only() {
            return Err(FlexError::TruncatedSearch);
        }
        return Err(FlexError::ConditionsFailed(Box::new(report)));
    }
    // even a forced build needs one shared gold set: every edge's length must
    // be owned by some channel
    if !report.gold_sets_equal {
        return Err(FlexError::ConditionsFailed(Box::new(report)));
    }
    let (part_n, part_s) = report
        .partition
        .clone()
        .ok_or_else(|| FlexError::ConditionsFailed(Box::new(report.clone())))?;
    let (u_bar, x) = match (report.u_bar, report.x) {
        (Some(u), Some(x)) => (u, x),
        _ => return Err(FlexError::ConditionsFailed(Box::new(report))),
    };
    let split = build_split(g, d1, d2, pivot, &part_n, &part_s);
    let sg = &split.graph;
    let su_bar = sg.vertex_ix(g.vertex_name(u_bar)).unwrap();
    let sx = sg.vertex_ix(g.vertex_name(x)).unwrap();
    let e_ux = sg
        .edge_between(su_bar, sx)
        .expect("five-cycle edge survives the split");
    let e_xw = sg.edge_between(sx, split.w1).expect("cycle neighbour stays attached");
    let v1 = split.values[e_ux];
    let v2 = split.values[e_xw];
    if v1.0 == Colour::Gold || v2.0 == Colour::Gold || v1 == v2 {
        return Err(FlexError::ConditionsFailed(Box::new(report)));
    }

    let c1_labels = sg.component_labels(|e| split.values[e] != v1);
    let c2_labels = sg.component_labels(|e| split.values[e] != v2);
    let z_labels = sg.component_labels(|e| split.values[e] != (Colour::Gold, Colour::Gold));

    // zero-length screens: an edge whose channel anchors coincide would
    // degenerate
    for e in 0..sg.edge_count() {
        let (u, v) = sg.edge(e);
        let labels = match split.values[e] {
            value if value == v1 => &c1_labels,
            value if value == v2 => &c2_labels,
            (Colour::Gold, Colour::Gold) => &z_labels,
            _ => continue,
        };
        if labels[u as usize] == labels[v as usize] {
            let (a, b) = (split.back[u as usize], split.back[v as usize]);
            return Err(FlexError::ZeroLengthEdge(
                g.vertex_name(a).to_owned(),
                g.vertex_name(b).to_owned(),
            ));
        }
    }

    let points = BasePoints::new(seed, 0);
    let (alpha, beta) = (0.0f64, 0.0f64);
    let anchor1 = rotate(alpha, [2.0, 0.0]);
    let anchor2 = rotate(beta, [2.0, 0.0]);

    let channel_values = |labels: &[usize], zero_comp: usize, anchor_comp: usize, anchor: [f64; 2]| {
        let n_comps = labels.iter().copied().max().unwrap() + 1;
        let mut vals = vec![None; n_comps];
        vals[zero_comp] = Some([0.0, 0.0]);
        vals[anchor_comp] = Some(anchor);
        let mut next = 1usize;
        for slot in vals.iter_mut() {
            if slot.is_none() {
                *slot = Some(points.r(next + 2));
                next += 1;
            }
        }
        vals.into_iter().map(Option::unwrap).collect::<Vec<[f64; 2]>>()
    };
    // the anchor components must be distinct from the zero component; the
    // zero-length screens above guarantee it
    let c1_vals = channel_values(&c1_labels, c1_labels[su_bar as usize], c1_labels[sx as usize], anchor1);
    let c2_vals = channel_values(
        &c2_labels,
        c2_labels[su_bar as usize],
        c2_labels[split.w1 as usize],
        anchor2,
    );
    let mut overrides = BTreeMap::new();
    overrides.insert(z_labels[su_bar as usize], [1.0, 0.0]);
    let z_anchors = gold_component_anchors(sg, &z_labels, &points, &overrides);

    // domain: cos(t + alpha) <= 1/2, shrunk at the fold points
    let eps = 1e-6;
    let domain = (
        std::f64::consts::FRAC_PI_3 - alpha + eps,
        5.0 * std::f64::consts::FRAC_PI_3 - alpha - eps,
    );
    if domain.0 >= domain.1 {
        return Err(FlexError::EmptyParameterDomain);
    }

    // glue back onto the original vertex set
    let n = g.vertex_count();
    let mut a = vec![[0.0; 2]; n];
    let mut a_mirror = vec![[0.0; 2]; n];
    let mut b = vec![[0.0; 2]; n];
    let mut b_mirror = vec![[0.0; 2]; n];
    let mut z = vec![[0.0; 2]; n];
    for su in 0..sg.vertex_count() as u32 {
        let u = split.back[su as usize];
        if u == pivot && su != split.w1 {
            continue;
        }
        let simg = sg.sigma_vertex(su);
        a[u as usize] = c1_vals[c1_labels[su as usize]];
        a_mirror[u as usize] = c1_vals[c1_labels[simg as usize]];
        b[u as usize] = c2_vals[c2_labels[su as usize]];
        b_mirror[u as usize] = c2_vals[c2_labels[simg as usize]];
        z[u as usize] = z_anchors[z_labels[su as usize]];
    }

    let step = 1e-3;
    let mut s_table = Vec::new();
    let mut t = domain.0;
    let mut prev_s: Option<f64> = None;
    let branch = if opts.mirrored_branch { -1.0 } else { 1.0 };
    let channel_probe = SecondChannel {
        b: Vec::new(),
        b_mirror: Vec::new(),
        alpha,
        beta,
        branch,
        s_table: Vec::new(),
    };
    while t <= domain.1 + step / 2.0 {
        let tc = t.min(domain.1);
        let s = channel_probe.s_of_t(tc);
        if let Some(p) = prev_s {
            if (s - p).abs() > 0.2 {
                return Err(FlexError::BranchDiscontinuity);
            }
        }
        prev_s = Some(s);
        s_table.push((tc, s));
        t += step;
    }

    let flex = ParametricFlex {
        a,
        a_mirror,
        z,
        second: Some(SecondChannel { b, b_mirror, alpha, beta, branch, s_table }),
        domain,
    };
    Ok((flex, report))
}

/// Builds the motion of a walk-independent symmetric framework from a
/// Cartesian colouring by accumulating per-colour edge vectors; the motion
/// starts exactly at the given placement.
pub fn walkindep_flex(
    fw: &Framework,
    delta: &ThreeColouring,
    tol: f64,
) -> Result<ParametricFlex, FlexError> {
    let g = fw.graph();
    let walk = is_walk_independent(fw, tol);
    if !walk.is_ok() {
        return Err(FlexError::NotWalkIndependent(walk));
    }
    if let Err(reason) = is_pseudo_rs(g, delta) {
        return Err(FlexError::NotRsNoCycle(format!("{reason:?}")));
    }
    if let CartesianVerdict::NotCartesian(u, v) = is_cartesian(g, delta) {
        return Err(FlexError::NotCartesian(
            g.vertex_name(u).to_owned(),
            g.vertex_name(v).to_owned(),
        ));
    }
    // anchor: an invariant vertex when one exists, else the first vertex;
    // lower it onto the horizontal axis first
    let root = g.invariant_vertices().first().copied().unwrap_or(0);
    let dy = fw.position(root)[1];
    let grounded = fw.translated([0.0, -dy]);
    let blue = colour_accumulation(&grounded, delta, root, Colour::Blue);
    let gold = colour_accumulation(&grounded, delta, root, Colour::Gold);
    let s_root = g.sigma_vertex(root);
    let n = g.vertex_count();
    let half = |p: [f64; 2], q: [f64; 2]| [p[0] - q[0] / 2.0, p[1] - q[1] / 2.0];
    let mut a = vec![[0.0; 2]; n];
    let mut z_raw = vec![[0.0; 2]; n];
    for u in 0..n {
        a[u] = half(blue[u], blue[s_root as usize]);
        z_raw[u] = half(gold[u], gold[s_root as usize]);
    }
    // enforce exact mirror symmetry of the offsets, then restore the height
    let mut z = vec![[0.0; 2]; n];
    for u in 0..n as u32 {
        let img = g.sigma_vertex(u) as usize;
        let m = mirror_point(z_raw[img]);
        z[u as usize] = [
            (z_raw[u as usize][0] + m[0]) / 2.0,
            (z_raw[u as usize][1] + m[1]) / 2.0 + dy,
        ];
    }
    let a_mirror: Vec<[f64; 2]> = (0..n as u32).map(|u| a[g.sigma_vertex(u) as usize]).collect();
    let flex =
        ParametricFlex { a, a_mirror, z, second: None, domain: (0.0, std::f64::consts::TAU) };
    // the motion must start at the input placement
    let p0 = flex.realisation(0.0);
    for (u, p) in p0.iter().enumerate() {
        debug_assert!(
            dist(*p, fw.position(u as u32)) <= 1e-9,
            "start residual too large at {}",
            g.vertex_name(u as u32)
        );
    }
    Ok(flex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colourings::colouring_from_names;
    use crate::fixtures;
    use crate::frameworks::{strip_framework, StripSpec};
    use crate::graph_core::gk_graph;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn rhombus_motion_from_grid_construction() {
        let g = fixtures::c4_antipodal();
        let delta = colouring_from_names(
            &g,
            &[
                ("1", "2", Colour::Red),
                ("2", "3", Colour::Red),
                ("3", "4", Colour::Blue),
                ("1", "4", Colour::Blue),
            ],
        )
        .unwrap();
        let flex = grid_flex(&g, &delta, 1, &budget()).unwrap();
        let report = verify_flex(&g, &flex, 200, TolProfile::default());
        assert!(report.passed(), "failures: {:?}", report.failures);
        // all four side lengths agree: the two anchors differ by a fixed gap
        let p = flex.realisation(0.3);
        let lengths: Vec<f64> = g
            .edges()
            .iter()
            .map(|&(u, v)| dist(p[u as usize], p[v as usize]))
            .collect();
        for w in lengths.windows(2) {
            assert!((w[0] - w[1]).abs() < 1e-9);
        }
        // closed form: each vertex is a two-anchor rotation sum
        let (t0, _) = flex.domain;
        for u in 0..4u32 {
            let su = g.sigma_vertex(u);
            let expect = {
                let r = rotate(t0, flex.a[u as usize]);
                let m = rotate(-t0, mirror_point(flex.a[su as usize]));
                [r[0] + m[0] + flex.z[u as usize][0], r[1] + m[1] + flex.z[u as usize][1]]
            };
            let got = flex.position(u as usize, t0);
            assert!(dist(expect, got) < 1e-12);
        }
    }

    #[test]
    fn k3_mirror_has_no_grid_flex() {
        let g = fixtures::k3_mirror();
        let delta = colouring_from_names(
            &g,
            &[("1", "2", Colour::Red), ("1", "3", Colour::Blue), ("2", "3", Colour::Gold)],
        )
        .unwrap();
        assert!(matches!(grid_flex(&g, &delta, 1, &budget()), Err(FlexError::NotRsNoCycle(_))));
    }

    #[test]
    fn fig2_grid_flexes_verify_and_injectivity_tracks_cartesian() {
        let g = fixtures::fig2();
        for (name, delta) in fixtures::fig2_colourings() {
            let flex = grid_flex(&g, &delta, 3, &budget()).unwrap();
            let report = verify_flex(&g, &flex, 120, TolProfile::default());
            assert!(report.passed(), "{name} failures: {:?}", report.failures);
            let p0 = flex.realisation(0.0);
            let mut injective = true;
            for u in 0..g.vertex_count() {
                for v in u + 1..g.vertex_count() {
                    if dist(p0[u], p0[v]) < 1e-8 {
                        injective = false;
                    }
                }
            }
            let cartesian = is_cartesian(&g, &delta).is_cartesian();
            assert_eq!(injective, cartesian, "{name}");
        }
    }

    #[test]
    fn grid_red_and_gold_length_identities() {
        // red edges span mirrored anchors, gold edges span offset anchors
        let g = fixtures::fig2();
        let (_, delta) = fixtures::fig2_colourings().into_iter().next().unwrap();
        let flex = grid_flex(&g, &delta, 5, &budget()).unwrap();
        let p = flex.realisation(1.1);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let len = dist(p[u as usize], p[v as usize]);
            match delta.get(e) {
                Colour::Red => {
                    let (su, sv) = (g.sigma_vertex(u) as usize, g.sigma_vertex(v) as usize);
                    assert!((len - dist(flex.a[su], flex.a[sv])).abs() < 1e-9);
                }
                Colour::Gold => {
                    assert!((len - dist(flex.z[u as usize], flex.z[v as usize])).abs() < 1e-9);
                }
                Colour::Blue => {
                    assert!((len - dist(flex.a[u as usize], flex.a[v as usize])).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn constant_flex_fails_only_nontriviality() {
        let g = fixtures::c4_antipodal();
        let coords = [[-0.5, 0.0], [0.5, 1.0], [0.5, 0.0], [-0.5, 1.0]];
        let flex = ParametricFlex {
            a: vec![[0.0; 2]; 4],
            a_mirror: vec![[0.0; 2]; 4],
            z: coords.to_vec(),
            second: None,
            domain: (0.0, std::f64::consts::TAU),
        };
        let report = verify_flex(&g, &flex, 50, TolProfile::default());
        assert_eq!(report.failures, vec!["non-triviality"]);
    }

    #[test]
    fn collision_fails_edge_gap() {
        let g = fixtures::c4_antipodal();
        // all vertices at mirrored copies of one anchor: edges 1-2 and 2-3
        // collapse
        let flex = ParametricFlex {
            a: vec![[1.0, 0.0]; 4],
            a_mirror: vec![[1.0, 0.0]; 4],
            z: vec![[0.0, 0.0]; 4],
            second: None,
            domain: (0.0, std::f64::consts::TAU),
        };
        let report = verify_flex(&g, &flex, 50, TolProfile::default());
        assert!(report.failures.contains(&"edge gap"));
    }

    #[test]
    fn sample_flex_shapes() {
        let g = fixtures::c4_antipodal();
        let delta = colouring_from_names(
            &g,
            &[
                ("1", "2", Colour::Red),
                ("2", "3", Colour::Red),
                ("3", "4", Colour::Blue),
                ("1", "4", Colour::Blue),
            ],
        )
        .unwrap();
        let flex = grid_flex(&g, &delta, 1, &budget()).unwrap();
        assert!(matches!(sample_flex(&flex, 0), Err(FlexError::BadSampleCount)));
        let one = sample_flex(&flex, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].0, flex.domain.0);
        let four = sample_flex(&flex, 4).unwrap();
        assert_eq!(four.len(), 4);
        let side = dist(four[0].1[0], four[0].1[1]);
        for (_, p) in &four {
            assert!((dist(p[0], p[1]) - side).abs() < 1e-9);
        }
    }

    #[test]
    fn gk1_split_conditions_hold_and_flex_verifies() {
        let g = gk_graph(1).unwrap();
        use Colour::{Blue as B, Gold as G, Red as R};
        let d1 = colouring_from_names(
            &g,
            &[
                ("l0", "r0", G),
                ("l0", "l1", B),
                ("l1", "m1", B),
                ("r0", "r1", R),
                ("m1", "r1", R),
            ],
        )
        .unwrap();
        let d2 = colouring_from_names(
            &g,
            &[
                ("l0", "r0", G),
                ("l0", "l1", R),
                ("l1", "m1", B),
                ("r0", "r1", B),
                ("m1", "r1", R),
            ],
        )
        .unwrap();
        let pivot = g.vertex_ix("m1").unwrap();
        let report = check_double_conditions(&g, &d1, &d2, pivot, &budget());
        assert!(report.all_hold(), "{report:?}");
        let (flex, _) = double_flex(&g, &d1, &d2, pivot, 1, &budget(), DoubleOptions::default()).unwrap();
        let verify = verify_flex(&g, &flex, 200, TolProfile::default());
        assert!(verify.passed(), "failures: {verify:?}");
        // the pivot's orbit hugs the axis
        for (_, p) in sample_flex(&flex, 200).unwrap() {
            assert!(p[pivot as usize][0].abs() <= 1e-9);
        }
    }

    #[test]
    fn bare_five_cycle_flexes() {
        let (g, d1, d2) = fixtures::fig9_bare();
        let pivot = g.vertex_ix("w").unwrap();
        let report = check_double_conditions(&g, &d1, &d2, pivot, &budget());
        assert!(report.gold_sets_equal);
        assert!(report.five_cycle.is_some());
        assert!(report.partition.is_some());
        assert!(report.separation_ok);
        assert!(report.five_values_ok);
        assert!(report.all_hold());
        let (flex, rep) = double_flex(&g, &d1, &d2, pivot, 7, &budget(), DoubleOptions::default()).unwrap();
        assert!(matches!(rep.u_bar.map(|u| g.vertex_name(u)), Some("u") | Some("su")));
        let verify = verify_flex(&g, &flex, 200, TolProfile::default());
        assert!(verify.passed(), "failures: {verify:?}");
    }

    #[test]
    fn fig10_fails_five_values_and_forcing_degenerates() {
        let (g, d1, d2) = fixtures::fig10();
        assert!(is_pseudo_rs(&g, &d1).is_ok());
        assert!(is_pseudo_rs(&g, &d2).is_ok());
        let pivot = g.vertex_ix("w").unwrap();
        let report = check_double_conditions(&g, &d1, &d2, pivot, &budget());
        assert!(report.gold_sets_equal);
        assert!(report.five_cycle.is_some());
        assert!(report.partition.is_some());
        assert!(!report.five_values_ok, "the five-values condition must fail");
        assert!(matches!(
            double_flex(&g, &d1, &d2, pivot, 1, &budget(), DoubleOptions::default()),
            Err(FlexError::ConditionsFailed(_))
        ));
        match double_flex(&g, &d1, &d2, pivot, 1, &budget(), DoubleOptions { forced: true, mirrored_branch: false }) {
            Err(FlexError::ZeroLengthEdge(a, b)) => {
                assert!(
                    ["1l", "1r"].contains(&a.as_str()) || ["1l", "1r"].contains(&b.as_str()),
                    "witness {a}-{b} should touch the invariant edge"
                );
            }
            other => panic!("expected zero-length degeneration, got {other:?}"),
        }
    }

    #[test]
    fn domain_sanity_for_branch_equation() {
        // with a zero anchor angle the start of the domain solves
        // cos(t) = 1/2 and the midpoint reaches cos(t) = -1
        let ch = SecondChannel {
            b: vec![],
            b_mirror: vec![],
            alpha: 0.0,
            beta: 0.0,
            branch: 1.0,
            s_table: vec![],
        };
        let s = ch.s_of_t(std::f64::consts::PI);
        assert!((s - std::f64::consts::FRAC_PI_3).abs() < 1e-12);
        let residual = 2.0 * (std::f64::consts::PI).cos() + 2.0 * s.cos() + 1.0;
        assert!(residual.abs() < 1e-12);
    }

    #[test]
    fn walkindep_flex_on_square_starts_at_p() {
        let g = crate::graph_core::SymmetricGraph::from_pairs(
            &["1", "2", "3", "4"],
            &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")],
            &[("1", "3")],
        )
        .unwrap();
        let fw = Framework::from_named(
            g.clone(),
            &[("1", [-1.0, 0.5]), ("2", [0.0, 0.0]), ("3", [1.0, 0.5]), ("4", [0.0, 1.0])],
        )
        .unwrap();
        let apcs = crate::frameworks::angle_preserving_classes(&g);
        let class = crate::frameworks::noninvariant_apc(&g).unwrap();
        let delta = crate::frameworks::cartesian_from_apc(&g, &apcs, class).unwrap();
        let flex = walkindep_flex(&fw, &delta, 1e-9).unwrap();
        let p0 = flex.realisation(0.0);
        for (u, p) in p0.iter().enumerate() {
            assert!(dist(*p, fw.position(u as u32)) <= 1e-9);
        }
        let report = verify_flex(&g, &flex, 200, TolProfile::default());
        assert!(report.passed(), "failures: {report:?}");
    }

    #[test]
    fn walkindep_flex_on_sheared_strip() {
        let fw = strip_framework(&StripSpec::plain(2, 2, 23));
        let g = fw.graph();
        let apcs = crate::frameworks::angle_preserving_classes(g);
        let class = crate::frameworks::noninvariant_apc(g).unwrap();
        let delta = crate::frameworks::cartesian_from_apc(g, &apcs, class).unwrap();
        let flex = walkindep_flex(&fw, &delta, 1e-9).unwrap();
        let p0 = flex.realisation(0.0);
        for u in 0..g.vertex_count() as u32 {
            assert!(dist(p0[u as usize], fw.position(u)) <= 1e-9);
        }
        let report = verify_flex(g, &flex, 150, TolProfile::default());
        assert!(report.passed(), "failures: {report:?}");
    }

    #[test]
    fn walkindep_rejects_bad_inputs() {
        let g = crate::graph_core::SymmetricGraph::from_pairs(
            &["1", "2", "3", "4"],
            &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")],
            &[("1", "3")],
        )
        .unwrap();
        let trap = Framework::from_named(
            g.clone(),
            &[("1", [-1.0, 0.4]), ("2", [0.0, 0.0]), ("3", [1.0, 0.4]), ("4", [0.0, 1.9])],
        )
        .unwrap();
        let apcs = crate::frameworks::angle_preserving_classes(&g);
        let delta = crate::frameworks::cartesian_from_apc(&g, &apcs, 0).unwrap();
        assert!(matches!(
            walkindep_flex(&trap, &delta, 1e-9),
            Err(FlexError::NotWalkIndependent(_))
        ));
    }
}


#[cfg(test)]
mod branch_tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn mirrored_branch_also_verifies() {
        let (g, d1, d2) = fixtures::fig9_bare();
        let pivot = g.vertex_ix("w").unwrap();
        let opts = DoubleOptions { forced: false, mirrored_branch: true };
        let (flex, _) = double_flex(&g, &d1, &d2, pivot, 3, &Budget::default(), opts).unwrap();
        assert_eq!(flex.second.as_ref().unwrap().branch, -1.0);
        let report = verify_flex(&g, &flex, 150, TolProfile::default());
        assert!(report.passed(), "{report:?}");
        for (_, p) in sample_flex(&flex, 150).unwrap() {
            assert!(p[pivot as usize][0].abs() <= 1e-9);
        }
    }

    #[test]
    fn s_table_spans_the_domain_at_millirad_steps() {
        let (g, d1, d2) = crate::fixtures::fig9_bare();
        let pivot = g.vertex_ix("w").unwrap();
        let (flex, _) =
            double_flex(&g, &d1, &d2, pivot, 1, &Budget::default(), DoubleOptions::default())
                .unwrap();
        let ch = flex.second.as_ref().unwrap();
        let table = &ch.s_table;
        assert!((table.first().unwrap().0 - flex.domain.0).abs() < 1e-9);
        assert!((table.last().unwrap().0 - flex.domain.1).abs() < 1e-3);
        for w in table.windows(2) {
            assert!((w[1].0 - w[0].0) <= 1e-3 + 1e-9);
            // tabulated values agree with the closed form
            assert!((ch.s_of_t(w[0].0) - w[0].1).abs() < 1e-12);
        }
    }

    #[test]
    fn tiny_cycle_cap_reports_truncation() {
        let g = fixtures::fig3();
        let (d1, d2) = fixtures::fig3_colourings();
        let budget = Budget { cycle_cap: 5, ..Budget::default() };
        let verdict =
            crate::colourings::classify_rs(&g, &d1, Some(&[d1.clone(), d2]), &budget).unwrap();
        assert_eq!(verdict, crate::colourings::RsVerdict::UnknownTruncated);
    }
}
