//! Realisation-level machinery: planar placements, angle-preserving classes,
//! the walk-independence test, the correspondence between non-invariant
//! classes and Cartesian colourings, and the flexibility decision for
//! triangle-and-parallelogram frameworks.

use crate::colourings::{
    is_cartesian, is_pseudo_rs, Colour, ThreeColouring,
};
use crate::graph_core::{mirror_point, Dsu, SymmetricGraph};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrameworkError {
    #[error("edge {0}-{1} has coincident endpoints")]
    CoincidentEndpoints(String, String),
    #[error("missing coordinates for vertex {0:?}")]
    MissingCoordinates(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
}

/// A symmetric graph together with a planar placement of its vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Framework {
    graph: SymmetricGraph,
    coords: Vec<[f64; 2]>,
}

impl Framework {
    pub fn new(graph: SymmetricGraph, coords: Vec<[f64; 2]>) -> Result<Framework, FrameworkError> {
        assert_eq!(coords.len(), graph.vertex_count());
        for &(u, v) in graph.edges() {
            let (p, q) = (coords[u as usize], coords[v as usize]);
            if p == q {
                return Err(FrameworkError::CoincidentEndpoints(
                    graph.vertex_name(u).to_owned(),
                    graph.vertex_name(v).to_owned(),
                ));
            }
        }
        Ok(Framework { graph, coords })
    }

    pub fn from_named(
        graph: SymmetricGraph,
        coords: &[(&str, [f64; 2])],
    ) -> Result<Framework, FrameworkError> {
        let mut table = vec![None; graph.vertex_count()];
        for (name, p) in coords {
            let ix = graph
                .vertex_ix(name)
                .ok_or_else(|| FrameworkError::UnknownVertex((*name).to_owned()))?;
            table[ix as usize] = Some(*p);
        }
        let coords = table
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                p.ok_or_else(|| {
                    FrameworkError::MissingCoordinates(graph.vertex_name(i as u32).to_owned())
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Framework::new(graph, coords)
    }

    pub fn graph(&self) -> &SymmetricGraph {
        &self.graph
    }

    pub fn position(&self, u: u32) -> [f64; 2] {
        self.coords[u as usize]
    }

    pub fn coords(&self) -> &[[f64; 2]] {
        &self.coords
    }

    /// Induced length of an edge.
    pub fn edge_length(&self, e: usize) -> f64 {
        let (u, v) = self.graph.edge(e);
        dist(self.coords[u as usize], self.coords[v as usize])
    }

    /// Largest deviation from mirror symmetry over all vertices.
    pub fn symmetry_residual(&self) -> f64 {
        (0..self.graph.vertex_count() as u32)
            .map(|u| {
                let img = self.graph.sigma_vertex(u);
                dist(self.coords[img as usize], mirror_point(self.coords[u as usize]))
            })
            .fold(0.0, f64::max)
    }

    pub fn is_reflection_symmetric(&self, tol: f64) -> bool {
        self.symmetry_residual() <= tol
    }

    /// Translates every vertex by the given offset.
    pub fn translated(&self, offset: [f64; 2]) -> Framework {
        Framework {
            graph: self.graph.clone(),
            coords: self.coords.iter().map(|p| [p[0] + offset[0], p[1] + offset[1]]).collect(),
        }
    }
}

pub fn dist(p: [f64; 2], q: [f64; 2]) -> f64 {
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
}

/// Partition of the edge set into angle-preserving classes: the equivalence
/// closure of sharing a triangle and of being opposite in a 4-cycle subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApcPartition {
    /// Sorted edge indices per class; classes ordered by smallest edge.
    pub classes: Vec<Vec<usize>>,
    /// Image class of each class under the reflection.
    pub sigma_class: Vec<usize>,
}

impl ApcPartition {
    pub fn class_of(&self, e: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.binary_search(&e).is_ok())
            .expect("classes partition the edge set")
    }

    pub fn is_invariant(&self, class: usize) -> bool {
        self.sigma_class[class] == class
    }
}

/// All 4-cycles as vertex quadruples (a, b, c, d) along the cycle, with their
/// two chords reported for the induced check.
fn four_cycles(g: &SymmetricGraph) -> Vec<([u32; 4], bool)> {
    let n = g.vertex_count() as u32;
    let mut out = Vec::new();
    // diagonal pair (a, c) with two common neighbours b, d
    for a in 0..n {
        for c in a + 1..n {
            let nbrs_a: BTreeSet<u32> = g.neighbours(a).map(|(v, _)| v).collect();
            let common: Vec<u32> = g
                .neighbours(c)
                .map(|(v, _)| v)
                .filter(|v| nbrs_a.contains(v))
                .collect();
            for (i, &b) in common.iter().enumerate() {
                for &d in &common[i + 1..] {
                    // count each 4-cycle once: anchor on its smaller diagonal
                    if b.min(d) < a {
                        continue;
                    }
                    let chordless =
                        g.edge_between(a, c).is_none() && g.edge_between(b, d).is_none();
                    out.push(([a, b, c, d], chordless));
                }
            }
        }
    }
    out
}

/// Computes the angle-preserving classes of the graph. Pure graph
/// computation; the realisation plays no role.
pub fn angle_preserving_classes(g: &SymmetricGraph) -> ApcPartition {
    let mut dsu = Dsu::new(g.edge_count());
    for t in crate::colourings::enumerate_triangles(g) {
        dsu.union(t[0], t[1]);
        dsu.union(t[0], t[2]);
    }
    for ([a, b, c, d], _) in four_cycles(g) {
        let ab = g.edge_between(a, b).unwrap();
        let bc = g.edge_between(b, c).unwrap();
        let cd = g.edge_between(c, d).unwrap();
        let da = g.edge_between(d, a).unwrap();
        dsu.union(ab, cd);
        dsu.union(bc, da);
    }
    let classes: Vec<Vec<usize>> = dsu
        .into_components()
        .into_iter()
        .map(|c| c.into_iter().map(|e| e as usize).collect())
        .collect();
    let mut class_of = vec![usize::MAX; g.edge_count()];
    for (i, class) in classes.iter().enumerate() {
        for &e in class {
            class_of[e] = i;
        }
    }
    let sigma_class = classes
        .iter()
        .map(|class| class_of[g.sigma_edge(class[0])])
        .collect();
    ApcPartition { classes, sigma_class }
}

/// Failure modes of the walk-independence test.
#[derive(Debug, Clone, PartialEq)]
pub enum WalkIndepVerdict {
    WalkIndependent,
    NotInjective(u32, u32),
    /// Induced 4-cycle that is not a parallelogram (or is collinear).
    DegenerateFourCycle([u32; 4]),
    /// Fundamental cycle and class whose signed vector sum does not vanish.
    ClassSumNonzero { cycle: Vec<u32>, class: usize },
}

impl WalkIndepVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, WalkIndepVerdict::WalkIndependent)
    }
}

/// Checks injectivity, the induced-4-cycle parallelogram condition, and the
/// per-class cycle-sum criterion on a fundamental cycle basis. Per-class walk
/// sums are walk-invariant exactly when they vanish around a cycle basis.
pub fn is_walk_independent(fw: &Framework, tol: f64) -> WalkIndepVerdict {
    let g = fw.graph();
    let n = g.vertex_count() as u32;
    for u in 0..n {
        for v in u + 1..n {
            if dist(fw.position(u), fw.position(v)) <= tol {
                return WalkIndepVerdict::NotInjective(u, v);
            }
        }
    }
    for (quad, chordless) in four_cycles(g) {
        if !chordless {
            continue;
        }
        let [a, b, c, d] = quad;
        let (pa, pb, pc, pd) =
            (fw.position(a), fw.position(b), fw.position(c), fw.position(d));
        let sum = [pa[0] - pb[0] + pc[0] - pd[0], pa[1] - pb[1] + pc[1] - pd[1]];
        let ab = [pb[0] - pa[0], pb[1] - pa[1]];
        let ad = [pd[0] - pa[0], pd[1] - pa[1]];
        let cross = ab[0] * ad[1] - ab[1] * ad[0];
        let scale = norm(ab).max(norm(ad)).max(1.0);
        if sum[0].abs() > tol || sum[1].abs() > tol || cross.abs() <= tol * scale * scale {
            return WalkIndepVerdict::DegenerateFourCycle(quad);
        }
    }
    let apcs = angle_preserving_classes(g);
    let mut class_of = vec![usize::MAX; g.edge_count()];
    for (i, class) in apcs.classes.iter().enumerate() {
        for &e in class {
            class_of[e] = i;
        }
    }
    for cycle in g.cycle_basis() {
        let mut sums = vec![[0.0f64; 2]; apcs.classes.len()];
        for i in 0..cycle.len() {
            let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let e = g.edge_between(u, v).unwrap();
            let (pu, pv) = (fw.position(u), fw.position(v));
            let s = &mut sums[class_of[e]];
            s[0] += pv[0] - pu[0];
            s[1] += pv[1] - pu[1];
        }
        for (class, s) in sums.iter().enumerate() {
            if s[0].abs() > tol || s[1].abs() > tol {
                return WalkIndepVerdict::ClassSumNonzero { cycle, class };
            }
        }
    }
    WalkIndepVerdict::WalkIndependent
}

/// Per-colour edge-vector accumulation from `root` along a spanning tree.
/// Well-defined on walk-independent frameworks with class-monochromatic
/// colourings.
pub fn colour_accumulation(
    fw: &Framework,
    delta: &ThreeColouring,
    root: u32,
    colour: Colour,
) -> Vec<[f64; 2]> {
    let g = fw.graph();
    let mut acc = vec![[f64::NAN; 2]; g.vertex_count()];
    acc[root as usize] = [0.0, 0.0];
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for (v, e) in g.neighbours(u) {
            if !acc[v as usize][0].is_nan() {
                continue;
            }
            let mut next = acc[u as usize];
            if delta.get(e) == colour {
                let (pu, pv) = (fw.position(u), fw.position(v));
                next[0] += pv[0] - pu[0];
                next[1] += pv[1] - pu[1];
            }
            acc[v as usize] = next;
            stack.push(v);
        }
    }
    acc
}

/// First non-invariant angle-preserving class in canonical order, if any.
pub fn noninvariant_apc(g: &SymmetricGraph) -> Option<usize> {
    let apcs = angle_preserving_classes(g);
    (0..apcs.classes.len()).find(|&c| !apcs.is_invariant(c))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApcColouringError {
    #[error("class {0} is invariant under the reflection")]
    ClassInvariant(usize),
}

/// Colours a non-invariant class red, its image blue and everything else
/// gold.
pub fn cartesian_from_apc(
    g: &SymmetricGraph,
    apcs: &ApcPartition,
    class: usize,
) -> Result<ThreeColouring, ApcColouringError> {
    if apcs.is_invariant(class) {
        return Err(ApcColouringError::ClassInvariant(class));
    }
    let mirror = apcs.sigma_class[class];
    let mut colours = vec![Colour::Gold; g.edge_count()];
    for &e in &apcs.classes[class] {
        colours[e] = Colour::Red;
    }
    for &e in &apcs.classes[mirror] {
        colours[e] = Colour::Blue;
    }
    Ok(ThreeColouring(colours))
}

/// Checks the class-pattern characterisation: both red and blue occur, every
/// class is monochromatic, invariant classes are gold, and paired classes are
/// either both gold or one red one blue.
pub fn apc_pattern_check(_g: &SymmetricGraph, delta: &ThreeColouring, apcs: &ApcPartition) -> bool {
    if !delta.0.contains(&Colour::Red) || !delta.0.contains(&Colour::Blue) {
        return false;
    }
    for (c, class) in apcs.classes.iter().enumerate() {
        let colour = delta.get(class[0]);
        if class.iter().any(|&e| delta.get(e) != colour) {
            return false;
        }
        let mirror = apcs.sigma_class[c];
        let mirror_colour = delta.get(apcs.classes[mirror][0]);
        if apcs.is_invariant(c) {
            if colour != Colour::Gold {
                return false;
            }
        } else if mirror_colour != colour.swapped() {
            return false;
        }
    }
    true
}

/// Outcome of the flexibility decision for triangle-and-parallelogram
/// frameworks.
#[derive(Debug, Clone, PartialEq)]
pub enum TpVerdict {
    Flexible { colouring: ThreeColouring, class: usize },
    Rigid { reason: &'static str },
    NotApplicable { verdict: WalkIndepVerdict },
}

/// Decides reflection-symmetric flexibility of a walk-independent symmetric
/// framework via its angle-preserving classes. The caller synthesizes the
/// motion from the returned colouring.
pub fn decide_tp_flexibility(fw: &Framework, tol: f64) -> TpVerdict {
    let walk = is_walk_independent(fw, tol);
    if !walk.is_ok() {
        return TpVerdict::NotApplicable { verdict: walk };
    }
    let g = fw.graph();
    let apcs = angle_preserving_classes(g);
    match (0..apcs.classes.len()).find(|&c| !apcs.is_invariant(c)) {
        Some(class) => {
            let colouring =
                cartesian_from_apc(g, &apcs, class).expect("class checked non-invariant");
            debug_assert!(is_pseudo_rs(g, &colouring).is_ok());
            debug_assert!(is_cartesian(g, &colouring).is_cartesian());
            TpVerdict::Flexible { colouring, class }
        }
        None => TpVerdict::Rigid { reason: "no non-invariant angle-preserving class" },
    }
}

fn norm(v: [f64; 2]) -> f64 {
    (v[0] * v[0] + v[1] * v[1]).sqrt()
}

/// Shape parameters for a mirror-symmetric grid of parallelogram cells, `m`
/// columns by `n` rows, with optional braces and apex triangles.
#[derive(Debug, Clone)]
pub struct StripSpec {
    pub m: u32,
    pub n: u32,
    /// Cells (column, row) carrying a bracing diagonal; mirrored cells are
    /// braced automatically.
    pub braces: Vec<(u32, u32)>,
    /// Columns carrying an apex triangle on their top edge; mirrored columns
    /// are included automatically.
    pub triangles: Vec<u32>,
    /// Seeds the column offsets and row heights.
    pub seed: u64,
}

impl StripSpec {
    pub fn plain(m: u32, n: u32, seed: u64) -> StripSpec {
        StripSpec { m, n, braces: Vec::new(), triangles: Vec::new(), seed }
    }
}

/// Splitmix-style generator; deterministic across platforms.
#[derive(Debug, Clone)]
pub struct SeedSequence(pub u64);

impl SeedSequence {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn next_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_unit()
    }
}

/// Builds the mirror-symmetric parallelogram patch described by `spec`.
/// Vertices are named `v{i}_{j}`; braces add a diagonal per cell and
/// triangles add an apex `t{i}` over the top edge of column `i`. The mirror
/// sends column `i` to column `m - i`.
pub fn strip_framework(spec: &StripSpec) -> Framework {
    let m = spec.m;
    let n = spec.n;
    assert!(m >= 1 && n >= 1, "patch must have at least one cell");
    let mut rng = SeedSequence(spec.seed ^ 0x5712_f1e3);
    // column x positions, mirror-symmetric: x[i] = -x[m-i]
    let mut xs = vec![0.0f64; (m + 1) as usize];
    for i in 0..=(m / 2) {
        let x = if 2 * i == m { 0.0 } else { (m as f64) / 2.0 - i as f64 + rng.next_range(-0.2, 0.2) };
        xs[(m - i) as usize] = x;
        xs[i as usize] = -x;
    }
    // per-column vertical offsets, mirror-symmetric, and row heights
    let mut lift = vec![0.0f64; (m + 1) as usize];
    for i in 0..=(m / 2) {
        let f = rng.next_range(-0.3, 0.3);
        lift[i as usize] = f;
        lift[(m - i) as usize] = f;
    }
    let mut ys = vec![0.0f64; (n + 1) as usize];
    for j in 1..=n {
        ys[j as usize] = ys[(j - 1) as usize] + rng.next_range(0.8, 1.4);
    }

    let name = |i: u32, j: u32| format!("v{i}_{j}");
    let mut vertices: Vec<String> = Vec::new();
    let mut coords: Vec<(String, [f64; 2])> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut sigma: Vec<(String, String)> = Vec::new();
    for i in 0..=m {
        for j in 0..=n {
            let v = name(i, j);
            vertices.push(v.clone());
            coords.push((v.clone(), [xs[i as usize], ys[j as usize] + lift[i as usize]]));
            sigma.push((v, name(m - i, j)));
            if i < m {
                edges.push((name(i, j), name(i + 1, j)));
            }
            if j < n {
                edges.push((name(i, j), name(i, j + 1)));
            }
        }
    }
    let mut braced: BTreeSet<(u32, u32)> = BTreeSet::new();
    for &(i, j) in &spec.braces {
        assert!(i < m && j < n, "brace outside the patch");
        braced.insert((i, j));
        braced.insert((m - 1 - i, j));
    }
    for &(i, j) in &braced {
        // mirror the diagonal direction so the brace set stays symmetric; a
        // cell astride the axis maps onto itself and needs both diagonals
        if i == m - 1 - i {
            edges.push((name(i, j), name(i + 1, j + 1)));
            edges.push((name(i + 1, j), name(i, j + 1)));
        } else if i < m - 1 - i {
            edges.push((name(i, j), name(i + 1, j + 1)));
        } else {
            edges.push((name(i + 1, j), name(i, j + 1)));
        }
    }
    let mut apexed: BTreeSet<u32> = BTreeSet::new();
    for &i in &spec.triangles {
        assert!(i < m, "triangle outside the patch");
        apexed.insert(i);
        apexed.insert(m - 1 - i);
    }
    for &i in &apexed {
        let t = format!("t{i}");
        vertices.push(t.clone());
        let base_mid = (xs[i as usize] + xs[(i + 1) as usize]) / 2.0;
        let base_lift = (lift[i as usize] + lift[(i + 1) as usize]) / 2.0;
        coords.push((t.clone(), [base_mid, ys[n as usize] + base_lift + 0.9]));
        edges.push((t.clone(), name(i, n)));
        edges.push((t.clone(), name(i + 1, n)));
        sigma.push((t, format!("t{}", m - 1 - i)));
    }
    let graph = SymmetricGraph::from_pairs(&vertices, &edges, &sigma)
        .expect("generated patch is symmetric by construction");
    let named: Vec<(&str, [f64; 2])> = coords.iter().map(|(n, p)| (n.as_str(), *p)).collect();
    Framework::from_named(graph, &named).expect("generated coordinates are non-degenerate")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colourings::CartesianVerdict;
    use crate::fixtures;

    #[test]
    fn c4_has_two_classes() {
        let g = fixtures::c4_antipodal();
        let apcs = angle_preserving_classes(&g);
        assert_eq!(apcs.classes.len(), 2);
        // both are invariant under the antipodal reflection
        assert!(noninvariant_apc(&g).is_none());
        let axial = fixtures::c4_axial();
        assert!(noninvariant_apc(&axial).is_none());
    }

    #[test]
    fn k3_is_one_class() {
        let g = fixtures::k3_mirror();
        assert_eq!(angle_preserving_classes(&g).classes.len(), 1);
    }

    #[test]
    fn strip_two_by_one_classes() {
        // two parallelogram cells sharing a vertical edge: the three
        // verticals merge into one class, each cell's horizontal pair stays
        // its own class
        let fw = strip_framework(&StripSpec::plain(2, 1, 7));
        let g = fw.graph();
        let apcs = angle_preserving_classes(g);
        let mut sizes: Vec<usize> = apcs.classes.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 3]);
        // the two horizontal classes are swapped by the mirror
        let vertical_class = apcs.classes.iter().position(|c| c.len() == 3).unwrap();
        assert!(apcs.is_invariant(vertical_class));
        assert_eq!(
            (0..apcs.classes.len()).filter(|&c| !apcs.is_invariant(c)).count(),
            2
        );
    }

    #[test]
    fn square_framework_is_walk_independent() {
        let g = SymmetricGraph::from_pairs(
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
        assert!(fw.is_reflection_symmetric(1e-12));
        assert!(is_walk_independent(&fw, 1e-9).is_ok());
        // a trapezoid realisation fails on the 4-cycle
        let trap = Framework::from_named(
            g,
            &[("1", [-1.0, 0.0]), ("2", [0.0, 0.0]), ("3", [1.0, 0.0]), ("4", [0.0, 1.0])],
        )
        .unwrap();
        assert!(matches!(
            is_walk_independent(&trap, 1e-9),
            WalkIndepVerdict::DegenerateFourCycle(_) | WalkIndepVerdict::NotInjective(..)
        ));
    }

    #[test]
    fn fig2_framework_is_walk_independent() {
        let fw = fixtures::fig2_framework();
        assert!(fw.is_reflection_symmetric(1e-12));
        assert!(is_walk_independent(&fw, 1e-9).is_ok());
        // its classes are exactly the three colour classes of the Cartesian
        // colouring
        let apcs = angle_preserving_classes(fw.graph());
        assert_eq!(apcs.classes.len(), 3);
        let noninv = noninvariant_apc(fw.graph()).unwrap();
        let delta = cartesian_from_apc(fw.graph(), &apcs, noninv).unwrap();
        assert!(is_pseudo_rs(fw.graph(), &delta).is_ok());
        assert!(matches!(is_cartesian(fw.graph(), &delta), CartesianVerdict::Cartesian));
        assert!(apc_pattern_check(fw.graph(), &delta, &apcs));
    }

    #[test]
    fn per_class_walk_sums_agree_between_random_walk_pairs() {
        let fw = strip_framework(&StripSpec::plain(3, 2, 11));
        let g = fw.graph();
        let apcs = angle_preserving_classes(g);
        let mut class_of = vec![usize::MAX; g.edge_count()];
        for (i, class) in apcs.classes.iter().enumerate() {
            for &e in class {
                class_of[e] = i;
            }
        }
        assert!(is_walk_independent(&fw, 1e-9).is_ok());
        let mut rng = SeedSequence(3);
        let n = g.vertex_count() as u32;
        for _ in 0..40 {
            let a = (rng.next_u64() % n as u64) as u32;
            let b = (rng.next_u64() % n as u64) as u32;
            if a == b {
                continue;
            }
            let paths = g.simple_paths(a, b, |_| false, 8);
            for pair in paths.paths.windows(2) {
                for class in 0..apcs.classes.len() {
                    let sum = |path: &Vec<u32>| -> [f64; 2] {
                        let mut s = [0.0, 0.0];
                        for w in path.windows(2) {
                            let e = g.edge_between(w[0], w[1]).unwrap();
                            if class_of[e] == class {
                                let (p, q) = (fw.position(w[0]), fw.position(w[1]));
                                s[0] += q[0] - p[0];
                                s[1] += q[1] - p[1];
                            }
                        }
                        s
                    };
                    let (s0, s1) = (sum(&pair[0]), sum(&pair[1]));
                    assert!((s0[0] - s1[0]).abs() < 1e-9 && (s0[1] - s1[1]).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn apc_pattern_matches_cartesian_and_pseudo() {
        // cross-check both directions of the characterisation on the strip
        let fw = strip_framework(&StripSpec::plain(2, 1, 5));
        let g = fw.graph();
        let apcs = angle_preserving_classes(g);
        let all = crate::colourings::enumerate_pseudo_rs(
            g,
            &crate::colourings::EnumerateOptions::default(),
            &crate::colourings::Budget::default(),
        )
        .unwrap();
        let mut seen_pattern = 0;
        for delta in &all {
            let pattern = apc_pattern_check(g, delta, &apcs);
            let semantic = is_cartesian(g, delta).is_cartesian();
            assert_eq!(pattern, semantic, "pattern and connectivity reading must agree");
            if pattern {
                seen_pattern += 1;
            }
        }
        assert!(seen_pattern > 0);
        // and non-pseudo colourings fail the pattern check for want of a
        // missing colour
        let all_gold = ThreeColouring(vec![Colour::Gold; g.edge_count()]);
        assert!(!apc_pattern_check(g, &all_gold, &apcs));
    }

    #[test]
    fn braced_strip_is_rigid() {
        let mut spec = StripSpec::plain(2, 1, 9);
        spec.braces = vec![(0, 0), (1, 0)];
        let fw = strip_framework(&spec);
        assert!(is_walk_independent(&fw, 1e-9).is_ok());
        match decide_tp_flexibility(&fw, 1e-9) {
            TpVerdict::Rigid { .. } => {}
            other => panic!("fully braced strip should be rigid, got {other:?}"),
        }
    }

    #[test]
    fn plain_strip_is_flexible() {
        let fw = strip_framework(&StripSpec::plain(2, 1, 13));
        match decide_tp_flexibility(&fw, 1e-9) {
            TpVerdict::Flexible { colouring, .. } => {
                assert!(is_pseudo_rs(fw.graph(), &colouring).is_ok());
            }
            other => panic!("plain strip should flex, got {other:?}"),
        }
    }

    #[test]
    fn non_parallelogram_is_not_applicable() {
        let g = SymmetricGraph::from_pairs(
            &["1", "2", "3", "4"],
            &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")],
            &[("1", "3")],
        )
        .unwrap();
        let trap = Framework::from_named(
            g,
            &[("1", [-1.0, 0.4]), ("2", [0.0, 0.0]), ("3", [1.0, 0.4]), ("4", [0.0, 1.7])],
        )
        .unwrap();
        assert!(matches!(decide_tp_flexibility(&trap, 1e-9), TpVerdict::NotApplicable { .. }));
    }

    #[test]
    fn triangle_apexes_merge_their_column() {
        let mut spec = StripSpec::plain(2, 1, 21);
        spec.triangles = vec![0];
        let fw = strip_framework(&spec);
        let g = fw.graph();
        assert!(g.vertex_ix("t0").is_some() && g.vertex_ix("t1").is_some());
        assert!(is_walk_independent(&fw, 1e-9).is_ok());
        // triangles keep the patch flexible here: the verticals stay their
        // own class
        assert!(matches!(decide_tp_flexibility(&fw, 1e-9), TpVerdict::Flexible { .. }));
    }
}
