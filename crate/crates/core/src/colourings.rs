//! Two- and three-colour edge colourings: definition-level checks, exhaustive
//! enumeration over reflection orbits, certificates for almost red-blue
//! cycles, the Cartesian condition, and the doubling construction that lifts
//! a two-colouring of a plain graph to a three-colouring of its glued double.

use crate::graph_core::{glue_double, Graph, SymmetricGraph};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwoColour {
    Red,
    Blue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Red,
    Blue,
    Gold,
}

impl Colour {
    pub fn name(self) -> &'static str {
        match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
            Colour::Gold => "gold",
        }
    }

    pub fn parse(s: &str) -> Option<Colour> {
        match s {
            "red" => Some(Colour::Red),
            "blue" => Some(Colour::Blue),
            "gold" => Some(Colour::Gold),
            _ => None,
        }
    }

    /// Swaps red and blue, fixes gold.
    pub fn swapped(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
            Colour::Gold => Colour::Gold,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Total red/blue map over the edge set, indexed like `Graph::edges`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoColouring(pub Vec<TwoColour>);

/// Total red/blue/gold map over the edge set, indexed like `Graph::edges`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThreeColouring(pub Vec<Colour>);

impl ThreeColouring {
    pub fn get(&self, e: usize) -> Colour {
        self.0[e]
    }

    pub fn gold_edges(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &c)| c == Colour::Gold).map(|(e, _)| e).collect()
    }

    /// Replaces gold by the given colour.
    pub fn substitute_gold(&self, with: TwoColour) -> TwoColouring {
        TwoColouring(
            self.0
                .iter()
                .map(|&c| match c {
                    Colour::Red => TwoColour::Red,
                    Colour::Blue => TwoColour::Blue,
                    Colour::Gold => with,
                })
                .collect(),
        )
    }

    /// Renders the canonical text form, one `u-v: colour` line per edge.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for e in 0..g.edge_count() {
            out.push_str(&g.edge_key(e));
            out.push_str(": ");
            out.push_str(self.0[e].name());
            out.push('\n');
        }
        out
    }
}

/// Outcome of the no-almost-cycle check for a two-colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NacVerdict {
    Nac,
    NotSurjective,
    /// A cycle carrying exactly one edge of one of the colours.
    AlmostCycle(Vec<u32>),
}

impl NacVerdict {
    pub fn is_nac(&self) -> bool {
        matches!(self, NacVerdict::Nac)
    }
}

/// Checks the no-almost-cycle condition via the component criterion: the
/// colouring fails iff some edge has both endpoints inside one component of
/// the opposite colour's subgraph. On failure the witness cycle is the
/// offending edge closed through an opposite-coloured path.
pub fn is_nac(g: &Graph, delta: &TwoColouring) -> NacVerdict {
    assert_eq!(delta.0.len(), g.edge_count(), "colouring must be total");
    let mut reds = 0usize;
    for &c in &delta.0 {
        if c == TwoColour::Red {
            reds += 1;
        }
    }
    if reds == 0 || reds == delta.0.len() {
        return NacVerdict::NotSurjective;
    }
    for want in [TwoColour::Red, TwoColour::Blue] {
        let opposite = g.component_labels(|e| delta.0[e] != want);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if delta.0[e] == want && opposite[u as usize] == opposite[v as usize] {
                // witness: path u..v in the opposite subgraph, closed by e
                let path = g
                    .simple_paths(u, v, |f| delta.0[f] == want, 1)
                    .paths
                    .into_iter()
                    .next()
                    .expect("component criterion guarantees a path");
                return NacVerdict::AlmostCycle(path);
            }
        }
    }
    NacVerdict::Nac
}

/// All no-almost-cycle two-colourings, in ascending order of the colour
/// vector; optionally one representative per global red/blue swap.
pub fn enumerate_nac(
    g: &Graph,
    quotient_swap: bool,
    budget: &Budget,
) -> Result<Vec<TwoColouring>, EnumerationError> {
    let m = g.edge_count();
    if m > budget.max_nac_edges {
        return Err(EnumerationError::BudgetExceeded {
            needed: m,
            allowed: budget.max_nac_edges,
            what: "edges in two-colouring enumeration",
        });
    }
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << m) {
        let delta = TwoColouring(
            (0..m)
                .map(|e| if bits >> e & 1 == 1 { TwoColour::Blue } else { TwoColour::Red })
                .collect(),
        );
        if quotient_swap && delta.0.first() == Some(&TwoColour::Blue) {
            continue;
        }
        if is_nac(g, &delta).is_nac() {
            out.push(delta);
        }
    }
    out.sort();
    Ok(out)
}

/// Reasons a three-colouring fails the mirrored-colouring conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PseudoRsFailure {
    MissingRed,
    MissingBlue,
    GoldToBlueNotNac(NacVerdict),
    GoldToRedNotNac(NacVerdict),
    /// Edge (by index) whose image does not carry the swapped colour.
    SymmetryViolated(usize),
}

/// Checks the four mirrored-colouring conditions. The two substitution checks
/// are equivalent given the symmetry condition; both run anyway as a
/// self-consistency assertion.
pub fn is_pseudo_rs(g: &SymmetricGraph, delta: &ThreeColouring) -> Result<(), PseudoRsFailure> {
    assert_eq!(delta.0.len(), g.edge_count(), "colouring must be total");
    for (e, &c) in delta.0.iter().enumerate() {
        let want = c.swapped();
        if delta.0[g.sigma_edge(e)] != want {
            return Err(PseudoRsFailure::SymmetryViolated(e));
        }
    }
    if !delta.0.contains(&Colour::Red) {
        return Err(PseudoRsFailure::MissingRed);
    }
    if !delta.0.contains(&Colour::Blue) {
        return Err(PseudoRsFailure::MissingBlue);
    }
    let to_blue = is_nac(g, &delta.substitute_gold(TwoColour::Blue));
    let to_red = is_nac(g, &delta.substitute_gold(TwoColour::Red));
    debug_assert_eq!(
        to_blue.is_nac(),
        to_red.is_nac(),
        "gold substitutions must agree once the symmetry condition holds"
    );
    if !to_blue.is_nac() {
        return Err(PseudoRsFailure::GoldToBlueNotNac(to_blue));
    }
    if !to_red.is_nac() {
        return Err(PseudoRsFailure::GoldToRedNotNac(to_red));
    }
    Ok(())
}

/// The conjugate colouring `delta . sigma` (colour of the mirrored edge).
pub fn conjugate(g: &SymmetricGraph, delta: &ThreeColouring) -> ThreeColouring {
    ThreeColouring((0..g.edge_count()).map(|e| delta.0[g.sigma_edge(e)]).collect())
}

/// A cycle as a closed vertex sequence in canonical rotation.
pub type Cycle = Vec<u32>;

fn canonical_cycle(mut c: Cycle) -> Cycle {
    let min_pos = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(min_pos);
    if c.len() > 2 && c[1] > c[c.len() - 1] {
        c[1..].reverse();
    }
    c
}

/// Edge indices around a closed vertex sequence.
pub fn cycle_edges(g: &Graph, cycle: &[u32]) -> Vec<usize> {
    (0..cycle.len())
        .map(|i| {
            g.edge_between(cycle[i], cycle[(i + 1) % cycle.len()])
                .expect("cycle must follow edges")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostRedBlueCycles {
    pub cycles: Vec<Cycle>,
    pub truncated: bool,
}

/// All cycles with exactly one gold edge: for each gold edge the simple paths
/// between its endpoints inside the red-blue subgraph, closed by the edge.
/// Enumeration stops at `cap` cycles and flags truncation.
pub fn almost_red_blue_cycles(
    g: &SymmetricGraph,
    delta: &ThreeColouring,
    cap: usize,
) -> AlmostRedBlueCycles {
    let mut seen = BTreeSet::new();
    let mut cycles = Vec::new();
    let mut truncated = false;
    for e in delta.gold_edges() {
        let (u, v) = g.edge(e);
        let remaining = cap - cycles.len();
        let found = g.simple_paths(u, v, |f| delta.0[f] == Colour::Gold, remaining);
        truncated |= found.truncated;
        for path in found.paths {
            let c = canonical_cycle(path);
            if seen.insert(c.clone()) {
                cycles.push(c);
            }
        }
        if cycles.len() >= cap {
            truncated = true;
            break;
        }
    }
    cycles.sort();
    AlmostRedBlueCycles { cycles, truncated }
}

/// A certificate for one almost red-blue cycle: a second colouring that
/// separates two same-coloured edges of the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub colouring: ThreeColouring,
    pub edge_pair: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RsVerdict {
    NotPseudoRs(PseudoRsFailure),
    /// A witnessed almost red-blue cycle with no certificate in the pool.
    PseudoRsOnly(Cycle),
    RsNoCycle,
    RsCertified(Vec<(Cycle, Certificate)>),
    UnknownTruncated,
}

impl RsVerdict {
    pub fn is_rs(&self) -> bool {
        matches!(self, RsVerdict::RsNoCycle | RsVerdict::RsCertified(_))
    }
}

fn find_certificate(
    g: &SymmetricGraph,
    delta: &ThreeColouring,
    cycle: &Cycle,
    pool: &[ThreeColouring],
) -> Option<Certificate> {
    let edges = cycle_edges(g, cycle);
    let conj = conjugate(g, delta);
    let candidates = std::iter::once(&conj).chain(pool.iter());
    for cand in candidates {
        if cand == delta {
            continue;
        }
        for (i, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[i + 1..] {
                if delta.0[e1] == delta.0[e2] && cand.0[e1] != cand.0[e2] {
                    return Some(Certificate { colouring: cand.clone(), edge_pair: (e1, e2) });
                }
            }
        }
    }
    None
}

/// Classifies a three-colouring: not pseudo / pseudo only / certified / no
/// almost red-blue cycle at all. Certificates are searched in the conjugate
/// first, then in `pool`; when `pool` is `None` the full orbit enumeration of
/// the graph is used.
pub fn classify_rs(
    g: &SymmetricGraph,
    delta: &ThreeColouring,
    pool: Option<&[ThreeColouring]>,
    budget: &Budget,
) -> Result<RsVerdict, EnumerationError> {
    if let Err(reason) = is_pseudo_rs(g, delta) {
        return Ok(RsVerdict::NotPseudoRs(reason));
    }
    let found = almost_red_blue_cycles(g, delta, budget.cycle_cap);
    if found.cycles.is_empty() && !found.truncated {
        return Ok(RsVerdict::RsNoCycle);
    }
    let owned_pool;
    let pool: &[ThreeColouring] = match pool {
        Some(p) => p,
        None => {
            owned_pool = enumerate_pseudo_rs(g, &EnumerateOptions::default(), budget)?;
            &owned_pool
        }
    };
    let mut certs = Vec::new();
    for cycle in &found.cycles {
        match find_certificate(g, delta, cycle, pool) {
            Some(cert) => certs.push((cycle.clone(), cert)),
            None => return Ok(RsVerdict::PseudoRsOnly(cycle.clone())),
        }
    }
    if found.truncated {
        return Ok(RsVerdict::UnknownTruncated);
    }
    Ok(RsVerdict::RsCertified(certs))
}

/// Search-space budget and caps shared across enumerations.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Maximum number of non-invariant edge orbits for three-colouring search.
    pub max_orbits: usize,
    /// Maximum edge count for two-colouring enumeration.
    pub max_nac_edges: usize,
    /// Cap on almost red-blue cycle (and path) enumeration.
    pub cycle_cap: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { max_orbits: 24, max_nac_edges: 24, cycle_cap: 10_000 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("search space too large: {needed} {what} exceeds budget {allowed}")]
    BudgetExceeded { needed: usize, allowed: usize, what: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Plain scan over all orbit assignments.
    Reference,
    /// Prunes assignment prefixes that already break a fully-decided triangle
    /// (triangles must be monochromatic). Must agree with `Reference` exactly.
    Pruned,
}

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    /// Keep the lexicographically smaller of each conjugate pair.
    pub up_to_conjugation: bool,
    /// Keep only colourings classified as certified or cycle-free.
    pub rs_only: bool,
    pub mode: SearchMode,
}

impl Default for EnumerateOptions {
    fn default() -> EnumerateOptions {
        EnumerateOptions { up_to_conjugation: false, rs_only: false, mode: SearchMode::Reference }
    }
}

/// Exhaustive scan over orbit assignments: each non-invariant orbit takes
/// (red, blue), (blue, red) or (gold, gold); invariant edges are forced gold.
/// Results are filtered by `is_pseudo_rs` and returned in ascending order of
/// the colour vector.
pub fn enumerate_pseudo_rs(
    g: &SymmetricGraph,
    opts: &EnumerateOptions,
    budget: &Budget,
) -> Result<Vec<ThreeColouring>, EnumerationError> {
    let orbits = g.edge_orbits();
    let free: Vec<_> = orbits.iter().filter(|o| !o.is_invariant).collect();
    if free.len() > budget.max_orbits {
        return Err(EnumerationError::BudgetExceeded {
            needed: free.len(),
            allowed: budget.max_orbits,
            what: "non-invariant edge orbits",
        });
    }

    // triangle list for the pruned mode: per orbit position, triangles whose
    // last undecided edge lies in that orbit
    let triangles = if opts.mode == SearchMode::Pruned { enumerate_triangles(g) } else { Vec::new() };
    let mut orbit_of_edge = vec![usize::MAX; g.edge_count()];
    for (i, o) in free.iter().enumerate() {
        orbit_of_edge[o.representative] = i;
        orbit_of_edge[o.mirror] = i;
    }
    let mut tri_ready: Vec<Vec<[usize; 3]>> = vec![Vec::new(); free.len() + 1];
    for t in &triangles {
        let last = t
            .iter()
            .map(|&e| orbit_of_edge[e])
            .filter(|&i| i != usize::MAX)
            .max()
            .map(|i| i + 1)
            .unwrap_or(0);
        tri_ready[last].push(*t);
    }

    let mut out = Vec::new();
    if free.is_empty() {
        // only the all-gold map remains and it never carries red or blue
        return Ok(out);
    }
    let mut colours = vec![Colour::Gold; g.edge_count()];
    let mut stack: Vec<(usize, u8)> = vec![(0, 0)];
    while let Some((level, choice)) = stack.pop() {
        if choice >= 3 {
            continue;
        }
        stack.push((level, choice + 1));
        let (rep_colour, mirror_colour) = match choice {
            0 => (Colour::Red, Colour::Blue),
            1 => (Colour::Blue, Colour::Red),
            _ => (Colour::Gold, Colour::Gold),
        };
        let orbit = free[level];
        colours[orbit.representative] = rep_colour;
        colours[orbit.mirror] = mirror_colour;
        if opts.mode == SearchMode::Pruned {
            // triangles are monochromatic in every valid colouring; drop the
            // subtree as soon as a fully-decided triangle mixes colours
            let violated = tri_ready[level + 1].iter().any(|t| {
                colours[t[0]] != colours[t[1]] || colours[t[0]] != colours[t[2]]
            });
            if violated {
                continue;
            }
        }
        if level + 1 == free.len() {
            let delta = ThreeColouring(colours.clone());
            if is_pseudo_rs(g, &delta).is_ok() {
                out.push(delta);
            }
        } else {
            stack.push((level + 1, 0));
        }
    }

    out.sort();
    if opts.rs_only {
        let pool = out.clone();
        let mut kept = Vec::new();
        for delta in out {
            if classify_rs(g, &delta, Some(&pool), budget)?.is_rs() {
                kept.push(delta);
            }
        }
        out = kept;
    }
    if opts.up_to_conjugation {
        out.retain(|delta| *delta <= conjugate(g, delta));
    }
    Ok(out)
}

/// All triangles as sorted edge-index triples.
pub fn enumerate_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut tris = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        for (w, eu) in g.neighbours(u) {
            if w <= v {
                continue;
            }
            if let Some(ev) = g.edge_between(v, w) {
                let mut t = [e, eu, ev];
                t.sort();
                tris.push(t);
            }
        }
    }
    tris.sort();
    tris.dedup();
    tris
}

/// Verdict of the three-path separation condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CartesianVerdict {
    Cartesian,
    /// A vertex pair joined inside the red-blue, red-gold and blue-gold
    /// subgraphs simultaneously.
    NotCartesian(u32, u32),
}

impl CartesianVerdict {
    pub fn is_cartesian(&self) -> bool {
        matches!(self, CartesianVerdict::Cartesian)
    }
}

/// A colouring is Cartesian when no vertex pair is connected in all three of
/// the two-colour subgraphs. A monochromatic path counts for both subgraphs
/// containing its colour, which this connectivity reading captures.
pub fn is_cartesian(g: &SymmetricGraph, delta: &ThreeColouring) -> CartesianVerdict {
    let rb = g.component_labels(|e| delta.0[e] != Colour::Gold);
    let rg = g.component_labels(|e| delta.0[e] != Colour::Blue);
    let bg = g.component_labels(|e| delta.0[e] != Colour::Red);
    let n = g.vertex_count() as u32;
    for u in 0..n {
        for v in u + 1..n {
            let (u_, v_) = (u as usize, v as usize);
            if rb[u_] == rb[v_] && rg[u_] == rg[v_] && bg[u_] == bg[v_] {
                return CartesianVerdict::NotCartesian(u, v);
            }
        }
    }
    CartesianVerdict::Cartesian
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("input colouring is not a no-almost-cycle colouring")]
    NotNac,
    #[error("gluing failed: {0}")]
    Glue(#[from] crate::graph_core::SymmetryError),
}

/// Lifts a no-almost-cycle two-colouring of a plain graph to a three-colouring
/// of the glued double: the glued edge and every red edge of the first copy
/// turn gold; the second copy additionally turns blue into red. The input is
/// recoloured by the global swap first when the glued edge is blue.
pub fn lift_nac_to_pseudo_rs(
    g: &Graph,
    delta: &TwoColouring,
    f: (&str, &str),
) -> Result<(SymmetricGraph, ThreeColouring), LiftError> {
    if !is_nac(g, delta).is_nac() {
        return Err(LiftError::NotNac);
    }
    let h = glue_double(g, f)?;
    let fu = g.vertex_ix(f.0).expect("glue checked the edge");
    let fv = g.vertex_ix(f.1).expect("glue checked the edge");
    let f_edge = g.edge_between(fu, fv).expect("glue checked the edge");
    let swap = delta.0[f_edge] == TwoColour::Blue;
    let colour_of = |e: usize| -> TwoColour {
        let c = delta.0[e];
        if swap {
            match c {
                TwoColour::Red => TwoColour::Blue,
                TwoColour::Blue => TwoColour::Red,
            }
        } else {
            c
        }
    };
    let mut out = vec![Colour::Gold; h.edge_count()];
    let copy_name = |u: u32| format!("{}'", g.vertex_name(u));
    let in_copy = |u: u32| -> u32 {
        let name = g.vertex_name(u);
        if u == fu || u == fv {
            h.vertex_ix(name).expect("shared vertex kept its name")
        } else {
            h.vertex_ix(&copy_name(u)).expect("copied vertex renamed with a quote")
        }
    };
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let he = h
            .edge_between(h.vertex_ix(g.vertex_name(u)).unwrap(), h.vertex_ix(g.vertex_name(v)).unwrap())
            .expect("first copy keeps every edge");
        out[he] = match colour_of(e) {
            TwoColour::Red => Colour::Gold,
            TwoColour::Blue => Colour::Blue,
        };
        if e != f_edge {
            let hm = h.edge_between(in_copy(u), in_copy(v)).expect("second copy keeps every edge");
            out[hm] = match colour_of(e) {
                TwoColour::Red => Colour::Gold,
                TwoColour::Blue => Colour::Red,
            };
        }
    }
    let hf = h
        .edge_between(h.vertex_ix(f.0).unwrap(), h.vertex_ix(f.1).unwrap())
        .expect("glued edge exists");
    out[hf] = Colour::Gold;
    Ok((h, ThreeColouring(out)))
}

/// Builds a colouring from `u-v -> colour` name pairs; every edge must be
/// covered exactly once.
pub fn colouring_from_names(
    g: &Graph,
    entries: &[(&str, &str, Colour)],
) -> Option<ThreeColouring> {
    let mut out = vec![None; g.edge_count()];
    for (a, b, c) in entries {
        let e = g.edge_between(g.vertex_ix(a)?, g.vertex_ix(b)?)?;
        if out[e].replace(*c).is_some() {
            return None;
        }
    }
    out.into_iter().collect::<Option<Vec<_>>>().map(ThreeColouring)
}
