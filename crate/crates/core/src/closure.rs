//! The gold-closure fixpoint: edges forced gold in every certified
//! colouring let new edges be added between invariant vertices and the
//! endpoints of mirror-adjacent pairs, strengthening the necessary condition
//! for a symmetry-preserving motion.

use crate::colourings::{
    classify_rs, conjugate, enumerate_pseudo_rs, Budget, EnumerateOptions, EnumerationError,
    RsVerdict, ThreeColouring,
};
use crate::graph_core::SymmetricGraph;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosureError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("cycle enumeration truncated while classifying a colouring; the gold core would be unsound")]
    Truncated,
    #[error("closure did not reach a fixpoint within {0} stages")]
    NonTermination(usize),
}

/// Edges gold in every certified colouring of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldCore {
    pub edges: Vec<usize>,
    /// True when the graph has no certified colouring at all, making the
    /// "gold in all" quantifier vacuous: the core is then the full edge set.
    pub vacuous: bool,
}

/// All certified (or cycle-free) colourings, erroring out on truncation.
/// Runs the triangle-pruned search: it is exhaustively checked against the
/// reference scan elsewhere and the closure re-enumerates at every stage.
fn rs_colourings(
    g: &SymmetricGraph,
    budget: &Budget,
) -> Result<Vec<ThreeColouring>, ClosureError> {
    let opts = EnumerateOptions {
        mode: crate::colourings::SearchMode::Pruned,
        ..Default::default()
    };
    let pool = enumerate_pseudo_rs(g, &opts, budget)?;
    let mut kept = Vec::new();
    for delta in &pool {
        match classify_rs(g, delta, Some(&pool), budget)? {
            RsVerdict::RsNoCycle | RsVerdict::RsCertified(_) => kept.push(delta.clone()),
            RsVerdict::UnknownTruncated => return Err(ClosureError::Truncated),
            RsVerdict::PseudoRsOnly(_) => {}
            RsVerdict::NotPseudoRs(_) => unreachable!("pool entries pass the pseudo check"),
        }
    }
    Ok(kept)
}

pub fn gold_core(g: &SymmetricGraph, budget: &Budget) -> Result<GoldCore, ClosureError> {
    let all = rs_colourings(g, budget)?;
    if all.is_empty() {
        return Ok(GoldCore { edges: (0..g.edge_count()).collect(), vacuous: true });
    }
    let edges = (0..g.edge_count())
        .filter(|&e| all.iter().all(|d| d.get(e) == crate::colourings::Colour::Gold))
        .collect();
    Ok(GoldCore { edges, vacuous: false })
}

/// Vertex pairs eligible for addition: an invariant vertex joined through the
/// gold core to a vertex adjacent to its own mirror image, excluding pairs
/// already present as edges. The result is closed under the reflection.
pub fn gamma_pairs(g: &SymmetricGraph, budget: &Budget) -> Result<(Vec<(u32, u32)>, bool), ClosureError> {
    let core = gold_core(g, budget)?;
    let core_set: BTreeSet<usize> = core.edges.iter().copied().collect();
    let label = g.component_labels(|e| core_set.contains(&e));
    let mut pairs = Vec::new();
    for u in g.invariant_vertices() {
        for v in 0..g.vertex_count() as u32 {
            if v == u {
                continue;
            }
            let sv = g.sigma_vertex(v);
            if sv == v || g.edge_between(v, sv).is_none() {
                continue;
            }
            if label[u as usize] != label[v as usize] {
                continue;
            }
            if g.edge_between(u, v).is_some() {
                continue;
            }
            pairs.push((u.min(v), u.max(v)));
        }
    }
    pairs.sort();
    pairs.dedup();
    // closed under the reflection: u is fixed and v's mirror is adjacent to
    // v, hence also core-connected to u through the mirrored path
    debug_assert!(pairs.iter().all(|&(a, b)| {
        let (sa, sb) = (g.sigma_vertex(a), g.sigma_vertex(b));
        pairs.contains(&(sa.min(sb), sa.max(sb)))
    }));
    Ok((pairs, core.vacuous))
}

/// One stage of the closure.
#[derive(Debug, Clone)]
pub struct ClosureStage {
    pub graph: SymmetricGraph,
    /// Name pairs added to reach the next stage; empty on the final stage.
    pub added: Vec<(String, String)>,
}

/// The full iteration record up to the fixpoint.
#[derive(Debug, Clone)]
pub struct ClosureTrace {
    pub stages: Vec<ClosureStage>,
    pub vacuous: bool,
}

impl ClosureTrace {
    pub fn final_graph(&self) -> &SymmetricGraph {
        &self.stages.last().expect("trace always holds the final stage").graph
    }

    pub fn added_edges(&self) -> Vec<(String, String)> {
        self.stages.iter().flat_map(|s| s.added.iter().cloned()).collect()
    }
}

/// Iterates edge addition until no eligible pair remains. Every stage graph
/// is revalidated; added pairs are mirror-closed so symmetry survives.
pub fn gold_closure(g: &SymmetricGraph, budget: &Budget) -> Result<ClosureTrace, ClosureError> {
    let guard = g.vertex_count() * g.vertex_count();
    let mut stages = Vec::new();
    let mut vacuous = false;
    let mut current = g.clone();
    for _ in 0..=guard {
        let (pairs, stage_vacuous) = gamma_pairs(&current, budget)?;
        vacuous |= stage_vacuous;
        let added: Vec<(String, String)> = pairs
            .iter()
            .map(|&(u, v)| (current.vertex_name(u).to_owned(), current.vertex_name(v).to_owned()))
            .collect();
        if added.is_empty() {
            stages.push(ClosureStage { graph: current, added });
            return Ok(ClosureTrace { stages, vacuous });
        }
        let mut edges: Vec<(String, String)> = current
            .edges()
            .iter()
            .map(|&(u, v)| {
                (current.vertex_name(u).to_owned(), current.vertex_name(v).to_owned())
            })
            .collect();
        edges.extend(added.iter().cloned());
        let vertices: Vec<String> = current.vertex_names().to_vec();
        let sigma = current.sigma_map();
        let next = SymmetricGraph::validate(&vertices, &edges, &sigma)
            .expect("adding mirror-closed pairs preserves the symmetry");
        stages.push(ClosureStage { graph: current, added });
        current = next;
    }
    Err(ClosureError::NonTermination(guard))
}

/// Outcome of the necessary-condition analysis.
#[derive(Debug, Clone)]
pub enum NecessityVerdict {
    /// No certified colouring at all: every mirror-symmetric realisation is
    /// mirror-symmetric rigid.
    NoRs,
    /// The graph has certified colourings but its closure has none.
    ClosureNoRs { trace: ClosureTrace },
    /// Certified colourings exist on both; `active_candidates` lists those
    /// colourings of the input (up to conjugation) that arise as restrictions
    /// of certified colourings of the closure, the only candidates for being
    /// realised by an actual motion.
    HasRs {
        sample: ThreeColouring,
        trace: ClosureTrace,
        all_classes: Vec<ThreeColouring>,
        active_candidates: Vec<ThreeColouring>,
    },
}

pub fn necessity_verdict(
    g: &SymmetricGraph,
    budget: &Budget,
) -> Result<NecessityVerdict, ClosureError> {
    let own = rs_colourings(g, budget)?;
    if own.is_empty() {
        return Ok(NecessityVerdict::NoRs);
    }
    let trace = gold_closure(g, budget)?;
    let closure_rs = rs_colourings(trace.final_graph(), budget)?;
    if closure_rs.is_empty() {
        return Ok(NecessityVerdict::ClosureNoRs { trace });
    }
    // restrict each closure colouring to the original edge set
    let final_graph = trace.final_graph();
    let restrict = |delta: &ThreeColouring| -> ThreeColouring {
        ThreeColouring(
            g.edges()
                .iter()
                .map(|&(u, v)| {
                    let fu = final_graph.vertex_ix(g.vertex_name(u)).unwrap();
                    let fv = final_graph.vertex_ix(g.vertex_name(v)).unwrap();
                    delta.get(final_graph.edge_between(fu, fv).unwrap())
                })
                .collect(),
        )
    };
    let restrictions: BTreeSet<ThreeColouring> = closure_rs.iter().map(restrict).collect();
    let canonical = |d: &ThreeColouring| -> ThreeColouring {
        let conj = conjugate(g, d);
        if *d <= conj {
            d.clone()
        } else {
            conj
        }
    };
    let all_classes: Vec<ThreeColouring> =
        own.iter().filter(|d| **d == canonical(d)).cloned().collect();
    let active_candidates: Vec<ThreeColouring> = all_classes
        .iter()
        .filter(|d| {
            restrictions.contains(*d) || restrictions.contains(&conjugate(g, d))
        })
        .cloned()
        .collect();
    let sample = own[0].clone();
    Ok(NecessityVerdict::HasRs { sample, trace, all_classes, active_candidates })
}
