//! Graph and symmetry primitives shared by every other module.
//!
//! Vertices are opaque strings ordered lexicographically; internally they are
//! mapped to `u32` indices that follow the same order, so index comparisons
//! and name comparisons agree everywhere.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

/// The planar mirror across the y-axis, as a 2x2 matrix.
pub const MIRROR: [[f64; 2]; 2] = [[-1.0, 0.0], [0.0, 1.0]];

/// Apply the y-axis mirror to a point.
#[inline]
pub fn mirror_point(p: [f64; 2]) -> [f64; 2] {
    [-p[0], p[1]]
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),
    #[error("edge references unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("graph is not simple: {reason} at {witness:?}")]
    NotSimple { reason: &'static str, witness: (String, String) },
    #[error("graph is disconnected: vertex {0:?} is unreachable from {1:?}")]
    Disconnected(String, String),
    #[error("graph has no vertices")]
    Empty,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("sigma references unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("sigma is not an involution: sigma(sigma({0:?})) != {0:?}")]
    NotInvolution(String),
    #[error("sigma is the identity map")]
    IdentityMap,
    #[error("sigma is not an automorphism: edge {0:?}-{1:?} maps to a non-edge")]
    NotAutomorphism(String, String),
}

/// A finite simple connected graph over string vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<(u32, usize)>>,
}

impl Graph {
    /// Builds a graph, checking simplicity and connectivity.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_owned()).collect();
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0].clone()));
            }
        }
        let index = |name: &str| -> Result<u32, GraphError> {
            names
                .binary_search_by(|n| n.as_str().cmp(name))
                .map(|i| i as u32)
                .map_err(|_| GraphError::UnknownVertex(name.to_owned()))
        };
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let (u, v) = (index(a)?, index(b)?);
            if u == v {
                return Err(GraphError::NotSimple {
                    reason: "loop",
                    witness: (a.to_owned(), b.to_owned()),
                });
            }
            idx_edges.push((u.min(v), u.max(v)));
        }
        idx_edges.sort();
        for w in idx_edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::NotSimple {
                    reason: "parallel edge",
                    witness: (names[w[0].0 as usize].clone(), names[w[0].1 as usize].clone()),
                });
            }
        }
        let mut adj = vec![Vec::new(); names.len()];
        for (i, &(u, v)) in idx_edges.iter().enumerate() {
            adj[u as usize].push((v, i));
            adj[v as usize].push((u, i));
        }
        for a in &mut adj {
            a.sort();
        }
        let g = Graph { names, edges: idx_edges, adj };
        // connectivity
        let mut seen = vec![false; g.vertex_count()];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &g.adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(GraphError::Disconnected(g.names[i].clone(), g.names[0].clone()));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, u: u32) -> &str {
        &self.names[u as usize]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_ix(&self, name: &str) -> Option<u32> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok().map(|i| i as u32)
    }

    /// Edges in canonical order: sorted pairs of indices, ascending.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (u32, u32) {
        self.edges[i]
    }

    pub fn edge_name(&self, i: usize) -> (String, String) {
        let (u, v) = self.edges[i];
        (self.names[u as usize].clone(), self.names[v as usize].clone())
    }

    /// Canonical text key `u-v` for an edge.
    pub fn edge_key(&self, i: usize) -> String {
        let (u, v) = self.edges[i];
        format!("{}-{}", self.names[u as usize], self.names[v as usize])
    }

    pub fn edge_between(&self, u: u32, v: u32) -> Option<usize> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.binary_search(&(a, b)).ok()
    }

    pub fn neighbours(&self, u: u32) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.adj[u as usize].iter().copied()
    }

    pub fn degree(&self, u: u32) -> usize {
        self.adj[u as usize].len()
    }

    /// Connected components of the spanning subgraph with edges satisfying
    /// `keep`. Isolated vertices form singleton components. Components are
    /// ordered by their smallest vertex; vertices within are sorted.
    pub fn components(&self, mut keep: impl FnMut(usize) -> bool) -> Vec<Vec<u32>> {
        let mut dsu = Dsu::new(self.vertex_count());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if keep(i) {
                dsu.union(u as usize, v as usize);
            }
        }
        dsu.into_components()
    }

    /// Component label per vertex under `keep`; labels follow the component
    /// order of [`Graph::components`].
    pub fn component_labels(&self, mut keep: impl FnMut(usize) -> bool) -> Vec<usize> {
        let mut dsu = Dsu::new(self.vertex_count());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if keep(i) {
                dsu.union(u as usize, v as usize);
            }
        }
        dsu.labels()
    }

    /// All simple `u`-`v` paths avoiding edges where `avoid` is true, up to
    /// `cap` paths. Deterministic DFS order (ascending neighbour index).
    pub fn simple_paths(
        &self,
        u: u32,
        v: u32,
        mut avoid: impl FnMut(usize) -> bool,
        cap: usize,
    ) -> SimplePaths {
        assert_ne!(u, v, "simple_paths endpoints must differ");
        let mut paths = Vec::new();
        let mut truncated = false;
        let mut on_path = vec![false; self.vertex_count()];
        let mut path = vec![u];
        on_path[u as usize] = true;
        // stack of neighbour cursors
        let mut cursors = vec![0usize];
        while let Some(cursor) = cursors.last_mut() {
            let here = *path.last().unwrap();
            let nbrs = &self.adj[here as usize];
            if *cursor >= nbrs.len() {
                cursors.pop();
                on_path[here as usize] = false;
                path.pop();
                continue;
            }
            let (next, eidx) = nbrs[*cursor];
            *cursor += 1;
            if avoid(eidx) || on_path[next as usize] {
                continue;
            }
            if next == v {
                if paths.len() == cap {
                    truncated = true;
                    break;
                }
                let mut p = path.clone();
                p.push(v);
                paths.push(p);
                continue;
            }
            path.push(next);
            on_path[next as usize] = true;
            cursors.push(0);
        }
        SimplePaths { paths, truncated }
    }

    /// Fundamental cycles from a BFS spanning tree rooted at vertex 0.
    /// Returns `|E| - |V| + 1` cycles as vertex sequences.
    pub fn cycle_basis(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut parent = vec![u32::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        let mut depth = vec![0u32; n];
        let mut in_tree = vec![false; self.edge_count()];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &self.adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    parent[v as usize] = u;
                    parent_edge[v as usize] = e;
                    depth[v as usize] = depth[u as usize] + 1;
                    in_tree[e] = true;
                    queue.push_back(v);
                }
            }
        }
        let mut cycles = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if in_tree[e] {
                continue;
            }
            // walk both endpoints up to their lowest common ancestor
            let (mut a, mut b) = (u, v);
            let mut left = vec![a];
            let mut right = vec![b];
            while depth[a as usize] > depth[b as usize] {
                a = parent[a as usize];
                left.push(a);
            }
            while depth[b as usize] > depth[a as usize] {
                b = parent[b as usize];
                right.push(b);
            }
            while a != b {
                a = parent[a as usize];
                b = parent[b as usize];
                left.push(a);
                right.push(b);
            }
            right.pop();
            right.reverse();
            left.extend(right);
            cycles.push(left);
        }
        cycles
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePaths {
    pub paths: Vec<Vec<u32>>,
    pub truncated: bool,
}

/// A graph together with a validated reflection: a non-identity involutive
/// automorphism of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricGraph {
    graph: Graph,
    sigma: Vec<u32>,
    sigma_edge: Vec<usize>,
}

impl std::ops::Deref for SymmetricGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// One orbit of the edge set under the reflection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrbit {
    /// Edge index of the lexicographically smaller orbit member.
    pub representative: usize,
    /// Image of the representative (equal to it when invariant).
    pub mirror: usize,
    pub is_invariant: bool,
}

impl SymmetricGraph {
    /// Validates a vertex set, edge set and vertex map as a reflection-symmetric
    /// graph. Fails with a witness if the map is not an involution, is the
    /// identity, or does not preserve the edge set.
    pub fn validate<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S)],
        sigma: &BTreeMap<String, String>,
    ) -> Result<SymmetricGraph, SymmetryError> {
        let graph = Graph::new(vertices, edges)?;
        let mut map = vec![u32::MAX; graph.vertex_count()];
        for (from, to) in sigma {
            let f = graph
                .vertex_ix(from)
                .ok_or_else(|| SymmetryError::UnknownVertex(from.clone()))?;
            let t = graph
                .vertex_ix(to)
                .ok_or_else(|| SymmetryError::UnknownVertex(to.clone()))?;
            map[f as usize] = t;
        }
        // vertices missing from the map are treated as fixed
        for (i, m) in map.iter_mut().enumerate() {
            if *m == u32::MAX {
                *m = i as u32;
            }
        }
        for u in 0..graph.vertex_count() {
            let img = map[u];
            if map[img as usize] != u as u32 {
                return Err(SymmetryError::NotInvolution(graph.vertex_name(u as u32).to_owned()));
            }
        }
        if map.iter().enumerate().all(|(i, &m)| m == i as u32) {
            return Err(SymmetryError::IdentityMap);
        }
        let mut sigma_edge = vec![usize::MAX; graph.edge_count()];
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            let (iu, iv) = (map[u as usize], map[v as usize]);
            match graph.edge_between(iu, iv) {
                Some(ie) => sigma_edge[e] = ie,
                None => {
                    return Err(SymmetryError::NotAutomorphism(
                        graph.vertex_name(u).to_owned(),
                        graph.vertex_name(v).to_owned(),
                    ))
                }
            }
        }
        Ok(SymmetricGraph { graph, sigma: map, sigma_edge })
    }

    /// Convenience constructor from name pairs; unlisted vertices are fixed.
    pub fn from_pairs<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S)],
        sigma_pairs: &[(S, S)],
    ) -> Result<SymmetricGraph, SymmetryError> {
        let mut map = BTreeMap::new();
        for (a, b) in sigma_pairs {
            map.insert(a.as_ref().to_owned(), b.as_ref().to_owned());
            map.insert(b.as_ref().to_owned(), a.as_ref().to_owned());
        }
        Self::validate(vertices, edges, &map)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sigma_vertex(&self, u: u32) -> u32 {
        self.sigma[u as usize]
    }

    pub fn sigma_edge(&self, e: usize) -> usize {
        self.sigma_edge[e]
    }

    pub fn sigma_map(&self) -> BTreeMap<String, String> {
        self.sigma
            .iter()
            .enumerate()
            .map(|(i, &m)| (self.graph.vertex_name(i as u32).to_owned(), self.graph.vertex_name(m).to_owned()))
            .collect()
    }

    pub fn is_invariant_vertex(&self, u: u32) -> bool {
        self.sigma[u as usize] == u
    }

    pub fn is_invariant_edge(&self, e: usize) -> bool {
        self.sigma_edge[e] == e
    }

    pub fn invariant_vertices(&self) -> Vec<u32> {
        (0..self.graph.vertex_count() as u32).filter(|&u| self.is_invariant_vertex(u)).collect()
    }

    pub fn invariant_edges(&self) -> Vec<usize> {
        (0..self.graph.edge_count()).filter(|&e| self.is_invariant_edge(e)).collect()
    }

    /// Partition of the edge set into reflection orbits, in canonical order
    /// (ascending representative).
    pub fn edge_orbits(&self) -> Vec<EdgeOrbit> {
        let mut orbits = Vec::new();
        for e in 0..self.graph.edge_count() {
            let m = self.sigma_edge[e];
            if m >= e {
                orbits.push(EdgeOrbit { representative: e, mirror: m, is_invariant: m == e });
            }
        }
        orbits
    }

    /// Reflects a component (vertex set) to its image component.
    pub fn sigma_vertex_set(&self, vs: &[u32]) -> BTreeSet<u32> {
        vs.iter().map(|&v| self.sigma_vertex(v)).collect()
    }
}

/// The fan graph family used as a fixture: vertices `l0..lk`, `r0..rk`,
/// `m1..mk`; spokes `l0-li-mi` and `r0-ri-mi`, the base edge `l0-r0` and all
/// `mi-mj` edges; the reflection swaps `li` with `ri` and fixes each `mi`.
pub fn gk_graph(k: u32) -> Result<SymmetricGraph, SymmetryError> {
    if k == 0 {
        return Err(SymmetryError::Graph(GraphError::Empty));
    }
    let mut vertices = vec!["l0".to_owned(), "r0".to_owned()];
    let mut edges = vec![("l0".to_owned(), "r0".to_owned())];
    let mut sigma = BTreeMap::new();
    sigma.insert("l0".to_owned(), "r0".to_owned());
    sigma.insert("r0".to_owned(), "l0".to_owned());
    for i in 1..=k {
        let (li, ri, mi) = (format!("l{i}"), format!("r{i}"), format!("m{i}"));
        vertices.extend([li.clone(), ri.clone(), mi.clone()]);
        edges.push(("l0".to_owned(), li.clone()));
        edges.push((li.clone(), mi.clone()));
        edges.push(("r0".to_owned(), ri.clone()));
        edges.push((ri.clone(), mi.clone()));
        sigma.insert(li.clone(), ri.clone());
        sigma.insert(ri, li);
        sigma.insert(mi.clone(), mi.clone());
        for j in 1..i {
            edges.push((format!("m{j}"), mi.clone()));
        }
    }
    SymmetricGraph::validate(&vertices, &edge_refs(&edges), &sigma)
}

fn edge_refs(edges: &[(String, String)]) -> Vec<(String, String)> {
    edges.to_vec()
}

/// Glues two copies of `g` along the edge `f`, producing a symmetric graph
/// whose reflection swaps the copies and fixes only the endpoints of `f`.
/// Vertices of the second copy are renamed with a trailing `'`.
pub fn glue_double(g: &Graph, f: (&str, &str)) -> Result<SymmetricGraph, SymmetryError> {
    let fu = g.vertex_ix(f.0).ok_or_else(|| SymmetryError::UnknownVertex(f.0.to_owned()))?;
    let fv = g.vertex_ix(f.1).ok_or_else(|| SymmetryError::UnknownVertex(f.1.to_owned()))?;
    if g.edge_between(fu, fv).is_none() {
        return Err(SymmetryError::NotAutomorphism(f.0.to_owned(), f.1.to_owned()));
    }
    let shared = |u: u32| u == fu || u == fv;
    let copy_name = |u: u32| format!("{}'", g.vertex_name(u));
    let mut vertices: Vec<String> = g.vertex_names().to_vec();
    let mut sigma = BTreeMap::new();
    for u in 0..g.vertex_count() as u32 {
        if shared(u) {
            sigma.insert(g.vertex_name(u).to_owned(), g.vertex_name(u).to_owned());
        } else {
            vertices.push(copy_name(u));
            sigma.insert(g.vertex_name(u).to_owned(), copy_name(u));
            sigma.insert(copy_name(u), g.vertex_name(u).to_owned());
        }
    }
    let mut edges: Vec<(String, String)> = Vec::new();
    for &(u, v) in g.edges() {
        edges.push((g.vertex_name(u).to_owned(), g.vertex_name(v).to_owned()));
        if !(shared(u) && shared(v)) {
            let nu = if shared(u) { g.vertex_name(u).to_owned() } else { copy_name(u) };
            let nv = if shared(v) { g.vertex_name(v).to_owned() } else { copy_name(v) };
            edges.push((nu, nv));
        }
    }
    SymmetricGraph::validate(&vertices, &edges, &sigma)
}

/// Union-find over `0..n` with deterministic component extraction.
#[derive(Debug, Clone)]
pub struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub fn union(&mut self, i: usize, j: usize) -> bool {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri == rj {
            return false;
        }
        // anchor on the smaller root so component ids are stable
        let (lo, hi) = (ri.min(rj), ri.max(rj));
        self.parent[hi] = lo;
        true
    }

    pub fn same(&mut self, i: usize, j: usize) -> bool {
        self.find(i) == self.find(j)
    }

    pub fn into_components(mut self) -> Vec<Vec<u32>> {
        let n = self.parent.len();
        // roots are always the smallest member, so scanning in order yields
        // components sorted by smallest vertex
        let mut slot = vec![usize::MAX; n];
        let mut comps: Vec<Vec<u32>> = Vec::new();
        for i in 0..n {
            let r = self.find(i);
            if slot[r] == usize::MAX {
                slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[slot[r]].push(i as u32);
        }
        comps
    }

    /// Component label per element, in the same order as `into_components`.
    pub fn labels(mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut label = vec![0usize; n];
        let mut next = 0usize;
        for (i, out) in label.iter_mut().enumerate() {
            let r = {
                let mut j = i;
                while self.parent[j] != j {
                    self.parent[j] = self.parent[self.parent[j]];
                    j = self.parent[j];
                }
                j
            };
            if slot[r] == usize::MAX {
                slot[r] = next;
                next += 1;
            }
            *out = slot[r];
        }
        label
    }
}
