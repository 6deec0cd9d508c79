//! Simple undirected graphs with dense integer ids, plus the matching
//! vocabulary used everywhere else: matchings, alternating cycles and the
//! symmetric-difference decomposition.

use std::collections::BTreeSet;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(VertexId, usize),
    #[error("edge {0} out of range (graph has {1} edges)")]
    EdgeOutOfRange(EdgeId, usize),
    #[error("edges {0} and {1} share vertex {2}; not a matching")]
    NotAMatching(EdgeId, EdgeId, VertexId),
    #[error("matching is not perfect: vertex {0} is unmatched")]
    NotPerfect(VertexId),
    #[error("more than {cap} perfect matchings")]
    CapExceeded { cap: usize },
}

/// A simple undirected graph. Vertices are `0..vertex_count()`, edges are
/// identified by their insertion index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    pub fn new(vertices: usize) -> Self {
        Graph {
            vertices,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertices],
        }
    }

    /// Builds a graph from an edge list, rejecting loops and parallel edges.
    pub fn from_edges(
        vertices: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(vertices);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        if u >= self.vertices {
            return Err(GraphError::VertexOutOfRange(u, self.vertices));
        }
        if v >= self.vertices {
            return Err(GraphError::VertexOutOfRange(v, self.vertices));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adjacency[u].iter().any(|&(w, _)| w == v) {
            return Err(GraphError::ParallelEdge(u, v));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Neighbors of `v` as `(neighbor, edge id)` pairs, in insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }
}

/// A set of edges of some host graph, no two sharing a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edge_ids: BTreeSet<EdgeId>,
}

impl Matching {
    pub fn new(g: &Graph, edge_ids: impl IntoIterator<Item = EdgeId>) -> Result<Self, GraphError> {
        let mut seen: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
        let mut set = BTreeSet::new();
        for e in edge_ids {
            if e >= g.edge_count() {
                return Err(GraphError::EdgeOutOfRange(e, g.edge_count()));
            }
            let (u, v) = g.endpoints(e);
            for w in [u, v] {
                if let Some(other) = seen[w] {
                    if other != e {
                        return Err(GraphError::NotAMatching(other, e, w));
                    }
                }
                seen[w] = Some(e);
            }
            set.insert(e);
        }
        Ok(Matching { edge_ids: set })
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edge_ids.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    /// Edge ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_ids.iter().copied()
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.check_perfect(g).is_ok()
    }

    pub fn check_perfect(&self, g: &Graph) -> Result<(), GraphError> {
        let mut covered = vec![false; g.vertex_count()];
        for e in self.iter() {
            let (u, v) = g.endpoints(e);
            covered[u] = true;
            covered[v] = true;
        }
        match covered.iter().position(|c| !c) {
            None => Ok(()),
            Some(v) => Err(GraphError::NotPerfect(v)),
        }
    }

    /// `mate[v]` is the vertex matched to `v`, if any.
    pub fn mate_array(&self, g: &Graph) -> Vec<Option<VertexId>> {
        let mut mate = vec![None; g.vertex_count()];
        for e in self.iter() {
            let (u, v) = g.endpoints(e);
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

impl FromIterator<EdgeId> for Matching {
    fn from_iter<T: IntoIterator<Item = EdgeId>>(iter: T) -> Self {
        Matching {
            edge_ids: iter.into_iter().collect(),
        }
    }
}

/// A cycle whose edges strictly alternate between matching and non-matching
/// edges, stored as a cyclic edge sequence. Canonical form starts at the
/// smallest edge id and proceeds toward the smaller of its two neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCycle {
    pub edge_ids: Vec<EdgeId>,
}

impl AlternatingCycle {
    /// Rotates and reflects `edges` into canonical form.
    pub fn canonical(edges: Vec<EdgeId>) -> Self {
        AlternatingCycle {
            edge_ids: canonical_cycle(edges),
        }
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edge_ids.iter().copied().collect()
    }
}

/// Rotate so the smallest edge id comes first and pick the lexicographically
/// smaller direction, considering every position of the minimum.
pub fn canonical_cycle(edges: Vec<EdgeId>) -> Vec<EdgeId> {
    if edges.is_empty() {
        return edges;
    }
    let n = edges.len();
    let smallest = *edges.iter().min().unwrap();
    let mut best: Option<Vec<EdgeId>> = None;
    for start in (0..n).filter(|&i| edges[i] == smallest) {
        let forward: Vec<EdgeId> = (0..n).map(|i| edges[(start + i) % n]).collect();
        let backward: Vec<EdgeId> = (0..n).map(|i| edges[(start + n - i) % n]).collect();
        for candidate in [forward, backward] {
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    best.unwrap()
}

/// An alternating path with explicit endpoint vertices; edges are listed
/// from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    pub edge_ids: Vec<EdgeId>,
    pub start: VertexId,
    pub end: VertexId,
}

/// The components of a symmetric difference of two matchings: vertex-disjoint
/// alternating cycles, plus alternating paths when the matchings differ in size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergeDecomposition {
    pub cycles: Vec<AlternatingCycle>,
    pub paths: Vec<AlternatingPath>,
}

/// Extracts the subgraph induced by `vertices`, with maps from the new ids
/// back to the originals.
pub fn induced_subgraph(g: &Graph, vertices: &[VertexId]) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let mut sub = Graph::new(vertices.len());
    let mut edge_map = Vec::new();
    for (id, &(x, y)) in g.edges().iter().enumerate() {
        if index[x] != usize::MAX && index[y] != usize::MAX {
            sub.add_edge(index[x], index[y])
                .expect("induced subgraphs stay simple");
            edge_map.push(id);
        }
    }
    (sub, vertices.to_vec(), edge_map)
}

/// Labels vertices by connected component. Two vertices share a label iff a
/// path joins them; labels are assigned in order of smallest member vertex.
pub fn connected_components(g: &Graph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    let mut stack = Vec::new();
    for start in 0..g.vertex_count() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn component_count(g: &Graph) -> usize {
    connected_components(g).iter().copied().max().map_or(0, |m| m + 1)
}

/// All bridges of `g`, via an iterative DFS low-link pass.
pub fn bridges(g: &Graph) -> BTreeSet<EdgeId> {
    let n = g.vertex_count();
    let mut visit = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut result = BTreeSet::new();
    let mut clock = 0;

    // Stack frames: (vertex, incoming edge, next neighbor index).
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
    for root in 0..n {
        if visit[root] != usize::MAX {
            continue;
        }
        visit[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, None, 0));
        while let Some(&mut (v, via, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let (w, e) = g.neighbors(v)[*idx];
                *idx += 1;
                if Some(e) == via {
                    continue;
                }
                if visit[w] == usize::MAX {
                    visit[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(visit[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (parent, _, _)) = stack.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > visit[parent] {
                        // With parallel edges excluded, `via` is unique.
                        result.insert(via.unwrap());
                    }
                }
            }
        }
    }
    result
}

/// Decomposes the symmetric difference `m1 △ m2` into alternating cycles and
/// paths. Every vertex touches at most one edge of each matching, so the
/// difference has maximum degree two and splits into disjoint paths and
/// even cycles that alternate between the two matchings.
pub fn symmetric_difference_decompose(
    g: &Graph,
    m1: &Matching,
    m2: &Matching,
) -> BergeDecomposition {
    let mut diff: BTreeSet<EdgeId> = m1.iter().filter(|e| !m2.contains(*e)).collect();
    diff.extend(m2.iter().filter(|e| !m1.contains(*e)));

    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_count()];
    for &e in &diff {
        let (u, v) = g.endpoints(e);
        incident[u].push(e);
        incident[v].push(e);
    }

    let mut used: BTreeSet<EdgeId> = BTreeSet::new();
    let mut cycles = Vec::new();
    let mut paths = Vec::new();

    // Walk each path from its endpoints first (vertices of difference-degree 1).
    let mut degree_one: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&v| incident[v].len() == 1)
        .collect();
    degree_one.sort_unstable();
    for &start in &degree_one {
        let first = incident[start][0];
        if used.contains(&first) {
            continue;
        }
        let mut edges = Vec::new();
        let mut v = start;
        let mut next = Some(first);
        while let Some(e) = next {
            used.insert(e);
            edges.push(e);
            v = g.other_endpoint(e, v);
            next = incident[v].iter().copied().find(|f| !used.contains(f));
        }
        paths.push(AlternatingPath {
            edge_ids: edges,
            start,
            end: v,
        });
    }

    // Everything left is a union of cycles.
    for &e in &diff {
        if used.contains(&e) {
            continue;
        }
        let (start, _) = g.endpoints(e);
        let mut edges = Vec::new();
        let mut v = start;
        let mut next = Some(e);
        while let Some(f) = next {
            used.insert(f);
            edges.push(f);
            v = g.other_endpoint(f, v);
            next = incident[v].iter().copied().find(|h| !used.contains(h));
        }
        cycles.push(AlternatingCycle::canonical(edges));
    }

    cycles.sort_by(|a, b| a.edge_ids.cmp(&b.edge_ids));
    BergeDecomposition { cycles, paths }
}

/// Enumerates every perfect matching of `g` in a canonical order
/// (lexicographic by sorted edge ids). Exponential; intended as an oracle on
/// graphs of roughly twenty vertices or fewer. Fails with `CapExceeded` when
/// more than `cap` matchings exist.
pub fn enumerate_perfect_matchings(g: &Graph, cap: usize) -> Result<Vec<Matching>, GraphError> {
    let n = g.vertex_count();
    if !n.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let mut out: Vec<Vec<EdgeId>> = Vec::new();
    let mut covered = vec![false; n];
    let mut chosen: Vec<EdgeId> = Vec::new();

    fn recurse(
        g: &Graph,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
        cap: usize,
    ) -> Result<(), GraphError> {
        let Some(v) = covered.iter().position(|c| !c) else {
            if out.len() == cap {
                return Err(GraphError::CapExceeded { cap });
            }
            out.push(chosen.clone());
            return Ok(());
        };
        // Match the smallest uncovered vertex each time; trying its incident
        // edges in ascending id order yields the canonical enumeration.
        let mut candidates: Vec<(EdgeId, VertexId)> = g
            .neighbors(v)
            .iter()
            .filter(|&&(w, _)| !covered[w])
            .map(|&(w, e)| (e, w))
            .collect();
        candidates.sort_unstable();
        for (e, w) in candidates {
            covered[v] = true;
            covered[w] = true;
            chosen.push(e);
            recurse(g, covered, chosen, out, cap)?;
            chosen.pop();
            covered[v] = false;
            covered[w] = false;
        }
        Ok(())
    }

    recurse(g, &mut covered, &mut chosen, &mut out, cap)?;
    let mut sorted: Vec<Vec<EdgeId>> = out
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            edges
        })
        .collect();
    sorted.sort();
    Ok(sorted.into_iter().map(Matching::from_iter).collect())
}

/// Checks that `cycle` is a genuine alternating cycle for `m`: consecutive
/// edges share exactly one vertex, no vertex repeats, and matching
/// membership strictly alternates.
pub fn is_alternating_cycle(g: &Graph, m: &Matching, cycle: &[EdgeId]) -> bool {
    let k = cycle.len();
    if k < 4 || !k.is_multiple_of(2) {
        return false;
    }
    let mut vertices = Vec::with_capacity(k);
    // Determine the shared vertex of each consecutive pair.
    for i in 0..k {
        let e = cycle[i];
        let f = cycle[(i + 1) % k];
        if e >= g.edge_count() || f >= g.edge_count() || e == f {
            return false;
        }
        let (a, b) = g.endpoints(e);
        let (c, d) = g.endpoints(f);
        let shared = if a == c || a == d {
            if b == c || b == d {
                return false; // parallel edges cannot occur in a simple graph
            }
            a
        } else if b == c || b == d {
            b
        } else {
            return false;
        };
        vertices.push(shared);
        if m.contains(e) == m.contains(f) {
            return false;
        }
    }
    let distinct: BTreeSet<VertexId> = vertices.iter().copied().collect();
    distinct.len() == k
}
