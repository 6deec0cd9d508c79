//! Proof structures for multiplicative linear logic with Mix: ax/⊗/⅋-labeled
//! directed acyclic multigraphs, their paired correctness graphs, switchings,
//! and the brute-force acyclicity/connectedness checker.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::canonical_cycle;

pub type LinkId = usize;
pub type PsEdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LinkKind {
    Ax,
    Tensor,
    Par,
}

impl LinkKind {
    pub fn max_out(self) -> usize {
        match self {
            LinkKind::Ax => 2,
            LinkKind::Tensor | LinkKind::Par => 1,
        }
    }

    pub fn required_in(self) -> usize {
        match self {
            LinkKind::Ax => 0,
            LinkKind::Tensor | LinkKind::Par => 2,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProofNetError {
    #[error("proof structures must be non-empty")]
    EmptyStructure,
    #[error("directed cycle through link {0}")]
    CyclicStructure(LinkId),
    #[error("link {link} has in-degree {actual}, expected {expected}")]
    InDegree {
        link: LinkId,
        expected: usize,
        actual: usize,
    },
    #[error("link {link} has out-degree {actual}, at most {max} allowed")]
    OutDegree {
        link: LinkId,
        max: usize,
        actual: usize,
    },
    #[error("edge endpoint {0} out of range")]
    LinkOutOfRange(LinkId),
    #[error("{0} pairs exceed the switching enumeration bound of {1}")]
    TooManyPairs(usize, usize),
    #[error("structure is not correct")]
    NotCorrect,
}

/// A proof structure: links labeled ax/⊗/⅋ and directed edges between them.
/// Parallel edges are permitted. Construction validates the degree clauses
/// and acyclicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStructure {
    kinds: Vec<LinkKind>,
    edges: Vec<(LinkId, LinkId)>,
    ins: Vec<Vec<PsEdgeId>>,
    outs: Vec<Vec<PsEdgeId>>,
}

impl ProofStructure {
    pub fn new(
        kinds: Vec<LinkKind>,
        edges: Vec<(LinkId, LinkId)>,
    ) -> Result<Self, ProofNetError> {
        if kinds.is_empty() {
            return Err(ProofNetError::EmptyStructure);
        }
        let n = kinds.len();
        let mut ins = vec![Vec::new(); n];
        let mut outs = vec![Vec::new(); n];
        for (id, &(src, tgt)) in edges.iter().enumerate() {
            if src >= n {
                return Err(ProofNetError::LinkOutOfRange(src));
            }
            if tgt >= n {
                return Err(ProofNetError::LinkOutOfRange(tgt));
            }
            outs[src].push(id);
            ins[tgt].push(id);
        }
        for (l, kind) in kinds.iter().enumerate() {
            if ins[l].len() != kind.required_in() {
                return Err(ProofNetError::InDegree {
                    link: l,
                    expected: kind.required_in(),
                    actual: ins[l].len(),
                });
            }
            if outs[l].len() > kind.max_out() {
                return Err(ProofNetError::OutDegree {
                    link: l,
                    max: kind.max_out(),
                    actual: outs[l].len(),
                });
            }
        }
        let ps = ProofStructure {
            kinds,
            edges,
            ins,
            outs,
        };
        if let Some(l) = ps.find_directed_cycle() {
            return Err(ProofNetError::CyclicStructure(l));
        }
        Ok(ps)
    }

    fn find_directed_cycle(&self) -> Option<LinkId> {
        // Kahn's algorithm; any link left with positive in-degree sits on a cycle.
        let n = self.kinds.len();
        let mut indeg: Vec<usize> = self.ins.iter().map(Vec::len).collect();
        let mut queue: Vec<LinkId> = (0..n).filter(|&l| indeg[l] == 0).collect();
        let mut seen = 0;
        while let Some(l) = queue.pop() {
            seen += 1;
            for &e in &self.outs[l] {
                let (_, tgt) = self.edges[e];
                indeg[tgt] -= 1;
                if indeg[tgt] == 0 {
                    queue.push(tgt);
                }
            }
        }
        if seen == n {
            None
        } else {
            indeg.iter().position(|&d| d > 0)
        }
    }

    pub fn link_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn kind(&self, l: LinkId) -> LinkKind {
        self.kinds[l]
    }

    pub fn kinds(&self) -> &[LinkKind] {
        &self.kinds
    }

    pub fn edges(&self) -> &[(LinkId, LinkId)] {
        &self.edges
    }

    pub fn edge(&self, e: PsEdgeId) -> (LinkId, LinkId) {
        self.edges[e]
    }

    /// Incoming edge ids of `l`, ascending.
    pub fn in_edges(&self, l: LinkId) -> &[PsEdgeId] {
        &self.ins[l]
    }

    pub fn out_edges(&self, l: LinkId) -> &[PsEdgeId] {
        &self.outs[l]
    }

    pub fn predecessors(&self, l: LinkId) -> Vec<LinkId> {
        self.ins[l].iter().map(|&e| self.edges[e].0).collect()
    }

    pub fn successors(&self, l: LinkId) -> Vec<LinkId> {
        self.outs[l].iter().map(|&e| self.edges[e].1).collect()
    }

    pub fn is_terminal(&self, l: LinkId) -> bool {
        self.outs[l].is_empty()
    }

    pub fn terminal_links(&self) -> impl Iterator<Item = LinkId> + '_ {
        (0..self.link_count()).filter(|&l| self.is_terminal(l))
    }

    pub fn par_links(&self) -> impl Iterator<Item = LinkId> + '_ {
        (0..self.link_count()).filter(|&l| self.kinds[l] == LinkKind::Par)
    }

    /// The same structure with link `l` relabeled. Degrees of ⊗ and ⅋ agree,
    /// so swapping between them revalidates trivially.
    pub fn with_kind(&self, l: LinkId, kind: LinkKind) -> Result<Self, ProofNetError> {
        let mut kinds = self.kinds.clone();
        kinds[l] = kind;
        ProofStructure::new(kinds, self.edges.clone())
    }

    /// Weakly connected components, labeled in order of smallest member link.
    pub fn weak_components(&self) -> Vec<usize> {
        let n = self.link_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            stack.push(start);
            while let Some(l) = stack.pop() {
                for &e in self.outs[l].iter().chain(self.ins[l].iter()) {
                    let (a, b) = self.edges[e];
                    for w in [a, b] {
                        if label[w] == usize::MAX {
                            label[w] = next;
                            stack.push(w);
                        }
                    }
                }
            }
            next += 1;
        }
        label
    }
}

/// Node of a proof structure with explicit conclusion vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Link(LinkKind),
    Conclusion,
}

/// The same structure with unlabeled conclusion vertices appended, one per
/// missing outgoing edge, so every labeled node has exact degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStructureWithConclusions {
    node_kinds: Vec<NodeKind>,
    edges: Vec<(usize, usize)>,
    link_count: usize,
    original_edge_count: usize,
}

impl ProofStructureWithConclusions {
    pub fn node_count(&self) -> usize {
        self.node_kinds.len()
    }

    pub fn conclusion_count(&self) -> usize {
        self.node_kinds.len() - self.link_count
    }

    pub fn link_count(&self) -> usize {
        self.link_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn node_kind(&self, v: usize) -> NodeKind {
        self.node_kinds[v]
    }

    /// Incoming edges of node `v`.
    pub fn in_edges(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|&(_, &(_, t))| t == v)
            .map(|(e, _)| e)
            .collect()
    }

    pub fn out_edges(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|&(_, &(s, _))| s == v)
            .map(|(e, _)| e)
            .collect()
    }
}

/// Adds the unique set of conclusion vertices to a proof structure: one per
/// missing out-slot, appended in link order.
pub fn add_conclusions(ps: &ProofStructure) -> ProofStructureWithConclusions {
    let mut node_kinds: Vec<NodeKind> = ps.kinds().iter().map(|&k| NodeKind::Link(k)).collect();
    let mut edges: Vec<(usize, usize)> = ps.edges().to_vec();
    for l in 0..ps.link_count() {
        let deficit = ps.kind(l).max_out() - ps.out_edges(l).len();
        for _ in 0..deficit {
            let v = node_kinds.len();
            node_kinds.push(NodeKind::Conclusion);
            edges.push((l, v));
        }
    }
    ProofStructureWithConclusions {
        node_kinds,
        edges,
        link_count: ps.link_count(),
        original_edge_count: ps.edge_count(),
    }
}

/// Inverse of [`add_conclusions`]: drop the conclusion vertices and their
/// incoming edges.
pub fn strip_conclusions(psc: &ProofStructureWithConclusions) -> ProofStructure {
    let kinds = psc.node_kinds[..psc.link_count]
        .iter()
        .map(|k| match k {
            NodeKind::Link(kind) => *kind,
            NodeKind::Conclusion => unreachable!("conclusions are appended after links"),
        })
        .collect();
    let edges = psc.edges[..psc.original_edge_count].to_vec();
    ProofStructure::new(kinds, edges).expect("stripping conclusions restores the original")
}

/// Two paired edges share a vertex; the anchor records which one, which
/// matters when the edges are parallel and share both endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgePair {
    pub first: usize,
    pub second: usize,
    pub anchor: usize,
}

/// An undirected graph (parallel edges allowed) with disjoint pairs of
/// adjacent edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub pairs: Vec<EdgePair>,
}

impl PairedGraph {
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| a == v || b == v)
            .map(|(e, _)| e)
            .collect()
    }
}

/// A choice of one edge from every pair, in pair order.
pub type Switching = Vec<usize>;

/// Forgets directions and labels and pairs the two premise edges of every
/// ⅋-link, anchored at that link.
pub fn correctness_graph(ps: &ProofStructure) -> PairedGraph {
    let mut pairs = Vec::new();
    for l in ps.par_links() {
        let ins = ps.in_edges(l);
        pairs.push(EdgePair {
            first: ins[0].min(ins[1]),
            second: ins[0].max(ins[1]),
            anchor: l,
        });
    }
    PairedGraph {
        vertices: ps.link_count(),
        edges: ps.edges().to_vec(),
        pairs,
    }
}

/// Correctness graph of a structure with conclusions; conclusion vertices
/// carry no pairs.
pub fn correctness_graph_with_conclusions(
    psc: &ProofStructureWithConclusions,
) -> PairedGraph {
    let mut pairs = Vec::new();
    for v in 0..psc.link_count() {
        if psc.node_kind(v) == NodeKind::Link(LinkKind::Par) {
            let ins = psc.in_edges(v);
            pairs.push(EdgePair {
                first: ins[0].min(ins[1]),
                second: ins[0].max(ins[1]),
                anchor: v,
            });
        }
    }
    PairedGraph {
        vertices: psc.node_count(),
        edges: psc.edges().to_vec(),
        pairs,
    }
}

/// The spanning subgraph selected by one switching.
#[derive(Debug, Clone)]
pub struct SwitchingGraph {
    pub vertices: usize,
    /// `(edge id in the paired graph, endpoints)`.
    pub edges: Vec<(usize, (usize, usize))>,
}

impl SwitchingGraph {
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut Vec<usize>, v: usize) -> usize {
            if parent[v] != v {
                let root = find(parent, parent[v]);
                parent[v] = root;
            }
            parent[v]
        }
        let mut components = self.vertices;
        for &(_, (a, b)) in &self.edges {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                parent[ra] = rb;
                components -= 1;
            }
        }
        components
    }

    /// Any cycle, as a canonical edge-id sequence; parallel edges count.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertices];
        for &(e, (a, b)) in &self.edges {
            adjacency[a].push((b, e));
            adjacency[b].push((a, e));
        }
        let mut state = vec![0u8; self.vertices]; // 0 unseen, 1 on stack, 2 done
        let mut parent_edge = vec![usize::MAX; self.vertices];
        let mut parent_vertex = vec![usize::MAX; self.vertices];
        for root in 0..self.vertices {
            if state[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            state[root] = 1;
            while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
                if *idx < adjacency[v].len() {
                    let (w, e) = adjacency[v][*idx];
                    *idx += 1;
                    if e == parent_edge[v] {
                        continue;
                    }
                    if state[w] == 1 {
                        // Back edge: walk v up to w collecting the cycle.
                        let mut cycle = vec![e];
                        let mut cur = v;
                        while cur != w {
                            cycle.push(parent_edge[cur]);
                            cur = parent_vertex[cur];
                        }
                        return Some(canonical_cycle(cycle));
                    }
                    if state[w] == 0 {
                        state[w] = 1;
                        parent_edge[w] = e;
                        parent_vertex[w] = v;
                        stack.push((w, 0));
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    pub fn is_forest(&self) -> bool {
        self.find_cycle().is_none()
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.component_count() <= 1
    }
}

/// The cyclic link sequence a switching cycle traverses, or why the edge
/// sequence is not one. `links[i]` sits between `edges[i-1]` and `edges[i]`.
pub fn switching_cycle_links(
    ps: &ProofStructure,
    edges: &[PsEdgeId],
) -> Result<Vec<LinkId>, String> {
    let k = edges.len();
    if k < 2 {
        return Err("needs at least two edges".into());
    }
    for &e in edges {
        if e >= ps.edge_count() {
            return Err(format!("edge {e} out of range"));
        }
    }
    let distinct_edges: BTreeSet<PsEdgeId> = edges.iter().copied().collect();
    if distinct_edges.len() != k {
        return Err("repeats an edge".into());
    }
    let mut links = Vec::with_capacity(k);
    if k == 2 {
        // A pair of parallel edges; the cycle visits both endpoints.
        let (s0, t0) = ps.edge(edges[0]);
        let (s1, t1) = ps.edge(edges[1]);
        if (s0, t0) != (s1, t1) && (s0, t0) != (t1, s1) {
            return Err("two-edge cycles need parallel edges".into());
        }
        links.push(s0);
        links.push(t0);
    } else {
        for i in 0..k {
            let prev = edges[(i + k - 1) % k];
            let cur = edges[i];
            let (a, b) = ps.edge(prev);
            let (c, d) = ps.edge(cur);
            let common = if a == c || a == d {
                a
            } else if b == c || b == d {
                b
            } else {
                return Err(format!("edges {prev} and {cur} do not share a link"));
            };
            links.push(common);
        }
    }
    let distinct: BTreeSet<LinkId> = links.iter().copied().collect();
    if distinct.len() != k {
        return Err("repeats a link".into());
    }
    // Each ⅋ pair may be crossed at most once.
    let mut par_premises: BTreeSet<LinkId> = BTreeSet::new();
    for &e in edges {
        let (_, tgt) = ps.edge(e);
        if ps.kind(tgt) == LinkKind::Par && !par_premises.insert(tgt) {
            return Err("uses both premises of a ⅋-link".into());
        }
    }
    Ok(links)
}

pub fn is_switching_cycle(ps: &ProofStructure, edges: &[PsEdgeId]) -> bool {
    switching_cycle_links(ps, edges).is_ok()
}

pub const DEFAULT_PAIR_BOUND: usize = 24;

/// Iterates over all `2^pairs` switchings of a paired graph together with
/// their switching graphs.
pub fn switching_graphs(
    pg: &PairedGraph,
) -> Result<impl Iterator<Item = (Switching, SwitchingGraph)> + '_, ProofNetError> {
    switching_graphs_bounded(pg, DEFAULT_PAIR_BOUND)
}

pub fn switching_graphs_bounded(
    pg: &PairedGraph,
    max_pairs: usize,
) -> Result<impl Iterator<Item = (Switching, SwitchingGraph)> + '_, ProofNetError> {
    if pg.pairs.len() > max_pairs {
        return Err(ProofNetError::TooManyPairs(pg.pairs.len(), max_pairs));
    }
    let total: u64 = 1 << pg.pairs.len();
    Ok((0..total).map(move |mask| switching_graph_for_mask(pg, mask)))
}

/// Builds the switching selected by `mask`: bit `i` clear keeps the first
/// edge of pair `i`, set keeps the second.
pub(crate) fn switching_graph_for_mask(
    pg: &PairedGraph,
    mask: u64,
) -> (Switching, SwitchingGraph) {
    let mut removed = BTreeSet::new();
    let mut switching = Vec::with_capacity(pg.pairs.len());
    for (i, pair) in pg.pairs.iter().enumerate() {
        let (keep, drop) = if mask >> i & 1 == 0 {
            (pair.first, pair.second)
        } else {
            (pair.second, pair.first)
        };
        switching.push(keep);
        removed.insert(drop);
    }
    let edges = pg
        .edges
        .iter()
        .enumerate()
        .filter(|(e, _)| !removed.contains(e))
        .map(|(e, &endpoints)| (e, endpoints))
        .collect();
    (
        switching,
        SwitchingGraph {
            vertices: pg.vertices,
            edges,
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrMode {
    Mix,
    NoMix,
}

/// How a structure fails the acyclicity-and-connectedness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrFailure {
    /// A cycle in some switching graph, as proof-structure edge ids.
    SwitchingCycle(Vec<PsEdgeId>),
    /// Every switching graph is a forest but not a tree (Mix-only correctness).
    Disconnected { components: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrVerdict {
    Correct,
    Incorrect(DrFailure),
}

impl DrVerdict {
    pub fn is_correct(&self) -> bool {
        matches!(self, DrVerdict::Correct)
    }
}

/// Brute-force correctness test: enumerates every switching graph and checks
/// that all of them are forests (`Mix`) or trees (`NoMix`). The fast path
/// for large structures goes through the matching translations instead.
pub fn dr_check(ps: &ProofStructure, mode: DrMode) -> Result<DrVerdict, ProofNetError> {
    dr_check_bounded(ps, mode, DEFAULT_PAIR_BOUND)
}

pub fn dr_check_bounded(
    ps: &ProofStructure,
    mode: DrMode,
    max_pairs: usize,
) -> Result<DrVerdict, ProofNetError> {
    let pg = correctness_graph(ps);
    let mut worst_components = 1;
    for (_, sg) in switching_graphs_bounded(&pg, max_pairs)? {
        if let Some(cycle) = sg.find_cycle() {
            return Ok(DrVerdict::Incorrect(DrFailure::SwitchingCycle(cycle)));
        }
        worst_components = worst_components.max(sg.component_count());
    }
    if mode == DrMode::NoMix && worst_components > 1 {
        return Ok(DrVerdict::Incorrect(DrFailure::Disconnected {
            components: worst_components,
        }));
    }
    Ok(DrVerdict::Correct)
}

/// Component count shared by all switching graphs of a correct structure:
/// `links − (edges − pairs)`. Meaningless for incorrect structures.
pub fn mix_count_formula(ps: &ProofStructure) -> i64 {
    let pairs = ps.par_links().count() as i64;
    ps.link_count() as i64 - (ps.edge_count() as i64 - pairs)
}

/// Switching-graph component count of a correct structure, checked by the
/// brute-force criterion first. The structure proves one sequent per
/// component; a value of 1 means no Mix is needed.
pub fn mix_count(ps: &ProofStructure) -> Result<usize, ProofNetError> {
    match dr_check(ps, DrMode::Mix)? {
        DrVerdict::Correct => Ok(mix_count_formula(ps) as usize),
        DrVerdict::Incorrect(_) => Err(ProofNetError::NotCorrect),
    }
}
