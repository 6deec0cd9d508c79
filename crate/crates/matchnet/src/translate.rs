//! The reductions between proof structures and graphs with perfect
//! matchings, in both directions, plus the cycle correspondences they
//! induce.
//!
//! Vertex naming is fixed so that structural equality is meaningful:
//! edge-based translations use two vertices `2e` / `2e+1` per directed edge
//! (source side first), the link-based one uses `2l` / `2l+1` per link.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{is_alternating_cycle, AlternatingCycle, EdgeId, Graph, Matching, VertexId};
use crate::proofnet::{
    correctness_graph_with_conclusions, LinkId, LinkKind, ProofStructure,
    ProofStructureWithConclusions, PsEdgeId,
};
use crate::transitions::{pairs_to_transitions_parts, TransitionSystem};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TranslateError {
    #[error("edge sequence is not an alternating cycle")]
    NotAlternating,
    #[error("edge sequence is not a switching cycle: {0}")]
    NotASwitchingCycle(String),
    #[error("the empty graph has no proofification")]
    EmptyGraph,
    #[error("matching is not perfect")]
    NotPerfect,
}

/// A graph equipped with a perfect matching and a record of where each
/// matching edge came from (a directed edge, a link, or an original edge,
/// depending on the translation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedGraph {
    pub graph: Graph,
    pub matching: Matching,
    pub origin: BTreeMap<EdgeId, usize>,
}

impl MatchedGraph {
    fn edge_pair_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect()
    }

    fn matching_pair_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.matching
            .iter()
            .map(|e| {
                let (u, v) = self.graph.endpoints(e);
                (u.min(v), u.max(v))
            })
            .collect()
    }
}

/// Edge-based translation of a proof structure with conclusions. Every
/// directed edge becomes a matching edge spanning its source side (`2e`) and
/// target side (`2e+1`); each link contributes non-matching edges among the
/// edge-ends it touches: the two output ends of an ax, the triangle of both
/// premise ends and the output end of a ⊗, and the two premise-to-output
/// edges of a ⅋. Conclusion vertices contribute nothing.
pub fn rb_graph(psc: &ProofStructureWithConclusions) -> MatchedGraph {
    let edge_total = psc.edges().len();
    let mut graph = Graph::new(2 * edge_total);
    let mut matching_ids = Vec::with_capacity(edge_total);
    let mut origin = BTreeMap::new();
    for e in 0..edge_total {
        let id = graph.add_edge(2 * e, 2 * e + 1).unwrap();
        matching_ids.push(id);
        origin.insert(id, e);
    }
    for v in 0..psc.link_count() {
        let kind = match psc.node_kind(v) {
            crate::proofnet::NodeKind::Link(k) => k,
            crate::proofnet::NodeKind::Conclusion => continue,
        };
        match kind {
            LinkKind::Ax => {
                let outs = psc.out_edges(v);
                graph.add_edge(2 * outs[0], 2 * outs[1]).unwrap();
            }
            LinkKind::Tensor => {
                let ins = psc.in_edges(v);
                let out = psc.out_edges(v)[0];
                graph.add_edge(2 * ins[0] + 1, 2 * ins[1] + 1).unwrap();
                graph.add_edge(2 * out, 2 * ins[0] + 1).unwrap();
                graph.add_edge(2 * out, 2 * ins[1] + 1).unwrap();
            }
            LinkKind::Par => {
                let ins = psc.in_edges(v);
                let out = psc.out_edges(v)[0];
                graph.add_edge(2 * out, 2 * ins[0] + 1).unwrap();
                graph.add_edge(2 * out, 2 * ins[1] + 1).unwrap();
            }
        }
    }
    let matching = Matching::new(&graph, matching_ids).unwrap();
    MatchedGraph {
        graph,
        matching,
        origin,
    }
}

/// Correspondence maps produced by [`proofification`].
#[derive(Debug, Clone, Default)]
pub struct ProofificationMap {
    pub ax_of_edge: BTreeMap<EdgeId, LinkId>,
    pub tensor_of_edge: BTreeMap<EdgeId, LinkId>,
    pub pars_of_vertex: BTreeMap<VertexId, Vec<LinkId>>,
}

/// Matching-to-net translation: an ax-link per non-matching edge, a comb of
/// ⅋-links per vertex gathering its non-matching ends (ordered by ascending
/// neighbor id, built as a left comb), and a terminal ⊗-link per matching
/// edge.
#[allow(clippy::needless_range_loop)]
pub fn proofification(
    g: &Graph,
    m: &Matching,
) -> (ProofStructure, ProofificationMap) {
    assert!(
        m.is_perfect(g),
        "proofification requires a perfect matching"
    );
    assert!(g.vertex_count() > 0, "the empty graph has no proofification");

    let mut kinds: Vec<LinkKind> = Vec::new();
    let mut edges: Vec<(LinkId, LinkId)> = Vec::new();
    let mut maps = ProofificationMap::default();

    for e in 0..g.edge_count() {
        if !m.contains(e) {
            maps.ax_of_edge.insert(e, kinds.len());
            kinds.push(LinkKind::Ax);
        }
    }

    // Per vertex, the link whose output stands for the bundled non-matching
    // ends at that vertex.
    let mut bundle_source: Vec<LinkId> = vec![usize::MAX; g.vertex_count()];
    for u in 0..g.vertex_count() {
        let mut incident: Vec<(VertexId, EdgeId)> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&(_, e)| !m.contains(e))
            .collect();
        incident.sort_unstable();
        match incident.len() {
            0 => {
                // Degree-one vertex: a fresh ax-link supplies its output.
                bundle_source[u] = kinds.len();
                kinds.push(LinkKind::Ax);
            }
            1 => {
                bundle_source[u] = maps.ax_of_edge[&incident[0].1];
            }
            _ => {
                let mut combs = Vec::new();
                let mut prev = maps.ax_of_edge[&incident[0].1];
                for &(_, e) in &incident[1..] {
                    let par = kinds.len();
                    kinds.push(LinkKind::Par);
                    edges.push((prev, par));
                    edges.push((maps.ax_of_edge[&e], par));
                    combs.push(par);
                    prev = par;
                }
                bundle_source[u] = prev;
                maps.pars_of_vertex.insert(u, combs);
            }
        }
    }

    for e in m.iter() {
        let (a, b) = g.endpoints(e);
        let tensor = kinds.len();
        kinds.push(LinkKind::Tensor);
        edges.push((bundle_source[a], tensor));
        edges.push((bundle_source[b], tensor));
        maps.tensor_of_edge.insert(e, tensor);
    }

    let ps = ProofStructure::new(kinds, edges)
        .expect("proofification always yields a valid structure");
    (ps, maps)
}

/// Correspondence maps produced by [`graphification`].
#[derive(Debug, Clone)]
pub struct GraphificationMap {
    /// Per proof-structure edge, the graph vertex the source's endpoints
    /// attach to: the single premise vertex `2t` of a ⅋ target, or `2t` /
    /// `2t+1` for the first / second premise of a ⊗ target.
    pub attach: Vec<VertexId>,
    /// Non-matching graph edge id → proof-structure edges that induced it
    /// (two of them when parallel attachments collapse).
    pub sources: BTreeMap<EdgeId, Vec<PsEdgeId>>,
}

impl GraphificationMap {
    pub fn matching_edge_of_link(&self, l: LinkId) -> EdgeId {
        l
    }
}

/// Link-based translation: one matching edge `(2l, 2l+1)` per link `l`
/// (matching edge id = link id), and per binary link the non-matching
/// attachments of its premises' endpoints — both premises onto `2l` for a
/// ⅋, the premises split across `2l` and `2l+1` for a ⊗. Parallel
/// attachments collapse to a single simple edge.
#[allow(clippy::needless_range_loop)]
pub fn graphification(ps: &ProofStructure) -> (MatchedGraph, GraphificationMap) {
    let links = ps.link_count();
    let mut graph = Graph::new(2 * links);
    let mut origin = BTreeMap::new();
    for l in 0..links {
        let id = graph.add_edge(2 * l, 2 * l + 1).unwrap();
        debug_assert_eq!(id, l);
        origin.insert(id, l);
    }
    let mut attach = vec![usize::MAX; ps.edge_count()];
    for l in 0..links {
        let ins = ps.in_edges(l);
        match ps.kind(l) {
            LinkKind::Ax => {}
            LinkKind::Par => {
                for &e in ins {
                    attach[e] = 2 * l;
                }
            }
            LinkKind::Tensor => {
                attach[ins[0]] = 2 * l;
                attach[ins[1]] = 2 * l + 1;
            }
        }
    }
    let mut sources: BTreeMap<EdgeId, Vec<PsEdgeId>> = BTreeMap::new();
    let mut by_pair: BTreeMap<(VertexId, VertexId), EdgeId> = BTreeMap::new();
    for e in 0..ps.edge_count() {
        let (src, _) = ps.edge(e);
        let hub = attach[e];
        for endpoint in [2 * src, 2 * src + 1] {
            let key = (endpoint.min(hub), endpoint.max(hub));
            let id = *by_pair
                .entry(key)
                .or_insert_with(|| graph.add_edge(key.0, key.1).unwrap());
            let entry = sources.entry(id).or_default();
            if !entry.contains(&e) {
                entry.push(e);
            }
        }
    }
    let matching = Matching::new(&graph, 0..links).unwrap();
    (
        MatchedGraph {
            graph,
            matching,
            origin,
        },
        GraphificationMap { attach, sources },
    )
}

/// Turns an alternating cycle of a graphification into the switching cycle
/// it projects to: the links of its matching edges in cyclic order, joined
/// by the proof-structure edges that induced the connecting non-matching
/// edges (smallest edge id when a collapsed parallel pair gives a choice).
pub fn alternating_cycle_to_switching(
    ps: &ProofStructure,
    mg: &MatchedGraph,
    map: &GraphificationMap,
    cycle: &[EdgeId],
) -> Result<Vec<PsEdgeId>, TranslateError> {
    if !is_alternating_cycle(&mg.graph, &mg.matching, cycle) {
        return Err(TranslateError::NotAlternating);
    }
    let offset = cycle
        .iter()
        .position(|&e| mg.matching.contains(e))
        .ok_or(TranslateError::NotAlternating)?;
    let k = cycle.len();
    let mut switching = Vec::with_capacity(k / 2);
    for i in 0..k / 2 {
        let connector = cycle[(offset + 2 * i + 1) % k];
        let candidates = map
            .sources
            .get(&connector)
            .ok_or(TranslateError::NotAlternating)?;
        switching.push(*candidates.iter().min().unwrap());
    }
    let switching = crate::graph::canonical_cycle(switching);
    debug_assert!(crate::proofnet::is_switching_cycle(ps, &switching));
    Ok(switching)
}

/// Inverse direction: realizes a switching cycle as an alternating cycle of
/// the graphification. Each link contributes its matching edge; consecutive
/// links are joined through the attachment vertex of the proof-structure
/// edge between them, entering and leaving every matching edge at opposite
/// endpoints.
pub fn switching_cycle_to_alternating(
    ps: &ProofStructure,
    mg: &MatchedGraph,
    map: &GraphificationMap,
    switching_cycle: &[PsEdgeId],
) -> Result<AlternatingCycle, TranslateError> {
    let k = switching_cycle.len();
    let links = crate::proofnet::switching_cycle_links(ps, switching_cycle)
        .map_err(TranslateError::NotASwitchingCycle)?;

    // Entry endpoint of each link's matching edge; the edge between
    // links[i] and links[(i+1)%k] is switching_cycle[i]. When that edge
    // points at links[i] (resp. links[i+1]), the attachment vertex pins the
    // exit (resp. entry); ax links are free and default to entering at the
    // even endpoint.
    let mut entry: Vec<Option<VertexId>> = vec![None; k];
    let mut exit: Vec<Option<VertexId>> = vec![None; k];
    for i in 0..k {
        let e = switching_cycle[i];
        let (_, tgt) = ps.edge(e);
        let next = (i + 1) % k;
        if tgt == links[next] {
            entry[next] = Some(map.attach[e]);
        } else if tgt == links[i] {
            exit[i] = Some(map.attach[e]);
        } else {
            return Err(TranslateError::NotASwitchingCycle(format!(
                "edge {e} does not touch its neighboring links"
            )));
        }
    }
    for i in 0..k {
        let l = links[i];
        let sibling = |v: VertexId| if v == 2 * l { 2 * l + 1 } else { 2 * l };
        match (entry[i], exit[i]) {
            (Some(a), Some(b)) => {
                if a == b {
                    return Err(TranslateError::NotASwitchingCycle(
                        "enters and leaves a matching edge at the same endpoint".into(),
                    ));
                }
            }
            (Some(a), None) => exit[i] = Some(sibling(a)),
            (None, Some(b)) => entry[i] = Some(sibling(b)),
            (None, None) => {
                entry[i] = Some(2 * l);
                exit[i] = Some(2 * l + 1);
            }
        }
    }

    let mut edges = Vec::with_capacity(2 * k);
    for i in 0..k {
        let l = links[i];
        edges.push(map.matching_edge_of_link(l));
        let from = exit[i].unwrap();
        let to = entry[(i + 1) % k].unwrap();
        let connector = mg.graph.edge_between(from, to).ok_or_else(|| {
            TranslateError::NotASwitchingCycle(format!(
                "no attachment between vertices {from} and {to}"
            ))
        })?;
        edges.push(connector);
    }
    if !is_alternating_cycle(&mg.graph, &mg.matching, &edges) {
        return Err(TranslateError::NotASwitchingCycle(
            "projection does not close into an alternating cycle".into(),
        ));
    }
    Ok(AlternatingCycle::canonical(edges))
}

/// Fast correctness test through the link-based translation: a structure is
/// a proof net exactly when its graphification's matching is unique; a
/// uniqueness failure maps back to a switching cycle.
pub fn check_mix_correctness(ps: &ProofStructure) -> Result<(), Vec<PsEdgeId>> {
    let (mg, map) = graphification(ps);
    match crate::matching::is_unique_pm(&mg.graph, &mg.matching)
        .expect("graphification matchings are perfect")
    {
        crate::matching::Uniqueness::Unique => Ok(()),
        crate::matching::Uniqueness::NotUnique(cycle) => Err(alternating_cycle_to_switching(
            ps,
            &mg,
            &map,
            &cycle.edge_ids,
        )
        .expect("alternating witnesses project to switching cycles")),
    }
}

/// Vertex-per-edge-end translation of a graph with allowed transitions: a
/// matching edge per original edge, and a non-matching edge per allowed
/// transition at a shared endpoint.
pub fn pm_line_graph(g: &Graph, t: &TransitionSystem) -> MatchedGraph {
    pm_line_graph_parts(g.vertex_count(), g.edges(), t)
}

/// Same construction over a raw edge list (parallel edges permitted), used
/// for correctness graphs.
pub fn pm_line_graph_parts(
    vertices: usize,
    edge_list: &[(VertexId, VertexId)],
    t: &TransitionSystem,
) -> MatchedGraph {
    let vertex_of = |e: EdgeId, v: VertexId| -> VertexId {
        if edge_list[e].0 == v {
            2 * e
        } else {
            2 * e + 1
        }
    };
    let mut graph = Graph::new(2 * edge_list.len());
    let mut origin = BTreeMap::new();
    for e in 0..edge_list.len() {
        let id = graph.add_edge(2 * e, 2 * e + 1).unwrap();
        origin.insert(id, e);
    }
    for v in 0..vertices {
        for &(e, f) in t.allowed_at(v) {
            graph.add_edge(vertex_of(e, v), vertex_of(f, v)).unwrap();
        }
    }
    let matching = Matching::new(&graph, 0..edge_list.len()).unwrap();
    MatchedGraph {
        graph,
        matching,
        origin,
    }
}

/// Checks that the edge-based translation coincides, vertex for vertex, with
/// the transition-system translation applied to the correctness graph.
pub fn verify_rb_equals_lpm(psc: &ProofStructureWithConclusions) -> bool {
    let rb = rb_graph(psc);
    let cg = correctness_graph_with_conclusions(psc);
    let t = pairs_to_transitions_parts(cg.vertices, &cg.edges, &cg.pairs);
    let lpm = pm_line_graph_parts(cg.vertices, &cg.edges, &t);
    rb.graph.vertex_count() == lpm.graph.vertex_count()
        && rb.edge_pair_set() == lpm.edge_pair_set()
        && rb.matching_pair_set() == lpm.matching_pair_set()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matching::{is_unique_pm, Uniqueness};
    use crate::proofnet::add_conclusions;

    #[test]
    fn rb_graph_of_single_ax() {
        let psc = add_conclusions(&fixtures::single_ax());
        let rb = rb_graph(&psc);
        assert_eq!(rb.graph.vertex_count(), 4);
        assert_eq!(rb.matching.len(), 2);
        assert_eq!(rb.graph.edge_count() - rb.matching.len(), 1);
    }

    #[test]
    fn rb_matching_edges_count_directed_edges() {
        for ps in [
            fixtures::double_par_net(),
            fixtures::fan_net(),
            fixtures::par_of_ax(),
            fixtures::tensor_of_two_axes(),
        ] {
            let psc = add_conclusions(&ps);
            let rb = rb_graph(&psc);
            assert_eq!(rb.matching.len(), psc.edges().len());
        }
    }

    #[test]
    fn rb_graph_of_double_par_net_has_seven_matching_edges() {
        let psc = add_conclusions(&fixtures::double_par_net());
        let rb = rb_graph(&psc);
        assert_eq!(rb.matching.len(), 7);
        assert_eq!(is_unique_pm(&rb.graph, &rb.matching).unwrap(), Uniqueness::Unique);
    }

    #[test]
    fn proofification_of_one_matching_edge() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let m = Matching::new(&g, [0]).unwrap();
        let (ps, maps) = proofification(&g, &m);
        assert_eq!(ps.link_count(), 3);
        assert_eq!(
            ps.kinds()
                .iter()
                .filter(|&&k| k == LinkKind::Ax)
                .count(),
            2
        );
        assert_eq!(maps.tensor_of_edge.len(), 1);
    }

    #[test]
    fn proofification_of_chorded_square_shape() {
        let (g, m) = fixtures::chorded_square();
        let (ps, maps) = proofification(&g, &m);
        let count = |kind: LinkKind| ps.kinds().iter().filter(|&&k| k == kind).count();
        assert_eq!(count(LinkKind::Ax), 3);
        assert_eq!(count(LinkKind::Par), 2);
        assert_eq!(count(LinkKind::Tensor), 2);
        assert_eq!(maps.pars_of_vertex.len(), 2);
    }

    #[test]
    fn proofification_of_linked_triangles_shape() {
        let (g, m) = fixtures::linked_triangles();
        let (ps, _) = proofification(&g, &m);
        let count = |kind: LinkKind| ps.kinds().iter().filter(|&&k| k == kind).count();
        assert_eq!(count(LinkKind::Ax), 4);
        assert_eq!(count(LinkKind::Par), 2);
        assert_eq!(count(LinkKind::Tensor), 3);
        // The unique matching even yields a Mix-free net.
        assert_eq!(crate::proofnet::mix_count(&ps).unwrap(), 1);
    }

    #[test]
    fn graphification_of_single_ax() {
        let (mg, _) = graphification(&fixtures::single_ax());
        assert_eq!(mg.graph.vertex_count(), 2);
        assert_eq!(mg.graph.edge_count(), 1);
        assert_eq!(mg.matching.len(), 1);
    }

    #[test]
    fn graphification_of_double_par_net_shape() {
        let (mg, _) = graphification(&fixtures::double_par_net());
        assert_eq!(mg.graph.vertex_count(), 10);
        assert_eq!(mg.matching.len(), 5);
        assert_eq!(mg.graph.edge_count(), 17); // 5 matching + 12 attachments
    }

    #[test]
    fn graphification_collapses_parallel_attachments() {
        let (mg, map) = graphification(&fixtures::par_of_ax());
        // Two premise edges from the same ax collapse onto two simple edges.
        assert_eq!(mg.graph.edge_count(), 4);
        let collapsed: Vec<_> = map
            .sources
            .values()
            .filter(|sources| sources.len() == 2)
            .collect();
        assert_eq!(collapsed.len(), 2);
    }

    #[test]
    fn graphification_of_tensor_net_is_the_linked_triangles_graph() {
        // Link-based translation of the two-ax ⊗-net, compared up to
        // isomorphism with the two-triangle instance.
        let (mg, _) = graphification(&fixtures::tensor_of_two_axes());
        let (g, m) = fixtures::linked_triangles();
        assert!(isomorphic_matched(&mg.graph, &mg.matching, &g, &m));
    }

    fn isomorphic_matched(g1: &Graph, m1: &Matching, g2: &Graph, m2: &Matching) -> bool {
        if g1.vertex_count() != g2.vertex_count()
            || g1.edge_count() != g2.edge_count()
            || m1.len() != m2.len()
        {
            return false;
        }
        let n = g1.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let edge_set = |g: &Graph, m: &Matching, perm: Option<&[usize]>| {
            let map = |v: usize| perm.map_or(v, |p| p[v]);
            let mut edges = BTreeSet::new();
            let mut matched = BTreeSet::new();
            for (id, &(u, v)) in g.edges().iter().enumerate() {
                let key = (map(u).min(map(v)), map(u).max(map(v)));
                edges.insert(key);
                if m.contains(id) {
                    matched.insert(key);
                }
            }
            (edges, matched)
        };
        let target = edge_set(g2, m2, None);
        permute(&mut perm, 0, &mut |p| edge_set(g1, m1, Some(p)) == target)
    }

    fn permute(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return check(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permute(perm, k + 1, check) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }

    #[test]
    fn cycle_mapping_roundtrip_on_the_rewired_example() {
        // The ⊗-of-ax structure has a length-2 switching cycle mapping to a
        // 4-cycle in its graphification.
        let ps = fixtures::tensor_of_ax();
        let (mg, map) = graphification(&ps);
        match is_unique_pm(&mg.graph, &mg.matching).unwrap() {
            Uniqueness::NotUnique(cycle) => {
                let switching =
                    alternating_cycle_to_switching(&ps, &mg, &map, &cycle.edge_ids).unwrap();
                assert_eq!(switching.len(), 2);
                let back =
                    switching_cycle_to_alternating(&ps, &mg, &map, &switching).unwrap();
                let again =
                    alternating_cycle_to_switching(&ps, &mg, &map, &back.edge_ids).unwrap();
                assert_eq!(again, switching);
            }
            Uniqueness::Unique => panic!("⊗ of ax must have an alternating cycle"),
        }
    }

    #[test]
    fn correct_nets_have_no_cycles_to_map() {
        for ps in [fixtures::double_par_net(), fixtures::fan_net()] {
            let (mg, _) = graphification(&ps);
            assert_eq!(
                is_unique_pm(&mg.graph, &mg.matching).unwrap(),
                Uniqueness::Unique
            );
        }
    }

    #[test]
    fn pm_line_graph_of_single_edge() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let t = TransitionSystem::forbid_everything(&g);
        let mg = pm_line_graph(&g, &t);
        assert_eq!(mg.graph.vertex_count(), 2);
        assert_eq!(mg.graph.edge_count(), 1);
        assert_eq!(mg.matching.len(), 1);
    }

    #[test]
    fn pm_line_graph_of_star_example() {
        let pg = fixtures::star_with_pairs();
        let g = Graph::from_edges(pg.vertices, pg.edges.iter().copied()).unwrap();
        let t = crate::transitions::pairs_to_transitions(&pg);
        let mg = pm_line_graph(&g, &t);
        assert_eq!(mg.graph.vertex_count(), 12);
        assert_eq!(mg.matching.len(), 6);
        assert_eq!(mg.graph.edge_count() - mg.matching.len(), 8);
    }

    #[test]
    fn rb_equals_lpm_on_fixture_nets() {
        for ps in [
            fixtures::single_ax(),
            fixtures::par_of_ax(),
            fixtures::tensor_of_ax(),
            fixtures::tensor_of_two_axes(),
            fixtures::double_par_net(),
            fixtures::fan_net(),
            fixtures::linked_triangles_net(),
        ] {
            assert!(verify_rb_equals_lpm(&add_conclusions(&ps)));
        }
    }
}
