//! Graphs with forbidden transitions: per-vertex allowed pairs of incident
//! edges, compatible closed trails, and their detection through the
//! vertex-per-edge-end matching translation.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{canonical_cycle, EdgeId, Graph, VertexId};
use crate::matching::{is_unique_pm, Uniqueness};
use crate::proofnet::{EdgePair, PairedGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransitionsError {
    #[error("edge {edge} is not incident to vertex {vertex}")]
    NotIncident { vertex: VertexId, edge: EdgeId },
    #[error("more than {cap} closed trails")]
    CapExceeded { cap: usize },
}

/// Per-vertex allowed transitions: unordered pairs of incident edges that a
/// trail may traverse consecutively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionSystem {
    allowed: Vec<BTreeSet<(EdgeId, EdgeId)>>,
}

impl TransitionSystem {
    pub fn from_allowed(
        g: &Graph,
        allowed: Vec<Vec<(EdgeId, EdgeId)>>,
    ) -> Result<Self, TransitionsError> {
        assert_eq!(allowed.len(), g.vertex_count());
        let mut normalized = vec![BTreeSet::new(); g.vertex_count()];
        for (v, pairs) in allowed.into_iter().enumerate() {
            for (e, f) in pairs {
                for edge in [e, f] {
                    let (a, b) = g.endpoints(edge);
                    if a != v && b != v {
                        return Err(TransitionsError::NotIncident { vertex: v, edge });
                    }
                }
                normalized[v].insert((e.min(f), e.max(f)));
            }
        }
        Ok(TransitionSystem { allowed: normalized })
    }

    /// Every pair of distinct incident edges allowed at every vertex.
    pub fn all_allowed(g: &Graph) -> Self {
        let mut allowed = vec![BTreeSet::new(); g.vertex_count()];
        for (v, set) in allowed.iter_mut().enumerate() {
            let incident = g.neighbors(v);
            for i in 0..incident.len() {
                for j in i + 1..incident.len() {
                    let (e, f) = (incident[i].1, incident[j].1);
                    set.insert((e.min(f), e.max(f)));
                }
            }
        }
        TransitionSystem { allowed }
    }

    pub fn forbid_everything(g: &Graph) -> Self {
        TransitionSystem {
            allowed: vec![BTreeSet::new(); g.vertex_count()],
        }
    }

    pub fn allows(&self, v: VertexId, e: EdgeId, f: EdgeId) -> bool {
        self.allowed[v].contains(&(e.min(f), e.max(f)))
    }

    pub fn allowed_at(&self, v: VertexId) -> &BTreeSet<(EdgeId, EdgeId)> {
        &self.allowed[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.allowed.len()
    }

    pub fn allowed_lists(&self) -> Vec<Vec<(EdgeId, EdgeId)>> {
        self.allowed
            .iter()
            .map(|set| set.iter().copied().collect())
            .collect()
    }
}

/// Transition system of a paired graph: at every vertex all incident pairs
/// are allowed except a pair's two edges at its anchor vertex.
pub fn pairs_to_transitions(pg: &PairedGraph) -> TransitionSystem {
    pairs_to_transitions_parts(pg.vertices, &pg.edges, &pg.pairs)
}

pub fn pairs_to_transitions_parts(
    vertices: usize,
    edges: &[(VertexId, VertexId)],
    pairs: &[EdgePair],
) -> TransitionSystem {
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); vertices];
    for (e, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(e);
        if b != a {
            incident[b].push(e);
        }
    }
    let forbidden: BTreeSet<(VertexId, EdgeId, EdgeId)> = pairs
        .iter()
        .map(|p| {
            (
                p.anchor,
                p.first.min(p.second),
                p.first.max(p.second),
            )
        })
        .collect();
    let mut allowed = vec![BTreeSet::new(); vertices];
    for (v, set) in allowed.iter_mut().enumerate() {
        for i in 0..incident[v].len() {
            for j in i + 1..incident[v].len() {
                let (e, f) = (incident[v][i], incident[v][j]);
                let key = (v, e.min(f), e.max(f));
                if !forbidden.contains(&key) {
                    set.insert((e.min(f), e.max(f)));
                }
            }
        }
    }
    TransitionSystem { allowed }
}

/// A closed walk without edge repetitions (vertex repetitions allowed),
/// every transition permitted, stored as a canonical cyclic edge sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClosedTrail {
    pub edge_ids: Vec<EdgeId>,
}

impl ClosedTrail {
    pub fn canonical(edges: Vec<EdgeId>) -> Self {
        ClosedTrail {
            edge_ids: canonical_cycle(edges),
        }
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    /// The transition vertices, `vertex[i]` between edges `i-1` and `i`.
    pub fn transition_vertices(&self, g: &Graph) -> Option<Vec<VertexId>> {
        let k = self.edge_ids.len();
        let mut vertices = Vec::with_capacity(k);
        for i in 0..k {
            let e = self.edge_ids[(i + k - 1) % k];
            let f = self.edge_ids[i];
            let (a, b) = g.endpoints(e);
            let (c, d) = g.endpoints(f);
            let shared = if a == c || a == d {
                a
            } else if b == c || b == d {
                b
            } else {
                return None;
            };
            vertices.push(shared);
        }
        Some(vertices)
    }

    /// A trail that never revisits a vertex is a cycle.
    pub fn is_cycle(&self, g: &Graph) -> bool {
        match self.transition_vertices(g) {
            Some(vertices) => {
                let distinct: BTreeSet<VertexId> = vertices.iter().copied().collect();
                distinct.len() == vertices.len()
            }
            None => false,
        }
    }
}

/// Full compatibility check for a cyclic edge sequence.
pub fn is_compatible_closed_trail(g: &Graph, t: &TransitionSystem, edges: &[EdgeId]) -> bool {
    let k = edges.len();
    if k < 3 {
        return false;
    }
    let distinct: BTreeSet<EdgeId> = edges.iter().copied().collect();
    if distinct.len() != k || edges.iter().any(|&e| e >= g.edge_count()) {
        return false;
    }
    let trail = ClosedTrail {
        edge_ids: edges.to_vec(),
    };
    let Some(vertices) = trail.transition_vertices(g) else {
        return false;
    };
    // Walk consistency: edge i runs between the transition vertices on
    // either side of it, which must be its two distinct endpoints.
    for i in 0..k {
        let enter = vertices[i];
        let leave = vertices[(i + 1) % k];
        let (a, b) = g.endpoints(edges[i]);
        if (enter, leave) != (a, b) && (enter, leave) != (b, a) {
            return false;
        }
        let prev = edges[(i + k - 1) % k];
        if !t.allows(enter, prev, edges[i]) {
            return false;
        }
    }
    true
}

/// Finds a compatible closed trail by testing uniqueness of the matching in
/// the vertex-per-edge-end translation: an alternating cycle of length `2k`
/// projects to a closed trail of length `k` through its matching edges.
pub fn find_compatible_closed_trail(g: &Graph, t: &TransitionSystem) -> Option<ClosedTrail> {
    let mg = crate::translate::pm_line_graph(g, t);
    match is_unique_pm(&mg.graph, &mg.matching).expect("line-graph matching is perfect") {
        Uniqueness::Unique => None,
        Uniqueness::NotUnique(cycle) => {
            let offset = cycle
                .edge_ids
                .iter()
                .position(|&e| mg.matching.contains(e))
                .expect("alternating cycles contain matching edges");
            let k = cycle.edge_ids.len();
            let mut edges = Vec::with_capacity(k / 2);
            for i in 0..k / 2 {
                let matched = cycle.edge_ids[(offset + 2 * i) % k];
                edges.push(mg.origin[&matched]);
            }
            let trail = ClosedTrail::canonical(edges);
            debug_assert!(is_compatible_closed_trail(g, t, &trail.edge_ids));
            Some(trail)
        }
    }
}

/// Exhaustive enumeration of compatible closed trails up to rotation and
/// reflection. Exponential; an oracle for small instances.
pub fn brute_force_closed_trails(
    g: &Graph,
    t: &TransitionSystem,
    cap: usize,
) -> Result<Vec<ClosedTrail>, TransitionsError> {
    let mut found: BTreeSet<ClosedTrail> = BTreeSet::new();

    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &Graph,
        t: &TransitionSystem,
        start_edge: EdgeId,
        start_vertex: VertexId,
        cur: VertexId,
        path: &mut Vec<EdgeId>,
        used: &mut BTreeSet<EdgeId>,
        found: &mut BTreeSet<ClosedTrail>,
        cap: usize,
    ) -> Result<(), TransitionsError> {
        let last = *path.last().unwrap();
        if cur == start_vertex && path.len() >= 3 && t.allows(cur, last, start_edge) {
            let trail = ClosedTrail::canonical(path.clone());
            if found.insert(trail) && found.len() > cap {
                return Err(TransitionsError::CapExceeded { cap });
            }
            // A closed trail may keep going through this vertex, so fall
            // through and continue extending.
        }
        for &(next_vertex, e) in g.neighbors(cur) {
            // Canonical trails start at their smallest edge id.
            if e <= start_edge || used.contains(&e) || !t.allows(cur, last, e) {
                continue;
            }
            used.insert(e);
            path.push(e);
            extend(
                g,
                t,
                start_edge,
                start_vertex,
                next_vertex,
                path,
                used,
                found,
                cap,
            )?;
            path.pop();
            used.remove(&e);
        }
        Ok(())
    }

    for start_edge in 0..g.edge_count() {
        let (a, b) = g.endpoints(start_edge);
        for (start_vertex, cur) in [(a, b), (b, a)] {
            let mut path = vec![start_edge];
            let mut used = BTreeSet::from([start_edge]);
            extend(
                g,
                t,
                start_edge,
                start_vertex,
                cur,
                &mut path,
                &mut used,
                &mut found,
                cap,
            )?;
        }
    }
    Ok(found.into_iter().collect())
}
