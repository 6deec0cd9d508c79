//! Maximum matchings in general graphs and everything built on top of them:
//! perfect-matching existence, uniqueness with alternating-cycle witnesses,
//! alternating paths through a prescribed edge, inductive derivations for
//! unique perfect matchings, and blossoms with their stem relation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{
    bridges, canonical_cycle, connected_components,
    symmetric_difference_decompose, AlternatingCycle, AlternatingPath, EdgeId, Graph, Matching,
    VertexId,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("matching is not perfect: vertex {0} is unmatched")]
    NotPerfect(VertexId),
    #[error("edge {0} is not a bridge")]
    NotABridge(EdgeId),
    #[error("no unique perfect matching: alternating cycle {0:?}")]
    NotUnique(Vec<EdgeId>),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("more than {cap} results")]
    CapExceeded { cap: usize },
}

/// Blossom bases tracked by a union-find, so contraction touches only the
/// vertices on the odd cycle.
struct BaseSets {
    parent: Vec<usize>,
}

impl BaseSets {
    fn new(n: usize) -> Self {
        BaseSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Merges `v`'s group into the group whose root is `into_root`.
    fn absorb(&mut self, v: usize, into_root: usize) {
        let r = self.find(v);
        self.parent[r] = into_root;
    }
}

/// One phase of Edmonds's blossom search: look for an augmenting path from
/// `root` and flip it into `mate` if found. Edges in `banned` are ignored.
fn augment_from(
    g: &Graph,
    mate: &mut [Option<VertexId>],
    root: VertexId,
    banned: Option<EdgeId>,
) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    let mut base = BaseSets::new(n);
    let mut outer = vec![false; n];
    let mut queue = VecDeque::new();
    // Timestamped marks for the cycle-base walk.
    let mut mark = vec![0u32; n];
    let mut stamp = 0u32;
    outer[root] = true;
    queue.push_back(root);

    // Nearest common blossom base above a and b in the alternating tree.
    fn common_base(
        base: &mut BaseSets,
        parent: &[Option<VertexId>],
        mate: &[Option<VertexId>],
        mark: &mut [u32],
        stamp: u32,
        a: VertexId,
        b: VertexId,
    ) -> VertexId {
        let mut v = base.find(a);
        loop {
            mark[v] = stamp;
            match mate[v] {
                None => break,
                Some(m) => match parent[m] {
                    None => break,
                    Some(p) => v = base.find(p),
                },
            }
        }
        let mut v = base.find(b);
        loop {
            if mark[v] == stamp {
                return v;
            }
            v = base.find(parent[mate[v].unwrap()].unwrap());
        }
    }

    // Walks v up to the cycle base, redirecting parents around the new
    // blossom and waking the inner vertices. Group absorption is deferred
    // to the end: the stopping test must see the groups as they were when
    // the cycle was found, or a walk crossing an older blossom would stop
    // after its first vertex and leave the rest of the path unredirected.
    #[allow(clippy::too_many_arguments)]
    fn contract_path(
        base: &mut BaseSets,
        parent: &mut [Option<VertexId>],
        mate: &[Option<VertexId>],
        outer: &mut [bool],
        queue: &mut VecDeque<VertexId>,
        mut v: VertexId,
        cycle_base: VertexId,
        mut child: VertexId,
    ) {
        let mut on_cycle: Vec<VertexId> = Vec::new();
        while base.find(v) != cycle_base {
            let m = mate[v].expect("cycle vertices below the base are matched");
            on_cycle.push(v);
            on_cycle.push(m);
            for w in [v, m] {
                if !outer[w] {
                    outer[w] = true;
                    queue.push_back(w);
                }
            }
            parent[v] = Some(child);
            child = m;
            v = parent[m].expect("cycle vertices hang off the alternating tree");
        }
        for w in on_cycle {
            base.absorb(w, cycle_base);
        }
    }

    while let Some(v) = queue.pop_front() {
        for &(to, e) in g.neighbors(v) {
            if Some(e) == banned {
                continue;
            }
            if base.find(v) == base.find(to) || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                // Found an odd cycle: contract the blossom.
                stamp += 1;
                let cycle_base =
                    common_base(&mut base, &parent, mate, &mut mark, stamp, v, to);
                contract_path(
                    &mut base, &mut parent, mate, &mut outer, &mut queue, v, cycle_base, to,
                );
                contract_path(
                    &mut base, &mut parent, mate, &mut outer, &mut queue, to, cycle_base, v,
                );
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        // Augmenting path found: flip matched edges along it.
                        let mut u = to;
                        loop {
                            let pu = parent[u].unwrap();
                            let next = mate[pu];
                            mate[u] = Some(pu);
                            mate[pu] = Some(u);
                            match next {
                                None => return true,
                                Some(w) => u = w,
                            }
                        }
                    }
                    Some(m) => {
                        if !outer[m] {
                            outer[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
    false
}

fn mate_to_matching(g: &Graph, mate: &[Option<VertexId>]) -> Matching {
    let mut ids = BTreeSet::new();
    for (v, &m) in mate.iter().enumerate() {
        if let Some(w) = m {
            if v < w {
                ids.insert(g.edge_between(v, w).expect("mated pair must be an edge"));
            }
        }
    }
    ids.into_iter().collect()
}

/// Grows `mate` to a maximum matching by repeated augmenting-path searches,
/// scanning free vertices in ascending order.
fn maximize(g: &Graph, mate: &mut [Option<VertexId>], banned: Option<EdgeId>) {
    for v in 0..g.vertex_count() {
        if mate[v].is_none() {
            augment_from(g, mate, v, banned);
        }
    }
}

/// A maximum-cardinality matching of `g` (Edmonds's blossom algorithm).
///
/// ```
/// use matchnet::graph::Graph;
/// use matchnet::matching::maximum_matching;
///
/// // A 5-cycle with a pendant vertex: the odd cycle needs a blossom.
/// let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
/// assert_eq!(maximum_matching(&g).len(), 3);
/// ```
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut mate = vec![None; g.vertex_count()];
    maximize(g, &mut mate, None);
    mate_to_matching(g, &mate)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    if !g.vertex_count().is_multiple_of(2) {
        return false;
    }
    maximum_matching(g).len() * 2 == g.vertex_count()
}

/// Outcome of a uniqueness test for a perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Uniqueness {
    Unique,
    NotUnique(AlternatingCycle),
}

impl Uniqueness {
    pub fn is_unique(&self) -> bool {
        matches!(self, Uniqueness::Unique)
    }
}

/// Decides whether `m` is the only perfect matching of `g`.
///
/// `m` is not unique iff deleting some matching edge leaves a graph that
/// still has a perfect matching; each candidate edge needs just one
/// augmenting-path search seeded with the rest of `m`. Candidates are tried
/// in ascending edge id, so the witness is deterministic; it is an
/// alternating cycle recovered from the symmetric difference with the
/// second matching found.
pub fn is_unique_pm(g: &Graph, m: &Matching) -> Result<Uniqueness, MatchingError> {
    if let Err(crate::graph::GraphError::NotPerfect(v)) = m.check_perfect(g) {
        return Err(MatchingError::NotPerfect(v));
    }
    for e in m.iter() {
        let (a, b) = g.endpoints(e);
        let mut mate = m.mate_array(g);
        mate[a] = None;
        mate[b] = None;
        if augment_from(g, &mut mate, a, Some(e)) {
            let m2 = mate_to_matching(g, &mate);
            let decomposition = symmetric_difference_decompose(g, m, &m2);
            let cycle = decomposition
                .cycles
                .into_iter()
                .find(|c| c.edge_set().contains(&e))
                .expect("deleted edge lies on some alternating cycle");
            return Ok(Uniqueness::NotUnique(cycle));
        }
    }
    Ok(Uniqueness::Unique)
}

/// True when some alternating cycle for `m` exists. A cycle only visits
/// matched vertices, so this is a uniqueness failure of `m` restricted to
/// the subgraph they induce.
pub fn has_alternating_cycle(g: &Graph, m: &Matching) -> bool {
    let mate = m.mate_array(g);
    let matched: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| mate[v].is_some()).collect();
    let (sub, _, edge_map) = crate::graph::induced_subgraph(g, &matched);
    let sub_matching: Matching = edge_map
        .iter()
        .enumerate()
        .filter(|&(_, orig)| m.contains(*orig))
        .map(|(local, _)| local)
        .collect();
    matches!(
        is_unique_pm(&sub, &sub_matching),
        Ok(Uniqueness::NotUnique(_))
    )
}

/// An alternating path for `m` from `u` to `v` that crosses the prescribed
/// matching edge `e`, or `None` when no such path exists.
///
/// Preconditions: `m` leaves exactly `u` and `v` unmatched, `e ∈ m`, and no
/// alternating cycle for `m` exists (checked in debug builds only). The
/// construction deletes `e = (a, b)`, completes the rest of `m` to a perfect
/// matching of the smaller graph with two augmenting-path searches, splits
/// the symmetric difference into two alternating paths, and joins them back
/// together with `e`.
pub fn find_alternating_path_through(
    g: &Graph,
    m: &Matching,
    u: VertexId,
    v: VertexId,
    e: EdgeId,
) -> Result<Option<AlternatingPath>, MatchingError> {
    if !m.contains(e) {
        return Err(MatchingError::PreconditionViolated(format!(
            "prescribed edge {e} is not in the matching"
        )));
    }
    let mate = m.mate_array(g);
    let unmatched: Vec<VertexId> = (0..g.vertex_count()).filter(|&w| mate[w].is_none()).collect();
    if unmatched != {
        let mut s = [u, v];
        s.sort_unstable();
        s.to_vec()
    } {
        return Err(MatchingError::PreconditionViolated(format!(
            "expected exactly {{{u}, {v}}} unmatched, found {unmatched:?}"
        )));
    }
    debug_assert!(
        !has_alternating_cycle(g, m),
        "caller must guarantee there is no alternating cycle"
    );

    let (a, b) = g.endpoints(e);
    let mut mate2 = mate.clone();
    mate2[a] = None;
    mate2[b] = None;
    // Two augmenting-path searches complete m \ {e} to a perfect matching of
    // g - e, when one exists.
    maximize(g, &mut mate2, Some(e));
    if mate2.iter().any(|w| w.is_none()) {
        return Ok(None);
    }
    let m2 = mate_to_matching(g, &mate2);
    let reduced: Matching = m.iter().filter(|&f| f != e).collect();
    let decomposition = symmetric_difference_decompose(g, &reduced, &m2);
    debug_assert!(decomposition.cycles.is_empty());
    let mut path_from_u = None;
    let mut other = None;
    for p in decomposition.paths {
        if p.start == u || p.end == u {
            path_from_u = Some(p);
        } else {
            other = Some(p);
        }
    }
    let (Some(p1), Some(p2)) = (path_from_u, other) else {
        return Err(MatchingError::PreconditionViolated(
            "symmetric difference did not split into two paths from the unmatched vertices".into(),
        ));
    };

    let orient = |p: AlternatingPath, from: VertexId| -> Vec<EdgeId> {
        if p.start == from {
            p.edge_ids
        } else {
            let mut edges = p.edge_ids;
            edges.reverse();
            edges
        }
    };

    // p1 runs from u to a or b; p2 covers the remaining endpoint and v.
    let p1_other = if p1.start == u { p1.end } else { p1.start };
    if p1_other != a && p1_other != b {
        return Err(MatchingError::PreconditionViolated(
            "an alternating cycle slipped past the precondition".into(),
        ));
    }
    let second_start = if p1_other == a { b } else { a };
    let mut edges = orient(p1, u);
    edges.push(e);
    edges.extend(orient(p2, second_start));
    debug_assert!(edges.contains(&e));
    Ok(Some(AlternatingPath {
        edge_ids: edges,
        start: u,
        end: v,
    }))
}

/// Derivation tree certifying that a perfect matching is unique: the empty
/// graph, disjoint unions, and joins which add a fresh matching edge whose
/// endpoints attach to the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpmDerivation {
    Empty,
    Union(Box<UpmDerivation>, Box<UpmDerivation>),
    Join {
        bridge: EdgeId,
        attach_left: Vec<VertexId>,
        attach_right: Vec<VertexId>,
        left: Box<UpmDerivation>,
        right: Box<UpmDerivation>,
    },
}

impl UpmDerivation {
    pub fn join_count(&self) -> usize {
        match self {
            UpmDerivation::Empty => 0,
            UpmDerivation::Union(l, r) => l.join_count() + r.join_count(),
            UpmDerivation::Join { left, right, .. } => 1 + left.join_count() + right.join_count(),
        }
    }

    pub fn union_count(&self) -> usize {
        match self {
            UpmDerivation::Empty => 0,
            UpmDerivation::Union(l, r) => 1 + l.union_count() + r.union_count(),
            UpmDerivation::Join { left, right, .. } => left.union_count() + right.union_count(),
        }
    }
}

/// Decomposes `(g, m)` into a [`UpmDerivation`], or reports an alternating
/// cycle when the matching is not unique.
///
/// Per connected component, a unique matching must contain a bridge;
/// the smallest one is removed together with its endpoints and the procedure
/// recurses on what remains. Disjoint components become `Union` nodes,
/// nested to the right in order of smallest vertex.
pub fn upm_sequentialize(g: &Graph, m: &Matching) -> Result<UpmDerivation, MatchingError> {
    if let Err(crate::graph::GraphError::NotPerfect(v)) = m.check_perfect(g) {
        return Err(MatchingError::NotPerfect(v));
    }
    let alive: Vec<VertexId> = (0..g.vertex_count()).collect();
    sequentialize_subset(g, m, &alive)
}

fn sequentialize_subset(
    g: &Graph,
    m: &Matching,
    vertices: &[VertexId],
) -> Result<UpmDerivation, MatchingError> {
    if vertices.is_empty() {
        return Ok(UpmDerivation::Empty);
    }
    let (sub, vertex_map, edge_map) = crate::graph::induced_subgraph(g, vertices);
    let labels = connected_components(&sub);
    let component_total = labels.iter().copied().max().map_or(0, |x| x + 1);
    if component_total > 1 {
        let mut parts: Vec<Vec<VertexId>> = vec![Vec::new(); component_total];
        for (i, &label) in labels.iter().enumerate() {
            parts[label].push(vertex_map[i]);
        }
        let mut derivation = sequentialize_subset(g, m, parts.last().unwrap())?;
        for part in parts.iter().rev().skip(1) {
            derivation = UpmDerivation::Union(
                Box::new(sequentialize_subset(g, m, part)?),
                Box::new(derivation),
            );
        }
        return Ok(derivation);
    }

    // Single component: a unique perfect matching must contain a bridge.
    let bridge = bridges(&sub)
        .into_iter()
        .map(|local| edge_map[local])
        .filter(|id| m.contains(*id))
        .min();
    let Some(e) = bridge else {
        let sub_matching: Matching = edge_map
            .iter()
            .enumerate()
            .filter(|&(_, orig)| m.contains(*orig))
            .map(|(local, _)| local)
            .collect();
        let witness = match is_unique_pm(&sub, &sub_matching)? {
            Uniqueness::NotUnique(cycle) => cycle
                .edge_ids
                .into_iter()
                .map(|local| edge_map[local])
                .collect::<Vec<_>>(),
            Uniqueness::Unique => {
                unreachable!("a component without matching bridges cannot have a unique matching")
            }
        };
        return Err(MatchingError::NotUnique(canonical_cycle(witness)));
    };

    let (x, x_prime) = g.endpoints(e);
    let in_subset: BTreeSet<VertexId> = vertices.iter().copied().collect();
    let mut attach_left: Vec<VertexId> = g
        .neighbors(x)
        .iter()
        .filter(|&&(w, _)| w != x_prime && in_subset.contains(&w))
        .map(|&(w, _)| w)
        .collect();
    attach_left.sort_unstable();
    let mut attach_right: Vec<VertexId> = g
        .neighbors(x_prime)
        .iter()
        .filter(|&&(w, _)| w != x && in_subset.contains(&w))
        .map(|&(w, _)| w)
        .collect();
    attach_right.sort_unstable();

    // Removing the bridge splits the component in two; dropping x and x'
    // leaves the two sides the recursion works on.
    let remaining: Vec<VertexId> = vertices
        .iter()
        .copied()
        .filter(|&w| w != x && w != x_prime)
        .collect();
    let side_of = side_partition(g, &remaining, &attach_left);
    let left_side: Vec<VertexId> = remaining
        .iter()
        .copied()
        .filter(|w| side_of.contains(w))
        .collect();
    let right_side: Vec<VertexId> = remaining
        .iter()
        .copied()
        .filter(|w| !side_of.contains(w))
        .collect();

    Ok(UpmDerivation::Join {
        bridge: e,
        attach_left,
        attach_right,
        left: Box::new(sequentialize_subset(g, m, &left_side)?),
        right: Box::new(sequentialize_subset(g, m, &right_side)?),
    })
}

/// Vertices of `universe` reachable from `seeds` inside the induced subgraph.
fn side_partition(g: &Graph, universe: &[VertexId], seeds: &[VertexId]) -> BTreeSet<VertexId> {
    let allowed: BTreeSet<VertexId> = universe.iter().copied().collect();
    let mut seen: BTreeSet<VertexId> = seeds.iter().copied().collect();
    let mut stack: Vec<VertexId> = seeds.to_vec();
    while let Some(v) = stack.pop() {
        for &(w, _) in g.neighbors(v) {
            if allowed.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

/// Replays a derivation bottom-up and checks that it rebuilds `(g, m)`
/// exactly, honoring the grammar: fresh endpoints, attachment sets inside the
/// corresponding sides and empty only for empty sides, non-empty union
/// operands.
pub fn upm_replays_to(g: &Graph, m: &Matching, derivation: &UpmDerivation) -> bool {
    fn collect(
        g: &Graph,
        d: &UpmDerivation,
    ) -> Option<(BTreeSet<VertexId>, BTreeSet<EdgeId>, BTreeSet<EdgeId>)> {
        match d {
            UpmDerivation::Empty => Some((BTreeSet::new(), BTreeSet::new(), BTreeSet::new())),
            UpmDerivation::Union(l, r) => {
                let (vl, el, ml) = collect(g, l)?;
                let (vr, er, mr) = collect(g, r)?;
                if vl.is_empty() || vr.is_empty() || !vl.is_disjoint(&vr) {
                    return None;
                }
                Some((
                    vl.union(&vr).copied().collect(),
                    el.union(&er).copied().collect(),
                    ml.union(&mr).copied().collect(),
                ))
            }
            UpmDerivation::Join {
                bridge,
                attach_left,
                attach_right,
                left,
                right,
            } => {
                let (vl, mut el, mut ml) = collect(g, left)?;
                let (vr, er, mr) = collect(g, right)?;
                if !vl.is_disjoint(&vr) {
                    return None;
                }
                if *bridge >= g.edge_count() {
                    return None;
                }
                let (x, x_prime) = g.endpoints(*bridge);
                let mut vertices: BTreeSet<VertexId> = vl.union(&vr).copied().collect();
                if vertices.contains(&x) || vertices.contains(&x_prime) {
                    return None;
                }
                // U may be empty exactly when the corresponding side is empty.
                if attach_left.is_empty() != vl.is_empty()
                    || attach_right.is_empty() != vr.is_empty()
                {
                    return None;
                }
                if !attach_left.iter().all(|w| vl.contains(w))
                    || !attach_right.iter().all(|w| vr.contains(w))
                {
                    return None;
                }
                el.extend(er);
                el.insert(*bridge);
                for &w in attach_left {
                    el.insert(g.edge_between(w, x)?);
                }
                for &w in attach_right {
                    el.insert(g.edge_between(w, x_prime)?);
                }
                ml.extend(mr);
                ml.insert(*bridge);
                vertices.insert(x);
                vertices.insert(x_prime);
                Some((vertices, el, ml))
            }
        }
    }

    let Some((vertices, edges, matching)) = collect(g, derivation) else {
        return false;
    };
    vertices == (0..g.vertex_count()).collect::<BTreeSet<_>>()
        && edges == (0..g.edge_count()).collect::<BTreeSet<_>>()
        && matching == m.iter().collect::<BTreeSet<_>>()
}

/// Decides membership of a bridge in the (unique) perfect matching purely by
/// parity: a bridge is a matching edge iff both components created by its
/// removal have an odd number of vertices.
pub fn is_matching_bridge_by_parity(g: &Graph, e: EdgeId) -> Result<bool, MatchingError> {
    if !bridges(g).contains(&e) {
        return Err(MatchingError::NotABridge(e));
    }
    let (a, b) = g.endpoints(e);
    let mut h = Graph::new(g.vertex_count());
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if id != e {
            h.add_edge(u, v).unwrap();
        }
    }
    let labels = connected_components(&h);
    let size_a = labels.iter().filter(|&&l| l == labels[a]).count();
    let size_b = labels.iter().filter(|&&l| l == labels[b]).count();
    Ok(size_a % 2 == 1 && size_b % 2 == 1)
}

/// An odd cycle whose vertices are all matched within the cycle except the
/// root; the root's matching edge (outside the cycle) is the stem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blossom {
    pub cycle: Vec<EdgeId>,
    pub root: VertexId,
    pub stem: EdgeId,
}

/// Enumerates every blossom whose stem is `f`, by depth-first search over
/// alternating paths rooted at each endpoint of `f`. Exponential; an oracle
/// for small instances.
pub fn blossoms_with_stem(
    g: &Graph,
    m: &Matching,
    f: EdgeId,
    cap: usize,
) -> Result<Vec<Blossom>, MatchingError> {
    if !m.contains(f) {
        return Err(MatchingError::PreconditionViolated(format!(
            "stem {f} is not a matching edge"
        )));
    }
    let mate = m.mate_array(g);
    let (fa, fb) = g.endpoints(f);
    let mut seen: BTreeSet<Vec<EdgeId>> = BTreeSet::new();
    let mut result = Vec::new();

    for root in [fa, fb] {
        // Paths grow root -(non-matching)- w -(matching)- w' ... and close
        // with a non-matching edge back to the root after a matching edge.
        let mut on_path = vec![false; g.vertex_count()];
        on_path[root] = true;
        let mut path_edges: Vec<EdgeId> = Vec::new();

        #[allow(clippy::too_many_arguments)]
        fn extend(
            g: &Graph,
            m: &Matching,
            mate: &[Option<VertexId>],
            root: VertexId,
            cur: VertexId,
            need_matching: bool,
            on_path: &mut Vec<bool>,
            path_edges: &mut Vec<EdgeId>,
            seen: &mut BTreeSet<Vec<EdgeId>>,
            result: &mut Vec<Blossom>,
            stem: EdgeId,
            cap: usize,
        ) -> Result<(), MatchingError> {
            if need_matching {
                let Some(w) = mate[cur] else { return Ok(()) };
                if on_path[w] || w == root {
                    return Ok(());
                }
                let e = g.edge_between(cur, w).unwrap();
                on_path[w] = true;
                path_edges.push(e);
                extend(
                    g, m, mate, root, w, false, on_path, path_edges, seen, result, stem, cap,
                )?;
                path_edges.pop();
                on_path[w] = false;
                Ok(())
            } else {
                // A non-matching edge back to the root closes a blossom.
                if let Some(close) = g.edge_between(cur, root) {
                    if !m.contains(close) && !path_edges.is_empty() {
                        let mut cycle = path_edges.clone();
                        cycle.push(close);
                        let cycle = canonical_cycle(cycle);
                        if seen.insert(cycle.clone()) {
                            if result.len() == cap {
                                return Err(MatchingError::CapExceeded { cap });
                            }
                            result.push(Blossom {
                                cycle,
                                root,
                                stem,
                            });
                        }
                    }
                }
                for &(w, e) in g.neighbors(cur) {
                    if m.contains(e) || on_path[w] || w == root {
                        continue;
                    }
                    on_path[w] = true;
                    path_edges.push(e);
                    extend(
                        g, m, mate, root, w, true, on_path, path_edges, seen, result, stem, cap,
                    )?;
                    path_edges.pop();
                    on_path[w] = false;
                }
                Ok(())
            }
        }

        for &(w, e) in g.neighbors(root) {
            if m.contains(e) {
                continue;
            }
            on_path[w] = true;
            path_edges.push(e);
            extend(
                g,
                m,
                &mate,
                root,
                w,
                true,
                &mut on_path,
                &mut path_edges,
                &mut seen,
                &mut result,
                f,
                cap,
            )?;
            path_edges.pop();
            on_path[w] = false;
        }
    }

    result.sort_by(|x, y| (x.root, &x.cycle).cmp(&(y.root, &y.cycle)));
    Ok(result)
}

/// The relation `e → f` between matching edges: `e` lies in some blossom
/// whose stem is `f`. Exponential oracle for small instances.
pub fn stem_relation(g: &Graph, m: &Matching) -> BTreeSet<(EdgeId, EdgeId)> {
    let mut relation = BTreeSet::new();
    for f in m.iter() {
        let blossoms = blossoms_with_stem(g, m, f, usize::MAX)
            .expect("uncapped blossom enumeration cannot overflow");
        for blossom in blossoms {
            for &e in &blossom.cycle {
                if m.contains(e) {
                    relation.insert((e, f));
                }
            }
        }
    }
    relation
}

/// Transitive closure of a relation over dense ids, by repeated squaring of
/// a boolean adjacency matrix held as bitset rows.
pub fn transitive_closure(pairs: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let n = pairs
        .iter()
        .map(|&(a, b)| a.max(b) + 1)
        .max()
        .unwrap_or(0);
    let words = n.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; n];
    for &(a, b) in pairs {
        rows[a][b / 64] |= 1 << (b % 64);
    }
    loop {
        let mut next = rows.clone();
        for i in 0..n {
            for j in 0..n {
                if rows[i][j / 64] >> (j % 64) & 1 == 1 {
                    for w in 0..words {
                        next[i][w] |= rows[j][w];
                    }
                }
            }
        }
        if next == rows {
            break;
        }
        rows = next;
    }
    let mut closure = BTreeSet::new();
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            if row[j / 64] >> (j % 64) & 1 == 1 {
                closure.insert((i, j));
            }
        }
    }
    closure
}

/// Deterministic map from matching edges to their matched pair, used by
/// tests that need edge-level mates.
pub fn matched_pairs(g: &Graph, m: &Matching) -> BTreeMap<VertexId, VertexId> {
    let mut pairs = BTreeMap::new();
    for e in m.iter() {
        let (u, v) = g.endpoints(e);
        pairs.insert(u, v);
        pairs.insert(v, u);
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{enumerate_perfect_matchings, is_alternating_cycle};

    #[test]
    fn path_of_three_has_matching_of_one() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 1);
    }

    #[test]
    fn linked_triangles_maximum_matching_is_the_drawn_one() {
        let (g, m) = fixtures::linked_triangles();
        let found = maximum_matching(&g);
        assert_eq!(found.len(), 3);
        assert!(found.is_perfect(&g));
        assert_eq!(found, m);
    }

    #[test]
    fn perfect_matching_existence() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!has_perfect_matching(&g));
        let (g, _) = fixtures::chorded_square();
        assert!(has_perfect_matching(&g));
        // Removing the middle edge of the linked triangles leaves two odd
        // components, so no perfect matching survives.
        let (g, _) = fixtures::linked_triangles();
        let mut h = Graph::new(g.vertex_count());
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            if id != fixtures::LINKED_TRIANGLES_MIDDLE {
                h.add_edge(u, v).unwrap();
            }
        }
        assert!(!has_perfect_matching(&h));
    }

    #[test]
    fn single_edge_matching_is_unique() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let m = Matching::new(&g, [0]).unwrap();
        assert_eq!(is_unique_pm(&g, &m).unwrap(), Uniqueness::Unique);
    }

    #[test]
    fn chorded_square_matching_is_not_unique() {
        let (g, m) = fixtures::chorded_square();
        match is_unique_pm(&g, &m).unwrap() {
            Uniqueness::NotUnique(cycle) => {
                // The outer square is the witness.
                assert_eq!(cycle.edge_set(), [1, 2, 3, 4].into_iter().collect());
                assert!(is_alternating_cycle(&g, &m, &cycle.edge_ids));
            }
            Uniqueness::Unique => panic!("expected a witness"),
        }
    }

    #[test]
    fn linked_triangles_matching_is_unique() {
        let (g, m) = fixtures::linked_triangles();
        assert_eq!(is_unique_pm(&g, &m).unwrap(), Uniqueness::Unique);
    }

    #[test]
    fn non_perfect_matching_is_rejected() {
        let (g, _) = fixtures::linked_triangles();
        let m = Matching::new(&g, [0]).unwrap();
        assert!(matches!(
            is_unique_pm(&g, &m),
            Err(MatchingError::NotPerfect(_))
        ));
    }

    #[test]
    fn forced_path_through_prescribed_edge() {
        // u - a - b - v with only ab matched: the whole path is the answer.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = Matching::new(&g, [1]).unwrap();
        let p = find_alternating_path_through(&g, &m, 0, 3, 1)
            .unwrap()
            .expect("path exists");
        assert_eq!(p.edge_ids, vec![0, 1, 2]);
        assert_eq!((p.start, p.end), (0, 3));
    }

    #[test]
    fn prescribed_path_absent_when_sides_cannot_reconnect() {
        // Two triangles joined by an edge; delete one triangle's matching
        // edge and ask for a path crossing the far matching edge.
        let (g, m) = fixtures::linked_triangles();
        let reduced: Matching = m.iter().filter(|&e| e != 0).collect();
        let (u, v) = g.endpoints(0);
        let p = find_alternating_path_through(&g, &reduced, u, v, 1).unwrap();
        assert!(p.is_none());
        // Crossing the middle edge also fails: both return paths would need
        // the same triangle vertex twice.
        let p = find_alternating_path_through(
            &g,
            &reduced,
            u,
            v,
            fixtures::LINKED_TRIANGLES_MIDDLE,
        )
        .unwrap();
        assert!(p.is_none());
    }

    #[test]
    fn prescribed_edge_must_be_matched() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = Matching::new(&g, [1]).unwrap();
        assert!(matches!(
            find_alternating_path_through(&g, &m, 0, 3, 0),
            Err(MatchingError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn single_edge_sequentializes_to_one_join() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let m = Matching::new(&g, [0]).unwrap();
        let d = upm_sequentialize(&g, &m).unwrap();
        assert_eq!(
            d,
            UpmDerivation::Join {
                bridge: 0,
                attach_left: vec![],
                attach_right: vec![],
                left: Box::new(UpmDerivation::Empty),
                right: Box::new(UpmDerivation::Empty),
            }
        );
        assert!(upm_replays_to(&g, &m, &d));
    }

    #[test]
    fn empty_graph_sequentializes_to_empty() {
        let g = Graph::new(0);
        let m = Matching::empty();
        let d = upm_sequentialize(&g, &m).unwrap();
        assert_eq!(d, UpmDerivation::Empty);
        assert!(upm_replays_to(&g, &m, &d));
    }

    #[test]
    fn linked_triangles_root_join_is_the_middle_edge() {
        let (g, m) = fixtures::linked_triangles();
        let d = upm_sequentialize(&g, &m).unwrap();
        match &d {
            UpmDerivation::Join {
                bridge,
                attach_left,
                attach_right,
                ..
            } => {
                assert_eq!(*bridge, fixtures::LINKED_TRIANGLES_MIDDLE);
                assert_eq!(attach_left, &vec![0, 1]);
                assert_eq!(attach_right, &vec![4, 5]);
            }
            other => panic!("expected a join at the root, got {other:?}"),
        }
        assert!(upm_replays_to(&g, &m, &d));
    }

    #[test]
    fn chorded_square_fails_to_sequentialize() {
        let (g, m) = fixtures::chorded_square();
        match upm_sequentialize(&g, &m) {
            Err(MatchingError::NotUnique(cycle)) => {
                assert!(is_alternating_cycle(&g, &m, &cycle));
            }
            other => panic!("expected a non-uniqueness witness, got {other:?}"),
        }
    }

    #[test]
    fn parity_test_on_bridges() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(is_matching_bridge_by_parity(&g, 0).unwrap());

        let (g, _) = fixtures::linked_triangles();
        assert!(is_matching_bridge_by_parity(&g, fixtures::LINKED_TRIANGLES_MIDDLE).unwrap());
        assert_eq!(
            is_matching_bridge_by_parity(&g, 0),
            Err(MatchingError::NotABridge(0))
        );
    }

    #[test]
    fn single_edge_has_no_blossoms() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let m = Matching::new(&g, [0]).unwrap();
        assert!(blossoms_with_stem(&g, &m, 0, 100).unwrap().is_empty());
    }

    #[test]
    fn linked_triangles_blossoms() {
        let (g, m) = fixtures::linked_triangles();
        // The middle edge is the stem of both triangles.
        let found = blossoms_with_stem(&g, &m, fixtures::LINKED_TRIANGLES_MIDDLE, 100).unwrap();
        assert_eq!(found.len(), 2);
        for blossom in &found {
            assert_eq!(blossom.cycle.len(), 3);
            assert_eq!(blossom.stem, fixtures::LINKED_TRIANGLES_MIDDLE);
        }
        // A triangle's own matching edge is the stem of nothing.
        assert!(blossoms_with_stem(&g, &m, 0, 100).unwrap().is_empty());
        assert!(blossoms_with_stem(&g, &m, 1, 100).unwrap().is_empty());
    }

    #[test]
    fn stem_relation_of_linked_triangles() {
        let (g, m) = fixtures::linked_triangles();
        let relation = stem_relation(&g, &m);
        let middle = fixtures::LINKED_TRIANGLES_MIDDLE;
        assert_eq!(relation, BTreeSet::from([(0, middle), (1, middle)]));
    }

    #[test]
    fn stem_relation_empty_on_disjoint_edges() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let m = Matching::new(&g, [0, 1]).unwrap();
        assert!(stem_relation(&g, &m).is_empty());
    }

    #[test]
    fn closure_of_chain() {
        let pairs = BTreeSet::from([(0, 1), (1, 2)]);
        assert_eq!(
            transitive_closure(&pairs),
            BTreeSet::from([(0, 1), (1, 2), (0, 2)])
        );
    }

    #[test]
    fn nested_blossom_contraction_regression() {
        // A translated net whose search builds a blossom crossing an older
        // one; contracting mid-walk used to truncate the parent
        // redirections and send a later augmentation in circles.
        let edges = [
            (0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13), (14, 15),
            (16, 17), (18, 19), (20, 21), (22, 23), (24, 25), (26, 27), (28, 29),
            (30, 31), (32, 33), (34, 35), (36, 37), (38, 39), (40, 41), (42, 43),
            (2, 4), (3, 4), (0, 5), (1, 5), (0, 6), (1, 6), (2, 6), (3, 6),
            (6, 8), (7, 8), (4, 8), (5, 8), (14, 40), (14, 41), (12, 15),
            (13, 15), (8, 16), (9, 16), (14, 17), (15, 17), (16, 18), (17, 18),
            (10, 18), (11, 18), (12, 22), (13, 22), (20, 23), (21, 23), (22, 24),
            (23, 24), (18, 24), (19, 24), (20, 26), (21, 26), (24, 26), (25, 26),
            (26, 30), (27, 30), (28, 31), (29, 31), (30, 34), (31, 34), (28, 34),
            (29, 34), (32, 36), (33, 36), (34, 37), (35, 37), (32, 38), (33, 38),
            (36, 38), (37, 38), (38, 42), (39, 42), (40, 43), (41, 43),
        ];
        let g = Graph::from_edges(44, edges).unwrap();
        let m = Matching::new(&g, 0..22).unwrap();
        match is_unique_pm(&g, &m).unwrap() {
            Uniqueness::NotUnique(cycle) => {
                assert!(is_alternating_cycle(&g, &m, &cycle.edge_ids));
            }
            Uniqueness::Unique => panic!("instance has a second perfect matching"),
        }
    }

    #[test]
    fn maximum_matching_matches_bruteforce_on_small_graphs() {
        // Deterministic family of small graphs exercising blossoms.
        let cases = [
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap(),
            Graph::from_edges(
                7,
                [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 2)],
            )
            .unwrap(),
        ];
        for g in &cases {
            let fast = maximum_matching(g).len();
            let slow = brute_force_maximum(g);
            assert_eq!(fast, slow);
        }
    }

    fn brute_force_maximum(g: &Graph) -> usize {
        fn recurse(g: &Graph, covered: &mut Vec<bool>, next: EdgeId) -> usize {
            if next == g.edge_count() {
                return 0;
            }
            let skip = recurse(g, covered, next + 1);
            let (u, v) = g.endpoints(next);
            if !covered[u] && !covered[v] {
                covered[u] = true;
                covered[v] = true;
                let take = 1 + recurse(g, covered, next + 1);
                covered[u] = false;
                covered[v] = false;
                skip.max(take)
            } else {
                skip
            }
        }
        recurse(g, &mut vec![false; g.vertex_count()], 0)
    }

    #[test]
    fn uniqueness_agrees_with_enumeration_on_fixture_family() {
        for (g, m) in [fixtures::chorded_square(), fixtures::linked_triangles()] {
            let all = enumerate_perfect_matchings(&g, 1000).unwrap();
            let unique = is_unique_pm(&g, &m).unwrap().is_unique();
            assert_eq!(unique, all.len() == 1);
        }
    }
}
