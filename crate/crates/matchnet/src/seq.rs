//! Sequentialization: reconstructing derivation trees for proof structures,
//! validating them by replay, converting to and from the matching-side
//! derivations, and exhaustively enumerating all derivations of small nets.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{connected_components, VertexId};
use crate::matching::{is_unique_pm, Uniqueness, UpmDerivation};
use crate::proofnet::{LinkId, LinkKind, ProofStructure, PsEdgeId};
use crate::translate::{
    alternating_cycle_to_switching, graphification, GraphificationMap, MatchedGraph,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("not a proof net; switching cycle {0:?}")]
    Incorrect(Vec<PsEdgeId>),
    #[error("more than {cap} derivations")]
    CapExceeded { cap: usize },
    #[error("invalid derivation: {0}")]
    InvalidDerivation(String),
}

/// A sequent-calculus derivation in sparse form: rule nodes reference link
/// ids, sequents are never materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Ax {
        link: LinkId,
    },
    Tensor {
        link: LinkId,
        left: Box<Derivation>,
        right: Box<Derivation>,
    },
    Par {
        link: LinkId,
        premise: Box<Derivation>,
    },
    Mix {
        left: Box<Derivation>,
        right: Box<Derivation>,
    },
}

impl Derivation {
    /// The link introduced by the last rule, when the last rule is not Mix.
    pub fn root_link(&self) -> Option<LinkId> {
        match self {
            Derivation::Ax { link } => Some(*link),
            Derivation::Tensor { link, .. } => Some(*link),
            Derivation::Par { link, .. } => Some(*link),
            Derivation::Mix { .. } => None,
        }
    }

    pub fn links(&self) -> BTreeSet<LinkId> {
        let mut out = BTreeSet::new();
        self.collect_links(&mut out);
        out
    }

    fn collect_links(&self, out: &mut BTreeSet<LinkId>) {
        match self {
            Derivation::Ax { link } => {
                out.insert(*link);
            }
            Derivation::Tensor { link, left, right } => {
                out.insert(*link);
                left.collect_links(out);
                right.collect_links(out);
            }
            Derivation::Par { link, premise } => {
                out.insert(*link);
                premise.collect_links(out);
            }
            Derivation::Mix { left, right } => {
                left.collect_links(out);
                right.collect_links(out);
            }
        }
    }

    pub fn mix_count(&self) -> usize {
        match self {
            Derivation::Ax { .. } => 0,
            Derivation::Tensor { left, right, .. } | Derivation::Mix { left, right } => {
                let base = matches!(self, Derivation::Mix { .. }) as usize;
                base + left.mix_count() + right.mix_count()
            }
            Derivation::Par { premise, .. } => premise.mix_count(),
        }
    }

    /// All pairs `(p, q)` where the rule introducing `q` has `p` somewhere
    /// among its premises.
    pub fn kingdom_pairs(&self) -> BTreeSet<(LinkId, LinkId)> {
        let mut pairs = BTreeSet::new();
        self.collect_kingdom(&mut pairs);
        pairs
    }

    fn collect_kingdom(&self, pairs: &mut BTreeSet<(LinkId, LinkId)>) -> BTreeSet<LinkId> {
        match self {
            Derivation::Ax { link } => BTreeSet::from([*link]),
            Derivation::Par { link, premise } => {
                let mut below = premise.collect_kingdom(pairs);
                for &p in &below {
                    pairs.insert((p, *link));
                }
                below.insert(*link);
                below
            }
            Derivation::Tensor { link, left, right } => {
                let mut below = left.collect_kingdom(pairs);
                below.extend(right.collect_kingdom(pairs));
                for &p in &below {
                    pairs.insert((p, *link));
                }
                below.insert(*link);
                below
            }
            Derivation::Mix { left, right } => {
                let mut below = left.collect_kingdom(pairs);
                below.extend(right.collect_kingdom(pairs));
                below
            }
        }
    }

    /// Indented rule-tree rendering.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        self.pretty_into(0, &mut out);
        out
    }

    fn pretty_into(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            Derivation::Ax { link } => out.push_str(&format!("{pad}ax #{link}\n")),
            Derivation::Par { link, premise } => {
                out.push_str(&format!("{pad}par #{link}\n"));
                premise.pretty_into(depth + 1, out);
            }
            Derivation::Tensor { link, left, right } => {
                out.push_str(&format!("{pad}tensor #{link}\n"));
                left.pretty_into(depth + 1, out);
                right.pretty_into(depth + 1, out);
            }
            Derivation::Mix { left, right } => {
                out.push_str(&format!("{pad}mix\n"));
                left.pretty_into(depth + 1, out);
                right.pretty_into(depth + 1, out);
            }
        }
    }
}

/// Reconstructs a derivation by bridge elimination over the graphification.
///
/// Per component, the smallest matching bridge is removed together with its
/// endpoints; the bridge's link is an ax when both endpoints become
/// isolated, a ⅋ when one does (with a Mix inserted if its premises fall
/// into different components), and a ⊗ otherwise. Components at any stage
/// are joined right-nested by Mix in order of smallest link. Bridges are
/// recomputed per step rather than maintained dynamically.
///
/// ```
/// use matchnet::seq::{mix_sequentialize, validate_derivation};
///
/// let net = matchnet::fixtures::double_par_net();
/// let derivation = mix_sequentialize(&net).unwrap();
/// assert!(validate_derivation(&net, &derivation));
/// assert_eq!(derivation.root_link(), Some(4)); // the terminal ⅋
/// ```
pub fn mix_sequentialize(ps: &ProofStructure) -> Result<Derivation, SeqError> {
    let (mg, map) = graphification(ps);
    let all: Vec<VertexId> = (0..mg.graph.vertex_count()).collect();
    sequentialize_vertices(ps, &mg, &map, &all)
}

/// What one decomposition step does; computed with the induced subgraph
/// held only briefly, so the recursion keeps nothing but vertex lists.
enum StepPlan {
    Ax(LinkId),
    Par(LinkId, Vec<VertexId>),
    Tensor(LinkId, Vec<VertexId>, Vec<VertexId>),
    Mix(Vec<Vec<VertexId>>),
}

fn plan_step(
    ps: &ProofStructure,
    mg: &MatchedGraph,
    map: &GraphificationMap,
    vertices: &[VertexId],
) -> Result<StepPlan, SeqError> {
    debug_assert!(!vertices.is_empty());
    let (sub, vertex_map, edge_map) = crate::graph::induced_subgraph(&mg.graph, vertices);
    let labels = connected_components(&sub);
    let total = labels.iter().copied().max().map_or(0, |m| m + 1);
    if total > 1 {
        let mut parts: Vec<Vec<VertexId>> = vec![Vec::new(); total];
        for (i, &label) in labels.iter().enumerate() {
            parts[label].push(vertex_map[i]);
        }
        return Ok(StepPlan::Mix(parts));
    }

    // One component. Every bridge of a graphification is a matching edge,
    // and matching edge ids coincide with link ids.
    let bridge = crate::graph::bridges(&sub)
        .into_iter()
        .map(|local| edge_map[local])
        .filter(|id| mg.matching.contains(*id))
        .min();
    let Some(link) = bridge else {
        // No matching bridge: the component's matching is not unique and
        // the witness projects to a switching cycle.
        let sub_matching = edge_map
            .iter()
            .enumerate()
            .filter(|&(_, orig)| mg.matching.contains(*orig))
            .map(|(local, _)| local)
            .collect();
        match is_unique_pm(&sub, &sub_matching).expect("restricted matching stays perfect") {
            Uniqueness::NotUnique(cycle) => {
                let original: Vec<_> =
                    cycle.edge_ids.into_iter().map(|local| edge_map[local]).collect();
                let switching = alternating_cycle_to_switching(ps, mg, map, &original)
                    .expect("alternating witness projects");
                return Err(SeqError::Incorrect(switching));
            }
            Uniqueness::Unique => {
                unreachable!("bridgeless components cannot carry a unique matching")
            }
        }
    };

    let a = 2 * link;
    let b = 2 * link + 1;
    let local = |v: VertexId| vertex_map.iter().position(|&w| w == v).unwrap();
    let degree_a = sub.degree(local(a)) - 1;
    let degree_b = sub.degree(local(b)) - 1;
    let remaining: Vec<VertexId> = vertices
        .iter()
        .copied()
        .filter(|&w| w != a && w != b)
        .collect();

    match (degree_a == 0, degree_b == 0) {
        (true, true) => {
            debug_assert_eq!(ps.kind(link), LinkKind::Ax);
            Ok(StepPlan::Ax(link))
        }
        (false, true) | (true, false) => {
            debug_assert_eq!(ps.kind(link), LinkKind::Par);
            Ok(StepPlan::Par(link, remaining))
        }
        (false, false) => {
            debug_assert_eq!(ps.kind(link), LinkKind::Tensor);
            let ins = ps.in_edges(link);
            let first_premise = ps.edge(ins[0]).0;
            let second_premise = ps.edge(ins[1]).0;
            drop(sub);
            let (rest, rest_vmap, _) = crate::graph::induced_subgraph(&mg.graph, &remaining);
            let rest_labels = connected_components(&rest);
            let label_of = |link_id: LinkId| {
                let v = 2 * link_id;
                rest_labels[rest_vmap.iter().position(|&w| w == v).unwrap()]
            };
            let first_label = label_of(first_premise);
            debug_assert_ne!(first_label, label_of(second_premise));
            let left: Vec<VertexId> = remaining
                .iter()
                .enumerate()
                .filter(|&(i, _)| rest_labels[i] == first_label)
                .map(|(_, &w)| w)
                .collect();
            let right: Vec<VertexId> = remaining
                .iter()
                .enumerate()
                .filter(|&(i, _)| rest_labels[i] != first_label)
                .map(|(_, &w)| w)
                .collect();
            Ok(StepPlan::Tensor(link, left, right))
        }
    }
}

fn sequentialize_vertices(
    ps: &ProofStructure,
    mg: &MatchedGraph,
    map: &GraphificationMap,
    vertices: &[VertexId],
) -> Result<Derivation, SeqError> {
    match plan_step(ps, mg, map, vertices)? {
        StepPlan::Ax(link) => Ok(Derivation::Ax { link }),
        StepPlan::Par(link, remaining) => Ok(Derivation::Par {
            link,
            premise: Box::new(sequentialize_vertices(ps, mg, map, &remaining)?),
        }),
        StepPlan::Tensor(link, left, right) => Ok(Derivation::Tensor {
            link,
            left: Box::new(sequentialize_vertices(ps, mg, map, &left)?),
            right: Box::new(sequentialize_vertices(ps, mg, map, &right)?),
        }),
        StepPlan::Mix(parts) => {
            let mut derivation = sequentialize_vertices(ps, mg, map, parts.last().unwrap())?;
            for part in parts.iter().rev().skip(1) {
                derivation = Derivation::Mix {
                    left: Box::new(sequentialize_vertices(ps, mg, map, part)?),
                    right: Box::new(derivation),
                };
            }
            Ok(derivation)
        }
    }
}

/// True iff replaying the rules of `d` bottom-up rebuilds `ps` exactly:
/// every link introduced once by a rule of its own kind, premises found in
/// the sub-nets the rule combines, Mix operands disjoint and non-empty.
pub fn validate_derivation(ps: &ProofStructure, d: &Derivation) -> bool {
    fn collect(ps: &ProofStructure, d: &Derivation) -> Option<BTreeSet<LinkId>> {
        match d {
            Derivation::Ax { link } => {
                (*link < ps.link_count() && ps.kind(*link) == LinkKind::Ax)
                    .then(|| BTreeSet::from([*link]))
            }
            Derivation::Par { link, premise } => {
                if *link >= ps.link_count() || ps.kind(*link) != LinkKind::Par {
                    return None;
                }
                let mut below = collect(ps, premise)?;
                let ins = ps.in_edges(*link);
                let sources = [ps.edge(ins[0]).0, ps.edge(ins[1]).0];
                if below.contains(link) || !sources.iter().all(|s| below.contains(s)) {
                    return None;
                }
                below.insert(*link);
                Some(below)
            }
            Derivation::Tensor { link, left, right } => {
                if *link >= ps.link_count() || ps.kind(*link) != LinkKind::Tensor {
                    return None;
                }
                let la = collect(ps, left)?;
                let lb = collect(ps, right)?;
                if !la.is_disjoint(&lb) {
                    return None;
                }
                let ins = ps.in_edges(*link);
                let s1 = ps.edge(ins[0]).0;
                let s2 = ps.edge(ins[1]).0;
                let split_ok = (la.contains(&s1) && lb.contains(&s2))
                    || (la.contains(&s2) && lb.contains(&s1));
                if !split_ok {
                    return None;
                }
                let mut below: BTreeSet<LinkId> = la.union(&lb).copied().collect();
                if below.contains(link) {
                    return None;
                }
                below.insert(*link);
                Some(below)
            }
            Derivation::Mix { left, right } => {
                let la = collect(ps, left)?;
                let lb = collect(ps, right)?;
                if la.is_empty() || lb.is_empty() || !la.is_disjoint(&lb) {
                    return None;
                }
                Some(la.union(&lb).copied().collect())
            }
        }
    }
    collect(ps, d) == Some((0..ps.link_count()).collect())
}

/// Translates a derivation into the matching-side derivation of the
/// graphification: ax ↔ join over two empty sides, ⅋ ↔ join with an empty
/// right side, ⊗ ↔ join of two non-empty sides, Mix ↔ union.
pub fn derivation_to_upm(ps: &ProofStructure, d: &Derivation) -> Result<UpmDerivation, SeqError> {
    if !validate_derivation(ps, d) {
        return Err(SeqError::InvalidDerivation(
            "derivation does not replay to the structure".into(),
        ));
    }
    fn convert(ps: &ProofStructure, d: &Derivation) -> (UpmDerivation, BTreeSet<LinkId>) {
        match d {
            Derivation::Ax { link } => (
                UpmDerivation::Join {
                    bridge: *link,
                    attach_left: vec![],
                    attach_right: vec![],
                    left: Box::new(UpmDerivation::Empty),
                    right: Box::new(UpmDerivation::Empty),
                },
                BTreeSet::from([*link]),
            ),
            Derivation::Par { link, premise } => {
                let (sub, mut links) = convert(ps, premise);
                let ins = ps.in_edges(*link);
                let mut attach: Vec<VertexId> = ins
                    .iter()
                    .flat_map(|&e| {
                        let s = ps.edge(e).0;
                        [2 * s, 2 * s + 1]
                    })
                    .collect();
                attach.sort_unstable();
                attach.dedup();
                links.insert(*link);
                (
                    UpmDerivation::Join {
                        bridge: *link,
                        attach_left: attach,
                        attach_right: vec![],
                        left: Box::new(sub),
                        right: Box::new(UpmDerivation::Empty),
                    },
                    links,
                )
            }
            Derivation::Tensor { link, left, right } => {
                let (da, la) = convert(ps, left);
                let (db, lb) = convert(ps, right);
                let ins = ps.in_edges(*link);
                let s1 = ps.edge(ins[0]).0;
                let s2 = ps.edge(ins[1]).0;
                // The first premise attaches to the even endpoint, so the
                // sub-derivation holding it goes on the left.
                let (first, second) = if la.contains(&s1) { (da, db) } else { (db, da) };
                let mut links: BTreeSet<LinkId> = la.union(&lb).copied().collect();
                links.insert(*link);
                (
                    UpmDerivation::Join {
                        bridge: *link,
                        attach_left: vec![2 * s1, 2 * s1 + 1],
                        attach_right: vec![2 * s2, 2 * s2 + 1],
                        left: Box::new(first),
                        right: Box::new(second),
                    },
                    links,
                )
            }
            Derivation::Mix { left, right } => {
                let (da, la) = convert(ps, left);
                let (db, lb) = convert(ps, right);
                (
                    UpmDerivation::Union(Box::new(da), Box::new(db)),
                    la.union(&lb).copied().collect(),
                )
            }
        }
    }
    Ok(convert(ps, d).0)
}

/// Inverse of [`derivation_to_upm`], defined on matching-side derivations
/// that replay to the graphification of `ps`.
pub fn upm_to_derivation(ps: &ProofStructure, u: &UpmDerivation) -> Result<Derivation, SeqError> {
    let (mg, _) = graphification(ps);
    if !crate::matching::upm_replays_to(&mg.graph, &mg.matching, u) {
        return Err(SeqError::InvalidDerivation(
            "derivation does not replay to the graphification".into(),
        ));
    }
    fn convert(ps: &ProofStructure, u: &UpmDerivation) -> Result<Derivation, SeqError> {
        match u {
            UpmDerivation::Empty => Err(SeqError::InvalidDerivation(
                "the empty derivation corresponds to no proof structure".into(),
            )),
            UpmDerivation::Union(left, right) => Ok(Derivation::Mix {
                left: Box::new(convert(ps, left)?),
                right: Box::new(convert(ps, right)?),
            }),
            UpmDerivation::Join {
                bridge,
                left,
                right,
                ..
            } => {
                let link = *bridge;
                if link >= ps.link_count() {
                    return Err(SeqError::InvalidDerivation(format!(
                        "bridge {link} is not a link's matching edge"
                    )));
                }
                let left_empty = matches!(**left, UpmDerivation::Empty);
                let right_empty = matches!(**right, UpmDerivation::Empty);
                match (left_empty, right_empty) {
                    (true, true) => Ok(Derivation::Ax { link }),
                    (false, true) => Ok(Derivation::Par {
                        link,
                        premise: Box::new(convert(ps, left)?),
                    }),
                    (false, false) => Ok(Derivation::Tensor {
                        link,
                        left: Box::new(convert(ps, left)?),
                        right: Box::new(convert(ps, right)?),
                    }),
                    (true, false) => Err(SeqError::InvalidDerivation(
                        "premises attach to the left side of a join".into(),
                    )),
                }
            }
        }
    }
    let d = convert(ps, u)?;
    debug_assert!(validate_derivation(ps, &d));
    Ok(d)
}

/// Exhaustively enumerates the derivations of `ps`, memoized by link subset.
/// The order is canonical: candidates by ascending root link, Mix splits by
/// component bitmask. Any subset producing more than `cap` derivations
/// aborts with `CapExceeded`.
pub fn enumerate_sequentializations(
    ps: &ProofStructure,
    cap: usize,
) -> Result<Vec<Derivation>, SeqError> {
    let all: BTreeSet<LinkId> = (0..ps.link_count()).collect();
    let mut memo: BTreeMap<Vec<LinkId>, Vec<Derivation>> = BTreeMap::new();
    derivations_of(ps, &all, cap, &mut memo)
}

fn restricted_components(ps: &ProofStructure, set: &BTreeSet<LinkId>) -> Vec<BTreeSet<LinkId>> {
    let mut seen: BTreeSet<LinkId> = BTreeSet::new();
    let mut parts = Vec::new();
    for &start in set {
        if seen.contains(&start) {
            continue;
        }
        let mut part = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(l) = stack.pop() {
            part.insert(l);
            for (s, t) in ps.edges().iter().copied() {
                let next = if s == l { t } else if t == l { s } else { continue };
                if set.contains(&next) && seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        parts.push(part);
    }
    parts
}

fn derivations_of(
    ps: &ProofStructure,
    set: &BTreeSet<LinkId>,
    cap: usize,
    memo: &mut BTreeMap<Vec<LinkId>, Vec<Derivation>>,
) -> Result<Vec<Derivation>, SeqError> {
    let key: Vec<LinkId> = set.iter().copied().collect();
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let mut out: Vec<Derivation> = Vec::new();
    let push = |d: Derivation, out: &mut Vec<Derivation>| -> Result<(), SeqError> {
        if out.len() == cap {
            return Err(SeqError::CapExceeded { cap });
        }
        out.push(d);
        Ok(())
    };

    let components = restricted_components(ps, set);

    for &link in set {
        let terminal = ps.successors(link).iter().all(|s| !set.contains(s));
        if !terminal {
            continue;
        }
        match ps.kind(link) {
            LinkKind::Ax => {
                if set.len() == 1 {
                    push(Derivation::Ax { link }, &mut out)?;
                }
            }
            LinkKind::Par => {
                let mut rest = set.clone();
                rest.remove(&link);
                if rest.is_empty() {
                    continue;
                }
                for sub in derivations_of(ps, &rest, cap, memo)? {
                    push(
                        Derivation::Par {
                            link,
                            premise: Box::new(sub),
                        },
                        &mut out,
                    )?;
                }
            }
            LinkKind::Tensor => {
                let mut rest = set.clone();
                rest.remove(&link);
                let parts = restricted_components(ps, &rest);
                let ins = ps.in_edges(link);
                let s1 = ps.edge(ins[0]).0;
                let s2 = ps.edge(ins[1]).0;
                let c1 = parts.iter().position(|p| p.contains(&s1));
                let c2 = parts.iter().position(|p| p.contains(&s2));
                let (Some(c1), Some(c2)) = (c1, c2) else { continue };
                if c1 == c2 {
                    continue;
                }
                let others: Vec<usize> =
                    (0..parts.len()).filter(|&i| i != c1 && i != c2).collect();
                for mask in 0u64..(1 << others.len()) {
                    let mut left_set = parts[c1].clone();
                    let mut right_set = parts[c2].clone();
                    for (j, &idx) in others.iter().enumerate() {
                        if mask >> j & 1 == 1 {
                            left_set.extend(parts[idx].iter().copied());
                        } else {
                            right_set.extend(parts[idx].iter().copied());
                        }
                    }
                    let lefts = derivations_of(ps, &left_set, cap, memo)?;
                    let rights = derivations_of(ps, &right_set, cap, memo)?;
                    for dl in &lefts {
                        for dr in &rights {
                            push(
                                Derivation::Tensor {
                                    link,
                                    left: Box::new(dl.clone()),
                                    right: Box::new(dr.clone()),
                                },
                                &mut out,
                            )?;
                        }
                    }
                }
            }
        }
    }

    // Mix as the last rule: split the components in two, pinning the one
    // with the smallest link on the left.
    if components.len() >= 2 {
        let rest = &components[1..];
        let full: u64 = (1 << rest.len()) - 1;
        for mask in 0..full {
            let mut left_set = components[0].clone();
            let mut right_set = BTreeSet::new();
            for (j, part) in rest.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    left_set.extend(part.iter().copied());
                } else {
                    right_set.extend(part.iter().copied());
                }
            }
            let lefts = derivations_of(ps, &left_set, cap, memo)?;
            let rights = derivations_of(ps, &right_set, cap, memo)?;
            for dl in &lefts {
                for dr in &rights {
                    push(
                        Derivation::Mix {
                            left: Box::new(dl.clone()),
                            right: Box::new(dr.clone()),
                        },
                        &mut out,
                    )?;
                }
            }
        }
    }

    memo.insert(key, out.clone());
    Ok(out)
}
