//! The order in which links can be introduced across all sequentializations
//! of a net: the successor relation, the dependency relation on ⅋-links,
//! and their transitive closure, computed through the matching translation
//! and cross-checkable against exhaustive enumeration.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, Matching};
use crate::matching::{find_alternating_path_through, transitive_closure};
use crate::proofnet::{LinkId, LinkKind, ProofStructure};
use crate::seq::enumerate_sequentializations;
use crate::translate::{check_mix_correctness, graphification};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KingdomError {
    #[error("structure is not a proof net")]
    NotCorrect,
    #[error("link {0} is not a ⅋-link")]
    NotAPar(LinkId),
    #[error("structure is not correct without Mix")]
    NotMllCorrect,
    #[error("link {0} is not maximal in the ordering")]
    NotMaximal(LinkId),
    #[error("more than {cap} derivations")]
    CapExceeded { cap: usize },
}

/// A strict partial order on links: the generating relation (dependencies
/// plus successors) and its transitive closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KingdomOrder {
    pub generating: BTreeSet<(LinkId, LinkId)>,
    pub closure: BTreeSet<(LinkId, LinkId)>,
}

impl KingdomOrder {
    pub fn below(&self, p: LinkId, q: LinkId) -> bool {
        self.closure.contains(&(p, q))
    }

    /// Links with nothing above them.
    pub fn maximal_links(&self, link_count: usize) -> Vec<LinkId> {
        (0..link_count)
            .filter(|&l| !self.closure.iter().any(|&(p, _)| p == l))
            .collect()
    }

    /// A greatest element, when one exists.
    pub fn greatest(&self, link_count: usize) -> Option<LinkId> {
        (0..link_count).find(|&q| {
            (0..link_count)
                .filter(|&p| p != q)
                .all(|p| self.closure.contains(&(p, q)))
        })
    }
}

/// Pairs `(p, q)` such that a directed edge runs from `p` to `q`.
pub fn successor_relation(ps: &ProofStructure) -> BTreeSet<(LinkId, LinkId)> {
    ps.edges().iter().copied().collect()
}

/// Decides whether `p` is a dependency of the ⅋-link `q`: some switching
/// path joins the two premises of `q` through `p`.
///
/// For a premise `p` of `q` this is equivalent to the structure turning
/// incorrect when `q` is relabeled ⊗. Otherwise the question moves to the
/// graphification: delete the far endpoint of `q`'s matching edge, split the
/// premise-side endpoint into twins, and ask for an alternating path between
/// the twins crossing `p`'s matching edge.
pub fn is_dependency(ps: &ProofStructure, p: LinkId, q: LinkId) -> Result<bool, KingdomError> {
    if ps.kind(q) != LinkKind::Par {
        return Err(KingdomError::NotAPar(q));
    }
    if check_mix_correctness(ps).is_err() {
        return Err(KingdomError::NotCorrect);
    }
    if p == q {
        return Ok(false);
    }
    if ps.predecessors(q).contains(&p) {
        let relabeled = ps
            .with_kind(q, LinkKind::Tensor)
            .expect("⊗ and ⅋ have the same degree constraints");
        return Ok(check_mix_correctness(&relabeled).is_err());
    }
    Ok(dependency_by_matching(ps, p, q))
}

/// Blossom detection specialized to the graphification: is there a cycle
/// through the premise endpoint of `q`'s matching edge, matched except at
/// that endpoint, crossing `p`'s matching edge?
fn dependency_by_matching(ps: &ProofStructure, p: LinkId, q: LinkId) -> bool {
    let (mg, _) = graphification(ps);
    let hub = 2 * q;
    let far = 2 * q + 1;
    // Rebuild with `far` reborn as a twin of `hub`: drop everything at
    // `far`, duplicate every non-matching edge at `hub` onto the twin.
    let mut g2 = Graph::new(mg.graph.vertex_count());
    let mut matching_ids = Vec::new();
    let mut prescribed = None;
    for (id, &(x, y)) in mg.graph.edges().iter().enumerate() {
        if x == far || y == far {
            continue;
        }
        let new_id = g2.add_edge(x, y).unwrap();
        if mg.matching.contains(id) {
            matching_ids.push(new_id);
            if id == p {
                prescribed = Some(new_id);
            }
        }
        if x == hub || y == hub {
            let other = if x == hub { y } else { x };
            g2.add_edge(far, other).unwrap();
        }
    }
    let m2 = Matching::new(&g2, matching_ids).unwrap();
    let prescribed = prescribed.expect("p's matching edge survives the rebuild");
    find_alternating_path_through(&g2, &m2, hub, far, prescribed)
        .expect("twins are the only unmatched vertices")
        .is_some()
}

/// The full dependency relation `{(p, q) : p a dependency of ⅋-link q}`.
pub fn dependency_relation(
    ps: &ProofStructure,
) -> Result<BTreeSet<(LinkId, LinkId)>, KingdomError> {
    if check_mix_correctness(ps).is_err() {
        return Err(KingdomError::NotCorrect);
    }
    let mut relation = BTreeSet::new();
    for q in ps.par_links() {
        let premises: BTreeSet<LinkId> = ps.predecessors(q).into_iter().collect();
        let premise_dependency = {
            let relabeled = ps
                .with_kind(q, LinkKind::Tensor)
                .expect("⊗ and ⅋ have the same degree constraints");
            check_mix_correctness(&relabeled).is_err()
        };
        for p in 0..ps.link_count() {
            if p == q {
                continue;
            }
            let dependent = if premises.contains(&p) {
                premise_dependency
            } else {
                dependency_by_matching(ps, p, q)
            };
            if dependent {
                relation.insert((p, q));
            }
        }
    }
    Ok(relation)
}

/// The ordering generated by dependencies and successors, closed
/// transitively.
pub fn kingdom_order(ps: &ProofStructure) -> Result<KingdomOrder, KingdomError> {
    let mut generating = dependency_relation(ps)?;
    generating.extend(successor_relation(ps));
    let closure = transitive_closure(&generating);
    debug_assert!(
        closure.iter().all(|&(p, q)| p != q),
        "the ordering must be irreflexive on proof nets"
    );
    Ok(KingdomOrder {
        generating,
        closure,
    })
}

/// Definition-level computation: intersect, over every derivation, the
/// pairs `(p, q)` with `p` introduced inside a premise of `q`'s rule.
pub fn kingdom_order_bruteforce(
    ps: &ProofStructure,
    cap: usize,
) -> Result<KingdomOrder, KingdomError> {
    let derivations = enumerate_sequentializations(ps, cap)
        .map_err(|e| match e {
            crate::seq::SeqError::CapExceeded { cap } => KingdomError::CapExceeded { cap },
            _ => KingdomError::NotCorrect,
        })?;
    if derivations.is_empty() {
        return Err(KingdomError::NotCorrect);
    }
    let mut iter = derivations.iter();
    let mut relation = iter.next().unwrap().kingdom_pairs();
    for d in iter {
        let pairs = d.kingdom_pairs();
        relation.retain(|pair| pairs.contains(pair));
    }
    Ok(KingdomOrder {
        generating: relation.clone(),
        closure: relation,
    })
}

/// Exhaustive form of the dependency definition, meaningful on arbitrary
/// structures: search for a path in the correctness graph joining the two
/// premises of `q` through `p`, avoiding `q` itself and crossing no ⅋ pair
/// twice.
///
/// Avoiding `q` matters: a walk entering `q` by one premise and leaving by
/// its output would close no switching cycle when `q` is relabeled ⊗, and
/// has no blossom counterpart on the matching side.
pub fn has_premise_path_through(ps: &ProofStructure, p: LinkId, q: LinkId) -> bool {
    if ps.kind(q) != LinkKind::Par {
        return false;
    }
    let preds = ps.predecessors(q);
    let (start, goal) = (preds[0], preds[1]);
    // Undirected adjacency over links, remembering the edge used.
    let mut adjacency: Vec<Vec<(LinkId, usize)>> = vec![Vec::new(); ps.link_count()];
    for (e, &(s, t)) in ps.edges().iter().enumerate() {
        adjacency[s].push((t, e));
        adjacency[t].push((s, e));
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        ps: &ProofStructure,
        adjacency: &[Vec<(LinkId, usize)>],
        cur: LinkId,
        goal: LinkId,
        wanted: LinkId,
        visited: &mut Vec<bool>,
        used_pairs: &mut BTreeSet<LinkId>,
        seen_wanted: bool,
    ) -> bool {
        if cur == goal {
            return seen_wanted || cur == wanted;
        }
        for &(next, e) in &adjacency[cur] {
            if visited[next] {
                continue;
            }
            let (_, tgt) = ps.edge(e);
            let pair_link = (ps.kind(tgt) == LinkKind::Par).then_some(tgt);
            if let Some(l) = pair_link {
                if used_pairs.contains(&l) {
                    continue;
                }
                used_pairs.insert(l);
            }
            visited[next] = true;
            let hit = seen_wanted || cur == wanted || next == wanted;
            if dfs(ps, adjacency, next, goal, wanted, visited, used_pairs, hit) {
                return true;
            }
            visited[next] = false;
            if let Some(l) = pair_link {
                used_pairs.remove(&l);
            }
        }
        false
    }

    if start == goal {
        // Both premises coincide: the trivial path sits at that link.
        return start == p;
    }
    let mut visited = vec![false; ps.link_count()];
    visited[start] = true;
    visited[q] = true;
    let mut used_pairs = BTreeSet::new();
    dfs(
        ps,
        &adjacency,
        start,
        goal,
        p,
        &mut visited,
        &mut used_pairs,
        start == p,
    )
}

/// For an `≪`-maximal link of a Mix-free correct net, some sequentialization
/// must end by introducing it; this checks that on the enumerated
/// derivations.
pub fn check_last_rule_property(
    ps: &ProofStructure,
    link: LinkId,
    cap: usize,
) -> Result<bool, KingdomError> {
    if check_mix_correctness(ps).is_err() || crate::proofnet::mix_count_formula(ps) != 1 {
        return Err(KingdomError::NotMllCorrect);
    }
    let order = kingdom_order(ps)?;
    if !order.maximal_links(ps.link_count()).contains(&link) {
        return Err(KingdomError::NotMaximal(link));
    }
    let derivations =
        enumerate_sequentializations(ps, cap).map_err(|e| match e {
            crate::seq::SeqError::CapExceeded { cap } => KingdomError::CapExceeded { cap },
            _ => KingdomError::NotCorrect,
        })?;
    Ok(derivations.iter().any(|d| d.root_link() == Some(link)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn successor_relation_reads_edges() {
        assert!(successor_relation(&fixtures::single_ax()).is_empty());
        let fan = fixtures::fan_net();
        assert_eq!(
            successor_relation(&fan),
            BTreeSet::from([(1, 3), (1, 5), (0, 3), (0, 4), (2, 4), (2, 5)])
        );
        assert_eq!(successor_relation(&fixtures::double_par_net()).len(), 6);
    }

    #[test]
    fn fan_net_dependency_relation_is_empty() {
        let ps = fixtures::fan_net();
        assert!(dependency_relation(&ps).unwrap().is_empty());
    }

    #[test]
    fn linked_triangles_net_dependencies() {
        // In the proofification of the two linked triangles, each vertex-⅋
        // depends on its own triangle's ⊗-link and on nothing else.
        let (g, m) = fixtures::linked_triangles();
        let (ps, maps) = crate::translate::proofification(&g, &m);
        let pars: Vec<LinkId> = ps.par_links().collect();
        assert_eq!(pars.len(), 2);
        let tensors: Vec<LinkId> = maps.tensor_of_edge.values().copied().collect();
        let relation = dependency_relation(&ps).unwrap();
        for &q in &pars {
            let deps: Vec<LinkId> = relation
                .iter()
                .filter(|&&(_, link)| link == q)
                .map(|&(p, _)| p)
                .collect();
            // Exactly one dependency, and it is a ⊗-link.
            let tensor_deps: Vec<_> =
                deps.iter().filter(|p| tensors.contains(p)).collect();
            assert_eq!(tensor_deps.len(), 1);
        }
        // The middle ⊗ (for the bridge edge) has no dependency on anything:
        // it never appears on the left of a dependency pair pointing at it.
        let middle = maps.tensor_of_edge[&fixtures::LINKED_TRIANGLES_MIDDLE];
        assert!(relation.iter().all(|&(_, q)| q != middle));
    }

    #[test]
    fn double_par_net_kingdom_is_total_enough() {
        let ps = fixtures::double_par_net();
        let order = kingdom_order(&ps).unwrap();
        // The terminal ⅋ is the greatest element.
        assert_eq!(order.greatest(ps.link_count()), Some(4));
        // The inner ⅋ sits above the ⊗-link it depends on.
        assert!(order.below(2, 3));
    }

    #[test]
    fn linked_triangles_net_greatest_is_the_bridge_tensor() {
        let (g, m) = fixtures::linked_triangles();
        let (ps, maps) = crate::translate::proofification(&g, &m);
        let order = kingdom_order(&ps).unwrap();
        let middle = maps.tensor_of_edge[&fixtures::LINKED_TRIANGLES_MIDDLE];
        assert_eq!(order.greatest(ps.link_count()), Some(middle));
    }

    #[test]
    fn fan_net_kingdom_is_the_successor_closure() {
        let ps = fixtures::fan_net();
        let order = kingdom_order(&ps).unwrap();
        assert_eq!(
            order.closure,
            transitive_closure(&successor_relation(&ps))
        );
        assert_eq!(order.greatest(ps.link_count()), None);
    }

    #[test]
    fn single_ax_kingdom_is_empty() {
        let order = kingdom_order(&fixtures::single_ax()).unwrap();
        assert!(order.closure.is_empty());
    }

    #[test]
    fn bruteforce_matches_on_fixture_nets() {
        for ps in [
            fixtures::single_ax(),
            fixtures::par_of_ax(),
            fixtures::double_par_net(),
            fixtures::fan_net(),
            fixtures::linked_triangles_net(),
        ] {
            let fast = kingdom_order(&ps).unwrap();
            let slow = kingdom_order_bruteforce(&ps, 100_000).unwrap();
            assert_eq!(fast.closure, slow.closure, "structure {:?}", ps.kinds());
        }
    }

    #[test]
    fn dependency_requires_a_par() {
        let ps = fixtures::double_par_net();
        assert_eq!(is_dependency(&ps, 0, 2), Err(KingdomError::NotAPar(2)));
    }

    #[test]
    fn dependency_requires_correctness() {
        let ps = fixtures::tensor_of_ax();
        // No ⅋ at all; relabel an input to reach the correctness check.
        assert!(matches!(
            dependency_relation(&ps),
            Err(KingdomError::NotCorrect)
        ));
    }

    #[test]
    fn last_rule_property_on_fixtures() {
        let ps = fixtures::double_par_net();
        assert!(check_last_rule_property(&ps, 4, 100_000).unwrap());

        let (g, m) = fixtures::linked_triangles();
        let (net, maps) = crate::translate::proofification(&g, &m);
        let middle = maps.tensor_of_edge[&fixtures::LINKED_TRIANGLES_MIDDLE];
        assert!(check_last_rule_property(&net, middle, 100_000).unwrap());
    }

    #[test]
    fn fan_net_tensor_never_appears_at_the_root() {
        // Under Mix the last-rule guarantee fails: the ⊗ is maximal in the
        // ordering yet no derivation introduces it last.
        let ps = fixtures::fan_net();
        let order = kingdom_order(&ps).unwrap();
        assert!(order.maximal_links(ps.link_count()).contains(&4));
        let derivations = enumerate_sequentializations(&ps, 100_000).unwrap();
        assert!(!derivations.is_empty());
        assert!(derivations.iter().all(|d| d.root_link() != Some(4)));
        assert_eq!(
            check_last_rule_property(&ps, 4, 100_000),
            Err(KingdomError::NotMllCorrect)
        );
    }

    #[test]
    fn fan_net_translated_probe_finds_no_path_through_the_tensor() {
        // Deleting the left ⅋'s matching edge from the fan net's
        // translation leaves no alternating path between its endpoints
        // crossing the ⊗'s edge, matching the empty dependency relation.
        let ps = fixtures::fan_net();
        let (mg, _) = crate::translate::graphification(&ps);
        let removed = 3; // matching edge of the left ⅋ (link 3)
        let (u, v) = mg.graph.endpoints(removed);
        let mut g2 = Graph::new(mg.graph.vertex_count());
        let mut matching_ids = Vec::new();
        let mut prescribed = None;
        for (id, &(x, y)) in mg.graph.edges().iter().enumerate() {
            if id == removed {
                continue;
            }
            let new_id = g2.add_edge(x, y).unwrap();
            if mg.matching.contains(id) {
                matching_ids.push(new_id);
                if id == 4 {
                    prescribed = Some(new_id); // matching edge of the ⊗ (link 4)
                }
            }
        }
        let m2 = Matching::new(&g2, matching_ids).unwrap();
        let path =
            find_alternating_path_through(&g2, &m2, u, v, prescribed.unwrap()).unwrap();
        assert!(path.is_none());
    }

    #[test]
    fn premise_path_oracle_agrees_with_the_matching_route() {
        for ps in [
            fixtures::double_par_net(),
            fixtures::fan_net(),
            fixtures::linked_triangles_net(),
        ] {
            let relation = dependency_relation(&ps).unwrap();
            for q in ps.par_links() {
                for p in 0..ps.link_count() {
                    if p == q {
                        continue;
                    }
                    assert_eq!(
                        has_premise_path_through(&ps, p, q),
                        relation.contains(&(p, q)),
                        "p={p} q={q}"
                    );
                }
            }
        }
    }
}
