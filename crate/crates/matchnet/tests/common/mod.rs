#![allow(dead_code)]

//! Independent oracles shared by the integration suites. Everything here is
//! exhaustive or dynamic-programming based and never calls into the fast
//! paths it is used to check.

use std::collections::BTreeSet;

use matchnet::graph::{EdgeId, Graph, Matching, VertexId};
use matchnet::proofnet::{LinkKind, ProofStructure, PsEdgeId};

/// Maximum matching size by bitmask dynamic programming, `O(2^n · n)`.
pub fn brute_max_matching_size(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20, "bitmask oracle");
    let full = 1usize << n;
    let mut dp = vec![0u8; full];
    for mask in 1..full {
        let v = mask.trailing_zeros() as usize;
        let without = mask & !(1 << v);
        let mut best = dp[without];
        for &(w, _) in g.neighbors(v) {
            if mask >> w & 1 == 1 {
                let rest = without & !(1 << w);
                best = best.max(1 + dp[rest]);
            }
        }
        dp[mask] = best;
    }
    dp[full - 1] as usize
}

/// Perfect-matching count by bitmask dynamic programming.
pub fn count_perfect_matchings(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 20, "bitmask oracle");
    if n % 2 == 1 {
        return 0;
    }
    let full = 1usize << n;
    let mut dp = vec![0u64; full];
    dp[0] = 1;
    for mask in 1..full {
        let v = mask.trailing_zeros() as usize;
        let without = mask & !(1 << v);
        let mut total = 0;
        for &(w, _) in g.neighbors(v) {
            if w != v && mask >> w & 1 == 1 {
                total += dp[without & !(1 << w)];
            }
        }
        dp[mask] = total;
    }
    dp[full - 1]
}

/// Exhaustive search for a simple alternating path for `m` from `u` to `v`
/// crossing `through`. Both endpoints are assumed unmatched, so the path
/// starts and ends with non-matching edges.
pub fn alternating_path_exists(
    g: &Graph,
    m: &Matching,
    u: VertexId,
    v: VertexId,
    through: EdgeId,
) -> bool {
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &Graph,
        m: &Matching,
        cur: VertexId,
        goal: VertexId,
        need_matching: bool,
        through: EdgeId,
        crossed: bool,
        visited: &mut Vec<bool>,
    ) -> bool {
        if cur == goal {
            // The path ends on a non-matching edge, i.e. when a matching
            // edge is expected next.
            return need_matching && crossed;
        }
        for &(w, e) in g.neighbors(cur) {
            if visited[w] || m.contains(e) != need_matching {
                continue;
            }
            if w == goal && need_matching {
                continue; // the goal is unmatched
            }
            visited[w] = true;
            if dfs(
                g,
                m,
                w,
                goal,
                !need_matching,
                through,
                crossed || e == through,
                visited,
            ) {
                return true;
            }
            visited[w] = false;
        }
        false
    }
    let mut visited = vec![false; g.vertex_count()];
    visited[u] = true;
    dfs(g, m, u, v, false, through, false, &mut visited)
}

/// All alternating cycles for `m`, as canonical edge sequences.
pub fn enumerate_alternating_cycles(g: &Graph, m: &Matching) -> BTreeSet<Vec<EdgeId>> {
    let mut found = BTreeSet::new();
    // Each cycle is discovered from its smallest vertex.
    for start in 0..g.vertex_count() {
        let mut visited = vec![false; g.vertex_count()];
        visited[start] = true;
        let mut path: Vec<EdgeId> = Vec::new();
        dfs_cycles(g, m, start, start, None, &mut visited, &mut path, &mut found);
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn dfs_cycles(
    g: &Graph,
    m: &Matching,
    start: VertexId,
    cur: VertexId,
    last_matched: Option<bool>,
    visited: &mut Vec<bool>,
    path: &mut Vec<EdgeId>,
    found: &mut BTreeSet<Vec<EdgeId>>,
) {
    for &(w, e) in g.neighbors(cur) {
        let matched = m.contains(e);
        if last_matched == Some(matched) {
            continue;
        }
        if w == start && path.len() >= 3 {
            // Closing edge must alternate against the first edge too.
            let first_matched = m.contains(path[0]);
            if matched != first_matched {
                let mut cycle = path.clone();
                cycle.push(e);
                found.insert(matchnet::graph::canonical_cycle(cycle));
            }
            continue;
        }
        if visited[w] || w < start {
            continue;
        }
        visited[w] = true;
        path.push(e);
        dfs_cycles(g, m, start, w, Some(matched), visited, path, found);
        path.pop();
        visited[w] = false;
    }
}

/// All switching cycles of a proof structure, as canonical edge sequences:
/// vertex-simple cycles in the correctness multigraph using at most one
/// premise edge of each ⅋-link.
pub fn enumerate_switching_cycles(ps: &ProofStructure) -> BTreeSet<Vec<PsEdgeId>> {
    let n = ps.link_count();
    let mut adjacency: Vec<Vec<(usize, PsEdgeId)>> = vec![Vec::new(); n];
    for (e, &(s, t)) in ps.edges().iter().enumerate() {
        adjacency[s].push((t, e));
        adjacency[t].push((s, e));
    }
    let mut found = BTreeSet::new();
    for start in 0..n {
        let mut visited = vec![false; n];
        visited[start] = true;
        let mut path = Vec::new();
        let mut pairs = BTreeSet::new();
        dfs_switching(
            ps, &adjacency, start, start, &mut visited, &mut path, &mut pairs, &mut found,
        );
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn dfs_switching(
    ps: &ProofStructure,
    adjacency: &[Vec<(usize, PsEdgeId)>],
    start: usize,
    cur: usize,
    visited: &mut Vec<bool>,
    path: &mut Vec<PsEdgeId>,
    pairs: &mut BTreeSet<usize>,
    found: &mut BTreeSet<Vec<PsEdgeId>>,
) {
    for &(w, e) in &adjacency[cur] {
        if path.contains(&e) {
            continue;
        }
        let (_, tgt) = ps.edge(e);
        let pair_hit = ps.kind(tgt) == LinkKind::Par;
        if pair_hit && pairs.contains(&tgt) {
            continue;
        }
        if w == start && !path.is_empty() {
            let mut cycle = path.clone();
            cycle.push(e);
            if cycle.len() >= 2 {
                found.insert(matchnet::graph::canonical_cycle(cycle));
            }
            continue;
        }
        if visited[w] || w < start {
            continue;
        }
        if pair_hit {
            pairs.insert(tgt);
        }
        visited[w] = true;
        path.push(e);
        dfs_switching(ps, adjacency, start, w, visited, path, pairs, found);
        path.pop();
        visited[w] = false;
        if pair_hit {
            pairs.remove(&tgt);
        }
    }
}

/// Derivation trees for a unique perfect matching, mirroring the inductive
/// grammar: used to read off which edges must come before which across all
/// derivations.
#[derive(Debug, Clone)]
pub enum UpmTree {
    Empty,
    Union(Box<UpmTree>, Box<UpmTree>),
    Join(EdgeId, Box<UpmTree>, Box<UpmTree>),
}

impl UpmTree {
    fn precedence_pairs(&self, pairs: &mut BTreeSet<(EdgeId, EdgeId)>) -> BTreeSet<EdgeId> {
        match self {
            UpmTree::Empty => BTreeSet::new(),
            UpmTree::Union(l, r) => {
                let mut below = l.precedence_pairs(pairs);
                below.extend(r.precedence_pairs(pairs));
                below
            }
            UpmTree::Join(e, l, r) => {
                let mut below = l.precedence_pairs(pairs);
                below.extend(r.precedence_pairs(pairs));
                for &b in &below {
                    pairs.insert((b, *e));
                }
                below.insert(*e);
                below
            }
        }
    }
}

/// Enumerates every derivation of `(g, m)` (vertex count ≤ 16) and returns
/// the pairs `(e, f)` such that `e` is introduced strictly inside `f`'s join
/// in every derivation; `None` when no derivation exists or `cap` is hit.
pub fn upm_precedence_by_enumeration(
    g: &Graph,
    m: &Matching,
    cap: usize,
) -> Option<BTreeSet<(EdgeId, EdgeId)>> {
    let n = g.vertex_count();
    assert!(n <= 16, "bitmask oracle");
    let derivations = enumerate_upm_trees(g, m, (1u32 << n) - 1, cap)?;
    if derivations.is_empty() {
        return None;
    }
    let mut iter = derivations.iter();
    let mut shared = {
        let mut pairs = BTreeSet::new();
        iter.next().unwrap().precedence_pairs(&mut pairs);
        pairs
    };
    for tree in iter {
        let mut pairs = BTreeSet::new();
        tree.precedence_pairs(&mut pairs);
        shared.retain(|p| pairs.contains(p));
    }
    Some(shared)
}

fn components_of_mask(g: &Graph, mask: u32) -> Vec<u32> {
    let mut remaining = mask;
    let mut parts = Vec::new();
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut part = 1u32 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if mask >> w & 1 == 1 && part >> w & 1 == 0 {
                    part |= 1 << w;
                    stack.push(w);
                }
            }
        }
        parts.push(part);
        remaining &= !part;
    }
    parts
}

fn enumerate_upm_trees(g: &Graph, m: &Matching, mask: u32, cap: usize) -> Option<Vec<UpmTree>> {
    if mask == 0 {
        return Some(vec![UpmTree::Empty]);
    }
    let mut out: Vec<UpmTree> = Vec::new();
    let parts = components_of_mask(g, mask);

    // Joins: a matching edge whose removal (with its endpoints) separates
    // its attachment sides.
    for e in m.iter() {
        let (x, y) = g.endpoints(e);
        if mask >> x & 1 == 0 || mask >> y & 1 == 0 {
            continue;
        }
        let rest = mask & !(1 << x) & !(1 << y);
        let attach_left: u32 = g
            .neighbors(x)
            .iter()
            .filter(|&&(w, _)| w != y && rest >> w & 1 == 1)
            .map(|&(w, _)| 1u32 << w)
            .fold(0, |a, b| a | b);
        let attach_right: u32 = g
            .neighbors(y)
            .iter()
            .filter(|&&(w, _)| w != x && rest >> w & 1 == 1)
            .map(|&(w, _)| 1u32 << w)
            .fold(0, |a, b| a | b);
        let rest_parts = components_of_mask(g, rest);
        let mut left_mask = 0u32;
        let mut right_mask = 0u32;
        let mut free: Vec<u32> = Vec::new();
        let mut viable = true;
        for &part in &rest_parts {
            match (part & attach_left != 0, part & attach_right != 0) {
                (true, true) => {
                    viable = false;
                    break;
                }
                (true, false) => left_mask |= part,
                (false, true) => right_mask |= part,
                (false, false) => free.push(part),
            }
        }
        if !viable {
            continue;
        }
        for assignment in 0u32..(1 << free.len()) {
            let mut left = left_mask;
            let mut right = right_mask;
            for (i, &part) in free.iter().enumerate() {
                if assignment >> i & 1 == 1 {
                    left |= part;
                } else {
                    right |= part;
                }
            }
            // An empty attachment set forces an empty side.
            if (attach_left == 0 && left != 0) || (attach_right == 0 && right != 0) {
                continue;
            }
            let lefts = enumerate_upm_trees(g, m, left, cap)?;
            let rights = enumerate_upm_trees(g, m, right, cap)?;
            for dl in &lefts {
                for dr in &rights {
                    if out.len() == cap {
                        return None;
                    }
                    out.push(UpmTree::Join(e, Box::new(dl.clone()), Box::new(dr.clone())));
                }
            }
        }
    }

    // Unions across components, smallest pinned left.
    if parts.len() >= 2 {
        let rest = &parts[1..];
        let full: u32 = (1 << rest.len()) - 1;
        for pick in 0..full {
            let mut left = parts[0];
            let mut right = 0u32;
            for (i, &part) in rest.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    left |= part;
                } else {
                    right |= part;
                }
            }
            let lefts = enumerate_upm_trees(g, m, left, cap)?;
            let rights = enumerate_upm_trees(g, m, right, cap)?;
            for dl in &lefts {
                for dr in &rights {
                    if out.len() == cap {
                        return None;
                    }
                    out.push(UpmTree::Union(Box::new(dl.clone()), Box::new(dr.clone())));
                }
            }
        }
    }

    Some(out)
}
