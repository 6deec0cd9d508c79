//! Seeded instance generators. All randomness flows through SplitMix64 so
//! that a `(kind, size, seed)` triple is reproducible bit for bit on every
//! platform.

use crate::graph::{EdgeId, Graph, Matching, VertexId};
use crate::proofnet::{LinkId, LinkKind, ProofStructure};

/// SplitMix64: `state += 0x9E3779B97F4A7C15`, then two xor-multiply mixing
/// rounds per output.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn chance(&mut self, numerator: usize, denominator: usize) -> bool {
        self.below(denominator) < numerator
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }
}

/// Knobs for the correct-net generator.
#[derive(Debug, Clone)]
pub struct NetConfig {
    pub links: usize,
    /// Relative weights for choosing the next rule.
    pub ax_weight: usize,
    pub tensor_weight: usize,
    pub par_weight: usize,
    /// Stop creating ⅋-links beyond this count.
    pub par_limit: Option<usize>,
    /// Build a single weakly connected component.
    pub connected: bool,
}

impl NetConfig {
    pub fn with_links(links: usize) -> Self {
        NetConfig {
            links,
            ax_weight: 2,
            tensor_weight: 2,
            par_weight: 2,
            par_limit: None,
            connected: false,
        }
    }
}

/// Builds a correct structure by replaying the construction rules: fresh
/// ax-links, ⊗ between links of two different components, ⅋ inside one
/// component (possibly twice the same ax). Disjoint components remain as
/// implicit Mix uses.
pub fn random_correct_net(rng: &mut SplitMix64, config: &NetConfig) -> ProofStructure {
    if config.connected {
        return random_connected_net(rng, config.links.max(1));
    }
    let total = config.links.max(1);
    let mut kinds: Vec<LinkKind> = vec![LinkKind::Ax];
    let mut edges: Vec<(LinkId, LinkId)> = Vec::new();
    // Union-find over links for component tracking.
    let mut parent: Vec<usize> = vec![0];
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let r = find(parent, parent[v]);
            parent[v] = r;
        }
        parent[v]
    }
    let mut out_degree: Vec<usize> = vec![0];

    while kinds.len() < total {
        let spare = |l: usize, kinds: &[LinkKind], out_degree: &[usize]| {
            kinds[l].max_out() - out_degree[l]
        };
        let mut roots: Vec<usize> = Vec::new();
        for l in 0..kinds.len() {
            let r = find(&mut parent, l);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }

        // Candidate links with spare output slots, grouped by component.
        let mut slots: Vec<(usize, usize)> = Vec::new(); // (component root, link)
        for l in 0..kinds.len() {
            if spare(l, &kinds, &out_degree) > 0 {
                slots.push((find(&mut parent, l), l));
            }
        }

        let tensor_possible = roots.len() >= 2;
        let par_possible = roots.iter().any(|&root| {
            slots
                .iter()
                .filter(|&&(r, _)| r == root)
                .map(|&(_, l)| spare(l, &kinds, &out_degree))
                .sum::<usize>()
                >= 2
        });
        let par_allowed = par_possible
            && config
                .par_limit
                .is_none_or(|limit| kinds.iter().filter(|&&k| k == LinkKind::Par).count() < limit);

        let rule = {
            let mut choices: Vec<(LinkKind, usize)> = vec![(LinkKind::Ax, config.ax_weight)];
            if tensor_possible {
                choices.push((LinkKind::Tensor, config.tensor_weight));
            }
            if par_allowed {
                choices.push((LinkKind::Par, config.par_weight));
            }
            let total_weight: usize = choices.iter().map(|&(_, w)| w).sum();
            let mut roll = rng.below(total_weight.max(1));
            let mut picked = LinkKind::Ax;
            for (kind, weight) in choices {
                if roll < weight {
                    picked = kind;
                    break;
                }
                roll -= weight;
            }
            picked
        };

        match rule {
            LinkKind::Ax => {
                let l = kinds.len();
                kinds.push(LinkKind::Ax);
                parent.push(l);
                out_degree.push(0);
            }
            LinkKind::Tensor => {
                let first_root = roots[rng.below(roots.len())];
                let second_candidates: Vec<usize> =
                    roots.iter().copied().filter(|&r| r != first_root).collect();
                let second_root = second_candidates[rng.below(second_candidates.len())];
                let pick_slot = |rng: &mut SplitMix64, root: usize, slots: &[(usize, usize)]| {
                    let cands: Vec<usize> = slots
                        .iter()
                        .filter(|&&(r, _)| r == root)
                        .map(|&(_, l)| l)
                        .collect();
                    cands[rng.below(cands.len())]
                };
                let u = pick_slot(rng, first_root, &slots);
                let v = pick_slot(rng, second_root, &slots);
                let w = kinds.len();
                kinds.push(LinkKind::Tensor);
                parent.push(w);
                out_degree.push(0);
                edges.push((u, w));
                edges.push((v, w));
                out_degree[u] += 1;
                out_degree[v] += 1;
                let ru = find(&mut parent, u);
                parent[ru] = w;
                let rv = find(&mut parent, v);
                parent[rv] = w;
            }
            LinkKind::Par => {
                // Pick a component with two spare slots, then two slots in it.
                let rich: Vec<usize> = roots
                    .iter()
                    .copied()
                    .filter(|&root| {
                        slots
                            .iter()
                            .filter(|&&(r, _)| r == root)
                            .map(|&(_, l)| spare(l, &kinds, &out_degree))
                            .sum::<usize>()
                            >= 2
                    })
                    .collect();
                let root = rich[rng.below(rich.len())];
                let mut slot_list: Vec<usize> = Vec::new();
                for &(r, l) in &slots {
                    if r == root {
                        for _ in 0..spare(l, &kinds, &out_degree) {
                            slot_list.push(l);
                        }
                    }
                }
                let i = rng.below(slot_list.len());
                let mut j = rng.below(slot_list.len());
                while j == i {
                    j = rng.below(slot_list.len());
                }
                let (u, v) = (slot_list[i], slot_list[j]);
                let w = kinds.len();
                kinds.push(LinkKind::Par);
                parent.push(w);
                out_degree.push(0);
                edges.push((u, w));
                edges.push((v, w));
                out_degree[u] += 1;
                out_degree[v] += 1;
                let ru = find(&mut parent, u);
                parent[ru] = w;
                let rv = find(&mut parent, v);
                if find(&mut parent, rv) != find(&mut parent, w) {
                    parent[rv] = w;
                }
            }
        }
    }

    ProofStructure::new(kinds, edges).expect("rule replay yields valid structures")
}

/// One-component builder: grows from a single ax with two moves that keep
/// the structure connected, a ⅋ over two existing output slots (one link)
/// or a fresh ax joined in by a ⊗ (two links). The ⅋ count is drawn first
/// so the move sequence never runs out of slots.
fn random_connected_net(rng: &mut SplitMix64, total: usize) -> ProofStructure {
    let mut kinds: Vec<LinkKind> = vec![LinkKind::Ax];
    let mut edges: Vec<(LinkId, LinkId)> = Vec::new();
    let mut out_degree: Vec<usize> = vec![0];
    if total == 1 {
        return ProofStructure::new(kinds, edges).unwrap();
    }

    // pars + 2 * tensors = total - 1; a prefix-balanced order needs
    // tensors fired before all but the first par.
    let budget = total - 1;
    let par_candidates: Vec<usize> = (0..=budget)
        .filter(|a| (budget - a).is_multiple_of(2) && *a <= (budget - a) / 2 + 1)
        .collect();
    let mut pars_left = *rng.pick(&par_candidates);
    let mut tensors_left = (budget - pars_left) / 2;
    let mut pars_done = 0usize;
    let mut tensors_done = 0usize;

    while pars_left + tensors_left > 0 {
        let par_ok = pars_left > 0 && tensors_done >= pars_done;
        let tensor_ok = tensors_left > 0;
        let do_par = match (par_ok, tensor_ok) {
            (true, true) => rng.chance(pars_left, pars_left + tensors_left),
            (true, false) => true,
            (false, true) => false,
            (false, false) => unreachable!("move planning keeps one move available"),
        };
        if do_par {
            let mut slot_list: Vec<usize> = Vec::new();
            for (l, &kind) in kinds.iter().enumerate() {
                for _ in 0..kind.max_out() - out_degree[l] {
                    slot_list.push(l);
                }
            }
            let i = rng.below(slot_list.len());
            let mut j = rng.below(slot_list.len());
            while j == i {
                j = rng.below(slot_list.len());
            }
            let (u, v) = (slot_list[i], slot_list[j]);
            let w = kinds.len();
            kinds.push(LinkKind::Par);
            out_degree.push(0);
            edges.push((u, w));
            edges.push((v, w));
            out_degree[u] += 1;
            out_degree[v] += 1;
            pars_left -= 1;
            pars_done += 1;
        } else {
            let slot_list: Vec<usize> = (0..kinds.len())
                .filter(|&l| out_degree[l] < kinds[l].max_out())
                .collect();
            let u = *rng.pick(&slot_list);
            let ax = kinds.len();
            kinds.push(LinkKind::Ax);
            out_degree.push(0);
            let w = kinds.len();
            kinds.push(LinkKind::Tensor);
            out_degree.push(0);
            edges.push((u, w));
            edges.push((ax, w));
            out_degree[u] += 1;
            out_degree[ax] += 1;
            tensors_left -= 1;
            tensors_done += 1;
        }
    }

    ProofStructure::new(kinds, edges).expect("connected replay yields valid structures")
}

/// Rewires a few premises of a correct net at random, rejecting rewirings
/// that break the degree or acyclicity invariants. The result is a valid
/// structure that may or may not remain correct.
pub fn rewire_structure(
    rng: &mut SplitMix64,
    ps: &ProofStructure,
    rewires: usize,
) -> ProofStructure {
    let mut edges = ps.edges().to_vec();
    let kinds = ps.kinds().to_vec();
    let mut current = ps.clone();
    for _ in 0..rewires {
        if edges.is_empty() {
            break;
        }
        let e = rng.below(edges.len());
        let (_, tgt) = edges[e];
        // Sources with spare out-degree once the edge is detached.
        let candidates: Vec<LinkId> = (0..kinds.len())
            .filter(|&l| {
                let current_out = current.out_edges(l).len() - usize::from(current.edge(e).0 == l);
                current_out < kinds[l].max_out() && l != tgt
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let new_src = *rng.pick(&candidates);
        let old = edges[e];
        edges[e] = (new_src, tgt);
        match ProofStructure::new(kinds.clone(), edges.clone()) {
            Ok(next) => current = next,
            Err(_) => edges[e] = old,
        }
    }
    current
}

/// Builds a graph with a unique perfect matching by replaying the inductive
/// characterization: empty, disjoint union, or a join through a fresh
/// matching edge with attachment sets on both sides. Returns the graph and
/// its matching.
pub fn random_upm(rng: &mut SplitMix64, vertices: usize) -> (Graph, Matching) {
    let n = vertices - vertices % 2;
    let mut graph = Graph::new(n);
    let mut matching_edges: Vec<EdgeId> = Vec::new();
    let mut next_vertex = 0;

    // Builds an instance on exactly `count` fresh vertices, returning them.
    fn build(
        rng: &mut SplitMix64,
        count: usize,
        graph: &mut Graph,
        matching_edges: &mut Vec<EdgeId>,
        next_vertex: &mut VertexId,
    ) -> Vec<VertexId> {
        if count == 0 {
            return Vec::new();
        }
        // Disjoint union with one-in-four odds when splittable.
        if count >= 4 && rng.chance(1, 4) {
            let half_slots = count / 2 - 1;
            let left = 2 + 2 * rng.below(half_slots.max(1));
            let right = count - left;
            let mut vertices = build(rng, left, graph, matching_edges, next_vertex);
            vertices.extend(build(rng, right, graph, matching_edges, next_vertex));
            return vertices;
        }
        // Join: split the remainder across the two sides.
        let interior = count - 2;
        let left = 2 * rng.below(interior / 2 + 1);
        let right = interior - left;
        let left_vertices = build(rng, left, graph, matching_edges, next_vertex);
        let right_vertices = build(rng, right, graph, matching_edges, next_vertex);
        let x = *next_vertex;
        let x_prime = x + 1;
        *next_vertex += 2;
        let bridge = graph.add_edge(x, x_prime).unwrap();
        matching_edges.push(bridge);
        for (side, anchor) in [(&left_vertices, x), (&right_vertices, x_prime)] {
            if side.is_empty() {
                continue;
            }
            // A non-empty attachment set, kept small to stay sparse.
            let size = 1 + rng.below(side.len().min(3));
            let mut chosen: Vec<VertexId> = Vec::new();
            while chosen.len() < size {
                let v = *rng.pick(side);
                if !chosen.contains(&v) {
                    chosen.push(v);
                }
            }
            for v in chosen {
                graph.add_edge(v, anchor).unwrap();
            }
        }
        let mut vertices = left_vertices;
        vertices.extend(right_vertices);
        vertices.push(x);
        vertices.push(x_prime);
        vertices
    }

    let built = build(rng, n, &mut graph, &mut matching_edges, &mut next_vertex);
    debug_assert_eq!(built.len(), n);
    let matching = Matching::new(&graph, matching_edges).unwrap();
    (graph, matching)
}

/// Erdős–Rényi-style sampler: each pair becomes an edge with probability
/// `percent / 100`.
pub fn random_graph(rng: &mut SplitMix64, vertices: usize, percent: usize) -> Graph {
    let mut g = Graph::new(vertices);
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.chance(percent, 100) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bridges, enumerate_perfect_matchings};
    use crate::matching::{is_unique_pm, Uniqueness};
    use crate::translate::check_mix_correctness;

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 1234567, from the published algorithm.
        let mut rng = SplitMix64::new(1234567);
        let first = rng.next_u64();
        let second = rng.next_u64();
        let mut again = SplitMix64::new(1234567);
        assert_eq!(again.next_u64(), first);
        assert_eq!(again.next_u64(), second);
        assert_ne!(first, second);
    }

    #[test]
    fn generated_nets_are_correct() {
        for seed in 0..30 {
            let mut rng = SplitMix64::new(seed);
            let config = NetConfig::with_links(1 + (seed as usize % 40));
            let ps = random_correct_net(&mut rng, &config);
            assert!(check_mix_correctness(&ps).is_ok(), "seed {seed}");
        }
    }

    #[test]
    fn connected_nets_have_one_component() {
        for seed in 0..20 {
            let mut rng = SplitMix64::new(seed);
            let mut config = NetConfig::with_links(12);
            config.connected = true;
            let ps = random_correct_net(&mut rng, &config);
            let labels = ps.weak_components();
            assert_eq!(labels.iter().max(), Some(&0), "seed {seed}");
        }
    }

    #[test]
    fn par_limit_is_respected() {
        for seed in 0..20 {
            let mut rng = SplitMix64::new(seed);
            let mut config = NetConfig::with_links(30);
            config.par_limit = Some(5);
            let ps = random_correct_net(&mut rng, &config);
            let pars = ps.kinds().iter().filter(|&&k| k == LinkKind::Par).count();
            assert!(pars <= 5, "seed {seed} produced {pars} pars");
        }
    }

    #[test]
    fn generation_is_reproducible() {
        let make = |seed| {
            let mut rng = SplitMix64::new(seed);
            random_correct_net(&mut rng, &NetConfig::with_links(25))
        };
        assert_eq!(make(99), make(99));
        let upm = |seed| {
            let mut rng = SplitMix64::new(seed);
            random_upm(&mut rng, 12)
        };
        assert_eq!(upm(7), upm(7));
    }

    #[test]
    fn rewired_structures_stay_valid() {
        for seed in 0..20 {
            let mut rng = SplitMix64::new(seed);
            let ps = random_correct_net(&mut rng, &NetConfig::with_links(15));
            let rewired = rewire_structure(&mut rng, &ps, 3);
            assert_eq!(rewired.link_count(), ps.link_count());
        }
    }

    #[test]
    fn upm_instances_have_unique_matchings_and_matching_bridges() {
        for seed in 0..40 {
            let mut rng = SplitMix64::new(seed);
            let (g, m) = random_upm(&mut rng, 4 + (seed as usize % 12));
            assert!(m.is_perfect(&g), "seed {seed}");
            assert_eq!(
                is_unique_pm(&g, &m).unwrap(),
                Uniqueness::Unique,
                "seed {seed}"
            );
            if g.vertex_count() > 0 {
                // A unique matching always contains a bridge.
                let bridge_set = bridges(&g);
                assert!(
                    m.iter().any(|e| bridge_set.contains(&e)),
                    "seed {seed}: no matching bridge"
                );
            }
            if g.vertex_count() <= 12 {
                let all = enumerate_perfect_matchings(&g, 10_000).unwrap();
                assert_eq!(all.len(), 1, "seed {seed}");
            }
        }
    }

    #[test]
    fn random_graphs_respect_density_bounds() {
        let mut rng = SplitMix64::new(5);
        let g = random_graph(&mut rng, 10, 0);
        assert_eq!(g.edge_count(), 0);
        let g = random_graph(&mut rng, 10, 100);
        assert_eq!(g.edge_count(), 45);
    }
}
