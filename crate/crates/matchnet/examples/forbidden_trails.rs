//! Closed trails under forbidden transitions, found through the matching
//! translation.
//!
//! ```bash
//! cargo run --example forbidden_trails
//! ```

use matchnet::fixtures;
use matchnet::graph::Graph;
use matchnet::transitions::{
    brute_force_closed_trails, find_compatible_closed_trail, pairs_to_transitions,
    TransitionSystem,
};
use matchnet::translate::pm_line_graph;

fn main() {
    // A star inside a square, with opposite spokes paired at the hub: the
    // only closed trails pass through the hub twice, so none is a cycle.
    let star = fixtures::star_with_pairs();
    let g = Graph::from_edges(star.vertices, star.edges.iter().copied()).unwrap();
    let transitions = pairs_to_transitions(&star);

    let trail = find_compatible_closed_trail(&g, &transitions).expect("a trail exists");
    println!("found trail: {:?} (length {})", trail.edge_ids, trail.len());
    println!("is a cycle: {}", trail.is_cycle(&g));

    let all = brute_force_closed_trails(&g, &transitions, 100).unwrap();
    println!("all trails up to rotation/reflection: {}", all.len());
    for t in &all {
        println!("  {:?} cycle={}", t.edge_ids, t.is_cycle(&g));
    }

    // Behind the scenes: two vertices per edge end, a matching edge per
    // original edge, a non-matching edge per allowed transition. Trails of
    // length k become alternating cycles of length 2k.
    let translated = pm_line_graph(&g, &transitions);
    println!(
        "\ntranslated: {} vertices, {} matching edges, {} transitions",
        translated.graph.vertex_count(),
        translated.matching.len(),
        translated.graph.edge_count() - translated.matching.len()
    );

    // Unrestricted transitions on a triangle: the triangle itself qualifies.
    let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    let free = TransitionSystem::all_allowed(&triangle);
    let t = find_compatible_closed_trail(&triangle, &free).unwrap();
    println!("\ntriangle trail: {:?}, cycle = {}", t.edge_ids, t.is_cycle(&triangle));

    // Forbidding everything leaves nothing.
    let none = TransitionSystem::forbid_everything(&triangle);
    println!(
        "with all transitions forbidden: {:?}",
        find_compatible_closed_trail(&triangle, &none)
    );
}
