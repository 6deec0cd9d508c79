//! The four translations between nets and matched graphs, and the
//! correctness criteria they carry.
//!
//! ```bash
//! cargo run --example translations
//! ```

use matchnet::fixtures;
use matchnet::matching::{is_unique_pm, Uniqueness};
use matchnet::proofnet::{add_conclusions, correctness_graph, dr_check, DrMode};
use matchnet::translate::{
    alternating_cycle_to_switching, graphification, pm_line_graph, proofification, rb_graph,
    verify_rb_equals_lpm,
};
use matchnet::transitions::pairs_to_transitions;

fn main() {
    let net = fixtures::double_par_net();

    // Edge-based translation: one matching edge per directed edge.
    let with_conclusions = add_conclusions(&net);
    let rb = rb_graph(&with_conclusions);
    println!(
        "edge-based graph: {} vertices, {} matching edges",
        rb.graph.vertex_count(),
        rb.matching.len()
    );
    println!(
        "matching unique: {} (net correct: {})",
        is_unique_pm(&rb.graph, &rb.matching).unwrap().is_unique(),
        dr_check(&net, DrMode::Mix).unwrap().is_correct()
    );

    // Link-based translation: one matching edge per link.
    let (mg, _) = graphification(&net);
    println!(
        "\nlink-based graph: {} vertices, {} matching edges, {} attachments",
        mg.graph.vertex_count(),
        mg.matching.len(),
        mg.graph.edge_count() - mg.matching.len()
    );

    // A failure on one side maps to a failure on the other.
    let bad = fixtures::tensor_of_ax();
    let (bad_graph, bad_map) = graphification(&bad);
    if let Uniqueness::NotUnique(cycle) =
        is_unique_pm(&bad_graph.graph, &bad_graph.matching).unwrap()
    {
        let switching =
            alternating_cycle_to_switching(&bad, &bad_graph, &bad_map, &cycle.edge_ids).unwrap();
        println!("\n⊗ of ax: alternating cycle {:?} ⇒ switching cycle {switching:?}", cycle.edge_ids);
    }

    // Matching-to-net translation.
    let (g, m) = fixtures::linked_triangles();
    let (proofified, maps) = proofification(&g, &m);
    println!(
        "\nproofification of the linked triangles: {:?}",
        proofified.kinds()
    );
    println!(
        "⊗ of the middle edge: link {}",
        maps.tensor_of_edge[&fixtures::LINKED_TRIANGLES_MIDDLE]
    );
    println!(
        "correct: {}",
        dr_check(&proofified, DrMode::Mix).unwrap().is_correct()
    );

    // The edge-based translation is the transition translation of the
    // correctness graph: literally the same graph, vertex for vertex.
    println!(
        "\nedge-based = line-graph-of-correctness-graph: {}",
        verify_rb_equals_lpm(&with_conclusions)
    );
    let paired = correctness_graph(&net);
    let transitions = pairs_to_transitions(&paired);
    let plain =
        matchnet::graph::Graph::from_edges(paired.vertices, paired.edges.iter().copied()).unwrap();
    let line = pm_line_graph(&plain, &transitions);
    println!(
        "line graph of the correctness graph: {} vertices",
        line.graph.vertex_count()
    );
}
