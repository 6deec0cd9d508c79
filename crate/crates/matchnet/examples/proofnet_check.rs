//! Building proof structures and checking them: switchings, the
//! forest/tree criterion, and the switching component count.
//!
//! ```bash
//! cargo run --example proofnet_check
//! ```

use matchnet::fixtures;
use matchnet::proofnet::{
    add_conclusions, correctness_graph, dr_check, mix_count, switching_graphs, DrMode, DrVerdict,
    LinkKind, ProofStructure,
};

fn main() {
    // ax-ax-⊗ under two ⅋: correct even without Mix.
    let net = fixtures::double_par_net();
    println!("links: {:?}", net.kinds());
    println!("edges: {:?}", net.edges());

    let paired = correctness_graph(&net);
    println!(
        "correctness graph: {} vertices, {} edges, {} pairs",
        paired.vertices,
        paired.edges.len(),
        paired.pairs.len()
    );
    for (switching, graph) in switching_graphs(&paired).unwrap() {
        println!(
            "  switching {:?}: {} components, forest = {}",
            switching,
            graph.component_count(),
            graph.is_forest()
        );
    }
    println!("verdict without Mix: {:?}", dr_check(&net, DrMode::NoMix).unwrap());
    println!("switching components: {}", mix_count(&net).unwrap());

    // The three-ax fan needs Mix: every switching graph has two components.
    let fan = fixtures::fan_net();
    println!("\nfan net with Mix: {:?}", dr_check(&fan, DrMode::Mix).unwrap());
    println!("fan net without Mix: {:?}", dr_check(&fan, DrMode::NoMix).unwrap());
    println!("switching components: {}", mix_count(&fan).unwrap());

    // An ax feeding a ⊗ twice is a structure but never a net: the witness
    // is a two-edge switching cycle.
    let bad = fixtures::tensor_of_ax();
    match dr_check(&bad, DrMode::Mix).unwrap() {
        DrVerdict::Incorrect(failure) => println!("\n⊗ of ax fails: {failure:?}"),
        DrVerdict::Correct => unreachable!(),
    }

    // Conclusions can be made explicit and stripped again.
    let with_conclusions = add_conclusions(&net);
    println!(
        "\nwith conclusions: {} nodes ({} conclusions)",
        with_conclusions.node_count(),
        with_conclusions.conclusion_count()
    );

    // Structures are validated on construction.
    let invalid = ProofStructure::new(vec![LinkKind::Ax, LinkKind::Tensor], vec![(0, 1)]);
    println!("half-wired ⊗: {:?}", invalid.unwrap_err());
}
