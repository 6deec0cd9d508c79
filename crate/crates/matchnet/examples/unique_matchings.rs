//! Inductive derivations for unique perfect matchings: build one, replay it,
//! and look at the blossoms that constrain it.
//!
//! ```bash
//! cargo run --example unique_matchings
//! ```

use matchnet::fixtures;
use matchnet::matching::{
    blossoms_with_stem, is_matching_bridge_by_parity, stem_relation, transitive_closure,
    upm_replays_to, upm_sequentialize,
};

fn main() {
    let (g, m) = fixtures::linked_triangles();
    println!("graph: {:?}", g.edges());
    println!("matching: {:?}", m.iter().collect::<Vec<_>>());

    // Decompose along bridges of the matching.
    let derivation = upm_sequentialize(&g, &m).unwrap();
    println!("\nderivation:\n{derivation:#?}");
    assert!(upm_replays_to(&g, &m, &derivation));
    println!("replaying the derivation rebuilds the instance exactly");

    // A bridge's membership in the matching is visible from parity alone.
    let middle = fixtures::LINKED_TRIANGLES_MIDDLE;
    println!(
        "\nmiddle edge {middle} is a matching bridge by parity: {}",
        is_matching_bridge_by_parity(&g, middle).unwrap()
    );

    // The two triangles are blossoms whose common stem is the middle edge.
    let blossoms = blossoms_with_stem(&g, &m, middle, 10).unwrap();
    for blossom in &blossoms {
        println!(
            "blossom at root {} with cycle {:?}",
            blossom.root, blossom.cycle
        );
    }

    // The stem relation (and its closure) orders the matching edges across
    // every derivation of the instance.
    let stems = stem_relation(&g, &m);
    println!("\nstem relation: {stems:?}");
    println!("closure: {:?}", transitive_closure(&stems));
}
