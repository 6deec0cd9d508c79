//! Maximum matchings, uniqueness testing and the symmetric-difference
//! decomposition.
//!
//! ```bash
//! cargo run --example matchings
//! ```

use matchnet::fixtures;
use matchnet::graph::{bridges, enumerate_perfect_matchings, symmetric_difference_decompose};
use matchnet::matching::{has_perfect_matching, is_unique_pm, maximum_matching, Uniqueness};

fn main() {
    // A square with a chord has two perfect matchings.
    let (square, matching) = fixtures::chorded_square();
    println!("square with chord: {:?}", square.edges());
    println!("  has perfect matching: {}", has_perfect_matching(&square));
    let all = enumerate_perfect_matchings(&square, 10).unwrap();
    println!("  perfect matchings: {}", all.len());

    match is_unique_pm(&square, &matching).unwrap() {
        Uniqueness::NotUnique(cycle) => {
            println!("  not unique; alternating cycle {:?}", cycle.edge_ids)
        }
        Uniqueness::Unique => println!("  unique"),
    }

    // The two matchings differ by exactly that cycle.
    let other = &all[1];
    let decomposition = symmetric_difference_decompose(&square, &matching, other);
    println!(
        "  symmetric difference: {} cycle(s), {} path(s)",
        decomposition.cycles.len(),
        decomposition.paths.len()
    );

    // Two triangles joined by an edge carry a unique perfect matching, and
    // the middle edge is the only bridge.
    let (triangles, drawn) = fixtures::linked_triangles();
    println!("\nlinked triangles: {:?}", triangles.edges());
    let found = maximum_matching(&triangles);
    println!("  maximum matching: {:?}", found.iter().collect::<Vec<_>>());
    assert_eq!(found, drawn);
    println!(
        "  unique: {}",
        is_unique_pm(&triangles, &found).unwrap().is_unique()
    );
    println!("  bridges: {:?}", bridges(&triangles));
}
