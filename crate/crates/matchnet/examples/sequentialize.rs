//! From nets to derivation trees and back through the matching side.
//!
//! ```bash
//! cargo run --example sequentialize
//! ```

use matchnet::fixtures;
use matchnet::matching::upm_replays_to;
use matchnet::seq::{
    derivation_to_upm, enumerate_sequentializations, mix_sequentialize, upm_to_derivation,
    validate_derivation, SeqError,
};
use matchnet::translate::graphification;

fn main() {
    let net = fixtures::double_par_net();
    let derivation = mix_sequentialize(&net).unwrap();
    println!("derivation of the double-⅋ net:\n{}", derivation.pretty());
    assert!(validate_derivation(&net, &derivation));

    // The same tree, read on the matching side: joins and unions.
    let upm = derivation_to_upm(&net, &derivation).unwrap();
    let (mg, _) = graphification(&net);
    assert!(upm_replays_to(&mg.graph, &mg.matching, &upm));
    println!(
        "matching-side derivation: {} joins, {} unions",
        upm.join_count(),
        upm.union_count()
    );
    assert_eq!(upm_to_derivation(&net, &upm).unwrap(), derivation);

    // A net needing Mix sequentializes with a Mix rule.
    let fan = fixtures::fan_net();
    let fan_derivation = mix_sequentialize(&fan).unwrap();
    println!("\nfan net derivation:\n{}", fan_derivation.pretty());

    // Incorrect structures fail with a switching-cycle witness.
    let (g, m) = fixtures::chorded_square();
    let (bad, _) = matchnet::translate::proofification(&g, &m);
    match mix_sequentialize(&bad) {
        Err(SeqError::Incorrect(witness)) => {
            println!("proofified square is incorrect; witness {witness:?}")
        }
        other => println!("unexpected: {other:?}"),
    }

    // Exhaustive enumeration on small nets.
    let all = enumerate_sequentializations(&fan, 10_000).unwrap();
    println!("\nthe fan net has {} derivations; roots:", all.len());
    let mut roots: Vec<_> = all.iter().filter_map(|d| d.root_link()).collect();
    roots.sort_unstable();
    roots.dedup();
    println!("  links that can be introduced last: {roots:?}");
}
