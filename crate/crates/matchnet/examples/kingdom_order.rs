//! Dependencies between links and the ordering they generate across all
//! sequentializations.
//!
//! ```bash
//! cargo run --example kingdom_order
//! ```

use matchnet::dot::hasse_dot;
use matchnet::fixtures;
use matchnet::kingdom::{
    check_last_rule_property, dependency_relation, kingdom_order, kingdom_order_bruteforce,
    successor_relation,
};

fn main() {
    // The proofification of the linked triangles has one sequentialization,
    // so its ordering is total enough to have a greatest element.
    let (g, m) = fixtures::linked_triangles();
    let (net, maps) = matchnet::translate::proofification(&g, &m);
    let order = kingdom_order(&net).unwrap();
    println!("dependencies: {:?}", dependency_relation(&net).unwrap());
    println!("successors:  {:?}", successor_relation(&net));
    let middle = maps.tensor_of_edge[&fixtures::LINKED_TRIANGLES_MIDDLE];
    println!(
        "greatest link: {:?} (⊗ of the bridge edge is {middle})",
        order.greatest(net.link_count())
    );
    println!(
        "last-rule property for link {middle}: {}",
        check_last_rule_property(&net, middle, 10_000).unwrap()
    );

    // The enumeration-based definition agrees.
    let slow = kingdom_order_bruteforce(&net, 10_000).unwrap();
    assert_eq!(order.closure, slow.closure);
    println!("definition-level enumeration agrees");

    // With Mix in play the picture changes: the fan net has an empty
    // dependency relation and no greatest element, and its maximal ⊗-link
    // can never be introduced last.
    let fan = fixtures::fan_net();
    let fan_order = kingdom_order(&fan).unwrap();
    println!("\nfan net dependencies: {:?}", dependency_relation(&fan).unwrap());
    println!("fan net greatest: {:?}", fan_order.greatest(fan.link_count()));
    println!(
        "fan net maximal links: {:?}",
        fan_order.maximal_links(fan.link_count())
    );

    // Hasse diagram of the double-⅋ net's ordering.
    let simple = fixtures::double_par_net();
    let simple_order = kingdom_order(&simple).unwrap();
    println!("\nHasse diagram:\n{}", hasse_dot(&simple_order, &simple));
}
