//! The brute-force oracle: breadth-first search over all proper
//! colourings reachable from a start. Exact distances, full component
//! enumeration and fixed-vertex detection on desk-scale instances.
//!
//! Run with `cargo run --example exact_oracle`.

use recolour::colouring::{Colouring, ReconfigInstance};
use recolour::graph::Graph;
use recolour::oracle::{
    oracle_component, oracle_distance, oracle_fixed_vertices, StateSpaceLimits,
};

fn main() {
    let limits = StateSpaceLimits::default();

    // Swapping the endpoint colours of a single edge takes three steps
    // through the spare colour.
    let edge = Graph::new(2, &[(0, 1)]).unwrap();
    let alpha = Colouring::new(3, vec![2, 3]).unwrap();
    let beta = Colouring::new(3, vec![3, 2]).unwrap();
    let inst = ReconfigInstance::new(edge.clone(), 3, alpha.clone(), beta, 10).unwrap();
    let result = oracle_distance(&inst, &limits);
    println!("edge swap distance: {:?}", result.distance);
    for step in result.witness.unwrap().steps() {
        println!("  recolour vertex {} to {}", step.vertex, step.colour);
    }

    // All six proper 3-colourings of an edge form one component.
    let component = oracle_component(&edge, &alpha, &limits).unwrap();
    println!("\nedge component has {} colourings:", component.len());
    for c in &component {
        println!("  {:?}", c.colours());
    }

    // A 6-cycle coloured 1,2,3,1,2,3 is completely frozen; recolour one
    // vertex pair and everything is free again.
    let cycle = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    let rigid = Colouring::new(3, vec![1, 2, 3, 1, 2, 3]).unwrap();
    let loose = Colouring::new(3, vec![1, 2, 1, 2, 1, 2]).unwrap();
    println!(
        "\nfixed vertices of the 123123 cycle: {:?}",
        oracle_fixed_vertices(&cycle, &rigid, &limits).unwrap()
    );
    println!(
        "fixed vertices of the 121212 cycle: {:?}",
        oracle_fixed_vertices(&cycle, &loose, &limits).unwrap()
    );
    println!(
        "121212 component size: {}",
        oracle_component(&cycle, &loose, &limits).unwrap().len()
    );
}
