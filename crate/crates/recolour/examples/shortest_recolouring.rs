//! Exact shortest recolouring with three colours: check the reachability
//! conditions, compute the distance, build an optimal witness and verify
//! it — then look at an instance where reachability fails.
//!
//! Run with `cargo run --example shortest_recolouring`.

use recolour::colouring::{verify_recolouring, Colouring};
use recolour::graph::Graph;
use recolour::solver3::{check_necessary_conditions, distance3, witness3};

fn main() {
    // A 5-cycle with a pendant vertex.
    let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5)]).unwrap();
    let alpha = Colouring::new(3, vec![1, 2, 1, 2, 3, 3]).unwrap();
    let beta = Colouring::new(3, vec![3, 1, 3, 1, 2, 1]).unwrap();

    let report = check_necessary_conditions(&g, &alpha, &beta).unwrap();
    println!(
        "conditions: fixed sets agree = {}, edge identity holds = {}",
        report.a1_holds, report.a2_holds
    );

    let result = distance3(&g, &alpha, &beta).unwrap();
    println!("shortest distance: {:?}", result.distance);

    let witness = witness3(&g, &alpha, &beta).unwrap();
    println!("witness ({} steps):", witness.len());
    for step in witness.steps() {
        println!("  recolour vertex {} to {}", step.vertex, step.colour);
    }
    let check = verify_recolouring(&g, &alpha, &beta, &witness);
    println!("witness verifies: {}", check.accepted());
    assert_eq!(Some(witness.len() as u64), result.distance);

    // A triangle coloured with all three colours can never change: its
    // cyclic shift is proper but unreachable.
    let triangle = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let from = Colouring::new(3, vec![1, 2, 3]).unwrap();
    let to = Colouring::new(3, vec![2, 3, 1]).unwrap();
    let frozen = check_necessary_conditions(&triangle, &from, &to).unwrap();
    println!(
        "\nshifted triangle: fixed sets agree = {}, witness of failure = {:?}",
        frozen.a1_holds, frozen.failing_witness
    );
    let unreachable = distance3(&triangle, &from, &to).unwrap();
    println!("reachable = {}", unreachable.reachable);
}
