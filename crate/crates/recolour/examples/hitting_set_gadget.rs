//! From Hitting Set to recolouring: generate a hard instance, solve the
//! source problem by brute force, replay the explicit recolouring
//! schedule, and cross-check the whole construction against the oracle.
//!
//! Run with `cargo run --example hitting_set_gadget`.

use std::collections::BTreeSet;

use recolour::colouring::verify_recolouring;
use recolour::hardness::{
    brute_force_hitting_set, constructive_witness, generate, preprocess, HittingSetInstance,
};
use recolour::oracle::{oracle_distance, StateSpaceLimits};

fn main() {
    // Universe {1,2,3}, sets {1,2} and {2,3}, budget 1. Element 2 hits both.
    let hs = HittingSetInstance::new(
        3,
        vec![BTreeSet::from([1, 2]), BTreeSet::from([2, 3])],
        1,
    )
    .unwrap();
    let prepared = preprocess(&hs).unwrap();
    println!(
        "preprocessed universe: {} elements (originals {:?})",
        prepared.instance.universe_size(),
        prepared.kept_elements
    );

    let gadget = generate(&prepared.instance, 4).unwrap();
    println!(
        "gadget: {} vertices, {} edges, budget {}",
        gadget.instance.graph.n(),
        gadget.instance.graph.m(),
        gadget.instance.ell
    );

    let selection = brute_force_hitting_set(&prepared.instance, 1 << 20)
        .unwrap()
        .expect("a hitting set of size 1 exists");
    println!("smallest hitting set: {selection:?}");

    let witness = constructive_witness(&gadget, &selection).unwrap();
    let check = verify_recolouring(
        &gadget.instance.graph,
        &gadget.instance.alpha,
        &gadget.instance.beta,
        &witness,
    );
    println!(
        "constructive schedule: {} steps (budget {}), verifies: {}",
        witness.len(),
        gadget.instance.ell,
        check.accepted()
    );

    // A gadget small enough for the oracle: without any hitting set of
    // size 1, the swap cannot be done within budget.
    let no_hs = HittingSetInstance::new(
        2,
        vec![BTreeSet::from([1]), BTreeSet::from([2])],
        1,
    )
    .unwrap();
    let prepared = preprocess(&no_hs).unwrap();
    let hard = generate(&prepared.instance, 4).unwrap();
    let result = oracle_distance(&hard.instance, &StateSpaceLimits::default());
    println!(
        "\nno-instance gadget: budget {}, oracle distance {:?} => within budget: {}",
        hard.instance.ell,
        result.distance,
        result.distance.is_some_and(|d| d <= hard.instance.ell)
    );
    println!(
        "brute-force hitting set exists: {}",
        brute_force_hitting_set(&prepared.instance, 1 << 20)
            .unwrap()
            .is_some()
    );
}
