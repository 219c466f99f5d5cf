//! Bounded search for four colours: the candidate set grown from the
//! disagreement vertices, and the budget at which the decision flips.
//!
//! Run with `cargo run --example bounded_search`.

use recolour::colouring::{Colouring, ReconfigInstance};
use recolour::fpt::{compute_candidate_set, fpt_solve};
use recolour::graph::Graph;

fn main() {
    // A 4-cycle whose two alternating colour classes must trade places.
    let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let alpha = Colouring::new(4, vec![1, 2, 1, 2]).unwrap();
    let beta = Colouring::new(4, vec![2, 1, 2, 1]).unwrap();

    let candidates = compute_candidate_set(&g, &alpha, &beta, 6);
    println!("candidate layers for budget 6:");
    for (i, layer) in candidates.layers.iter().enumerate() {
        println!("  layer {i}: {:?}", layer);
    }
    println!("candidate union: {:?}", candidates.union);

    for ell in 0..=6 {
        let inst =
            ReconfigInstance::new(g.clone(), 4, alpha.clone(), beta.clone(), ell).unwrap();
        let outcome = fpt_solve(&inst);
        match outcome.witness {
            Some(witness) => {
                let steps: Vec<String> = witness
                    .steps()
                    .iter()
                    .map(|s| format!("{}->{}", s.vertex, s.colour))
                    .collect();
                println!(
                    "budget {ell}: yes after exploring {} nodes, witness [{}]",
                    outcome.explored,
                    steps.join(", ")
                );
            }
            None => println!(
                "budget {ell}: no (explored {} nodes)",
                outcome.explored
            ),
        }
    }
}
