//! The text formats: write an instance file, parse it back, solve it,
//! and round-trip a witness file.
//!
//! Run with `cargo run --example instance_files`.

use recolour::colouring::{verify_recolouring, Colouring, ReconfigInstance};
use recolour::graph::Graph;
use recolour::io;
use recolour::report::{dispatch_solve, Decision};

fn main() {
    let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let alpha = Colouring::new(3, vec![1, 2, 1]).unwrap();
    let beta = Colouring::new(3, vec![2, 1, 2]).unwrap();
    let inst = ReconfigInstance::new(g, 3, alpha, beta, 5).unwrap();

    let text = io::write_instance(&inst);
    println!("instance file:\n{text}");

    let parsed = io::parse_instance(&text).unwrap();
    assert_eq!(parsed, inst);

    let outcome = dispatch_solve(&parsed, None, true).unwrap();
    println!(
        "decision: {} (solver {}), distance {:?}",
        outcome.decision, outcome.solver, outcome.distance
    );

    if outcome.decision == Decision::Yes {
        let witness = outcome.witness.expect("yes with witness requested");
        let witness_text = io::write_witness(&witness);
        println!("witness file:\n{witness_text}");
        let replayed = io::parse_witness(&witness_text).unwrap();
        let check = verify_recolouring(&parsed.graph, &parsed.alpha, &parsed.beta, &replayed);
        println!("witness verifies after the round trip: {}", check.accepted());
    }

    // Parse errors carry line numbers.
    let broken = text.replace("b 3 2", "b 3 9");
    match io::parse_instance(&broken) {
        Err(err) => println!("\nbroken file rejected: {err}"),
        Ok(_) => unreachable!("colour 9 is outside the palette"),
    }
}
