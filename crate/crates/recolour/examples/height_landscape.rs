//! The machinery under the three-colour solver: cyclic edge weights,
//! per-vertex height potentials, base independence, and the fixed
//! vertices that pin a colouring in place.
//!
//! Run with `cargo run --example height_landscape`.

use recolour::colouring::Colouring;
use recolour::graph::{bfs_spanning_tree, Graph};
use recolour::solver3::{edge_weight, fixed_vertices, relative_heights, walk_weight};

fn main() {
    // Weights measure cyclic colour increase along an oriented edge.
    let path = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let c = Colouring::new(3, vec![1, 2, 3, 1]).unwrap();
    for (u, v) in [(0usize, 1usize), (1, 2), (2, 3)] {
        println!(
            "w({u}->{v}) = {:+}, w({v}->{u}) = {:+}",
            edge_weight(&c, u, v).unwrap(),
            edge_weight(&c, v, u).unwrap()
        );
    }
    println!(
        "walk 0-1-2-3 weight: {:+}\n",
        walk_weight(&path, &c, &[0, 1, 2, 3]).unwrap()
    );

    // Heights of one colouring against another, measured over a spanning
    // tree. Rebasing shifts every height by the same constant.
    let alpha = Colouring::new(3, vec![1, 2, 3, 1]).unwrap();
    let gamma = Colouring::new(3, vec![1, 2, 1, 2]).unwrap();
    let tree = bfs_spanning_tree(&path, 0);
    let profile = relative_heights(&path, &tree, &alpha, &gamma).unwrap();
    println!("heights of gamma relative to alpha (base 0):");
    for v in 0..4 {
        println!("  h({v}) = {:+}", profile.height(v).unwrap());
    }
    let rebased = profile.rebased(3).unwrap();
    println!("rebased at vertex 3:");
    for v in 0..4 {
        println!("  h({v}) = {:+}", rebased.height(v).unwrap());
    }

    // A 6-cycle coloured 1,2,3,1,2,3 has every vertex fixed: each sees
    // both other colours among its neighbours, forever.
    let cycle = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    let rigid = Colouring::new(3, vec![1, 2, 3, 1, 2, 3]).unwrap();
    let fixed = fixed_vertices(&cycle, &rigid).unwrap();
    println!("\nfixed vertices of the 123123 cycle: {:?}", fixed.members);
    println!("  by colour 1: {:?}", fixed.by_colour[0]);
    println!("  by colour 2: {:?}", fixed.by_colour[1]);
    println!("  by colour 3: {:?}", fixed.by_colour[2]);

    let loose = Colouring::new(3, vec![1, 2, 1, 2, 1, 2]).unwrap();
    println!(
        "fixed vertices of the 121212 cycle: {:?}",
        fixed_vertices(&cycle, &loose).unwrap().members
    );
}
