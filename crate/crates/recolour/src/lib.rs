//! Shortest paths between proper graph colourings.
//!
//! Two proper `k`-colourings of a graph are adjacent when they differ on a
//! single vertex; walking this (implicitly exponential) solution space one
//! vertex at a time is the *recolouring* process. This crate decides whether
//! a target colouring can be reached from a start colouring within a step
//! budget, and constructs an explicit recolouring sequence when it can:
//!
//! * [`solver3`] — exact shortest distances and optimal witnesses for three
//!   colours, in time linear in the graph, built on fixed-vertex detection
//!   and a vertex height potential;
//! * [`fpt`] — a bounded depth-first search for four or more colours that
//!   restricts moves to a small candidate set derived from the two
//!   colourings, exponential only in the budget;
//! * [`oracle`] — a brute-force breadth-first search over the space of
//!   proper colourings, the ground truth everything else is tested against;
//! * [`hardness`] — a generator that compiles Hitting Set instances into
//!   recolouring instances whose budget is met exactly when a small hitting
//!   set exists, together with the explicit recolouring schedule.
//!
//! The `examples/` directory walks through each capability; the `recolour`
//! binary exposes the same functionality over instance files (see [`io`]).

pub mod colouring;
pub mod fpt;
pub mod graph;
pub mod hardness;
pub mod io;
pub mod oracle;
pub mod report;
pub mod solver3;

pub use colouring::{
    is_proper, verify_recolouring, Colour, Colouring, RecolourStep, RecolouringSequence,
    ReconfigInstance, VerifyFailure, VerifyReport,
};
pub use graph::{bfs_spanning_tree, components, Graph, SpanningTree};
