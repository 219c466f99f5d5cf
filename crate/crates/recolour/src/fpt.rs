//! Bounded search for palettes of four or more colours, parameterized by
//! the step budget.
//!
//! Any shortest recolouring within budget `ell` only ever touches a small
//! *candidate set* grown from the vertices where the two colourings
//! disagree: a neighbour joins the next layer only if its colour class
//! around the current vertex is small (at most `ell` members), because a
//! larger class could never be vacated in time. The decision search is then
//! a depth-first enumeration of move sequences over that set, pruned to
//! proper colourings.

use std::collections::{BTreeSet, HashMap};

use crate::colouring::{Colour, Colouring, ReconfigInstance, RecolourStep, RecolouringSequence};
use crate::graph::Graph;

/// Layered candidate set. `layers[0]` is the disagreement set; each later
/// layer collects neighbours of the previous layer lying in small colour
/// classes. `union` is the set of vertices any in-budget shortest
/// recolouring may touch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub layers: Vec<BTreeSet<usize>>,
    pub union: BTreeSet<usize>,
}

/// Vertices on which the two colourings disagree.
pub fn disagreement_set(alpha: &Colouring, beta: &Colouring) -> BTreeSet<usize> {
    assert_eq!(alpha.len(), beta.len(), "colourings cover different vertex sets");
    (0..alpha.len())
        .filter(|&v| alpha.colour(v) != beta.colour(v))
        .collect()
}

/// Build the layered candidate set for budget `ell`. Layers are produced
/// until `ell` of them exist or the sequence provably repeats forever
/// (empty layer, fixpoint, or a previously seen layer), at which point the
/// union is already complete. When more vertices disagree than the budget
/// could ever recolour, no in-budget sequence exists and the candidate set
/// is empty; this also pins the union under its `ell * (k*ell)^ell` size
/// bound unconditionally.
pub fn compute_candidate_set(
    g: &Graph,
    alpha: &Colouring,
    beta: &Colouring,
    ell: u64,
) -> CandidateSet {
    let mut layers: Vec<BTreeSet<usize>> = Vec::new();
    let mut union = BTreeSet::new();
    if ell == 0 {
        return CandidateSet { layers, union };
    }
    let first = disagreement_set(alpha, beta);
    if first.len() as u64 > ell {
        return CandidateSet { layers, union };
    }
    union.extend(first.iter().copied());
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(first.iter().copied().collect());
    layers.push(first);
    for _ in 1..ell {
        let prev = layers.last().expect("at least one layer");
        if prev.is_empty() {
            break;
        }
        let mut next: BTreeSet<usize> = BTreeSet::new();
        for &u in prev {
            let mut class_size: HashMap<Colour, u64> = HashMap::new();
            for &w in g.neighbours(u) {
                *class_size.entry(alpha.colour(w)).or_insert(0) += 1;
            }
            next.extend(
                g.neighbours(u)
                    .iter()
                    .copied()
                    .filter(|&w| class_size[&alpha.colour(w)] <= ell),
            );
        }
        union.extend(next.iter().copied());
        let key: Vec<usize> = next.iter().copied().collect();
        let repeated = !seen.insert(key);
        layers.push(next);
        if repeated {
            // The layer sequence is deterministic, so from here it cycles
            // through values already folded into the union.
            break;
        }
    }
    CandidateSet { layers, union }
}

/// Outcome of the bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FptOutcome {
    pub decision: bool,
    /// Present iff `decision`; verifies, has at most `ell` steps and only
    /// recolours candidate-set vertices.
    pub witness: Option<RecolouringSequence>,
    /// Search nodes entered, for diagnostics.
    pub explored: u64,
}

/// Decide whether `beta` is reachable from `alpha` in at most `ell` steps.
///
/// Depth-first search over sequences of (candidate vertex, colour) moves,
/// deterministic in vertex-then-colour order so the first witness found is
/// reproducible. Branches are pruned when a move breaks propriety, undoes
/// the immediately preceding move, leaves more disagreements with the
/// target than remaining budget, or reaches a colouring already expanded
/// at the same or a smaller depth. Every pruned branch provably contains
/// no first success, so the decision matches the plain enumeration.
pub fn fpt_solve(inst: &ReconfigInstance) -> FptOutcome {
    let g = &inst.graph;
    let k = inst.k;
    let candidates = compute_candidate_set(g, &inst.alpha, &inst.beta, inst.ell);
    let order: Vec<usize> = candidates.union.iter().copied().collect();

    let mut current = inst.alpha.clone();
    let mut disagree = (0..g.n())
        .filter(|&v| current.colour(v) != inst.beta.colour(v))
        .count() as u64;
    let mut explored: u64 = 1;
    if disagree == 0 {
        return FptOutcome {
            decision: true,
            witness: Some(RecolouringSequence::empty()),
            explored,
        };
    }

    struct Frame {
        vi: usize,
        ci: Colour,
        /// Vertex and prior colour of the move that entered this node.
        undo: Option<(usize, Colour)>,
    }
    let mut stack = vec![Frame {
        vi: 0,
        ci: 1,
        undo: None,
    }];
    let mut moves: Vec<RecolourStep> = Vec::new();
    // Shallowest depth at which each colouring has been expanded. A
    // revisit at the same or a greater depth has no more budget left than
    // the original visit did, so nothing new can come of it.
    let mut seen_depth: HashMap<Vec<Colour>, usize> = HashMap::new();
    seen_depth.insert(current.colours().to_vec(), 0);

    while let Some(depth) = stack.len().checked_sub(1) {
        let remaining = inst.ell - depth as u64;
        let mut descended = false;
        {
            let frame = stack.last_mut().expect("non-empty stack");
            if disagree > remaining {
                frame.vi = order.len();
            }
            'next_move: while frame.vi < order.len() {
                let v = order[frame.vi];
                while frame.ci <= k {
                    let colour = frame.ci;
                    frame.ci += 1;
                    if colour == current.colour(v) {
                        continue;
                    }
                    if frame.undo == Some((v, colour)) {
                        continue;
                    }
                    if g.neighbours(v).iter().any(|&w| current.colour(w) == colour) {
                        continue;
                    }
                    let old = current.colour(v);
                    current.set(v, colour);
                    match seen_depth.get(current.colours()) {
                        Some(&seen) if seen <= depth + 1 => {
                            current.set(v, old);
                            continue;
                        }
                        _ => {
                            seen_depth.insert(current.colours().to_vec(), depth + 1);
                        }
                    }
                    if old == inst.beta.colour(v) {
                        disagree += 1;
                    } else if colour == inst.beta.colour(v) {
                        disagree -= 1;
                    }
                    moves.push(RecolourStep { vertex: v, colour });
                    explored += 1;
                    if disagree == 0 {
                        return FptOutcome {
                            decision: true,
                            witness: Some(RecolouringSequence::new(moves)),
                            explored,
                        };
                    }
                    stack.push(Frame {
                        vi: 0,
                        ci: 1,
                        undo: Some((v, old)),
                    });
                    descended = true;
                    break 'next_move;
                }
                frame.vi += 1;
                frame.ci = 1;
            }
        }
        if !descended {
            let frame = stack.pop().expect("non-empty stack");
            if let Some((v, old)) = frame.undo {
                if current.colour(v) == inst.beta.colour(v) {
                    disagree += 1;
                } else if old == inst.beta.colour(v) {
                    disagree -= 1;
                }
                current.set(v, old);
                moves.pop();
            }
        }
    }
    FptOutcome {
        decision: false,
        witness: None,
        explored,
    }
}

/// Check that after each prefix of `steps`, the number of vertices
/// disagreeing with the start colouring is at most the prefix length.
/// Holds for every genuine recolouring sequence; exposed for test suites.
pub fn prefix_disagreement_check(alpha: &Colouring, steps: &[RecolourStep]) -> bool {
    let mut current = alpha.clone();
    let mut disagree = 0usize;
    for (q, step) in steps.iter().enumerate() {
        let was = current.colour(step.vertex) != alpha.colour(step.vertex);
        current.set(step.vertex, step.colour);
        let is = current.colour(step.vertex) != alpha.colour(step.vertex);
        match (was, is) {
            (false, true) => disagree += 1,
            (true, false) => disagree -= 1,
            _ => {}
        }
        if disagree > q + 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::verify_recolouring;
    use crate::oracle::{oracle_distance, StateSpaceLimits};

    fn instance(g: Graph, k: Colour, a: &[Colour], b: &[Colour], ell: u64) -> ReconfigInstance {
        ReconfigInstance::new(
            g,
            k,
            Colouring::new(k, a.to_vec()).unwrap(),
            Colouring::new(k, b.to_vec()).unwrap(),
            ell,
        )
        .unwrap()
    }

    #[test]
    fn disagreement_set_examples() {
        let a = Colouring::new(4, vec![1, 2]).unwrap();
        let b = Colouring::new(4, vec![2, 1]).unwrap();
        assert_eq!(disagreement_set(&a, &a), BTreeSet::new());
        assert_eq!(disagreement_set(&a, &b), BTreeSet::from([0, 1]));
        let c = Colouring::new(4, vec![1, 1]).unwrap();
        assert_eq!(disagreement_set(&b, &c), BTreeSet::from([0]));
    }

    #[test]
    fn candidate_set_is_empty_without_disagreement() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let a = Colouring::new(4, vec![1, 2, 1]).unwrap();
        let cs = compute_candidate_set(&g, &a, &a, 5);
        assert!(cs.union.is_empty());
        assert_eq!(cs.layers.len(), 1);
    }

    #[test]
    fn star_leaves_in_a_large_class_are_excluded() {
        // Centre with ell + 1 identically coloured leaves: the leaf class
        // is too large to vacate, so no leaf is a candidate.
        let ell = 2u64;
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let alpha = Colouring::new(4, vec![1, 2, 2, 2]).unwrap();
        let beta = Colouring::new(4, vec![3, 2, 2, 2]).unwrap();
        let cs = compute_candidate_set(&g, &alpha, &beta, ell);
        assert_eq!(cs.union, BTreeSet::from([0]));
    }

    #[test]
    fn path_layers_grow_through_small_classes() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let alpha = Colouring::new(4, vec![1, 2, 3]).unwrap();
        let beta = Colouring::new(4, vec![4, 2, 3]).unwrap();
        let cs = compute_candidate_set(&g, &alpha, &beta, 2);
        assert_eq!(cs.layers[0], BTreeSet::from([0]));
        assert_eq!(cs.layers[1], BTreeSet::from([1]));
        assert_eq!(cs.union, BTreeSet::from([0, 1]));
    }

    #[test]
    fn solves_identity_with_empty_witness() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let inst = instance(g, 4, &[1, 2], &[1, 2], 0);
        let out = fpt_solve(&inst);
        assert!(out.decision);
        assert!(out.witness.unwrap().is_empty());
    }

    #[test]
    fn edge_swap_needs_budget_three() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let yes = fpt_solve(&instance(g.clone(), 4, &[1, 2], &[2, 1], 3));
        assert!(yes.decision);
        let witness = yes.witness.unwrap();
        assert_eq!(witness.len(), 3);
        let inst = instance(g.clone(), 4, &[1, 2], &[2, 1], 3);
        assert!(verify_recolouring(&inst.graph, &inst.alpha, &inst.beta, &witness).accepted());

        let no = fpt_solve(&instance(g, 4, &[1, 2], &[2, 1], 2));
        assert!(!no.decision);
        assert!(no.witness.is_none());
    }

    #[test]
    fn witness_only_touches_candidates_and_respects_budget() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let inst = instance(g, 4, &[1, 2, 1, 2], &[2, 1, 2, 1], 6);
        let cs = compute_candidate_set(&inst.graph, &inst.alpha, &inst.beta, inst.ell);
        let out = fpt_solve(&inst);
        assert!(out.decision);
        let witness = out.witness.unwrap();
        assert!(witness.len() as u64 <= inst.ell);
        for v in witness.touched_vertices() {
            assert!(cs.union.contains(&v));
        }
        assert!(verify_recolouring(&inst.graph, &inst.alpha, &inst.beta, &witness).accepted());
    }

    #[test]
    fn decision_matches_oracle_across_budgets() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let alpha = [1, 2, 1, 2];
        let beta = [2, 1, 2, 1];
        let exact = oracle_distance(
            &instance(g.clone(), 4, &alpha, &beta, 0),
            &StateSpaceLimits::default(),
        )
        .distance
        .unwrap();
        let mut previous_yes = false;
        for ell in 0..=exact + 2 {
            let out = fpt_solve(&instance(g.clone(), 4, &alpha, &beta, ell));
            assert_eq!(out.decision, ell >= exact, "budget {ell}");
            // Monotone: once reachable within a budget, always reachable
            // within a larger one.
            assert!(!previous_yes || out.decision);
            previous_yes = out.decision;
        }
    }

    #[test]
    fn accepts_three_colour_instances_for_cross_checks() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let out = fpt_solve(&instance(g, 3, &[2, 3], &[3, 2], 3));
        assert!(out.decision);
    }

    #[test]
    fn prefix_disagreement_examples() {
        let alpha = Colouring::new(4, vec![1, 2, 3]).unwrap();
        assert!(prefix_disagreement_check(&alpha, &[]));
        let steps = [
            RecolourStep { vertex: 0, colour: 4 },
            RecolourStep { vertex: 0, colour: 2 },
            RecolourStep { vertex: 0, colour: 1 },
        ];
        // Repeating one vertex keeps the disagreement count below the
        // prefix length.
        assert!(prefix_disagreement_check(&alpha, &steps));
    }

    #[test]
    fn prefix_disagreement_holds_along_real_witnesses() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = instance(g, 4, &[1, 2, 3], &[3, 1, 2], 6);
        let oracle = oracle_distance(&inst, &StateSpaceLimits::default());
        let witness = oracle.witness.expect("reachable");
        assert!(prefix_disagreement_check(&inst.alpha, witness.steps()));
        let own = fpt_solve(&inst).witness.expect("within budget");
        assert!(prefix_disagreement_check(&inst.alpha, own.steps()));
    }

    #[test]
    fn candidate_union_respects_size_bound() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        let alpha = Colouring::new(4, vec![1, 2, 3, 1, 2]).unwrap();
        let beta = Colouring::new(4, vec![2, 1, 3, 1, 2]).unwrap();
        for ell in 1..=4u64 {
            let cs = compute_candidate_set(&g, &alpha, &beta, ell);
            let bound = ell * (4 * ell).pow(ell as u32);
            assert!((cs.union.len() as u64) <= bound);
        }
    }
}
