//! Brute-force ground truth: breadth-first search over the space of proper
//! colourings, where two colourings are adjacent iff they differ on exactly
//! one vertex. Exact and intentionally naive; only the caps make it safe to
//! call on instances whose state space is not desk-scale.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::colouring::{is_proper, Colour, Colouring, ReconfigInstance, RecolouringSequence};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("state cap of {0} colourings exceeded before the component was enumerated")]
    StateCapExceeded(usize),
    #[error("depth cap of {0} prevented full enumeration of the component")]
    DepthCapped(u64),
}

/// Caps on the breadth-first search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateSpaceLimits {
    /// Maximum number of distinct colourings to visit.
    pub max_states: usize,
    /// Optional BFS radius; colourings further from the start are not explored.
    pub max_depth: Option<u64>,
}

impl Default for StateSpaceLimits {
    fn default() -> Self {
        StateSpaceLimits {
            max_states: 10_000_000,
            max_depth: None,
        }
    }
}

impl StateSpaceLimits {
    pub fn with_max_states(max_states: usize) -> Self {
        StateSpaceLimits {
            max_states,
            ..Default::default()
        }
    }
}

/// Result of a single-target oracle query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Exact shortest distance, when the target was reached within limits.
    pub distance: Option<u64>,
    /// A shortest recolouring sequence witnessing `distance`.
    pub witness: Option<RecolouringSequence>,
    /// True iff the start's entire component was enumerated; together with
    /// an absent distance this proves the target unreachable.
    pub exhausted: bool,
}

/// Everything a breadth-first sweep from one colouring learned: the visited
/// colourings in deterministic BFS order, their exact distances, and parent
/// pointers for witness reconstruction.
#[derive(Debug, Clone)]
pub struct ComponentExploration {
    graph_n: usize,
    states: Vec<Colouring>,
    depth: Vec<u64>,
    parent: Vec<Option<(usize, usize, Colour)>>,
    index: HashMap<Vec<Colour>, usize>,
    /// True iff every colouring of the component was visited and expanded.
    pub complete: bool,
}

impl ComponentExploration {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Visited colourings in BFS order (the start comes first).
    pub fn colourings(&self) -> &[Colouring] {
        &self.states
    }

    pub fn distance_of(&self, idx: usize) -> u64 {
        self.depth[idx]
    }

    pub fn find(&self, c: &Colouring) -> Option<usize> {
        self.index.get(c.colours()).copied()
    }

    /// Shortest recolouring sequence from the start to the `idx`-th state.
    pub fn witness_to(&self, idx: usize) -> RecolouringSequence {
        let mut steps = Vec::new();
        let mut at = idx;
        while let Some((prev, vertex, colour)) = self.parent[at] {
            steps.push((vertex, colour));
            at = prev;
        }
        steps.reverse();
        steps.into_iter().collect()
    }

    fn push_state(&mut self, c: Colouring, depth: u64, parent: Option<(usize, usize, Colour)>) {
        self.index.insert(c.colours().to_vec(), self.states.len());
        self.states.push(c);
        self.depth.push(depth);
        self.parent.push(parent);
        debug_assert_eq!(self.graph_n, self.states[0].len());
    }
}

/// BFS from `start` over proper `k`-colourings of `g`. Neighbour colourings
/// are generated vertices ascending, colours ascending, which fixes the
/// visitation order and hence all reported witnesses. Stops early if
/// `target` is reached.
fn explore(
    g: &Graph,
    start: &Colouring,
    target: Option<&Colouring>,
    limits: &StateSpaceLimits,
) -> Result<ComponentExploration, OracleError> {
    assert!(is_proper(g, start), "oracle start colouring must be proper");
    let k = start.k();
    let mut exploration = ComponentExploration {
        graph_n: g.n(),
        states: Vec::new(),
        depth: Vec::new(),
        parent: Vec::new(),
        index: HashMap::new(),
        complete: false,
    };
    exploration.push_state(start.clone(), 0, None);
    if target.is_some_and(|t| t == start) {
        return Ok(exploration);
    }
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    while let Some(at) = queue.pop_front() {
        let depth = exploration.depth[at];
        if limits.max_depth.is_some_and(|cap| depth >= cap) {
            // Not expanded; anything beyond the radius stays unknown.
            truncated = true;
            continue;
        }
        let current = exploration.states[at].clone();
        for vertex in 0..g.n() {
            'colours: for colour in 1..=k {
                if colour == current.colour(vertex) {
                    continue;
                }
                for &w in g.neighbours(vertex) {
                    if current.colour(w) == colour {
                        continue 'colours;
                    }
                }
                let next = current.recoloured(vertex, colour);
                if exploration.index.contains_key(next.colours()) {
                    continue;
                }
                if exploration.len() >= limits.max_states {
                    return Err(OracleError::StateCapExceeded(limits.max_states));
                }
                let idx = exploration.len();
                let reached_target = target.is_some_and(|t| *t == next);
                exploration.push_state(next, depth + 1, Some((at, vertex, colour)));
                if reached_target {
                    return Ok(exploration);
                }
                queue.push_back(idx);
            }
        }
    }
    exploration.complete = !truncated;
    Ok(exploration)
}

/// Enumerate the whole component of `start` in the reconfiguration graph,
/// in deterministic BFS order. Errors if a cap cuts the enumeration short.
pub fn explore_component(
    g: &Graph,
    start: &Colouring,
    limits: &StateSpaceLimits,
) -> Result<ComponentExploration, OracleError> {
    let exploration = explore(g, start, None, limits)?;
    if !exploration.complete {
        return Err(OracleError::DepthCapped(limits.max_depth.unwrap_or(0)));
    }
    Ok(exploration)
}

/// Exact shortest recolouring distance from `inst.alpha` to `inst.beta`,
/// ignoring the instance budget. An absent distance with `exhausted` set
/// proves unreachability; with `exhausted` unset the search was cut off by
/// a cap and the query is inconclusive.
pub fn oracle_distance(inst: &ReconfigInstance, limits: &StateSpaceLimits) -> OracleResult {
    match explore(&inst.graph, &inst.alpha, Some(&inst.beta), limits) {
        Ok(exploration) => match exploration.find(&inst.beta) {
            Some(idx) => {
                let witness = exploration.witness_to(idx);
                debug_assert_eq!(witness.len() as u64, exploration.distance_of(idx));
                OracleResult {
                    distance: Some(exploration.distance_of(idx)),
                    witness: Some(witness),
                    exhausted: exploration.complete,
                }
            }
            None => OracleResult {
                distance: None,
                witness: None,
                exhausted: exploration.complete,
            },
        },
        Err(_) => OracleResult {
            distance: None,
            witness: None,
            exhausted: false,
        },
    }
}

/// The vertices whose colour agrees with `c` in every colouring reachable
/// from `c`. Requires the full component to fit within the limits.
pub fn oracle_fixed_vertices(
    g: &Graph,
    c: &Colouring,
    limits: &StateSpaceLimits,
) -> Result<BTreeSet<usize>, OracleError> {
    let exploration = explore_component(g, c, limits)?;
    let mut fixed: Vec<bool> = vec![true; g.n()];
    for state in exploration.colourings() {
        for (v, flag) in fixed.iter_mut().enumerate() {
            if state.colour(v) != c.colour(v) {
                *flag = false;
            }
        }
    }
    Ok(fixed
        .iter()
        .enumerate()
        .filter_map(|(v, &f)| f.then_some(v))
        .collect())
}

/// All colourings reachable from `start`, in deterministic BFS order.
pub fn oracle_component(
    g: &Graph,
    start: &Colouring,
    limits: &StateSpaceLimits,
) -> Result<Vec<Colouring>, OracleError> {
    Ok(explore_component(g, start, limits)?.colourings().to_vec())
}
