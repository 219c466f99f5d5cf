//! Exact solver for palettes of three colours, plus the trivial one- and
//! two-colour cases.
//!
//! Reachability between two proper 3-colourings is governed by two
//! conditions, both checkable in linear time:
//!
//! * the *fixed vertices* — vertices no reachable colouring ever
//!   recolours — must carry the same colours under both colourings;
//! * a per-vertex integer *height* potential, measured relative to a
//!   spanning tree, must be consistent across every edge.
//!
//! When both hold, the exact shortest distance is `min(J(k1), J(k2)) / 2`,
//! where `J(k)` sums `|k + height(v)|` over the component and `k1`/`k2` are
//! the two extreme admissible final heights of a focal vertex; a sequence of
//! that exact length is constructed by repeatedly walking a maximal
//! monotone path from a vertex of maximum height deficit and recolouring
//! its end vertex.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::colouring::{find_conflict, Colour, Colouring, ReconfigInstance, RecolouringSequence};
use crate::graph::{bfs_spanning_tree, components, Graph, SpanningTree};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Solver3Error {
    #[error("expected a 3-colour palette, got {0}")]
    WrongPalette(Colour),
    #[error("this routine handles palettes of at most 2 colours, got {0}")]
    NotSmallPalette(Colour),
    #[error("colouring covers {got} vertices, graph has {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("colouring is not proper: edge {0}-{1} is monochromatic")]
    Improper(usize, usize),
    #[error("edge {0}-{1} is monochromatic, weight undefined")]
    MonochromaticEdge(usize, usize),
    #[error("walk visits {0} and {1} which are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {0} lies outside the height profile's component")]
    OutsideComponent(usize),
    #[error("reachability conditions violated: {0}")]
    ConditionsViolated(ConditionFailure),
}

/// The weight of the edge `u -> v`: the unique value in `{-1, +1}`
/// congruent to `c(v) - c(u)` modulo 3. Antisymmetric in `(u, v)`.
pub fn edge_weight(c: &Colouring, u: usize, v: usize) -> Result<i8, Solver3Error> {
    match (c.colour(v) as i64 - c.colour(u) as i64).rem_euclid(3) {
        1 => Ok(1),
        2 => Ok(-1),
        _ => Err(Solver3Error::MonochromaticEdge(u, v)),
    }
}

fn weight(c: &Colouring, u: usize, v: usize) -> i64 {
    match (c.colour(v) as i64 - c.colour(u) as i64).rem_euclid(3) {
        1 => 1,
        2 => -1,
        _ => unreachable!("monochromatic edge {u}-{v} in a colouring assumed proper"),
    }
}

/// Sum of edge weights along an oriented walk given as a vertex sequence.
pub fn walk_weight(g: &Graph, c: &Colouring, walk: &[usize]) -> Result<i64, Solver3Error> {
    let mut total = 0i64;
    for pair in walk.windows(2) {
        let (u, v) = (pair[0], pair[1]);
        if !g.has_edge(u, v) {
            return Err(Solver3Error::NotAdjacent(u, v));
        }
        total += edge_weight(c, u, v)? as i64;
    }
    Ok(total)
}

/// The fixed vertices of a 3-coloured graph, partitioned by colour. A
/// vertex is fixed when no sequence of recolourings can ever change it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSet {
    flags: Vec<bool>,
    pub members: BTreeSet<usize>,
    /// `by_colour[i - 1]` holds the fixed vertices coloured `i`.
    pub by_colour: [BTreeSet<usize>; 3],
}

impl FixedSet {
    pub fn is_fixed(&self, v: usize) -> bool {
        self.flags[v]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Fixed vertices in time linear in the graph, by iterated peeling: a
/// vertex some colour class of which is absent from its surviving
/// neighbourhood can eventually be recoloured, so it is deleted; whatever
/// survives keeps both other colours adjacent forever and is fixed.
pub fn fixed_vertices(g: &Graph, c: &Colouring) -> Result<FixedSet, Solver3Error> {
    validate_three(g, c)?;
    if let Some((u, v)) = find_conflict(g, c) {
        return Err(Solver3Error::Improper(u, v));
    }
    let n = g.n();
    let mut counts = vec![[0i64; 4]; n];
    for (v, row) in counts.iter_mut().enumerate() {
        for &w in g.neighbours(v) {
            row[c.colour(w) as usize] += 1;
        }
    }
    let mut in_s = vec![true; n];
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if (1..=3).any(|i| i != c.colour(v) && counts[v][i as usize] == 0) {
            queue.push_back(v);
            queued[v] = true;
        }
    }
    while let Some(v) = queue.pop_front() {
        in_s[v] = false;
        let cv = c.colour(v) as usize;
        for &w in g.neighbours(v) {
            if !in_s[w] {
                continue;
            }
            counts[w][cv] -= 1;
            if counts[w][cv] == 0 && !queued[w] {
                queue.push_back(w);
                queued[w] = true;
            }
        }
    }
    let mut members = BTreeSet::new();
    let mut by_colour = [BTreeSet::new(), BTreeSet::new(), BTreeSet::new()];
    for v in 0..n {
        if in_s[v] {
            members.insert(v);
            by_colour[c.colour(v) as usize - 1].insert(v);
        }
    }
    Ok(FixedSet {
        flags: in_s,
        members,
        by_colour,
    })
}

/// Per-vertex relative heights of a colouring `c` against a reference
/// colouring: the difference of tree-path weights from the base. Defined on
/// the spanning tree's component only.
#[derive(Debug, Clone)]
pub struct HeightProfile {
    pub tree: SpanningTree,
    pub base: usize,
    h: Vec<i64>,
}

impl HeightProfile {
    pub fn height(&self, v: usize) -> Result<i64, Solver3Error> {
        if self.tree.contains(v) {
            Ok(self.h[v])
        } else {
            Err(Solver3Error::OutsideComponent(v))
        }
    }

    pub(crate) fn raw(&self, v: usize) -> i64 {
        debug_assert!(self.tree.contains(v));
        self.h[v]
    }

    /// The same profile measured from a different base vertex of the same
    /// tree; all heights shift by the constant `height(new_base)`.
    pub fn rebased(&self, new_base: usize) -> Result<HeightProfile, Solver3Error> {
        let shift = self.height(new_base)?;
        let mut h = self.h.clone();
        for (v, entry) in h.iter_mut().enumerate() {
            if self.tree.contains(v) {
                *entry -= shift;
            }
        }
        Ok(HeightProfile {
            tree: self.tree.clone(),
            base: new_base,
            h,
        })
    }
}

/// Heights of `c` relative to `alpha` over `tree`, in one pass down the
/// BFS order; the tree root is the base, with height 0.
pub fn relative_heights(
    g: &Graph,
    tree: &SpanningTree,
    alpha: &Colouring,
    c: &Colouring,
) -> Result<HeightProfile, Solver3Error> {
    validate_three(g, alpha)?;
    validate_three(g, c)?;
    let mut h = vec![0i64; g.n()];
    for &v in &tree.order {
        if v == tree.root {
            continue;
        }
        let p = tree.parent[v].expect("ordered vertices lie in the tree");
        h[v] = h[p] + edge_weight(c, p, v)? as i64 - edge_weight(alpha, p, v)? as i64;
        debug_assert!([-2, 0, 2].contains(&(h[v] - h[p])));
    }
    Ok(HeightProfile {
        tree: tree.clone(),
        base: tree.root,
        h,
    })
}

/// Which reachability condition failed, and where.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionFailure {
    /// The fixed sets of the two colourings disagree at this vertex.
    FixedSetMismatch { vertex: usize },
    /// The height identity fails across this edge.
    EdgeIdentity { u: usize, v: usize },
}

impl std::fmt::Display for ConditionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConditionFailure::FixedSetMismatch { vertex } => {
                write!(f, "fixed sets disagree at vertex {vertex}")
            }
            ConditionFailure::EdgeIdentity { u, v } => {
                write!(f, "height identity fails on edge {u}-{v}")
            }
        }
    }
}

/// Outcome of the two necessary-and-sufficient reachability conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// Fixed sets agree colourwise on every component.
    pub a1_holds: bool,
    /// The height identity holds across every edge.
    pub a2_holds: bool,
    /// First failure encountered, in component order.
    pub failing_witness: Option<ConditionFailure>,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.a1_holds && self.a2_holds
    }
}

/// Check both reachability conditions on every component.
pub fn check_necessary_conditions(
    g: &Graph,
    alpha: &Colouring,
    beta: &Colouring,
) -> Result<ConditionReport, Solver3Error> {
    validate_pair(g, alpha, beta)?;
    let f_alpha = fixed_vertices(g, alpha)?;
    let f_beta = fixed_vertices(g, beta)?;
    let mut report = ConditionReport {
        a1_holds: true,
        a2_holds: true,
        failing_witness: None,
    };
    for comp in components(g) {
        if let Some(vertex) = a1_failure(&f_alpha, &f_beta, &comp, alpha, beta) {
            report.a1_holds = false;
            report
                .failing_witness
                .get_or_insert(ConditionFailure::FixedSetMismatch { vertex });
        }
        let tree = bfs_spanning_tree(g, comp[0]);
        let profile = relative_heights(g, &tree, alpha, beta)?;
        if let Some((u, v)) = a2_failure(g, &profile, &comp, alpha, beta) {
            report.a2_holds = false;
            report
                .failing_witness
                .get_or_insert(ConditionFailure::EdgeIdentity { u, v });
        }
    }
    Ok(report)
}

fn a1_failure(
    f_alpha: &FixedSet,
    f_beta: &FixedSet,
    comp: &[usize],
    alpha: &Colouring,
    beta: &Colouring,
) -> Option<usize> {
    comp.iter().copied().find(|&v| {
        f_alpha.is_fixed(v) != f_beta.is_fixed(v)
            || (f_alpha.is_fixed(v) && alpha.colour(v) != beta.colour(v))
    })
}

fn a2_failure(
    g: &Graph,
    profile: &HeightProfile,
    comp: &[usize],
    alpha: &Colouring,
    beta: &Colouring,
) -> Option<(usize, usize)> {
    for &v in comp {
        for &w in g.neighbours(v) {
            if w < v {
                continue;
            }
            if profile.raw(v) - profile.raw(w) + weight(beta, v, w) != weight(alpha, v, w) {
                return Some((v, w));
            }
        }
    }
    None
}

/// The focal vertex of a component: a fixed vertex of the target colouring
/// if one exists (smallest index), otherwise the lower-median vertex of
/// the height order, ties broken by index.
pub fn focal_vertex(
    g: &Graph,
    alpha: &Colouring,
    beta: &Colouring,
    comp: &[usize],
) -> Result<usize, Solver3Error> {
    validate_pair(g, alpha, beta)?;
    assert!(!comp.is_empty(), "component must be non-empty");
    let f_beta = fixed_vertices(g, beta)?;
    if let Some(&v) = comp.iter().find(|&&v| f_beta.is_fixed(v)) {
        return Ok(v);
    }
    let tree = bfs_spanning_tree(g, comp[0]);
    let profile = relative_heights(g, &tree, alpha, beta)?;
    Ok(lower_median(comp, &profile))
}

fn lower_median(comp: &[usize], profile: &HeightProfile) -> usize {
    let mut keyed: Vec<(i64, usize)> = comp.iter().map(|&v| (profile.raw(v), v)).collect();
    let mid = (keyed.len() - 1) / 2;
    let (_, nth, _) = keyed.select_nth_unstable(mid);
    nth.1
}

struct ComponentPlan {
    /// Heights rebased at the focal vertex, parallel to the component slice.
    heights: Vec<i64>,
    k1: i64,
    k2: i64,
    j1: u64,
    j2: u64,
}

impl ComponentPlan {
    fn distance(&self) -> u64 {
        self.j1.min(self.j2) / 2
    }

    fn chosen_k(&self) -> i64 {
        if self.j1 <= self.j2 {
            self.k1
        } else {
            self.k2
        }
    }
}

/// Conditions and distance plan for one component. Colourings are assumed
/// validated proper 3-colourings.
fn analyse_component(
    g: &Graph,
    f_alpha: &FixedSet,
    f_beta: &FixedSet,
    comp: &[usize],
    alpha: &Colouring,
    beta: &Colouring,
) -> Result<ComponentPlan, ConditionFailure> {
    if let Some(vertex) = a1_failure(f_alpha, f_beta, comp, alpha, beta) {
        return Err(ConditionFailure::FixedSetMismatch { vertex });
    }
    let tree = bfs_spanning_tree(g, comp[0]);
    let profile =
        relative_heights(g, &tree, alpha, beta).expect("validated colourings have tree weights");
    if let Some((u, v)) = a2_failure(g, &profile, comp, alpha, beta) {
        return Err(ConditionFailure::EdgeIdentity { u, v });
    }
    let u_star = comp
        .iter()
        .copied()
        .find(|&v| f_beta.is_fixed(v))
        .unwrap_or_else(|| lower_median(comp, &profile));
    let shift = profile.raw(u_star);
    let heights: Vec<i64> = comp.iter().map(|&v| profile.raw(v) - shift).collect();
    // Admissible final heights of the focal vertex form one residue class
    // modulo 6; only its two members closest to zero can minimise J.
    let class = ((alpha.colour(u_star) as i64 - beta.colour(u_star) as i64) * 2).rem_euclid(6);
    let (k1, k2) = if class == 0 { (0, 0) } else { (class, class - 6) };
    let total = |k: i64| heights.iter().map(|&h| (k + h).unsigned_abs()).sum::<u64>();
    let (j1, j2) = (total(k1), total(k2));
    Ok(ComponentPlan {
        heights,
        k1,
        k2,
        j1,
        j2,
    })
}

/// Exact shortest recolouring distance within one component, i.e.
/// `min(J(k1), J(k2)) / 2`. Errors if the reachability conditions fail
/// there.
pub fn min_total_height(
    g: &Graph,
    alpha: &Colouring,
    beta: &Colouring,
    comp: &[usize],
) -> Result<u64, Solver3Error> {
    validate_pair(g, alpha, beta)?;
    let f_alpha = fixed_vertices(g, alpha)?;
    let f_beta = fixed_vertices(g, beta)?;
    analyse_component(g, &f_alpha, &f_beta, comp, alpha, beta)
        .map(|plan| plan.distance())
        .map_err(Solver3Error::ConditionsViolated)
}

/// The two extreme admissible focal heights and their displacement totals
/// for one component, for callers that want to inspect the minimisation
/// rather than just its result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeightTotals {
    pub k1: i64,
    pub j1: u64,
    pub k2: i64,
    pub j2: u64,
}

pub fn height_totals(
    g: &Graph,
    alpha: &Colouring,
    beta: &Colouring,
    comp: &[usize],
) -> Result<HeightTotals, Solver3Error> {
    validate_pair(g, alpha, beta)?;
    let f_alpha = fixed_vertices(g, alpha)?;
    let f_beta = fixed_vertices(g, beta)?;
    let plan = analyse_component(g, &f_alpha, &f_beta, comp, alpha, beta)
        .map_err(Solver3Error::ConditionsViolated)?;
    Ok(HeightTotals {
        k1: plan.k1,
        j1: plan.j1,
        k2: plan.k2,
        j2: plan.j2,
    })
}

/// Per-component outcome of [`distance3`]; an absent distance marks an
/// unreachable component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDistance {
    pub vertices: Vec<usize>,
    pub distance: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distance3Result {
    pub reachable: bool,
    /// Sum of per-component distances, present iff every component is
    /// reachable.
    pub distance: Option<u64>,
    pub per_component: Vec<ComponentDistance>,
}

/// Exact shortest recolouring distance between two proper 3-colourings,
/// in time linear in the graph (up to the component median selection).
pub fn distance3(
    g: &Graph,
    alpha: &Colouring,
    beta: &Colouring,
) -> Result<Distance3Result, Solver3Error> {
    validate_pair(g, alpha, beta)?;
    let f_alpha = fixed_vertices(g, alpha)?;
    let f_beta = fixed_vertices(g, beta)?;
    let mut per_component = Vec::new();
    let mut reachable = true;
    let mut total = 0u64;
    for comp in components(g) {
        match analyse_component(g, &f_alpha, &f_beta, &comp, alpha, beta) {
            Ok(plan) => {
                total += plan.distance();
                per_component.push(ComponentDistance {
                    vertices: comp,
                    distance: Some(plan.distance()),
                });
            }
            Err(_) => {
                reachable = false;
                per_component.push(ComponentDistance {
                    vertices: comp,
                    distance: None,
                });
            }
        }
    }
    Ok(Distance3Result {
        reachable,
        distance: reachable.then_some(total),
        per_component,
    })
}

/// Construct a shortest recolouring sequence from `alpha` to `beta`.
/// Errors if any component fails the reachability conditions; otherwise
/// the result verifies and its length equals [`distance3`]'s distance.
pub fn witness3(
    g: &Graph,
    alpha: &Colouring,
    beta: &Colouring,
) -> Result<RecolouringSequence, Solver3Error> {
    validate_pair(g, alpha, beta)?;
    let f_alpha = fixed_vertices(g, alpha)?;
    let f_beta = fixed_vertices(g, beta)?;
    let comps = components(g);
    let mut plans = Vec::with_capacity(comps.len());
    for comp in &comps {
        let plan = analyse_component(g, &f_alpha, &f_beta, comp, alpha, beta)
            .map_err(Solver3Error::ConditionsViolated)?;
        plans.push(plan);
    }
    let mut steps = RecolouringSequence::empty();
    let mut current = alpha.clone();
    let mut deficit = vec![0i64; g.n()];
    let mut on_path = vec![false; g.n()];
    for (comp, plan) in comps.iter().zip(&plans) {
        recolour_component(g, comp, plan, &mut current, &mut deficit, &mut on_path, &mut steps);
    }
    debug_assert_eq!(current.colours(), beta.colours());
    Ok(steps)
}

/// The recolouring loop for one component whose conditions hold. Every
/// iteration recolours the end of a maximal rising (falling) path from a
/// vertex of maximum negative (positive) height deficit, moving that one
/// vertex's height 2 closer to its target; the loop therefore takes exactly
/// `plan.distance()` steps.
fn recolour_component(
    g: &Graph,
    comp: &[usize],
    plan: &ComponentPlan,
    current: &mut Colouring,
    deficit: &mut [i64],
    on_path: &mut [bool],
    steps: &mut RecolouringSequence,
) {
    let k = plan.chosen_k();
    let mut buckets: BTreeMap<i64, BTreeSet<usize>> = BTreeMap::new();
    for (&v, &h) in comp.iter().zip(&plan.heights) {
        deficit[v] = k + h;
        if deficit[v] != 0 {
            buckets.entry(deficit[v]).or_default().insert(v);
        }
    }
    let mut made = 0u64;
    while !buckets.is_empty() {
        let low = *buckets.keys().next().expect("non-empty");
        let high = *buckets.keys().next_back().expect("non-empty");
        let key = if low.abs() > high.abs() {
            low
        } else if high.abs() > low.abs() {
            high
        } else {
            // Same magnitude on both sides: take the smaller vertex index.
            let v_low = *buckets[&low].iter().next().expect("non-empty bucket");
            let v_high = *buckets[&high].iter().next().expect("non-empty bucket");
            if v_low <= v_high {
                low
            } else {
                high
            }
        };
        let start = *buckets[&key].iter().next().expect("non-empty bucket");
        let rising = key < 0;

        // Walk a maximal monotone path; every vertex on it shares the
        // extreme deficit, and the end vertex can be recoloured properly.
        let mut path = vec![start];
        on_path[start] = true;
        let end = loop {
            let at = *path.last().expect("non-empty path");
            let want = if rising {
                cyclic_up(current.colour(at))
            } else {
                cyclic_down(current.colour(at))
            };
            match g
                .neighbours(at)
                .iter()
                .copied()
                .find(|&w| current.colour(w) == want)
            {
                None => break at,
                Some(w) => {
                    assert!(
                        !on_path[w],
                        "monotone path closed a cycle; reachability conditions must have failed"
                    );
                    debug_assert_eq!(deficit[w], key);
                    path.push(w);
                    on_path[w] = true;
                }
            }
        };
        let new_colour = if rising {
            cyclic_up(current.colour(end))
        } else {
            cyclic_down(current.colour(end))
        };
        debug_assert!(g
            .neighbours(end)
            .iter()
            .all(|&w| current.colour(w) != new_colour));
        steps.push(end, new_colour);
        current.set(end, new_colour);
        made += 1;

        // Raising the colour lowers the height by 2 and vice versa, so the
        // deficit moves 2 towards zero.
        let moved = if rising { key + 2 } else { key - 2 };
        let bucket = buckets.get_mut(&key).expect("key present");
        bucket.remove(&end);
        if bucket.is_empty() {
            buckets.remove(&key);
        }
        deficit[end] = moved;
        if moved != 0 {
            buckets.entry(moved).or_default().insert(end);
        }
        for v in path {
            on_path[v] = false;
        }
    }
    assert_eq!(
        made,
        plan.distance(),
        "recolouring loop length disagrees with the height bound"
    );
}

fn cyclic_up(c: Colour) -> Colour {
    match c {
        1 => 2,
        2 => 3,
        3 => 1,
        _ => unreachable!("colour outside a 3-palette"),
    }
}

fn cyclic_down(c: Colour) -> Colour {
    match c {
        1 => 3,
        2 => 1,
        3 => 2,
        _ => unreachable!("colour outside a 3-palette"),
    }
}

/// Decision, distance and witness for palettes of one or two colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallKOutcome {
    pub reachable: bool,
    pub distance: Option<u64>,
    pub witness: Option<RecolouringSequence>,
}

/// Solve a 1- or 2-colour instance outright: with two colours a vertex
/// with any neighbour can never change (its neighbour always holds the
/// other colour), so only isolated vertices may differ.
pub fn solve_small_k(inst: &ReconfigInstance) -> Result<SmallKOutcome, Solver3Error> {
    if inst.k > 2 {
        return Err(Solver3Error::NotSmallPalette(inst.k));
    }
    let g = &inst.graph;
    let mut steps = RecolouringSequence::empty();
    for v in 0..g.n() {
        if inst.alpha.colour(v) == inst.beta.colour(v) {
            continue;
        }
        if g.degree(v) > 0 {
            return Ok(SmallKOutcome {
                reachable: false,
                distance: None,
                witness: None,
            });
        }
        steps.push(v, inst.beta.colour(v));
    }
    Ok(SmallKOutcome {
        reachable: true,
        distance: Some(steps.len() as u64),
        witness: Some(steps),
    })
}

fn validate_three(g: &Graph, c: &Colouring) -> Result<(), Solver3Error> {
    if c.k() != 3 {
        return Err(Solver3Error::WrongPalette(c.k()));
    }
    if c.len() != g.n() {
        return Err(Solver3Error::SizeMismatch {
            got: c.len(),
            expected: g.n(),
        });
    }
    Ok(())
}

fn validate_pair(g: &Graph, alpha: &Colouring, beta: &Colouring) -> Result<(), Solver3Error> {
    validate_three(g, alpha)?;
    validate_three(g, beta)?;
    if let Some((u, v)) = find_conflict(g, alpha) {
        return Err(Solver3Error::Improper(u, v));
    }
    if let Some((u, v)) = find_conflict(g, beta) {
        return Err(Solver3Error::Improper(u, v));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::verify_recolouring;
    use crate::oracle::{oracle_distance, oracle_fixed_vertices, StateSpaceLimits};

    fn colouring(cs: &[Colour]) -> Colouring {
        Colouring::new(3, cs.to_vec()).unwrap()
    }

    fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn edge_weight_examples() {
        let c = Colouring::new(3, vec![1, 2, 3]).unwrap();
        assert_eq!(edge_weight(&c, 0, 1), Ok(1)); // 2 - 1
        assert_eq!(edge_weight(&c, 2, 0), Ok(1)); // 1 - 3 wraps to +1
        assert_eq!(edge_weight(&c, 1, 0), Ok(-1));
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            assert_eq!(
                edge_weight(&c, u, v).unwrap(),
                -edge_weight(&c, v, u).unwrap()
            );
        }
        let mono = Colouring::new(3, vec![2, 2]).unwrap();
        assert_eq!(
            edge_weight(&mono, 0, 1),
            Err(Solver3Error::MonochromaticEdge(0, 1))
        );
    }

    #[test]
    fn walk_weight_examples() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = colouring(&[1, 2, 3]);
        assert_eq!(walk_weight(&g, &c, &[1]), Ok(0));
        assert_eq!(walk_weight(&g, &c, &[0, 1, 2]), Ok(2));
        assert_eq!(
            walk_weight(&g, &c, &[0, 2]),
            Err(Solver3Error::NotAdjacent(0, 2))
        );
        let t = triangle();
        assert_eq!(walk_weight(&t, &c, &[0, 1, 2, 0]), Ok(3));
    }

    #[test]
    fn fixed_vertices_of_triangle() {
        let f = fixed_vertices(&triangle(), &colouring(&[1, 2, 3])).unwrap();
        assert_eq!(f.members, BTreeSet::from([0, 1, 2]));
        assert_eq!(f.by_colour[0], BTreeSet::from([0]));
        assert_eq!(f.by_colour[1], BTreeSet::from([1]));
        assert_eq!(f.by_colour[2], BTreeSet::from([2]));
    }

    #[test]
    fn fixed_vertices_of_path_match_oracle() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = colouring(&[1, 2, 1]);
        let f = fixed_vertices(&g, &c).unwrap();
        assert!(f.is_empty());
        let oracle = oracle_fixed_vertices(&g, &c, &StateSpaceLimits::default()).unwrap();
        assert_eq!(f.members, oracle);
    }

    #[test]
    fn fixed_vertices_of_triangle_plus_edge_match_oracle() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let c = colouring(&[1, 2, 3, 1, 2]);
        let f = fixed_vertices(&g, &c).unwrap();
        assert_eq!(f.members, BTreeSet::from([0, 1, 2]));
        let oracle = oracle_fixed_vertices(&g, &c, &StateSpaceLimits::default()).unwrap();
        assert_eq!(f.members, oracle);
    }

    #[test]
    fn heights_vanish_against_self() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = colouring(&[1, 2, 1, 3]);
        let tree = bfs_spanning_tree(&g, 0);
        let profile = relative_heights(&g, &tree, &c, &c).unwrap();
        for v in 0..4 {
            assert_eq!(profile.height(v), Ok(0));
        }
    }

    #[test]
    fn height_of_recoloured_edge_endpoint() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let tree = bfs_spanning_tree(&g, 0);
        let alpha = colouring(&[1, 2]);
        let c = colouring(&[1, 3]);
        let profile = relative_heights(&g, &tree, &alpha, &c).unwrap();
        assert_eq!(profile.height(0), Ok(0));
        assert_eq!(profile.height(1), Ok(-2));
    }

    #[test]
    fn rebasing_shifts_by_a_constant() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let alpha = colouring(&[1, 2, 1, 2]);
        let beta = colouring(&[2, 1, 2, 1]);
        let tree = bfs_spanning_tree(&g, 0);
        let profile = relative_heights(&g, &tree, &alpha, &beta).unwrap();
        for base in 0..4 {
            let shifted = profile.rebased(base).unwrap();
            assert_eq!(shifted.height(base), Ok(0));
            let delta = profile.height(base).unwrap();
            for v in 0..4 {
                assert_eq!(shifted.height(v).unwrap(), profile.height(v).unwrap() - delta);
            }
        }
    }

    #[test]
    fn height_profile_rejects_outside_vertices() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let tree = bfs_spanning_tree(&g, 0);
        let c = colouring(&[1, 2, 1]);
        let profile = relative_heights(&g, &tree, &c, &c).unwrap();
        assert_eq!(profile.height(2), Err(Solver3Error::OutsideComponent(2)));
    }

    #[test]
    fn conditions_hold_for_identical_colourings() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = colouring(&[1, 2, 1]);
        let report = check_necessary_conditions(&g, &c, &c).unwrap();
        assert!(report.a1_holds && report.a2_holds);
        assert_eq!(report.failing_witness, None);
    }

    #[test]
    fn shifted_triangle_fails_fixed_set_condition() {
        let report =
            check_necessary_conditions(&triangle(), &colouring(&[1, 2, 3]), &colouring(&[2, 3, 1]))
                .unwrap();
        assert!(!report.a1_holds);
        assert!(matches!(
            report.failing_witness,
            Some(ConditionFailure::FixedSetMismatch { .. })
        ));
    }

    #[test]
    fn conditions_hold_within_oracle_components() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let alpha = colouring(&[1, 2, 1, 2]);
        let component =
            crate::oracle::oracle_component(&g, &alpha, &StateSpaceLimits::default()).unwrap();
        for beta in component {
            let report = check_necessary_conditions(&g, &alpha, &beta).unwrap();
            assert!(report.holds(), "failed for {:?}", beta.colours());
        }
    }

    #[test]
    fn focal_vertex_prefers_fixed_vertices() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let c = colouring(&[1, 2, 3, 1, 2]);
        let comp = vec![0, 1, 2];
        assert_eq!(focal_vertex(&g, &c, &c, &comp), Ok(0));
    }

    #[test]
    fn focal_vertex_of_singleton_is_itself() {
        let g = Graph::new(1, &[]).unwrap();
        let c = colouring(&[2]);
        assert_eq!(focal_vertex(&g, &c, &c, &[0]), Ok(0));
    }

    #[test]
    fn focal_vertex_takes_lower_median() {
        // Heights over the edge are {0, -2}; the lower median is the
        // endpoint at height -2.
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let alpha = colouring(&[1, 2]);
        let beta = colouring(&[1, 3]);
        assert_eq!(focal_vertex(&g, &alpha, &beta, &[0, 1]), Ok(1));
    }

    #[test]
    fn min_total_height_examples() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let alpha = colouring(&[2, 3]);
        assert_eq!(min_total_height(&g, &alpha, &alpha, &[0, 1]), Ok(0));
        assert_eq!(
            min_total_height(&g, &alpha, &colouring(&[3, 2]), &[0, 1]),
            Ok(3)
        );
        let singleton = Graph::new(1, &[]).unwrap();
        assert_eq!(
            min_total_height(&singleton, &colouring(&[1]), &colouring(&[2]), &[0]),
            Ok(1)
        );
    }

    #[test]
    fn min_total_height_requires_conditions() {
        let err = min_total_height(
            &triangle(),
            &colouring(&[1, 2, 3]),
            &colouring(&[2, 3, 1]),
            &[0, 1, 2],
        )
        .unwrap_err();
        assert!(matches!(err, Solver3Error::ConditionsViolated(_)));
    }

    #[test]
    fn witness_is_empty_for_identical_colourings() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = colouring(&[1, 2, 1]);
        assert!(witness3(&g, &c, &c).unwrap().is_empty());
    }

    #[test]
    fn witness_swaps_edge_in_three_verified_steps() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let alpha = colouring(&[2, 3]);
        let beta = colouring(&[3, 2]);
        let witness = witness3(&g, &alpha, &beta).unwrap();
        assert_eq!(witness.len(), 3);
        assert!(verify_recolouring(&g, &alpha, &beta, &witness).accepted());
    }

    #[test]
    fn distance_agrees_with_oracle_on_small_paths() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let alpha = colouring(&[1, 2, 1, 2]);
        let component =
            crate::oracle::oracle_component(&g, &alpha, &StateSpaceLimits::default()).unwrap();
        for beta in component {
            let d = distance3(&g, &alpha, &beta).unwrap();
            let inst =
                ReconfigInstance::new(g.clone(), 3, alpha.clone(), beta.clone(), 0).unwrap();
            let oracle = oracle_distance(&inst, &StateSpaceLimits::default());
            assert_eq!(d.distance, oracle.distance);
            let witness = witness3(&g, &alpha, &beta).unwrap();
            assert_eq!(Some(witness.len() as u64), d.distance);
            assert!(verify_recolouring(&g, &alpha, &beta, &witness).accepted());
        }
    }

    #[test]
    fn distance_reports_unreachable_shifted_triangle() {
        let res = distance3(&triangle(), &colouring(&[1, 2, 3]), &colouring(&[2, 3, 1])).unwrap();
        assert!(!res.reachable);
        assert_eq!(res.distance, None);
        assert!(matches!(witness3(&triangle(), &colouring(&[1, 2, 3]), &colouring(&[2, 3, 1])),
            Err(Solver3Error::ConditionsViolated(_))));
    }

    #[test]
    fn witness_never_touches_fixed_vertices() {
        // Fixed triangle plus a free pendant structure hanging off nothing:
        // a disjoint path that actually moves.
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap();
        let alpha = colouring(&[1, 2, 3, 1, 2, 1]);
        let beta = colouring(&[1, 2, 3, 2, 1, 2]);
        let witness = witness3(&g, &alpha, &beta).unwrap();
        assert!(verify_recolouring(&g, &alpha, &beta, &witness).accepted());
        let fixed = fixed_vertices(&g, &alpha).unwrap();
        for step in witness.steps() {
            assert!(!fixed.is_fixed(step.vertex));
        }
    }

    #[test]
    fn distance_sums_over_components() {
        // Two singleton vertices, each one recolouring away from target.
        let g = Graph::new(2, &[]).unwrap();
        let res = distance3(&g, &colouring(&[1, 1]), &colouring(&[2, 3])).unwrap();
        assert_eq!(res.distance, Some(2));
        assert_eq!(res.per_component.len(), 2);
        assert_eq!(res.per_component[0].distance, Some(1));
        assert_eq!(res.per_component[1].distance, Some(1));
    }

    #[test]
    fn small_k_frozen_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let inst = ReconfigInstance::new(
            g,
            2,
            Colouring::new(2, vec![1, 2]).unwrap(),
            Colouring::new(2, vec![2, 1]).unwrap(),
            10,
        )
        .unwrap();
        let out = solve_small_k(&inst).unwrap();
        assert!(!out.reachable);
    }

    #[test]
    fn small_k_isolated_vertices_recolour_freely() {
        let g = Graph::new(2, &[]).unwrap();
        let inst = ReconfigInstance::new(
            g.clone(),
            2,
            Colouring::new(2, vec![1, 1]).unwrap(),
            Colouring::new(2, vec![2, 1]).unwrap(),
            10,
        )
        .unwrap();
        let out = solve_small_k(&inst).unwrap();
        assert!(out.reachable);
        assert_eq!(out.distance, Some(1));
        let witness = out.witness.unwrap();
        assert!(verify_recolouring(&g, &inst.alpha, &inst.beta, &witness).accepted());
    }

    #[test]
    fn small_k_single_colour() {
        let g = Graph::new(3, &[]).unwrap();
        let c = Colouring::new(1, vec![1, 1, 1]).unwrap();
        let inst = ReconfigInstance::new(g, 1, c.clone(), c, 0).unwrap();
        let out = solve_small_k(&inst).unwrap();
        assert!(out.reachable);
        assert_eq!(out.distance, Some(0));
    }

    #[test]
    fn small_k_rejects_three_colours() {
        let g = Graph::new(1, &[]).unwrap();
        let c = colouring(&[1]);
        let inst = ReconfigInstance::new(g, 3, c.clone(), c, 0).unwrap();
        assert_eq!(
            solve_small_k(&inst).unwrap_err(),
            Solver3Error::NotSmallPalette(3)
        );
    }

    #[test]
    fn distance3_rejects_wrong_palette() {
        let g = Graph::new(1, &[]).unwrap();
        let c = Colouring::new(4, vec![1]).unwrap();
        assert_eq!(
            distance3(&g, &c, &c).unwrap_err(),
            Solver3Error::WrongPalette(4)
        );
    }
}
