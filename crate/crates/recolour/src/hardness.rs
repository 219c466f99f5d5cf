//! Hard-instance generator: compiles a Hitting Set instance into a
//! recolouring instance with at least four colours whose budget can be met
//! exactly when a small hitting set exists.
//!
//! The generated graph pins most colours with a clique: a vertex adjacent
//! to clique vertex `u_i` can never take colour `i`. Two adjacent vertices
//! `s` and `t` must swap colours, which forces `t` through colour 4; that
//! in turn forces, for every set of the family, a chain of recolourings
//! down a binary tree of four-vertex claw gadgets whose leaves attach to
//! element vertices — and a leaf chain can only start where an element
//! vertex of the set was recoloured first. Everything must be undone
//! afterwards, so the budget counts each selected element twice.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::colouring::{Colour, Colouring, ReconfigInstance, RecolouringSequence};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HardnessError {
    #[error("set {index} is empty")]
    EmptySet { index: usize },
    #[error("set {index} contains element {element}, outside 1..={n}")]
    ElementOutOfRange {
        index: usize,
        element: usize,
        n: usize,
    },
    #[error("the set family is empty; nothing to reduce")]
    EmptyFamily,
    #[error("palette must have at least 4 colours, got {0}")]
    PaletteTooSmall(Colour),
    #[error("universe size {0} is not a power of two of at least 2; preprocess the instance first")]
    UniverseNotPadded(usize),
    #[error("subset enumeration would examine {candidates} sets, above the cap of {cap}")]
    EnumerationCapExceeded { candidates: u128, cap: u64 },
    #[error("invalid hitting set: {0}")]
    InvalidHittingSet(String),
}

/// A Hitting Set instance: universe `{1..=n}`, a family of non-empty
/// subsets, and a budget `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    universe_size: usize,
    family: Vec<BTreeSet<usize>>,
    budget: usize,
}

impl HittingSetInstance {
    pub fn new(
        universe_size: usize,
        family: Vec<BTreeSet<usize>>,
        budget: usize,
    ) -> Result<HittingSetInstance, HardnessError> {
        for (index, set) in family.iter().enumerate() {
            if set.is_empty() {
                return Err(HardnessError::EmptySet { index });
            }
            for &element in set {
                if element == 0 || element > universe_size {
                    return Err(HardnessError::ElementOutOfRange {
                        index,
                        element,
                        n: universe_size,
                    });
                }
            }
        }
        Ok(HittingSetInstance {
            universe_size,
            family,
            budget,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn family(&self) -> &[BTreeSet<usize>] {
        &self.family
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// True iff `set` intersects every member of the family.
    pub fn is_hitting_set(&self, set: &BTreeSet<usize>) -> bool {
        self.family.iter().all(|f| !f.is_disjoint(set))
    }
}

/// Result of [`preprocess`]: the normalized instance plus the element
/// renumbering that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preprocessed {
    pub instance: HittingSetInstance,
    /// `kept_elements[i]` is the original element now numbered `i + 1`;
    /// new elements beyond this list are padding dummies in no set.
    pub kept_elements: Vec<usize>,
    /// `representative[j - 1]` is the new number of original element `j`'s
    /// surviving representative.
    pub representative: Vec<usize>,
}

/// Normalize an instance for [`generate`]: merge elements that occur in
/// exactly the same sets (keeping the smallest), then pad the universe
/// with elements occurring in no set until its size is a power of two of
/// at least 2.
pub fn preprocess(hs: &HittingSetInstance) -> Result<Preprocessed, HardnessError> {
    if hs.family.is_empty() {
        return Err(HardnessError::EmptyFamily);
    }
    let mut signature_of = vec![Vec::new(); hs.universe_size];
    for (index, set) in hs.family.iter().enumerate() {
        for &element in set {
            signature_of[element - 1].push(index);
        }
    }
    let mut kept_elements = Vec::new();
    let mut representative = vec![0usize; hs.universe_size];
    let mut seen: Vec<(&Vec<usize>, usize)> = Vec::new();
    for element in 1..=hs.universe_size {
        let signature = &signature_of[element - 1];
        match seen.iter().find(|(sig, _)| *sig == signature) {
            Some(&(_, new_index)) => representative[element - 1] = new_index,
            None => {
                kept_elements.push(element);
                let new_index = kept_elements.len();
                seen.push((signature, new_index));
                representative[element - 1] = new_index;
            }
        }
    }
    let padded = kept_elements.len().next_power_of_two().max(2);
    let family: Vec<BTreeSet<usize>> = hs
        .family
        .iter()
        .map(|set| set.iter().map(|&e| representative[e - 1]).collect())
        .collect();
    let instance = HittingSetInstance::new(padded, family, hs.budget)?;
    Ok(Preprocessed {
        instance,
        kept_elements,
        representative,
    })
}

/// Label of one generated vertex. Set indices are 0-based into the family;
/// element and claw indices follow the construction's 1-based numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    S,
    T,
    /// Clique vertex pinned to this colour.
    Clique(usize),
    /// Independent-set vertex for this universe element.
    Element(usize),
    Claw {
        set: usize,
        level: u32,
        index: usize,
        part: ClawPart,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClawPart {
    A,
    B,
    C,
    D,
}

impl std::fmt::Display for VertexRole {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VertexRole::S => write!(f, "s"),
            VertexRole::T => write!(f, "t"),
            VertexRole::Clique(i) => write!(f, "u{i}"),
            VertexRole::Element(j) => write!(f, "v{j}"),
            VertexRole::Claw {
                set,
                level,
                index,
                part,
            } => {
                let part = match part {
                    ClawPart::A => 'a',
                    ClawPart::B => 'b',
                    ClawPart::C => 'c',
                    ClawPart::D => 'd',
                };
                write!(f, "{part}_{}_{level}_{index}", set + 1)
            }
        }
    }
}

/// A generated recolouring instance plus the bookkeeping needed to inspect
/// it and to build the explicit schedule: vertex roles, the claw-tree depth
/// and the source Hitting Set instance.
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub instance: ReconfigInstance,
    pub roles: Vec<VertexRole>,
    pub r: u32,
    pub hs: HittingSetInstance,
}

struct Layout {
    k: usize,
    n: usize,
}

impl Layout {
    fn s(&self) -> usize {
        0
    }

    fn t(&self) -> usize {
        1
    }

    fn clique(&self, colour: usize) -> usize {
        1 + colour
    }

    fn element(&self, j: usize) -> usize {
        1 + self.k + j
    }

    fn claw_base(&self, set: usize, level: u32, index: usize) -> usize {
        let claw = set * (self.n - 1) + ((1usize << level) - 1) + (index - 1);
        2 + self.k + self.n + 4 * claw
    }

    fn total(&self, sets: usize) -> usize {
        2 + self.k + self.n + 4 * sets * (self.n - 1)
    }
}

impl GadgetInstance {
    fn layout(&self) -> Layout {
        Layout {
            k: self.instance.k as usize,
            n: self.hs.universe_size(),
        }
    }

    pub fn s_vertex(&self) -> usize {
        self.layout().s()
    }

    pub fn t_vertex(&self) -> usize {
        self.layout().t()
    }

    pub fn clique_vertex(&self, colour: usize) -> usize {
        self.layout().clique(colour)
    }

    pub fn element_vertex(&self, j: usize) -> usize {
        self.layout().element(j)
    }

    /// The `(a, b, c, d)` vertices of one claw.
    pub fn claw_vertices(&self, set: usize, level: u32, index: usize) -> (usize, usize, usize, usize) {
        let base = self.layout().claw_base(set, level, index);
        (base, base + 1, base + 2, base + 3)
    }

    /// Colours the clique adjacencies leave available to a vertex.
    pub fn allowed_colours(&self, v: usize) -> BTreeSet<Colour> {
        let k = self.instance.k;
        let mut allowed: BTreeSet<Colour> = (1..=k).collect();
        for i in 1..=k as usize {
            if self.instance.graph.has_edge(v, self.clique_vertex(i)) {
                allowed.remove(&(i as Colour));
            }
        }
        allowed
    }
}

/// Build the recolouring instance for a preprocessed Hitting Set instance.
/// The budget is `3 + 2p + 6 m log2(n)`.
pub fn generate(hs: &HittingSetInstance, k: Colour) -> Result<GadgetInstance, HardnessError> {
    if k < 4 {
        return Err(HardnessError::PaletteTooSmall(k));
    }
    let n = hs.universe_size();
    let m = hs.family.len();
    if m == 0 {
        return Err(HardnessError::EmptyFamily);
    }
    if n < 2 || !n.is_power_of_two() {
        return Err(HardnessError::UniverseNotPadded(n));
    }
    let r = n.trailing_zeros();
    let layout = Layout { k: k as usize, n };
    let total = layout.total(m);

    let mut roles = vec![VertexRole::S; total];
    let mut alpha = vec![0 as Colour; total];
    let mut beta = vec![0 as Colour; total];
    let mut edges: Vec<(usize, usize)> = Vec::new();

    roles[layout.s()] = VertexRole::S;
    roles[layout.t()] = VertexRole::T;
    alpha[layout.s()] = 2;
    beta[layout.s()] = 3;
    alpha[layout.t()] = 3;
    beta[layout.t()] = 2;
    edges.push((layout.s(), layout.t()));

    for i in 1..=k as usize {
        let u = layout.clique(i);
        roles[u] = VertexRole::Clique(i);
        alpha[u] = i as Colour;
        beta[u] = i as Colour;
        for j in i + 1..=k as usize {
            edges.push((u, layout.clique(j)));
        }
    }

    // Restricting a vertex to a colour set means joining it to the clique
    // vertices of every excluded colour.
    let restrict = |edges: &mut Vec<(usize, usize)>, v: usize, allowed: &[usize]| {
        for i in 1..=4usize {
            if !allowed.contains(&i) {
                edges.push((v, layout.clique(i)));
            }
        }
        for i in 5..=k as usize {
            edges.push((v, layout.clique(i)));
        }
    };

    restrict(&mut edges, layout.s(), &[2, 3]);
    restrict(&mut edges, layout.t(), &[2, 3, 4]);

    for j in 1..=n {
        let v = layout.element(j);
        roles[v] = VertexRole::Element(j);
        alpha[v] = 4;
        beta[v] = 4;
        restrict(&mut edges, v, &[1, 4]);
    }

    for (set, members) in hs.family.iter().enumerate() {
        for level in 0..r {
            for index in 1..=(1usize << level) {
                let base = layout.claw_base(set, level, index);
                let (a, b, c, d) = (base, base + 1, base + 2, base + 3);
                for (v, part, colour, allowed) in [
                    (a, ClawPart::A, 2, &[2usize, 4][..]),
                    (b, ClawPart::B, 3, &[3, 4][..]),
                    (c, ClawPart::C, 1, &[1, 2, 3][..]),
                    (d, ClawPart::D, 4, &[1, 4][..]),
                ] {
                    roles[v] = VertexRole::Claw {
                        set,
                        level,
                        index,
                        part,
                    };
                    alpha[v] = colour;
                    beta[v] = colour;
                    restrict(&mut edges, v, allowed);
                }
                edges.push((c, a));
                edges.push((c, b));
                edges.push((c, d));

                if level == 0 {
                    edges.push((d, layout.t()));
                } else if index % 2 == 1 {
                    edges.push((d, layout.claw_base(set, level - 1, index.div_ceil(2))));
                } else {
                    edges.push((d, layout.claw_base(set, level - 1, index / 2) + 1));
                }

                if level == r - 1 {
                    edges.push((a, layout.element(2 * index - 1)));
                    edges.push((b, layout.element(2 * index)));
                }
            }
        }
        // Elements outside the set must not unlock its leaves: forbid
        // colour 4 on the leaf vertex that watches such an element.
        for j in 1..=n {
            if members.contains(&j) {
                continue;
            }
            let leaf = layout.claw_base(set, r - 1, j.div_ceil(2));
            let contact = if j % 2 == 1 { leaf } else { leaf + 1 };
            edges.push((contact, layout.clique(4)));
        }
    }

    let ell = 3 + 2 * hs.budget as u64 + 6 * m as u64 * r as u64;
    let graph = Graph::new(total, &edges).expect("construction uses in-range distinct endpoints");
    let alpha = Colouring::new(k, alpha).expect("all colours assigned in 1..=k");
    let beta = Colouring::new(k, beta).expect("all colours assigned in 1..=k");
    let instance =
        ReconfigInstance::new(graph, k, alpha, beta, ell).expect("construction is proper");
    Ok(GadgetInstance {
        instance,
        roles,
        r,
        hs: hs.clone(),
    })
}

/// Smallest hitting set of size at most the budget, or `None`. Subsets are
/// tried in ascending size and lexicographic order, so the answer is the
/// lexicographically least among minimum ones. `max_candidates` caps the
/// number of subsets examined.
pub fn brute_force_hitting_set(
    hs: &HittingSetInstance,
    max_candidates: u64,
) -> Result<Option<BTreeSet<usize>>, HardnessError> {
    let n = hs.universe_size;
    let limit = hs.budget.min(n);
    let mut candidates: u128 = 0;
    let mut binomial: u128 = 1;
    for size in 0..=limit {
        candidates += binomial;
        binomial = binomial * (n - size) as u128 / (size + 1) as u128;
    }
    if candidates > max_candidates as u128 {
        return Err(HardnessError::EnumerationCapExceeded {
            candidates,
            cap: max_candidates,
        });
    }
    for size in 0..=limit {
        let mut choice: Vec<usize> = (1..=size).collect();
        loop {
            let set: BTreeSet<usize> = choice.iter().copied().collect();
            if hs.is_hitting_set(&set) {
                return Ok(Some(set));
            }
            if !next_combination(&mut choice, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advance `choice` to the next combination of `1..=n` in lexicographic
/// order; false once the last combination has been passed.
fn next_combination(choice: &mut [usize], n: usize) -> bool {
    let size = choice.len();
    let mut at = size;
    while at > 0 {
        at -= 1;
        if choice[at] < n - (size - 1 - at) {
            choice[at] += 1;
            for rest in at + 1..size {
                choice[rest] = choice[rest - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The explicit schedule certifying that a valid hitting set meets the
/// budget: select the hitting set's element vertices, propagate each set's
/// claw tree bottom-up, swap `s`/`t` through colour 4, then undo both
/// propagation and selection in reverse.
pub fn constructive_witness(
    gi: &GadgetInstance,
    hitting_set: &BTreeSet<usize>,
) -> Result<RecolouringSequence, HardnessError> {
    let n = gi.hs.universe_size();
    if let Some(&bad) = hitting_set.iter().find(|&&e| e == 0 || e > n) {
        return Err(HardnessError::InvalidHittingSet(format!(
            "element {bad} is outside the universe 1..={n}"
        )));
    }
    if hitting_set.len() > gi.hs.budget() {
        return Err(HardnessError::InvalidHittingSet(format!(
            "{} elements exceed the budget {}",
            hitting_set.len(),
            gi.hs.budget()
        )));
    }
    if let Some(missed) = gi.hs.family().iter().position(|f| f.is_disjoint(hitting_set)) {
        return Err(HardnessError::InvalidHittingSet(format!(
            "set {missed} is not hit"
        )));
    }

    let mut steps = RecolouringSequence::empty();
    for &j in hitting_set {
        steps.push(gi.element_vertex(j), 1);
    }

    // Bottom-up claw propagation per set; remember each recoloured vertex's
    // original colour so the tail of the schedule can restore it.
    let mut undo: Vec<(usize, Colour)> = Vec::new();
    for (set, members) in gi.hs.family().iter().enumerate() {
        let &chosen = members
            .intersection(hitting_set)
            .next()
            .expect("validated hitting set intersects every set");
        let mut via_a = chosen % 2 == 1;
        let mut index = chosen.div_ceil(2);
        let mut chain = Vec::new();
        for level in (0..gi.r).rev() {
            chain.push((level, index, via_a));
            via_a = index % 2 == 1;
            index = index.div_ceil(2);
        }
        for (level, index, via_a) in chain {
            let (a, b, c, d) = gi.claw_vertices(set, level, index);
            let (entry, entry_colour, centre_colour) =
                if via_a { (a, 2, 2) } else { (b, 3, 3) };
            steps.push(entry, 4);
            undo.push((entry, entry_colour));
            steps.push(c, centre_colour);
            undo.push((c, 1));
            steps.push(d, 1);
            undo.push((d, 4));
        }
    }

    steps.push(gi.t_vertex(), 4);
    steps.push(gi.s_vertex(), 3);
    steps.push(gi.t_vertex(), 2);

    for &(vertex, colour) in undo.iter().rev() {
        steps.push(vertex, colour);
    }
    for &j in hitting_set.iter().rev() {
        steps.push(gi.element_vertex(j), 4);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::verify_recolouring;

    fn hs(n: usize, sets: &[&[usize]], p: usize) -> HittingSetInstance {
        HittingSetInstance::new(
            n,
            sets.iter().map(|s| s.iter().copied().collect()).collect(),
            p,
        )
        .unwrap()
    }

    #[test]
    fn preprocess_pads_to_power_of_two() {
        let pre = preprocess(&hs(3, &[&[1, 2], &[1, 3]], 1)).unwrap();
        assert_eq!(pre.instance.universe_size(), 4);
        assert_eq!(pre.kept_elements, vec![1, 2, 3]);
        assert_eq!(pre.instance.family().len(), 2);
    }

    #[test]
    fn preprocess_merges_equal_signature_elements() {
        let pre = preprocess(&hs(2, &[&[1, 2]], 1)).unwrap();
        assert_eq!(pre.kept_elements, vec![1]);
        assert_eq!(pre.instance.universe_size(), 2);
        assert_eq!(pre.instance.family()[0], BTreeSet::from([1]));
        assert_eq!(pre.representative, vec![1, 1]);
    }

    #[test]
    fn preprocess_keeps_already_padded_instances() {
        let original = hs(4, &[&[1], &[2], &[3], &[4]], 2);
        let pre = preprocess(&original).unwrap();
        assert_eq!(pre.instance, original);
    }

    #[test]
    fn preprocess_rejects_empty_family() {
        let empty = HittingSetInstance::new(3, vec![], 1).unwrap();
        assert_eq!(preprocess(&empty).unwrap_err(), HardnessError::EmptyFamily);
    }

    #[test]
    fn instance_validation() {
        assert!(matches!(
            HittingSetInstance::new(2, vec![BTreeSet::new()], 1),
            Err(HardnessError::EmptySet { index: 0 })
        ));
        assert!(matches!(
            HittingSetInstance::new(2, vec![BTreeSet::from([3])], 1),
            Err(HardnessError::ElementOutOfRange { element: 3, .. })
        ));
    }

    #[test]
    fn generates_sixteen_vertex_instance() {
        let gi = generate(&hs(2, &[&[1], &[2]], 2), 4).unwrap();
        assert_eq!(gi.instance.graph.n(), 16);
        assert_eq!(gi.instance.ell, 19);
        assert_eq!(gi.r, 1);
    }

    #[test]
    fn generated_colourings_differ_exactly_on_s_and_t() {
        let gi = generate(&hs(2, &[&[1], &[2]], 1), 5).unwrap();
        let diff: Vec<usize> = (0..gi.instance.graph.n())
            .filter(|&v| gi.instance.alpha.colour(v) != gi.instance.beta.colour(v))
            .collect();
        assert_eq!(diff, vec![gi.s_vertex(), gi.t_vertex()]);
    }

    #[test]
    fn vertex_count_follows_the_formula() {
        for (n, m, k) in [(2usize, 1usize, 4u8), (4, 2, 4), (4, 3, 6), (8, 2, 5)] {
            let family: Vec<&[usize]> = (0..m).map(|_| &[1usize][..]).collect();
            let gi = generate(&hs(n, &family, 1), k).unwrap();
            assert_eq!(
                gi.instance.graph.n(),
                2 + k as usize + n + 4 * m * (n - 1)
            );
        }
    }

    #[test]
    fn four_element_instance_matches_reference_shape() {
        // Universe {1,2,3,4} with sets {1,2,4} and {2,3,4}: per set the
        // claws are (0,1), (1,1), (1,2); the leaf watching an element
        // outside its set loses colour 4.
        let gi = generate(&hs(4, &[&[1, 2, 4], &[2, 3, 4]], 1), 4).unwrap();
        assert_eq!(gi.instance.graph.n(), 34);
        let claws: Vec<(usize, u32, usize)> = gi
            .roles
            .iter()
            .filter_map(|role| match role {
                VertexRole::Claw {
                    set,
                    level,
                    index,
                    part: ClawPart::A,
                } => Some((*set, *level, *index)),
                _ => None,
            })
            .collect();
        assert_eq!(
            claws,
            vec![(0, 0, 1), (0, 1, 1), (0, 1, 2), (1, 0, 1), (1, 1, 1), (1, 1, 2)]
        );
        // Element 3 is not in the first set: its leaf contact a_{1,1,2}
        // may only keep colour 2.
        let (a, _, _, _) = gi.claw_vertices(0, 1, 2);
        assert_eq!(gi.allowed_colours(a), BTreeSet::from([2]));
        // Element 1 is not in the second set: a_{2,1,1} is pinned too.
        let (a, _, _, _) = gi.claw_vertices(1, 1, 1);
        assert_eq!(gi.allowed_colours(a), BTreeSet::from([2]));
        // Element 4 lies in both sets, so both b-leaves keep {3, 4}.
        let (_, b, _, _) = gi.claw_vertices(0, 1, 2);
        assert_eq!(gi.allowed_colours(b), BTreeSet::from([3, 4]));
    }

    #[test]
    fn rejects_small_palettes_and_unpadded_universes() {
        assert_eq!(
            generate(&hs(2, &[&[1]], 1), 3).unwrap_err(),
            HardnessError::PaletteTooSmall(3)
        );
        assert_eq!(
            generate(&hs(3, &[&[1]], 1), 4).unwrap_err(),
            HardnessError::UniverseNotPadded(3)
        );
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_hitting_set(&hs(2, &[&[1], &[2]], 1), 1 << 20).unwrap(),
            None
        );
        assert_eq!(
            brute_force_hitting_set(&hs(2, &[&[1, 2]], 1), 1 << 20).unwrap(),
            Some(BTreeSet::from([1]))
        );
        assert_eq!(
            brute_force_hitting_set(&hs(1, &[&[1]], 0), 1 << 20).unwrap(),
            None
        );
    }

    #[test]
    fn brute_force_finds_lexicographically_least_minimum() {
        let found = brute_force_hitting_set(&hs(3, &[&[2, 3], &[1, 2]], 2), 1 << 20)
            .unwrap()
            .unwrap();
        assert_eq!(found, BTreeSet::from([2]));
    }

    #[test]
    fn brute_force_respects_cap() {
        let err = brute_force_hitting_set(&hs(40, &[&[1]], 20), 10).unwrap_err();
        assert!(matches!(err, HardnessError::EnumerationCapExceeded { .. }));
    }

    #[test]
    fn constructive_witness_verifies_on_reference_instance() {
        let gi = generate(&hs(4, &[&[1, 2, 4], &[2, 3, 4]], 1), 4).unwrap();
        for selection in [BTreeSet::from([2]), BTreeSet::from([4])] {
            let witness = constructive_witness(&gi, &selection).unwrap();
            assert!(witness.len() as u64 <= gi.instance.ell);
            let report =
                verify_recolouring(&gi.instance.graph, &gi.instance.alpha, &gi.instance.beta, &witness);
            assert!(report.accepted(), "selection {selection:?}: {:?}", report.failure);
        }
    }

    #[test]
    fn constructive_witness_rejects_non_hitting_sets() {
        let gi = generate(&hs(2, &[&[2]], 1), 4).unwrap();
        let err = constructive_witness(&gi, &BTreeSet::from([1])).unwrap_err();
        assert!(matches!(err, HardnessError::InvalidHittingSet(_)));
    }

    #[test]
    fn constructive_witness_rejects_oversized_sets() {
        let gi = generate(&hs(2, &[&[1]], 0), 4).unwrap();
        let err = constructive_witness(&gi, &BTreeSet::from([1])).unwrap_err();
        assert!(matches!(err, HardnessError::InvalidHittingSet(_)));
    }

    #[test]
    fn budget_stays_quadratic_in_the_set_count() {
        // After merging same-signature elements the universe has at most
        // 2^m members, so the generated budget is O(m^2) whenever the
        // hitting budget stays below the set count.
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let m = rng.gen_range(1..=4usize);
            let n0 = rng.gen_range(1..=8usize);
            let p = rng.gen_range(0..m);
            let mut family = Vec::new();
            for _ in 0..m {
                let size = rng.gen_range(1..=n0);
                let mut set = BTreeSet::new();
                while set.len() < size {
                    set.insert(rng.gen_range(1..=n0));
                }
                family.push(set);
            }
            let hs = HittingSetInstance::new(n0, family, p).unwrap();
            let prepared = preprocess(&hs).unwrap();
            let gadget = generate(&prepared.instance, 4).unwrap();
            let m = m as u64;
            assert!(gadget.instance.ell <= 3 + 2 * m + 6 * m * m.max(1));
        }
    }

    #[test]
    fn clique_vertices_can_never_recolour() {
        let gi = generate(&hs(2, &[&[1], &[2]], 1), 4).unwrap();
        let g = &gi.instance.graph;
        for i in 1..=4usize {
            let u = gi.clique_vertex(i);
            let taken: BTreeSet<Colour> = g
                .neighbours(u)
                .iter()
                .map(|&w| gi.instance.alpha.colour(w))
                .collect();
            for colour in 1..=4 as Colour {
                if colour != gi.instance.alpha.colour(u) {
                    assert!(taken.contains(&colour));
                }
            }
        }
    }
}
