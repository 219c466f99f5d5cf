//! Colourings, problem instances and recolouring sequences.
//!
//! A recolouring sequence is the certificate format shared by every solver:
//! an ordered list of single-vertex colour changes. [`verify_recolouring`]
//! replays one against an instance and accepts exactly when every
//! intermediate colouring is proper and the final colouring is the target.

use thiserror::Error;

use crate::graph::Graph;

/// Colours are `1..=k`.
pub type Colour = u8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColouringError {
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("vertex {vertex} has colour {colour}, outside 1..={k}")]
    ColourOutOfRange {
        vertex: usize,
        colour: Colour,
        k: Colour,
    },
}

/// A total assignment of colours `1..=k` to the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    k: Colour,
    colours: Vec<Colour>,
}

impl Colouring {
    pub fn new(k: Colour, colours: Vec<Colour>) -> Result<Colouring, ColouringError> {
        if k == 0 {
            return Err(ColouringError::EmptyPalette);
        }
        for (vertex, &colour) in colours.iter().enumerate() {
            if colour == 0 || colour > k {
                return Err(ColouringError::ColourOutOfRange { vertex, colour, k });
            }
        }
        Ok(Colouring { k, colours })
    }

    /// The constant colouring `v -> colour`.
    pub fn constant(k: Colour, n: usize, colour: Colour) -> Result<Colouring, ColouringError> {
        Colouring::new(k, vec![colour; n])
    }

    pub fn k(&self) -> Colour {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    /// Copy of this colouring with `v` recoloured.
    pub fn recoloured(&self, v: usize, colour: Colour) -> Colouring {
        assert!(colour >= 1 && colour <= self.k, "colour out of palette");
        let mut next = self.clone();
        next.colours[v] = colour;
        next
    }

    pub(crate) fn set(&mut self, v: usize, colour: Colour) {
        debug_assert!(colour >= 1 && colour <= self.k);
        self.colours[v] = colour;
    }
}

/// True iff no edge of `g` joins two vertices of equal colour.
pub fn is_proper(g: &Graph, c: &Colouring) -> bool {
    find_conflict(g, c).is_none()
}

/// First monochromatic edge `(u, v)` with `u < v`, if any.
pub fn find_conflict(g: &Graph, c: &Colouring) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for &v in g.neighbours(u) {
            if v > u && c.colour(u) == c.colour(v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// One recolouring step: `vertex` takes `colour`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecolourStep {
    pub vertex: usize,
    pub colour: Colour,
}

/// An ordered list of recolouring steps. Steps that would leave a vertex's
/// colour unchanged are never stored; the sequence length is the step count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecolouringSequence {
    steps: Vec<RecolourStep>,
}

impl RecolouringSequence {
    pub fn new(steps: Vec<RecolourStep>) -> RecolouringSequence {
        RecolouringSequence { steps }
    }

    pub fn empty() -> RecolouringSequence {
        RecolouringSequence::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[RecolourStep] {
        &self.steps
    }

    pub(crate) fn push(&mut self, vertex: usize, colour: Colour) {
        self.steps.push(RecolourStep { vertex, colour });
    }

    /// Replay the steps from `start` without any propriety checking.
    pub fn apply_to(&self, start: &Colouring) -> Colouring {
        let mut c = start.clone();
        for step in &self.steps {
            c.set(step.vertex, step.colour);
        }
        c
    }

    /// Vertices touched by at least one step, deduplicated and sorted.
    pub fn touched_vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.steps.iter().map(|s| s.vertex).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

impl FromIterator<(usize, Colour)> for RecolouringSequence {
    fn from_iter<T: IntoIterator<Item = (usize, Colour)>>(iter: T) -> Self {
        RecolouringSequence {
            steps: iter
                .into_iter()
                .map(|(vertex, colour)| RecolourStep { vertex, colour })
                .collect(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("colouring error: {0}")]
    Colouring(#[from] ColouringError),
    #[error("colouring covers {got} vertices, graph has {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("colouring palette is {got}, instance palette is {expected}")]
    PaletteMismatch { got: Colour, expected: Colour },
    #[error("start colouring is not proper: edge {0}-{1} is monochromatic")]
    AlphaImproper(usize, usize),
    #[error("target colouring is not proper: edge {0}-{1} is monochromatic")]
    BetaImproper(usize, usize),
}

/// One reconfiguration problem: may `alpha` reach `beta` in at most `ell`
/// single-vertex recolourings? Both colourings are checked proper here, so
/// downstream code can rely on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigInstance {
    pub graph: Graph,
    pub k: Colour,
    pub alpha: Colouring,
    pub beta: Colouring,
    pub ell: u64,
}

impl ReconfigInstance {
    pub fn new(
        graph: Graph,
        k: Colour,
        alpha: Colouring,
        beta: Colouring,
        ell: u64,
    ) -> Result<ReconfigInstance, InstanceError> {
        for c in [&alpha, &beta] {
            if c.len() != graph.n() {
                return Err(InstanceError::SizeMismatch {
                    got: c.len(),
                    expected: graph.n(),
                });
            }
            if c.k() != k {
                return Err(InstanceError::PaletteMismatch {
                    got: c.k(),
                    expected: k,
                });
            }
        }
        if let Some((u, v)) = find_conflict(&graph, &alpha) {
            return Err(InstanceError::AlphaImproper(u, v));
        }
        if let Some((u, v)) = find_conflict(&graph, &beta) {
            return Err(InstanceError::BetaImproper(u, v));
        }
        Ok(ReconfigInstance {
            graph,
            k,
            alpha,
            beta,
            ell,
        })
    }
}

/// Why a recolouring sequence was rejected. Step indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    VertexOutOfRange { step: usize, vertex: usize },
    ColourOutOfRange { step: usize, colour: Colour },
    /// The step leaves its vertex's colour unchanged; no-ops are not
    /// legitimate steps of a stored sequence.
    NoOpStep { step: usize, vertex: usize },
    ImproperStep { step: usize, vertex: usize, neighbour: usize },
    FinalMismatch { vertex: usize },
}

impl std::fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyFailure::VertexOutOfRange { step, vertex } => {
                write!(f, "step {step}: vertex {vertex} out of range")
            }
            VerifyFailure::ColourOutOfRange { step, colour } => {
                write!(f, "step {step}: colour {colour} outside the palette")
            }
            VerifyFailure::NoOpStep { step, vertex } => {
                write!(f, "step {step}: vertex {vertex} keeps its colour")
            }
            VerifyFailure::ImproperStep {
                step,
                vertex,
                neighbour,
            } => write!(
                f,
                "step {step}: recolouring vertex {vertex} clashes with neighbour {neighbour}"
            ),
            VerifyFailure::FinalMismatch { vertex } => {
                write!(f, "final colouring disagrees with the target on vertex {vertex}")
            }
        }
    }
}

/// Outcome of replaying a recolouring sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub failure: Option<VerifyFailure>,
}

impl VerifyReport {
    pub fn accepted(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failing_step(&self) -> Option<usize> {
        match self.failure {
            Some(VerifyFailure::VertexOutOfRange { step, .. })
            | Some(VerifyFailure::ColourOutOfRange { step, .. })
            | Some(VerifyFailure::NoOpStep { step, .. })
            | Some(VerifyFailure::ImproperStep { step, .. }) => Some(step),
            _ => None,
        }
    }
}

/// Replay `seq` from `alpha`, accepting iff every step recolours exactly one
/// vertex to a palette colour none of its neighbours holds, and the final
/// colouring equals `beta`.
pub fn verify_recolouring(
    g: &Graph,
    alpha: &Colouring,
    beta: &Colouring,
    seq: &RecolouringSequence,
) -> VerifyReport {
    debug_assert!(is_proper(g, alpha));
    debug_assert!(is_proper(g, beta));
    let k = alpha.k();
    let mut current = alpha.clone();
    for (index, step) in seq.steps().iter().enumerate() {
        if step.vertex >= g.n() {
            return reject(VerifyFailure::VertexOutOfRange {
                step: index,
                vertex: step.vertex,
            });
        }
        if step.colour == 0 || step.colour > k {
            return reject(VerifyFailure::ColourOutOfRange {
                step: index,
                colour: step.colour,
            });
        }
        if current.colour(step.vertex) == step.colour {
            return reject(VerifyFailure::NoOpStep {
                step: index,
                vertex: step.vertex,
            });
        }
        if let Some(&neighbour) = g
            .neighbours(step.vertex)
            .iter()
            .find(|&&w| current.colour(w) == step.colour)
        {
            return reject(VerifyFailure::ImproperStep {
                step: index,
                vertex: step.vertex,
                neighbour,
            });
        }
        current.set(step.vertex, step.colour);
    }
    for v in 0..g.n() {
        if current.colour(v) != beta.colour(v) {
            return reject(VerifyFailure::FinalMismatch { vertex: v });
        }
    }
    VerifyReport { failure: None }
}

fn reject(failure: VerifyFailure) -> VerifyReport {
    VerifyReport {
        failure: Some(failure),
    }
}
