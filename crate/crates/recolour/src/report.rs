//! Machine-readable run reports and the solver dispatch behind the
//! command-line front end. The palette size of an instance picks the
//! engine: 1 or 2 colours are solved outright, 3 colours by the exact
//! linear-time solver, anything larger by the bounded search.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::{ReconfigInstance, RecolouringSequence};
use crate::fpt::fpt_solve;
use crate::oracle::{oracle_distance, StateSpaceLimits};
use crate::solver3::{distance3, solve_small_k, witness3, Solver3Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Inconclusive,
}

impl Decision {
    /// Stable contract for scripted consumers: 0 yes, 1 no, 2 inconclusive;
    /// anything above 2 signals an error.
    pub fn exit_code(self) -> i32 {
        match self {
            Decision::Yes => 0,
            Decision::No => 1,
            Decision::Inconclusive => 2,
        }
    }
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Inconclusive => "inconclusive",
        };
        write!(f, "{text}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverKind {
    ExactSmallK,
    Solver3,
    Fpt,
    Oracle,
}

impl std::fmt::Display for SolverKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            SolverKind::ExactSmallK => "exact-small-k",
            SolverKind::Solver3 => "solver3",
            SolverKind::Fpt => "fpt",
            SolverKind::Oracle => "oracle",
        };
        write!(f, "{text}")
    }
}

/// Wall-clock phase timings in milliseconds. Informational only; nothing
/// asserts on them.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub parse_ms: u64,
    pub solve_ms: u64,
}

/// One run's outcome, serializable as versioned JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub decision: Decision,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver: Option<SolverKind>,
    pub timings: Timings,
}

pub const REPORT_SCHEMA: u32 = 1;

impl RunReport {
    pub fn new(decision: Decision, solver: Option<SolverKind>) -> RunReport {
        RunReport {
            schema: REPORT_SCHEMA,
            decision,
            distance: None,
            witness_path: None,
            solver,
            timings: Timings::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForcedSolver {
    ExactSmallK,
    Solver3,
    Fpt,
}

#[derive(Debug, Error)]
pub enum DispatchError {
    #[error("--force-solver {wanted} requires a matching palette, instance has k={k}")]
    ForceMismatch { wanted: &'static str, k: u8 },
    #[error(transparent)]
    Solver(#[from] Solver3Error),
}

/// Decision, distance and optional witness for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub decision: Decision,
    /// Exact shortest distance when the engine computes one, even if it
    /// exceeds the budget.
    pub distance: Option<u64>,
    pub witness: Option<RecolouringSequence>,
    pub solver: SolverKind,
}

/// Dispatch an instance to the engine its palette calls for (or the forced
/// one), answering yes iff the target is reachable within the budget.
/// Witness construction is skipped unless requested.
pub fn dispatch_solve(
    inst: &ReconfigInstance,
    force: Option<ForcedSolver>,
    want_witness: bool,
) -> Result<SolveOutcome, DispatchError> {
    let solver = match force {
        None => {
            if inst.k <= 2 {
                SolverKind::ExactSmallK
            } else if inst.k == 3 {
                SolverKind::Solver3
            } else {
                SolverKind::Fpt
            }
        }
        Some(ForcedSolver::ExactSmallK) => {
            if inst.k > 2 {
                return Err(DispatchError::ForceMismatch {
                    wanted: "exact-small-k",
                    k: inst.k,
                });
            }
            SolverKind::ExactSmallK
        }
        Some(ForcedSolver::Solver3) => {
            if inst.k != 3 {
                return Err(DispatchError::ForceMismatch {
                    wanted: "solver3",
                    k: inst.k,
                });
            }
            SolverKind::Solver3
        }
        // The bounded search is valid for every palette, so cross-checking
        // small instances against it is always allowed.
        Some(ForcedSolver::Fpt) => SolverKind::Fpt,
    };
    match solver {
        SolverKind::ExactSmallK => {
            let out = solve_small_k(inst)?;
            let decision = decision_within_budget(out.distance, inst.ell);
            Ok(SolveOutcome {
                decision,
                distance: out.distance,
                witness: (want_witness && decision == Decision::Yes)
                    .then_some(out.witness)
                    .flatten(),
                solver,
            })
        }
        SolverKind::Solver3 => {
            let res = distance3(&inst.graph, &inst.alpha, &inst.beta)?;
            let decision = decision_within_budget(res.distance, inst.ell);
            let witness = if want_witness && decision == Decision::Yes {
                Some(witness3(&inst.graph, &inst.alpha, &inst.beta)?)
            } else {
                None
            };
            Ok(SolveOutcome {
                decision,
                distance: res.distance,
                witness,
                solver,
            })
        }
        SolverKind::Fpt => {
            let out = fpt_solve(inst);
            Ok(SolveOutcome {
                decision: if out.decision { Decision::Yes } else { Decision::No },
                distance: None,
                witness: if want_witness { out.witness } else { None },
                solver,
            })
        }
        SolverKind::Oracle => unreachable!("oracle runs through dispatch_oracle"),
    }
}

fn decision_within_budget(distance: Option<u64>, ell: u64) -> Decision {
    match distance {
        Some(d) if d <= ell => Decision::Yes,
        _ => Decision::No,
    }
}

/// Run the brute-force oracle against the instance budget.
pub fn dispatch_oracle(inst: &ReconfigInstance, limits: &StateSpaceLimits) -> SolveOutcome {
    let res = oracle_distance(inst, limits);
    let decision = match res.distance {
        Some(d) if d <= inst.ell => Decision::Yes,
        Some(_) => Decision::No,
        None if res.exhausted => Decision::No,
        None => Decision::Inconclusive,
    };
    SolveOutcome {
        decision,
        distance: res.distance,
        witness: res.witness,
        solver: SolverKind::Oracle,
    }
}
