use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome vocabulary for every check the engine performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Status {
    /// The element reduces to zero: it lies in the defining ideal.
    ProvedZero,
    /// Every validated representation sends the element to the zero matrix.
    RepConsistent,
    /// Neither a proof nor a disproof within budget.
    Inconclusive,
    /// A validated representation sends the element to a nonzero matrix.
    Failed,
}

impl Status {
    pub fn is_at_least_rep_consistent(self) -> bool {
        matches!(self, Status::ProvedZero | Status::RepConsistent)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::ProvedZero => "ProvedZero",
            Status::RepConsistent => "RepConsistent",
            Status::Inconclusive => "Inconclusive",
            Status::Failed => "Failed",
        };
        f.write_str(s)
    }
}

/// What backs a status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Evidence {
    /// Reduction to zero modulo the rule system.
    Symbolic,
    /// Zero in a faithful representation (classical Lie-level checks).
    FaithfulRep,
    /// Zero in representations that need not be faithful.
    NecessaryRep,
    /// Nonzero in a validated representation.
    RepDisproof,
    None,
}

impl Evidence {
    pub fn label(self, status: Status) -> &'static str {
        match (status, self) {
            (Status::ProvedZero, _) => "Proved",
            (Status::RepConsistent, Evidence::FaithfulRep) => "Proved (faithful rep)",
            (Status::RepConsistent, _) => "RepConsistent",
            (Status::Failed, _) => "Failed",
            (Status::Inconclusive, _) => "Inconclusive",
        }
    }
}

/// A status together with the work that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub status: Status,
    pub evidence: Evidence,
    /// Rewrite steps spent in reduction.
    pub steps: usize,
    /// Number of terms left after reduction (0 when proved).
    pub residual_terms: usize,
    /// True when the reduction stopped on the step budget.
    pub partial: bool,
}

impl Verification {
    pub fn proved(steps: usize) -> Self {
        Verification {
            status: Status::ProvedZero,
            evidence: Evidence::Symbolic,
            steps,
            residual_terms: 0,
            partial: false,
        }
    }

    pub fn label(&self) -> &'static str {
        self.evidence.label(self.status)
    }
}
