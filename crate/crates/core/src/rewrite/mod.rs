//! Ideal-membership verification: oriented rewrite rules, reduction to normal
//! form with an auditable trace, and bounded critical-pair completion.

mod complete;
mod order;
mod system;
mod verify;

pub use complete::{complete, CompletionBudget};
pub use order::WordOrder;
pub use verify::{verify_in_reps, verify_relation};
pub use system::{
    orient, orient_relations, CompletionLog, OverlapOutcome, Reduction, RewriteRule, RuleSystem, TraceStep,
    UnresolvedOverlap, DEFAULT_MAX_STEPS,
};
