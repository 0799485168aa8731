use crate::error::{Error, Result};
use crate::matrep::{evaluate, RepAssignment};
use crate::status::{Evidence, Status, Verification};
use crate::superfree::Element;

use super::system::RuleSystem;

/// Symbolic reduction backed by representation oracles.
///
/// Returns `ProvedZero` when `target` reduces to zero modulo `rules`. Otherwise
/// the validated representations in `reps` decide: any nonzero image gives
/// `Failed`, all images zero gives `RepConsistent`, and no usable oracle gives
/// `Inconclusive`. A target that reduces to zero yet has a nonzero image is an
/// incoherence between the rule system and the oracle and is reported as an
/// error.
pub fn verify_relation(
    target: &Element,
    rules: &RuleSystem,
    reps: &[RepAssignment],
    max_steps: usize,
) -> Result<Verification> {
    let red = rules.reduce(target, max_steps)?;
    let oracles: Vec<&RepAssignment> = reps.iter().filter(|r| r.validated).collect();
    if red.normal_form.is_zero() && !red.partial {
        for rep in &oracles {
            if !evaluate(target, rep)?.is_zero() {
                return Err(Error::OracleIncoherence(format!(
                    "{target} reduces to zero but is nonzero in {}",
                    rep.name
                )));
            }
        }
        return Ok(Verification::proved(red.steps));
    }
    let mut v = Verification {
        status: Status::Inconclusive,
        evidence: Evidence::None,
        steps: red.steps,
        residual_terms: red.normal_form.len(),
        partial: red.partial,
    };
    if oracles.is_empty() {
        return Ok(v);
    }
    for rep in &oracles {
        if !evaluate(target, rep)?.is_zero() {
            v.status = Status::Failed;
            v.evidence = Evidence::RepDisproof;
            return Ok(v);
        }
    }
    v.status = Status::RepConsistent;
    v.evidence = if oracles.iter().any(|r| r.faithful) {
        Evidence::FaithfulRep
    } else {
        Evidence::NecessaryRep
    };
    Ok(v)
}

/// Oracle-only check, used where no rule system applies.
pub fn verify_in_reps(target: &Element, reps: &[RepAssignment]) -> Result<Verification> {
    let oracles: Vec<&RepAssignment> = reps.iter().filter(|r| r.validated).collect();
    let mut v = Verification {
        status: Status::Inconclusive,
        evidence: Evidence::None,
        steps: 0,
        residual_terms: target.len(),
        partial: false,
    };
    if oracles.is_empty() {
        return Ok(v);
    }
    for rep in &oracles {
        if !evaluate(target, rep)?.is_zero() {
            v.status = Status::Failed;
            v.evidence = Evidence::RepDisproof;
            return Ok(v);
        }
    }
    v.status = Status::RepConsistent;
    v.evidence = if oracles.iter().any(|r| r.faithful) {
        Evidence::FaithfulRep
    } else {
        Evidence::NecessaryRep
    };
    Ok(v)
}
