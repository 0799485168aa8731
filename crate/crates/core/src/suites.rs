//! Verification suites: families of target relations checked against a
//! completed rule system, with representation oracles as fallback.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrep::{classical_rep, evaluate, oracle_reps, quantum_vector_rep, span_dimension, RepAssignment};
use crate::presentations::{
    build_presentation, cag_to_chevalley, cartan_matrix, chevalley_from_cag, chevalley_to_cag,
    classical_full_relations, AlgebraSpec, ChevalleyKind, Presentation, PresentationKind, Relation, Sign,
};
use crate::rewrite::{complete, orient, verify_in_reps, verify_relation, CompletionBudget, RuleSystem, WordOrder};
use crate::scalar::Scalar;
use crate::status::{Evidence, Status, Verification};
use crate::superfree::identities::{admitted_parities, parameter_grid};
use crate::superfree::{check_bracket_identity, graded_bracket, parse_element, supercommutator, Element, IdentityId};

/// Provenance tags of targets that are not presentation relations.
pub mod tags {
    pub const MIXED_RAISING: &str = "mixed.raising";
    pub const MIXED_LOWERING: &str = "mixed.lowering";
    pub const ADJACENT_BRACKET: &str = "cag.adjacent-bracket";
    pub const CHEVALLEY_FROM_CAG: &str = "translation.chevalley-from-cag";
    pub const CAG_FROM_CHEVALLEY: &str = "translation.cag-from-chevalley";
    pub const SUPERCOMMUTE: &str = "cag.q-supercommute";
    pub const IDENTITY: &str = "bracket-identity";
    pub const REP: &str = "rep.validation";
    pub const SPAN: &str = "span.linear-envelope";
    pub const EXTRA: &str = "user";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SuiteId {
    /// Brackets of Chevalley generators with CAGs.
    MixedBrackets,
    /// Adjacent CAG brackets and the inverse translation.
    AdjacentBrackets,
    /// CAG relations implied by the Chevalley presentation.
    TheoremForward,
    /// Chevalley relations implied by the CAG presentation.
    TheoremBackward,
    /// Full classical triple relations from the restricted ones.
    ClassicalTriples,
    /// q-supercommutation of same-sign CAGs.
    Supercommute,
    Identities,
    RepValidation,
    SpanCheck,
    CartanOnly,
}

impl SuiteId {
    pub const ALL: [SuiteId; 10] = [
        SuiteId::MixedBrackets,
        SuiteId::AdjacentBrackets,
        SuiteId::TheoremForward,
        SuiteId::TheoremBackward,
        SuiteId::ClassicalTriples,
        SuiteId::Supercommute,
        SuiteId::Identities,
        SuiteId::RepValidation,
        SuiteId::SpanCheck,
        SuiteId::CartanOnly,
    ];

    /// Identifier used on the command line and in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::MixedBrackets => "prop2",
            SuiteId::AdjacentBrackets => "prop3",
            SuiteId::TheoremForward => "theorem_fwd",
            SuiteId::TheoremBackward => "theorem_bwd",
            SuiteId::ClassicalTriples => "prop1_classical",
            SuiteId::Supercommute => "eq51",
            SuiteId::Identities => "identities",
            SuiteId::RepValidation => "rep_validation",
            SuiteId::SpanCheck => "span_check",
            SuiteId::CartanOnly => "cartan_only",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s}")))
    }
}

/// A labelled element to certify as zero.
#[derive(Clone, Debug)]
pub struct Target {
    pub label: String,
    pub provenance: &'static str,
    pub element: Element,
}

impl Target {
    fn new(label: String, provenance: &'static str, element: Element) -> Self {
        Target { label, provenance, element }
    }
}

impl From<&Relation> for Target {
    fn from(r: &Relation) -> Self {
        Target::new(r.label.clone(), r.provenance, r.element.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub label: String,
    pub provenance: String,
    pub status: Status,
    /// Human-facing status, distinguishing faithful-rep proofs.
    pub evidence: String,
    pub steps: usize,
    pub residual_terms: usize,
    pub partial: bool,
    pub wall_ms: f64,
}

impl CheckRecord {
    fn new(t: &Target, v: &Verification, wall_ms: f64) -> Self {
        CheckRecord {
            label: t.label.clone(),
            provenance: t.provenance.to_string(),
            status: v.status,
            evidence: v.label().to_string(),
            steps: v.steps,
            residual_terms: v.residual_terms,
            partial: v.partial,
            wall_ms,
        }
    }
}

/// Summary of a completed rule system.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SystemSummary {
    pub name: String,
    pub rules: usize,
    pub new_rules: usize,
    pub removed_rules: usize,
    pub overlaps_examined: usize,
    pub resolved: usize,
    pub unresolved: usize,
    pub truncated: bool,
    pub degree_bound: usize,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: u8,
    pub m: u8,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cartan_matrix: Option<Vec<Vec<i64>>>,
}

impl SuiteReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Fraction of checks with `ProvedZero`; 1 for an empty suite.
    pub fn proved_fraction(&self) -> f64 {
        if self.checks.is_empty() {
            return 1.0;
        }
        self.count(Status::ProvedZero) as f64 / self.checks.len() as f64
    }

    pub fn worst(&self) -> Option<Status> {
        self.checks.iter().map(|c| c.status).max()
    }
}

type Shared<T> = OnceLock<std::result::Result<(T, f64), Error>>;

/// Lazily built rule systems and oracles for one `(n, m)`, shared by suites.
pub struct SuiteContext {
    pub n: u8,
    pub m: u8,
    pub budget: CompletionBudget,
    pub order: WordOrder,
    /// When false only classical oracles are validated by `rep_validation`.
    pub deformed_reps: bool,
    chevalley: Shared<RuleSystem>,
    cag: Shared<RuleSystem>,
    classical_cag: Shared<RuleSystem>,
    reps: Shared<Vec<RepAssignment>>,
    classical: Shared<RepAssignment>,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> std::result::Result<(T, f64), Error> {
    let t = Instant::now();
    let v = f()?;
    Ok((v, t.elapsed().as_secs_f64() * 1e3))
}

fn shared<T>(cell: &Shared<T>, f: impl FnOnce() -> Result<T>) -> Result<(&T, f64)> {
    match cell.get_or_init(|| timed(f)) {
        Ok((v, ms)) => Ok((v, *ms)),
        Err(e) => Err(e.clone()),
    }
}

impl SuiteContext {
    pub fn new(n: u8, m: u8, budget: CompletionBudget) -> Result<Self> {
        AlgebraSpec::new(n, m, true)?;
        Ok(SuiteContext {
            n,
            m,
            budget,
            order: WordOrder::default(),
            deformed_reps: true,
            chevalley: OnceLock::new(),
            cag: OnceLock::new(),
            classical_cag: OnceLock::new(),
            reps: OnceLock::new(),
            classical: OnceLock::new(),
        })
    }

    pub fn deformed(&self) -> AlgebraSpec {
        AlgebraSpec::deformed(self.n, self.m)
    }

    pub fn classical(&self) -> AlgebraSpec {
        AlgebraSpec::classical(self.n, self.m)
    }

    fn completed(&self, p: &Presentation) -> Result<RuleSystem> {
        Ok(complete(&orient(p, &self.order)?, self.budget))
    }

    pub fn chevalley_system(&self) -> Result<(&RuleSystem, f64)> {
        shared(&self.chevalley, || {
            self.completed(&build_presentation(PresentationKind::Chevalley, &self.deformed())?)
        })
    }

    pub fn cag_system(&self) -> Result<(&RuleSystem, f64)> {
        shared(&self.cag, || self.completed(&build_presentation(PresentationKind::Cag, &self.deformed())?))
    }

    pub fn classical_cag_system(&self) -> Result<(&RuleSystem, f64)> {
        shared(&self.classical_cag, || {
            self.completed(&build_presentation(PresentationKind::Cag, &self.classical())?)
        })
    }

    pub fn oracles(&self) -> Result<&[RepAssignment]> {
        shared(&self.reps, || oracle_reps(&self.deformed())).map(|(r, _)| r.as_slice())
    }

    pub fn classical_oracle(&self) -> Result<&RepAssignment> {
        shared(&self.classical, || classical_rep(&self.classical())).map(|(r, _)| r)
    }
}

fn summary(name: &str, sys: &RuleSystem, wall_ms: f64) -> SystemSummary {
    SystemSummary {
        name: name.to_string(),
        rules: sys.len(),
        new_rules: sys.log.new_rules,
        removed_rules: sys.log.removed_rules,
        overlaps_examined: sys.log.overlaps_examined,
        resolved: sys.log.resolved,
        unresolved: sys.log.unresolved.len(),
        truncated: sys.log.truncated,
        degree_bound: sys.degree_bound,
        wall_ms,
    }
}

fn el(g: crate::superfree::Generator) -> Element {
    Element::gen(g)
}

fn sc(k: i64) -> Scalar {
    Scalar::from_int(k)
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// `k_i^{±1}` with the sign given by `positive`.
fn k_power(spec: &AlgebraSpec, i: usize, positive: bool) -> Element {
    el(if positive { spec.k(i) } else { spec.kbar(i) })
}

/// Brackets `⟦e_i, a_j^±⟧` and `⟦f_i, a_j^±⟧` for `i ≥ 2`, over the Chevalley
/// alphabet.
pub fn mixed_targets(spec: &AlgebraSpec) -> Result<Vec<Target>> {
    let r = spec.rank();
    let a = |j: usize, s: Sign| cag_to_chevalley(&el(spec.a(j, s)), spec);
    let mut out = Vec::new();
    for i in 2..=r {
        let e = el(spec.e(i));
        let f = el(spec.f(i));
        let sp = spec.sign(i - 1);
        for j in 1..=r {
            let x = spec.q_i(j).pow(delta(i - 1, j) - delta(i, j))?;
            let t = graded_bracket(&e, &a(j, Sign::Minus)?, &x)?
                + a(i, Sign::Minus)?.scale(&(&spec.q_i(i - 1) * &sc(delta(i - 1, j))));
            out.push(Target::new(format!("raise(e{i},a{j}-)"), tags::MIXED_RAISING, t));
            let t = graded_bracket(&f, &a(j, Sign::Plus)?, &x)? - a(i, Sign::Plus)?.scale(&sc(delta(i - 1, j)));
            out.push(Target::new(format!("lower(f{i},a{j}+)"), tags::MIXED_LOWERING, t));
            let mut t = supercommutator(&e, &a(j, Sign::Plus)?)?;
            if i == j {
                t = t - a(i - 1, Sign::Plus)? * k_power(spec, i, sp < 0);
            }
            out.push(Target::new(format!("raise(e{i},a{j}+)"), tags::MIXED_RAISING, t));
            let mut t = supercommutator(&f, &a(j, Sign::Minus)?)?;
            if i == j {
                let s = spec.sign(i - 1) * spec.sign(i);
                t = t + (k_power(spec, i, sp > 0) * a(i - 1, Sign::Minus)?).scale(&sc(s));
            }
            out.push(Target::new(format!("lower(f{i},a{j}-)"), tags::MIXED_LOWERING, t));
        }
    }
    Ok(out)
}

/// Adjacent CAG brackets and Chevalley generators rebuilt from CAGs, over the
/// Chevalley alphabet.
pub fn adjacent_targets(spec: &AlgebraSpec) -> Result<Vec<Target>> {
    let r = spec.rank();
    let a = |j: usize, s: Sign| el(spec.a(j, s));
    let mut cag = Vec::new();
    for i in 1..=r {
        let t = supercommutator(&a(i, Sign::Minus), &a(i, Sign::Plus))?
            - crate::presentations::q_cartan(spec.l(i), spec.lbar(i));
        cag.push(Target::new(format!("adjacent(a{i}-,a{i}+)"), tags::ADJACENT_BRACKET, t));
        if i < r {
            let s = sc(spec.sign(i));
            let t = supercommutator(&a(i, Sign::Minus), &a(i + 1, Sign::Plus))? + (el(spec.l(i)) * el(spec.f(i + 1))).scale(&s);
            cag.push(Target::new(format!("adjacent(a{i}-,a{}+)", i + 1), tags::ADJACENT_BRACKET, t));
            let t = supercommutator(&a(i + 1, Sign::Minus), &a(i, Sign::Plus))? + (el(spec.e(i + 1)) * el(spec.lbar(i))).scale(&s);
            cag.push(Target::new(format!("adjacent(a{}-,a{i}+)", i + 1), tags::ADJACENT_BRACKET, t));
        }
    }
    for i in 1..=r {
        for (kind, g) in [
            (ChevalleyKind::E, spec.e(i)),
            (ChevalleyKind::F, spec.f(i)),
            (ChevalleyKind::K, spec.k(i)),
            (ChevalleyKind::KBar, spec.kbar(i)),
        ] {
            let t = chevalley_from_cag(kind, i, spec)? - el(g);
            cag.push(Target::new(format!("rebuild({g})"), tags::CHEVALLEY_FROM_CAG, t));
        }
    }
    cag.into_iter()
        .map(|t| Ok(Target::new(t.label, t.provenance, cag_to_chevalley(&t.element, spec)?)))
        .collect()
}

/// Every deformed CAG relation expanded over the Chevalley alphabet.
pub fn theorem_forward_targets(spec: &AlgebraSpec) -> Result<Vec<Target>> {
    build_presentation(PresentationKind::Cag, spec)?
        .relations
        .iter()
        .map(|r| Ok(Target::new(r.label.clone(), r.provenance, cag_to_chevalley(&r.element, spec)?)))
        .collect()
}

/// Every deformed Chevalley relation expanded over the CAG alphabet.
pub fn theorem_backward_targets(spec: &AlgebraSpec) -> Result<Vec<Target>> {
    build_presentation(PresentationKind::Chevalley, spec)?
        .relations
        .iter()
        .map(|r| Ok(Target::new(r.label.clone(), r.provenance, chevalley_to_cag(&r.element, spec)?)))
        .collect()
}

/// `⟦a_i^ξ, a_j^ξ⟧_q = 0` for `i < j`, and `(a_i^ξ)² = 0` for odd `i`.
pub fn supercommute_targets(spec: &AlgebraSpec) -> Result<Vec<Target>> {
    let r = spec.rank();
    let mut out = Vec::new();
    for s in Sign::BOTH {
        let tag = if s == Sign::Plus { "+" } else { "-" };
        for i in 1..=r {
            let ai = el(spec.a(i, s));
            if spec.sign(i) < 0 {
                out.push(Target::new(format!("square(a{i}{tag})"), tags::SUPERCOMMUTE, ai.mul(&ai)));
            }
            for j in i + 1..=r {
                let t = graded_bracket(&ai, &el(spec.a(j, s)), &Scalar::q())?;
                out.push(Target::new(format!("supercommute(a{i}{tag},a{j}{tag})"), tags::SUPERCOMMUTE, t));
            }
        }
    }
    Ok(out)
}

/// Full classical CAG relation set, over the CAG alphabet.
pub fn classical_triple_targets(spec: &AlgebraSpec) -> Vec<Target> {
    classical_full_relations(spec).iter().map(Target::from).collect()
}

fn run_targets(targets: &[Target], sys: Option<&RuleSystem>, reps: &[RepAssignment], max_steps: usize) -> Result<Vec<CheckRecord>> {
    targets
        .par_iter()
        .map(|t| {
            let start = Instant::now();
            let v = match sys {
                Some(s) => verify_relation(&t.element, s, reps, max_steps)?,
                None => verify_in_reps(&t.element, reps)?,
            };
            Ok(CheckRecord::new(t, &v, start.elapsed().as_secs_f64() * 1e3))
        })
        .collect()
}

fn empty_report(ctx: &SuiteContext, id: SuiteId) -> SuiteReport {
    SuiteReport {
        suite: id.as_str().to_string(),
        n: ctx.n,
        m: ctx.m,
        checks: Vec::new(),
        system: None,
        cartan_matrix: None,
    }
}

/// Runs one suite. Statuses encode failures; errors are reserved for broken
/// inputs and oracle incoherence.
pub fn run_suite(ctx: &SuiteContext, id: SuiteId) -> Result<SuiteReport> {
    let mut report = empty_report(ctx, id);
    let spec = ctx.deformed();
    let steps = ctx.budget.max_steps;
    match id {
        SuiteId::MixedBrackets | SuiteId::AdjacentBrackets | SuiteId::TheoremForward => {
            let targets = match id {
                SuiteId::MixedBrackets => mixed_targets(&spec)?,
                SuiteId::AdjacentBrackets => adjacent_targets(&spec)?,
                _ => theorem_forward_targets(&spec)?,
            };
            let (sys, ms) = ctx.chevalley_system()?;
            report.checks = run_targets(&targets, Some(sys), ctx.oracles()?, steps)?;
            report.system = Some(summary("chevalley", sys, ms));
        }
        SuiteId::TheoremBackward | SuiteId::Supercommute => {
            let targets = if id == SuiteId::TheoremBackward {
                theorem_backward_targets(&spec)?
            } else {
                supercommute_targets(&spec)?
            };
            let (sys, ms) = ctx.cag_system()?;
            report.checks = run_targets(&targets, Some(sys), ctx.oracles()?, steps)?;
            report.system = Some(summary("cag", sys, ms));
        }
        SuiteId::ClassicalTriples => {
            let targets = classical_triple_targets(&ctx.classical());
            let (sys, ms) = ctx.classical_cag_system()?;
            let rep = ctx.classical_oracle()?.clone();
            report.checks = run_targets(&targets, Some(sys), &[rep], steps)?;
            report.system = Some(summary("classical-cag", sys, ms));
        }
        SuiteId::Identities => {
            for id in IdentityId::ALL {
                for inst in parameter_grid(id) {
                    for par in admitted_parities(id) {
                        let start = Instant::now();
                        let v = check_bracket_identity(&inst, par)?;
                        let t = Target::new(format!("{inst} parities={}", parity_text(par)), tags::IDENTITY, Element::zero());
                        report.checks.push(CheckRecord::new(&t, &v, start.elapsed().as_secs_f64() * 1e3));
                    }
                }
            }
        }
        SuiteId::RepValidation => {
            report.checks = rep_validation(ctx)?;
        }
        SuiteId::SpanCheck => {
            let start = Instant::now();
            let spec = ctx.classical();
            let rep = ctx.classical_oracle()?;
            let dim = span_dimension(&span_elements(&spec)?, rep)?;
            let d = spec.rank() + 1;
            let expected = d * d - 1;
            let v = Verification {
                status: if dim == expected { Status::RepConsistent } else { Status::Failed },
                evidence: if dim == expected { Evidence::FaithfulRep } else { Evidence::RepDisproof },
                steps: 0,
                residual_terms: expected.abs_diff(dim),
                partial: false,
            };
            let t = Target::new(format!("span dimension {dim} of {expected}"), tags::SPAN, Element::zero());
            report.checks.push(CheckRecord::new(&t, &v, start.elapsed().as_secs_f64() * 1e3));
        }
        SuiteId::CartanOnly => {
            report.cartan_matrix = Some(cartan_matrix(&spec));
        }
    }
    Ok(report)
}

/// Verifies user-supplied expressions, written over the Chevalley and CAG
/// symbols of the deformed algebra. CAG symbols are expanded before reduction
/// modulo the Chevalley rules.
pub fn run_extra(ctx: &SuiteContext, checks: &[(String, String)]) -> Result<SuiteReport> {
    let spec = ctx.deformed();
    let mut table = build_presentation(PresentationKind::Chevalley, &spec)?.symbol_table();
    for g in build_presentation(PresentationKind::Cag, &spec)?.generators {
        table.insert(g);
    }
    let targets = checks
        .iter()
        .map(|(label, text)| {
            let x = parse_element(text, &table)?;
            Ok(Target::new(label.clone(), tags::EXTRA, cag_to_chevalley(&x, &spec)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let (sys, ms) = ctx.chevalley_system()?;
    let mut report = SuiteReport {
        suite: "extra".to_string(),
        n: ctx.n,
        m: ctx.m,
        checks: run_targets(&targets, Some(sys), ctx.oracles()?, ctx.budget.max_steps)?,
        system: None,
        cartan_matrix: None,
    };
    report.system = Some(summary("chevalley", sys, ms));
    Ok(report)
}

fn parity_text(p: [bool; 3]) -> String {
    p.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// CAGs together with all their pairwise brackets.
pub fn span_elements(spec: &AlgebraSpec) -> Result<Vec<Element>> {
    let r = spec.rank();
    let mut gens = Vec::new();
    for i in 1..=r {
        for s in Sign::BOTH {
            gens.push(el(spec.a(i, s)));
        }
    }
    let mut out = gens.clone();
    for x in &gens {
        for y in &gens {
            out.push(supercommutator(x, y)?);
        }
    }
    Ok(out)
}

/// Validation records for the oracles, then every derived relation family
/// evaluated in the vector representation.
fn rep_validation(ctx: &SuiteContext) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let record = |name: &str, rep: &RepAssignment, ms: f64| {
        let v = Verification {
            status: if rep.validated { Status::RepConsistent } else { Status::Failed },
            evidence: match (rep.validated, rep.faithful) {
                (false, _) => Evidence::RepDisproof,
                (true, true) => Evidence::FaithfulRep,
                (true, false) => Evidence::NecessaryRep,
            },
            steps: 0,
            residual_terms: rep.failures.len(),
            partial: false,
        };
        CheckRecord::new(&Target::new(format!("validate {name}"), tags::REP, Element::zero()), &v, ms)
    };

    let start = Instant::now();
    let classical = ctx.classical_oracle()?;
    out.push(record(&classical.name, classical, start.elapsed().as_secs_f64() * 1e3));
    let spec = ctx.classical();
    let mut targets = Vec::new();
    for i in 1..=spec.rank() {
        for s in Sign::BOTH {
            let g = spec.a(i, s);
            let t = cag_to_chevalley(&el(g), &spec)? - el(g);
            targets.push(Target::new(format!("classical round trip {g}"), tags::CAG_FROM_CHEVALLEY, t));
        }
        for (kind, g) in [(ChevalleyKind::E, spec.e(i)), (ChevalleyKind::F, spec.f(i)), (ChevalleyKind::H, spec.h(i))] {
            let t = chevalley_from_cag(kind, i, &spec)? - el(g);
            targets.push(Target::new(format!("classical round trip {g}"), tags::CHEVALLEY_FROM_CAG, t));
        }
    }
    out.extend(run_targets(&targets, None, std::slice::from_ref(classical), 0)?);
    if !ctx.deformed_reps {
        return Ok(out);
    }

    let start = Instant::now();
    let spec = ctx.deformed();
    let vector = quantum_vector_rep(&spec)?;
    out.push(record(&vector.name, &vector, start.elapsed().as_secs_f64() * 1e3));
    for rep in ctx.oracles()? {
        if rep.name != vector.name {
            out.push(record(&rep.name, rep, 0.0));
        }
    }
    let mut targets: Vec<Target> = build_presentation(PresentationKind::Cag, &spec)?
        .relations
        .iter()
        .map(Target::from)
        .collect();
    targets.extend(mixed_targets(&spec)?);
    targets.extend(adjacent_targets(&spec)?);
    targets.extend(supercommute_targets(&spec)?);
    for t in targets.iter_mut() {
        t.label = format!("vector {}", t.label);
    }
    out.extend(run_targets(&targets, None, std::slice::from_ref(&vector), 0)?);
    Ok(out)
}

/// Evaluates a target in a representation; used by checks that only need the
/// matrix.
pub fn is_zero_in(t: &Element, rep: &RepAssignment) -> Result<bool> {
    Ok(evaluate(t, rep)?.is_zero())
}
