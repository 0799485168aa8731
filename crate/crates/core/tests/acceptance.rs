//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! All comparisons are exact; the only pinned numbers are the recorded
//! proved fractions below, which may not regress.

use std::fmt::Write as _;

use uqsl::coherence::{limit_coherence, perturbation_sensitivity, star_closure, LimitOutcome, StarOutcome};
use uqsl::fock::{brute_force_dimension, build_fock, HamiltonianSpec};
use uqsl::matrep::{classical_rep, evaluate, oracle_reps, quantum_vector_rep, span_dimension, RepAssignment};
use uqsl::presentations::{
    build_presentation, cag_to_chevalley, cartan_form_relations, cartan_matrix, chevalley_from_cag,
    classical_full_relations, classical_triples, AlgebraSpec, ChevalleyKind, PresentationKind, Relation, Sign,
};
use uqsl::rewrite::{complete, orient, CompletionBudget, WordOrder};
use uqsl::suites::{
    adjacent_targets, mixed_targets, run_suite, span_elements, supercommute_targets, SuiteContext, SuiteId, Target,
};
use uqsl::superfree::Element;
use uqsl::{Rat, Status};

/// Exact zero tolerance for every matrix and element comparison.
const TOLERANCE: i64 = 0;

/// Recorded `ProvedZero` fractions of the forward theorem suite; no regression allowed.
const RECORDED_FORWARD_FRACTION: [((u8, u8), f64); 2] = [((2, 1), 1.0), ((1, 2), 1.0)];

/// Deformed ranks exercised by the representation and coherence criteria.
const DEFORMED_CASES: [(u8, u8); 5] = [(0, 1), (1, 1), (2, 1), (1, 2), (2, 2)];

/// Fock cases `(n, m, p)`.
const FOCK_CASES: [(u8, u8, u32); 4] = [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 0, 2)];
const ENERGIES_PER_CASE: usize = 3;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, ok: String) -> Outcome {
    if problems.is_empty() {
        Outcome { pass: true, detail: ok }
    } else {
        Outcome { pass: false, detail: problems.join("; ") }
    }
}

fn specs_up_to(rank: u8) -> Vec<(u8, u8)> {
    (1..=rank).flat_map(|r| (0..=r).map(move |n| (n, r - n))).collect()
}

fn nonzero_in(label: &str, x: &Element, rep: &RepAssignment, problems: &mut Vec<String>) {
    match evaluate(x, rep) {
        Ok(mat) if mat.nnz() as i64 <= TOLERANCE => {}
        Ok(_) => problems.push(format!("{}: {label} nonzero", rep.name)),
        Err(e) => problems.push(format!("{}: {label}: {e}", rep.name)),
    }
}

fn cartan_fidelity() -> Outcome {
    #[rustfmt::skip]
    let expected: Vec<Vec<i64>> = vec![
        vec![ 2, -1,  0,  0,  0,  0,  0],
        vec![-1,  2, -1,  0,  0,  0,  0],
        vec![ 0, -1,  0,  1,  0,  0,  0],
        vec![ 0,  0, -1,  2, -1,  0,  0],
        vec![ 0,  0,  0, -1,  2, -1,  0],
        vec![ 0,  0,  0,  0, -1,  2, -1],
        vec![ 0,  0,  0,  0,  0, -1,  2],
    ];
    let mut problems = Vec::new();
    for spec in [AlgebraSpec::deformed(2, 5), AlgebraSpec::classical(2, 5)] {
        let got = cartan_matrix(&spec);
        if got != expected {
            problems.push(format!("deformed={} gives {got:?}", spec.deformed));
        }
    }
    outcome(problems, "(2,5) matrix equal entry for entry".into())
}

fn bracket_identities() -> Outcome {
    let ctx = SuiteContext::new(1, 0, CompletionBudget::default()).expect("spec");
    let r = run_suite(&ctx, SuiteId::Identities).expect("identity suite");
    let problems = r
        .checks
        .iter()
        .filter(|c| c.status != Status::ProvedZero)
        .map(|c| format!("{} {:?}", c.label, c.status))
        .collect();
    outcome(problems, format!("{} identity instances ProvedZero", r.checks.len()))
}

fn classical_faithful_rep() -> Outcome {
    let mut problems = Vec::new();
    let mut checked = 0;
    for (n, m) in specs_up_to(5) {
        let spec = AlgebraSpec::classical(n, m);
        let rep = match classical_rep(&spec) {
            Ok(r) => r,
            Err(e) => {
                problems.push(format!("({n},{m}): {e}"));
                continue;
            }
        };
        if !rep.validated {
            problems.push(format!("({n},{m}) validation failures {:?}", rep.failures));
        }
        let mut rels: Vec<Relation> = Vec::new();
        for kind in [PresentationKind::Chevalley, PresentationKind::Cag] {
            rels.extend(build_presentation(kind, &spec).expect("presentation").relations);
            rels.extend(cartan_form_relations(kind, &spec));
        }
        rels.extend(classical_triples(&spec, false));
        rels.extend(classical_triples(&spec, true));
        rels.extend(classical_full_relations(&spec));
        for r in &rels {
            nonzero_in(&r.label, &r.element, &rep, &mut problems);
        }
        checked += rels.len();
        for i in 1..=spec.rank() {
            for s in Sign::BOTH {
                let g = spec.a(i, s);
                let t = cag_to_chevalley(&Element::gen(g), &spec).expect("translation") - Element::gen(g);
                nonzero_in(&format!("round trip {g}"), &t, &rep, &mut problems);
            }
            for (kind, g) in [(ChevalleyKind::E, spec.e(i)), (ChevalleyKind::F, spec.f(i)), (ChevalleyKind::H, spec.h(i))] {
                let t = chevalley_from_cag(kind, i, &spec).expect("translation") - Element::gen(g);
                nonzero_in(&format!("round trip {g}"), &t, &rep, &mut problems);
            }
            checked += 5;
        }
    }
    outcome(problems, format!("{checked} relations and round trips vanish over {} ranks", specs_up_to(5).len()))
}

fn span_condition() -> Outcome {
    let mut problems = Vec::new();
    for (n, m) in specs_up_to(4) {
        let spec = AlgebraSpec::classical(n, m);
        let rep = classical_rep(&spec).expect("classical rep");
        let dim = span_dimension(&span_elements(&spec).expect("span elements"), &rep).expect("rank");
        let d = spec.rank() + 1;
        if dim != d * d - 1 {
            problems.push(format!("({n},{m}) span {dim}, expected {}", d * d - 1));
        }
    }
    outcome(problems, "span equals (n+m+1)^2 - 1 for n+m <= 4".into())
}

fn vector_rep() -> Outcome {
    let mut problems = Vec::new();
    let mut checked = 0;
    for (n, m) in DEFORMED_CASES {
        let spec = AlgebraSpec::deformed(n, m);
        let rep = match quantum_vector_rep(&spec) {
            Ok(r) => r,
            Err(e) => {
                problems.push(format!("({n},{m}): {e}"));
                continue;
            }
        };
        if !rep.validated {
            problems.push(format!("({n},{m}) vector validation failures {:?}", rep.failures));
        }
        let mut targets: Vec<Target> = build_presentation(PresentationKind::Cag, &spec)
            .expect("presentation")
            .relations
            .iter()
            .map(Target::from)
            .collect();
        targets.extend(mixed_targets(&spec).expect("targets"));
        targets.extend(adjacent_targets(&spec).expect("targets"));
        targets.extend(supercommute_targets(&spec).expect("targets"));
        for t in &targets {
            nonzero_in(&t.label, &t.element, &rep, &mut problems);
        }
        checked += targets.len();
    }
    outcome(problems, format!("{checked} relations vanish in the vector representation"))
}

fn forward_theorem() -> Outcome {
    let mut problems = Vec::new();
    let mut fractions = String::new();
    for (n, m) in [(0, 1), (1, 1), (2, 1), (1, 2)] {
        let ctx = SuiteContext::new(n, m, CompletionBudget::default()).expect("spec");
        let r = match run_suite(&ctx, SuiteId::TheoremForward) {
            Ok(r) => r,
            Err(e) => {
                problems.push(format!("({n},{m}): {e}"));
                continue;
            }
        };
        let frac = r.proved_fraction();
        let _ = write!(fractions, " ({n},{m}) {}/{}", r.count(Status::ProvedZero), r.checks.len());
        let recorded = RECORDED_FORWARD_FRACTION.iter().find(|(k, _)| *k == (n, m)).map(|(_, f)| *f);
        match recorded {
            None if frac < 1.0 => problems.push(format!("({n},{m}) proved fraction {frac}")),
            Some(base) if frac < base => problems.push(format!("({n},{m}) fraction {frac} below recorded {base}")),
            _ => {}
        }
        if r.worst().is_some_and(|w| w > Status::RepConsistent) {
            problems.push(format!("({n},{m}) worst status {:?}", r.worst()));
        }
    }
    outcome(problems, format!("proved:{fractions}"))
}

fn classical_limit() -> Outcome {
    let mut problems = Vec::new();
    let (mut matched, mut skipped) = (0, 0);
    for (n, m) in DEFORMED_CASES {
        for r in limit_coherence(&AlgebraSpec::deformed(n, m)).expect("limit") {
            match r.outcome {
                LimitOutcome::Matched { .. } => matched += 1,
                // L L̄ = 1 has no classical counterpart
                LimitOutcome::Vanishes if r.label.starts_with("inverse") => skipped += 1,
                other => problems.push(format!("({n},{m}) {}: {other:?}", r.label)),
            }
        }
    }
    outcome(problems, format!("{matched} limits matched, {skipped} inverse relations excluded"))
}

fn star() -> Outcome {
    let mut problems = Vec::new();
    let mut total = 0;
    for (n, m) in DEFORMED_CASES {
        for r in star_closure(&AlgebraSpec::deformed(n, m)).expect("star") {
            total += 1;
            if let StarOutcome::Unmatched { image } = r.outcome {
                problems.push(format!("({n},{m}) {} maps to {image}", r.label));
            }
        }
    }
    outcome(problems, format!("{total} relation images lie in the set up to units"))
}

/// Valid energy vectors with entries in `-2..=2`, most nonzero entries first.
fn energy_candidates(spec: &AlgebraSpec) -> Vec<HamiltonianSpec> {
    let r = spec.rank();
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut cur = vec![-2i64; r];
    loop {
        let sum: i64 = cur.iter().enumerate().map(|(k, e)| spec.sign(k + 1) * e).sum();
        if sum == 0 {
            out.push(cur.clone());
        }
        let mut k = 0;
        while k < r && cur[k] == 2 {
            cur[k] = -2;
            k += 1;
        }
        if k == r {
            break;
        }
        cur[k] += 1;
    }
    out.sort_by_key(|v| (v.iter().filter(|e| **e == 0).count(), v.clone()));
    out.into_iter()
        .map(|v| HamiltonianSpec { epsilons: v.into_iter().map(|e| Rat::from_integer(e.into())).collect() })
        .filter(|h| h.validate(spec).is_ok())
        .collect()
}

fn fock() -> Outcome {
    let mut problems = Vec::new();
    let mut notes = Vec::new();
    for (n, m, p) in FOCK_CASES {
        let spec = AlgebraSpec::classical(n, m);
        let cutoff = p + 1;
        let module = match build_fock(&spec, p, cutoff as i64) {
            Ok(f) => f,
            Err(e) => {
                problems.push(format!("({n},{m},{p}): {e}"));
                continue;
            }
        };
        let expected = brute_force_dimension(&spec, p, cutoff);
        if module.dim() != expected {
            problems.push(format!("({n},{m},{p}) dimension {} vs enumeration {expected}", module.dim()));
        }
        match module.supercommutation_check() {
            Ok(s) if s.holds => {}
            Ok(s) => problems.push(format!("({n},{m},{p}) supercommutation {:?}", s.failures)),
            Err(e) => problems.push(format!("({n},{m},{p}) supercommutation: {e}")),
        }
        let energies = energy_candidates(&spec);
        let used = &energies[..energies.len().min(ENERGIES_PER_CASE)];
        if used.len() < ENERGIES_PER_CASE {
            problems.push(format!(
                "({n},{m},{p}) admits only {} valid energy vector(s) under Σ(−1)^θ_i ε_i = 0",
                used.len()
            ));
        }
        for h in used {
            match module.ladder_check(h) {
                Ok(l) if l.holds => {}
                Ok(l) => problems.push(format!("({n},{m},{p}) ladder {:?}: {:?}", l.epsilons, l.failures)),
                Err(e) => problems.push(format!("({n},{m},{p}) ladder: {e}")),
            }
        }
        notes.push(format!("({n},{m},{p}) dim {}", module.dim()));
    }
    outcome(problems, notes.join(", "))
}

fn fault_sensitivity() -> Outcome {
    let mut problems = Vec::new();
    let (mut perturbed, mut fixtures) = (0, 0);
    for (n, m) in [(1, 1), (2, 1), (1, 2)] {
        let spec = AlgebraSpec::deformed(n, m);
        let reps = oracle_reps(&spec).expect("oracles");
        for kind in [PresentationKind::Chevalley, PresentationKind::Cag] {
            let p = build_presentation(kind, &spec).expect("presentation");
            let sys = complete(&orient(&p, &WordOrder::default()).expect("orient"), CompletionBudget::default());
            let recs = perturbation_sensitivity(&p.relations, &reps, Some(&sys)).expect("perturbation");
            fixtures += 1;
            let applicable: Vec<_> = recs.iter().filter(|r| r.perturbation.is_some()).collect();
            if applicable.is_empty() {
                problems.push(format!("({n},{m}) {kind:?}: nothing to perturb"));
            }
            for r in applicable {
                perturbed += 1;
                if !r.detected() {
                    problems.push(format!("({n},{m}) {kind:?} {} undetected", r.label));
                }
            }
        }
    }
    outcome(problems, format!("{perturbed} perturbations over {fixtures} fixtures all detected"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("cartan matrix fidelity", cartan_fidelity),
        ("bracket identities", bracket_identities),
        ("classical faithful representation", classical_faithful_rep),
        ("span condition", span_condition),
        ("quantum vector representation", vector_rep),
        ("symbolic forward theorem", forward_theorem),
        ("classical-limit coherence", classical_limit),
        ("star closure", star),
        ("fock modules", fock),
        ("fault sensitivity", fault_sensitivity),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {name}: {} [{:.1}s]", k + 1, o.detail, start.elapsed().as_secs_f64());
        if !o.pass {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
