use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::system::{poly_add, CompletionLog, Key, OverlapOutcome, Poly, RuleSystem, UnresolvedOverlap};
use crate::scalar::Scalar;

/// Budgets for [`complete`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionBudget {
    pub max_degree: usize,
    pub max_new_rules: usize,
    pub max_steps: usize,
}

impl Default for CompletionBudget {
    fn default() -> Self {
        CompletionBudget {
            max_degree: 8,
            max_new_rules: 10_000,
            max_steps: super::system::DEFAULT_MAX_STEPS,
        }
    }
}

enum Task {
    /// An ideal element still to be turned into a rule.
    Element(Poly, String, String),
    /// Overlap `lhs_a = u·o`, `lhs_b = o·v` with `|o| = k`.
    Pair(usize, usize, usize),
}

/// Bounded critical-pair completion.
///
/// Starts from the rules of `sys`, interreduces them and resolves every
/// overlap whose word has length at most `max_degree`. Overlaps beyond the
/// bound, or whose reduction exhausts a budget, are logged as unresolved.
/// Every added rule is a reduced combination of existing rules, so soundness
/// is preserved.
pub fn complete(sys: &RuleSystem, budget: CompletionBudget) -> RuleSystem {
    let mut out = RuleSystem::empty(&sys.alphabet, &sys.order).expect("alphabet already validated");
    let mut log = CompletionLog::default();
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    let mut tasks: Vec<Option<Task>> = Vec::new();
    let push = |heap: &mut BinaryHeap<Reverse<(usize, usize)>>, tasks: &mut Vec<Option<Task>>, deg: usize, t: Task| {
        tasks.push(Some(t));
        heap.push(Reverse((deg, tasks.len() - 1)));
    };

    for r in sys.rules.iter().filter(|r| r.alive) {
        let mut p = Poly::new();
        poly_add(&mut p, r.lhs.clone(), Scalar::one());
        for (k, c) in &r.rhs {
            poly_add(&mut p, k.clone(), -c.clone());
        }
        push(&mut heap, &mut tasks, r.lhs.len(), Task::Element(p, r.label.clone(), r.provenance.clone()));
    }

    let mut added = 0usize;
    let mut derived = 0usize;
    while let Some(Reverse((deg, id))) = heap.pop() {
        let task = tasks[id].take().expect("each task runs once");
        let (poly, label, provenance, overlap) = match task {
            Task::Element(p, l, prov) => (p, l, prov, None),
            Task::Pair(a, b, k) => {
                if !out.rules[a].alive || !out.rules[b].alive {
                    continue;
                }
                log.overlaps_examined += 1;
                let ra = &out.rules[a];
                let rb = &out.rules[b];
                let u = &ra.lhs.0[..ra.lhs.len() - k];
                let v = &rb.lhs.0[k..];
                let word = Key::splice(u, &[], &rb.lhs.0);
                if deg > budget.max_degree {
                    log.unresolved.push(UnresolvedOverlap {
                        left: ra.label.clone(),
                        right: rb.label.clone(),
                        word: out.decode_key(&word).to_string(),
                        outcome: OverlapOutcome::DegreeBound,
                    });
                    continue;
                }
                // rhs_a · v − u · rhs_b
                let mut s = Poly::new();
                for (w, c) in &ra.rhs {
                    poly_add(&mut s, Key::splice(&w.0, v, &[]), c.clone());
                }
                for (w, c) in &rb.rhs {
                    poly_add(&mut s, Key::splice(u, &w.0, &[]), -c.clone());
                }
                let names = (ra.label.clone(), rb.label.clone());
                (s, String::new(), "completion".to_string(), Some((names, word)))
            }
        };

        let (reduced, _, partial) = out.reduce_poly(poly, budget.max_steps, None);
        if partial {
            if let Some(((l, r), word)) = &overlap {
                log.unresolved.push(UnresolvedOverlap {
                    left: l.clone(),
                    right: r.clone(),
                    word: out.decode_key(word).to_string(),
                    outcome: OverlapOutcome::StepBudget,
                });
            } else {
                log.unresolved.push(UnresolvedOverlap {
                    left: label.clone(),
                    right: String::new(),
                    word: String::new(),
                    outcome: OverlapOutcome::StepBudget,
                });
            }
            continue;
        }
        if reduced.is_empty() {
            if overlap.is_some() {
                log.resolved += 1;
            }
            continue;
        }
        let is_new = overlap.is_some();
        if is_new && added >= budget.max_new_rules {
            let ((l, r), word) = overlap.expect("checked");
            log.unresolved.push(UnresolvedOverlap {
                left: l,
                right: r,
                word: out.decode_key(&word).to_string(),
                outcome: OverlapOutcome::RuleBudget,
            });
            log.truncated = true;
            continue;
        }
        let label = if is_new {
            derived += 1;
            format!("derived#{derived}")
        } else {
            label
        };
        let rule = RuleSystem::make_rule(&reduced, label, provenance).expect("nonzero");
        if is_new {
            added += 1;
            log.new_rules += 1;
        }
        let lhs = rule.lhs.clone();
        let id = out.push_rule(rule);

        // rules whose left side contains the new one become redundant
        for other in 0..id {
            if !out.rules[other].alive || out.rules[other].lhs.len() < lhs.len() {
                continue;
            }
            if contains(&out.rules[other].lhs.0, &lhs.0) {
                let r = &out.rules[other];
                let mut p = Poly::new();
                poly_add(&mut p, r.lhs.clone(), Scalar::one());
                for (k, c) in &r.rhs {
                    poly_add(&mut p, k.clone(), -c.clone());
                }
                let (l, prov) = (r.label.clone(), r.provenance.clone());
                out.kill_rule(other);
                log.removed_rules += 1;
                push(&mut heap, &mut tasks, p.keys().next_back().map(Key::len).unwrap_or(0), Task::Element(p, l, prov));
            }
        }

        for other in 0..=id {
            if !out.rules[other].alive {
                continue;
            }
            for (a, b) in [(id, other), (other, id)] {
                let la = &out.rules[a].lhs.0;
                let lb = &out.rules[b].lhs.0;
                let max_k = la.len().min(lb.len());
                for k in 1..max_k {
                    if la[la.len() - k..] == lb[..k] {
                        push(&mut heap, &mut tasks, la.len() + lb.len() - k, Task::Pair(a, b, k));
                    }
                }
                if a == b {
                    break;
                }
            }
        }
    }

    interreduce(&mut out, budget.max_steps);
    out.compact();
    out.degree_bound = budget.max_degree;
    out.log = log;
    out
}

fn contains(hay: &[u8], needle: &[u8]) -> bool {
    needle.is_empty() || hay.windows(needle.len()).any(|w| w == needle)
}

/// Brings every right-hand side to normal form.
fn interreduce(sys: &mut RuleSystem, max_steps: usize) {
    for id in 0..sys.rules.len() {
        if !sys.rules[id].alive {
            continue;
        }
        let mut p = Poly::new();
        for (k, c) in &sys.rules[id].rhs {
            poly_add(&mut p, k.clone(), c.clone());
        }
        let (r, _, partial) = sys.reduce_poly(p, max_steps, None);
        if !partial {
            sys.rules[id].rhs = r.into_iter().rev().collect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_presentation, AlgebraSpec, PresentationKind, Relation};
    use crate::rewrite::{orient, orient_relations, WordOrder};
    use crate::superfree::{parse_element, Element, Generator};

    #[test]
    fn sl2_completes_without_unresolved_overlaps() {
        let p = build_presentation(PresentationKind::Chevalley, &AlgebraSpec::deformed(1, 0)).unwrap();
        let s = orient(&p, &WordOrder::default()).unwrap();
        let c = complete(&s, CompletionBudget { max_degree: 4, ..Default::default() });
        assert!(c.log.unresolved.is_empty(), "{:?}", c.log.unresolved);
        assert_eq!(c.log.new_rules, 0);
        assert!(c.log.overlaps_examined > 0);
    }

    #[test]
    fn commuting_pair_has_no_overlaps() {
        let a = Generator::free(0, false);
        let b = Generator::free(1, false);
        let rel = Relation {
            label: "ba".into(),
            element: Element::word(&[b, a]) - Element::word(&[a, b]),
            provenance: "test",
        };
        let s = orient_relations(&[a, b], &[rel], &WordOrder::default()).unwrap();
        let c = complete(&s, CompletionBudget::default());
        assert_eq!(c.rules(), s.rules());
        assert_eq!(c.log.overlaps_examined, 0);
    }

    #[test]
    fn completion_adds_missing_consequences() {
        // x1 x0 → x0, x0 x0 → 1: the overlap x1 x0 x0 forces x1 → 1
        let a = Generator::free(0, false);
        let b = Generator::free(1, false);
        let rels = vec![
            Relation {
                label: "r1".into(),
                element: Element::word(&[b, a]) - Element::word(&[a]),
                provenance: "test",
            },
            Relation {
                label: "r2".into(),
                element: Element::word(&[a, a]) - Element::one(),
                provenance: "test",
            },
        ];
        let s = orient_relations(&[a, b], &rels, &WordOrder::default()).unwrap();
        let c = complete(&s, CompletionBudget::default());
        let x = Element::gen(b) - Element::one();
        assert!(c.reduce(&x, 100).unwrap().normal_form.is_zero());
        assert!(!s.reduce(&x, 100).unwrap().normal_form.is_zero());
    }

    #[test]
    fn completion_is_deterministic() {
        let spec = AlgebraSpec::deformed(1, 1);
        let p = build_presentation(PresentationKind::Cag, &spec).unwrap();
        let s = orient(&p, &WordOrder::default()).unwrap();
        let b = CompletionBudget { max_degree: 3, ..Default::default() };
        let c1 = complete(&s, b);
        let c2 = complete(&s, b);
        assert_eq!(c1.log, c2.log);
        assert_eq!(c1.rules(), c2.rules());
        let t = p.symbol_table();
        let rel = parse_element("br(am1, ap1) - [1/(q-qbar)] (L1 - Lb1)", &t).unwrap();
        assert!(c1.reduce(&rel, 1000).unwrap().normal_form.is_zero());
    }
}
