use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::order::WordOrder;
use crate::error::{Error, Result};
use crate::presentations::{Presentation, Relation};
use crate::scalar::Scalar;
use crate::superfree::{Element, Generator, Word};

/// A word over the ranked alphabet of a [`RuleSystem`].
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub(crate) struct Key(pub SmallVec<[u8; 16]>);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Key {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn splice(left: &[u8], mid: &[u8], right: &[u8]) -> Key {
        let mut v = SmallVec::with_capacity(left.len() + mid.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(mid);
        v.extend_from_slice(right);
        Key(v)
    }
}

/// Sparse element over ranked words.
pub(crate) type Poly = BTreeMap<Key, Scalar>;

pub(crate) fn poly_add(p: &mut Poly, k: Key, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match p.entry(k) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct IRule {
    pub lhs: Key,
    pub rhs: Vec<(Key, Scalar)>,
    pub label: String,
    pub provenance: String,
    pub alive: bool,
}

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Trie {
    width: usize,
    next: Vec<u32>,
    rule: Vec<u32>,
}

impl Trie {
    fn new(width: usize) -> Self {
        Trie {
            width,
            next: vec![NONE; width],
            rule: vec![NONE],
        }
    }

    fn insert(&mut self, w: &[u8], r: u32) {
        let mut node = 0usize;
        for &s in w {
            let slot = node * self.width + s as usize;
            if self.next[slot] == NONE {
                let id = self.rule.len() as u32;
                self.rule.push(NONE);
                self.next.extend(std::iter::repeat_n(NONE, self.width));
                self.next[slot] = id;
            }
            node = self.next[slot] as usize;
        }
        if self.rule[node] == NONE {
            self.rule[node] = r;
        }
    }

    fn remove(&mut self, w: &[u8], r: u32) {
        let mut node = 0usize;
        for &s in w {
            let n = self.next[node * self.width + s as usize];
            if n == NONE {
                return;
            }
            node = n as usize;
        }
        if self.rule[node] == r {
            self.rule[node] = NONE;
        }
    }

    /// Leftmost occurrence of any rule; at a given start the shortest match wins.
    fn find(&self, w: &[u8]) -> Option<(usize, u32)> {
        for pos in 0..w.len() {
            let mut node = 0usize;
            for &s in &w[pos..] {
                let n = self.next[node * self.width + s as usize];
                if n == NONE {
                    break;
                }
                node = n as usize;
                let r = self.rule[node];
                if r != NONE {
                    return Some((pos, r));
                }
            }
        }
        None
    }
}

/// One oriented rule `lhs → rhs`; every word of `rhs` is smaller than `lhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Element,
    pub label: String,
    pub provenance: String,
}

impl RewriteRule {
    /// `lhs − rhs`, an element of the ideal.
    pub fn as_element(&self) -> Element {
        Element::term(Scalar::one(), self.lhs.clone()) - self.rhs.clone()
    }
}

/// One rewrite step: `coefficient · left · (lhs − rhs) · right` was subtracted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: usize,
    pub rule: String,
    pub position: usize,
    pub left: String,
    pub right: String,
    pub coefficient: Scalar,
    #[serde(skip)]
    pub rule_index: usize,
    #[serde(skip)]
    pub left_word: Word,
    #[serde(skip)]
    pub right_word: Word,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub normal_form: Element,
    pub steps: usize,
    /// The step budget ran out before a normal form was reached.
    pub partial: bool,
    pub trace: Vec<TraceStep>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum OverlapOutcome {
    DegreeBound,
    StepBudget,
    RuleBudget,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnresolvedOverlap {
    pub left: String,
    pub right: String,
    pub word: String,
    pub outcome: OverlapOutcome,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CompletionLog {
    pub overlaps_examined: usize,
    pub resolved: usize,
    pub new_rules: usize,
    pub removed_rules: usize,
    pub unresolved: Vec<UnresolvedOverlap>,
    /// True when completion stopped on the rule budget.
    pub truncated: bool,
}

/// Oriented rules over a fixed alphabet and word order.
#[derive(Clone, Debug)]
pub struct RuleSystem {
    pub(crate) order: WordOrder,
    pub(crate) alphabet: Vec<Generator>,
    pub(crate) index: HashMap<Generator, u8>,
    pub(crate) rules: Vec<IRule>,
    trie: Trie,
    pub degree_bound: usize,
    pub log: CompletionLog,
}

pub const DEFAULT_MAX_STEPS: usize = 100_000;

impl RuleSystem {
    /// An empty system over `generators`.
    pub fn empty(generators: &[Generator], order: &WordOrder) -> Result<Self> {
        let mut alphabet: Vec<Generator> = generators.to_vec();
        alphabet.sort();
        alphabet.dedup();
        for g in &alphabet {
            if order.key(g).is_none() {
                return Err(Error::AlphabetMismatch(format!(
                    "symbol {g} has no place in the word order"
                )));
            }
        }
        alphabet.sort_by(|a, b| order.cmp_symbols(a, b));
        if alphabet.len() > 255 {
            return Err(Error::Precondition("alphabet too large".into()));
        }
        let index = alphabet
            .iter()
            .enumerate()
            .map(|(k, g)| (*g, k as u8))
            .collect();
        Ok(RuleSystem {
            order: order.clone(),
            trie: Trie::new(alphabet.len().max(1)),
            alphabet,
            index,
            rules: Vec::new(),
            degree_bound: 0,
            log: CompletionLog::default(),
        })
    }

    pub fn order(&self) -> &WordOrder {
        &self.order
    }

    pub fn alphabet(&self) -> &[Generator] {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.rules.iter().filter(|r| r.alive).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rules(&self) -> Vec<RewriteRule> {
        self.rules
            .iter()
            .filter(|r| r.alive)
            .map(|r| self.export_rule(r))
            .collect()
    }

    fn export_rule(&self, r: &IRule) -> RewriteRule {
        let mut rhs = Element::zero();
        for (k, c) in &r.rhs {
            rhs.add_term(self.decode_key(k), c.clone());
        }
        RewriteRule {
            lhs: self.decode_key(&r.lhs),
            rhs,
            label: r.label.clone(),
            provenance: r.provenance.clone(),
        }
    }

    pub(crate) fn encode_word(&self, w: &Word) -> Result<Key> {
        let mut k = SmallVec::with_capacity(w.len());
        for g in w.symbols() {
            match self.index.get(g) {
                Some(&r) => k.push(r),
                None => {
                    return Err(Error::AlphabetMismatch(format!(
                        "symbol {g} is not in the rule system's alphabet"
                    )))
                }
            }
        }
        Ok(Key(k))
    }

    pub(crate) fn decode_key(&self, k: &Key) -> Word {
        let gs: SmallVec<[Generator; 8]> = k.0.iter().map(|&r| self.alphabet[r as usize]).collect();
        Word(gs)
    }

    pub(crate) fn encode(&self, x: &Element) -> Result<Poly> {
        let mut p = Poly::new();
        for (w, c) in x.terms() {
            poly_add(&mut p, self.encode_word(w)?, c.clone());
        }
        Ok(p)
    }

    pub(crate) fn decode(&self, p: &Poly) -> Element {
        let mut e = Element::zero();
        for (k, c) in p {
            e.add_term(self.decode_key(k), c.clone());
        }
        e
    }

    /// Turns a nonzero polynomial into a rule led by its maximal word.
    pub(crate) fn make_rule(p: &Poly, label: String, provenance: String) -> Option<IRule> {
        let (lead, c) = p.iter().next_back()?;
        let inv = c.inv().ok()?;
        let minus_inv = -inv;
        let rhs = p
            .iter()
            .rev()
            .skip(1)
            .map(|(k, d)| (k.clone(), d * &minus_inv))
            .collect();
        Some(IRule {
            lhs: lead.clone(),
            rhs,
            label,
            provenance,
            alive: true,
        })
    }

    pub(crate) fn push_rule(&mut self, r: IRule) -> usize {
        let id = self.rules.len();
        self.trie.insert(&r.lhs.0, id as u32);
        self.rules.push(r);
        id
    }

    pub(crate) fn kill_rule(&mut self, id: usize) {
        let lhs = self.rules[id].lhs.0.clone();
        self.trie.remove(&lhs, id as u32);
        self.rules[id].alive = false;
        // another live rule may share the left-hand side
        for (k, r) in self.rules.iter().enumerate() {
            if r.alive && r.lhs == self.rules[id].lhs {
                self.trie.insert(&lhs, k as u32);
                break;
            }
        }
    }

    pub(crate) fn rebuild_trie(&mut self) {
        self.trie = Trie::new(self.alphabet.len().max(1));
        for (k, r) in self.rules.iter().enumerate() {
            if r.alive {
                self.trie.insert(&r.lhs.0, k as u32);
            }
        }
    }

    /// Drops dead rules and renumbers.
    pub(crate) fn compact(&mut self) {
        self.rules.retain(|r| r.alive);
        self.rebuild_trie();
    }

    pub(crate) fn find(&self, w: &Key) -> Option<(usize, usize)> {
        self.trie.find(&w.0).map(|(p, r)| (p, r as usize))
    }

    /// Normal form of `p`; returns `(result, steps, partial)`.
    pub(crate) fn reduce_poly(
        &self,
        mut work: Poly,
        max_steps: usize,
        mut trace: Option<&mut Vec<TraceStep>>,
    ) -> (Poly, usize, bool) {
        let mut out = Poly::new();
        let mut steps = 0usize;
        while let Some((w, c)) = work.pop_last() {
            let Some((pos, rid)) = self.find(&w) else {
                out.insert(w, c);
                continue;
            };
            if steps >= max_steps {
                work.insert(w, c);
                for (k, v) in work {
                    poly_add(&mut out, k, v);
                }
                return (out, steps, true);
            }
            steps += 1;
            let rule = &self.rules[rid];
            let (left, rest) = w.0.split_at(pos);
            let right = &rest[rule.lhs.len()..];
            for (v, d) in &rule.rhs {
                poly_add(&mut work, Key::splice(left, &v.0, right), d * &c);
            }
            if let Some(t) = trace.as_deref_mut() {
                let lw = self.decode_key(&Key(SmallVec::from_slice(left)));
                let rw = self.decode_key(&Key(SmallVec::from_slice(right)));
                t.push(TraceStep {
                    step: steps,
                    rule: rule.label.clone(),
                    position: pos,
                    left: lw.to_string(),
                    right: rw.to_string(),
                    coefficient: c,
                    rule_index: rid,
                    left_word: lw,
                    right_word: rw,
                });
            }
        }
        (out, steps, false)
    }

    pub fn reduce(&self, x: &Element, max_steps: usize) -> Result<Reduction> {
        self.reduce_impl(x, max_steps, false)
    }

    pub fn reduce_traced(&self, x: &Element, max_steps: usize) -> Result<Reduction> {
        self.reduce_impl(x, max_steps, true)
    }

    fn reduce_impl(&self, x: &Element, max_steps: usize, traced: bool) -> Result<Reduction> {
        let p = self.encode(x)?;
        let mut trace = Vec::new();
        let (out, steps, partial) =
            self.reduce_poly(p, max_steps, if traced { Some(&mut trace) } else { None });
        Ok(Reduction {
            normal_form: self.decode(&out),
            steps,
            partial,
            trace,
        })
    }

    /// The rule applied at a trace step, as an element `lhs − rhs`.
    pub fn rule_element(&self, rule_index: usize) -> Element {
        self.export_rule(&self.rules[rule_index]).as_element()
    }

    /// Recomputes `Σ c · left · (lhs − rhs) · right` over a trace.
    pub fn replay(&self, trace: &[TraceStep]) -> Element {
        let mut acc = Element::zero();
        for t in trace {
            let r = self.rule_element(t.rule_index);
            let piece = Element::term(t.coefficient.clone(), t.left_word.clone())
                .mul(&r)
                .mul(&Element::term(Scalar::one(), t.right_word.clone()));
            acc = acc + piece;
        }
        acc
    }
}

/// One rule per relation, each led by its maximal word under `order`.
pub fn orient(pres: &Presentation, order: &WordOrder) -> Result<RuleSystem> {
    orient_relations(&pres.generators, &pres.relations, order)
}

pub fn orient_relations(
    generators: &[Generator],
    relations: &[Relation],
    order: &WordOrder,
) -> Result<RuleSystem> {
    let mut sys = RuleSystem::empty(generators, order)?;
    for rel in relations {
        let p = sys.encode(&rel.element)?;
        let rule = RuleSystem::make_rule(&p, rel.label.clone(), rel.provenance.to_string())
            .ok_or_else(|| Error::Unorientable(rel.label.clone()))?;
        sys.push_rule(rule);
    }
    sys.degree_bound = sys.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_presentation, AlgebraSpec, PresentationKind};
    use crate::superfree::parse_element;

    fn sl2() -> (Presentation, RuleSystem) {
        let p = build_presentation(PresentationKind::Chevalley, &AlgebraSpec::deformed(1, 0)).unwrap();
        let s = orient(&p, &WordOrder::default()).unwrap();
        (p, s)
    }

    #[test]
    fn orientation_examples() {
        let (p, s) = sl2();
        let rules = s.rules();
        let t = p.symbol_table();
        let find = |lhs: &str| {
            let w = parse_element(lhs, &t).unwrap();
            let w = w.max_word().unwrap().0.clone();
            rules.iter().find(|r| r.lhs == w).cloned()
        };
        let r = find("k1 kb1").unwrap();
        assert_eq!(r.rhs, Element::one());
        // default order puts e above k: e k → q^{-2} k e
        let r = find("e1 k1").unwrap();
        assert_eq!(r.rhs, parse_element("[q^-2] k1 e1", &t).unwrap());
        let r = find("e1 f1").unwrap();
        assert_eq!(
            r.rhs,
            parse_element("f1 e1 + [q/(q^2-1)] k1 - [q/(q^2-1)] kb1", &t).unwrap()
        );
        let high = orient(&p, &WordOrder::group_like_high()).unwrap();
        let r = high
            .rules()
            .into_iter()
            .find(|r| r.lhs == parse_element("k1 e1", &t).unwrap().max_word().unwrap().0.clone())
            .unwrap();
        assert_eq!(r.rhs, parse_element("[q^2] e1 k1", &t).unwrap());
    }

    #[test]
    fn reduction_examples() {
        let (p, s) = sl2();
        let t = p.symbol_table();
        let rel = parse_element("e1 f1 - f1 e1 - [1/(q-qbar)] (k1 - kb1)", &t).unwrap();
        assert!(s.reduce(&rel, 100).unwrap().normal_form.is_zero());
        let x = parse_element("k1 kb1 k1", &t).unwrap();
        assert_eq!(s.reduce(&x, 100).unwrap().normal_form, parse_element("k1", &t).unwrap());
    }

    #[test]
    fn zero_relation_is_unorientable() {
        let g = Generator::free(0, false);
        let rel = Relation {
            label: "empty".into(),
            element: Element::zero(),
            provenance: "test",
        };
        assert!(matches!(
            orient_relations(&[g], &[rel], &WordOrder::default()),
            Err(Error::Unorientable(l)) if l == "empty"
        ));
    }

    #[test]
    fn budget_flags_partial() {
        let (p, s) = sl2();
        let t = p.symbol_table();
        let x = parse_element("e1 e1 f1 f1", &t).unwrap();
        let r = s.reduce(&x, 1).unwrap();
        assert!(r.partial);
        let full = s.reduce(&x, 1000).unwrap();
        assert!(!full.partial);
        assert_eq!(s.reduce(&r.normal_form, 1000).unwrap().normal_form, full.normal_form);
    }

    #[test]
    fn trace_replay_reconstructs_difference() {
        let (p, s) = sl2();
        let t = p.symbol_table();
        let x = parse_element("[q] e1 e1 f1 k1 f1 - kb1 e1 k1 + 3 e1 f1", &t).unwrap();
        let r = s.reduce_traced(&x, 1000).unwrap();
        assert_eq!(s.replay(&r.trace), x - r.normal_form);
        let json = serde_json::to_string(&r.trace[0]).unwrap();
        assert!(json.contains("\"rule\"") && json.contains("\"position\"") && json.contains("\"step\""));
    }

    #[test]
    fn alphabet_mismatch() {
        let (_, s) = sl2();
        let stranger = Element::gen(Generator::free(3, false));
        assert!(matches!(s.reduce(&stranger, 10), Err(Error::AlphabetMismatch(_))));
    }
}
