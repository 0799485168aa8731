//! Chevalley and CAG presentations of U_q[sl(n+1|m)] and U[sl(n+1|m)], the
//! Cartan matrix, the parity function and the translation maps between the
//! generator families.
//!
//! Deformed presentations are emitted in rational form: group-like symbols
//! `k_i, k̄_i` (Chevalley) and `L_i, L̄_i` (CAG) replace exponentials of the
//! Cartan elements, and their weight relations become q-commutation rules.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::superfree::{
    graded_bracket, qanticommutator, qbracket, supercommutator, Element, Family, Generator,
    SymbolTable,
};

/// Rank data `(n, m)` of sl(n+1|m) plus the deformation flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub n: u8,
    pub m: u8,
    pub deformed: bool,
}

impl AlgebraSpec {
    pub fn new(n: u8, m: u8, deformed: bool) -> Result<Self> {
        if n as u16 + m as u16 == 0 {
            return Err(Error::UnsupportedSpec);
        }
        if n as u16 + m as u16 > 60 {
            return Err(Error::Precondition("rank too large".into()));
        }
        Ok(AlgebraSpec { n, m, deformed })
    }

    pub fn deformed(n: u8, m: u8) -> Self {
        AlgebraSpec::new(n, m, true).expect("valid spec")
    }

    pub fn classical(n: u8, m: u8) -> Self {
        AlgebraSpec::new(n, m, false).expect("valid spec")
    }

    /// `n + m`, the number of simple roots.
    pub fn rank(&self) -> usize {
        self.n as usize + self.m as usize
    }

    /// Parity θ_i of the basis label `i ∈ [0; n+m]`.
    pub fn theta(&self, i: usize) -> Result<u8> {
        if i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                lo: 0,
                hi: self.rank() as i64,
            });
        }
        Ok((i > self.n as usize) as u8)
    }

    /// θ_{ij} = θ_i + θ_j mod 2.
    pub fn theta_pair(&self, i: usize, j: usize) -> Result<u8> {
        Ok((self.theta(i)? + self.theta(j)?) % 2)
    }

    fn th(&self, i: usize) -> u8 {
        (i > self.n as usize) as u8
    }

    fn check_simple(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                lo: 1,
                hi: self.rank() as i64,
            });
        }
        Ok(())
    }

    /// `q_i = q^{1−2θ_i}`.
    pub fn q_i(&self, i: usize) -> Scalar {
        if self.th(i) == 0 {
            Scalar::q()
        } else {
            Scalar::qbar()
        }
    }

    /// `(−1)^{θ_i}` as an integer.
    pub fn sign(&self, i: usize) -> i64 {
        if self.th(i) == 0 {
            1
        } else {
            -1
        }
    }

    // Generator constructors with the parity fixed by the grading.

    pub fn e(&self, i: usize) -> Generator {
        Generator::new(Family::E, i as u8, self.th(i - 1) != self.th(i))
    }

    pub fn f(&self, i: usize) -> Generator {
        Generator::new(Family::F, i as u8, self.th(i - 1) != self.th(i))
    }

    pub fn k(&self, i: usize) -> Generator {
        Generator::new(Family::K, i as u8, false)
    }

    pub fn kbar(&self, i: usize) -> Generator {
        Generator::new(Family::KBar, i as u8, false)
    }

    pub fn h(&self, i: usize) -> Generator {
        Generator::new(Family::H, i as u8, false)
    }

    pub fn cag_h(&self, i: usize) -> Generator {
        Generator::new(Family::CagH, i as u8, false)
    }

    pub fn l(&self, i: usize) -> Generator {
        Generator::new(Family::L, i as u8, false)
    }

    pub fn lbar(&self, i: usize) -> Generator {
        Generator::new(Family::LBar, i as u8, false)
    }

    pub fn a(&self, i: usize, sign: Sign) -> Generator {
        let fam = match sign {
            Sign::Plus => Family::APlus,
            Sign::Minus => Family::AMinus,
        };
        Generator::new(fam, i as u8, self.th(i) == 1)
    }

    pub fn unit(&self, i: usize, j: usize) -> Generator {
        Generator::unit(i as u8, j as u8, self.th(i) != self.th(j))
    }
}

/// Creation (`Plus`) or annihilation (`Minus`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A root `ε_i − ε_j`. `a_i^-` carries `ε_0 − ε_i` and `a_i^+` carries `ε_i − ε_0`;
/// the root is positive when `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn of_cag(i: usize, sign: Sign) -> Root {
        match sign {
            Sign::Minus => Root { i: 0, j: i },
            Sign::Plus => Root { i, j: 0 },
        }
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }
}

/// `α_ij = (1+(−1)^{θ_{i−1,i}})δ_ij − (−1)^{θ_{i−1,i}}δ_{i,j−1} − δ_{i−1,j}`, 1-based.
pub fn cartan_matrix(spec: &AlgebraSpec) -> Vec<Vec<i64>> {
    let r = spec.rank();
    (1..=r)
        .map(|i| (1..=r).map(|j| cartan_entry(spec, i, j)).collect())
        .collect()
}

pub fn cartan_entry(spec: &AlgebraSpec, i: usize, j: usize) -> i64 {
    let s = if spec.th(i - 1) != spec.th(i) { -1 } else { 1 };
    let mut a = 0;
    if i == j {
        a += 1 + s;
    }
    if i + 1 == j {
        a -= s;
    }
    if i == j + 1 {
        a -= 1;
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PresentationKind {
    Chevalley,
    Cag,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub label: String,
    /// LHS − RHS, asserted to vanish.
    pub element: Element,
    /// Relation family this instance belongs to.
    pub provenance: &'static str,
}

impl Relation {
    fn new(label: String, element: Element, provenance: &'static str) -> Self {
        Relation {
            label,
            element,
            provenance,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub spec: AlgebraSpec,
    pub kind: PresentationKind,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct GeneratorJson {
    pub name: String,
    pub parity: u8,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RelationJson {
    pub label: String,
    pub expression: String,
    pub provenance: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PresentationJson {
    pub n: u8,
    pub m: u8,
    pub deformed: bool,
    pub kind: PresentationKind,
    pub generators: Vec<GeneratorJson>,
    pub relations: Vec<RelationJson>,
}

impl Presentation {
    pub fn symbol_table(&self) -> SymbolTable {
        SymbolTable::new(self.generators.iter().copied())
    }

    pub fn relation(&self, label: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.label == label)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            n: self.spec.n,
            m: self.spec.m,
            deformed: self.spec.deformed,
            kind: self.kind,
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    name: g.name(),
                    parity: g.parity(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    label: r.label.clone(),
                    expression: r.element.to_string(),
                    provenance: r.provenance.to_string(),
                })
                .collect(),
        }
    }

    /// Rebuilds a presentation from its JSON form, re-parsing every expression.
    pub fn from_json(j: &PresentationJson) -> Result<Presentation> {
        let spec = AlgebraSpec::new(j.n, j.m, j.deformed)?;
        let fresh = build_presentation(j.kind, &spec)?;
        let table = fresh.symbol_table();
        let mut relations = Vec::with_capacity(j.relations.len());
        for r in &j.relations {
            let provenance = fresh
                .relations
                .iter()
                .find(|x| x.provenance == r.provenance)
                .map(|x| x.provenance)
                .unwrap_or("external");
            relations.push(Relation::new(
                r.label.clone(),
                crate::superfree::parse_element(&r.expression, &table)?,
                provenance,
            ));
        }
        Ok(Presentation {
            spec,
            kind: j.kind,
            generators: fresh.generators,
            relations,
        })
    }
}

/// Relation family names used as provenance tags.
pub mod tags {
    pub const GROUP_COMMUTE: &str = "group-like.commute";
    pub const GROUP_INVERSE: &str = "group-like.inverse";
    pub const CARTAN_COMMUTE: &str = "cartan.commute";
    pub const CARTAN_WEIGHT: &str = "cartan.weight";
    pub const CARTAN_KAC: &str = "cartan-kac.ef";
    pub const SERRE_COMMUTE: &str = "serre.commute";
    pub const SERRE_ODD_SQUARE: &str = "serre.odd-square";
    pub const SERRE_CUBIC: &str = "serre.cubic";
    pub const SERRE_ADDITIONAL: &str = "serre.additional";
    pub const CAG_WEIGHT: &str = "cag.weight";
    pub const CAG_CARTAN: &str = "cag.cartan";
    pub const CAG_TRIPLE: &str = "cag.triple";
    pub const CAG_INITIAL: &str = "cag.initial";
    pub const CAG_FULL_TRIPLE: &str = "cag.full-triple";
}

fn el(g: Generator) -> Element {
    Element::gen(g)
}

fn sc(k: i64) -> Scalar {
    Scalar::from_int(k)
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// `(k − k̄)/(q − q̄)` for group-like symbols `k`, `k̄`.
pub fn q_cartan(k: Generator, kbar: Generator) -> Element {
    let inv = (Scalar::q() - Scalar::qbar()).inv().expect("q - qbar is nonzero");
    (el(k) - el(kbar)).scale(&inv)
}

pub fn build_presentation(kind: PresentationKind, spec: &AlgebraSpec) -> Result<Presentation> {
    AlgebraSpec::new(spec.n, spec.m, spec.deformed)?;
    let mut p = match (kind, spec.deformed) {
        (PresentationKind::Chevalley, true) => chevalley_deformed(spec),
        (PresentationKind::Chevalley, false) => chevalley_classical(spec),
        (PresentationKind::Cag, true) => cag_deformed(spec),
        (PresentationKind::Cag, false) => cag_classical(spec),
    };
    p.relations.retain(|r| !r.element.is_zero());
    Ok(p)
}

fn group_like_relations(
    rels: &mut Vec<Relation>,
    r: usize,
    g: impl Fn(usize) -> Generator,
    gbar: impl Fn(usize) -> Generator,
) {
    let mut all: Vec<Generator> = Vec::new();
    for i in 1..=r {
        all.push(g(i));
        all.push(gbar(i));
    }
    for (x, a) in all.iter().enumerate() {
        for b in &all[x + 1..] {
            if a.i == b.i {
                continue;
            }
            rels.push(Relation::new(
                format!("commute({a},{b})"),
                el(*a) * el(*b) - el(*b) * el(*a),
                tags::GROUP_COMMUTE,
            ));
        }
    }
    for i in 1..=r {
        let (a, b) = (el(g(i)), el(gbar(i)));
        rels.push(Relation::new(
            format!("inverse({},{})", g(i), gbar(i)),
            a.clone() * b.clone() - Element::one(),
            tags::GROUP_INVERSE,
        ));
        rels.push(Relation::new(
            format!("inverse({},{})", gbar(i), g(i)),
            b * a - Element::one(),
            tags::GROUP_INVERSE,
        ));
    }
}

/// Serre relations on one family (`e` or `f`) of Chevalley symbols.
fn serre_relations(
    rels: &mut Vec<Relation>,
    spec: &AlgebraSpec,
    g: impl Fn(usize) -> Generator,
    name: &str,
    deformed: bool,
) {
    let r = spec.rank();
    let n = spec.n as usize;
    let one = Scalar::one();
    let (q, qb) = if deformed {
        (Scalar::q(), Scalar::qbar())
    } else {
        (one.clone(), one.clone())
    };
    let x = |i: usize| el(g(i));
    for i in 1..=r {
        for j in i + 2..=r {
            rels.push(Relation::new(
                format!("{name}.commute({i},{j})"),
                qbracket(&x(i), &x(j), &one),
                tags::SERRE_COMMUTE,
            ));
        }
    }
    if spec.m >= 1 {
        rels.push(Relation::new(
            format!("{name}.odd-square({})", n + 1),
            x(n + 1) * x(n + 1),
            tags::SERRE_ODD_SQUARE,
        ));
    }
    // cubic relations [x_i,[x_i,x_j]_{q̄}]_q and [x_i,[x_i,x_j]_q]_{q̄}, |i−j| = 1, i ≠ n+1
    for i in 1..=r {
        if i == n + 1 {
            continue;
        }
        for j in [i.wrapping_sub(1), i + 1] {
            if j == 0 || j > r {
                continue;
            }
            let forms: Vec<(Scalar, Scalar)> = if deformed {
                vec![(qb.clone(), q.clone()), (q.clone(), qb.clone())]
            } else {
                vec![(one.clone(), one.clone())]
            };
            for (form, (inner, outer)) in forms.into_iter().enumerate() {
                rels.push(Relation::new(
                    format!("{name}.cubic({i},{j};form {})", form + 1),
                    qbracket(&x(i), &qbracket(&x(i), &x(j), &inner), &outer),
                    tags::SERRE_CUBIC,
                ));
            }
        }
    }
    // additional quartic relations at the odd node
    if n >= 1 && spec.m >= 2 {
        let (a, b, c) = (x(n), x(n + 1), x(n + 2));
        if deformed {
            let f1 = qanticommutator(&b, &qbracket(&qbracket(&a, &b, &q), &c, &qb), &one);
            let f2 = qanticommutator(&b, &qbracket(&qbracket(&a, &b, &qb), &c, &q), &one);
            rels.push(Relation::new(format!("{name}.additional(form 1)"), f1, tags::SERRE_ADDITIONAL));
            rels.push(Relation::new(format!("{name}.additional(form 2)"), f2, tags::SERRE_ADDITIONAL));
        } else {
            let f1 = qanticommutator(&qbracket(&b, &a, &one), &qbracket(&b, &c, &one), &one);
            let f2 = qanticommutator(&b, &qbracket(&qbracket(&a, &b, &one), &c, &one), &one);
            rels.push(Relation::new(format!("{name}.additional(form 1)"), f1, tags::SERRE_ADDITIONAL));
            rels.push(Relation::new(format!("{name}.additional(form 2)"), f2, tags::SERRE_ADDITIONAL));
        }
    }
}

fn chevalley_generators(spec: &AlgebraSpec, cartan: &[fn(&AlgebraSpec, usize) -> Generator]) -> Vec<Generator> {
    let r = spec.rank();
    let mut gens = Vec::new();
    for i in 1..=r {
        gens.push(spec.e(i));
        gens.push(spec.f(i));
        for c in cartan {
            gens.push(c(spec, i));
        }
    }
    gens
}

fn chevalley_deformed(spec: &AlgebraSpec) -> Presentation {
    let r = spec.rank();
    let mut rels = Vec::new();
    group_like_relations(&mut rels, r, |i| spec.k(i), |i| spec.kbar(i));
    for i in 1..=r {
        for j in 1..=r {
            let a = cartan_entry(spec, i, j);
            let (k, kb, e, f) = (el(spec.k(i)), el(spec.kbar(i)), el(spec.e(j)), el(spec.f(j)));
            let qa = Scalar::q_pow(a);
            let qma = Scalar::q_pow(-a);
            rels.push(Relation::new(format!("weight(k{i},e{j})"), qbracket(&k, &e, &qa), tags::CARTAN_WEIGHT));
            rels.push(Relation::new(format!("weight(k{i},f{j})"), qbracket(&k, &f, &qma), tags::CARTAN_WEIGHT));
            rels.push(Relation::new(format!("weight(kb{i},e{j})"), qbracket(&kb, &e, &qma), tags::CARTAN_WEIGHT));
            rels.push(Relation::new(format!("weight(kb{i},f{j})"), qbracket(&kb, &f, &qa), tags::CARTAN_WEIGHT));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            let mut rel = supercommutator(&el(spec.e(i)), &el(spec.f(j))).expect("homogeneous");
            if i == j {
                rel = rel - q_cartan(spec.k(i), spec.kbar(i));
            }
            rels.push(Relation::new(format!("ef(e{i},f{j})"), rel, tags::CARTAN_KAC));
        }
    }
    serre_relations(&mut rels, spec, |i| spec.e(i), "e", true);
    serre_relations(&mut rels, spec, |i| spec.f(i), "f", true);
    Presentation {
        spec: *spec,
        kind: PresentationKind::Chevalley,
        generators: chevalley_generators(spec, &[AlgebraSpec::k, AlgebraSpec::kbar]),
        relations: rels,
    }
}

fn chevalley_classical(spec: &AlgebraSpec) -> Presentation {
    let r = spec.rank();
    let mut rels = Vec::new();
    for i in 1..=r {
        for j in i + 1..=r {
            rels.push(Relation::new(
                format!("commute(h{i},h{j})"),
                qbracket(&el(spec.h(i)), &el(spec.h(j)), &Scalar::one()),
                tags::CARTAN_COMMUTE,
            ));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            let a = sc(cartan_entry(spec, i, j));
            let h = el(spec.h(i));
            let (e, f) = (el(spec.e(j)), el(spec.f(j)));
            rels.push(Relation::new(
                format!("weight(h{i},e{j})"),
                qbracket(&h, &e, &Scalar::one()) - e.scale(&a),
                tags::CARTAN_WEIGHT,
            ));
            rels.push(Relation::new(
                format!("weight(h{i},f{j})"),
                qbracket(&h, &f, &Scalar::one()) + f.scale(&a),
                tags::CARTAN_WEIGHT,
            ));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            let mut rel = supercommutator(&el(spec.e(i)), &el(spec.f(j))).expect("homogeneous");
            if i == j {
                rel = rel - el(spec.h(i));
            }
            rels.push(Relation::new(format!("ef(e{i},f{j})"), rel, tags::CARTAN_KAC));
        }
    }
    serre_relations(&mut rels, spec, |i| spec.e(i), "e", false);
    serre_relations(&mut rels, spec, |i| spec.f(i), "f", false);
    Presentation {
        spec: *spec,
        kind: PresentationKind::Chevalley,
        generators: chevalley_generators(spec, &[AlgebraSpec::h]),
        relations: rels,
    }
}

fn cag_generators(spec: &AlgebraSpec, group_like: bool) -> Vec<Generator> {
    let mut gens = Vec::new();
    for i in 1..=spec.rank() {
        gens.push(spec.a(i, Sign::Minus));
        gens.push(spec.a(i, Sign::Plus));
        if group_like {
            gens.push(spec.l(i));
            gens.push(spec.lbar(i));
        }
    }
    gens
}

/// `⟦a_1^ξ, a_2^ξ⟧_x = 0` and `⟦a_1^ξ, a_1^ξ⟧ = 0`.
fn cag_initial(rels: &mut Vec<Relation>, spec: &AlgebraSpec, x: &Scalar) {
    for s in Sign::BOTH {
        let a1 = el(spec.a(1, s));
        if spec.rank() >= 2 {
            let a2 = el(spec.a(2, s));
            rels.push(Relation::new(
                format!("initial(a1{},a2{})", sgn(s), sgn(s)),
                graded_bracket(&a1, &a2, x).expect("homogeneous"),
                tags::CAG_INITIAL,
            ));
        }
        rels.push(Relation::new(
            format!("initial(a1{},a1{})", sgn(s), sgn(s)),
            supercommutator(&a1, &a1).expect("homogeneous"),
            tags::CAG_INITIAL,
        ));
    }
}

fn sgn(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

/// Deformed triple relation for `(ξ, η, i, k)`:
/// `⟦⟦a_i^η, a_{i+ξ}^{−η}⟧, a_k^η⟧_{q^{ξ(1+(−1)^{θ_i}δ_ik)}} − η^{θ_k}δ_{k,i+ξ}L_k^{−ξη}a_i^η`.
pub fn cag_triple_relation(spec: &AlgebraSpec, xi: Sign, eta: Sign, i: usize, k: usize) -> Option<Relation> {
    let j = i as i64 + xi.value();
    if j < 1 || j > spec.rank() as i64 {
        return None;
    }
    let j = j as usize;
    let inner = supercommutator(&el(spec.a(i, eta)), &el(spec.a(j, eta.flip()))).expect("homogeneous");
    let expo = xi.value() * (1 + spec.sign(i) * delta(i, k));
    let mut rel = graded_bracket(&inner, &el(spec.a(k, eta)), &Scalar::q_pow(expo)).expect("homogeneous");
    if k == j {
        let c = if eta == Sign::Minus && spec.th(k) == 1 { -1 } else { 1 };
        let lk = if -xi.value() * eta.value() > 0 { spec.l(k) } else { spec.lbar(k) };
        rel = rel - (el(lk) * el(spec.a(i, eta))).scale(&sc(c));
    }
    Some(Relation::new(
        format!("triple(xi{},eta{},i={i},k={k})", sgn(xi), sgn(eta)),
        rel,
        tags::CAG_TRIPLE,
    ))
}

fn cag_deformed(spec: &AlgebraSpec) -> Presentation {
    let r = spec.rank();
    let mut rels = Vec::new();
    group_like_relations(&mut rels, r, |i| spec.l(i), |i| spec.lbar(i));
    for i in 1..=r {
        for j in 1..=r {
            for s in Sign::BOTH {
                // L_i a_j^± = q^{∓(1+(−1)^{θ_i}δ_ij)} a_j^± L_i
                let w = 1 + spec.sign(i) * delta(i, j);
                let e = -s.value() * w;
                let a = el(spec.a(j, s));
                rels.push(Relation::new(
                    format!("weight(L{i},a{j}{})", sgn(s)),
                    qbracket(&el(spec.l(i)), &a, &Scalar::q_pow(e)),
                    tags::CAG_WEIGHT,
                ));
                rels.push(Relation::new(
                    format!("weight(Lb{i},a{j}{})", sgn(s)),
                    qbracket(&el(spec.lbar(i)), &a, &Scalar::q_pow(-e)),
                    tags::CAG_WEIGHT,
                ));
            }
        }
    }
    for i in 1..=r {
        let rel = supercommutator(&el(spec.a(i, Sign::Minus)), &el(spec.a(i, Sign::Plus))).expect("homogeneous")
            - q_cartan(spec.l(i), spec.lbar(i));
        rels.push(Relation::new(format!("cartan(a{i}-,a{i}+)"), rel, tags::CAG_CARTAN));
    }
    for xi in Sign::BOTH {
        for eta in Sign::BOTH {
            for i in 1..=r {
                for k in 1..=r {
                    if let Some(rel) = cag_triple_relation(spec, xi, eta, i, k) {
                        rels.push(rel);
                    }
                }
            }
        }
    }
    cag_initial(&mut rels, spec, &Scalar::q());
    Presentation {
        spec: *spec,
        kind: PresentationKind::Cag,
        generators: cag_generators(spec, true),
        relations: rels,
    }
}

/// Classical triple relations; `restricted` keeps only `|i − j| ≤ 1`.
pub fn classical_triples(spec: &AlgebraSpec, restricted: bool) -> Vec<Relation> {
    let r = spec.rank();
    let mut rels = Vec::new();
    let a = |i: usize, s: Sign| el(spec.a(i, s));
    for i in 1..=r {
        for j in 1..=r {
            if restricted && i.abs_diff(j) > 1 {
                continue;
            }
            let inner = supercommutator(&a(i, Sign::Plus), &a(j, Sign::Minus)).expect("homogeneous");
            for k in 1..=r {
                let plus = supercommutator(&inner, &a(k, Sign::Plus)).expect("homogeneous")
                    - a(i, Sign::Plus).scale(&sc(delta(j, k)))
                    - a(k, Sign::Plus).scale(&sc(spec.sign(i) * delta(i, j)));
                rels.push(Relation::new(
                    format!("triple+(i={i},j={j},k={k})"),
                    plus,
                    if restricted { tags::CAG_TRIPLE } else { tags::CAG_FULL_TRIPLE },
                ));
                let s_ijk = if (spec.th(i) + spec.th(j)) % 2 == 1 && spec.th(k) == 1 { -1 } else { 1 };
                let minus = supercommutator(&inner, &a(k, Sign::Minus)).expect("homogeneous")
                    + a(j, Sign::Minus).scale(&sc(s_ijk * delta(i, k)))
                    + a(k, Sign::Minus).scale(&sc(spec.sign(i) * delta(i, j)));
                rels.push(Relation::new(
                    format!("triple-(i={i},j={j},k={k})"),
                    minus,
                    if restricted { tags::CAG_TRIPLE } else { tags::CAG_FULL_TRIPLE },
                ));
            }
        }
    }
    rels
}

/// The full classical relation set: `⟦a_i^ξ, a_j^ξ⟧ = 0` for all `i ≤ j`
/// plus every triple relation.
pub fn classical_full_relations(spec: &AlgebraSpec) -> Vec<Relation> {
    let r = spec.rank();
    let mut rels = Vec::new();
    for s in Sign::BOTH {
        for i in 1..=r {
            for j in i..=r {
                let rel = supercommutator(&el(spec.a(i, s)), &el(spec.a(j, s))).expect("homogeneous");
                if !rel.is_zero() {
                    rels.push(Relation::new(
                        format!("same-sign(a{i}{},a{j}{})", sgn(s), sgn(s)),
                        rel,
                        tags::CAG_FULL_TRIPLE,
                    ));
                }
            }
        }
    }
    rels.extend(classical_triples(spec, false));
    rels
}

fn cag_classical(spec: &AlgebraSpec) -> Presentation {
    let mut rels = Vec::new();
    cag_initial(&mut rels, spec, &Scalar::one());
    rels.extend(classical_triples(spec, true));
    Presentation {
        spec: *spec,
        kind: PresentationKind::Cag,
        generators: cag_generators(spec, false),
        relations: rels,
    }
}

/// Relations involving the Cartan elements `h_i` (Chevalley) or `H_i` (CAG) that
/// the rational form leaves out; only checked in matrix representations.
pub fn cartan_form_relations(kind: PresentationKind, spec: &AlgebraSpec) -> Vec<Relation> {
    let r = spec.rank();
    let one = Scalar::one();
    let mut rels = Vec::new();
    match kind {
        PresentationKind::Chevalley => {
            for i in 1..=r {
                for j in i + 1..=r {
                    rels.push(Relation::new(
                        format!("commute(h{i},h{j})"),
                        qbracket(&el(spec.h(i)), &el(spec.h(j)), &one),
                        tags::CARTAN_COMMUTE,
                    ));
                }
                for j in 1..=r {
                    let a = sc(cartan_entry(spec, i, j));
                    let (e, f) = (el(spec.e(j)), el(spec.f(j)));
                    rels.push(Relation::new(
                        format!("weight(h{i},e{j})"),
                        qbracket(&el(spec.h(i)), &e, &one) - e.scale(&a),
                        tags::CARTAN_WEIGHT,
                    ));
                    rels.push(Relation::new(
                        format!("weight(h{i},f{j})"),
                        qbracket(&el(spec.h(i)), &f, &one) + f.scale(&a),
                        tags::CARTAN_WEIGHT,
                    ));
                }
            }
        }
        PresentationKind::Cag => {
            for i in 1..=r {
                for j in i + 1..=r {
                    rels.push(Relation::new(
                        format!("commute(H{i},H{j})"),
                        qbracket(&el(spec.cag_h(i)), &el(spec.cag_h(j)), &one),
                        tags::CARTAN_COMMUTE,
                    ));
                }
                for j in 1..=r {
                    for s in Sign::BOTH {
                        let w = sc(-s.value() * (1 + spec.sign(i) * delta(i, j)));
                        let a = el(spec.a(j, s));
                        rels.push(Relation::new(
                            format!("weight(H{i},a{j}{})", sgn(s)),
                            qbracket(&el(spec.cag_h(i)), &a, &one) - a.scale(&w),
                            tags::CAG_WEIGHT,
                        ));
                    }
                }
            }
        }
    }
    rels
}

// ---------------------------------------------------------------------------
// Translation maps

/// `a_i^±` as a nested bracket of Chevalley generators. Deformed:
/// `a_i^- = [a_{i−1}^-, e_i]_{q̄_{i−1}}`, `a_i^+ = [f_i, a_{i−1}^+]_{q_{i−1}}`;
/// classical: the same with all parameters 1.
pub fn cag_from_chevalley(i: usize, sign: Sign, spec: &AlgebraSpec) -> Result<Element> {
    spec.check_simple(i)?;
    let mut acc = match sign {
        Sign::Minus => el(spec.e(1)),
        Sign::Plus => el(spec.f(1)),
    };
    for j in 2..=i {
        let x = if spec.deformed { spec.q_i(j - 1) } else { Scalar::one() };
        acc = match sign {
            Sign::Minus => qbracket(&acc, &el(spec.e(j)), &x.bar()),
            Sign::Plus => qbracket(&el(spec.f(j)), &acc, &x),
        };
    }
    Ok(acc)
}

/// `L_i` (or `L̄_i` when `inverse`) as the group-like product
/// `k_1 k_2^{(−1)^{θ_1}} ⋯ k_i^{(−1)^{θ_{i−1}}}`.
pub fn l_from_chevalley(i: usize, inverse: bool, spec: &AlgebraSpec) -> Result<Element> {
    spec.check_simple(i)?;
    let mut acc = Element::one();
    for j in 1..=i {
        let positive = (j == 1 || spec.th(j - 1) == 0) != inverse;
        let g = if positive { spec.k(j) } else { spec.kbar(j) };
        acc = acc * el(g);
    }
    Ok(acc)
}

/// `H_i = h_1 + (−1)^{θ_1}h_2 + ⋯ + (−1)^{θ_{i−1}}h_i`.
pub fn cag_h_from_chevalley(i: usize, spec: &AlgebraSpec) -> Result<Element> {
    spec.check_simple(i)?;
    let mut acc = el(spec.h(1));
    for j in 2..=i {
        acc = acc + el(spec.h(j)).scale(&sc(spec.sign(j - 1)));
    }
    Ok(acc)
}

/// Substitution sending CAG symbols to their Chevalley expansions.
pub fn expand_cag_symbol(g: &Generator, spec: &AlgebraSpec) -> Result<Element> {
    let i = g.i as usize;
    match g.family {
        Family::APlus => cag_from_chevalley(i, Sign::Plus, spec),
        Family::AMinus => cag_from_chevalley(i, Sign::Minus, spec),
        Family::L => l_from_chevalley(i, false, spec),
        Family::LBar => l_from_chevalley(i, true, spec),
        Family::CagH => cag_h_from_chevalley(i, spec),
        _ => Ok(el(*g)),
    }
}

/// Rewrites an element over CAG symbols into Chevalley symbols.
pub fn cag_to_chevalley(x: &Element, spec: &AlgebraSpec) -> Result<Element> {
    x.substitute(&|g| expand_cag_symbol(g, spec))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChevalleyKind {
    E,
    F,
    H,
    K,
    KBar,
}

/// Chevalley generators in terms of CAGs. Deformed:
/// `e_{i+1} = −(−1)^{θ_i}⟦a_{i+1}^-, a_i^+⟧ L_i`,
/// `f_{i+1} = −(−1)^{θ_i} L̄_i ⟦a_i^-, a_{i+1}^+⟧`, `h_i = (−1)^{θ_{i−1}}(H_i − H_{i−1})`
/// and `k_i = q^{h_i}`. Classical: `ê_i = ⟦â_{i−1}^+, â_i^-⟧`, `f̂_i = ⟦â_i^+, â_{i−1}^-⟧`,
/// `ĥ_i = (−1)^{θ_{i−1}}(⟦â_i^-,â_i^+⟧ − ⟦â_{i−1}^-,â_{i−1}^+⟧)`.
pub fn chevalley_from_cag(kind: ChevalleyKind, i: usize, spec: &AlgebraSpec) -> Result<Element> {
    spec.check_simple(i)?;
    let a = |j: usize, s: Sign| el(spec.a(j, s));
    let br = |x: &Element, y: &Element| supercommutator(x, y).expect("homogeneous");
    let sign_prev = if i >= 2 { spec.sign(i - 1) } else { 1 };
    if spec.deformed {
        Ok(match kind {
            ChevalleyKind::E if i == 1 => a(1, Sign::Minus),
            ChevalleyKind::F if i == 1 => a(1, Sign::Plus),
            ChevalleyKind::E => {
                (br(&a(i, Sign::Minus), &a(i - 1, Sign::Plus)) * el(spec.l(i - 1))).scale(&sc(-sign_prev))
            }
            ChevalleyKind::F => {
                (el(spec.lbar(i - 1)) * br(&a(i - 1, Sign::Minus), &a(i, Sign::Plus))).scale(&sc(-sign_prev))
            }
            ChevalleyKind::H if i == 1 => el(spec.cag_h(1)),
            ChevalleyKind::H => (el(spec.cag_h(i)) - el(spec.cag_h(i - 1))).scale(&sc(sign_prev)),
            ChevalleyKind::K | ChevalleyKind::KBar => {
                let inverse = kind == ChevalleyKind::KBar;
                if i == 1 {
                    el(if inverse { spec.lbar(1) } else { spec.l(1) })
                } else {
                    // q^{±(H_i − H_{i−1})} or its inverse, according to θ_{i−1}
                    let up = (sign_prev > 0) != inverse;
                    if up {
                        el(spec.l(i)) * el(spec.lbar(i - 1))
                    } else {
                        el(spec.lbar(i)) * el(spec.l(i - 1))
                    }
                }
            }
        })
    } else {
        Ok(match kind {
            ChevalleyKind::E if i == 1 => a(1, Sign::Minus),
            ChevalleyKind::F if i == 1 => a(1, Sign::Plus),
            ChevalleyKind::E => br(&a(i - 1, Sign::Plus), &a(i, Sign::Minus)),
            ChevalleyKind::F => br(&a(i, Sign::Plus), &a(i - 1, Sign::Minus)),
            ChevalleyKind::H if i == 1 => br(&a(1, Sign::Minus), &a(1, Sign::Plus)),
            ChevalleyKind::H => (br(&a(i, Sign::Minus), &a(i, Sign::Plus))
                - br(&a(i - 1, Sign::Minus), &a(i - 1, Sign::Plus)))
            .scale(&sc(sign_prev)),
            ChevalleyKind::K | ChevalleyKind::KBar => {
                return Err(Error::Precondition("group-like symbols exist only in the deformed algebra".into()))
            }
        })
    }
}

/// Substitution sending Chevalley symbols to their CAG expansions.
pub fn expand_chevalley_symbol(g: &Generator, spec: &AlgebraSpec) -> Result<Element> {
    let i = g.i as usize;
    let kind = match g.family {
        Family::E => ChevalleyKind::E,
        Family::F => ChevalleyKind::F,
        Family::H => ChevalleyKind::H,
        Family::K => ChevalleyKind::K,
        Family::KBar => ChevalleyKind::KBar,
        _ => return Ok(el(*g)),
    };
    chevalley_from_cag(kind, i, spec)
}

pub fn chevalley_to_cag(x: &Element, spec: &AlgebraSpec) -> Result<Element> {
    x.substitute(&|g| expand_chevalley_symbol(g, spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_examples() {
        let s = AlgebraSpec::deformed(2, 5);
        assert_eq!(s.theta(0).unwrap(), 0);
        assert_eq!(s.theta(3).unwrap(), 1);
        assert_eq!(s.theta_pair(2, 3).unwrap(), 1);
        assert!(matches!(s.theta(8), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn cartan_small_cases() {
        assert_eq!(cartan_matrix(&AlgebraSpec::deformed(1, 0)), vec![vec![2]]);
        assert_eq!(cartan_matrix(&AlgebraSpec::deformed(0, 1)), vec![vec![0]]);
    }

    #[test]
    fn cartan_zero_diagonal_only_at_odd_node() {
        for n in 0..=6u8 {
            for m in 0..=(6 - n) {
                if n + m == 0 {
                    continue;
                }
                let s = AlgebraSpec::deformed(n, m);
                let c = cartan_matrix(&s);
                for (i, row) in c.iter().enumerate() {
                    let expect_zero = m >= 1 && i == n as usize;
                    assert_eq!(row[i] == 0, expect_zero, "n={n} m={m} row {}", i + 1);
                    // α_{i,i−1} = −1 below the diagonal
                    if i > 0 {
                        assert_eq!(row[i - 1], -1);
                    }
                }
            }
        }
    }

    #[test]
    fn unsupported_spec() {
        assert_eq!(AlgebraSpec::new(0, 0, true), Err(Error::UnsupportedSpec));
    }

    #[test]
    fn parities_follow_the_grading() {
        let s = AlgebraSpec::deformed(1, 2);
        assert!(!s.e(1).odd && s.e(2).odd && !s.e(3).odd);
        assert!(!s.a(1, Sign::Plus).odd && s.a(2, Sign::Plus).odd && s.a(3, Sign::Minus).odd);
        for i in 1..=3 {
            for sg in Sign::BOTH {
                let x = cag_from_chevalley(i, sg, &s).unwrap();
                assert_eq!(x.parity().unwrap(), s.theta(i).unwrap());
            }
        }
    }

    #[test]
    fn cag_translation_examples() {
        let s = AlgebraSpec::deformed(1, 1);
        let e = |i| el(s.e(i));
        assert_eq!(cag_from_chevalley(1, Sign::Minus, &s).unwrap(), e(1));
        assert_eq!(
            cag_from_chevalley(2, Sign::Minus, &s).unwrap(),
            e(1) * e(2) - (e(2) * e(1)).scale(&Scalar::qbar())
        );
        let s02 = AlgebraSpec::deformed(0, 2);
        let e = |i| el(s02.e(i));
        assert_eq!(
            cag_from_chevalley(2, Sign::Minus, &s02).unwrap(),
            e(1) * e(2) - (e(2) * e(1)).scale(&Scalar::q())
        );
        assert!(cag_from_chevalley(3, Sign::Minus, &s02).is_err());
    }

    #[test]
    fn chevalley_from_cag_examples() {
        let s = AlgebraSpec::deformed(1, 1);
        assert_eq!(chevalley_from_cag(ChevalleyKind::E, 1, &s).unwrap(), el(s.a(1, Sign::Minus)));
        let f2 = chevalley_from_cag(ChevalleyKind::F, 2, &s).unwrap();
        let expect = (el(s.lbar(1))
            * supercommutator(&el(s.a(1, Sign::Minus)), &el(s.a(2, Sign::Plus))).unwrap())
        .scale(&sc(-1));
        assert_eq!(f2, expect);
        let c = AlgebraSpec::classical(1, 1);
        let h2 = chevalley_from_cag(ChevalleyKind::H, 2, &c).unwrap();
        let br = |i| supercommutator(&el(c.a(i, Sign::Minus)), &el(c.a(i, Sign::Plus))).unwrap();
        assert_eq!(h2, br(2) - br(1));
        assert!(chevalley_from_cag(ChevalleyKind::E, 3, &c).is_err());
    }

    #[test]
    fn presentation_examples() {
        let c01 = build_presentation(PresentationKind::Cag, &AlgebraSpec::classical(0, 1)).unwrap();
        let a = el(AlgebraSpec::classical(0, 1).a(1, Sign::Plus));
        assert!(c01.relations.iter().any(|r| r.element == (a.clone() * a.clone()).scale(&sc(2))));

        let s11 = AlgebraSpec::deformed(1, 1);
        let p = build_presentation(PresentationKind::Chevalley, &s11).unwrap();
        let e2 = el(s11.e(2));
        let f2 = el(s11.f(2));
        assert!(p.relations.iter().any(|r| r.element == e2.clone() * e2.clone()));
        assert!(p.relations.iter().any(|r| r.element == f2.clone() * f2.clone()));

        let p22 = build_presentation(PresentationKind::Chevalley, &AlgebraSpec::deformed(2, 2)).unwrap();
        let add = p22.relations.iter().filter(|r| r.provenance == tags::SERRE_ADDITIONAL).count();
        assert_eq!(add, 4);
        assert!(p22.relations.iter().all(|r| r.element.is_homogeneous()));
    }

    #[test]
    fn relation_counts_are_deterministic() {
        let s = AlgebraSpec::deformed(1, 1);
        let a = build_presentation(PresentationKind::Cag, &s).unwrap();
        let b = build_presentation(PresentationKind::Cag, &s).unwrap();
        assert_eq!(a.relations.len(), b.relations.len());
        let labels: Vec<_> = a.relations.iter().map(|r| r.label.clone()).collect();
        let mut uniq = labels.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), labels.len());
    }

    #[test]
    fn json_round_trip() {
        let s = AlgebraSpec::deformed(1, 1);
        let p = build_presentation(PresentationKind::Chevalley, &s).unwrap();
        let j = p.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: PresentationJson = serde_json::from_str(&text).unwrap();
        let q = Presentation::from_json(&back).unwrap();
        assert_eq!(q.relations, p.relations);
    }

    #[test]
    fn every_relation_symbol_is_a_generator() {
        for kind in [PresentationKind::Chevalley, PresentationKind::Cag] {
            for deformed in [true, false] {
                let s = AlgebraSpec::new(1, 2, deformed).unwrap();
                let p = build_presentation(kind, &s).unwrap();
                for r in &p.relations {
                    for g in r.element.symbols() {
                        assert!(p.generators.contains(&g), "{} in {}", g, r.label);
                    }
                }
            }
        }
    }
}
