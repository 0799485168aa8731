//! Exact matrix representations used as verification oracles: the classical
//! defining representation of gl(n+1|m) and validated q-oscillator
//! (Jordan–Schwinger) representations of the deformed algebra, the level-1
//! member of which is the vector representation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::presentations::{
    build_presentation, cag_from_chevalley, cartan_form_relations, AlgebraSpec, PresentationKind, Relation, Sign,
};
use crate::scalar::Scalar;
use crate::superfree::{Element, Generator};

/// Sparse exact square matrix over a Z2-graded index set.
#[derive(Clone, PartialEq)]
pub struct GradedMatrix {
    parities: Vec<u8>,
    /// `cols[j]` holds the nonzero entries `(i, a_ij)` sorted by row.
    cols: Vec<Vec<(usize, Scalar)>>,
}

type SparseVec = BTreeMap<usize, Scalar>;

fn vec_add(v: &mut SparseVec, i: usize, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match v.entry(i) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl GradedMatrix {
    pub fn zero(parities: &[u8]) -> Self {
        GradedMatrix {
            parities: parities.to_vec(),
            cols: vec![Vec::new(); parities.len()],
        }
    }

    pub fn identity(parities: &[u8]) -> Self {
        let mut m = GradedMatrix::zero(parities);
        for j in 0..m.dim() {
            m.cols[j].push((j, Scalar::one()));
        }
        m
    }

    /// Elementary matrix with a single 1 at `(i, j)`.
    pub fn unit(parities: &[u8], i: usize, j: usize) -> Self {
        let mut m = GradedMatrix::zero(parities);
        m.cols[j].push((i, Scalar::one()));
        m
    }

    pub fn diagonal(parities: &[u8], entries: Vec<Scalar>) -> Self {
        let mut m = GradedMatrix::zero(parities);
        for (j, c) in entries.into_iter().enumerate() {
            if !c.is_zero() {
                m.cols[j].push((j, c));
            }
        }
        m
    }

    fn from_columns(parities: &[u8], cols: Vec<SparseVec>) -> Self {
        GradedMatrix {
            parities: parities.to_vec(),
            cols: cols.into_iter().map(|c| c.into_iter().collect()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Parity of a homogeneous matrix, `None` when mixed; zero counts as even.
    pub fn parity(&self) -> Option<u8> {
        let mut p = None;
        for (j, col) in self.cols.iter().enumerate() {
            for (i, _) in col {
                let x = (self.parities[*i] + self.parities[j]) % 2;
                match p {
                    None => p = Some(x),
                    Some(y) if y != x => return None,
                    _ => {}
                }
            }
        }
        Some(p.unwrap_or(0))
    }

    fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v {
            for (i, a) in &self.cols[*j] {
                vec_add(&mut out, *i, a * c);
            }
        }
        out
    }

    pub fn mul(&self, other: &GradedMatrix) -> GradedMatrix {
        let cols = other
            .cols
            .iter()
            .map(|c| self.apply(&c.iter().cloned().collect()))
            .collect();
        GradedMatrix::from_columns(&self.parities, cols)
    }

    pub fn add_scaled(&self, other: &GradedMatrix, c: &Scalar) -> GradedMatrix {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut v: SparseVec = a.iter().cloned().collect();
                for (i, x) in b {
                    vec_add(&mut v, *i, x * c);
                }
                v
            })
            .collect();
        GradedMatrix::from_columns(&self.parities, cols)
    }

    pub fn scale(&self, c: &Scalar) -> GradedMatrix {
        GradedMatrix::zero(&self.parities).add_scaled(self, c)
    }

    /// `AB − (−1)^{|A||B|} x·BA` for homogeneous matrices.
    pub fn graded_bracket(&self, other: &GradedMatrix, x: &Scalar) -> GradedMatrix {
        let pa = self.parity().unwrap_or(0);
        let pb = other.parity().unwrap_or(0);
        let s = if pa * pb == 1 { x.clone() } else { -x.clone() };
        self.mul(other).add_scaled(&other.mul(self), &s)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let d = self.dim();
        let mut out = vec![vec![Scalar::zero(); d]; d];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                out[*i][j] = c.clone();
            }
        }
        out
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.to_dense().into_iter().flatten().collect()
    }

    /// Rows of scalar strings.
    pub fn to_json(&self) -> Vec<Vec<String>> {
        self.to_dense()
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.to_string()).collect())
            .collect()
    }

    pub fn from_json(parities: &[u8], rows: &[Vec<String>]) -> Result<Self> {
        let d = parities.len();
        if rows.len() != d || rows.iter().any(|r| r.len() != d) {
            return Err(Error::Parse("matrix shape does not match the grading".into()));
        }
        let mut cols = vec![SparseVec::new(); d];
        for (i, row) in rows.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                vec_add(&mut cols[j], i, s.parse()?);
            }
        }
        Ok(GradedMatrix::from_columns(parities, cols))
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Generator images together with the validation outcome.
#[derive(Clone, Debug)]
pub struct RepAssignment {
    pub name: String,
    pub spec: AlgebraSpec,
    pub parities: Vec<u8>,
    pub images: HashMap<Generator, GradedMatrix>,
    /// Set once every relation of the target presentation maps to zero.
    pub validated: bool,
    /// Faithful on the Lie superalgebra (classical defining representation).
    pub faithful: bool,
    /// Labels of relations that failed validation.
    pub failures: Vec<String>,
}

impl RepAssignment {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn image(&self, g: &Generator) -> Result<&GradedMatrix> {
        self.images.get(g).ok_or_else(|| Error::Unassigned(g.name()))
    }

    pub fn evaluate(&self, x: &Element) -> Result<GradedMatrix> {
        evaluate(x, self)
    }

    /// Checks `relations`; records failures and sets `validated` on success.
    pub fn validate(&mut self, relations: &[Relation]) -> Result<bool> {
        let results: Vec<Result<Option<String>>> = relations
            .par_iter()
            .map(|r| Ok((!evaluate(&r.element, self)?.is_zero()).then(|| r.label.clone())))
            .collect();
        let mut failures = Vec::new();
        for r in results {
            if let Some(l) = r? {
                failures.push(l);
            }
        }
        self.validated = failures.is_empty();
        self.failures = failures;
        Ok(self.validated)
    }

    pub fn to_json(&self) -> RepJson {
        let mut images: Vec<(String, Vec<Vec<String>>)> = self
            .images
            .iter()
            .map(|(g, m)| (g.name(), m.to_json()))
            .collect();
        images.sort();
        RepJson {
            name: self.name.clone(),
            parities: self.parities.clone(),
            validated: self.validated,
            images: images.into_iter().collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RepJson {
    pub name: String,
    pub parities: Vec<u8>,
    pub validated: bool,
    pub images: BTreeMap<String, Vec<Vec<String>>>,
}

/// Image of `x`: an algebra morphism from the free algebra to matrices.
pub fn evaluate(x: &Element, rep: &RepAssignment) -> Result<GradedMatrix> {
    let d = rep.dim();
    let mut words = Vec::with_capacity(x.len());
    for (w, c) in x.terms() {
        let mut ms = Vec::with_capacity(w.len());
        for g in w.symbols() {
            ms.push(rep.image(g)?);
        }
        words.push((ms, c));
    }
    let cols = (0..d)
        .map(|j| {
            let mut acc = SparseVec::new();
            for (ms, c) in &words {
                let mut v = SparseVec::new();
                v.insert(j, (*c).clone());
                for m in ms.iter().rev() {
                    v = m.apply(&v);
                    if v.is_empty() {
                        break;
                    }
                }
                for (i, a) in v {
                    vec_add(&mut acc, i, a);
                }
            }
            acc
        })
        .collect();
    Ok(GradedMatrix::from_columns(&rep.parities, cols))
}

/// Rank of the images of `elements` as vectors in the matrix space.
pub fn span_dimension(elements: &[Element], rep: &RepAssignment) -> Result<usize> {
    let mut vs = Vec::with_capacity(elements.len());
    for e in elements {
        vs.push(evaluate(e, rep)?.flatten());
    }
    Ok(linalg::rank(vs))
}

fn index_parities(spec: &AlgebraSpec) -> Vec<u8> {
    (0..=spec.rank()).map(|i| spec.theta(i).expect("in range")).collect()
}

/// `E_ij ↦` elementary matrices; `ê_i, f̂_i, ĥ_i, â_i^±, H_i` through them.
pub fn classical_rep(spec: &AlgebraSpec) -> Result<RepAssignment> {
    if spec.deformed {
        return Err(Error::Precondition("classical_rep needs a nondeformed spec".into()));
    }
    let r = spec.rank();
    let par = index_parities(spec);
    let unit = |i, j| GradedMatrix::unit(&par, i, j);
    let mut images = HashMap::new();
    for i in 0..=r {
        for j in 0..=r {
            images.insert(spec.unit(i, j), unit(i, j));
        }
    }
    for i in 1..=r {
        let s = if par[i - 1] != par[i] { -1 } else { 1 };
        images.insert(spec.e(i), unit(i - 1, i));
        images.insert(spec.f(i), unit(i, i - 1));
        images.insert(
            spec.h(i),
            unit(i - 1, i - 1).add_scaled(&unit(i, i), &Scalar::from_int(-s)),
        );
        images.insert(spec.a(i, Sign::Plus), unit(i, 0));
        images.insert(spec.a(i, Sign::Minus), unit(0, i));
        images.insert(
            spec.cag_h(i),
            unit(0, 0).add_scaled(&unit(i, i), &Scalar::from_int(-spec.sign(i))),
        );
    }
    let mut rep = RepAssignment {
        name: format!("classical({},{})", spec.n, spec.m),
        spec: *spec,
        parities: par,
        images,
        validated: false,
        faithful: true,
        failures: Vec::new(),
    };
    let mut rels = build_presentation(PresentationKind::Chevalley, spec)?.relations;
    rels.extend(build_presentation(PresentationKind::Cag, spec)?.relations);
    rels.extend(cartan_form_relations(PresentationKind::Cag, spec));
    rels.extend(matrix_unit_relations(spec));
    rep.validate(&rels)?;
    Ok(rep)
}

/// `⟦e_ij, e_kl⟧ = δ_jk e_il − (−1)^{θ_ij θ_kl} δ_li e_kj` for all index quadruples.
pub fn matrix_unit_relations(spec: &AlgebraSpec) -> Vec<Relation> {
    let r = spec.rank();
    let th = |i: usize| spec.theta(i).expect("in range");
    let mut out = Vec::new();
    for i in 0..=r {
        for j in 0..=r {
            for k in 0..=r {
                for l in 0..=r {
                    let a = Element::gen(spec.unit(i, j));
                    let b = Element::gen(spec.unit(k, l));
                    let mut rel = crate::superfree::supercommutator(&a, &b).expect("homogeneous");
                    if j == k {
                        rel = rel - Element::gen(spec.unit(i, l));
                    }
                    if l == i {
                        let odd = (th(i) + th(j)) % 2 == 1 && (th(k) + th(l)) % 2 == 1;
                        let s = if odd { -1 } else { 1 };
                        rel = rel + Element::gen(spec.unit(k, j)).scale(&Scalar::from_int(s));
                    }
                    out.push(Relation {
                        label: format!("units(E{i}_{j},E{k}_{l})"),
                        element: rel,
                        provenance: "matrix-units",
                    });
                }
            }
        }
    }
    out
}

/// Which modes carry fermionic oscillators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statistics {
    /// Odd modes fermionic: the q-analogue of the symmetric powers.
    Symmetric,
    /// Even modes fermionic: the q-analogue of the exterior powers.
    Exterior,
}

/// Occupation basis of total number `level` over modes `0..=n+m`.
fn oscillator_basis(fermionic: &[bool], level: usize) -> Vec<Vec<u8>> {
    fn go(k: usize, left: usize, fermionic: &[bool], cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == fermionic.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if fermionic[k] { left.min(1) } else { left };
        for x in (0..=cap).rev() {
            cur.push(x as u8);
            go(k + 1, left - x, fermionic, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, level, fermionic, &mut Vec::new(), &mut out);
    out
}

/// The q-oscillator representation at `level` quanta, with sign constants
/// `signs[i−1] = (c_i, c'_i)` on `e_i`, `f_i`. Not validated.
pub fn oscillator_candidate(
    spec: &AlgebraSpec,
    level: usize,
    stats: Statistics,
    signs: &[(i64, i64)],
) -> Result<RepAssignment> {
    if !spec.deformed {
        return Err(Error::Precondition("oscillator representations are deformed".into()));
    }
    let r = spec.rank();
    let theta: Vec<u8> = index_parities(spec);
    let fermionic: Vec<bool> = theta
        .iter()
        .map(|&t| match stats {
            Statistics::Symmetric => t == 1,
            Statistics::Exterior => t == 0,
        })
        .collect();
    let basis = oscillator_basis(&fermionic, level);
    if basis.is_empty() {
        return Err(Error::Precondition("empty oscillator basis".into()));
    }
    let index: HashMap<Vec<u8>, usize> = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
    let par: Vec<u8> = basis
        .iter()
        .map(|b| b.iter().zip(&theta).map(|(&x, &t)| x * t).sum::<u8>() % 2)
        .collect();
    let jw = |b: &[u8], mode: usize| -> i64 {
        let c: u32 = (0..mode).filter(|&l| fermionic[l]).map(|l| b[l] as u32).sum();
        if c.is_multiple_of(2) {
            1
        } else {
            -1
        }
    };
    // annihilate at `from`, then create at `to`
    let hop = |from: usize, to: usize| -> GradedMatrix {
        let mut cols = vec![SparseVec::new(); basis.len()];
        for (j, b) in basis.iter().enumerate() {
            if b[from] == 0 {
                continue;
            }
            let mut c = if fermionic[from] {
                Scalar::from_int(jw(b, from))
            } else {
                Scalar::qint(b[from] as i64)
            };
            let mut nb = b.clone();
            nb[from] -= 1;
            if fermionic[to] {
                if nb[to] == 1 {
                    continue;
                }
                c = c * Scalar::from_int(jw(&nb, to));
            }
            nb[to] += 1;
            vec_add(&mut cols[j], index[&nb], c);
        }
        GradedMatrix::from_columns(&par, cols)
    };
    let diag = |f: &dyn Fn(&[u8]) -> i64, exp: bool| -> GradedMatrix {
        let entries = basis
            .iter()
            .map(|b| {
                let v = f(b);
                if exp {
                    Scalar::q_pow(v)
                } else {
                    Scalar::from_int(v)
                }
            })
            .collect();
        GradedMatrix::diagonal(&par, entries)
    };
    let mut images = HashMap::new();
    for i in 1..=r {
        let s = if theta[i - 1] != theta[i] { -1 } else { 1 };
        let (c, cp) = signs.get(i - 1).copied().unwrap_or((1, 1));
        images.insert(spec.e(i), hop(i, i - 1).scale(&Scalar::from_int(c)));
        images.insert(spec.f(i), hop(i - 1, i).scale(&Scalar::from_int(cp)));
        let h = move |b: &[u8]| b[i - 1] as i64 - s * b[i] as i64;
        images.insert(spec.h(i), diag(&h, false));
        images.insert(spec.k(i), diag(&h, true));
        images.insert(spec.kbar(i), diag(&move |b: &[u8]| -h(b), true));
        let sg = spec.sign(i);
        let big_h = move |b: &[u8]| b[0] as i64 - sg * b[i] as i64;
        images.insert(spec.cag_h(i), diag(&big_h, false));
        images.insert(spec.l(i), diag(&big_h, true));
        images.insert(spec.lbar(i), diag(&move |b: &[u8]| -big_h(b), true));
    }
    let mut rep = RepAssignment {
        name: format!(
            "oscillator({},{};level {level},{})",
            spec.n,
            spec.m,
            match stats {
                Statistics::Symmetric => "symmetric",
                Statistics::Exterior => "exterior",
            }
        ),
        spec: *spec,
        parities: par,
        images,
        validated: false,
        faithful: false,
        failures: Vec::new(),
    };
    for i in 1..=r {
        for s in Sign::BOTH {
            let m = evaluate(&cag_from_chevalley(i, s, spec)?, &rep)?;
            rep.images.insert(spec.a(i, s), m);
        }
    }
    Ok(rep)
}

/// Deformed Chevalley relations plus the Cartan-element forms checked in matrices.
pub fn deformed_validation_relations(spec: &AlgebraSpec) -> Result<Vec<Relation>> {
    let mut rels = build_presentation(PresentationKind::Chevalley, spec)?.relations;
    rels.extend(cartan_form_relations(PresentationKind::Chevalley, spec));
    Ok(rels)
}

/// Validated q-oscillator representation; tries the all-plus signs first and
/// then searches over `c_i, c'_i ∈ {±1}`.
pub fn oscillator_rep(spec: &AlgebraSpec, level: usize, stats: Statistics) -> Result<RepAssignment> {
    let rels = deformed_validation_relations(spec)?;
    let r = spec.rank();
    let total = 1usize << (2 * r).min(16);
    for mask in 0..total {
        let signs: Vec<(i64, i64)> = (0..r)
            .map(|i| {
                let bit = |b: usize| if mask >> b & 1 == 1 { -1 } else { 1 };
                (bit(2 * i), bit(2 * i + 1))
            })
            .collect();
        let mut rep = oscillator_candidate(spec, level, stats, &signs)?;
        if rep.validate(&rels)? {
            return Ok(rep);
        }
    }
    Err(Error::NoVectorRepresentation(format!(
        "({},{}) level {level} {:?}",
        spec.n, spec.m, stats
    )))
}

/// The (n+m+1)-dimensional vector representation, found by sign search.
pub fn quantum_vector_rep(spec: &AlgebraSpec) -> Result<RepAssignment> {
    let mut rep = oscillator_rep(spec, 1, Statistics::Symmetric)?;
    rep.name = format!("vector({},{})", spec.n, spec.m);
    Ok(rep)
}

/// Validated deformed representations used as oracles: the vector
/// representation plus symmetric and exterior oscillators at levels 2 and 3.
pub fn oracle_reps(spec: &AlgebraSpec) -> Result<Vec<RepAssignment>> {
    let mut jobs = vec![(1, Statistics::Symmetric)];
    for level in [2, 3] {
        jobs.push((level, Statistics::Symmetric));
        jobs.push((level, Statistics::Exterior));
    }
    let reps: Vec<Result<RepAssignment>> = jobs
        .par_iter()
        .map(|&(level, stats)| {
            if level == 1 {
                quantum_vector_rep(spec)
            } else {
                oscillator_rep(spec, level, stats)
            }
        })
        .collect();
    let mut out = Vec::new();
    for r in reps {
        match r {
            Ok(rep) => out.push(rep),
            // too few fermionic modes for this level
            Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superfree::supercommutator;

    #[test]
    fn matrix_unit_brackets() {
        let s = AlgebraSpec::classical(1, 0);
        let rep = classical_rep(&s).unwrap();
        assert!(rep.validated, "{:?}", rep.failures);
        let b = supercommutator(&Element::gen(s.unit(0, 1)), &Element::gen(s.unit(1, 0))).unwrap();
        let m = evaluate(&b, &rep).unwrap();
        assert_eq!(m.get(0, 0), Scalar::one());
        assert_eq!(m.get(1, 1), Scalar::from_int(-1));

        let s = AlgebraSpec::classical(0, 1);
        let rep = classical_rep(&s).unwrap();
        let b = supercommutator(&Element::gen(s.unit(0, 1)), &Element::gen(s.unit(1, 0))).unwrap();
        let m = evaluate(&b, &rep).unwrap();
        assert_eq!(m.get(0, 0), Scalar::one());
        assert_eq!(m.get(1, 1), Scalar::one());
        assert_eq!(rep.image(&s.a(1, Sign::Plus)).unwrap(), &GradedMatrix::unit(&[0, 1], 1, 0));
    }

    #[test]
    fn vector_rep_examples() {
        let s = AlgebraSpec::deformed(1, 0);
        let rep = quantum_vector_rep(&s).unwrap();
        let k = rep.image(&s.k(1)).unwrap();
        assert_eq!(k.get(0, 0), Scalar::q());
        assert_eq!(k.get(1, 1), Scalar::qbar());

        let s = AlgebraSpec::deformed(1, 1);
        let rep = quantum_vector_rep(&s).unwrap();
        let a2 = rep.image(&s.a(2, Sign::Minus)).unwrap();
        assert_eq!(a2.nnz(), 1);
        assert!(!a2.get(0, 2).is_zero());
        let kk = evaluate(&(Element::gen(s.k(2)) * Element::gen(s.kbar(2))), &rep).unwrap();
        assert_eq!(kk, GradedMatrix::identity(&rep.parities));
    }

    #[test]
    fn evaluate_basics() {
        let s = AlgebraSpec::classical(1, 0);
        let rep = classical_rep(&s).unwrap();
        assert_eq!(evaluate(&Element::one(), &rep).unwrap(), GradedMatrix::identity(&[0, 0]));
        let ef = Element::gen(s.e(1)) * Element::gen(s.f(1));
        assert_eq!(evaluate(&ef, &rep).unwrap(), GradedMatrix::unit(&[0, 0], 0, 0));
        let stranger = Element::gen(Generator::free(0, false));
        assert!(matches!(evaluate(&stranger, &rep), Err(Error::Unassigned(_))));
    }

    #[test]
    fn span_examples() {
        let s = AlgebraSpec::classical(0, 1);
        let rep = classical_rep(&s).unwrap();
        assert_eq!(span_dimension(&[Element::one()], &rep).unwrap(), 1);
    }

    #[test]
    fn oscillators_validate() {
        for (n, m) in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)] {
            let s = AlgebraSpec::deformed(n, m);
            for level in [1, 2, 3] {
                for st in [Statistics::Symmetric, Statistics::Exterior] {
                    match oscillator_rep(&s, level, st) {
                        Ok(_) | Err(Error::Precondition(_)) => {}
                        Err(e) => panic!("({n},{m}) level {level} {st:?}: {e:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let s = AlgebraSpec::deformed(1, 1);
        let rep = quantum_vector_rep(&s).unwrap();
        let m = rep.image(&s.a(2, Sign::Minus)).unwrap();
        let back = GradedMatrix::from_json(&rep.parities, &m.to_json()).unwrap();
        assert_eq!(&back, m);
    }
}
