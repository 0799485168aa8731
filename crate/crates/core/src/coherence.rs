//! Cross-checks on the deformed CAG presentation: its classical limit, its
//! closure under the star antiinvolution, and the sensitivity of the matrix
//! oracles to perturbed relations.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrep::{evaluate, RepAssignment};
use crate::presentations::{
    build_presentation, cartan_form_relations, classical_full_relations, tags, AlgebraSpec, PresentationKind, Relation,
    Sign,
};
use crate::rewrite::{orient_relations, RuleSystem, WordOrder, DEFAULT_MAX_STEPS};
use crate::scalar::{Rat, Scalar};
use crate::superfree::{star_map, supercommutator, Element, Family, Generator, Word};

/// How a deformed relation behaves at `q = e^t`, `t → 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum LimitOutcome {
    /// The leading `t`-coefficient is `factor` times the named classical relation.
    Matched { order: i64, partner: String, factor: String },
    /// Every coefficient up to the examined order vanishes (inverse relations).
    Vanishes,
    /// The leading coefficient matches no classical relation.
    Unmatched { order: i64, limit: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitRecord {
    pub label: String,
    pub outcome: LimitOutcome,
}

/// `Σ_k t^k x^k / k!` truncated to `len` terms, with `x` a single symbol.
fn exp_letter(g: Generator, sign: i64, len: usize) -> Vec<Element> {
    let mut out = Vec::with_capacity(len);
    let mut power = Element::one();
    let mut coeff = Rat::from_integer(1.into());
    for k in 0..len {
        if k > 0 {
            power = power.mul(&Element::gen(g));
            coeff = coeff * Rat::from_integer(sign.into()) / Rat::from_integer((k as i64).into());
        }
        out.push(power.scale(&Scalar::from_rat(coeff.clone())));
    }
    out
}

fn series_mul(a: &[Element], b: &[Element]) -> Vec<Element> {
    let len = a.len();
    let mut out = vec![Element::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().take(len - i).enumerate() {
            if !y.is_zero() {
                out[i + j] = std::mem::take(&mut out[i + j]) + x.mul(y);
            }
        }
    }
    out
}

/// Expansion of `x` at `q = e^t`, `L_i = e^{tH_i}`, `L̄_i = e^{−tH_i}`.
///
/// Returns the lowest order `v` and the coefficients of `t^v, …, t^{v+len−1}`
/// as classical elements over `a_i^±` and `H_i`.
pub fn t_expansion(x: &Element, len: usize) -> (i64, Vec<Element>) {
    let terms: Vec<(&Word, (i64, Vec<Rat>))> = x.terms().map(|(w, c)| (w, c.exp_series(len))).collect();
    let lo = terms.iter().map(|(_, (v, _))| *v).min().unwrap_or(0);
    let mut out = vec![Element::zero(); len];
    for (w, (v, coeffs)) in terms {
        let offset = (v - lo) as usize;
        if offset >= len {
            continue;
        }
        let width = len - offset;
        let mut word = vec![Element::zero(); width];
        word[0] = Element::one();
        for g in w.symbols() {
            let letter = match g.family {
                Family::L => exp_letter(Generator::new(Family::CagH, g.i, false), 1, width),
                Family::LBar => exp_letter(Generator::new(Family::CagH, g.i, false), -1, width),
                _ => {
                    let mut s = vec![Element::zero(); width];
                    s[0] = Element::gen(*g);
                    s
                }
            };
            word = series_mul(&word, &letter);
        }
        let cs: Vec<Element> = coeffs.iter().map(|c| Element::scalar(Scalar::from_rat(c.clone()))).collect();
        for (k, e) in series_mul(&cs[..width], &word).into_iter().enumerate() {
            out[offset + k] = std::mem::take(&mut out[offset + k]) + e;
        }
    }
    (lo, out)
}

/// Leading `t`-coefficient of `x` within `len` orders, if any.
pub fn classical_limit(x: &Element, len: usize) -> Option<(i64, Element)> {
    let (lo, series) = t_expansion(x, len);
    series.into_iter().enumerate().find(|(_, e)| !e.is_zero()).map(|(k, e)| (lo + k as i64, e))
}

/// Classical relations a limit may match: the full triple set, same-sign
/// brackets, the Cartan relations and `⟦a_i^-, a_i^+⟧ = H_i`.
pub fn classical_reference(spec: &AlgebraSpec) -> Vec<Relation> {
    let c = AlgebraSpec::classical(spec.n, spec.m);
    let mut out = classical_full_relations(&c);
    out.extend(cartan_form_relations(PresentationKind::Cag, &c));
    for i in 1..=c.rank() {
        let rel = supercommutator(&Element::gen(c.a(i, Sign::Minus)), &Element::gen(c.a(i, Sign::Plus)))
            .expect("homogeneous")
            - Element::gen(c.cag_h(i));
        out.push(Relation {
            label: format!("definition(H{i})"),
            element: rel,
            provenance: tags::CAG_CARTAN,
        });
    }
    out
}

/// Examined orders for [`limit_coherence`].
pub const LIMIT_ORDERS: usize = 4;

/// Matches the classical limit of every deformed CAG relation against the
/// classical reference set.
pub fn limit_coherence(spec: &AlgebraSpec) -> Result<Vec<LimitRecord>> {
    let pres = build_presentation(PresentationKind::Cag, &AlgebraSpec::deformed(spec.n, spec.m))?;
    let reference = classical_reference(spec);
    Ok(pres
        .relations
        .iter()
        .map(|r| {
            let outcome = match classical_limit(&r.element, LIMIT_ORDERS) {
                None => LimitOutcome::Vanishes,
                Some((order, lim)) => reference
                    .iter()
                    .find_map(|c| {
                        lim.proportionality(&c.element).map(|f| LimitOutcome::Matched {
                            order,
                            partner: c.label.clone(),
                            factor: f.to_string(),
                        })
                    })
                    .unwrap_or(LimitOutcome::Unmatched { order, limit: lim.to_string() }),
            };
            LimitRecord { label: r.label.clone(), outcome }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum StarOutcome {
    /// The image is `factor` times the named relation, both normalised.
    Matched { partner: String, factor: String },
    /// The image lies in the ideal of the group-like and weight relations.
    Reduces,
    /// The image matches no relation up to a unit `±q^k`.
    Unmatched { image: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StarRecord {
    pub label: String,
    pub outcome: StarOutcome,
}

/// True for `±q^k`.
pub fn is_unit(c: &Scalar) -> bool {
    c.as_monomial().is_some_and(|(r, _)| r == Rat::from_integer(1.into()) || r == Rat::from_integer((-1).into()))
}

/// Checks that the star antiinvolution permutes the deformed CAG relations up
/// to unit scalars. Both sides are normalised modulo the group-like and weight
/// relations, which only reorder `L` symbols past CAGs.
pub fn star_closure(spec: &AlgebraSpec) -> Result<Vec<StarRecord>> {
    let pres = build_presentation(PresentationKind::Cag, &AlgebraSpec::deformed(spec.n, spec.m))?;
    let commuting: Vec<Relation> = pres
        .relations
        .iter()
        .filter(|r| matches!(r.provenance, tags::GROUP_COMMUTE | tags::GROUP_INVERSE | tags::CAG_WEIGHT))
        .cloned()
        .collect();
    let sys = orient_relations(&pres.generators, &commuting, &WordOrder::default())?;
    let normal = |x: &Element| -> Result<Element> { Ok(sys.reduce(x, DEFAULT_MAX_STEPS)?.normal_form) };
    let normals: Vec<(String, Element)> = pres
        .relations
        .iter()
        .map(|r| Ok((r.label.clone(), normal(&r.element)?)))
        .collect::<Result<_>>()?;
    pres.relations
        .iter()
        .map(|r| {
            let image = normal(&star_map(&r.element)?)?;
            let outcome = if image.is_zero() {
                StarOutcome::Reduces
            } else {
                normals
                    .iter()
                    .find_map(|(label, nf)| {
                        image
                            .proportionality(nf)
                            .filter(is_unit)
                            .map(|f| StarOutcome::Matched { partner: label.clone(), factor: f.to_string() })
                    })
                    .unwrap_or(StarOutcome::Unmatched { image: image.to_string() })
            };
            Ok(StarRecord { label: r.label.clone(), outcome })
        })
        .collect()
}

/// How a relation was perturbed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Perturbation {
    /// `q ↦ q²` in every coefficient of the relation.
    Substituted,
    /// The coefficient of the order-smallest word multiplied by `q²`; used
    /// when the relation has only rational coefficients.
    LowestTermScaled,
}

/// The perturbed relation, or `None` when no perturbation changes it modulo
/// the ideal.
///
/// Scaling one term `c·w` by `q²` changes the relation by `(q² − 1)c·w`, which
/// is a genuine fault only when `w` is not itself zero in the algebra;
/// `in_ideal` screens such words out.
pub fn perturb(x: &Element, in_ideal: &dyn Fn(&Word) -> bool) -> Option<(Perturbation, Element)> {
    if x.len() < 2 {
        return None;
    }
    let sub = x.map_coeffs(|c| c.subs_q_power(2));
    if sub != *x {
        return Some((Perturbation::Substituted, sub));
    }
    let (w, c) = x.terms().find(|(w, _)| !in_ideal(w))?;
    let mut out = x.clone();
    out.add_term(w.clone(), c * &(Scalar::q_pow(2) - Scalar::one()));
    Some((Perturbation::LowestTermScaled, out))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SensitivityRecord {
    pub label: String,
    pub perturbation: Option<Perturbation>,
    /// Names of the representations seeing a nonzero image.
    pub detected_by: Vec<String>,
}

impl SensitivityRecord {
    pub fn detected(&self) -> bool {
        !self.detected_by.is_empty()
    }
}

/// Perturbs each relation in turn and records which oracles notice. Words
/// that `rules` reduces to zero are never chosen for scaling.
pub fn perturbation_sensitivity(
    relations: &[Relation],
    reps: &[RepAssignment],
    rules: Option<&RuleSystem>,
) -> Result<Vec<SensitivityRecord>> {
    let in_ideal = |w: &Word| {
        rules.is_some_and(|sys| {
            sys.reduce(&Element::term(Scalar::one(), w.clone()), DEFAULT_MAX_STEPS)
                .is_ok_and(|r| !r.partial && r.normal_form.is_zero())
        })
    };
    relations
        .iter()
        .map(|r| {
            let Some((kind, p)) = perturb(&r.element, &in_ideal) else {
                return Ok(SensitivityRecord { label: r.label.clone(), perturbation: None, detected_by: Vec::new() });
            };
            let mut detected_by = Vec::new();
            for rep in reps.iter().filter(|r| r.validated) {
                if !evaluate(&p, rep)?.is_zero() {
                    detected_by.push(rep.name.clone());
                }
            }
            Ok(SensitivityRecord { label: r.label.clone(), perturbation: Some(kind), detected_by })
        })
        .collect()
}
