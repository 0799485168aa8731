//! Graded q-bracket identities used throughout the CAG proofs, checked over
//! free placeholder symbols `a`, `b`, `c` for every parity assignment.
//!
//! Where an identity assumes some pair supercommutes, the difference of the
//! two sides is reduced modulo the single commutation rule for that pair
//! before testing for zero.

use serde::{Deserialize, Serialize};

use super::{graded_bracket, qbracket, Element, Generator, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::status::{Status, Verification};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    ReassociateCommuting,
    ExchangeCommuting,
    SerreEvenMiddle,
    SerreEvenOuter,
    Leibniz,
    Jacobi,
    ParametricJacobi,
}

impl IdentityId {
    pub const ALL: [IdentityId; 7] = [
        IdentityId::ReassociateCommuting,
        IdentityId::ExchangeCommuting,
        IdentityId::SerreEvenMiddle,
        IdentityId::SerreEvenOuter,
        IdentityId::Leibniz,
        IdentityId::Jacobi,
        IdentityId::ParametricJacobi,
    ];

    /// Whether a parity triple `(deg a, deg b, deg c)` satisfies the hypothesis.
    pub fn admits(self, parities: [bool; 3]) -> bool {
        match self {
            IdentityId::SerreEvenMiddle => !parities[1],
            IdentityId::SerreEvenOuter => !parities[0],
            _ => true,
        }
    }
}

/// An identity instance with its scalar parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketIdentity {
    /// If ⟦a,b⟧ = 0 then ⟦⟦a,c⟧_q, b⟧_p = ⟦a,⟦c,b⟧_p⟧_q.
    ReassociateCommuting { p: Scalar, q: Scalar },
    /// If ⟦a,b⟧ = 0 then ⟦a,⟦b,c⟧_q⟧_p = (−1)^{αβ}⟦b,⟦a,c⟧_p⟧_q.
    ExchangeCommuting { p: Scalar, q: Scalar },
    /// b even, ⟦a,c⟧ = 0.
    SerreEvenMiddle { x: Scalar },
    /// a even, ⟦b,c⟧ = 0.
    SerreEvenOuter { x: Scalar },
    /// [a,bc]_x = [a,b]c + b[a,c]_x (ungraded brackets).
    Leibniz { x: Scalar },
    /// ⟦⟦a,b⟧_x, c⟧ = (−1)^{βγ}⟦⟦a,c⟧,b⟧_x + ⟦a,⟦b,c⟧⟧_x.
    Jacobi { x: Scalar },
    /// With x = zs, y = zr, t = zsr:
    /// ⟦a,⟦b,c⟧_x⟧_y = ⟦⟦a,b⟧_z,c⟧_t + z(−1)^{αβ}⟦b,⟦a,c⟧_r⟧_s.
    ParametricJacobi {
        x: Scalar,
        y: Scalar,
        z: Scalar,
        r: Scalar,
        s: Scalar,
        t: Scalar,
    },
}

impl std::fmt::Display for BracketIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BracketIdentity::ReassociateCommuting { p, q } | BracketIdentity::ExchangeCommuting { p, q } => {
                write!(f, "{:?}(p={p}, q={q})", self.id())
            }
            BracketIdentity::SerreEvenMiddle { x }
            | BracketIdentity::SerreEvenOuter { x }
            | BracketIdentity::Leibniz { x }
            | BracketIdentity::Jacobi { x } => write!(f, "{:?}(x={x})", self.id()),
            BracketIdentity::ParametricJacobi { z, r, s, .. } => write!(f, "{:?}(z={z}, r={r}, s={s})", self.id()),
        }
    }
}

impl BracketIdentity {
    pub fn id(&self) -> IdentityId {
        match self {
            BracketIdentity::ReassociateCommuting { .. } => IdentityId::ReassociateCommuting,
            BracketIdentity::ExchangeCommuting { .. } => IdentityId::ExchangeCommuting,
            BracketIdentity::SerreEvenMiddle { .. } => IdentityId::SerreEvenMiddle,
            BracketIdentity::SerreEvenOuter { .. } => IdentityId::SerreEvenOuter,
            BracketIdentity::Leibniz { .. } => IdentityId::Leibniz,
            BracketIdentity::Jacobi { .. } => IdentityId::Jacobi,
            BracketIdentity::ParametricJacobi { .. } => IdentityId::ParametricJacobi,
        }
    }

    /// Builds the parametric Jacobi instance from the free parameters `z, r, s`.
    pub fn parametric_jacobi(z: Scalar, r: Scalar, s: Scalar) -> Self {
        BracketIdentity::ParametricJacobi {
            x: &z * &s,
            y: &z * &r,
            t: &(&z * &s) * &r,
            z,
            r,
            s,
        }
    }

    /// Placeholder pair assumed to supercommute, if any (indices into a, b, c).
    fn hypothesis(&self) -> Option<(usize, usize)> {
        match self.id() {
            IdentityId::ReassociateCommuting | IdentityId::ExchangeCommuting => Some((0, 1)),
            IdentityId::SerreEvenMiddle => Some((0, 2)),
            IdentityId::SerreEvenOuter => Some((1, 2)),
            _ => None,
        }
    }

    /// LHS − RHS over free symbols with the given parities.
    pub fn difference(&self, parities: [bool; 3]) -> Result<Element> {
        let [a, b, c] = placeholders(parities);
        let deg = |e: &Element| e.parity().map(|p| p == 1);
        let sign = |u: bool, v: bool| if u && v { -Scalar::one() } else { Scalar::one() };
        let one = Scalar::one();
        let gb = graded_bracket;
        Ok(match self {
            BracketIdentity::ReassociateCommuting { p, q } => {
                gb(&gb(&a, &c, q)?, &b, p)? - gb(&a, &gb(&c, &b, p)?, q)?
            }
            BracketIdentity::ExchangeCommuting { p, q } => {
                let s = sign(deg(&a)?, deg(&b)?);
                gb(&a, &gb(&b, &c, q)?, p)? - gb(&b, &gb(&a, &c, p)?, q)?.scale(&s)
            }
            BracketIdentity::SerreEvenMiddle { x } => {
                let xb = x.inv()?;
                let x2 = x * x;
                let lhs = qbracket(&b, &gb(&a, &qbracket(&b, &c, x), x)?, &one).scale(&(x + &xb));
                let r1 = gb(&a, &qbracket(&b, &qbracket(&b, &c, x), &xb), &x2)?;
                let r2 = gb(&qbracket(&b, &qbracket(&b, &a, x), &xb), &c, &x2)?;
                lhs - r1 + r2
            }
            BracketIdentity::SerreEvenOuter { x } => {
                let xb = x.inv()?;
                let x2 = x * x;
                let lhs = qbracket(&a, &gb(&qbracket(&b, &a, x), &c, x)?, &one).scale(&(x + &xb));
                let r1 = gb(&b, &qbracket(&a, &qbracket(&a, &c, x), &xb), &x2)?;
                let r2 = gb(&qbracket(&a, &qbracket(&a, &b, x), &xb), &c, &x2)?;
                lhs - r1 + r2
            }
            BracketIdentity::Leibniz { x } => {
                let lhs = qbracket(&a, &b.mul(&c), x);
                lhs - qbracket(&a, &b, &one).mul(&c) - b.mul(&qbracket(&a, &c, x))
            }
            BracketIdentity::Jacobi { x } => {
                let s = sign(deg(&b)?, deg(&c)?);
                gb(&gb(&a, &b, x)?, &c, &one)?
                    - gb(&gb(&a, &c, &one)?, &b, x)?.scale(&s)
                    - gb(&a, &gb(&b, &c, &one)?, x)?
            }
            BracketIdentity::ParametricJacobi { x, y, z, r, s, t } => {
                if *x != z * s || *y != z * r || *t != &(z * s) * r {
                    return Err(Error::Precondition(
                        "parametric Jacobi identity requires x = zs, y = zr, t = zsr".into(),
                    ));
                }
                let sg = sign(deg(&a)?, deg(&b)?);
                gb(&a, &gb(&b, &c, x)?, y)?
                    - gb(&gb(&a, &b, z)?, &c, t)?
                    - gb(&b, &gb(&a, &c, r)?, s)?.scale(&(z * &sg))
            }
        })
    }
}

fn placeholders(parities: [bool; 3]) -> [Element; 3] {
    [0u8, 1, 2].map(|i| Element::gen(Generator::free(i, parities[i as usize])))
}

/// Normal form modulo `uv → (−1)^{|u||v|} vu` for two distinct letters.
fn reduce_commuting(x: &Element, u: Generator, v: Generator) -> (Element, usize) {
    let sign = if u.odd && v.odd { -Scalar::one() } else { Scalar::one() };
    let mut steps = 0;
    let mut cur = x.clone();
    loop {
        let mut next = Element::zero();
        let mut changed = false;
        for (w, c) in cur.terms() {
            let syms = w.symbols();
            match syms.windows(2).position(|p| p[0] == u && p[1] == v) {
                Some(k) => {
                    let mut s = syms.to_vec();
                    s.swap(k, k + 1);
                    next.add_term(Word::from_slice(&s), c * &sign);
                    changed = true;
                    steps += 1;
                }
                None => next.add_term(w.clone(), c.clone()),
            }
        }
        cur = next;
        if !changed {
            return (cur, steps);
        }
    }
}

/// Expands LHS − RHS, applies the hypothesis rule (if any) and reports
/// `ProvedZero` when the result vanishes.
pub fn check_bracket_identity(id: &BracketIdentity, parities: [bool; 3]) -> Result<Verification> {
    if !id.id().admits(parities) {
        return Err(Error::Precondition(format!(
            "{:?} hypothesis excludes parities {:?}",
            id.id(),
            parities
        )));
    }
    let diff = id.difference(parities)?;
    let (reduced, steps) = match id.hypothesis() {
        Some((i, j)) => {
            let g = |k: usize| Generator::free(k as u8, parities[k]);
            reduce_commuting(&diff, g(i), g(j))
        }
        None => (diff, 0),
    };
    if reduced.is_zero() {
        Ok(Verification::proved(steps))
    } else {
        Ok(Verification {
            status: Status::Inconclusive,
            evidence: crate::status::Evidence::None,
            steps,
            residual_terms: reduced.len(),
            partial: false,
        })
    }
}

/// Every parity triple admitted by the identity.
pub fn admitted_parities(id: IdentityId) -> Vec<[bool; 3]> {
    (0..8u8)
        .map(|m| [m & 4 != 0, m & 2 != 0, m & 1 != 0])
        .filter(|p| id.admits(*p))
        .collect()
}

/// The parameter grid used for exhaustive checks: values drawn from {q, q̄, 1}.
pub fn parameter_grid(id: IdentityId) -> Vec<BracketIdentity> {
    let vals = [Scalar::q(), Scalar::qbar(), Scalar::one()];
    let mut out = Vec::new();
    match id {
        IdentityId::ReassociateCommuting | IdentityId::ExchangeCommuting => {
            for p in &vals {
                for q in &vals {
                    let (p, q) = (p.clone(), q.clone());
                    out.push(if id == IdentityId::ReassociateCommuting {
                        BracketIdentity::ReassociateCommuting { p, q }
                    } else {
                        BracketIdentity::ExchangeCommuting { p, q }
                    });
                }
            }
        }
        IdentityId::SerreEvenMiddle | IdentityId::SerreEvenOuter | IdentityId::Leibniz | IdentityId::Jacobi => {
            for x in vals {
                out.push(match id {
                    IdentityId::SerreEvenMiddle => BracketIdentity::SerreEvenMiddle { x },
                    IdentityId::SerreEvenOuter => BracketIdentity::SerreEvenOuter { x },
                    IdentityId::Leibniz => BracketIdentity::Leibniz { x },
                    _ => BracketIdentity::Jacobi { x },
                });
            }
        }
        IdentityId::ParametricJacobi => {
            for z in &vals {
                for r in &vals {
                    for s in &vals {
                        out.push(BracketIdentity::parametric_jacobi(z.clone(), r.clone(), s.clone()));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle for the reassociation identity with all placeholders even: both sides
    /// expanded by hand into the six length-3 words.
    #[test]
    fn reassociation_matches_hand_expansion() {
        let p = Scalar::qbar();
        let q = Scalar::q();
        // ⟦⟦a,c⟧_q,b⟧_p = acb − q cab − p bac + pq bca
        // ⟦a,⟦c,b⟧_p⟧_q = acb − p abc − q cba + pq bca
        // difference = −q cab − p bac + p abc + q cba; with ab = ba:
        // bac → abc and cba → cab, so the difference reduces to 0.
        let id = BracketIdentity::ReassociateCommuting { p: p.clone(), q: q.clone() };
        let diff = id.difference([false; 3]).unwrap();
        let w = |s: &[u8]| Word::from_slice(&s.iter().map(|&i| Generator::free(i, false)).collect::<Vec<_>>());
        assert_eq!(diff.coeff(&w(&[2, 0, 1])), -q.clone());
        assert_eq!(diff.coeff(&w(&[1, 0, 2])), -p.clone());
        assert_eq!(diff.coeff(&w(&[0, 1, 2])), p);
        assert_eq!(diff.coeff(&w(&[2, 1, 0])), q);
        assert_eq!(diff.len(), 4);
        assert_eq!(check_bracket_identity(&id, [false; 3]).unwrap().status, Status::ProvedZero);
    }

    #[test]
    fn leibniz_even_is_identical_word_by_word() {
        let id = BracketIdentity::Leibniz { x: Scalar::q() };
        assert!(id.difference([false; 3]).unwrap().is_zero());
    }

    #[test]
    fn parametric_jacobi_special_case() {
        let id = BracketIdentity::ParametricJacobi {
            x: Scalar::one(),
            y: Scalar::one(),
            z: Scalar::q(),
            r: Scalar::qbar(),
            s: Scalar::qbar(),
            t: Scalar::qbar(),
        };
        assert_eq!(check_bracket_identity(&id, [false; 3]).unwrap().status, Status::ProvedZero);
    }

    #[test]
    fn parametric_jacobi_rejects_inconsistent_parameters() {
        let id = BracketIdentity::ParametricJacobi {
            x: Scalar::q(),
            y: Scalar::one(),
            z: Scalar::one(),
            r: Scalar::one(),
            s: Scalar::one(),
            t: Scalar::one(),
        };
        assert!(matches!(check_bracket_identity(&id, [false; 3]), Err(Error::Precondition(_))));
    }

    #[test]
    fn hypothesis_parities_enforced() {
        let id = BracketIdentity::SerreEvenMiddle { x: Scalar::q() };
        assert!(check_bracket_identity(&id, [false, true, false]).is_err());
        assert_eq!(admitted_parities(IdentityId::SerreEvenMiddle).len(), 4);
        assert_eq!(admitted_parities(IdentityId::ParametricJacobi).len(), 8);
    }

    #[test]
    fn every_identity_holds_on_the_full_grid() {
        for id in IdentityId::ALL {
            for inst in parameter_grid(id) {
                for par in admitted_parities(id) {
                    let v = check_bracket_identity(&inst, par).unwrap();
                    assert_eq!(v.status, Status::ProvedZero, "{inst:?} parities {par:?}");
                }
            }
        }
    }
}
